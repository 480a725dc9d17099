#include "hpisot/factor.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "hpisot/error.hpp"
#include "hpisot/roots.hpp"

namespace hpisot {

IntPolynomial Factorization::product() const {
    IntPolynomial p = IntPolynomial::constant(unit);
    for (const auto& f : factors)
        for (unsigned i = 0; i < f.multiplicity; ++i) p = p * f.factor;
    return p;
}

std::string Factorization::to_string() const {
    std::ostringstream os;
    bool first = true;
    if (unit != 1 || factors.empty()) {
        os << unit.get_str();
        first = false;
    }
    for (const auto& f : factors) {
        if (!first) os << " * ";
        first = false;
        os << '(' << f.factor.to_string() << ')';
        if (f.multiplicity > 1) os << '^' << f.multiplicity;
    }
    return os.str();
}

std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p) {
    if (p.degree() < 1) return {};
    // Yun's algorithm over Q.
    RatPolynomial f(p);
    RatPolynomial fp = f.derivative();
    RatPolynomial a = gcd(f, fp);
    RatPolynomial b = f.divmod(a).first;
    RatPolynomial c = fp.divmod(a).first;
    RatPolynomial d = c - b.derivative();
    std::vector<IntPolynomial> out;
    while (b.degree() > 0) {
        RatPolynomial ai = gcd(b, d);
        out.push_back(ai.to_primitive_int());
        b = b.divmod(ai).first;
        c = d.divmod(ai).first;
        d = c - b.derivative();
    }
    while (!out.empty() && out.back().degree() == 0) out.pop_back();
    return out;
}

namespace {

struct NeedPrecision {};

// Integer polynomial lc * prod_{i in T}(x - z_i) when the certified
// enclosure of every coefficient contains exactly one integer, else nullopt.
// Throws NeedPrecision when an enclosure is too wide to decide.
std::optional<IntPolynomial> round_candidate(const Integer& lc, const RootIsolation& iso,
                                             const std::vector<std::size_t>& subset) {
    PrecisionScope scope(iso.bits);
    std::vector<Complex> prod{Complex(BigFloat(1), BigFloat(0))};
    std::vector<BigFloat> hi{BigFloat(1)}, lo{BigFloat(1)};
    for (std::size_t idx : subset) {
        const auto& disk = iso.disks[idx];
        const Complex& c = disk.center;
        BigFloat mod = c.abs();
        BigFloat mod_hi = mod + disk.radius;
        std::vector<Complex> np(prod.size() + 1);
        std::vector<BigFloat> nhi(hi.size() + 1, BigFloat(0)), nlo(lo.size() + 1, BigFloat(0));
        for (std::size_t j = 0; j < prod.size(); ++j) {
            np[j + 1] = np[j + 1] + prod[j];
            np[j] = np[j] - c * prod[j];
            nhi[j + 1] += hi[j];
            nhi[j] += mod_hi * hi[j];
            nlo[j + 1] += lo[j];
            nlo[j] += mod * lo[j];
        }
        prod = std::move(np);
        hi = std::move(nhi);
        lo = std::move(nlo);
    }
    const BigFloat slack = ldexp(BigFloat(1), -static_cast<int>(iso.bits / 2));
    const BigFloat blc = abs(to_big(lc));
    std::vector<Integer> coeffs;
    for (std::size_t j = 0; j < prod.size(); ++j) {
        BigFloat err = blc * ((hi[j] - lo[j]) + slack * hi[j]) + slack;
        BigFloat value = to_big(lc) * prod[j].re;
        if (err >= BigFloat(0.25)) throw NeedPrecision{};
        BigFloat nearest = round(value);
        if (abs(value - nearest) > err) return std::nullopt;
        Integer z;
        mpfr_get_z(z.get_mpz_t(), nearest.backend().data(), MPFR_RNDN);
        coeffs.push_back(z);
    }
    return IntPolynomial(std::move(coeffs));
}

// True when the roots of h are exactly the roots of g in `subset`.
bool roots_match(const IntPolynomial& h, const RootIsolation& g_iso, const std::vector<std::size_t>& subset) {
    RootIsolation h_iso = isolate_roots(h, g_iso.bits, std::max(4096U, g_iso.bits));
    PrecisionScope scope(std::max(g_iso.bits, h_iso.bits));
    std::vector<char> used(g_iso.disks.size(), 0);
    for (const auto& hd : h_iso.disks) {
        std::optional<std::size_t> hit;
        for (std::size_t j = 0; j < g_iso.disks.size(); ++j) {
            const auto& gd = g_iso.disks[j];
            if ((hd.center - gd.center).abs() <= hd.radius + gd.radius) {
                if (hit) throw NeedPrecision{};
                hit = j;
            }
        }
        if (!hit) return false;
        if (std::find(subset.begin(), subset.end(), *hit) == subset.end() || used[*hit]) return false;
        used[*hit] = 1;
    }
    return true;
}

bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
    const std::size_t k = comb.size();
    for (std::size_t i = k; i-- > 0;) {
        if (comb[i] < n - k + i) {
            ++comb[i];
            for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Irreducible factors of a primitive square-free polynomial of positive degree.
std::vector<IntPolynomial> factor_squarefree(IntPolynomial g) {
    std::vector<IntPolynomial> out;
    unsigned bits = 128;
    while (g.degree() > 0) {
        if (g.degree() == 1) {
            out.push_back(g.primitive_part());
            break;
        }
        try {
            RootIsolation iso = isolate_roots(g, bits);
            auto partner = conjugate_partners(iso);
            // Units are real roots or conjugate pairs.
            std::vector<std::vector<std::size_t>> units;
            for (std::size_t i = 0; i < partner.size(); ++i)
                if (partner[i] >= i) units.push_back(partner[i] == i ? std::vector<std::size_t>{i}
                                                                      : std::vector<std::size_t>{i, partner[i]});
            std::optional<IntPolynomial> found;
            const std::size_t others = units.size() - 1;
            for (std::size_t extra = 0; extra <= others && !found; ++extra) {
                std::vector<std::size_t> comb(extra);
                for (std::size_t i = 0; i < extra; ++i) comb[i] = i;
                do {
                    std::vector<std::size_t> subset = units[0];
                    for (std::size_t i : comb) subset.insert(subset.end(), units[i + 1].begin(), units[i + 1].end());
                    if (subset.size() == static_cast<std::size_t>(g.degree())) {
                        found = g;
                        break;
                    }
                    auto cand = round_candidate(g.leading(), iso, subset);
                    if (!cand) continue;
                    IntPolynomial h = cand->primitive_part();
                    if (h.degree() != static_cast<int>(subset.size())) continue;
                    if (!g.divide_exact(h)) continue;
                    if (!roots_match(h, iso, subset)) continue;
                    found = h;
                    break;
                } while (extra > 0 && next_combination(comb, others));
            }
            if (!found) throw InternalError("no factor found for " + g.to_string());
            out.push_back(*found);
            g = *g.divide_exact(*found);
        } catch (const NeedPrecision&) {
            if (bits >= 4096) throw PrecisionError("factor rounding of " + g.to_string() + " needs more than 4096 bits");
            bits *= 2;
        }
    }
    return out;
}

}  // namespace

Factorization factor_over_integers(const IntPolynomial& p) {
    if (p.is_zero()) throw PreconditionError("cannot factor the zero polynomial");
    Factorization result;
    result.unit = p.content();
    if (p.leading() < 0) result.unit = -result.unit;
    IntPolynomial q = p.primitive_part();
    unsigned zero_mult = 0;
    while (q.degree() > 0 && q.coeff(0) == 0) {
        q = *q.divide_exact(IntPolynomial::x());
        ++zero_mult;
    }
    if (zero_mult) result.factors.push_back({IntPolynomial::x(), zero_mult});
    auto parts = squarefree_decomposition(q);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].degree() < 1) continue;
        for (auto& f : factor_squarefree(parts[i]))
            result.factors.push_back({std::move(f), static_cast<unsigned>(i + 1)});
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const FactorPower& a, const FactorPower& b) { return a.factor < b.factor; });
    if (result.product() != p) throw InternalError("factorization does not reproduce " + p.to_string());
    return result;
}

}  // namespace hpisot
