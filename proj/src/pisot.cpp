#include "hpisot/pisot.hpp"

#include <algorithm>

#include "hpisot/error.hpp"
#include "hpisot/roots.hpp"

namespace hpisot {

namespace {

// Pellet at r = 1: |b_m| > sum_{j != m} |b_j| gives exactly m roots in |z| < 1.
std::optional<int> pellet_unit(const std::vector<Integer>& b) {
    Integer total = 0;
    for (const auto& v : b) total += abs(v);
    for (std::size_t m = 0; m < b.size(); ++m)
        if (2 * abs(b[m]) > total) return static_cast<int>(m);
    return std::nullopt;
}

// Polynomial whose roots are the squares of the roots of p.
std::vector<Integer> graeffe_step(const std::vector<Integer>& c) {
    std::vector<Integer> e, o;
    for (std::size_t i = 0; i < c.size(); ++i) (i % 2 ? o : e).push_back(c[i]);
    const std::size_t n = c.size();
    std::vector<Integer> out(n, Integer(0));
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = 0; j < e.size(); ++j)
            if (i + j < n) out[i + j] += e[i] * e[j];
    for (std::size_t i = 0; i < o.size(); ++i)
        for (std::size_t j = 0; j < o.size(); ++j)
            if (i + j + 1 < n) out[i + j + 1] -= o[i] * o[j];
    return out;
}

std::size_t max_bits(const std::vector<Integer>& c) {
    std::size_t m = 0;
    for (const auto& v : c) m = std::max(m, mpz_sizeinbase(v.get_mpz_t(), 2));
    return m;
}

// p(radius * x) scaled to integer coefficients.
IntPolynomial scale_argument(const IntPolynomial& p, const Rational& radius) {
    const Integer& u = radius.get_num();
    const Integer& v = radius.get_den();
    const int d = p.degree();
    std::vector<Integer> c(static_cast<std::size_t>(d + 1));
    Integer upow = 1;
    for (int i = 0; i <= d; ++i) {
        Integer vpow;
        mpz_pow_ui(vpow.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(d - i));
        c[static_cast<std::size_t>(i)] = p.coeff(i) * upow * vpow;
        upow *= u;
    }
    return IntPolynomial(std::move(c));
}

// Root-disk count of roots with modulus < radius, or nullopt if a disk
// straddles the circle at every precision tried.
std::optional<int> disk_count_below(const IntPolynomial& p, const Rational& radius) {
    int count = 0;
    for (const auto& fp : factor_over_integers(p).factors) {
        bool settled = false;
        for (unsigned bits = 128; bits <= 4096 && !settled; bits *= 2) {
            RootIsolation iso = isolate_roots(fp.factor, bits);
            PrecisionScope scope(iso.bits);
            const BigFloat r = to_big(radius);
            int inside = 0;
            bool ambiguous = false;
            for (const auto& d : iso.disks) {
                BigFloat m = d.center.abs();
                if (m + d.radius < r)
                    ++inside;
                else if (m - d.radius <= r)
                    ambiguous = true;
            }
            if (!ambiguous) {
                count += inside * static_cast<int>(fp.multiplicity);
                settled = true;
            }
        }
        if (!settled) return std::nullopt;
    }
    return count;
}

// Smallest grid point k / 10^m >= x with m >= 6 and the result < 1 when
// x < 1 (finer grids are tried if the 1e-6 grid lands on 1).
Rational round_up_to_grid(const BigFloat& x) {
    for (unsigned m = 6; m <= 60; m += 3) {
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, m);
        BigFloat scaled = ceil(x * to_big(scale));
        Integer k;
        mpfr_get_z(k.get_mpz_t(), scaled.backend().data(), MPFR_RNDU);
        Rational q(k, scale);
        q.canonicalize();
        if (q < 1 || x >= 1) return q;
    }
    return Rational(1);
}

}  // namespace

std::optional<int> graeffe_unit_disk_count(const IntPolynomial& p, int max_steps, std::size_t max_coeff_bits) {
    if (p.degree() < 1) return 0;
    std::vector<Integer> c = p.coeffs();
    for (int step = 0;; ++step) {
        if (auto m = pellet_unit(c)) return m;
        if (step >= max_steps || max_bits(c) > max_coeff_bits) return std::nullopt;
        c = graeffe_step(c);
    }
}

int count_roots_below(const IntPolynomial& p, const Rational& radius) {
    if (radius <= 0) throw std::invalid_argument("radius must be positive");
    if (auto m = graeffe_unit_disk_count(scale_argument(p, radius))) return *m;
    if (auto m = disk_count_below(p, radius)) return *m;
    throw PrecisionError("could not count the roots of " + p.to_string() + " below modulus " + radius.get_str());
}

PisotCheck pisot_check(const IntPolynomial& p) {
    if (!p.is_monic()) throw PreconditionError("pisot_check needs a monic polynomial");
    const int d = p.degree();
    PisotCheck out;
    if (d == 1) {
        out.is_pisot = -p.coeff(0) > 1;
        if (out.is_pisot) out.modulus_bound = Rational(0);
        out.method = "degree-1";
        return out;
    }
    IntPolynomial rev = p.reversed();
    if (d >= 3 && (rev == p || rev == Integer(-1) * p)) {
        // Roots come in pairs z, 1/z; with lambda > 1 some conjugate has |z| >= 1.
        out.method = "reciprocal";
        return out;
    }
    if (auto m = graeffe_unit_disk_count(p)) {
        out.is_pisot = *m == d - 1;
        out.method = "graeffe-pellet";
    } else if (auto n = disk_count_below(p, Rational(1))) {
        out.is_pisot = *n == d - 1;
        out.method = "root-disks";
    } else {
        throw PrecisionError("Pisot property of " + p.to_string() + " undecided");
    }
    if (!out.is_pisot) return out;
    RootIsolation iso = isolate_roots(p);
    PrecisionScope scope(iso.bits);
    // lambda is the real root with the largest center (real disks come first, ascending).
    std::size_t lambda_idx = 0;
    for (std::size_t i = 0; i < iso.disks.size(); ++i)
        if (iso.disks[i].real) lambda_idx = i;
    BigFloat bound = 0;
    for (std::size_t i = 0; i < iso.disks.size(); ++i) {
        if (i == lambda_idx) continue;
        bound = std::max(bound, BigFloat(iso.disks[i].center.abs() + iso.disks[i].radius));
    }
    out.modulus_bound = round_up_to_grid(bound);
    if (*out.modulus_bound >= 1) throw InternalError("conjugate bound of a Pisot polynomial is not below 1");
    return out;
}

PisotReport pisot_report(const IntMatrix& a) {
    PisotReport r;
    r.char_poly = char_poly(a);
    r.char_poly_factors = factor_over_integers(r.char_poly);
    IntPolynomial radical{1};
    for (const auto& f : r.char_poly_factors.factors) radical = radical * f.factor;
    // lambda >= 1 for a primitive nonnegative integer matrix; lambda = 1 only
    // for the 1x1 matrix [1].
    std::optional<IntPolynomial> owner;
    for (unsigned bits = 64; bits <= 4096 && !owner; bits *= 2) {
        auto [lo, hi] = largest_real_root_interval(radical, Rational(1, 2), bits);
        int hits = 0;
        for (const auto& f : r.char_poly_factors.factors) {
            int slo = sgn(f.factor.eval(lo)), shi = sgn(f.factor.eval(hi));
            if (shi == 0 || slo * shi < 0) {
                ++hits;
                owner = f.factor;
            }
        }
        if (hits != 1) owner.reset();
        if (owner) {
            r.min_poly = *owner;
            if (!r.min_poly.is_monic()) throw InternalError("dilatation is not an algebraic integer");
            if (r.min_poly == IntPolynomial{-1, 1})
                throw PreconditionError("dilatation is 1; the substitution is not expanding");
            r.field = NumberField::create(r.min_poly, lo, hi);
        }
    }
    if (!owner) throw PrecisionError("could not isolate the dilatation within one factor at 4096 bits");
    r.degree = r.min_poly.degree();
    r.dilatation = FieldElement::lambda(r.field);
    r.a0 = r.min_poly.coeff(0);
    r.norm = r.degree % 2 ? Integer(-r.a0) : r.a0;
    PisotCheck pc = pisot_check(r.min_poly);
    r.is_pisot = pc.is_pisot;
    r.conjugate_modulus_bound = pc.modulus_bound;
    r.pisot_method = pc.method;
    return r;
}

PisotReport minimal_polynomial_of_dilatation(const Substitution& s) {
    if (!is_primitive(s).primitive) throw PreconditionError("substitution is not primitive");
    return pisot_report(abelianization(s));
}

}  // namespace hpisot
