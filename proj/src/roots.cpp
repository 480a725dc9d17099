#include "hpisot/roots.hpp"

#include <algorithm>
#include <optional>

#include <boost/math/constants/constants.hpp>

#include "hpisot/error.hpp"

namespace hpisot {

namespace {

struct Eval {
    Complex value, derivative;
};

Eval horner(const std::vector<BigFloat>& c, const Complex& z) {
    Complex v, d;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        d = d * z + v;
        v = v * z + Complex(*it);
    }
    return {v, d};
}

BigFloat cauchy_bound(const std::vector<BigFloat>& c) {
    BigFloat m = 0;
    const BigFloat& lead = c.back();
    for (std::size_t i = 0; i + 1 < c.size(); ++i) m = std::max(m, BigFloat(abs(c[i] / lead)));
    return 1 + m;
}

std::vector<Complex> initial_guesses(const std::vector<BigFloat>& c) {
    const std::size_t n = c.size() - 1;
    const BigFloat r = cauchy_bound(c);
    const BigFloat two_pi = 2 * boost::math::constants::pi<BigFloat>();
    std::vector<Complex> z;
    for (std::size_t k = 0; k < n; ++k) {
        BigFloat theta = two_pi * BigFloat(k) / BigFloat(n) + BigFloat(0.7);
        z.emplace_back(r * cos(theta), r * sin(theta));
    }
    return z;
}

void aberth(const std::vector<BigFloat>& c, std::vector<Complex>& z, unsigned bits) {
    const std::size_t n = z.size();
    const BigFloat tol = ldexp(BigFloat(1), -static_cast<int>(bits) + 8);
    constexpr int kMaxIterations = 2000;
    for (int it = 0; it < kMaxIterations; ++it) {
        bool done = true;
        for (std::size_t k = 0; k < n; ++k) {
            Eval e = horner(c, z[k]);
            if (e.value.norm2() == 0) continue;
            if (e.derivative.norm2() == 0) {
                z[k] = z[k] + Complex(tol * 1024, tol * 512);
                done = false;
                continue;
            }
            Complex ratio = e.value / e.derivative;
            Complex sum;
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) {
                    Complex diff = z[k] - z[j];
                    if (diff.norm2() != 0) sum = sum + Complex(BigFloat(1), BigFloat(0)) / diff;
                }
            Complex denom = Complex(BigFloat(1), BigFloat(0)) - ratio * sum;
            Complex step = denom.norm2() == 0 ? ratio : ratio / denom;
            z[k] = z[k] - step;
            if (step.abs() > tol * (1 + z[k].abs())) done = false;
        }
        if (done) return;
    }
}

std::optional<std::vector<RootDisk>> certify(const std::vector<BigFloat>& c, std::vector<Complex> z,
                                             unsigned bits) {
    const std::size_t n = z.size();
    const BigFloat snap = ldexp(BigFloat(1), -static_cast<int>(bits / 2));
    for (auto& w : z)
        if (abs(w.im) < snap * (1 + abs(w.re))) w.im = 0;
    // Floating-point slack added to every Weierstrass radius.
    const BigFloat rel = ldexp(BigFloat(1), -static_cast<int>(bits / 4));
    const BigFloat absolute = ldexp(BigFloat(1), -static_cast<int>(bits / 2));
    std::vector<RootDisk> disks;
    for (std::size_t i = 0; i < n; ++i) {
        Complex denom(c.back(), BigFloat(0));
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) denom = denom * (z[i] - z[j]);
        if (denom.norm2() == 0) return std::nullopt;
        Complex w = horner(c, z[i]).value / denom;
        BigFloat r = BigFloat(n) * w.abs() * (1 + rel) + absolute * (1 + z[i].abs());
        disks.push_back({z[i], r, z[i].im == 0});
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if ((disks[i].center - disks[j].center).abs() <= disks[i].radius + disks[j].radius) return std::nullopt;
    return disks;
}

}  // namespace

RootIsolation isolate_roots(const IntPolynomial& p, unsigned start_bits, unsigned max_bits) {
    if (p.degree() < 1) return {{}, start_bits};
    std::vector<Complex> z;
    for (unsigned bits = start_bits; bits <= max_bits; bits *= 2) {
        PrecisionScope scope(bits);
        std::vector<BigFloat> c;
        for (const auto& v : p.coeffs()) c.push_back(to_big(v));
        if (z.empty()) {
            z = initial_guesses(c);
        } else {
            const unsigned d10 = PrecisionScope::digits10(bits);
            for (auto& w : z) w = Complex(BigFloat(w.re, d10), BigFloat(w.im, d10));
        }
        aberth(c, z, bits);
        if (auto disks = certify(c, z, bits)) {
            std::stable_sort(disks->begin(), disks->end(), [](const RootDisk& a, const RootDisk& b) {
                if (a.real != b.real) return a.real;
                if (a.center.re != b.center.re) return a.center.re < b.center.re;
                return a.center.im > b.center.im;
            });
            return {std::move(*disks), bits};
        }
    }
    throw PrecisionError("could not isolate the roots of " + p.to_string() + " within " +
                         std::to_string(max_bits) + " bits");
}

std::vector<std::size_t> conjugate_partners(const RootIsolation& iso) {
    const auto& d = iso.disks;
    std::vector<std::size_t> partner(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i].real) {
            partner[i] = i;
            continue;
        }
        Complex target = d[i].center.conj();
        std::size_t best = i;
        BigFloat best_dist = -1;
        for (std::size_t j = 0; j < d.size(); ++j) {
            if (j == i || d[j].real) continue;
            BigFloat dist = (d[j].center - target).abs();
            if (best_dist < 0 || dist < best_dist) {
                best = j;
                best_dist = dist;
            }
        }
        if (best == i || best_dist > d[best].radius + d[i].radius)
            throw InternalError("non-real root disk without a conjugate partner");
        partner[i] = best;
    }
    return partner;
}

}  // namespace hpisot
