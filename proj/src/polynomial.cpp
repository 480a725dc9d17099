#include "hpisot/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hpisot/error.hpp"

namespace hpisot {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

IntPolynomial IntPolynomial::x_pow_minus_one(unsigned n) {
    std::vector<Integer> c(n + 1, Integer(0));
    c[0] = -1;
    c[n] += 1;
    return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer IntPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
}

IntPolynomial IntPolynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Integer> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(d));
}

Integer IntPolynomial::content() const {
    Integer g = 0;
    for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (c_.empty()) return {};
    Integer g = content();
    if (leading() < 0) g = -g;
    std::vector<Integer> c = c_;
    for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::reversed() const {
    std::vector<Integer> c(c_.rbegin(), c_.rend());
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::negate_variable() const {
    std::vector<Integer> c = c_;
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return IntPolynomial(std::move(c));
}

Integer IntPolynomial::eval(const Integer& x) const {
    Integer r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Rational IntPolynomial::eval(const Rational& x) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + Rational(*it);
    return r;
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(const IntPolynomial& d) const {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (is_zero()) return IntPolynomial{};
    if (degree() < d.degree()) return std::nullopt;
    std::vector<Integer> r = c_;
    std::vector<Integer> q(static_cast<std::size_t>(degree() - d.degree() + 1), Integer(0));
    const Integer& lead = d.leading();
    for (int i = degree() - d.degree(); i >= 0; --i) {
        const Integer& top = r[static_cast<std::size_t>(i + d.degree())];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
        Integer f;
        mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        q[static_cast<std::size_t>(i)] = f;
        for (int j = 0; j <= d.degree(); ++j) r[static_cast<std::size_t>(i + j)] -= f * d.c_[static_cast<std::size_t>(j)];
    }
    for (const auto& v : r)
        if (v != 0) return std::nullopt;
    return IntPolynomial(std::move(q));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()), Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()), Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> c(a.c_.size() + b.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const Integer& s, const IntPolynomial& p) {
    std::vector<Integer> c = p.c_;
    for (auto& v : c) v *= s;
    return IntPolynomial(std::move(c));
}

bool operator<(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        const auto& x = a.c_[static_cast<std::size_t>(i)];
        const auto& y = b.c_[static_cast<std::size_t>(i)];
        if (x != y) return x < y;
    }
    return false;
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Integer v = c_[static_cast<std::size_t>(i)];
        if (v == 0) continue;
        if (first) {
            if (v < 0) os << "-";
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        Integer mag = abs(v);
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i > 0) {
            os << var;
            if (i > 1) os << '^' << i;
        }
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------

RatPolynomial::RatPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPolynomial::RatPolynomial(const IntPolynomial& p) {
    for (const auto& v : p.coeffs()) c_.emplace_back(v);
    trim();
}

void RatPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RatPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
}

RatPolynomial RatPolynomial::monic() const {
    if (c_.empty()) return {};
    Rational inv = 1 / leading();
    return inv * *this;
}

RatPolynomial RatPolynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return RatPolynomial(std::move(d));
}

Rational RatPolynomial::eval(const Rational& x) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

IntPolynomial RatPolynomial::to_primitive_int() const {
    Integer l = 1;
    for (const auto& v : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Integer> c;
    c.reserve(c_.size());
    for (const auto& v : c_) {
        Rational s = v * Rational(l);
        c.push_back(s.get_num());
    }
    return IntPolynomial(std::move(c)).primitive_part();
}

std::pair<RatPolynomial, RatPolynomial> RatPolynomial::divmod(const RatPolynomial& d) const {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (degree() < d.degree()) return {RatPolynomial{}, *this};
    std::vector<Rational> r = c_;
    std::vector<Rational> q(static_cast<std::size_t>(degree() - d.degree() + 1));
    const Rational inv = 1 / d.leading();
    for (int i = degree() - d.degree(); i >= 0; --i) {
        Rational f = r[static_cast<std::size_t>(i + d.degree())] * inv;
        q[static_cast<std::size_t>(i)] = f;
        if (f == 0) continue;
        for (int j = 0; j <= d.degree(); ++j)
            r[static_cast<std::size_t>(i + j)] -= f * d.c_[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(std::max(d.degree(), 0)));
    return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return RatPolynomial(std::move(c));
}

RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return RatPolynomial(std::move(c));
}

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return RatPolynomial(std::move(c));
}

RatPolynomial operator*(const Rational& s, const RatPolynomial& p) {
    std::vector<Rational> c = p.c_;
    for (auto& v : c) v *= s;
    return RatPolynomial(std::move(c));
}

RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ExtendedGcd extended_gcd(const RatPolynomial& a, const RatPolynomial& b) {
    RatPolynomial r0 = a, r1 = b;
    RatPolynomial s0(std::vector<Rational>{1}), s1;
    RatPolynomial t0, t1(std::vector<Rational>{1});
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        RatPolynomial s2 = s0 - q * s1;
        RatPolynomial t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rational inv = 1 / r0.leading();
    return {inv * r0, inv * s0, inv * t0};
}

IntPolynomial char_poly(const IntMatrix& m) {
    if (!m.square()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
    const std::size_t n = m.rows();
    std::vector<Integer> c(n + 1, Integer(0));
    c[n] = 1;
    // M_k = A M_{k-1} + c_{n-k+1} I ;  c_{n-k} = -tr(A M_k) / k
    IntMatrix mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        IntMatrix next = m * mk;
        for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
        mk = std::move(next);
        Integer tr = (m * mk).trace();
        if (!mpz_divisible_ui_p(tr.get_mpz_t(), static_cast<unsigned long>(k)))
            throw InternalError("Faddeev-LeVerrier trace not divisible");
        Integer q;
        mpz_divexact_ui(q.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
        c[n - k] = -q;
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial power_of_x_mod(unsigned long n, const IntPolynomial& f) {
    if (!f.is_monic()) throw std::invalid_argument("power_of_x_mod needs a monic modulus");
    auto reduce = [&](IntPolynomial p) {
        std::vector<Integer> c = p.coeffs();
        const int d = f.degree();
        for (int i = static_cast<int>(c.size()) - 1; i >= d; --i) {
            Integer t = c[static_cast<std::size_t>(i)];
            if (t == 0) continue;
            for (int j = 0; j <= d; ++j) c[static_cast<std::size_t>(i - d + j)] -= t * f.coeffs()[static_cast<std::size_t>(j)];
        }
        if (c.size() > static_cast<std::size_t>(d)) c.resize(static_cast<std::size_t>(d));
        return IntPolynomial(std::move(c));
    };
    IntPolynomial result = reduce(IntPolynomial{1});
    IntPolynomial base = reduce(IntPolynomial::x());
    while (n) {
        if (n & 1UL) result = reduce(result * base);
        n >>= 1;
        if (n) base = reduce(base * base);
    }
    return result;
}

}  // namespace hpisot
