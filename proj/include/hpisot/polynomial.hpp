#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hpisot/int_matrix.hpp"

namespace hpisot {

/// Integer polynomial, coefficients lowest degree first, no trailing zeros.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial x() { return IntPolynomial{0, 1}; }
    static IntPolynomial constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }
    /// x^n - 1
    static IntPolynomial x_pow_minus_one(unsigned n);

    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] const std::vector<Integer>& coeffs() const { return c_; }
    [[nodiscard]] Integer coeff(int i) const;
    [[nodiscard]] const Integer& leading() const { return c_.back(); }
    [[nodiscard]] bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    [[nodiscard]] IntPolynomial derivative() const;
    [[nodiscard]] Integer content() const;
    /// Divided by its content, with positive leading coefficient.
    [[nodiscard]] IntPolynomial primitive_part() const;
    /// x^d p(1/x)
    [[nodiscard]] IntPolynomial reversed() const;
    /// p(-x)
    [[nodiscard]] IntPolynomial negate_variable() const;

    [[nodiscard]] Integer eval(const Integer& x) const;
    [[nodiscard]] Rational eval(const Rational& x) const;

    /// Quotient when `d` divides this polynomial in Z[x].
    [[nodiscard]] std::optional<IntPolynomial> divide_exact(const IntPolynomial& d) const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const Integer& s, const IntPolynomial& p);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }
    friend bool operator<(const IntPolynomial& a, const IntPolynomial& b);

    [[nodiscard]] std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Integer> c_;
};

/// Rational polynomial; used for gcds, Sturm sequences and field inverses.
class RatPolynomial {
public:
    RatPolynomial() = default;
    explicit RatPolynomial(std::vector<Rational> coeffs);
    explicit RatPolynomial(const IntPolynomial& p);

    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return c_; }
    [[nodiscard]] Rational coeff(int i) const;
    [[nodiscard]] const Rational& leading() const { return c_.back(); }
    [[nodiscard]] RatPolynomial monic() const;
    [[nodiscard]] RatPolynomial derivative() const;
    [[nodiscard]] Rational eval(const Rational& x) const;
    /// Clears denominators and content.
    [[nodiscard]] IntPolynomial to_primitive_int() const;

    /// (quotient, remainder)
    [[nodiscard]] std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& d) const;

    friend RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b);
    friend RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b);
    friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);
    friend RatPolynomial operator*(const Rational& s, const RatPolynomial& p);
    friend bool operator==(const RatPolynomial& a, const RatPolynomial& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<Rational> c_;
};

/// Monic gcd over Q.
RatPolynomial gcd(RatPolynomial a, RatPolynomial b);

/// Returns (g, s, t) with s a + t b = g, g monic.
struct ExtendedGcd {
    RatPolynomial g, s, t;
};
ExtendedGcd extended_gcd(const RatPolynomial& a, const RatPolynomial& b);

/// det(xI - m) by the Faddeev-LeVerrier recurrence; exact in Z.
IntPolynomial char_poly(const IntMatrix& m);

/// x^n mod f for monic f.
IntPolynomial power_of_x_mod(unsigned long n, const IntPolynomial& f);

}  // namespace hpisot
