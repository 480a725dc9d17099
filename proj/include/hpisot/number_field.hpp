#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "hpisot/polynomial.hpp"

namespace hpisot {

/// Sturm sequence of a square-free polynomial over Q.
class SturmSequence {
public:
    explicit SturmSequence(const IntPolynomial& p);
    [[nodiscard]] int variations(const Rational& x) const;
    /// Number of distinct real roots in (a, b].
    [[nodiscard]] int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

private:
    std::vector<RatPolynomial> seq_;
};

/// 1 + max |a_i / a_n|; every complex root has modulus below it.
Rational cauchy_root_bound(const IntPolynomial& p);

/// Interval (lo, hi] of width <= 2^-bits holding the largest real root of
/// the square-free polynomial p, searched above `floor`.  Throws
/// PreconditionError when p has no root above floor.
std::pair<Rational, Rational> largest_real_root_interval(const IntPolynomial& p, const Rational& floor, unsigned bits);

/// Q(lambda) for a real root lambda > 0 of a monic irreducible polynomial,
/// pinned down by a rational isolating interval (lo, hi] with lo >= 0.
class NumberField {
public:
    static std::shared_ptr<const NumberField> create(IntPolynomial min_poly, Rational lo, Rational hi);

    [[nodiscard]] const IntPolynomial& min_poly() const { return p_; }
    [[nodiscard]] int degree() const { return p_.degree(); }
    /// Isolating interval of width <= 2^-bits (a point when d = 1).
    [[nodiscard]] std::pair<Rational, Rational> interval(unsigned bits) const;
    [[nodiscard]] double approx() const;

private:
    NumberField(IntPolynomial p, Rational lo, Rational hi);

    IntPolynomial p_;
    mutable std::mutex mutex_;
    mutable Rational lo_, hi_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of Q(lambda) in the power basis 1, lambda, ..., lambda^{d-1}.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr field, const Rational& value);
    FieldElement(FieldPtr field, std::vector<Rational> coords);
    static FieldElement lambda(const FieldPtr& field);
    /// Reduces an arbitrary polynomial in lambda.
    static FieldElement from_polynomial(const FieldPtr& field, const RatPolynomial& poly);

    [[nodiscard]] const FieldPtr& field() const { return field_; }
    [[nodiscard]] const std::vector<Rational>& coords() const { return c_; }
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_rational() const;
    /// Coordinate 0; meaningful when is_rational().
    [[nodiscard]] const Rational& rational_value() const { return c_.front(); }
    [[nodiscard]] RatPolynomial as_polynomial() const { return RatPolynomial(c_); }

    [[nodiscard]] FieldElement inverse() const;
    /// -1, 0 or +1 in the real embedding lambda.
    [[nodiscard]] int sign() const;
    /// Rational enclosure of the real value, width shrinking with `bits`.
    [[nodiscard]] std::pair<Rational, Rational> enclose(unsigned bits) const;
    [[nodiscard]] double to_double() const;
    [[nodiscard]] std::string to_string(const std::string& var = "L") const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const Rational& s, const FieldElement& a);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
    FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
    FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator<(const FieldElement& a, const FieldElement& b) { return (b - a).sign() > 0; }

private:
    void check_same(const FieldElement& b) const;
    FieldPtr field_;
    std::vector<Rational> c_;
};

inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_zero(const FieldElement& x) { return x.is_zero(); }

/// p'(lambda).
FieldElement p_prime_at_lambda(const FieldPtr& field);

/// True iff every prime factor of the reduced denominator of q divides a0.
bool in_Z_one_over_a0(const Rational& q, const Integer& a0);

}  // namespace hpisot
