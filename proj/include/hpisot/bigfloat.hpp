#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include "hpisot/int_matrix.hpp"

namespace hpisot {

using BigFloat = boost::multiprecision::mpfr_float;

/// Sets the working precision (in bits) of newly created BigFloats for the
/// lifetime of the guard.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned bits) : saved_(BigFloat::default_precision()) {
        BigFloat::default_precision(digits10(bits));
    }
    ~PrecisionScope() { BigFloat::default_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

    static unsigned digits10(unsigned bits) { return bits * 30103U / 100000U + 2; }

private:
    unsigned saved_;
};

inline BigFloat to_big(const Integer& z) { return BigFloat(z.get_mpz_t()); }
inline BigFloat to_big(const Rational& q) { return BigFloat(q.get_mpq_t()); }

struct Complex {
    BigFloat re, im;

    Complex() : re(0), im(0) {}
    Complex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(const BigFloat& r) : re(r), im(0) {}

    [[nodiscard]] BigFloat norm2() const { return re * re + im * im; }
    [[nodiscard]] BigFloat abs() const { return sqrt(norm2()); }
    [[nodiscard]] Complex conj() const { return {re, -im}; }

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const BigFloat& s, const Complex& a) { return {s * a.re, s * a.im}; }
    friend Complex operator/(const Complex& a, const Complex& b) {
        BigFloat n = b.norm2();
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
};

}  // namespace hpisot
