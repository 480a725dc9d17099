#pragma once

#include <optional>
#include <string>

#include "hpisot/factor.hpp"
#include "hpisot/number_field.hpp"
#include "hpisot/substitution.hpp"

namespace hpisot {

/// Number of roots in the open unit disk, certified by Graeffe root squaring
/// followed by Pellet's test at radius 1.  nullopt when undecided within
/// `max_steps` squarings or `max_coeff_bits` coefficient size.
std::optional<int> graeffe_unit_disk_count(const IntPolynomial& p, int max_steps = 32,
                                           std::size_t max_coeff_bits = 1U << 18);

/// Number of roots (with multiplicity) of modulus < radius.  Graeffe first,
/// certified root disks as fallback; PrecisionError if neither decides.
int count_roots_below(const IntPolynomial& p, const Rational& radius);

struct PisotCheck {
    bool is_pisot = false;
    /// Rational upper bound on the conjugate moduli, present when Pisot.
    std::optional<Rational> modulus_bound;
    std::string method;
};

/// p monic irreducible with a real root > 1.
PisotCheck pisot_check(const IntPolynomial& p);

struct PisotReport {
    int degree = 0;
    IntPolynomial min_poly;
    FieldPtr field;
    FieldElement dilatation;
    Integer a0;
    Integer norm;  ///< (-1)^d a0
    bool is_pisot = false;
    std::optional<Rational> conjugate_modulus_bound;
    std::string pisot_method;
    IntPolynomial char_poly;
    Factorization char_poly_factors;
};

/// Perron-Frobenius data of a nonnegative primitive integer matrix.
PisotReport pisot_report(const IntMatrix& a);
/// Same for the abelianization; PreconditionError unless primitive.
PisotReport minimal_polynomial_of_dilatation(const Substitution& s);

}  // namespace hpisot
