#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hpisot/polynomial.hpp"

namespace hpisot {

struct FactorPower {
    IntPolynomial factor;  ///< primitive, positive leading coefficient, irreducible over Q
    unsigned multiplicity = 1;
};

struct Factorization {
    Integer unit = 1;  ///< signed content
    std::vector<FactorPower> factors;  ///< sorted by degree, then coefficients

    [[nodiscard]] IntPolynomial product() const;
    [[nodiscard]] std::string to_string() const;
};

/// Square-free decomposition of a primitive polynomial: p = prod g_i^i with
/// g_i square-free, pairwise coprime.  Entry i-1 holds g_i (possibly 1).
std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p);

/// Complete factorization into irreducibles over Z.  Candidate factors come
/// from certified complex roots (conjugation-closed subsets, rounded with a
/// certified error bound) and are confirmed by exact division.
Factorization factor_over_integers(const IntPolynomial& p);

}  // namespace hpisot
