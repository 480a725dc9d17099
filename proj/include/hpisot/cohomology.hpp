#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "hpisot/pisot.hpp"
#include "hpisot/substitution.hpp"

namespace hpisot {

/// Transition subcomplex G0 of the Barge-Diamond complex.  Edge v_ij joins
/// node out(i) = i to node in(j) = n + j; tile edges are implicit (one per letter).
struct BDComplex {
    std::size_t letters = 0;
    std::vector<Transition> edges;  ///< sorted; equals transitions(s)

    [[nodiscard]] std::size_t out_node(Letter i) const { return i; }
    [[nodiscard]] std::size_t in_node(Letter j) const { return letters + j; }
    [[nodiscard]] std::size_t index_of(const Transition& t) const;
};

/// v_ij -> v_kl with k = last letter of phi(i), l = first letter of phi(j).
struct EdgeMap {
    std::vector<std::size_t> image;  ///< indices into BDComplex::edges
};

struct ERData {
    std::vector<std::size_t> er_edges;  ///< edges on cycles of the edge map, ascending
    unsigned long fixing_power = 1;     ///< lcm of cycle lengths
    std::size_t vertices = 0;
    std::size_t components = 0;
    std::size_t independent_cycles = 0;  ///< E - V + C of the ER subgraph
};

struct CohomologyReport {
    std::size_t dim_h1 = 0;
    std::size_t eventual_rank = 0;
    std::size_t components = 0;
    std::size_t independent_cycles = 0;
    unsigned long fixing_power = 1;
    ERData er;
    Factorization eigenvalues;  ///< factored characteristic polynomial of A
    /// For A^fixing_power: (1) nonzero eigenvalues are 1 and the conjugates of
    /// lambda only, (2) eigenvalue 1 has multiplicity C - 1, (3) no cycles.
    std::array<bool, 3> three_conditions{};
    bool dim_equals_degree = false;
    /// all(three_conditions) == dim_equals_degree; computed independently.
    bool conditions_agree = false;
    bool homological_pisot = false;
};

BDComplex build_bd_complex(const Substitution& s);
EdgeMap edge_dynamics(const Substitution& s, const BDComplex& c);
ERData eventual_range(const BDComplex& c, const EdgeMap& m);

/// dim H^1 = rank(A^n) - (C - 1) + cycles, n = alphabet size.
CohomologyReport cech_h1_dimension(const Substitution& s, const PisotReport& pisot);
CohomologyReport cech_h1_dimension(const Substitution& s);

struct HomologicalPisot {
    bool flag = false;
    CohomologyReport cohomology;
    PisotReport pisot;
};
HomologicalPisot is_homological_pisot(const Substitution& s);

}  // namespace hpisot
