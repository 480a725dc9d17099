#include "hpisot/cohomology.hpp"

#include <algorithm>
#include <numeric>

#include "hpisot/error.hpp"

namespace hpisot {

std::size_t BDComplex::index_of(const Transition& t) const {
    auto it = std::lower_bound(edges.begin(), edges.end(), t);
    if (it == edges.end() || *it != t) throw InternalError("transition is not an edge of the complex");
    return static_cast<std::size_t>(it - edges.begin());
}

BDComplex build_bd_complex(const Substitution& s) { return {s.size(), transitions(s)}; }

EdgeMap edge_dynamics(const Substitution& s, const BDComplex& c) {
    EdgeMap m;
    for (const auto& [i, j] : c.edges) m.image.push_back(c.index_of({s.rule(i).back(), s.rule(j).front()}));
    return m;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace

ERData eventual_range(const BDComplex& c, const EdgeMap& m) {
    const std::size_t e = m.image.size();
    ERData er;
    for (std::size_t x = 0; x < e; ++x) {
        std::size_t y = m.image[x];
        for (std::size_t t = 1; t <= e; ++t, y = m.image[y]) {
            if (y == x) {
                er.er_edges.push_back(x);
                er.fixing_power = std::lcm(er.fixing_power, static_cast<unsigned long>(t));
                break;
            }
        }
    }
    std::vector<char> used(2 * c.letters, 0);
    UnionFind uf(2 * c.letters);
    std::size_t merges = 0;
    for (std::size_t x : er.er_edges) {
        auto [i, j] = c.edges[x];
        used[c.out_node(i)] = used[c.in_node(j)] = 1;
        if (uf.unite(c.out_node(i), c.in_node(j))) ++merges;
    }
    er.vertices = static_cast<std::size_t>(std::count(used.begin(), used.end(), 1));
    er.components = er.vertices - merges;
    er.independent_cycles = er.er_edges.size() - merges;  // E - V + C
    return er;
}

CohomologyReport cech_h1_dimension(const Substitution& s, const PisotReport& pisot) {
    BDComplex c = build_bd_complex(s);
    EdgeMap m = edge_dynamics(s, c);
    CohomologyReport r;
    r.er = eventual_range(c, m);
    r.components = r.er.components;
    r.independent_cycles = r.er.independent_cycles;
    r.fixing_power = r.er.fixing_power;

    const IntMatrix a = abelianization(s);
    const std::size_t n = s.size();
    r.eventual_rank = a.pow(n).rank();
    if (a.pow(n + 1).rank() != r.eventual_rank) throw InternalError("eventual rank did not stabilize by power n");
    r.dim_h1 = r.eventual_rank + r.independent_cycles - (r.components - 1);

    r.eigenvalues = pisot.char_poly_factors;
    const IntPolynomial one{1};
    bool only_expected = true;
    std::size_t unit_multiplicity = 0;
    for (const auto& f : r.eigenvalues.factors) {
        if (f.factor == IntPolynomial::x()) continue;
        if (f.factor == pisot.min_poly && f.multiplicity == 1) continue;
        // Roots are roots of unity of order dividing k iff x^k = 1 mod f.
        if (f.factor.is_monic() && power_of_x_mod(r.fixing_power, f.factor) == one) {
            unit_multiplicity += static_cast<std::size_t>(f.factor.degree()) * f.multiplicity;
            continue;
        }
        only_expected = false;
    }
    r.three_conditions = {only_expected, unit_multiplicity == r.components - 1, r.independent_cycles == 0};
    r.dim_equals_degree = r.dim_h1 == static_cast<std::size_t>(pisot.degree);
    const bool all3 = r.three_conditions[0] && r.three_conditions[1] && r.three_conditions[2];
    r.conditions_agree = all3 == r.dim_equals_degree;
    r.homological_pisot = pisot.is_pisot && r.dim_equals_degree;
    return r;
}

CohomologyReport cech_h1_dimension(const Substitution& s) {
    return cech_h1_dimension(s, minimal_polynomial_of_dilatation(s));
}

HomologicalPisot is_homological_pisot(const Substitution& s) {
    HomologicalPisot h;
    h.pisot = minimal_polynomial_of_dilatation(s);
    h.cohomology = cech_h1_dimension(s, h.pisot);
    h.flag = h.cohomology.homological_pisot;
    return h;
}

}  // namespace hpisot
