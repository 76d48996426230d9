#pragma once

#include <cstdint>
#include <vector>

#include "lsplus/graph.hpp"
#include "lsplus/numerics.hpp"

namespace lsplus {

// a^T x <= beta over the vertex set of a graph, integer data.
struct Inequality {
    std::vector<Int> a;
    Int beta;

    friend bool operator==(const Inequality& x, const Inequality& y) = default;
};

// Facet of STAB(G) in coprime integer form; nonnegativity facets -x_i <= 0
// are reported too and flagged.
struct Facet {
    Inequality ineq;
    bool nonnegativity = false;
};

// Homogeneous point in R^{n+1}, coordinate 0 first.
struct ConePoint {
    RatVector y;
};

// All stable sets as vertex masks, sorted by size then lexicographically on
// the 0/1 incidence vector.
std::vector<std::uint64_t> stable_set_masks(const Graph& g);
std::vector<std::vector<int>> enumerate_stable_sets(const Graph& g);

// Max of a^T chi_S over stable sets S (exact, branch and bound).
Int max_stable_value(const Graph& g, const std::vector<Int>& a);

bool is_valid_for_stab(const Graph& g, const Inequality& ineq);

// Valid inequality induces a facet iff its tight stable-set incidence
// vectors, homogenized, have rank n. Throws on an invalid inequality.
bool is_facet(const Graph& g, const Inequality& ineq);

// Irredundant facet list of STAB(G) by exact double description over the
// homogenized stable-set cone. Deterministic: insertion order is the stable
// set order above, output sorted.
std::vector<Facet> enumerate_facets(const Graph& g);

// Facets with full support and nonnegative coefficients.
std::vector<Inequality> full_support_facets(const Graph& g);

bool cone_frac_member(const Graph& g, const ConePoint& p);
bool cone_frac_member(const Graph& g, const std::vector<Int>& y);

// x1 dominates x2: either both zero, or x1_0 > 0, x2_0 >= 0 and
// x2_0 * x1 >= x1_0 * x2 componentwise.
bool dominates(const ConePoint& x1, const ConePoint& x2);
bool dominates(const std::vector<Int>& x1, const std::vector<Int>& x2);

// FRAC(G) as constraint rows (0 <= x <= 1 and edge inequalities), ready for
// lp_max_exact.
std::vector<std::pair<RatVector, Rat>> frac_constraints(const Graph& g);

}  // namespace lsplus
