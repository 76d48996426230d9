#include "lsplus/polytope.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace lsplus {

namespace {
constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
int lowest(std::uint64_t m) { return std::countr_zero(m); }
}  // namespace

std::vector<std::uint64_t> stable_set_masks(const Graph& g) {
    std::vector<std::uint64_t> out;
    // DFS over vertices in index order
    struct Rec {
        const Graph& g;
        std::vector<std::uint64_t>& out;
        void go(int v, std::uint64_t mask) {
            if (v == g.n()) {
                out.push_back(mask);
                return;
            }
            go(v + 1, mask);
            if (!(g.neighbor_mask(v) & mask)) go(v + 1, mask | bit(v));
        }
    };
    Rec{g, out}.go(0, 0);
    std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        if (a == b) return false;
        const int low = lowest(a ^ b);
        return ((b >> low) & 1) != 0;  // first differing coordinate is 0 in a
    });
    return out;
}

std::vector<std::vector<int>> enumerate_stable_sets(const Graph& g) {
    std::vector<std::vector<int>> out;
    for (std::uint64_t m : stable_set_masks(g)) {
        std::vector<int> x(static_cast<std::size_t>(g.n()), 0);
        for (std::uint64_t t = m; t; t &= t - 1) x[static_cast<std::size_t>(lowest(t))] = 1;
        out.push_back(std::move(x));
    }
    return out;
}

namespace {

struct WeightedStable {
    const Graph& g;
    const std::vector<Int>& w;
    Int best = 0;

    void go(std::uint64_t pool, Int cur) {
        Int slack = cur;
        for (std::uint64_t m = pool; m; m &= m - 1) slack += w[static_cast<std::size_t>(lowest(m))];
        if (slack <= best) return;
        if (!pool) {
            best = cur;
            return;
        }
        int v = -1, dv = -1;
        for (std::uint64_t m = pool; m; m &= m - 1) {
            const int u = lowest(m);
            const int d = std::popcount(g.neighbor_mask(u) & pool);
            if (d > dv) { v = u; dv = d; }
        }
        go(pool & ~(g.neighbor_mask(v) | bit(v)), cur + w[static_cast<std::size_t>(v)]);
        go(pool & ~bit(v), cur);
    }
};

}  // namespace

Int max_stable_value(const Graph& g, const std::vector<Int>& a) {
    if (a.size() != static_cast<std::size_t>(g.n()))
        throw std::invalid_argument("inequality dimension does not match graph");
    std::uint64_t pool = 0;
    for (int v = 0; v < g.n(); ++v)
        if (a[static_cast<std::size_t>(v)] > 0) pool |= bit(v);
    WeightedStable s{g, a};
    s.go(pool, 0);
    return s.best;
}

bool is_valid_for_stab(const Graph& g, const Inequality& ineq) {
    return max_stable_value(g, ineq.a) <= ineq.beta;
}

bool is_facet(const Graph& g, const Inequality& ineq) {
    if (!is_valid_for_stab(g, ineq))
        throw std::invalid_argument("is_facet called on an inequality not valid for STAB");
    const std::size_t n = static_cast<std::size_t>(g.n());
    std::vector<std::uint64_t> tight;
    for (std::uint64_t m : stable_set_masks(g)) {
        Int v = 0;
        for (std::uint64_t t = m; t; t &= t - 1) v += ineq.a[static_cast<std::size_t>(lowest(t))];
        if (v == ineq.beta) tight.push_back(m);
    }
    RatMatrix mat(tight.size(), n + 1);
    for (std::size_t r = 0; r < tight.size(); ++r) {
        mat.at(r, 0) = 1;
        for (std::uint64_t t = tight[r]; t; t &= t - 1)
            mat.at(r, 1 + static_cast<std::size_t>(lowest(t))) = 1;
    }
    return rational_rank(std::move(mat)) == n;
}

// ---------------------------------------------------------------------------
// double description

namespace {

struct Bitset {
    std::vector<std::uint64_t> w;

    void resize_bits(std::size_t nbits) { w.assign((nbits + 63) / 64, 0); }
    void set(std::size_t i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }
    void push(bool v, std::size_t i) {
        if (i / 64 >= w.size()) w.push_back(0);
        if (v) set(i);
    }
    friend Bitset operator&(const Bitset& a, const Bitset& b) {
        Bitset r;
        r.w.resize(std::min(a.w.size(), b.w.size()));
        for (std::size_t i = 0; i < r.w.size(); ++i) r.w[i] = a.w[i] & b.w[i];
        return r;
    }
    bool subset_of(const Bitset& other) const {
        for (std::size_t i = 0; i < w.size(); ++i) {
            const std::uint64_t o = i < other.w.size() ? other.w[i] : 0;
            if (w[i] & ~o) return false;
        }
        return true;
    }
};

struct Ray {
    std::vector<Int> y;  // primitive integer direction, dim n+1
    Bitset zero;         // processed inequalities tight at this ray
};

void make_primitive(std::vector<Int>& y) {
    Int g = 0;
    for (const Int& v : y) g = gcd(g, v);
    if (g > 1)
        for (Int& v : y) v /= g;
}

Int eval(const std::vector<Int>& y, std::uint64_t stable_mask) {
    Int v = y[0];
    for (std::uint64_t t = stable_mask; t; t &= t - 1)
        v += y[1 + static_cast<std::size_t>(lowest(t))];
    return v;
}

}  // namespace

std::vector<Facet> enumerate_facets(const Graph& g) {
    const int n = g.n();
    const auto sets = stable_set_masks(g);

    // Seed cone from the empty set and the singletons, which are always
    // stable and whose homogenizations form a basis of R^{n+1}.
    std::vector<Ray> rays;
    {
        Ray r0;
        r0.y.assign(static_cast<std::size_t>(n) + 1, Int(-1));
        r0.y[0] = 1;
        rays.push_back(std::move(r0));
        for (int i = 0; i < n; ++i) {
            Ray r;
            r.y.assign(static_cast<std::size_t>(n) + 1, Int(0));
            r.y[1 + static_cast<std::size_t>(i)] = 1;
            rays.push_back(std::move(r));
        }
    }

    std::vector<std::uint64_t> pending;
    for (std::uint64_t m : sets)
        if (std::popcount(m) >= 2) pending.push_back(m);

    const std::size_t total = static_cast<std::size_t>(n) + 1 + pending.size();
    std::size_t processed = 0;
    // seed inequalities: empty set then singletons, in that order
    for (auto& r : rays) r.zero.resize_bits(total);
    for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k) {
        const std::uint64_t m = k == 0 ? 0 : bit(static_cast<int>(k - 1));
        for (auto& r : rays)
            if (eval(r.y, m) == 0) r.zero.set(k);
    }
    processed = static_cast<std::size_t>(n) + 1;

    for (std::uint64_t m : pending) {
        std::vector<Int> vals(rays.size());
        bool any_neg = false;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            vals[i] = eval(rays[i].y, m);
            if (vals[i] < 0) any_neg = true;
        }
        if (!any_neg) {
            for (std::size_t i = 0; i < rays.size(); ++i)
                if (vals[i] == 0) rays[i].zero.set(processed);
            ++processed;
            continue;
        }

        std::vector<Ray> next;
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (vals[i] >= 0) {
                Ray keep = rays[i];
                if (vals[i] == 0) keep.zero.set(processed);
                next.push_back(std::move(keep));
            }

        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (vals[p] <= 0) continue;
            for (std::size_t q = 0; q < rays.size(); ++q) {
                if (vals[q] >= 0) continue;
                // adjacency: no third ray is tight on everything p and q share
                const Bitset common = rays[p].zero & rays[q].zero;
                bool adjacent = true;
                for (std::size_t t = 0; t < rays.size() && adjacent; ++t)
                    if (t != p && t != q && common.subset_of(rays[t].zero)) adjacent = false;
                if (!adjacent) continue;

                Ray combo;
                combo.y.resize(static_cast<std::size_t>(n) + 1);
                for (std::size_t c = 0; c < combo.y.size(); ++c)
                    combo.y[c] = vals[p] * rays[q].y[c] - vals[q] * rays[p].y[c];
                make_primitive(combo.y);
                combo.zero = common;
                combo.zero.w.resize((total + 63) / 64);
                combo.zero.set(processed);
                next.push_back(std::move(combo));
            }
        }
        rays = std::move(next);
        ++processed;
    }

    std::vector<Facet> out;
    for (const auto& r : rays) {
        Facet f;
        f.ineq.beta = r.y[0];
        f.ineq.a.resize(static_cast<std::size_t>(n));
        int support = 0, negunit = 0;
        for (int i = 0; i < n; ++i) {
            f.ineq.a[static_cast<std::size_t>(i)] = -r.y[1 + static_cast<std::size_t>(i)];
            if (f.ineq.a[static_cast<std::size_t>(i)] != 0) {
                ++support;
                if (f.ineq.a[static_cast<std::size_t>(i)] == -1) ++negunit;
            }
        }
        f.nonnegativity = (f.ineq.beta == 0 && support == 1 && negunit == 1);
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(), [](const Facet& x, const Facet& y) {
        if (x.nonnegativity != y.nonnegativity) return x.nonnegativity;
        if (x.ineq.a != y.ineq.a) return x.ineq.a < y.ineq.a;
        return x.ineq.beta < y.ineq.beta;
    });
    return out;
}

std::vector<Inequality> full_support_facets(const Graph& g) {
    std::vector<Inequality> out;
    for (auto& f : enumerate_facets(g)) {
        bool full = true;
        for (const Int& c : f.ineq.a)
            if (c <= 0) { full = false; break; }
        if (full) out.push_back(std::move(f.ineq));
    }
    return out;
}

// ---------------------------------------------------------------------------
// cone membership and domination

namespace {

template <typename Vec, typename Scalar>
bool cone_frac_member_impl(const Graph& g, const Vec& y, const Scalar& /*tag*/) {
    const std::size_t n = static_cast<std::size_t>(g.n());
    bool all_zero = true;
    for (std::size_t i = 0; i <= n; ++i)
        if (y[i] != 0) { all_zero = false; break; }
    if (all_zero) return true;
    if (y[0] <= 0) return false;
    for (std::size_t i = 1; i <= n; ++i)
        if (y[i] < 0 || y[i] > y[0]) return false;
    for (auto [u, v] : g.edges())
        if (y[1 + static_cast<std::size_t>(u)] + y[1 + static_cast<std::size_t>(v)] > y[0])
            return false;
    return true;
}

template <typename Vec>
bool dominates_impl(const Vec& x1, const Vec& x2, std::size_t dim) {
    bool zero1 = true, zero2 = true;
    for (std::size_t i = 0; i < dim; ++i) {
        if (x1[i] != 0) zero1 = false;
        if (x2[i] != 0) zero2 = false;
    }
    if (zero1 && zero2) return true;
    if (x1[0] <= 0 || x2[0] < 0) return false;
    for (std::size_t i = 0; i < dim; ++i)
        if (x2[0] * x1[i] < x1[0] * x2[i]) return false;
    return true;
}

}  // namespace

bool cone_frac_member(const Graph& g, const ConePoint& p) {
    if (p.y.dim() != static_cast<std::size_t>(g.n()) + 1)
        throw std::invalid_argument("cone point dimension mismatch");
    return cone_frac_member_impl(g, p.y, Rat(0));
}

bool cone_frac_member(const Graph& g, const std::vector<Int>& y) {
    if (y.size() != static_cast<std::size_t>(g.n()) + 1)
        throw std::invalid_argument("cone point dimension mismatch");
    return cone_frac_member_impl(g, y, Int(0));
}

bool dominates(const ConePoint& x1, const ConePoint& x2) {
    if (x1.y.dim() != x2.y.dim()) throw std::invalid_argument("dominates: dimension mismatch");
    return dominates_impl(x1.y, x2.y, x1.y.dim());
}

bool dominates(const std::vector<Int>& x1, const std::vector<Int>& x2) {
    if (x1.size() != x2.size()) throw std::invalid_argument("dominates: dimension mismatch");
    return dominates_impl(x1, x2, x1.size());
}

std::vector<std::pair<RatVector, Rat>> frac_constraints(const Graph& g) {
    const std::size_t n = static_cast<std::size_t>(g.n());
    std::vector<std::pair<RatVector, Rat>> rows;
    for (std::size_t i = 0; i < n; ++i) {
        RatVector lo(n), hi(n);
        lo[i] = -1;
        hi[i] = 1;
        rows.emplace_back(std::move(lo), Rat(0));
        rows.emplace_back(std::move(hi), Rat(1));
    }
    for (auto [u, v] : g.edges()) {
        RatVector e(n);
        e[static_cast<std::size_t>(u)] = 1;
        e[static_cast<std::size_t>(v)] = 1;
        rows.emplace_back(std::move(e), Rat(1));
    }
    return rows;
}

}  // namespace lsplus
