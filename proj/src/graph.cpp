#include "lsplus/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lsplus {

namespace {
constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
int popcount(std::uint64_t m) { return std::popcount(m); }
int lowest(std::uint64_t m) { return std::countr_zero(m); }
}  // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > 62) throw std::invalid_argument("vertex count out of range");
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges_1based) {
    Graph g(n);
    for (auto [u, v] : edges_1based) g.add_edge(u - 1, v - 1);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return popcount(adj_[v]);
}

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, popcount(adj_[v]));
    return d;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(popcount(adj_[v]));
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) e.emplace_back(u, v);
    return e;
}

Graph Graph::complement() const {
    Graph c(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v)) c.add_edge(u, v);
    return c;
}

// ---------------------------------------------------------------------------
// graph6

Graph graph6_decode(std::string_view s) {
    constexpr std::string_view header = ">>graph6<<";
    if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
    if (s.empty()) throw Graph6Error("empty graph6 string");
    for (char c : s)
        if (c < 63 || c > 126) throw Graph6Error("byte outside printable graph6 range");
    const int n = s[0] - 63;
    if (n > 62) throw Graph6Error("long-form graph6 not supported");
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (s.size() != 1 + nbytes) throw Graph6Error("wrong graph6 length");

    Graph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = s[1 + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    // padding bits must be zero
    for (; k < nbytes * 6; ++k) {
        const int byte = s[1 + k / 6] - 63;
        if ((byte >> (5 - k % 6)) & 1) throw Graph6Error("nonzero padding bits");
    }
    return g;
}

std::string graph6_encode(const Graph& g) {
    const int n = g.n();
    std::string out(1, static_cast<char>(63 + n));
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    out.resize(1 + (nbits + 5) / 6, static_cast<char>(63));
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (g.has_edge(i, j)) out[1 + k / 6] += static_cast<char>(1 << (5 - k % 6));
    return out;
}

Graph parse_edge_list(std::string_view text, int n) {
    Graph g(n);
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        int u, v;
        if (ls >> u >> v) g.add_edge(u - 1, v - 1);
    }
    return g;
}

Graph circulant(int n, const std::vector<int>& offsets) {
    Graph g(n);
    for (int off : offsets)
        for (int i = 0; i < n; ++i) {
            const int j = (i + off) % n;
            if (i != j) g.add_edge(i, j);
        }
    return g;
}

// ---------------------------------------------------------------------------
// subgraph operations

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> pos(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        const int v = keep[i];
        if (v < 0 || v >= g.n() || pos[v] != -1)
            throw std::invalid_argument("induced_subgraph: bad vertex set");
        if (i > 0 && keep[i] <= keep[i - 1])
            throw std::invalid_argument("induced_subgraph: vertex set must be increasing");
        pos[v] = static_cast<int>(i);
    }
    Graph h(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.has_edge(keep[i], keep[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

Graph delete_vertices(const Graph& g, const std::vector<int>& drop) {
    std::uint64_t gone = 0;
    for (int v : drop) {
        if (v < 0 || v >= g.n()) throw std::invalid_argument("delete_vertices: bad vertex");
        gone |= bit(v);
    }
    std::vector<int> keep;
    for (int v = 0; v < g.n(); ++v)
        if (!(gone & bit(v))) keep.push_back(v);
    return induced_subgraph(g, keep);
}

std::vector<int> destroy_survivors(const Graph& g, int v) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("destroy_vertex: bad vertex");
    const std::uint64_t gone = g.neighbor_mask(v) | bit(v);
    std::vector<int> keep;
    for (int u = 0; u < g.n(); ++u)
        if (!(gone & bit(u))) keep.push_back(u);
    return keep;
}

Graph destroy_vertex(const Graph& g, int v) { return induced_subgraph(g, destroy_survivors(g, v)); }

bool StretchSpec::is_proper(const Graph& g) const {
    const std::uint64_t nbhd = g.neighbor_mask(vertex);
    for (std::uint64_t a : parts)
        if (a == 0 || a == nbhd || (a & ~nbhd)) return false;
    return true;
}

Graph stretch_vertex(const Graph& g, const StretchSpec& spec) {
    const int v = spec.vertex;
    if (v < 0 || v >= g.n()) throw std::invalid_argument("stretch_vertex: bad vertex");
    const std::uint64_t nbhd = g.neighbor_mask(v);
    std::uint64_t cover = 0;
    for (std::uint64_t a : spec.parts) {
        if (a & ~nbhd) throw std::invalid_argument("stretch_vertex: part not inside neighborhood");
        cover |= a;
    }
    if (cover != nbhd) throw std::invalid_argument("stretch_vertex: parts do not cover neighborhood");

    const int k = static_cast<int>(spec.parts.size());
    const int base = g.n() - 1;  // index of v0
    Graph h(g.n() + k);
    auto remap = [&](int u) { return u < v ? u : u - 1; };
    for (auto [a, b] : g.edges())
        if (a != v && b != v) h.add_edge(remap(a), remap(b));
    for (int j = 1; j <= k; ++j) {
        h.add_edge(base, base + j);
        for (std::uint64_t m = spec.parts[j - 1]; m; m &= m - 1) h.add_edge(base + j, remap(lowest(m)));
    }
    return h;
}

// ---------------------------------------------------------------------------
// canonical labeling

namespace {

// Ordered partition of the vertex set. Cells keep their order under
// refinement, which makes the search deterministic.
struct Partition {
    std::vector<std::vector<int>> cells;

    bool discrete() const {
        return std::all_of(cells.begin(), cells.end(),
                           [](const auto& c) { return c.size() == 1; });
    }
};

void refine(const Graph& g, Partition& p) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::uint64_t> cell_mask(p.cells.size(), 0);
        for (std::size_t c = 0; c < p.cells.size(); ++c)
            for (int v : p.cells[c]) cell_mask[c] |= bit(v);

        std::vector<std::vector<int>> next;
        next.reserve(p.cells.size());
        for (const auto& cell : p.cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            // signature: neighbor count into every current cell
            std::map<std::vector<int>, std::vector<int>> split;
            for (int v : cell) {
                std::vector<int> sig(p.cells.size());
                for (std::size_t c = 0; c < p.cells.size(); ++c)
                    sig[c] = popcount(g.neighbor_mask(v) & cell_mask[c]);
                split[sig].push_back(v);
            }
            if (split.size() > 1) changed = true;
            for (auto& [sig, verts] : split) next.push_back(std::move(verts));
        }
        p.cells = std::move(next);
    }
}

// Adjacency bits of g relabeled by `order`, upper triangle column-major.
std::vector<std::uint64_t> relabeled_bits(const Graph& g, const std::vector<int>& order) {
    std::vector<std::uint64_t> words((static_cast<std::size_t>(g.n()) * (g.n() - 1) / 2 + 63) / 64, 0);
    std::size_t k = 0;
    for (int j = 1; j < g.n(); ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (g.has_edge(order[i], order[j])) words[k / 64] |= std::uint64_t{1} << (63 - k % 64);
    return words;
}

// True when all cell members have identical neighborhoods outside the cell
// and the cell induces a complete or empty graph; the members are then
// interchangeable and one branch suffices.
bool interchangeable_cell(const Graph& g, const std::vector<int>& cell) {
    std::uint64_t cm = 0;
    for (int v : cell) cm |= bit(v);
    const std::uint64_t outside0 = g.neighbor_mask(cell[0]) & ~cm;
    const int inside0 = popcount(g.neighbor_mask(cell[0]) & cm);
    if (inside0 != 0 && inside0 != static_cast<int>(cell.size()) - 1) return false;
    for (std::size_t i = 1; i < cell.size(); ++i) {
        if ((g.neighbor_mask(cell[i]) & ~cm) != outside0) return false;
        if (popcount(g.neighbor_mask(cell[i]) & cm) != inside0) return false;
    }
    return true;
}

struct CanonSearch {
    const Graph& g;
    std::vector<std::uint64_t> best_bits;
    std::vector<int> best_order;
    bool have_best = false;

    void visit(Partition p) {
        refine(g, p);
        std::size_t target = p.cells.size();
        for (std::size_t c = 0; c < p.cells.size(); ++c)
            if (p.cells[c].size() > 1) { target = c; break; }

        if (target == p.cells.size()) {
            std::vector<int> order;
            order.reserve(static_cast<std::size_t>(g.n()));
            for (const auto& cell : p.cells) order.push_back(cell[0]);
            auto bits = relabeled_bits(g, order);
            if (!have_best || bits < best_bits) {
                best_bits = std::move(bits);
                best_order = std::move(order);
                have_best = true;
            }
            return;
        }

        const auto cell = p.cells[target];
        const std::size_t take = interchangeable_cell(g, cell) ? 1 : cell.size();
        for (std::size_t i = 0; i < take; ++i) {
            Partition q;
            q.cells.reserve(p.cells.size() + 1);
            for (std::size_t c = 0; c < p.cells.size(); ++c) {
                if (c != target) {
                    q.cells.push_back(p.cells[c]);
                    continue;
                }
                q.cells.push_back({cell[i]});
                std::vector<int> rest;
                for (std::size_t j = 0; j < cell.size(); ++j)
                    if (j != i) rest.push_back(cell[j]);
                q.cells.push_back(std::move(rest));
            }
            visit(std::move(q));
        }
    }
};

std::vector<int> canonical_order(const Graph& g, const std::vector<int>& colors) {
    if (g.n() == 0) return {};
    Partition p;
    std::map<int, std::vector<int>> by_color;
    for (int v = 0; v < g.n(); ++v) by_color[colors.empty() ? 0 : colors[v]].push_back(v);
    for (auto& [c, verts] : by_color) p.cells.push_back(std::move(verts));

    CanonSearch s{g};
    s.visit(std::move(p));
    return s.best_order;
}

}  // namespace

std::string canonical_form(const Graph& g) { return canonical_form(g, {}); }

std::string canonical_form(const Graph& g, const std::vector<int>& colors) {
    const auto order = canonical_order(g, colors);
    Graph h(g.n());
    std::vector<int> pos(static_cast<std::size_t>(g.n()));
    for (int i = 0; i < g.n(); ++i) pos[order[i]] = i;
    for (auto [u, v] : g.edges()) h.add_edge(pos[u], pos[v]);
    std::string s = graph6_encode(h);
    if (!colors.empty()) {
        // append the color word so differently colored classes never collide
        s += '|';
        for (int i = 0; i < g.n(); ++i) s += std::to_string(colors[order[i]]) + ',';
    }
    return s;
}

bool isomorphic(const Graph& g, const Graph& h) {
    if (g.n() != h.n() || g.edge_count() != h.edge_count()) return false;
    return canonical_form(g) == canonical_form(h);
}

// ---------------------------------------------------------------------------
// predicates

bool is_bipartite(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.n()), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> queue{s};
        while (!queue.empty()) {
            const int u = queue.back();
            queue.pop_back();
            for (std::uint64_t m = g.neighbor_mask(u); m; m &= m - 1) {
                const int v = lowest(m);
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

struct StableSearch {
    const Graph& g;
    const std::vector<long long>& w;
    long long best = 0;

    void go(std::uint64_t pool, long long cur) {
        long long slack = 0;
        for (std::uint64_t m = pool; m; m &= m - 1) slack += w[lowest(m)];
        if (cur + slack <= best) return;
        if (!pool) {
            best = std::max(best, cur);
            return;
        }
        // branch on the highest-degree vertex in the pool
        int v = -1, dv = -1;
        for (std::uint64_t m = pool; m; m &= m - 1) {
            const int u = lowest(m);
            const int d = popcount(g.neighbor_mask(u) & pool);
            if (d > dv) { v = u; dv = d; }
        }
        go(pool & ~(g.neighbor_mask(v) | bit(v)), cur + w[v]);
        go(pool & ~bit(v), cur);
    }
};

}  // namespace

long long max_weight_stable_set(const Graph& g, const std::vector<long long>& weights) {
    std::uint64_t pool = 0;
    for (int v = 0; v < g.n(); ++v)
        if (weights[v] > 0) pool |= bit(v);
    StableSearch s{g, weights};
    s.go(pool, 0);
    return s.best;
}

int stability_number(const Graph& g) {
    std::vector<long long> ones(static_cast<std::size_t>(g.n()), 1);
    return static_cast<int>(max_weight_stable_set(g, ones));
}

int clique_number(const Graph& g) { return stability_number(g.complement()); }

namespace {

// Induced odd cycles of length >= 5 through a fixed least vertex s.
// The path is s = v0, v1, ..., vk; `banned` holds the used vertices together
// with the neighborhoods of v0..v_{k-1}, so every extension keeps the path
// induced. A neighbor of s reached this way can only close the cycle.
struct HoleSearch {
    const Graph& g;
    int s;
    std::uint64_t above;  // vertices > s
    int second = -1;

    bool extend(int v, int len, std::uint64_t banned) const {
        const std::uint64_t cands = g.neighbor_mask(v) & above & ~banned;
        for (std::uint64_t m = cands; m; m &= m - 1) {
            const int w = lowest(m);
            if (g.has_edge(w, s)) {
                const int cycle = len + 1;
                if (cycle >= 5 && cycle % 2 == 1 && w > second) return true;
            } else if (extend(w, len + 1, banned | bit(w) | g.neighbor_mask(v))) {
                return true;
            }
        }
        return false;
    }
};

bool has_odd_hole(const Graph& g) {
    for (int s = 0; s + 4 < g.n(); ++s) {
        std::uint64_t above = 0;
        for (int v = s + 1; v < g.n(); ++v) above |= bit(v);
        HoleSearch hs{g, s, above};
        for (std::uint64_t m = g.neighbor_mask(s) & above; m; m &= m - 1) {
            hs.second = lowest(m);
            const std::uint64_t banned = bit(s) | bit(hs.second) | g.neighbor_mask(s);
            if (hs.extend(hs.second, 2, banned)) return true;
        }
    }
    return false;
}

}  // namespace

bool is_perfect_small(const Graph& g) {
    return !has_odd_hole(g) && !has_odd_hole(g.complement());
}

bool is_vertex_transitive(const Graph& g) {
    if (g.n() <= 1) return true;
    const int d0 = g.degree(0);
    for (int v = 1; v < g.n(); ++v)
        if (g.degree(v) != d0) return false;
    std::vector<int> colors(static_cast<std::size_t>(g.n()), 0);
    colors[0] = 1;
    const std::string ref = canonical_form(g, colors);
    colors[0] = 0;
    for (int v = 1; v < g.n(); ++v) {
        colors[v] = 1;
        if (canonical_form(g, colors) != ref) return false;
        colors[v] = 0;
    }
    return true;
}

namespace {

int component_count(const Graph& g, std::uint64_t pool, std::vector<std::uint64_t>* comps) {
    int count = 0;
    while (pool) {
        std::uint64_t comp = bit(lowest(pool));
        for (;;) {
            std::uint64_t grow = comp;
            for (std::uint64_t m = comp; m; m &= m - 1) grow |= g.neighbor_mask(lowest(m)) & pool;
            if (grow == comp) break;
            comp = grow;
        }
        if (comps) comps->push_back(comp);
        pool &= ~comp;
        ++count;
    }
    return count;
}

bool is_clique_mask(const Graph& g, std::uint64_t mask) {
    for (std::uint64_t m = mask; m; m &= m - 1) {
        const int v = lowest(m);
        if ((mask & ~bit(v)) & ~g.neighbor_mask(v)) return false;
    }
    return true;
}

std::vector<int> mask_to_vec(std::uint64_t m) {
    std::vector<int> v;
    for (; m; m &= m - 1) v.push_back(lowest(m));
    return v;
}

}  // namespace

std::optional<CutClique> has_cut_clique(const Graph& g) {
    const int n = g.n();
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (bit(n) - 1);
    std::vector<int> subset;
    // candidate separators by size, lexicographic within a size
    for (int k = 0; k <= std::max(0, n - 2); ++k) {
        std::vector<int> idx(static_cast<std::size_t>(k));
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            std::uint64_t mask = 0;
            for (int v : idx) mask |= bit(v);
            if (is_clique_mask(g, mask)) {
                std::vector<std::uint64_t> comps;
                if (component_count(g, all & ~mask, &comps) >= 2) {
                    CutClique cc;
                    cc.clique = mask_to_vec(mask);
                    cc.side1 = mask_to_vec(comps[0]);
                    std::uint64_t rest = 0;
                    for (std::size_t c = 1; c < comps.size(); ++c) rest |= comps[c];
                    cc.side2 = mask_to_vec(rest);
                    return cc;
                }
            }
            // next k-combination in lexicographic order
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (k == 0 && n < 2) break;
    }
    return std::nullopt;
}

}  // namespace lsplus
