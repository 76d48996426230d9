#include "lsplus/search.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace lsplus {

namespace {
constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
int lowest(std::uint64_t m) { return std::countr_zero(m); }
}  // namespace

std::vector<Graph> generate_stretch_candidates(const std::vector<Graph>& seeds, int ell,
                                               JoinMode mode) {
    const int seed_n = 3 * (ell - 1);
    std::map<std::string, Graph> found;
    for (const Graph& seed : seeds) {
        if (seed.n() != seed_n)
            throw std::invalid_argument("seed must have 3(ell-1) vertices");
        const std::uint64_t all = bit(seed_n) - 1;
        for (std::uint64_t join = 1; join <= all; ++join) {
            if (mode == JoinMode::full_only && join != all) continue;
            Graph h(seed_n + 1);
            for (auto [u, v] : seed.edges()) h.add_edge(u, v);
            const int apex = seed_n;
            for (std::uint64_t m = join; m; m &= m - 1) h.add_edge(apex, lowest(m));

            // proper 2-stretchings of the apex: every neighbor goes to part 1,
            // part 2 or both; both parts must be nonempty proper subsets.
            std::vector<int> nbrs;
            for (std::uint64_t m = join; m; m &= m - 1) nbrs.push_back(lowest(m));
            const std::size_t g_sz = nbrs.size();
            if (g_sz < 2) continue;
            std::uint64_t combos = 1;
            for (std::size_t i = 0; i < g_sz; ++i) combos *= 3;
            for (std::uint64_t code = 0; code < combos; ++code) {
                std::uint64_t c = code;
                std::uint64_t a1 = 0, a2 = 0;
                for (std::size_t i = 0; i < g_sz; ++i, c /= 3) {
                    const int choice = static_cast<int>(c % 3) + 1;
                    if (choice & 1) a1 |= bit(nbrs[i]);
                    if (choice & 2) a2 |= bit(nbrs[i]);
                }
                if (a1 == 0 || a2 == 0 || a1 == join || a2 == join) continue;  // improper
                if (a1 > a2) continue;  // unordered pair
                const Graph stretched = stretch_vertex(h, StretchSpec{apex, {a1, a2}});
                found.emplace(canonical_form(stretched), stretched);
            }
        }
    }
    std::vector<Graph> out;
    out.reserve(found.size());
    for (auto& [canon, g] : found) out.push_back(std::move(g));
    return out;
}

std::vector<CandidatePair> facet_pair_extraction(const std::vector<Graph>& graphs) {
    std::vector<CandidatePair> out;
    for (const Graph& g : graphs)
        for (Inequality& f : full_support_facets(g))
            out.push_back({g, std::move(f), "hull"});
    return out;
}

std::vector<CandidatePair> facet_pair_extraction(const std::vector<Graph>& graphs,
                                                 const std::vector<Inequality>& candidates) {
    std::vector<CandidatePair> out;
    for (const Graph& g : graphs)
        for (const Inequality& q : candidates) {
            if (q.a.size() != static_cast<std::size_t>(g.n())) continue;
            bool full = true;
            for (const Int& c : q.a)
                if (c <= 0) { full = false; break; }
            if (!full) continue;
            Inequality tight = q;
            tight.beta = max_stable_value(g, q.a);  // facets of STAB are tight
            if (is_facet(g, tight)) out.push_back({g, std::move(tight), "candidate"});
        }
    return out;
}

namespace {

std::vector<int> coefficient_colors(const Inequality& q) {
    std::vector<Int> sorted;
    for (const Int& c : q.a) sorted.push_back(c);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> colors(q.a.size());
    for (std::size_t i = 0; i < q.a.size(); ++i)
        colors[i] = static_cast<int>(
            std::lower_bound(sorted.begin(), sorted.end(), q.a[i]) - sorted.begin());
    return colors;
}

std::string pair_key(const CandidatePair& p) {
    std::string key = canonical_form(p.g, coefficient_colors(p.ineq));
    key += "#beta=" + p.ineq.beta.get_str();
    std::vector<Int> sorted(p.ineq.a);
    std::sort(sorted.begin(), sorted.end());
    for (const Int& c : sorted) key += "," + c.get_str();
    return key;
}

// Does some coefficient-preserving relabeling send E(small) into E(large)?
bool embeds(const CandidatePair& small, const CandidatePair& large) {
    const int n = small.g.n();
    if (large.g.n() != n) return false;
    std::vector<int> image(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);

    // map high-degree vertices first
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return small.g.degree(a) > small.g.degree(b); });

    struct Rec {
        const CandidatePair& s;
        const CandidatePair& l;
        const std::vector<int>& order;
        std::vector<int>& image;
        std::vector<bool>& used;

        bool go(std::size_t k) {
            if (k == order.size()) return true;
            const int v = order[k];
            for (int w = 0; w < l.g.n(); ++w) {
                if (used[static_cast<std::size_t>(w)]) continue;
                if (s.ineq.a[static_cast<std::size_t>(v)] != l.ineq.a[static_cast<std::size_t>(w)])
                    continue;
                if (s.g.degree(v) > l.g.degree(w)) continue;
                bool ok = true;
                for (std::size_t j = 0; j < k && ok; ++j) {
                    const int u = order[j];
                    if (s.g.has_edge(u, v) && !l.g.has_edge(image[static_cast<std::size_t>(u)], w))
                        ok = false;
                }
                if (!ok) continue;
                image[static_cast<std::size_t>(v)] = w;
                used[static_cast<std::size_t>(w)] = true;
                if (go(k + 1)) return true;
                image[static_cast<std::size_t>(v)] = -1;
                used[static_cast<std::size_t>(w)] = false;
            }
            return false;
        }
    };
    return Rec{small, large, order, image, used}.go(0);
}

}  // namespace

std::vector<CandidatePair> minimal_elements(const std::vector<CandidatePair>& pairs) {
    // dedupe up to pair isomorphism, deterministic order
    std::map<std::string, CandidatePair> unique;
    for (const CandidatePair& p : pairs) unique.emplace(pair_key(p), p);

    std::vector<CandidatePair> pool;
    pool.reserve(unique.size());
    for (auto& [k, p] : unique) pool.push_back(std::move(p));

    // group by (beta, sorted coefficients, n); only groups can be comparable
    auto group_key = [](const CandidatePair& p) {
        std::string k = std::to_string(p.g.n()) + "|" + p.ineq.beta.get_str();
        std::vector<Int> sorted(p.ineq.a);
        std::sort(sorted.begin(), sorted.end());
        for (const Int& c : sorted) k += "," + c.get_str();
        return k;
    };
    std::map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < pool.size(); ++i) groups[group_key(pool[i])].push_back(i);

    std::vector<bool> minimal(pool.size(), true);
    for (const auto& [k, idx] : groups)
        for (std::size_t i : idx) {
            for (std::size_t j : idx) {
                if (i == j || !minimal[j]) continue;
                if (pool[i].g.edge_count() >= pool[j].g.edge_count()) continue;
                if (embeds(pool[i], pool[j])) minimal[j] = false;
            }
        }

    std::vector<CandidatePair> out;
    for (std::size_t i = 0; i < pool.size(); ++i)
        if (minimal[i]) out.push_back(pool[i]);
    return out;
}

std::vector<Graph> edge_subgraph_closure(const Graph& g, const Inequality& ineq) {
    const auto all_edges = g.edges();
    const std::size_t m = all_edges.size();
    if (m > 32) throw std::invalid_argument("edge_subgraph_closure: too many edges");

    auto graph_of = [&](std::uint64_t mask) {
        Graph h(g.n());
        for (std::size_t e = 0; e < m; ++e)
            if (mask & bit(static_cast<int>(e))) h.add_edge(all_edges[e].first, all_edges[e].second);
        return h;
    };
    auto valid = [&](const Graph& h) { return is_valid_for_stab(h, ineq); };

    const std::uint64_t full = m == 0 ? 0 : (bit(static_cast<int>(m)) - 1);
    std::map<std::string, Graph> found;
    if (!valid(g)) return {};
    found.emplace(canonical_form(g), g);

    std::unordered_set<std::uint64_t> visited{full};
    std::vector<std::uint64_t> stack{full};
    while (!stack.empty()) {
        const std::uint64_t mask = stack.back();
        stack.pop_back();
        for (std::size_t e = 0; e < m; ++e) {
            if (!(mask & bit(static_cast<int>(e)))) continue;
            const std::uint64_t child = mask & ~bit(static_cast<int>(e));
            if (!visited.insert(child).second) continue;
            const Graph h = graph_of(child);
            if (!valid(h)) continue;  // validity is monotone: prune the downset
            found.emplace(canonical_form(h), h);
            stack.push_back(child);
        }
    }

    std::vector<Graph> out;
    out.reserve(found.size());
    for (auto& [canon, h] : found) out.push_back(std::move(h));
    return out;
}

// ---------------------------------------------------------------------------
// stretched cliques

bool StretchedCliqueSpec::is_hat() const {
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if (std::popcount(static_cast<unsigned>(cross[i][j])) != 1) return false;
    return true;
}

bool StretchedCliqueSpec::is_sparse() const {
    if (!is_hat()) return false;
    for (const auto& row : attachment)
        for (int a : row)
            if (std::popcount(static_cast<unsigned>(a)) != 1) return false;
    return true;
}

std::size_t StretchedCliqueSpec::edge_count() const {
    const int m = base_n - d;
    std::size_t count = static_cast<std::size_t>(m) * (m - 1) / 2 + 2 * static_cast<std::size_t>(d);
    for (const auto& row : attachment)
        for (int a : row) count += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(a)));
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            count += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(cross[i][j])));
    return count;
}

Graph realize(const StretchedCliqueSpec& spec) {
    const int m = spec.base_n - spec.d;
    Graph g(m + 3 * spec.d);
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) g.add_edge(u, v);
    auto branch = [&](int i, int b) { return m + 3 * i + b; };  // b = 0,1,2
    for (int i = 0; i < spec.d; ++i) {
        g.add_edge(branch(i, 0), branch(i, 1));
        g.add_edge(branch(i, 0), branch(i, 2));
        for (int u = 0; u < m; ++u) {
            if (spec.attachment[i][u] & 1) g.add_edge(u, branch(i, 1));
            if (spec.attachment[i][u] & 2) g.add_edge(u, branch(i, 2));
        }
    }
    for (int i = 0; i < spec.d; ++i)
        for (int j = i + 1; j < spec.d; ++j) {
            const int r = spec.cross[i][j];
            if (r & 1) g.add_edge(branch(i, 1), branch(j, 1));
            if (r & 2) g.add_edge(branch(i, 1), branch(j, 2));
            if (r & 4) g.add_edge(branch(i, 2), branch(j, 1));
            if (r & 8) g.add_edge(branch(i, 2), branch(j, 2));
        }
    return g;
}

std::vector<StretchedClique> generate_stretched_cliques(int n, int d,
                                                        const StretchedCliqueOptions& opts) {
    if (d < 0 || d > n || n < 3) throw std::invalid_argument("bad stretched clique parameters");
    const int m = n - d;

    std::vector<int> att_choices, cross_choices;
    for (int a = 1; a <= 3; ++a)
        if (!opts.sparse_only || std::popcount(static_cast<unsigned>(a)) == 1)
            att_choices.push_back(a);
    for (int r = 1; r <= 15; ++r) {
        const int pc = std::popcount(static_cast<unsigned>(r));
        if ((opts.hat_only || opts.sparse_only) && pc != 1) continue;
        cross_choices.push_back(r);
    }

    StretchedCliqueSpec spec;
    spec.base_n = n;
    spec.d = d;
    spec.attachment.assign(static_cast<std::size_t>(d), std::vector<int>(static_cast<std::size_t>(m), 1));
    spec.cross.assign(static_cast<std::size_t>(d), std::vector<int>(static_cast<std::size_t>(d), 1));

    std::map<std::string, StretchedClique> found;
    // slots: d*m attachments then the d(d-1)/2 cross relations
    const int att_slots = d * m;
    std::vector<std::pair<int, int>> cross_slots;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) cross_slots.emplace_back(i, j);

    struct Rec {
        StretchedCliqueSpec& spec;
        const std::vector<int>& att_choices;
        const std::vector<int>& cross_choices;
        const std::vector<std::pair<int, int>>& cross_slots;
        int att_slots;
        int m;
        const StretchedCliqueOptions& opts;
        std::map<std::string, StretchedClique>& found;

        void go(int slot) {
            if (slot == att_slots + static_cast<int>(cross_slots.size())) {
                Graph g = realize(spec);
                if (opts.omega_max > 0 && clique_number(g) > opts.omega_max) return;
                std::string canon = canonical_form(g);
                found.emplace(std::move(canon), StretchedClique{std::move(g), spec});
                return;
            }
            if (slot < att_slots) {
                auto& cell = spec.attachment[static_cast<std::size_t>(slot / m)]
                                            [static_cast<std::size_t>(slot % m)];
                for (int a : att_choices) {
                    cell = a;
                    go(slot + 1);
                }
            } else {
                auto [i, j] = cross_slots[static_cast<std::size_t>(slot - att_slots)];
                auto& cell = spec.cross[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                for (int r : cross_choices) {
                    cell = r;
                    go(slot + 1);
                }
            }
        }
    };
    Rec{spec, att_choices, cross_choices, cross_slots, att_slots, m, opts, found}.go(0);

    std::vector<StretchedClique> out;
    out.reserve(found.size());
    for (auto& [canon, sc] : found) out.push_back(std::move(sc));
    return out;
}

}  // namespace lsplus
