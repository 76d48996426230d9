#include "lsplus/rankbounds.hpp"

#include <algorithm>
#include <sstream>

#include "lsplus/polytope.hpp"

namespace lsplus {

std::string to_string(Rule r) {
    switch (r) {
        case Rule::bipartite: return "BIPARTITE";
        case Rule::perfect: return "PERFECT";
        case Rule::third_of_n: return "THIRD_OF_N";
        case Rule::assumption: return "ASSUMPTION";
        case Rule::min_degree: return "MIN_DEGREE_NOT_MINIMAL";
        case Rule::cut_clique: return "CUT_CLIQUE";
        case Rule::destruction: return "DESTRUCTION";
        case Rule::deletion: return "DELETION";
    }
    return "UNKNOWN";
}

namespace {

void format_node(const ProofTrace& t, std::size_t idx, int depth, std::ostringstream& out) {
    const TraceNode& n = t.nodes[idx];
    out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << to_string(n.rule) << " "
        << n.canon << " <= " << n.bound;
    if (!n.note.empty()) out << "  (" << n.note << ")";
    out << '\n';
    for (std::size_t c : n.children) format_node(t, c, depth + 1, out);
}

}  // namespace

std::string format_trace(const ProofTrace& trace) {
    std::ostringstream out;
    if (!trace.nodes.empty()) format_node(trace, trace.root, 0, out);
    return out.str();
}

RankBoundResult rank_upper_bound(const Graph& g, const RankBoundOptions& opts) {
    RankBoundEngine engine(opts);
    return engine.bound(g);
}

RankBoundResult RankBoundEngine::bound(const Graph& g) {
    RankBoundResult res;
    res.trace.root = solve(g, opts_.depth_budget, res.trace);
    res.bound = res.trace.nodes[res.trace.root].bound;
    return res;
}

std::size_t RankBoundEngine::solve(const Graph& g, int budget, ProofTrace& trace) {
    const std::string canon = canonical_form(g);
    if (auto it = memo_.find({canon, budget}); it != memo_.end()) {
        trace.nodes.push_back(it->second.second);
        return trace.nodes.size() - 1;
    }

    const int n = g.n();
    TraceNode node;
    node.canon = canon;
    node.bound = n + 1;  // sentinel, beaten by every rule below

    auto consider = [&](int bound, Rule rule, std::string note, std::vector<std::size_t> children) {
        if (bound < node.bound) {
            node.bound = bound;
            node.rule = rule;
            node.note = std::move(note);
            node.children = std::move(children);
        }
    };

    // axioms
    if (is_bipartite(g)) {
        consider(0, Rule::bipartite, {}, {});
    } else {
        if (n <= opts_.perfect_limit && is_perfect_small(g)) consider(1, Rule::perfect, {}, {});
        consider(n / 3, Rule::third_of_n, {}, {});
        if (auto it = opts_.assumptions.find(canon); it != opts_.assumptions.end())
            consider(it->second, Rule::assumption, "registered side condition", {});
        if (opts_.use_min_degree_rule && n >= 6 && n % 3 == 0 && g.min_degree() >= 3)
            consider(n / 3 - 1, Rule::min_degree, "no degree-2 vertex on 3m vertices", {});
    }

    // clique separators decompose without spending budget
    if (node.bound > 0) {
        if (auto cc = has_cut_clique(g)) {
            auto with_clique = [&](const std::vector<int>& side) {
                std::vector<int> keep = side;
                keep.insert(keep.end(), cc->clique.begin(), cc->clique.end());
                std::sort(keep.begin(), keep.end());
                return induced_subgraph(g, keep);
            };
            const std::size_t c1 = solve(with_clique(cc->side1), budget, trace);
            const std::size_t c2 = solve(with_clique(cc->side2), budget, trace);
            const int b = std::max(trace.nodes[c1].bound, trace.nodes[c2].bound);
            std::ostringstream note;
            note << "separator of size " << cc->clique.size();
            consider(b, Rule::cut_clique, note.str(), {c1, c2});
        }
    }

    // hierarchy rules; anything they derive is at least 1
    if (budget > 0 && node.bound > 1) {
        {
            std::vector<std::size_t> children;
            int worst = 0;
            bool useful = true;
            for (int v = 0; v < n && useful; ++v) {
                const std::size_t c = solve(destroy_vertex(g, v), budget - 1, trace);
                children.push_back(c);
                worst = std::max(worst, trace.nodes[c].bound);
                if (worst + 1 >= node.bound) useful = false;
            }
            if (useful) consider(worst + 1, Rule::destruction, "over all vertex destructions",
                                 std::move(children));
        }
        if (node.bound > 1) {
            std::size_t best_child = 0;
            int best = n + 1;
            int best_vertex = -1;
            for (int v = 0; v < n; ++v) {
                const std::size_t c = solve(delete_vertices(g, {v}), budget - 1, trace);
                if (trace.nodes[c].bound < best) {
                    best = trace.nodes[c].bound;
                    best_child = c;
                    best_vertex = v;
                }
                if (best == 0) break;
            }
            if (best_vertex >= 0)
                consider(best + 1, Rule::deletion,
                         "delete vertex " + std::to_string(best_vertex + 1), {best_child});
        }
    }

    trace.nodes.push_back(node);
    memo_.emplace(std::make_pair(canon, budget), std::make_pair(node.bound, node));
    return trace.nodes.size() - 1;
}

CatalogReport classify_vt_candidates(const std::vector<std::string>& catalog, int ell,
                                     const RankBoundOptions& opts) {
    CatalogReport report;
    RankBoundEngine engine(opts);
    for (const std::string& line : catalog) {
        CatalogRow row;
        row.graph6 = line;
        try {
            const Graph g = graph6_decode(line);
            row.parsed = true;
            row.n = g.n();
            // Lemma-based degree screen: a k-regular vertex-transitive graph
            // of rank ell has 3 <= k <= n+2-3*ell.
            if (ell >= 2) {
                bool regular = true;
                for (int v = 1; v < g.n(); ++v)
                    if (g.degree(v) != g.degree(0)) { regular = false; break; }
                if (regular && g.n() > 0) {
                    const auto range = vt_degree_filter(g.n(), ell);
                    const int k = g.degree(0);
                    row.degree_excluded = !range || k < range->first || k > range->second;
                }
            }
            auto res = engine.bound(g);
            row.bound = res.bound;
            row.rule = res.trace.nodes[res.trace.root].rule;
            row.trace = std::move(res.trace);
        } catch (const Graph6Error& e) {
            row.error = e.what();
        }
        if (row.parsed) ++report.rule_counts[to_string(row.rule)];
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::optional<std::pair<int, int>> vt_degree_filter(int n, int ell) {
    if (ell < 2) throw std::invalid_argument("vt_degree_filter needs ell >= 2");
    const int hi = n + 2 - 3 * ell;
    if (hi < 3) return std::nullopt;
    return std::make_pair(3, hi);
}

AlphaLsBound alpha_ls1_bound(const Graph& g) {
    const int n = g.n();
    const int k = g.min_degree();
    AlphaLsBound out;
    out.min_degree_bound = Rat(n - k);
    out.best = out.min_degree_bound;

    bool premise = true;
    for (int v = 0; v < n && premise; ++v) {
        const Graph h = destroy_vertex(g, v);
        RatVector obj(static_cast<std::size_t>(h.n()));
        for (std::size_t i = 0; i < obj.dim(); ++i) obj[i] = 1;
        const auto lp = lp_max_exact(frac_constraints(h), obj);
        if (lp.status != LpResult::Status::optimal || lp.value > make_rat(h.n(), 2)) premise = false;
    }
    if (premise) {
        out.halved_bound = Rat(n - k + 1, 2);
        if (*out.halved_bound < out.best) {
            out.best = *out.halved_bound;
            out.halved_applies = true;
        }
    }
    return out;
}

}  // namespace lsplus
