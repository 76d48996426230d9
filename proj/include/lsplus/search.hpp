#pragma once

#include <string>
#include <vector>

#include "lsplus/graph.hpp"
#include "lsplus/polytope.hpp"

namespace lsplus {

struct CandidatePair {
    Graph g;
    Inequality ineq;
    std::string provenance;
};

enum class JoinMode {
    any_nonempty,  // new vertex joined to every nonempty subset of the seed
    full_only,     // new vertex joined to all seed vertices
};

// Candidates for ell-minimality: join a vertex to a seed on 3(ell-1)
// vertices, then properly 2-stretch it; deduplicated up to isomorphism,
// output sorted by canonical form.
std::vector<Graph> generate_stretch_candidates(const std::vector<Graph>& seeds, int ell,
                                               JoinMode mode = JoinMode::any_nonempty);

// One pair per (graph, full-support facet), hull enumeration route (n <= 10).
std::vector<CandidatePair> facet_pair_extraction(const std::vector<Graph>& graphs);

// Generation-side route for larger n: caller supplies candidate directions,
// kept when valid, full-support and facet-inducing.
std::vector<CandidatePair> facet_pair_extraction(const std::vector<Graph>& graphs,
                                                 const std::vector<Inequality>& candidates);

// Partial order: (G,a) <= (G',a') when some relabeling matches a with a' and
// sends E(G) into E(G'). Returns the pairs with nothing strictly below them;
// input is deduplicated first (coefficient-colored canonical forms).
std::vector<CandidatePair> minimal_elements(const std::vector<CandidatePair>& pairs);

// All edge subgraphs (same vertex set) for which the inequality stays valid
// for the stable set polytope, up to isomorphism. Sound as a rank argument
// only when the inequality carries a verified certificate on g.
std::vector<Graph> edge_subgraph_closure(const Graph& g, const Inequality& ineq);

// Stretched cliques obtained from K_n by 2-stretching d vertices.
// attachment[i][u] in {1,2,3}: which branch vertices of stretched vertex i
// the unstretched original u is joined to (bit 0 -> i1, bit 1 -> i2).
// cross[i][j] in 1..15 for i < j: edges between branch vertices of i and j
// (bits i1j1, i1j2, i2j1, i2j2). Exactly-one-bit crosses give the hat family;
// sparse additionally needs singleton attachments.
struct StretchedCliqueSpec {
    int base_n = 0;
    int d = 0;
    std::vector<std::vector<int>> attachment;  // d x (base_n - d)
    std::vector<std::vector<int>> cross;       // d x d, upper triangle used

    bool is_hat() const;
    bool is_sparse() const;
    std::size_t edge_count() const;
};

Graph realize(const StretchedCliqueSpec& spec);

struct StretchedClique {
    Graph g;
    StretchedCliqueSpec spec;
};

struct StretchedCliqueOptions {
    bool hat_only = false;
    bool sparse_only = false;
    int omega_max = 0;  // 0: no clique-number filter
};

std::vector<StretchedClique> generate_stretched_cliques(int n, int d,
                                                        const StretchedCliqueOptions& opts);

}  // namespace lsplus
