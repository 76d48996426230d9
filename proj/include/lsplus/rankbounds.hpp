#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lsplus/graph.hpp"
#include "lsplus/numerics.hpp"

namespace lsplus {

// Upper-bound rules, in the order they are tried. Lower bounds come from
// certificate packages, never from this engine.
enum class Rule {
    bipartite,           // rank 0 exactly for bipartite graphs
    perfect,             // perfect graphs have rank <= 1
    third_of_n,          // rank <= floor(n/3)
    assumption,          // caller-registered bound for this canonical form
    min_degree,          // a graph on 3m vertices with min degree >= 3 is not m-minimal
    cut_clique,          // max over the two clique-separated parts
    destruction,         // 1 + max_i bound(G (-) i)
    deletion,            // 1 + min_i bound(G - i)
};

std::string to_string(Rule r);

struct TraceNode {
    Rule rule;
    std::string canon;   // canonical graph6 of the graph this node bounds
    int bound = 0;
    std::string note;
    std::vector<std::size_t> children;  // indices into ProofTrace::nodes
};

struct ProofTrace {
    std::vector<TraceNode> nodes;
    std::size_t root = 0;
};

std::string format_trace(const ProofTrace& trace);

struct RankInterval {
    std::optional<int> lower;
    std::optional<int> upper;
    std::vector<std::string> sources;
};

struct RankBoundOptions {
    int depth_budget = 3;            // recursion allowance for the two hierarchy rules
    int perfect_limit = 16;          // largest n the perfection recognizer is run on
    bool use_min_degree_rule = true;
    std::map<std::string, int> assumptions;  // canonical form -> assumed upper bound
};

struct RankBoundResult {
    int bound = 0;
    ProofTrace trace;
};

RankBoundResult rank_upper_bound(const Graph& g, const RankBoundOptions& opts = {});

// Shared memo across a catalog run; key is (canonical form, budget).
class RankBoundEngine {
public:
    explicit RankBoundEngine(RankBoundOptions opts = {}) : opts_(std::move(opts)) {}

    RankBoundResult bound(const Graph& g);

private:
    std::size_t solve(const Graph& g, int budget, ProofTrace& trace);

    RankBoundOptions opts_;
    std::map<std::pair<std::string, int>, std::pair<int, TraceNode>> memo_;
};

struct CatalogRow {
    std::string graph6;   // input line as given
    bool parsed = false;
    int n = 0;
    int bound = -1;
    Rule rule = Rule::third_of_n;
    // k-regular with k outside [3, n+2-3*ell]: cannot have rank ell at all
    bool degree_excluded = false;
    ProofTrace trace;
    std::string error;
};

struct CatalogReport {
    std::vector<CatalogRow> rows;
    std::map<std::string, int> rule_counts;
};

CatalogReport classify_vt_candidates(const std::vector<std::string>& catalog, int ell,
                                     const RankBoundOptions& opts = {});

// Admissible degree interval [3, n+2-3*ell] for a connected k-regular
// vertex-transitive graph of rank ell >= 2; nullopt when empty.
std::optional<std::pair<int, int>> vt_degree_filter(int n, int ell);

struct AlphaLsBound {
    Rat min_degree_bound;            // n - k
    std::optional<Rat> halved_bound; // (n - k + 1)/2 when the matching premise holds
    Rat best;
    bool halved_applies = false;
};

AlphaLsBound alpha_ls1_bound(const Graph& g);

}  // namespace lsplus
