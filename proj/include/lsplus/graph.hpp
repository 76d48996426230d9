#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lsplus {

// Simple undirected graph on up to 62 vertices, adjacency kept as one bit row
// per vertex. Vertices are 0-based internally; text formats (edge lists,
// figures) use 1-based labels and are translated at the boundary.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph complete(int n);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges_1based);

    int n() const { return n_; }
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    std::uint64_t neighbor_mask(int v) const { return adj_[v]; }
    int degree(int v) const;
    int min_degree() const;
    std::size_t edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // 0-based, u < v

    Graph complement() const;

    friend bool operator==(const Graph& a, const Graph& b) = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

class Graph6Error : public std::runtime_error {
public:
    explicit Graph6Error(const std::string& what) : std::runtime_error(what) {}
};

// Short-form graph6 (n <= 62). Decode accepts and strips the optional
// ">>graph6<<" header; encode emits the bare string.
Graph graph6_decode(std::string_view s);
std::string graph6_encode(const Graph& g);

// Edge-list text: one "i j" pair per line, 1-based, blank lines ignored.
Graph parse_edge_list(std::string_view text, int n);

Graph circulant(int n, const std::vector<int>& offsets);

// Induced subgraph on `keep` (0-based, strictly increasing); relabels
// compactly and order-preserving.
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);
Graph delete_vertices(const Graph& g, const std::vector<int>& drop);
Graph destroy_vertex(const Graph& g, int v);
// Vertices remaining after G (-) v, in increasing original label order.
std::vector<int> destroy_survivors(const Graph& g, int v);

// Vertex stretching: v is replaced by v0, v1, ..., vk where vj is joined to
// {v0} union parts[j-1]. Layout of the result: the other n-1 vertices keep
// their relative order at indices 0..n-2, then v0 sits at n-1 and vj at
// n-1+j.
struct StretchSpec {
    int vertex = 0;                        // 0-based
    std::vector<std::uint64_t> parts;      // subsets of the neighborhood of vertex

    bool is_proper(const Graph& g) const;  // every part a nonempty proper subset
};

Graph stretch_vertex(const Graph& g, const StretchSpec& spec);

// Canonical labeling by equitable refinement plus backtracking; two graphs
// get the same string iff they are isomorphic. Optional colors constrain the
// relabelings to color-preserving ones (classes ordered by color value).
std::string canonical_form(const Graph& g);
std::string canonical_form(const Graph& g, const std::vector<int>& colors);
bool isomorphic(const Graph& g, const Graph& h);

bool is_bipartite(const Graph& g);
int stability_number(const Graph& g);
int clique_number(const Graph& g);

// Max of sum(weights[v] : v in S) over stable sets S; weights may be
// negative, the empty set gives 0.
long long max_weight_stable_set(const Graph& g, const std::vector<long long>& weights);

// Recognizer via induced odd holes / odd antiholes of length >= 5.
bool is_perfect_small(const Graph& g);

bool is_vertex_transitive(const Graph& g);

struct CutClique {
    std::vector<int> clique;  // K, possibly empty (disconnected graph)
    std::vector<int> side1;   // S1
    std::vector<int> side2;   // S2
};

// Smallest clique whose removal disconnects the rest, lexicographic
// tie-break; nullopt when no such separator exists.
std::optional<CutClique> has_cut_clique(const Graph& g);

}  // namespace lsplus
