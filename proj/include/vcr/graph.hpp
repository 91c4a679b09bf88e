#ifndef VCR_GRAPH_HPP
#define VCR_GRAPH_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vcr/nodeset.hpp"

namespace vcr {

struct InvalidNodeId : std::invalid_argument {
    explicit InvalidNodeId(int id)
        : std::invalid_argument("invalid node id " + std::to_string(id)) {}
};
struct EmptyGraph : std::invalid_argument {
    EmptyGraph() : std::invalid_argument("graph has no edges") {}
};
struct InvalidParams : std::invalid_argument {
    explicit InvalidParams(const std::string& what) : std::invalid_argument(what) {}
};

// Undirected simple graph; nodes are 0..n-1, adjacency lists sorted.
// Optional positive node weights (weighted-cycle gadgets only).
// Immutable after construction; safe to share across threads read-only.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}
    Graph(int n, const std::vector<std::pair<int, int>>& edges,
          std::vector<std::int64_t> weights = {});

    int node_count() const { return static_cast<int>(adj_.size()); }
    std::int64_t edge_count() const { return edge_count_; }
    const NodeSet& neighbors(int v) const {
        check_node(v);
        return adj_[v];
    }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(int u, int v) const { return set_contains(neighbors(u), v); }

    bool has_weights() const { return !weights_.empty(); }
    std::int64_t weight(int v) const {
        check_node(v);
        return weights_.empty() ? 1 : weights_[v];
    }
    const std::vector<std::int64_t>& weights() const { return weights_; }

    std::vector<std::pair<int, int>> edges() const;

    void check_node(int v) const {
        if (v < 0 || v >= node_count()) throw InvalidNodeId(v);
    }
    void check_set(const NodeSet& s) const {
        for (int v : s) check_node(v);
    }

    std::string to_dot(const NodeSet* alpha = nullptr, const NodeSet* beta = nullptr) const;

private:
    std::vector<NodeSet> adj_;
    std::vector<std::int64_t> weights_;
    std::int64_t edge_count_ = 0;
};

bool is_vertex_cover(const Graph& g, const NodeSet& s);
bool is_independent_set(const Graph& g, const NodeSet& s);

// Simple witness-returning variants (first violated edge in scan order).
std::optional<std::pair<int, int>> uncovered_edge(const Graph& g, const std::vector<char>& in_s);
std::optional<std::pair<int, int>> dependent_edge(const Graph& g, const std::vector<char>& in_s);

bool is_connected(const Graph& g);
std::vector<NodeSet> connected_components(const Graph& g);

// Connected components of the subgraph induced by `members` (sorted).
std::vector<NodeSet> induced_components(const Graph& g, const NodeSet& members);

// Strong diameter of G[members]; requires the induced subgraph connected,
// returns -1 if it is not. Empty set has diameter 0 by convention.
int induced_diameter(const Graph& g, const NodeSet& members);

// Weak diameter: max over pairs of members of their distance in G.
int weak_diameter(const Graph& g, const NodeSet& members);

// Block-cut decomposition (Hopcroft-Tarjan, iterative).
struct BlockDecomposition {
    NodeSet cut_vertices;
    std::vector<NodeSet> blocks;  // node sets of biconnected components
};
BlockDecomposition biconnected_decomposition(const Graph& g);

// True iff every biconnected component is a single edge or a chordless cycle.
bool is_cactus(const Graph& g);

// Degeneracy of g; satisfies arboricity <= degeneracy <= 2*arboricity - 1.
// Used as the arboricity surrogate wherever a lambda seed is needed.
int arboricity_upper_bound(const Graph& g);

// membership vector helper
std::vector<char> membership(int n, const NodeSet& s);

}  // namespace vcr

#endif
