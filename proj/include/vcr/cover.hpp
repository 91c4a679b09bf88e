#ifndef VCR_COVER_HPP
#define VCR_COVER_HPP

#include "vcr/graph.hpp"

namespace vcr {

struct InvalidCoverPair : std::invalid_argument {
    explicit InvalidCoverPair(const std::string& what) : std::invalid_argument(what) {}
};

// The two endpoint covers plus the derived sets everything else works with:
//   A = alpha \ beta, B = beta \ alpha, D = alpha ^ beta, X = alpha & beta.
struct CoverPair {
    NodeSet alpha;
    NodeSet beta;
    NodeSet A;
    NodeSet B;
    NodeSet D;
    NodeSet X;
    std::int64_t M = 0;
    std::int64_t m = 0;

    static CoverPair make(const Graph& g, NodeSet alpha, NodeSet beta);

    // restriction of the pair to a node subset (covers of the induced subgraph)
    CoverPair restricted(const Graph& g, const NodeSet& nodes) const;
};

// G[D] with an id-remapping table back to g. core.nodes[i] is the original
// id of core node i; the core keeps g's weights.
struct CoreGraph {
    Graph graph;
    NodeSet nodes;      // core id -> original id
    NodeSet core_alpha; // core-side ids of A (original-id order remapped)
    NodeSet core_beta;  // core-side ids of B
};
CoreGraph core_graph(const Graph& g, const CoverPair& cp);

// Induced subgraph over an arbitrary sorted node set (same remap scheme).
struct InducedGraph {
    Graph graph;
    NodeSet nodes;
    std::vector<int> to_local;  // original id -> local id or -1
};
InducedGraph induced_subgraph(const Graph& g, const NodeSet& members);

}  // namespace vcr

#endif
