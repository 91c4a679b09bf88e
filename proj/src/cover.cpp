#include "vcr/cover.hpp"

namespace vcr {

CoverPair CoverPair::make(const Graph& g, NodeSet alpha, NodeSet beta) {
    alpha = set_sorted(std::move(alpha));
    beta = set_sorted(std::move(beta));
    g.check_set(alpha);
    g.check_set(beta);
    if (!is_vertex_cover(g, alpha)) throw InvalidCoverPair("alpha is not a vertex cover");
    if (!is_vertex_cover(g, beta)) throw InvalidCoverPair("beta is not a vertex cover");
    CoverPair cp;
    cp.alpha = std::move(alpha);
    cp.beta = std::move(beta);
    cp.A = set_minus(cp.alpha, cp.beta);
    cp.B = set_minus(cp.beta, cp.alpha);
    cp.D = set_union(cp.A, cp.B);
    cp.X = set_intersect(cp.alpha, cp.beta);
    cp.M = std::max(cp.alpha.size(), cp.beta.size());
    cp.m = std::min(cp.alpha.size(), cp.beta.size());
    return cp;
}

CoverPair CoverPair::restricted(const Graph& g, const NodeSet& nodes) const {
    auto ind = induced_subgraph(g, nodes);
    NodeSet a, b;
    for (std::size_t i = 0; i < ind.nodes.size(); ++i) {
        if (set_contains(alpha, ind.nodes[i])) a.push_back(static_cast<int>(i));
        if (set_contains(beta, ind.nodes[i])) b.push_back(static_cast<int>(i));
    }
    return CoverPair::make(ind.graph, std::move(a), std::move(b));
}

CoreGraph core_graph(const Graph& g, const CoverPair& cp) {
    auto ind = induced_subgraph(g, cp.D);
    CoreGraph core;
    core.nodes = ind.nodes;
    for (std::size_t i = 0; i < ind.nodes.size(); ++i) {
        if (set_contains(cp.A, ind.nodes[i])) core.core_alpha.push_back(static_cast<int>(i));
        else core.core_beta.push_back(static_cast<int>(i));
    }
    core.graph = std::move(ind.graph);
    return core;
}

InducedGraph induced_subgraph(const Graph& g, const NodeSet& members) {
    InducedGraph out;
    out.nodes = members;
    out.to_local.assign(g.node_count(), -1);
    for (std::size_t i = 0; i < members.size(); ++i) out.to_local[members[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int v : members)
        for (int w : g.neighbors(v))
            if (w > v && out.to_local[w] >= 0) edges.push_back({out.to_local[v], out.to_local[w]});
    std::vector<std::int64_t> weights;
    if (g.has_weights()) {
        weights.reserve(members.size());
        for (int v : members) weights.push_back(g.weight(v));
    }
    out.graph = Graph(static_cast<int>(members.size()), edges, std::move(weights));
    return out;
}

}  // namespace vcr
