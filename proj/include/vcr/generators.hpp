#ifndef VCR_GENERATORS_HPP
#define VCR_GENERATORS_HPP

#include <cstdint>
#include <map>
#include <random>
#include <string>

#include "vcr/cover.hpp"

namespace vcr {

struct Instance {
    Graph graph;
    CoverPair pair;
};

// Unbiased uniform draw in [0, k); rejection on raw engine output so results
// do not depend on the standard library's distribution implementation.
std::uint64_t rng_below(std::mt19937_64& eng, std::uint64_t k);

// P_{2n}; alpha = odd positions, beta = even positions (the two sides).
Instance gen_path_pair(std::int64_t n);

// Two disjoint stars K_{1,t}; alpha = {center of star 1} + leaves of star 2.
Instance gen_two_stars(std::int64_t t);

// n-node weighted cycle of n/(4t+2) segments; heavy nodes of weight c*t at
// positions 2t+1 and 2t+2 of each segment; alpha = V_odd, beta = V_even.
Instance gen_weighted_cycle(std::int64_t n, std::int64_t t, std::int64_t c);

// Unweighted reduction graph of the weighted cycle: each node becomes w(v)
// copies, each edge a complete bipartite graph between the copy sets.
Instance gen_reduction_graph(std::int64_t n, std::int64_t t, std::int64_t c);

// C_n (n even); alpha = even ids, beta = odd ids.
Instance gen_even_cycle(std::int64_t n);

// Random graph families. Cover rule for tree/cactus instances: the graph is
// built bipartite (even cycles only), alpha/beta are the two color classes;
// `pad` nodes are added to both covers (they move into X = alpha & beta), and
// `ghosts` extra nodes are attached to padded nodes, landing outside both
// covers. pad > 0 is required for ghosts > 0.
struct CactusOptions {
    std::int64_t pad = 0;
    std::int64_t ghosts = 0;
    bool backbone = false;   // favor the last attachment point: long, path-like
    int cycle_percent = 50;  // chance of attaching a pendant cycle vs an edge
};
Instance gen_random_cactus(std::int64_t n, std::uint64_t seed, const CactusOptions& opt = {});
Instance gen_random_tree(std::int64_t n, std::uint64_t seed, std::int64_t pad = 0);

// Graph-only cactus used by structural tests; odd cycles allowed.
Graph random_cactus_graph(std::int64_t n, std::uint64_t seed, bool even_only,
                          bool backbone = false, int cycle_percent = 50);

// Random bipartite core with m edges; alpha = left side, beta = right side.
Instance gen_random_bipartite(std::int64_t na, std::int64_t nb, std::int64_t m,
                              std::uint64_t seed);

// Bipartite core of arboricity <= lambda built as a union of lambda forests;
// `hubs` right-side nodes take a star layer so that high-degree beta nodes
// exist (degree up to ~na/hubs).
Instance gen_bounded_arb_bipartite(std::int64_t na, std::int64_t nb, std::int64_t lambda,
                                   std::int64_t hubs, std::uint64_t seed);

// CLI dispatcher. Families: path-pair, two-stars, weighted-cycle,
// reduction-graph, even-cycle, random-tree, random-cactus, random-bipartite,
// bounded-arb-bipartite. Unknown families / bad params -> InvalidParams.
Instance generate(const std::string& family, const std::map<std::string, std::int64_t>& params,
                  std::uint64_t seed);

}  // namespace vcr

#endif
