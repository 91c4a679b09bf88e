#ifndef VCR_SEQ_SCHEDULES_HPP
#define VCR_SEQ_SCHEDULES_HPP

#include <functional>

#include "vcr/schedule.hpp"

namespace vcr {

struct NotCactusCore : std::invalid_argument {
    NotCactusCore() : std::invalid_argument("core graph is not a cactus") {}
};
struct SeparatorContractViolated : std::logic_error {
    explicit SeparatorContractViolated(int level)
        : std::logic_error("separator contract violated at level " + std::to_string(level)),
          level(level) {}
    int level;
};
struct PartitionNotDegreeOrdered : std::logic_error {
    PartitionNotDegreeOrdered(int u, int v)
        : std::logic_error("partition not degree ordered: deg(" + std::to_string(u) + ") > deg(" +
                           std::to_string(v) + ") across parts"),
          witness(u, v) {}
    std::pair<int, int> witness;
};
struct InvalidPartition : std::invalid_argument {
    explicit InvalidPartition(const std::string& what) : std::invalid_argument(what) {}
};

// Monotone sequential schedule of cost <= M+2 for cactus cores (M+1 on
// forests). Recursion on G[D]: concatenate components in delta order, split
// at a cut vertex, base cases cycle / <=2 nodes; covers are lifted by X.
Schedule cactus_schedule(const Graph& g, const CoverPair& cp);

// Core-level variant used by per-cluster scheduling: schedule on
// G[members & D] from A & members to B & members, covers in original ids.
// `members` must induce a cactus subgraph of the core.
Schedule cactus_core_schedule(const Graph& g, const CoverPair& cp, const NodeSet& core_members);

// finder(g, members) -> (separator, side1, side2), a partition of members
// with no side1-side2 edge and max(|side1|,|side2|) <= 2|members|/3.
struct SeparatorSplit {
    NodeSet separator;
    NodeSet side1;
    NodeSet side2;
};
using SeparatorFinder = std::function<SeparatorSplit(const Graph&, const NodeSet&)>;

SeparatorSplit exhaustive_separator_finder(const Graph& g, const NodeSet& members);
SeparatorSplit bfs_layer_separator_finder(const Graph& g, const NodeSet& members);

// Recursive separator schedule on G[D]; cost <= M + sum of separator sizes
// along any root-to-leaf recursion path. The per-call contract of `finder`
// is checked and violations raise SeparatorContractViolated.
Schedule separable_schedule(const Graph& g, const CoverPair& cp, const SeparatorFinder& finder);

// Degree-ascending greedy of cost <= |X| + |A| + |B| - |A||B|/h + 1.
Schedule greedy_schedule(const Graph& g, const CoverPair& cp);

// The five-cover schedule with xi = floor(|A||B| / (h+|A|)) lowest-degree
// alpha-core nodes moved late; cost <= |X| + |A| + |B| - xi' + 1.
Schedule four_batch_schedule(const Graph& g, const CoverPair& cp);

// Batch schedule from a degree-ordered partition of A: per part, add the
// part's un-added B-neighbors, then remove the part; isolated B-nodes are
// appended in a trailing batch.
Schedule degree_ordered_batch_schedule(const Graph& g, const CoverPair& cp,
                                       const std::vector<NodeSet>& partition);

// Degree of v inside G[D].
int core_degree(const Graph& g, const CoverPair& cp, int v);

}  // namespace vcr

#endif
