#ifndef VCR_DECOMP_HPP
#define VCR_DECOMP_HPP

#include <functional>

#include "vcr/rational.hpp"
#include "vcr/schedule.hpp"

namespace vcr {

struct InvalidClustering : std::invalid_argument {
    explicit InvalidClustering(const std::string& what) : std::invalid_argument(what) {}
};
struct NotCactus : std::invalid_argument {
    NotCactus() : std::invalid_argument("graph is not a cactus") {}
};
struct Disconnected : std::invalid_argument {
    Disconnected() : std::invalid_argument("graph is not connected") {}
};
struct CoreDecompositionInvalid : std::invalid_argument {
    explicit CoreDecompositionInvalid(const std::string& what) : std::invalid_argument(what) {}
};
struct ClusterScheduleInvalid : std::runtime_error {
    explicit ClusterScheduleInvalid(int cluster)
        : std::runtime_error("invalid schedule for cluster " + std::to_string(cluster)),
          cluster(cluster) {}
    int cluster;
};
struct GhostTouched : std::runtime_error {
    explicit GhostTouched(int node)
        : std::runtime_error("cluster schedule moved ghost node " + std::to_string(node)),
          node(node) {}
    int node;
};

// Partition into connected clusters with recorded strong diameters.
// Cluster ids equal the smallest member id (the leader).
struct Clustering {
    std::vector<NodeSet> clusters;  // sorted by leader id
    std::vector<int> diameters;

    int find(int v) const;  // index of the cluster containing v, -1 if none
};

Clustering singleton_clustering(const NodeSet& members);
Clustering clustering_from_assignment(const Graph& g, const std::vector<int>& cid,
                                      const NodeSet& members);

struct SeparatorDecomposition {
    std::vector<NodeSet> clusters;
    NodeSet separator;
    NodeSet ghost;
    int d = 0;  // weak-diameter bound; strong bound when `strong`
    bool strong = false;
};

struct DecompositionReport {
    struct Violation {
        std::string clause;
        std::string witness;
    };
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};
DecompositionReport validate_decomposition(const Graph& g, const SeparatorDecomposition& dec,
                                           std::int64_t x);

// GHS-flavored cluster merging: iterations t = 0..ceil(log2 ceil(1/eps)) of
// pseudoforest edge picks + MIS-based star merges among small clusters, then
// two absorption passes. Output clusters have diameter >= ceil(1/eps) or are
// whole components. `members` restricts the graph (distances inside G[members]).
Clustering merge_clusters(const Graph& g, const Clustering& initial, const Rational& eps);
Clustering merge_clusters_masked(const Graph& g, const NodeSet& members,
                                 const Clustering& initial, const Rational& eps);

// Explicit diameter cap the merge guarantees, used by the tests:
// max(d_in, 3*ceil(1/eps)+2) + 2 + 2*ceil(1/eps) per absorption pass.
int merge_diameter_bound(int d_in, const Rational& eps);

// Strong separator decomposition of a connected cactus: merge from
// singletons at eps/3, then move the smaller endpoint of every inter-cluster
// edge into S and split the remnants. |S| <= eps * n.
SeparatorDecomposition cactus_separator_decomp(const Graph& g, const Rational& eps);

// Same construction on one component of G[D] (original ids).
struct MaskedDecomposition {
    std::vector<NodeSet> clusters;
    NodeSet separator;
};
MaskedDecomposition cactus_separator_decomp_masked(const Graph& g, const NodeSet& members,
                                                   const Rational& eps);

// Lift a core decomposition (Z = empty) to all of G: core clusters plus
// singletons for V \ D, merged at eps, then S-nodes removed from clusters.
// Z = V \ D, cluster count <= max(1, 2 eps M).
struct LiftResult {
    SeparatorDecomposition dec;
    Clustering merged;  // pre-removal clustering, the path-cover test hook
};
LiftResult lift_decomposition(const Graph& g, const CoverPair& cp,
                              const MaskedDecomposition& core_dec, const Rational& eps);

// Full pipeline of the two steps above, per component of G[D].
LiftResult cactus_core_decomposition(const Graph& g, const CoverPair& cp, const Rational& eps);

// Sequential ball carving: grow balls in the residual graph until the shell
// is an eps-fraction, shell joins S. Strong clusters, Z empty, |S| <= eps n.
struct BallCarvingResult {
    SeparatorDecomposition dec;
    std::vector<std::pair<std::int64_t, std::int64_t>> growth;  // (|shell|, |ball|) per cluster
    int max_radius = 0;
};
BallCarvingResult ball_carving(const Graph& g, const Rational& eps, const NodeSet& order);

// Batch schedule from a separator decomposition: S&B first, alpha-heavy
// clusters' schedules unionized, then the rest, S&A last. The scheduler
// returns a monotone schedule on G[cluster] between the restricted covers,
// in original ids; schedules are padded to a common length.
using ClusterScheduler =
    std::function<Schedule(const Graph&, const CoverPair&, const NodeSet& cluster)>;
Schedule schedule_from_decomposition(const Graph& g, const CoverPair& cp,
                                     const SeparatorDecomposition& dec,
                                     const ClusterScheduler& scheduler);

// Default per-cluster scheduler: cactus recursion + compression at eps.
ClusterScheduler cactus_compress_scheduler(const Rational& eps);

}  // namespace vcr

#endif
