#ifndef VCR_ORACLE_HPP
#define VCR_ORACLE_HPP

#include "vcr/cover.hpp"

namespace vcr {

struct InstanceTooLarge : std::invalid_argument {
    explicit InstanceTooLarge(const std::string& what) : std::invalid_argument(what) {}
};

// Minimum cost over all (not necessarily monotone) sequential schedules from
// alpha to beta: binary search on the cost bound over single-flip
// reachability in the cover space. Guarded at 22 nodes.
std::int64_t optimal_sequential_cost(const Graph& g, const CoverPair& cp);

// Minimum cost over all schedules with at most `batches` batches, each batch
// an independent set. batches == 0 means unbounded (the absolute optimum any
// schedule of any length can achieve). Guarded at 14 nodes / 6 batches.
std::int64_t optimal_batch_cost(const Graph& g, const CoverPair& cp, int batches);

}  // namespace vcr

#endif
