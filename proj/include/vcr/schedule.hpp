#ifndef VCR_SCHEDULE_HPP
#define VCR_SCHEDULE_HPP

#include <optional>

#include "vcr/cover.hpp"
#include "vcr/rational.hpp"

namespace vcr {

// A reconfiguration schedule stored as its full cover sequence V_0..V_l.
// Batches are derived: E_i = V_i ^ V_{i+1}. Empty batches may be stored
// (parallel composition produces them); metrics report both counts.
struct Schedule {
    std::vector<NodeSet> covers;

    int stored_batches() const { return static_cast<int>(covers.size()) - 1; }
    NodeSet batch(int i) const { return set_symdiff(covers[i], covers[i + 1]); }
};

Schedule reverse(const Schedule& s);

struct ScheduleMetrics {
    std::int64_t length = 0;         // non-empty batches
    std::int64_t stored_length = 0;  // stored batches, including empty ones
    std::int64_t cost = 0;           // max over |V_i u V_{i+1}|, and |V_0|, |V_l|
    std::int64_t weighted_cost = 0;
    bool monotone = false;
    std::int64_t M = 0;
    std::int64_t additive_slack = 0;  // cost - M

    // cost <= eta*M + c
    bool approximates(const Rational& eta, std::int64_t c) const {
        return Rational(cost) <= eta * Rational(M) + Rational(c);
    }
};

enum class ScheduleError {
    None,
    EndpointsMismatch,
    NotACover,
    BatchNotIndependent,
};

struct ValidationResult {
    ScheduleError error = ScheduleError::None;
    int index = -1;                    // earliest violating cover/batch index
    std::pair<int, int> witness{-1, -1};  // violating edge where applicable
    ScheduleMetrics metrics;

    bool ok() const { return error == ScheduleError::None; }
    std::string describe() const;
};

// Total validation against the three schedule properties; never throws on
// bad schedules, only on malformed inputs (out-of-range ids).
ValidationResult validate(const Graph& g, const CoverPair& cp, const Schedule& s);

// Components ordered ascending by |beta & C| - |alpha & C|, ties by smallest
// contained node id; any adjacent pair in this order satisfies the
// concatenation inequality.
std::vector<int> order_components(const CoverPair& cp, const std::vector<NodeSet>& components);

struct PreconditionViolated : std::logic_error {
    explicit PreconditionViolated(const std::string& clause)
        : std::logic_error("precondition violated: " + clause), clause(clause) {}
    std::string clause;
};

// Concatenation of two schedules across a separated vertex partition.
// s1/s2 are schedules on G[part1], G[part2] in local ids of the induced
// subgraphs (induced_subgraph(g, part)); the result lives on g.
Schedule concat_separated(const Graph& g, const CoverPair& cp, const NodeSet& part1,
                          const NodeSet& part2, const Schedule& s1, const Schedule& s2);

// Helpers shared by the constructors.
Schedule trivial_schedule(const NodeSet& alpha);  // single cover, zero batches
Schedule lift_schedule(const Schedule& core_sched, const NodeSet& add, const NodeSet& remap);

}  // namespace vcr

#endif
