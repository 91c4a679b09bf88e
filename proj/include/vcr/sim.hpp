#ifndef VCR_SIM_HPP
#define VCR_SIM_HPP

#include <cstdint>
#include <functional>
#include <memory>

#include "vcr/cover.hpp"
#include "vcr/rational.hpp"

namespace vcr {

struct RoundLimitExceeded : std::runtime_error {
    explicit RoundLimitExceeded(std::int64_t limit)
        : std::runtime_error("round limit " + std::to_string(limit) + " exceeded") {}
};
struct ProgramFault : std::runtime_error {
    ProgramFault(int node, std::int64_t round, const std::string& what)
        : std::runtime_error("node " + std::to_string(node) + " faulted at round " +
                             std::to_string(round) + ": " + what) {}
};

// One message on one edge; flat int64 payload, first entry tags the content.
struct Message {
    std::vector<std::int64_t> payload;
};

// Port-level view handed to programs each round. Ports are indexed by
// ascending neighbor; everything logical (ids, inputs) reaches programs via
// their factory, so audits can relabel the world without touching the engine.
struct NodeIo {
    int ports = 0;
    std::vector<std::pair<int, Message>>* outbox = nullptr;
    const std::vector<std::pair<int, Message>>* inbox = nullptr;

    void send(int port, Message m) { outbox->push_back({port, std::move(m)}); }
    void send_all(const Message& m) {
        for (int p = 0; p < ports; ++p) outbox->push_back({p, m});
    }
};

// Sleep until this round unless a message arrives earlier.
constexpr std::int64_t kWakeNever = INT64_MAX;

class NodeProgram {
public:
    virtual ~NodeProgram() = default;
    virtual void init(int ports) = 0;
    virtual std::int64_t step(std::int64_t round, NodeIo& io) = 0;
    virtual bool has_output() const = 0;
    virtual std::vector<std::int64_t> output() const = 0;
};

using ProgramFactory = std::function<std::unique_ptr<NodeProgram>(int node)>;

struct SimulationTrace {
    std::int64_t rounds_used = 0;
    std::vector<std::vector<std::int64_t>> outputs;  // per node
    std::vector<std::int64_t> messages_per_round;
    std::vector<std::int64_t> message_words_per_round;
    bool all_output = false;
};

struct SimOptions {
    std::int64_t max_rounds = 1'000'000;
    bool throw_on_limit = true;
};

// Round-synchronous lockstep: all step() calls of round r consume only
// round r-1 outboxes. Deterministic: nodes step in index order, inboxes are
// sorted by port. rounds_used counts communication rounds (a node outputting
// at its first step without any traffic reports 0).
SimulationTrace run_simulation(const Graph& g, const ProgramFactory& factory,
                               const SimOptions& opt = {});

// The instance as a factory sees it: possibly relabeled ids and flipped
// cover bits; graph structure fixed.
struct MutableInstance {
    const Graph* graph = nullptr;
    std::vector<std::int64_t> ids;
    std::vector<char> in_alpha;
    std::vector<char> in_beta;
};
using FactoryBuilder = std::function<ProgramFactory(const MutableInstance&)>;

MutableInstance identity_instance(const Graph& g, const CoverPair& cp);

// Re-runs with ids and inputs mutated outside each probe's T-hop ball and
// flags probes whose output changed; clean for every truly local program.
struct AuditReport {
    struct Flag {
        int probe;
        std::string mutation;
    };
    std::vector<Flag> flagged;
    int probes_run = 0;
    bool clean() const { return flagged.empty(); }
};
AuditReport locality_audit(const Graph& g, const CoverPair& cp, const FactoryBuilder& builder,
                           std::int64_t T, int probes, std::uint64_t seed,
                           const SimOptions& opt = {});

}  // namespace vcr

#endif
