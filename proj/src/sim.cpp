#include "vcr/sim.hpp"

#include <algorithm>
#include <deque>

#include "vcr/generators.hpp"

namespace vcr {

SimulationTrace run_simulation(const Graph& g, const ProgramFactory& factory,
                               const SimOptions& opt) {
    const int n = g.node_count();
    // port p of node u leads to neighbors(u)[p]; reverse-port lookup
    std::vector<std::vector<int>> back_port(n);
    for (int u = 0; u < n; ++u) {
        back_port[u].resize(g.degree(u));
        for (int p = 0; p < g.degree(u); ++p) {
            int v = g.neighbors(u)[p];
            const auto& nv = g.neighbors(v);
            back_port[u][p] =
                static_cast<int>(std::lower_bound(nv.begin(), nv.end(), u) - nv.begin());
        }
    }
    std::vector<std::unique_ptr<NodeProgram>> progs(n);
    std::vector<std::int64_t> wake(n, 1);
    std::vector<std::vector<std::pair<int, Message>>> inbox(n), next_inbox(n);
    for (int v = 0; v < n; ++v) {
        progs[v] = factory(v);
        progs[v]->init(g.degree(v));
    }
    SimulationTrace trace;
    trace.outputs.resize(n);
    std::int64_t done = 0;
    std::vector<char> finished(n, 0);
    std::vector<std::pair<int, Message>> outbox;
    for (std::int64_t r = 1;; ++r) {
        if (r > opt.max_rounds) {
            if (opt.throw_on_limit) throw RoundLimitExceeded(opt.max_rounds);
            trace.rounds_used = opt.max_rounds;
            return trace;
        }
        std::int64_t delivered = 0, words = 0;
        bool any_active = false;
        for (int v = 0; v < n; ++v) {
            if (inbox[v].empty() && wake[v] > r) continue;
            any_active = true;
            std::sort(inbox[v].begin(), inbox[v].end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            delivered += static_cast<std::int64_t>(inbox[v].size());
            for (const auto& [p, m] : inbox[v]) {
                (void)p;
                words += static_cast<std::int64_t>(m.payload.size());
            }
            NodeIo io;
            io.ports = g.degree(v);
            outbox.clear();
            io.outbox = &outbox;
            io.inbox = &inbox[v];
            std::int64_t w;
            try {
                w = progs[v]->step(r, io);
            } catch (const std::exception& e) {
                throw ProgramFault(v, r, e.what());
            }
            wake[v] = w == 0 ? r + 1 : w;
            inbox[v].clear();
            for (auto& [port, msg] : outbox) {
                if (port < 0 || port >= g.degree(v)) throw ProgramFault(v, r, "bad port");
                int target = g.neighbors(v)[port];
                next_inbox[target].push_back({back_port[v][port], std::move(msg)});
            }
            if (!finished[v] && progs[v]->has_output()) {
                finished[v] = 1;
                trace.outputs[v] = progs[v]->output();
                ++done;
            }
        }
        trace.messages_per_round.push_back(delivered);
        trace.message_words_per_round.push_back(words);
        std::swap(inbox, next_inbox);
        bool mail_pending = false;
        for (int v = 0; v < n && !mail_pending; ++v) mail_pending = !inbox[v].empty();
        if (done == n) {
            trace.rounds_used = r - 1;
            trace.all_output = true;
            return trace;
        }
        if (!mail_pending) {
            // no traffic: next activity is the earliest wake
            std::int64_t next_wake = kWakeNever;
            for (int v = 0; v < n; ++v)
                if (!finished[v] || wake[v] != kWakeNever) next_wake = std::min(next_wake, wake[v]);
            if (next_wake == kWakeNever) {
                if (!any_active && done < n)
                    throw ProgramFault(-1, r, "stalled with missing outputs");
                trace.rounds_used = r;
                return trace;
            }
        }
    }
}

MutableInstance identity_instance(const Graph& g, const CoverPair& cp) {
    MutableInstance inst;
    inst.graph = &g;
    inst.ids.resize(g.node_count());
    for (int v = 0; v < g.node_count(); ++v) inst.ids[v] = v;
    inst.in_alpha = membership(g.node_count(), cp.alpha);
    inst.in_beta = membership(g.node_count(), cp.beta);
    return inst;
}

AuditReport locality_audit(const Graph& g, const CoverPair& cp, const FactoryBuilder& builder,
                           std::int64_t T, int probes, std::uint64_t seed,
                           const SimOptions& opt) {
    AuditReport rep;
    auto base_inst = identity_instance(g, cp);
    auto base = run_simulation(g, builder(base_inst), opt);
    std::mt19937_64 eng(seed);
    const int n = g.node_count();
    for (int k = 0; k < probes; ++k) {
        int probe = static_cast<int>(rng_below(eng, n));
        // T-hop ball around the probe
        std::vector<std::int64_t> dist(n, -1);
        std::deque<int> q{probe};
        dist[probe] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            if (dist[u] == T) continue;
            for (int w : g.neighbors(u))
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    q.push_back(w);
                }
        }
        NodeSet outside;
        for (int v = 0; v < n; ++v)
            if (dist[v] < 0) outside.push_back(v);
        ++rep.probes_run;
        if (outside.empty()) continue;  // the ball covers the graph; nothing to mutate

        // mutation 1: relabel every id outside the ball
        auto inst = identity_instance(g, cp);
        for (int v : outside) inst.ids[v] += n;
        auto got = run_simulation(g, builder(inst), opt);
        if (got.outputs[probe] != base.outputs[probe])
            rep.flagged.push_back({probe, "relabel-outside"});

        // mutation 2: flip the cover bits of one far node
        auto inst2 = identity_instance(g, cp);
        int far = outside[rng_below(eng, outside.size())];
        inst2.in_alpha[far] = !inst2.in_alpha[far];
        inst2.in_beta[far] = !inst2.in_beta[far];
        auto got2 = run_simulation(g, builder(inst2), opt);
        if (got2.outputs[probe] != base.outputs[probe])
            rep.flagged.push_back({probe, "flip-far-bits"});
    }
    return rep;
}

}  // namespace vcr
