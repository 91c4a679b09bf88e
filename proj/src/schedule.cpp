#include "vcr/schedule.hpp"

#include <algorithm>
#include <numeric>

namespace vcr {

Schedule reverse(const Schedule& s) {
    Schedule out;
    out.covers.assign(s.covers.rbegin(), s.covers.rend());
    return out;
}

std::string ValidationResult::describe() const {
    switch (error) {
        case ScheduleError::None: return "ok";
        case ScheduleError::EndpointsMismatch:
            return "EndpointsMismatch at cover " + std::to_string(index);
        case ScheduleError::NotACover:
            return "NotACover at cover " + std::to_string(index) + ", edge (" +
                   std::to_string(witness.first) + "," + std::to_string(witness.second) + ")";
        case ScheduleError::BatchNotIndependent:
            return "BatchNotIndependent at batch " + std::to_string(index) + ", edge (" +
                   std::to_string(witness.first) + "," + std::to_string(witness.second) + ")";
    }
    return "?";
}

ValidationResult validate(const Graph& g, const CoverPair& cp, const Schedule& s) {
    ValidationResult res;
    if (s.covers.empty()) {
        res.error = ScheduleError::EndpointsMismatch;
        res.index = 0;
        return res;
    }
    for (const auto& c : s.covers) g.check_set(c);
    if (s.covers.front() != cp.alpha) {
        res.error = ScheduleError::EndpointsMismatch;
        res.index = 0;
        return res;
    }
    if (s.covers.back() != cp.beta) {
        res.error = ScheduleError::EndpointsMismatch;
        res.index = s.stored_batches();
        return res;
    }
    for (std::size_t i = 0; i < s.covers.size(); ++i) {
        auto in = membership(g.node_count(), s.covers[i]);
        if (auto e = uncovered_edge(g, in)) {
            res.error = ScheduleError::NotACover;
            res.index = static_cast<int>(i);
            res.witness = *e;
            return res;
        }
    }
    std::vector<int> flips(g.node_count(), 0);
    std::int64_t cost = std::max(s.covers.front().size(), s.covers.back().size());
    std::int64_t wcost = 0;
    auto wsum = [&](const NodeSet& set) {
        std::int64_t w = 0;
        for (int v : set) w += g.weight(v);
        return w;
    };
    wcost = std::max(wsum(s.covers.front()), wsum(s.covers.back()));
    std::int64_t nonempty = 0;
    for (int i = 0; i < s.stored_batches(); ++i) {
        NodeSet batch = s.batch(i);
        if (!batch.empty()) ++nonempty;
        auto in = membership(g.node_count(), batch);
        if (auto e = dependent_edge(g, in)) {
            res.error = ScheduleError::BatchNotIndependent;
            res.index = i;
            res.witness = *e;
            return res;
        }
        for (int v : batch) ++flips[v];
        NodeSet un = set_union(s.covers[i], s.covers[i + 1]);
        cost = std::max(cost, static_cast<std::int64_t>(un.size()));
        wcost = std::max(wcost, wsum(un));
    }
    res.metrics.length = nonempty;
    res.metrics.stored_length = s.stored_batches();
    res.metrics.cost = cost;
    res.metrics.weighted_cost = wcost;
    res.metrics.monotone = std::all_of(flips.begin(), flips.end(), [](int f) { return f <= 1; });
    res.metrics.M = cp.M;
    res.metrics.additive_slack = cost - cp.M;
    return res;
}

std::vector<int> order_components(const CoverPair& cp, const std::vector<NodeSet>& components) {
    std::vector<int> order(components.size());
    std::iota(order.begin(), order.end(), 0);
    auto delta = [&](int i) {
        return static_cast<std::int64_t>(set_intersect(cp.beta, components[i]).size()) -
               static_cast<std::int64_t>(set_intersect(cp.alpha, components[i]).size());
    };
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        auto di = delta(i), dj = delta(j);
        if (di != dj) return di < dj;
        int mi = components[i].empty() ? -1 : components[i].front();
        int mj = components[j].empty() ? -1 : components[j].front();
        return mi < mj;
    });
    return order;
}

Schedule trivial_schedule(const NodeSet& alpha) { return Schedule{{alpha}}; }

Schedule lift_schedule(const Schedule& core_sched, const NodeSet& add, const NodeSet& remap) {
    Schedule out;
    out.covers.reserve(core_sched.covers.size());
    for (const auto& c : core_sched.covers) {
        NodeSet mapped;
        mapped.reserve(c.size());
        for (int v : c) mapped.push_back(remap[v]);
        out.covers.push_back(set_union(set_sorted(std::move(mapped)), add));
    }
    return out;
}

namespace {

bool schedule_monotone(const Schedule& s, int n) {
    std::vector<int> flips(n, 0);
    for (int i = 0; i < s.stored_batches(); ++i)
        for (int v : s.batch(i))
            if (++flips[v] > 1) return false;
    return true;
}

}  // namespace

Schedule concat_separated(const Graph& g, const CoverPair& cp, const NodeSet& part1,
                          const NodeSet& part2, const Schedule& s1, const Schedule& s2) {
    // partition check
    if (!set_intersect(part1, part2).empty())
        throw PreconditionViolated("parts overlap");
    NodeSet all(g.node_count());
    std::iota(all.begin(), all.end(), 0);
    if (set_union(part1, part2) != all)
        throw PreconditionViolated("parts do not cover V");
    // separation: no edge between part1 & alpha and part2
    auto in2 = membership(g.node_count(), part2);
    for (int u : set_intersect(part1, cp.alpha))
        for (int w : g.neighbors(u))
            if (in2[w]) throw PreconditionViolated("edge between part1&alpha and part2");

    auto ind1 = induced_subgraph(g, part1);
    auto ind2 = induced_subgraph(g, part2);
    auto cp1 = cp.restricted(g, part1);
    auto cp2 = cp.restricted(g, part2);
    // balance inequality |beta1|-|alpha1| <= |beta2|-|alpha2|+1
    auto d1 = static_cast<std::int64_t>(cp1.beta.size()) - static_cast<std::int64_t>(cp1.alpha.size());
    auto d2 = static_cast<std::int64_t>(cp2.beta.size()) - static_cast<std::int64_t>(cp2.alpha.size());
    if (d1 > d2 + 1) throw PreconditionViolated("balance");
    auto v1 = validate(ind1.graph, cp1, s1);
    if (!v1.ok()) throw PreconditionViolated("s1 invalid: " + v1.describe());
    auto v2 = validate(ind2.graph, cp2, s2);
    if (!v2.ok()) throw PreconditionViolated("s2 invalid: " + v2.describe());
    if (!schedule_monotone(s1, ind1.graph.node_count()) ||
        !schedule_monotone(s2, ind2.graph.node_count()))
        throw PreconditionViolated("schedules must be monotone");

    // phase 1: part2 parked at alpha&part2; phase 2: part1 parked at beta&part1
    NodeSet alpha2 = set_intersect(cp.alpha, part2);
    NodeSet beta1 = set_intersect(cp.beta, part1);
    Schedule out;
    for (const auto& c : s1.covers) {
        NodeSet mapped;
        for (int v : c) mapped.push_back(ind1.nodes[v]);
        out.covers.push_back(set_union(set_sorted(std::move(mapped)), alpha2));
    }
    for (std::size_t i = 1; i < s2.covers.size(); ++i) {
        NodeSet mapped;
        for (int v : s2.covers[i]) mapped.push_back(ind2.nodes[v]);
        out.covers.push_back(set_union(set_sorted(std::move(mapped)), beta1));
    }
    return out;
}

}  // namespace vcr
