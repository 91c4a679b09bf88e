#include "vcr/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_set>

namespace vcr {

namespace {

using Mask = std::uint32_t;

Mask to_mask(const NodeSet& s) {
    Mask m = 0;
    for (int v : s) m |= Mask{1} << v;
    return m;
}

struct MaskGraph {
    int n;
    std::vector<Mask> adj;
    Mask full;

    explicit MaskGraph(const Graph& g) : n(g.node_count()), adj(g.node_count(), 0) {
        for (int v = 0; v < n; ++v)
            for (int w : g.neighbors(v)) adj[v] |= Mask{1} << w;
        full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
    }
    bool independent(Mask s) const {
        Mask rest = s;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (adj[v] & s) return false;
        }
        return true;
    }
    bool cover(Mask s) const { return independent(full & ~s); }
};

bool sequential_reachable(const MaskGraph& mg, Mask start, Mask goal, std::int64_t s) {
    if (static_cast<std::int64_t>(std::popcount(start)) > s ||
        static_cast<std::int64_t>(std::popcount(goal)) > s)
        return false;
    std::vector<char> seen(std::size_t{1} << mg.n, 0);
    std::deque<Mask> q{start};
    seen[start] = 1;
    while (!q.empty()) {
        Mask cur = q.front();
        q.pop_front();
        if (cur == goal) return true;
        int size = std::popcount(cur);
        for (int v = 0; v < mg.n; ++v) {
            Mask bit = Mask{1} << v;
            Mask nxt = cur ^ bit;
            if (cur & bit) {
                // removal: stays a cover iff v's neighbors remain inside
                if ((mg.adj[v] & ~nxt) != 0) continue;
            } else {
                if (size + 1 > s) continue;
            }
            if (!seen[nxt]) {
                seen[nxt] = 1;
                q.push_back(nxt);
            }
        }
    }
    return false;
}

// all independent sets, including the empty one
std::vector<Mask> all_independent_sets(const MaskGraph& mg) {
    std::vector<Mask> out{0};
    for (int v = 0; v < mg.n; ++v) {
        std::size_t sz = out.size();
        Mask bit = Mask{1} << v;
        for (std::size_t i = 0; i < sz; ++i)
            if ((mg.adj[v] & out[i]) == 0 && out[i] < bit) out.push_back(out[i] | bit);
    }
    return out;
}

bool batch_reachable(const MaskGraph& mg, const std::vector<Mask>& flips, Mask start, Mask goal,
                     std::int64_t s, int batches) {
    if (static_cast<std::int64_t>(std::popcount(start)) > s ||
        static_cast<std::int64_t>(std::popcount(goal)) > s)
        return false;
    std::vector<char> seen(std::size_t{1} << mg.n, 0);
    std::vector<Mask> frontier{start};
    seen[start] = 1;
    int depth = 0;
    while (!frontier.empty()) {
        if (std::find(frontier.begin(), frontier.end(), goal) != frontier.end()) return true;
        if (batches > 0 && depth == batches) return false;
        std::vector<Mask> next;
        for (Mask cur : frontier) {
            int size = std::popcount(cur);
            for (Mask f : flips) {
                if (f == 0) continue;
                Mask nxt = cur ^ f;
                if (seen[nxt]) continue;
                // |V_i u V_{i+1}| = |cur| + |added|
                if (size + std::popcount(f & ~cur) > s) continue;
                if (!mg.cover(nxt)) continue;
                seen[nxt] = 1;
                next.push_back(nxt);
            }
        }
        frontier = std::move(next);
        ++depth;
    }
    return false;
}

}  // namespace

std::int64_t optimal_sequential_cost(const Graph& g, const CoverPair& cp) {
    if (g.node_count() > 22)
        throw InstanceTooLarge("optimal_sequential_cost limited to 22 nodes");
    MaskGraph mg(g);
    Mask a = to_mask(cp.alpha), b = to_mask(cp.beta);
    std::int64_t lo = cp.M;
    std::int64_t hi = static_cast<std::int64_t>(set_union(cp.alpha, cp.beta).size());
    while (lo < hi) {
        std::int64_t mid = (lo + hi) / 2;
        if (sequential_reachable(mg, a, b, mid)) hi = mid;
        else lo = mid + 1;
    }
    return lo;
}

std::int64_t optimal_batch_cost(const Graph& g, const CoverPair& cp, int batches) {
    if (g.node_count() > 14) throw InstanceTooLarge("optimal_batch_cost limited to 14 nodes");
    if (batches > 6) throw InstanceTooLarge("optimal_batch_cost limited to 6 batches");
    MaskGraph mg(g);
    auto flips = all_independent_sets(mg);
    Mask a = to_mask(cp.alpha), b = to_mask(cp.beta);
    std::int64_t lo = cp.M;
    std::int64_t hi = static_cast<std::int64_t>(set_union(cp.alpha, cp.beta).size());
    if (!batch_reachable(mg, flips, a, b, hi, batches)) return -1;  // infeasible in this budget
    while (lo < hi) {
        std::int64_t mid = (lo + hi) / 2;
        if (batch_reachable(mg, flips, a, b, mid, batches)) hi = mid;
        else lo = mid + 1;
    }
    return lo;
}

}  // namespace vcr
