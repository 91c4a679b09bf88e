#include "vcr/seq_schedules.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace vcr {

namespace {

// sequential schedules are built as event lists: (node, added?)
using Events = std::vector<std::pair<int, bool>>;

struct CoreView {
    const Graph* g;
    const std::vector<char>* inA;  // indexed by original node id
    const std::vector<char>* inB;

    bool a(int v) const { return (*inA)[v]; }
    bool b(int v) const { return (*inB)[v]; }
    std::int64_t delta(const NodeSet& set) const {
        std::int64_t d = 0;
        for (int v : set) d += b(v) ? 1 : a(v) ? -1 : 0;
        return d;
    }
};

void concat_by_delta(const CoreView& cv, std::vector<std::pair<NodeSet, Events>>& parts,
                     Events& out) {
    std::sort(parts.begin(), parts.end(), [&](const auto& x, const auto& y) {
        auto dx = cv.delta(x.first), dy = cv.delta(y.first);
        if (dx != dy) return dx < dy;
        int mx = x.first.empty() ? -1 : x.first.front();
        int my = y.first.empty() ? -1 : y.first.front();
        return mx < my;
    });
    for (auto& p : parts)
        out.insert(out.end(), p.second.begin(), p.second.end());
}

// components of G[members], sorted sets, deterministic order
std::vector<NodeSet> comps_of(const CoreView& cv, const NodeSet& members) {
    return induced_components(*cv.g, members);
}

void cactus_rec(const CoreView& cv, const NodeSet& members, Events& out);

void cactus_connected(const CoreView& cv, const NodeSet& members, Events& out) {
    const Graph& g = *cv.g;
    if (members.size() == 1) {
        int v = members[0];
        out.push_back({v, cv.b(v)});
        return;
    }
    if (members.size() == 2) {
        int va = cv.a(members[0]) ? members[0] : members[1];
        int vb = cv.b(members[0]) ? members[0] : members[1];
        out.push_back({vb, true});
        out.push_back({va, false});
        return;
    }
    auto ind = induced_subgraph(g, members);
    auto blocks = biconnected_decomposition(ind.graph);
    if (blocks.cut_vertices.empty()) {
        // 2-connected cactus component: must be a chordless cycle
        if (ind.graph.edge_count() != static_cast<std::int64_t>(members.size()))
            throw NotCactusCore();
        int bstar = -1;
        for (int v : members)
            if (cv.b(v)) { bstar = v; break; }  // members sorted: smallest-id B node
        out.push_back({bstar, true});
        cactus_rec(cv, set_minus(members, {bstar}), out);
        return;
    }
    // balanced cut vertex: minimize the largest component of G[members]-v
    int best = -1;
    std::size_t best_max = members.size() + 1;
    for (int lv : blocks.cut_vertices) {
        int v = ind.nodes[lv];
        auto cs = comps_of(cv, set_minus(members, {v}));
        std::size_t mx = 0;
        for (const auto& c : cs) mx = std::max(mx, c.size());
        if (mx < best_max) {
            best_max = mx;
            best = v;
        }
    }
    int v = best;
    auto cs = comps_of(cv, set_minus(members, {v}));
    // greedy delta balancing of the components into two groups
    std::vector<int> order(cs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        auto di = cv.delta(cs[i]), dj = cv.delta(cs[j]);
        if (di != dj) return di > dj;
        return cs[i].front() < cs[j].front();
    });
    NodeSet g1, g2;
    std::int64_t t1 = 0, t2 = 0;
    int last_group = 1;
    for (int idx : order) {
        auto d = cv.delta(cs[idx]);
        if (t1 <= t2) {
            g1 = set_union(g1, cs[idx]);
            t1 += d;
            last_group = 1;
        } else {
            g2 = set_union(g2, cs[idx]);
            t2 += d;
            last_group = 2;
        }
    }
    if (g2.empty()) {
        // move the last component over so both groups are nonempty
        const auto& c = cs[order.back()];
        g1 = set_minus(g1, c);
        t1 -= cv.delta(c);
        g2 = c;
        t2 = cv.delta(c);
        (void)last_group;
    }
    if (t1 > t2) {
        std::swap(g1, g2);
        std::swap(t1, t2);
    }
    // attach the cut vertex: beta-side joins the delta-smaller group
    if (cv.b(v)) g1 = set_union(g1, {v});
    else g2 = set_union(g2, {v});
    cactus_rec(cv, g1, out);
    cactus_rec(cv, g2, out);
}

void cactus_rec(const CoreView& cv, const NodeSet& members, Events& out) {
    if (members.empty()) return;
    auto cs = comps_of(cv, members);
    if (cs.size() == 1) {
        cactus_connected(cv, members, out);
        return;
    }
    std::vector<std::pair<NodeSet, Events>> parts;
    parts.reserve(cs.size());
    for (auto& c : cs) {
        Events ev;
        cactus_connected(cv, c, ev);
        parts.push_back({std::move(c), std::move(ev)});
    }
    concat_by_delta(cv, parts, out);
}

Schedule covers_from_events(const NodeSet& alpha, const Events& events) {
    Schedule s;
    s.covers.push_back(alpha);
    NodeSet cur = alpha;
    for (auto [v, add] : events) {
        if (add) cur = set_union(cur, {v});
        else cur = set_minus(cur, {v});
        s.covers.push_back(cur);
    }
    return s;
}

std::vector<char> side_membership(int n, const NodeSet& side) { return membership(n, side); }

}  // namespace

int core_degree(const Graph& g, const CoverPair& cp, int v) {
    int d = 0;
    for (int w : g.neighbors(v))
        if (set_contains(cp.D, w)) ++d;
    return d;
}

Schedule cactus_core_schedule(const Graph& g, const CoverPair& cp, const NodeSet& core_members) {
    auto inA = side_membership(g.node_count(), cp.A);
    auto inB = side_membership(g.node_count(), cp.B);
    CoreView cv{&g, &inA, &inB};
    Events ev;
    cactus_rec(cv, core_members, ev);
    NodeSet start = set_intersect(cp.A, core_members);
    return covers_from_events(start, ev);
}

Schedule cactus_schedule(const Graph& g, const CoverPair& cp) {
    if (cp.D.empty()) return trivial_schedule(cp.alpha);
    auto core = core_graph(g, cp);
    if (!is_cactus(core.graph)) throw NotCactusCore();
    Schedule core_sched = cactus_core_schedule(g, cp, cp.D);
    Schedule out;
    out.covers.reserve(core_sched.covers.size());
    for (auto& c : core_sched.covers) out.covers.push_back(set_union(c, cp.X));
    return out;
}

SeparatorSplit exhaustive_separator_finder(const Graph& g, const NodeSet& members) {
    const std::size_t n = members.size();
    if (n > 12) throw InvalidParams("exhaustive separator finder limited to 12 nodes");
    auto try_split = [&](const NodeSet& sep) -> std::optional<SeparatorSplit> {
        auto rest = set_minus(members, sep);
        auto cs = induced_components(g, rest);
        // greedily bipartition components, largest first
        std::sort(cs.begin(), cs.end(), [](const NodeSet& a, const NodeSet& b) {
            if (a.size() != b.size()) return a.size() > b.size();
            return a < b;
        });
        NodeSet s1, s2;
        for (const auto& c : cs) {
            if (s1.size() <= s2.size()) s1 = set_union(s1, c);
            else s2 = set_union(s2, c);
        }
        if (3 * std::max(s1.size(), s2.size()) <= 2 * n) return SeparatorSplit{sep, s1, s2};
        return std::nullopt;
    };
    for (std::size_t k = 0; k <= std::min<std::size_t>(3, n); ++k) {
        // all k-subsets of members in lexicographic order
        std::vector<std::size_t> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            NodeSet sep;
            for (auto i : idx) sep.push_back(members[i]);
            if (auto split = try_split(sep)) return *split;
            if (k == 0) break;
            // next combination
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    throw InvalidParams("no separator of size <= 3 found");
}

namespace {

std::vector<NodeSet> bfs_layers(const Graph& g, const NodeSet& members, int root) {
    std::vector<char> in(g.node_count(), 0);
    for (int v : members) in[v] = 1;
    std::vector<int> dist(g.node_count(), -1);
    std::deque<int> q{root};
    dist[root] = 0;
    std::vector<NodeSet> layers;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        if (static_cast<int>(layers.size()) <= dist[u]) layers.resize(dist[u] + 1);
        layers[dist[u]].push_back(u);
        for (int w : g.neighbors(u))
            if (in[w] && dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push_back(w);
            }
    }
    for (auto& l : layers) std::sort(l.begin(), l.end());
    return layers;
}

}  // namespace

SeparatorSplit bfs_layer_separator_finder(const Graph& g, const NodeSet& members) {
    const std::size_t n = members.size();
    auto try_root = [&](int root) -> std::optional<SeparatorSplit> {
        auto layers = bfs_layers(g, members, root);
        std::size_t covered = 0;
        for (auto& l : layers) covered += l.size();
        if (covered != n) return std::nullopt;  // disconnected: caller handles components
        std::optional<SeparatorSplit> best;
        std::size_t best_sep = n + 1;
        std::size_t above = 0;
        for (std::size_t i = 0; i < layers.size(); ++i) {
            std::size_t below = n - above - layers[i].size();
            if (3 * above <= 2 * n && 3 * below <= 2 * n && layers[i].size() < best_sep) {
                NodeSet s1, s2;
                for (std::size_t j = 0; j < i; ++j) s1 = set_union(s1, layers[j]);
                for (std::size_t j = i + 1; j < layers.size(); ++j) s2 = set_union(s2, layers[j]);
                best = SeparatorSplit{layers[i], s1, s2};
                best_sep = layers[i].size();
            }
            above += layers[i].size();
        }
        return best;
    };
    // eccentric root first: double BFS from the smallest member
    auto first_layers = bfs_layers(g, members, members.front());
    int ecc_root = first_layers.back().front();
    if (auto s = try_root(ecc_root)) return *s;
    for (int v : members)
        if (auto s = try_root(v)) return *s;
    if (n <= 12) return exhaustive_separator_finder(g, members);
    throw InvalidParams("bfs layer separator finder failed");
}

namespace {

void separable_rec(const CoreView& cv, const NodeSet& members, const SeparatorFinder& finder,
                   int level, Events& out) {
    if (members.empty()) return;
    auto cs = comps_of(cv, members);
    if (cs.size() > 1) {
        std::vector<std::pair<NodeSet, Events>> parts;
        for (auto& c : cs) {
            Events ev;
            separable_rec(cv, c, finder, level + 1, ev);
            parts.push_back({std::move(c), std::move(ev)});
        }
        concat_by_delta(cv, parts, out);
        return;
    }
    if (members.size() == 1) {
        out.push_back({members[0], cv.b(members[0])});
        return;
    }
    if (members.size() == 2) {
        int va = cv.a(members[0]) ? members[0] : members[1];
        int vb = cv.b(members[0]) ? members[0] : members[1];
        out.push_back({vb, true});
        out.push_back({va, false});
        return;
    }
    auto split = finder(*cv.g, members);
    // contract check
    NodeSet reunion = set_union(set_union(split.separator, split.side1), split.side2);
    if (reunion != members || !set_intersect(split.side1, split.side2).empty() ||
        !set_intersect(split.separator, split.side1).empty() ||
        !set_intersect(split.separator, split.side2).empty())
        throw SeparatorContractViolated(level);
    if (3 * std::max(split.side1.size(), split.side2.size()) > 2 * members.size())
        throw SeparatorContractViolated(level);
    auto in2 = membership(cv.g->node_count(), split.side2);
    for (int u : split.side1)
        for (int w : cv.g->neighbors(u))
            if (in2[w]) throw SeparatorContractViolated(level);

    // separator beta-nodes enter first and alpha-nodes leave last, so both
    // sides see every separator edge covered throughout
    for (int v : split.separator)
        if (cv.b(v)) out.push_back({v, true});
    Events e1, e2;
    separable_rec(cv, split.side1, finder, level + 1, e1);
    separable_rec(cv, split.side2, finder, level + 1, e2);
    std::vector<std::pair<NodeSet, Events>> parts;
    parts.push_back({split.side1, std::move(e1)});
    parts.push_back({split.side2, std::move(e2)});
    concat_by_delta(cv, parts, out);
    for (int v : split.separator)
        if (cv.a(v)) out.push_back({v, false});
}

}  // namespace

Schedule separable_schedule(const Graph& g, const CoverPair& cp, const SeparatorFinder& finder) {
    if (cp.D.empty()) return trivial_schedule(cp.alpha);
    auto inA = side_membership(g.node_count(), cp.A);
    auto inB = side_membership(g.node_count(), cp.B);
    CoreView cv{&g, &inA, &inB};
    Events ev;
    separable_rec(cv, cp.D, finder, 0, ev);
    Schedule core = covers_from_events(cp.A, ev);
    Schedule out;
    for (auto& c : core.covers) out.covers.push_back(set_union(c, cp.X));
    return out;
}

Schedule greedy_schedule(const Graph& g, const CoverPair& cp) {
    if (cp.D.empty()) return trivial_schedule(cp.alpha);
    std::int64_t h = 0;
    for (int v : cp.A) h += core_degree(g, cp, v);
    if (h == 0) {
        Schedule s;
        s.covers.push_back(cp.alpha);
        if (!cp.B.empty()) s.covers.push_back(set_union(cp.alpha, cp.B));
        if (!cp.A.empty()) s.covers.push_back(cp.beta);
        return s;
    }
    NodeSet order = cp.A;
    std::sort(order.begin(), order.end(), [&](int u, int v) {
        int du = core_degree(g, cp, u), dv = core_degree(g, cp, v);
        if (du != dv) return du < dv;
        return u < v;
    });
    std::vector<char> added(g.node_count(), 0);
    Events ev;
    for (int a : order) {
        for (int w : g.neighbors(a))
            if (set_contains(cp.B, w) && !added[w]) {
                added[w] = 1;
                ev.push_back({w, true});
            }
        ev.push_back({a, false});
    }
    for (int b : cp.B)
        if (!added[b]) ev.push_back({b, true});
    return covers_from_events(cp.alpha, ev);
}

Schedule four_batch_schedule(const Graph& g, const CoverPair& cp) {
    if (cp.D.empty()) return trivial_schedule(cp.alpha);
    std::int64_t h = 0;
    for (int v : cp.A) h += core_degree(g, cp, v);
    if (h == 0) {
        Schedule s;
        s.covers.push_back(cp.alpha);
        if (!cp.B.empty()) s.covers.push_back(set_union(cp.alpha, cp.B));
        if (!cp.A.empty()) s.covers.push_back(cp.beta);
        return s;
    }
    const std::int64_t xi =
        (static_cast<std::int64_t>(cp.A.size()) * static_cast<std::int64_t>(cp.B.size())) /
        (h + static_cast<std::int64_t>(cp.A.size()));
    NodeSet order = cp.A;
    std::sort(order.begin(), order.end(), [&](int u, int v) {
        int du = core_degree(g, cp, u), dv = core_degree(g, cp, v);
        if (du != dv) return du < dv;
        return u < v;
    });
    NodeSet a1(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(xi));
    a1 = set_sorted(std::move(a1));
    NodeSet b1;
    for (int a : a1)
        for (int w : g.neighbors(a))
            if (set_contains(cp.B, w)) b1.push_back(w);
    b1 = set_sorted(std::move(b1));
    Schedule s;
    s.covers.push_back(cp.alpha);                                       // V0
    s.covers.push_back(set_union(cp.alpha, b1));                        // V1
    s.covers.push_back(set_union(set_minus(cp.alpha, a1), b1));         // V2
    s.covers.push_back(set_union(set_minus(cp.alpha, a1), cp.B));       // V3
    s.covers.push_back(cp.beta);                                        // V4
    return s;
}

Schedule degree_ordered_batch_schedule(const Graph& g, const CoverPair& cp,
                                       const std::vector<NodeSet>& partition) {
    NodeSet covered;
    for (const auto& part : partition) {
        if (!set_intersect(covered, part).empty())
            throw InvalidPartition("parts overlap");
        covered = set_union(covered, part);
    }
    if (covered != cp.A) throw InvalidPartition("partition must cover exactly A");
    // degree monotonicity across parts (max of earlier <= min of later)
    int prev_max = -1, prev_node = -1;
    for (const auto& part : partition) {
        if (part.empty()) continue;
        int mn = INT32_MAX, mx = -1, mn_node = -1, mx_node = -1;
        for (int v : part) {
            int d = core_degree(g, cp, v);
            if (d < mn) { mn = d; mn_node = v; }
            if (d > mx) { mx = d; mx_node = v; }
        }
        if (prev_max > mn) throw PartitionNotDegreeOrdered(prev_node, mn_node);
        if (mx > prev_max) { prev_max = mx; prev_node = mx_node; }
    }
    Schedule s;
    s.covers.push_back(cp.alpha);
    NodeSet cur = cp.alpha;
    std::vector<char> added(g.node_count(), 0);
    for (const auto& part : partition) {
        NodeSet add;
        for (int a : part)
            for (int w : g.neighbors(a))
                if (set_contains(cp.B, w) && !added[w]) {
                    added[w] = 1;
                    add.push_back(w);
                }
        add = set_sorted(std::move(add));
        cur = set_union(cur, add);
        s.covers.push_back(cur);
        cur = set_minus(cur, part);
        s.covers.push_back(cur);
    }
    NodeSet isolated;
    for (int b : cp.B)
        if (!added[b]) isolated.push_back(b);
    if (!isolated.empty()) {
        cur = set_union(cur, isolated);
        s.covers.push_back(cur);
    }
    return s;
}

}  // namespace vcr
