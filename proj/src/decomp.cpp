#include "vcr/decomp.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "vcr/compress.hpp"
#include "vcr/merge_kernels.hpp"
#include "vcr/seq_schedules.hpp"

namespace vcr {

int Clustering::find(int v) const {
    for (std::size_t i = 0; i < clusters.size(); ++i)
        if (set_contains(clusters[i], v)) return static_cast<int>(i);
    return -1;
}

Clustering singleton_clustering(const NodeSet& members) {
    Clustering c;
    c.clusters.reserve(members.size());
    for (int v : members) {
        c.clusters.push_back({v});
        c.diameters.push_back(0);
    }
    return c;
}

Clustering clustering_from_assignment(const Graph& g, const std::vector<int>& cid,
                                      const NodeSet& members) {
    std::map<int, NodeSet> by_cid;
    for (int v : members) by_cid[cid[v]].push_back(v);
    Clustering out;
    for (auto& [c, mems] : by_cid) {
        (void)c;
        out.clusters.push_back(mems);
        out.diameters.push_back(induced_diameter(g, mems));
    }
    return out;
}

DecompositionReport validate_decomposition(const Graph& g, const SeparatorDecomposition& dec,
                                           std::int64_t x) {
    DecompositionReport rep;
    auto violate = [&](const std::string& clause, const std::string& witness) {
        rep.violations.push_back({clause, witness});
    };
    // partition of V
    std::vector<int> owner(g.node_count(), -1);
    auto claim = [&](int v, int who) {
        if (owner[v] != -1)
            violate("partition", "node " + std::to_string(v) + " claimed twice");
        owner[v] = who;
    };
    for (std::size_t i = 0; i < dec.clusters.size(); ++i)
        for (int v : dec.clusters[i]) claim(v, static_cast<int>(i));
    for (int v : dec.separator) claim(v, -2);
    for (int v = 0; v < g.node_count(); ++v)
        if (owner[v] == -1) violate("partition", "node " + std::to_string(v) + " unassigned");
    // diameters
    for (std::size_t i = 0; i < dec.clusters.size(); ++i) {
        if (dec.clusters[i].empty()) {
            violate("partition", "empty cluster " + std::to_string(i));
            continue;
        }
        int wd = weak_diameter(g, dec.clusters[i]);
        if (wd > dec.d)
            violate("weak-diameter", "cluster " + std::to_string(i) + " has weak diameter " +
                                         std::to_string(wd) + " > " + std::to_string(dec.d));
        if (dec.strong) {
            int sd = induced_diameter(g, dec.clusters[i]);
            if (sd < 0 || sd > dec.d)
                violate("strong-diameter",
                        "cluster " + std::to_string(i) + " induced diameter " +
                            std::to_string(sd) + " > " + std::to_string(dec.d));
        }
    }
    if (static_cast<std::int64_t>(dec.separator.size()) > x)
        violate("separator-size", "|S| = " + std::to_string(dec.separator.size()) + " > " +
                                      std::to_string(x));
    // separation: no edge between non-ghost nodes of distinct clusters
    auto ghost = membership(g.node_count(), dec.ghost);
    for (auto [u, v] : g.edges()) {
        if (owner[u] < 0 || owner[v] < 0 || owner[u] == owner[v]) continue;
        if (ghost[u] || ghost[v]) continue;
        violate("separation", "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") joins clusters " + std::to_string(owner[u]) + "," +
                                  std::to_string(owner[v]));
    }
    return rep;
}

int merge_diameter_bound(int d_in, const Rational& eps) {
    int th = static_cast<int>((Rational(1) / eps).ceil());
    return std::max(d_in, 3 * th + 2) + 2 + 2 * th;
}

namespace {

using mergek::BoundaryFact;
using mergek::PickFact;

struct MergeState {
    const Graph& g;
    std::vector<char> mask;
    std::vector<int> cid;            // per node; -1 outside
    std::map<int, NodeSet> members;  // cid -> sorted member list
    std::map<int, int> diam;

    explicit MergeState(const Graph& gg) : g(gg), mask(gg.node_count(), 0) {}

    void set_cluster(const NodeSet& mems) {
        int c = mems.front();
        for (int v : mems) cid[v] = c;
        diam[c] = induced_diameter(g, mems);
        members[c] = mems;
    }

    std::vector<BoundaryFact> boundary_of(int c) const {
        std::vector<BoundaryFact> out;
        for (int u : members.at(c))
            for (int v : g.neighbors(u))
                if (mask[v] && cid[v] != c)
                    out.push_back({u, v, cid[v], diam.at(cid[v])});
        std::sort(out.begin(), out.end());
        return out;
    }

    void merge_group(const std::vector<int>& group) {
        NodeSet mems;
        for (int c : group) {
            mems = set_union(mems, members.at(c));
            members.erase(c);
            diam.erase(c);
        }
        set_cluster(mems);
    }
};

// One merging iteration of stage 1 at threshold 2^t.
void stage1_iteration(MergeState& st, int t, int cv_iters) {
    const int cap = 1 << t;
    // picks by small clusters
    std::map<int, PickFact> picks;
    std::map<int, std::vector<int>> adjacent;  // cid -> adjacent cids (sorted)
    for (const auto& [c, mems] : st.members) {
        (void)mems;
        if (st.diam.at(c) > cap) continue;
        auto boundary = st.boundary_of(c);
        if (auto p = mergek::choose_pick(c, boundary, cap)) picks[c] = *p;
        NodeSet adj;
        for (const auto& f : boundary) adj.push_back(f.v_cid);
        adjacent[c] = set_sorted(std::move(adj));
    }
    // pseudoforest links
    std::map<int, mergek::FLinks> links;
    std::vector<int> fnodes;
    for (const auto& [c, adj] : adjacent) {
        std::optional<PickFact> mine;
        if (auto it = picks.find(c); it != picks.end()) mine = it->second;
        std::vector<PickFact> heard;
        for (int z : adj)
            if (auto it = picks.find(z); it != picks.end()) heard.push_back(it->second);
        auto l = mergek::derive_links(c, mine, heard);
        if (l.in_f) {
            links[c] = l;
            fnodes.push_back(c);
        }
    }
    if (fnodes.empty()) return;
    // Cole-Vishkin bit compression down to < 6 colors
    std::map<int, int> color;
    for (int c : fnodes) color[c] = c;
    for (int k = 0; k < cv_iters; ++k) {
        std::map<int, int> next;
        for (int c : fnodes) {
            int succ = links[c].succ;
            int partner = succ >= 0 ? color[succ] : mergek::cv_root_partner(color[c]);
            next[c] = mergek::cv_compress(color[c], partner);
        }
        color = std::move(next);
    }
    // three shift-down + recolor rounds remove colors 5, 4, 3
    for (int kill = 5; kill >= 3; --kill) {
        std::map<int, int> shifted;
        for (int c : fnodes) {
            int succ = links[c].succ;
            shifted[c] = succ >= 0 ? color[succ] : mergek::root_shift_color(color[c]);
        }
        color = std::move(shifted);
        std::map<int, int> next = color;
        for (int c : fnodes) {
            if (color[c] != kill) continue;
            std::vector<int> child_colors;
            for (int z : links[c].children) child_colors.push_back(color[z]);
            int succ = links[c].succ;
            next[c] = mergek::recolor_free(succ >= 0 ? color[succ] : -1, child_colors);
        }
        color = std::move(next);
    }
    // MIS greedily by color class
    std::set<int> in_i;
    for (int q = 0; q < 3; ++q)
        for (int c : fnodes) {
            if (color[c] != q) continue;
            bool blocked = false;
            if (links[c].succ >= 0 && in_i.count(links[c].succ)) blocked = true;
            for (int z : links[c].children)
                if (in_i.count(z)) blocked = true;
            if (!blocked) in_i.insert(c);
        }
    // non-I clusters join their smallest F-neighbor in I
    std::map<int, std::vector<int>> groups;  // target -> joiners
    for (int c : fnodes) {
        if (in_i.count(c)) continue;
        int target = -1;
        if (links[c].succ >= 0 && in_i.count(links[c].succ)) target = links[c].succ;
        for (int z : links[c].children)
            if (in_i.count(z) && (target < 0 || z < target)) target = z;
        if (target >= 0) groups[target].push_back(c);
    }
    for (auto& [target, joiners] : groups) {
        std::vector<int> group = joiners;
        group.push_back(target);
        st.merge_group(group);
    }
}

// One absorption pass: clusters below the threshold that are not whole
// components merge into a canonical neighbor (larger clusters preferred).
bool stage2_pass(MergeState& st, int th) {
    std::map<int, int> parent;
    for (const auto& [c, mems] : st.members) {
        (void)mems;
        parent[c] = c;
    }
    std::function<int(int)> find = [&](int c) {
        while (parent[c] != c) c = parent[c] = parent[parent[c]];
        return c;
    };
    bool any = false;
    for (const auto& [c, mems] : st.members) {
        (void)mems;
        if (st.diam.at(c) >= th) continue;
        auto boundary = st.boundary_of(c);
        if (boundary.empty()) continue;  // whole component
        auto target = mergek::stage2_target(boundary, th);
        int a = find(c), b = find(target->second);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
            any = true;
        }
    }
    if (!any) return false;
    std::map<int, std::vector<int>> groups;
    for (const auto& [c, mems] : st.members) {
        (void)mems;
        groups[find(c)].push_back(c);
    }
    for (auto& [root, group] : groups) {
        (void)root;
        if (group.size() > 1) st.merge_group(group);
    }
    return true;
}

MergeState run_merge(const Graph& g, const NodeSet& members, const Clustering& initial,
                     const Rational& eps) {
    if (eps <= Rational(0)) throw InvalidParams("merge_clusters: eps must be positive");
    MergeState st(g);
    st.cid.assign(g.node_count(), -1);
    for (int v : members) st.mask[v] = 1;
    NodeSet seen;
    for (const auto& mems : initial.clusters) {
        if (mems.empty()) throw InvalidClustering("empty cluster");
        for (int v : mems) {
            g.check_node(v);
            if (!st.mask[v]) throw InvalidClustering("cluster node outside member set");
        }
        if (induced_diameter(g, mems) < 0) throw InvalidClustering("disconnected cluster");
        seen = set_union(seen, mems);
        st.set_cluster(mems);
    }
    if (seen != members) throw InvalidClustering("clusters do not partition the member set");

    const std::int64_t th = (Rational(1) / eps).ceil();
    const int t_last = mergek::stage1_last_iteration(th);
    const int cv_iters = mergek::cv_iterations(4 * std::max(1, g.node_count()));
    for (int t = 0; t <= t_last; ++t) stage1_iteration(st, t, cv_iters);
    // two fixed absorption passes keep the distributed mirror in lockstep
    for (int pass = 0; pass < 2; ++pass)
        if (!stage2_pass(st, static_cast<int>(th))) break;
    return st;
}

}  // namespace

Clustering merge_clusters_masked(const Graph& g, const NodeSet& members,
                                 const Clustering& initial, const Rational& eps) {
    auto st = run_merge(g, members, initial, eps);
    Clustering out;
    for (auto& [c, mems] : st.members) {
        out.clusters.push_back(mems);
        out.diameters.push_back(st.diam.at(c));
    }
    return out;
}

Clustering merge_clusters(const Graph& g, const Clustering& initial, const Rational& eps) {
    NodeSet all;
    for (const auto& mems : initial.clusters) all = set_union(all, mems);
    return merge_clusters_masked(g, all, initial, eps);
}

MaskedDecomposition cactus_separator_decomp_masked(const Graph& g, const NodeSet& members,
                                                   const Rational& eps) {
    const Rational eps3 = eps / Rational(3);
    auto merged = merge_clusters_masked(g, members, singleton_clustering(members), eps3);
    MaskedDecomposition out;
    if (merged.clusters.size() == 1) {
        out.clusters = merged.clusters;
        return out;
    }
    // move the smaller endpoint of every inter-cluster edge into S
    std::vector<int> owner(g.node_count(), -1);
    for (std::size_t i = 0; i < merged.clusters.size(); ++i)
        for (int v : merged.clusters[i]) owner[v] = static_cast<int>(i);
    NodeSet sep;
    for (int u : members)
        for (int v : g.neighbors(u))
            if (u < v && owner[v] >= 0 && owner[u] >= 0 && owner[u] != owner[v])
                sep.push_back(u);
    out.separator = set_sorted(std::move(sep));
    for (const auto& mems : merged.clusters) {
        NodeSet rest = set_minus(mems, out.separator);
        for (auto& piece : induced_components(g, rest)) out.clusters.push_back(std::move(piece));
    }
    std::sort(out.clusters.begin(), out.clusters.end());
    return out;
}

SeparatorDecomposition cactus_separator_decomp(const Graph& g, const Rational& eps) {
    if (!is_connected(g)) throw Disconnected();
    if (!is_cactus(g)) throw NotCactus();
    NodeSet all(g.node_count());
    std::iota(all.begin(), all.end(), 0);
    auto masked = cactus_separator_decomp_masked(g, all, eps);
    SeparatorDecomposition dec;
    dec.clusters = masked.clusters;
    dec.separator = masked.separator;
    dec.strong = true;
    for (const auto& c : dec.clusters) dec.d = std::max(dec.d, induced_diameter(g, c));
    return dec;
}

LiftResult lift_decomposition(const Graph& g, const CoverPair& cp,
                              const MaskedDecomposition& core_dec, const Rational& eps) {
    // core_dec must partition D with empty ghost set
    NodeSet covered = core_dec.separator;
    for (const auto& c : core_dec.clusters) {
        if (c.empty()) throw CoreDecompositionInvalid("empty core cluster");
        if (!set_intersect(c, covered).empty())
            throw CoreDecompositionInvalid("core clusters overlap");
        covered = set_union(covered, c);
    }
    if (covered != cp.D) throw CoreDecompositionInvalid("core decomposition must partition D");

    NodeSet all(g.node_count());
    std::iota(all.begin(), all.end(), 0);
    LiftResult out;
    if (cp.D.empty()) {
        if (!all.empty()) out.dec.clusters.push_back(all);
        out.dec.ghost = all;
        out.dec.d = weak_diameter(g, all);
        out.merged.clusters = out.dec.clusters;
        out.merged.diameters = {out.dec.d};
        return out;
    }
    Clustering initial;
    for (const auto& c : core_dec.clusters) {
        // split defensively: merging requires connected input clusters
        for (auto& piece : induced_components(g, c)) initial.clusters.push_back(std::move(piece));
    }
    NodeSet rest = set_minus(all, set_minus(cp.D, core_dec.separator));
    for (int v : rest) initial.clusters.push_back({v});
    std::sort(initial.clusters.begin(), initial.clusters.end());
    initial.diameters.assign(initial.clusters.size(), 0);

    out.merged = merge_clusters_masked(g, all, initial, eps);
    for (const auto& mems : out.merged.clusters) {
        NodeSet c = set_minus(mems, core_dec.separator);
        if (!c.empty()) out.dec.clusters.push_back(std::move(c));
    }
    out.dec.separator = core_dec.separator;
    out.dec.ghost = set_minus(all, cp.D);
    out.dec.strong = false;
    for (const auto& c : out.dec.clusters) out.dec.d = std::max(out.dec.d, weak_diameter(g, c));
    return out;
}

LiftResult cactus_core_decomposition(const Graph& g, const CoverPair& cp, const Rational& eps) {
    MaskedDecomposition core;
    for (const auto& comp : induced_components(g, cp.D)) {
        auto ind = induced_subgraph(g, comp);
        if (!is_cactus(ind.graph)) throw NotCactus();
        auto part = cactus_separator_decomp_masked(g, comp, eps);
        for (auto& c : part.clusters) core.clusters.push_back(std::move(c));
        core.separator = set_union(core.separator, part.separator);
    }
    std::sort(core.clusters.begin(), core.clusters.end());
    return lift_decomposition(g, cp, core, eps);
}

BallCarvingResult ball_carving(const Graph& g, const Rational& eps, const NodeSet& order) {
    if (eps <= Rational(0)) throw InvalidParams("ball_carving: eps must be positive");
    g.check_set(order);
    BallCarvingResult out;
    std::vector<char> removed(g.node_count(), 0);
    std::vector<int> dist(g.node_count(), -1);
    NodeSet todo = order;
    if (static_cast<int>(order.size()) != g.node_count()) {
        // fill in any nodes the caller left out, ascending
        auto seen = membership(g.node_count(), set_sorted(order));
        for (int v = 0; v < g.node_count(); ++v)
            if (!seen[v]) todo.push_back(v);
    }
    for (int v : todo) {
        if (removed[v]) continue;
        // BFS layers in the residual graph
        std::vector<NodeSet> layers{{v}};
        dist[v] = 0;
        std::deque<int> q{v};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int w : g.neighbors(u)) {
                if (removed[w] || dist[w] >= 0) continue;
                dist[w] = dist[u] + 1;
                if (static_cast<int>(layers.size()) <= dist[w]) layers.resize(dist[w] + 1);
                layers[dist[w]].push_back(w);
                q.push_back(w);
            }
        }
        std::int64_t ball = 0;
        std::vector<std::int64_t> cum;
        for (auto& l : layers) {
            ball += static_cast<std::int64_t>(l.size());
            cum.push_back(ball);
        }
        int r = 0;
        while (r + 1 < static_cast<int>(layers.size()) &&
               Rational(cum[r + 1]) > (Rational(1) + eps) * Rational(cum[r]))
            ++r;
        NodeSet cluster, shell;
        for (int i = 0; i <= r; ++i) cluster = set_union(cluster, layers[i]);
        if (r + 1 < static_cast<int>(layers.size())) shell = layers[r + 1];
        out.growth.push_back({static_cast<std::int64_t>(shell.size()), cum[r]});
        out.max_radius = std::max(out.max_radius, r);
        out.dec.clusters.push_back(cluster);
        out.dec.separator = set_union(out.dec.separator, shell);
        for (const auto& l : layers)
            for (int w : l) dist[w] = -1;
        for (int w : cluster) removed[w] = 1;
        for (int w : shell) removed[w] = 1;
    }
    std::sort(out.dec.clusters.begin(), out.dec.clusters.end());
    out.dec.strong = true;
    for (const auto& c : out.dec.clusters)
        out.dec.d = std::max(out.dec.d, induced_diameter(g, c));
    return out;
}

Schedule schedule_from_decomposition(const Graph& g, const CoverPair& cp,
                                     const SeparatorDecomposition& dec,
                                     const ClusterScheduler& scheduler) {
    for (int z : dec.ghost)
        if (set_contains(cp.D, z))
            throw InvalidParams("ghost set must avoid alpha^beta");
    struct ClusterPlan {
        NodeSet cluster;
        Schedule sched;
        bool alpha_heavy;
    };
    std::vector<ClusterPlan> plans;
    int max_len = 0;
    for (std::size_t i = 0; i < dec.clusters.size(); ++i) {
        const NodeSet& cluster = dec.clusters[i];
        Schedule s = scheduler(g, cp, cluster);
        // endpoints and validity on the induced subgraph
        auto ind = induced_subgraph(g, cluster);
        CoverPair cpc = cp.restricted(g, cluster);
        Schedule local;
        for (const auto& cov : s.covers) {
            NodeSet mapped;
            for (int v : cov) {
                if (!set_contains(cluster, v)) throw ClusterScheduleInvalid(static_cast<int>(i));
                mapped.push_back(ind.to_local[v]);
            }
            local.covers.push_back(set_sorted(std::move(mapped)));
        }
        auto res = validate(ind.graph, cpc, local);
        if (!res.ok() || !res.metrics.monotone) throw ClusterScheduleInvalid(static_cast<int>(i));
        for (int b = 0; b < s.stored_batches(); ++b)
            for (int v : s.batch(b))
                if (!set_contains(cp.D, v)) throw GhostTouched(v);
        std::int64_t ca = set_intersect(cluster, cp.alpha).size();
        std::int64_t cb = set_intersect(cluster, cp.beta).size();
        max_len = std::max(max_len, s.stored_batches());
        plans.push_back({cluster, std::move(s), ca > cb});
    }
    for (auto& p : plans)
        while (p.sched.stored_batches() < max_len) p.sched.covers.push_back(p.sched.covers.back());

    Schedule out;
    NodeSet cur = cp.alpha;
    out.covers.push_back(cur);
    cur = set_union(cur, set_intersect(dec.separator, cp.B));
    out.covers.push_back(cur);
    for (bool heavy_block : {true, false}) {
        for (int slot = 0; slot < max_len; ++slot) {
            NodeSet add, remove;
            for (const auto& p : plans) {
                if (p.alpha_heavy != heavy_block) continue;
                NodeSet batch = p.sched.batch(slot);
                for (int v : batch) {
                    if (set_contains(p.sched.covers[slot], v)) remove.push_back(v);
                    else add.push_back(v);
                }
            }
            cur = set_union(cur, set_sorted(std::move(add)));
            cur = set_minus(cur, set_sorted(std::move(remove)));
            out.covers.push_back(cur);
        }
    }
    cur = set_minus(cur, set_intersect(dec.separator, cp.A));
    out.covers.push_back(cur);
    return out;
}

ClusterScheduler cactus_compress_scheduler(const Rational& eps) {
    return [eps](const Graph& g, const CoverPair& cp, const NodeSet& cluster) {
        auto ind = induced_subgraph(g, cluster);
        CoverPair cpc = cp.restricted(g, cluster);
        Schedule seq = cactus_schedule(ind.graph, cpc);
        Schedule local;
        if (cpc.B.empty() && cpc.A.empty()) {
            local = seq;
        } else {
            auto [eta, c] = derive_eta_c(ind.graph, cpc, seq);
            local = compress(ind.graph, cpc, seq, CompressionParams{eps, eta, c});
        }
        Schedule out;
        for (const auto& cov : local.covers) {
            NodeSet mapped;
            for (int v : cov) mapped.push_back(ind.nodes[v]);
            out.covers.push_back(set_sorted(std::move(mapped)));
        }
        return out;
    };
}

}  // namespace vcr
