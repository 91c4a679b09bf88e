#include "vcr/graph.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <sstream>

namespace vcr {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges,
             std::vector<std::int64_t> weights)
    : adj_(n), weights_(std::move(weights)) {
    if (!weights_.empty()) {
        if (static_cast<int>(weights_.size()) != n)
            throw InvalidParams("weights length must equal node count");
        for (auto w : weights_)
            if (w < 1) throw InvalidParams("node weights must be >= 1");
    }
    for (auto [u, v] : edges) {
        check_node(u);
        check_node(v);
        if (u == v) throw InvalidParams("self-loop rejected");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) {
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw InvalidParams("duplicate edge rejected");
        edge_count_ += static_cast<std::int64_t>(a.size());
    }
    edge_count_ /= 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < node_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.push_back({u, v});
    return out;
}

std::string Graph::to_dot(const NodeSet* alpha, const NodeSet* beta) const {
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < node_count(); ++v) {
        bool a = alpha && set_contains(*alpha, v);
        bool b = beta && set_contains(*beta, v);
        os << "  " << v;
        if (a || b || has_weights()) {
            os << " [label=\"" << v;
            if (has_weights()) os << " w=" << weight(v);
            os << "\"";
            if (a && b) os << ", style=filled, fillcolor=violet";
            else if (a) os << ", style=filled, fillcolor=lightblue";
            else if (b) os << ", style=filled, fillcolor=lightsalmon";
            os << "]";
        }
        os << ";\n";
    }
    for (auto [u, v] : edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

bool is_vertex_cover(const Graph& g, const NodeSet& s) {
    g.check_set(s);
    auto in_s = membership(g.node_count(), s);
    return !uncovered_edge(g, in_s).has_value();
}

bool is_independent_set(const Graph& g, const NodeSet& s) {
    g.check_set(s);
    auto in_s = membership(g.node_count(), s);
    return !dependent_edge(g, in_s).has_value();
}

std::optional<std::pair<int, int>> uncovered_edge(const Graph& g, const std::vector<char>& in_s) {
    for (int u = 0; u < g.node_count(); ++u) {
        if (in_s[u]) continue;
        for (int v : g.neighbors(u))
            if (u < v && !in_s[v]) return std::make_pair(u, v);
        // also catch u>v pairs where v was skipped
        for (int v : g.neighbors(u))
            if (u > v && !in_s[v]) return std::make_pair(v, u);
    }
    return std::nullopt;
}

std::optional<std::pair<int, int>> dependent_edge(const Graph& g, const std::vector<char>& in_s) {
    for (int u = 0; u < g.node_count(); ++u) {
        if (!in_s[u]) continue;
        for (int v : g.neighbors(u))
            if (v > u && in_s[v]) return std::make_pair(u, v);
    }
    return std::nullopt;
}

std::vector<char> membership(int n, const NodeSet& s) {
    std::vector<char> m(n, 0);
    for (int v : s) m[v] = 1;
    return m;
}

bool is_connected(const Graph& g) {
    return g.node_count() <= 1 || connected_components(g).size() == 1;
}

std::vector<NodeSet> connected_components(const Graph& g) {
    NodeSet all(g.node_count());
    for (int i = 0; i < g.node_count(); ++i) all[i] = i;
    return induced_components(g, all);
}

std::vector<NodeSet> induced_components(const Graph& g, const NodeSet& members) {
    std::vector<char> in(g.node_count(), 0), seen(g.node_count(), 0);
    for (int v : members) in[v] = 1;
    std::vector<NodeSet> comps;
    for (int s : members) {
        if (seen[s]) continue;
        NodeSet comp;
        std::deque<int> q{s};
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            comp.push_back(u);
            for (int w : g.neighbors(u))
                if (in[w] && !seen[w]) {
                    seen[w] = 1;
                    q.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

namespace {

// BFS eccentricity of src within G[members]; dist values reused across calls.
int induced_eccentricity(const Graph& g, const std::vector<char>& in, int src,
                         std::vector<int>& dist, int* reached) {
    std::deque<int> q{src};
    dist[src] = 0;
    NodeSet touched{src};
    int ecc = 0, cnt = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int w : g.neighbors(u)) {
            if (!in[w] || dist[w] >= 0) continue;
            dist[w] = dist[u] + 1;
            ecc = std::max(ecc, dist[w]);
            touched.push_back(w);
            ++cnt;
            q.push_back(w);
        }
    }
    for (int v : touched) dist[v] = -1;
    if (reached) *reached = cnt;
    return ecc;
}

}  // namespace

int induced_diameter(const Graph& g, const NodeSet& members) {
    if (members.empty()) return 0;
    std::vector<char> in(g.node_count(), 0);
    for (int v : members) in[v] = 1;
    std::vector<int> dist(g.node_count(), -1);
    int diam = 0;
    for (int v : members) {
        int reached = 0;
        diam = std::max(diam, induced_eccentricity(g, in, v, dist, &reached));
        if (reached != static_cast<int>(members.size())) return -1;
    }
    return diam;
}

int weak_diameter(const Graph& g, const NodeSet& members) {
    if (members.empty()) return 0;
    std::vector<char> want(g.node_count(), 0);
    for (int v : members) want[v] = 1;
    std::vector<int> dist(g.node_count(), -1);
    int diam = 0;
    for (int src : members) {
        std::deque<int> q{src};
        dist[src] = 0;
        std::vector<int> touched{src};
        std::size_t found = 1;
        while (!q.empty() && found < members.size()) {
            int u = q.front();
            q.pop_front();
            for (int w : g.neighbors(u)) {
                if (dist[w] >= 0) continue;
                dist[w] = dist[u] + 1;
                touched.push_back(w);
                if (want[w]) {
                    diam = std::max(diam, dist[w]);
                    ++found;
                }
                q.push_back(w);
            }
        }
        for (int v : touched) dist[v] = -1;
    }
    return diam;
}

BlockDecomposition biconnected_decomposition(const Graph& g) {
    const int n = g.node_count();
    BlockDecomposition out;
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), child_it(n, 0);
    std::vector<char> is_cut(n, 0);
    std::vector<std::pair<int, int>> edge_stack;
    int timer = 0;

    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        if (g.degree(root) == 0) continue;  // isolated nodes belong to no block
        int root_children = 0;
        std::vector<int> stack{root};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            int u = stack.back();
            const auto& nbrs = g.neighbors(u);
            if (child_it[u] < static_cast<int>(nbrs.size())) {
                int v = nbrs[child_it[u]++];
                if (v == parent[u]) continue;
                if (disc[v] < 0) {
                    parent[v] = u;
                    edge_stack.push_back({u, v});
                    disc[v] = low[v] = timer++;
                    stack.push_back(v);
                    if (u == root) ++root_children;
                } else if (disc[v] < disc[u]) {
                    edge_stack.push_back({u, v});
                    low[u] = std::min(low[u], disc[v]);
                }
            } else {
                stack.pop_back();
                if (stack.empty()) break;
                int p = parent[u];
                low[p] = std::min(low[p], low[u]);
                if (low[u] >= disc[p]) {
                    // pop a biconnected component ending at tree edge (p, u)
                    NodeSet block;
                    while (!edge_stack.empty()) {
                        auto e = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(e.first);
                        block.push_back(e.second);
                        if (e.first == p && e.second == u) break;
                    }
                    out.blocks.push_back(set_sorted(std::move(block)));
                    if (p != root) is_cut[p] = 1;
                }
            }
        }
        if (root_children > 1) is_cut[root] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (is_cut[v]) out.cut_vertices.push_back(v);
    return out;
}

bool is_cactus(const Graph& g) {
    auto dec = biconnected_decomposition(g);
    std::vector<char> in(g.node_count(), 0);
    for (const auto& block : dec.blocks) {
        if (block.size() == 2) continue;  // bridge
        // count induced edges of the block
        for (int v : block) in[v] = 1;
        std::int64_t m = 0;
        for (int v : block)
            for (int w : g.neighbors(v))
                if (w > v && in[w]) ++m;
        for (int v : block) in[v] = 0;
        // a biconnected component is a chordless cycle iff |E| == |V|
        if (m != static_cast<std::int64_t>(block.size())) return false;
    }
    return true;
}

int arboricity_upper_bound(const Graph& g) {
    if (g.edge_count() == 0) throw EmptyGraph();
    const int n = g.node_count();
    std::vector<int> deg(n), pos(n), order(n);
    int maxdeg = 0;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        maxdeg = std::max(maxdeg, deg[v]);
    }
    // bucket queue degeneracy ordering
    std::vector<std::vector<int>> buckets(maxdeg + 1);
    for (int v = 0; v < n; ++v) buckets[deg[v]].push_back(v);
    std::vector<char> removed(n, 0);
    int degeneracy = 0, seen = 0, cur = 0;
    while (seen < n) {
        while (cur <= maxdeg && buckets[cur].empty()) ++cur;
        if (cur > maxdeg) break;
        int v = buckets[cur].back();
        buckets[cur].pop_back();
        if (removed[v] || deg[v] != cur) continue;  // stale entry
        removed[v] = 1;
        ++seen;
        degeneracy = std::max(degeneracy, cur);
        for (int w : g.neighbors(v)) {
            if (removed[w]) continue;
            --deg[w];
            buckets[deg[w]].push_back(w);
            if (deg[w] < cur) cur = deg[w];
        }
    }
    return degeneracy;
}

}  // namespace vcr
