#include "vcr/generators.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace vcr {

std::uint64_t rng_below(std::mt19937_64& eng, std::uint64_t k) {
    if (k <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % k;
    std::uint64_t x;
    do {
        x = eng();
    } while (x >= limit);
    return x % k;
}

Instance gen_path_pair(std::int64_t n) {
    if (n < 1) throw InvalidParams("path-pair: n must be >= 1");
    const int nn = static_cast<int>(2 * n);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < nn; ++i) edges.push_back({i, i + 1});
    Graph g(nn, edges);
    NodeSet a, b;
    for (int i = 0; i < nn; ++i) (i % 2 ? a : b).push_back(i);
    auto cp = CoverPair::make(g, a, b);
    return {std::move(g), std::move(cp)};
}

Instance gen_two_stars(std::int64_t t) {
    if (t < 1) throw InvalidParams("two-stars: t must be >= 1");
    const int tt = static_cast<int>(t);
    const int n = 2 * tt + 2;
    std::vector<std::pair<int, int>> edges;
    for (int l = 1; l <= tt; ++l) edges.push_back({0, l});          // star 1, center 0
    for (int l = tt + 2; l < n; ++l) edges.push_back({tt + 1, l});  // star 2, center t+1
    Graph g(n, edges);
    NodeSet alpha{0};
    for (int l = tt + 2; l < n; ++l) alpha.push_back(l);
    NodeSet beta;
    for (int l = 1; l <= tt + 1; ++l) beta.push_back(l);
    auto cp = CoverPair::make(g, alpha, beta);
    return {std::move(g), std::move(cp)};
}

namespace {

Instance weighted_cycle_impl(std::int64_t n, std::int64_t t, std::int64_t c, bool weighted) {
    if (t < 1 || c < 1) throw InvalidParams("weighted-cycle: t and c must be >= 1");
    const std::int64_t seg = 4 * t + 2;
    if (n < seg || n % seg != 0)
        throw InvalidParams("weighted-cycle: n must be a positive multiple of 4t+2");
    const int nn = static_cast<int>(n);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < nn; ++i) edges.push_back({i, (i + 1) % nn});
    std::vector<std::int64_t> weights(nn, 1);
    for (std::int64_t s = 0; s < n / seg; ++s) {
        weights[s * seg + (2 * t + 1) - 1] = c * t;  // position 2t+1
        weights[s * seg + (2 * t + 2) - 1] = c * t;  // position 2t+2
    }
    Graph g(nn, edges, weighted ? weights : std::vector<std::int64_t>{});
    NodeSet odd, even;
    for (int i = 0; i < nn; ++i) {
        // position j = (i mod seg) + 1
        if (i % 2 == 0) odd.push_back(i);  // j odd <=> offset even
        else even.push_back(i);
    }
    auto cp = CoverPair::make(g, odd, even);
    return {std::move(g), std::move(cp)};
}

}  // namespace

Instance gen_weighted_cycle(std::int64_t n, std::int64_t t, std::int64_t c) {
    return weighted_cycle_impl(n, t, c, true);
}

Instance gen_reduction_graph(std::int64_t n, std::int64_t t, std::int64_t c) {
    Instance w = gen_weighted_cycle(n, t, c);
    const Graph& wg = w.graph;
    std::vector<int> offset(wg.node_count() + 1, 0);
    for (int v = 0; v < wg.node_count(); ++v)
        offset[v + 1] = offset[v] + static_cast<int>(wg.weight(v));
    const int nn = offset.back();
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : wg.edges())
        for (int i = offset[u]; i < offset[u + 1]; ++i)
            for (int j = offset[v]; j < offset[v + 1]; ++j) edges.push_back({i, j});
    Graph g(nn, edges);
    NodeSet a, b;
    for (int v = 0; v < wg.node_count(); ++v) {
        bool in_a = set_contains(w.pair.alpha, v);
        for (int i = offset[v]; i < offset[v + 1]; ++i) (in_a ? a : b).push_back(i);
    }
    auto cp = CoverPair::make(g, a, b);
    return {std::move(g), std::move(cp)};
}

Instance gen_even_cycle(std::int64_t n) {
    if (n < 4 || n % 2 != 0) throw InvalidParams("even-cycle: n must be even and >= 4");
    const int nn = static_cast<int>(n);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < nn; ++i) edges.push_back({i, (i + 1) % nn});
    Graph g(nn, edges);
    NodeSet a, b;
    for (int i = 0; i < nn; ++i) (i % 2 == 0 ? a : b).push_back(i);
    auto cp = CoverPair::make(g, a, b);
    return {std::move(g), std::move(cp)};
}

Graph random_cactus_graph(std::int64_t n, std::uint64_t seed, bool even_only, bool backbone,
                          int cycle_percent) {
    if (n < 1) throw InvalidParams("random-cactus: n must be >= 1");
    std::mt19937_64 eng(seed);
    std::vector<std::pair<int, int>> edges;
    int count = 1;
    int last = 0;
    while (count < n) {
        int u;
        if (backbone && rng_below(eng, 4) < 3) u = last;
        else u = static_cast<int>(rng_below(eng, count));
        std::int64_t budget = n - count;
        bool cycle = budget >= 3 && static_cast<int>(rng_below(eng, 100)) < cycle_percent;
        if (cycle) {
            // pendant cycle through u of length len (len-1 new nodes)
            std::int64_t maxlen = std::min<std::int64_t>(8, budget + 1);
            std::int64_t len;
            if (even_only) {
                std::int64_t choices = (maxlen - 2) / 2;  // lengths 4,6,8 that fit
                len = 4 + 2 * static_cast<std::int64_t>(rng_below(eng, choices));
            } else {
                len = 3 + static_cast<std::int64_t>(rng_below(eng, maxlen - 2));
            }
            int prev = u;
            for (int i = 0; i < len - 1; ++i) {
                edges.push_back({prev, count});
                prev = count++;
            }
            edges.push_back({prev, u});
            last = prev;
        } else {
            edges.push_back({u, count});
            last = count++;
        }
    }
    return Graph(static_cast<int>(n), edges);
}

namespace {

Instance bipartite_instance_from(Graph g, std::mt19937_64& eng, std::int64_t pad,
                                 std::int64_t ghosts) {
    // 2-color (graph is built bipartite), pad some nodes into X, hang ghosts off X
    const int n = g.node_count();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int w : g.neighbors(u))
                if (color[w] < 0) {
                    color[w] = 1 - color[u];
                    q.push_back(w);
                }
        }
    }
    NodeSet a, b;
    for (int v = 0; v < n; ++v) (color[v] == 0 ? a : b).push_back(v);
    NodeSet padded;
    if (pad > 0) {
        NodeSet all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        for (std::int64_t i = 0; i < pad && !all.empty(); ++i) {
            std::size_t k = rng_below(eng, all.size());
            padded.push_back(all[k]);
            all.erase(all.begin() + static_cast<std::ptrdiff_t>(k));
        }
        padded = set_sorted(std::move(padded));
        a = set_union(a, padded);
        b = set_union(b, padded);
    }
    if (ghosts > 0) {
        if (padded.empty()) throw InvalidParams("ghosts require pad > 0");
        auto edges = g.edges();
        int id = n;
        for (std::int64_t i = 0; i < ghosts; ++i, ++id)
            edges.push_back({static_cast<int>(padded[rng_below(eng, padded.size())]), id});
        g = Graph(n + static_cast<int>(ghosts), edges);
    }
    auto cp = CoverPair::make(g, a, b);
    return {std::move(g), std::move(cp)};
}

}  // namespace

Instance gen_random_cactus(std::int64_t n, std::uint64_t seed, const CactusOptions& opt) {
    if (opt.pad + opt.ghosts >= n) throw InvalidParams("random-cactus: pad+ghosts must be < n");
    Graph g = random_cactus_graph(n - opt.ghosts, seed, /*even_only=*/true, opt.backbone,
                                  opt.cycle_percent);
    std::mt19937_64 eng(seed ^ 0x9e3779b97f4a7c15ull);
    return bipartite_instance_from(std::move(g), eng, opt.pad, opt.ghosts);
}

Instance gen_random_tree(std::int64_t n, std::uint64_t seed, std::int64_t pad) {
    CactusOptions opt;
    opt.pad = pad;
    opt.cycle_percent = 0;
    return gen_random_cactus(n, seed, opt);
}

namespace {

// Bipartite instance over the non-isolated nodes only: the core of a
// connected host never has isolated nodes, and the greedy/4-batch lemma
// accounting needs h >= max(|A|,|B|).
Instance bipartite_core_instance(std::int64_t na, std::int64_t nb,
                                 const std::set<std::pair<int, int>>& chosen) {
    std::vector<int> remap(na + nb, -1);
    int next = 0;
    for (auto [u, v] : chosen) {
        if (remap[u] < 0) remap[u] = 0;
        if (remap[v] < 0) remap[v] = 0;
    }
    for (std::int64_t v = 0; v < na + nb; ++v)
        if (remap[v] == 0) remap[v] = next++;
        else remap[v] = -1;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : chosen) edges.push_back({remap[u], remap[v]});
    Graph g(next, edges);
    NodeSet a, b;
    for (std::int64_t v = 0; v < na; ++v)
        if (remap[v] >= 0) a.push_back(remap[v]);
    for (std::int64_t v = na; v < na + nb; ++v)
        if (remap[v] >= 0) b.push_back(remap[v]);
    auto cp = CoverPair::make(g, set_sorted(std::move(a)), set_sorted(std::move(b)));
    return {std::move(g), std::move(cp)};
}

}  // namespace

Instance gen_random_bipartite(std::int64_t na, std::int64_t nb, std::int64_t m,
                              std::uint64_t seed) {
    if (na < 1 || nb < 1) throw InvalidParams("random-bipartite: sides must be >= 1");
    if (m < 1 || m > na * nb) throw InvalidParams("random-bipartite: bad edge count");
    std::mt19937_64 eng(seed);
    std::set<std::pair<int, int>> chosen;
    while (static_cast<std::int64_t>(chosen.size()) < m) {
        int u = static_cast<int>(rng_below(eng, na));
        int v = static_cast<int>(na + rng_below(eng, nb));
        chosen.insert({u, v});
    }
    return bipartite_core_instance(na, nb, chosen);
}

Instance gen_bounded_arb_bipartite(std::int64_t na, std::int64_t nb, std::int64_t lambda,
                                   std::int64_t hubs, std::uint64_t seed) {
    if (na < 1 || nb < 1 || lambda < 1) throw InvalidParams("bounded-arb: bad sides or lambda");
    if (hubs < 0 || hubs > nb) throw InvalidParams("bounded-arb: bad hub count");
    std::mt19937_64 eng(seed);
    std::set<std::pair<int, int>> chosen;
    auto bnode = [&](std::int64_t i) { return static_cast<int>(na + i); };
    // star layer: every left node attaches to at most one hub
    if (hubs > 0) {
        for (std::int64_t u = 0; u < na; ++u) {
            std::uint64_t pick = rng_below(eng, static_cast<std::uint64_t>(hubs) + 1);
            if (pick < static_cast<std::uint64_t>(hubs))
                chosen.insert({static_cast<int>(u), bnode(pick)});
        }
    }
    // lambda-1 forest layers: each non-hub right node picks at most one left node per layer
    for (std::int64_t layer = 1; layer < lambda; ++layer) {
        for (std::int64_t i = hubs; i < nb; ++i)
            if (rng_below(eng, 3) > 0)
                chosen.insert({static_cast<int>(rng_below(eng, na)), bnode(i)});
    }
    // left nodes untouched by any layer join the star layer, which keeps their
    // layer-0 degree at most one, so the forest count stays lambda
    if (hubs > 0) {
        std::vector<char> seen(na, 0);
        for (auto [u, v] : chosen) {
            (void)v;
            seen[u] = 1;
        }
        for (std::int64_t u = 0; u < na; ++u)
            if (!seen[u]) chosen.insert({static_cast<int>(u), bnode(rng_below(eng, hubs))});
    }
    if (chosen.empty()) chosen.insert({0, bnode(hubs < nb ? hubs : 0)});
    return bipartite_core_instance(na, nb, chosen);
}

Instance generate(const std::string& family, const std::map<std::string, std::int64_t>& params,
                  std::uint64_t seed) {
    auto get = [&](const std::string& key, std::int64_t def,
                   bool required = false) -> std::int64_t {
        auto it = params.find(key);
        if (it == params.end()) {
            if (required) throw InvalidParams(family + ": missing parameter " + key);
            return def;
        }
        return it->second;
    };
    if (family == "path-pair") return gen_path_pair(get("n", 0, true));
    if (family == "two-stars") return gen_two_stars(get("t", 0, true));
    if (family == "weighted-cycle")
        return gen_weighted_cycle(get("n", 0, true), get("t", 1), get("c", 2));
    if (family == "reduction-graph")
        return gen_reduction_graph(get("n", 0, true), get("t", 1), get("c", 2));
    if (family == "even-cycle") return gen_even_cycle(get("n", 0, true));
    if (family == "random-tree") return gen_random_tree(get("n", 0, true), seed, get("pad", 0));
    if (family == "random-cactus") {
        CactusOptions opt;
        opt.pad = get("pad", 0);
        opt.ghosts = get("ghosts", 0);
        opt.backbone = get("backbone", 0) != 0;
        opt.cycle_percent = static_cast<int>(get("cycle-percent", 50));
        return gen_random_cactus(get("n", 0, true), seed, opt);
    }
    if (family == "random-bipartite")
        return gen_random_bipartite(get("na", 0, true), get("nb", 0, true), get("m", 0, true),
                                    seed);
    if (family == "bounded-arb-bipartite")
        return gen_bounded_arb_bipartite(get("na", 0, true), get("nb", 0, true),
                                         get("lambda", 1), get("hubs", 0), seed);
    throw InvalidParams("unknown family: " + family);
}

}  // namespace vcr
