#ifndef VCR_MERGE_KERNELS_HPP
#define VCR_MERGE_KERNELS_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "vcr/nodeset.hpp"

namespace vcr::mergek {

// Per-cluster decision kernels of the merging algorithm. The centralized
// merge and the simulator's node programs both call these with identical
// inputs, which is what makes their clusterings equal bit for bit.

struct BoundaryFact {
    int u;  // endpoint inside the cluster
    int v;  // endpoint outside
    int v_cid;
    int v_diam;

    bool operator<(const BoundaryFact& o) const {
        if (u != o.u) return u < o.u;
        if (v != o.v) return v < o.v;
        if (v_cid != o.v_cid) return v_cid < o.v_cid;
        return v_diam < o.v_diam;
    }
    bool operator==(const BoundaryFact& o) const {
        return u == o.u && v == o.v && v_cid == o.v_cid && v_diam == o.v_diam;
    }
};

struct PickFact {
    int from_cid;
    int to_cid;
    int key_u;  // normalized edge key, key_u < key_v
    int key_v;

    bool operator<(const PickFact& o) const {
        if (from_cid != o.from_cid) return from_cid < o.from_cid;
        if (to_cid != o.to_cid) return to_cid < o.to_cid;
        if (key_u != o.key_u) return key_u < o.key_u;
        return key_v < o.key_v;
    }
    bool operator==(const PickFact& o) const {
        return from_cid == o.from_cid && to_cid == o.to_cid && key_u == o.key_u &&
               key_v == o.key_v;
    }
};

// Number of color-compression iterations needed to bring colors from the
// given id space below 6. All nodes compute it from n alone.
inline int cv_iterations(std::int64_t id_space_max) {
    std::int64_t maxval = id_space_max;
    int iters = 0;
    while (maxval > 5) {
        int w = std::bit_width(static_cast<std::uint64_t>(maxval));
        maxval = 2 * (w - 1) + 1;
        ++iters;
    }
    return iters;
}

// One bit-compression step: successor colors differ, move to
// 2*(index of lowest differing bit) + own bit there.
inline int cv_compress(int x, int y) {
    int i = std::countr_zero(static_cast<unsigned>(x ^ y));
    return 2 * i + ((x >> i) & 1);
}

inline int cv_root_partner(int x) { return x ^ 1; }

// Smallest color of {0,1,2} different from `avoid` (shift-down at a root).
inline int root_shift_color(int avoid) { return avoid == 0 ? 1 : 0; }

// Recoloring step: smallest free color in {0,1,2} given the successor color
// and the (post-shift uniform) child color; -1 entries mean absent.
inline int recolor_free(int succ_color, const std::vector<int>& child_colors) {
    for (int q = 0; q < 3; ++q) {
        if (q == succ_color) continue;
        bool blocked = false;
        for (int c : child_colors)
            if (c == q) { blocked = true; break; }
        if (!blocked) return q;
    }
    return -1;  // cannot happen after a shift-down
}

// Canonical pick: the minimum-key boundary edge leading to a small foreign
// cluster. The caller filters for its own smallness.
inline std::optional<PickFact> choose_pick(int my_cid, const std::vector<BoundaryFact>& boundary,
                                           int small_diam_cap) {
    std::optional<PickFact> best;
    for (const auto& f : boundary) {
        if (f.v_diam > small_diam_cap) continue;
        PickFact cand{my_cid, f.v_cid, std::min(f.u, f.v), std::max(f.u, f.v)};
        if (!best || std::pair(cand.key_u, cand.key_v) < std::pair(best->key_u, best->key_v))
            best = cand;
    }
    return best;
}

// Pseudoforest links of one cluster: own pick plus every pick heard from
// adjacent clusters. A pair picked from both sides becomes one edge oriented
// from the larger cluster id to the smaller.
struct FLinks {
    bool in_f = false;
    int succ = -1;
    std::vector<int> children;  // sorted cluster ids
};

inline FLinks derive_links(int my_cid, const std::optional<PickFact>& mine,
                           const std::vector<PickFact>& heard) {
    FLinks out;
    bool reciprocal = false;
    if (mine) {
        out.in_f = true;
        for (const auto& p : heard)
            if (p.from_cid == mine->to_cid && p.to_cid == my_cid) reciprocal = true;
        if (!reciprocal || my_cid > mine->to_cid) out.succ = mine->to_cid;
    }
    for (const auto& p : heard) {
        if (p.to_cid != my_cid) continue;
        out.in_f = true;
        if (mine && p.from_cid == mine->to_cid && reciprocal && my_cid > mine->to_cid)
            continue;  // that pair is my out-edge
        out.children.push_back(p.from_cid);
    }
    out.children = set_sorted(std::move(out.children));
    return out;
}

// Stage-2 absorption target: prefer neighbors of diameter >= threshold,
// minimum edge key either way. Returns (edge key, target cid).
inline std::optional<std::pair<std::pair<int, int>, int>> stage2_target(
    const std::vector<BoundaryFact>& boundary, int threshold) {
    std::optional<std::pair<std::pair<int, int>, int>> best_large, best_any;
    for (const auto& f : boundary) {
        std::pair<int, int> key{std::min(f.u, f.v), std::max(f.u, f.v)};
        if (!best_any || key < best_any->first) best_any = {key, f.v_cid};
        if (f.v_diam >= threshold && (!best_large || key < best_large->first))
            best_large = {key, f.v_cid};
    }
    return best_large ? best_large : best_any;
}

// Stage-1 iteration count: smallest T with 2^T >= ceil(1/eps), iterations
// run t = 0..T inclusive.
inline int stage1_last_iteration(std::int64_t threshold) {
    int t = 0;
    while ((std::int64_t{1} << t) < threshold) ++t;
    return t;
}

}  // namespace vcr::mergek

#endif
