#ifndef VCR_NODESET_HPP
#define VCR_NODESET_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

namespace vcr {

// Node sets are sorted vectors of node ids throughout the library; every
// construction is deterministic, so canonical ordering keeps outputs
// replayable and makes set comparison a memcmp.
using NodeSet = std::vector<int>;

inline NodeSet set_sorted(NodeSet v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline bool set_contains(const NodeSet& s, int x) {
    return std::binary_search(s.begin(), s.end(), x);
}

inline NodeSet set_union(const NodeSet& a, const NodeSet& b) {
    NodeSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline NodeSet set_minus(const NodeSet& a, const NodeSet& b) {
    NodeSet out;
    out.reserve(a.size());
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline NodeSet set_intersect(const NodeSet& a, const NodeSet& b) {
    NodeSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline NodeSet set_symdiff(const NodeSet& a, const NodeSet& b) {
    NodeSet out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

inline bool set_subset(const NodeSet& a, const NodeSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Sorted run-length set of ints, used by the simulator so that knowledge
// sets on huge cycles stay O(1) instead of O(ball size).
class RunSet {
public:
    RunSet() = default;

    bool contains(int x) const {
        auto it = std::upper_bound(runs_.begin(), runs_.end(), x,
                                   [](int v, const std::pair<int, int>& r) { return v < r.first; });
        if (it == runs_.begin()) return false;
        --it;
        return x <= it->second;
    }

    // inserts [lo, hi], returns true if anything new was added
    bool insert_run(int lo, int hi) {
        if (lo > hi) return false;
        std::size_t i = 0;
        while (i < runs_.size() && runs_[i].second < lo - 1) ++i;
        if (i == runs_.size() || runs_[i].first > hi + 1) {
            runs_.insert(runs_.begin() + i, {lo, hi});
            return true;
        }
        // overlaps/adjacent: merge range of runs
        bool grew = lo < runs_[i].first || hi > runs_[i].second;
        int nlo = std::min(lo, runs_[i].first);
        int nhi = std::max(hi, runs_[i].second);
        std::size_t j = i + 1;
        while (j < runs_.size() && runs_[j].first <= nhi + 1) {
            if (runs_[j].second > nhi || runs_[j].first < nlo) grew = true;
            nhi = std::max(nhi, runs_[j].second);
            ++j;
        }
        if (j > i + 1) grew = true;
        runs_[i] = {nlo, nhi};
        runs_.erase(runs_.begin() + i + 1, runs_.begin() + j);
        return grew;
    }

    bool insert(int x) { return insert_run(x, x); }

    // merges other into this; appends newly added values to *added if non-null
    void merge(const RunSet& other, std::vector<std::pair<int, int>>* added = nullptr) {
        for (const auto& r : other.runs_) {
            if (added) {
                // collect sub-ranges of r not yet present
                int cur = r.first;
                while (cur <= r.second) {
                    auto it = std::upper_bound(
                        runs_.begin(), runs_.end(), cur,
                        [](int v, const std::pair<int, int>& q) { return v < q.first; });
                    int gap_hi = r.second;
                    if (it != runs_.begin()) {
                        auto prev = it - 1;
                        if (cur <= prev->second) { cur = prev->second + 1; continue; }
                    }
                    if (it != runs_.end()) gap_hi = std::min(gap_hi, it->first - 1);
                    if (cur <= gap_hi) added->push_back({cur, gap_hi});
                    cur = gap_hi + 1;
                }
            }
            insert_run(r.first, r.second);
        }
    }

    std::vector<int> values() const {
        std::vector<int> out;
        for (const auto& r : runs_)
            for (int v = r.first; v <= r.second; ++v) out.push_back(v);
        return out;
    }

    const std::vector<std::pair<int, int>>& runs() const { return runs_; }
    bool empty() const { return runs_.empty(); }
    std::size_t count() const {
        std::size_t c = 0;
        for (const auto& r : runs_) c += static_cast<std::size_t>(r.second - r.first + 1);
        return c;
    }

private:
    std::vector<std::pair<int, int>> runs_;
};

}  // namespace vcr

#endif
