#include "vcr/compress.hpp"

#include <algorithm>

namespace vcr {

std::pair<Rational, std::int64_t> derive_eta_c(const Graph& g, const CoverPair& cp,
                                               const Schedule& sched) {
    auto res = validate(g, cp, sched);
    if (!res.ok()) throw InvalidParams("derive_eta_c: schedule invalid: " + res.describe());
    if (!res.metrics.monotone) throw InputNotMonotone();
    return {Rational(1), res.metrics.cost - cp.M};
}

Schedule compress(const Graph& g, const CoverPair& cp, const Schedule& sched,
                  const CompressionParams& params) {
    if (params.epsilon <= Rational(0) || params.epsilon > Rational(1))
        throw InvalidParams("epsilon must be in (0,1]");
    if (params.eta < Rational(1) || params.c < 0)
        throw InvalidParams("need eta >= 1 and c >= 0");
    auto res = validate(g, cp, sched);
    if (!res.ok()) throw InvalidParams("compress: input invalid: " + res.describe());
    if (!res.metrics.monotone) throw InputNotMonotone();

    // removal/addition subsequences in schedule order
    NodeSet removals, additions;  // S_alpha, S_beta (insertion ordered, not sorted)
    for (int i = 0; i < sched.stored_batches(); ++i) {
        NodeSet batch = sched.batch(i);
        if (batch.size() > 1) throw InputNotSequential();
        for (int v : batch) {
            if (set_contains(sched.covers[i], v)) removals.push_back(v);
            else additions.push_back(v);
        }
    }
    // certificate check: cost <= floor(eta*M) + c
    const std::int64_t etaM = (params.eta * Rational(cp.M)).floor();
    if (res.metrics.cost > etaM + params.c)
        throw CertificateInvalid(res.metrics.cost,
                                 (params.eta * Rational(cp.M) + Rational(params.c)).str());

    const std::int64_t nb = static_cast<std::int64_t>(additions.size());
    const std::int64_t na = static_cast<std::int64_t>(removals.size());
    if (nb == 0) {
        Schedule out;
        out.covers.push_back(cp.alpha);
        if (na > 0) out.covers.push_back(cp.beta);
        return out;
    }
    const std::int64_t s = (params.epsilon * Rational(nb)).ceil();
    const std::int64_t r = etaM + params.c - static_cast<std::int64_t>(cp.alpha.size()) + s;
    const std::int64_t ell = std::max<std::int64_t>(nb - r, 0) == 0
                                 ? 0
                                 : Rational(nb - r, s).ceil();
    // r >= s follows from the certificate (cost >= |alpha| so floor(eta M)+c >= |alpha|)
    if (r < s) throw CertificateInvalid(res.metrics.cost, "r < s");

    auto add_slice = [&](std::int64_t from, std::int64_t to) {  // 1-based inclusive, clamped
        NodeSet out;
        for (std::int64_t i = std::max<std::int64_t>(from, 1); i <= std::min(to, nb); ++i)
            out.push_back(additions[static_cast<std::size_t>(i - 1)]);
        return set_sorted(std::move(out));
    };
    auto rem_slice = [&](std::int64_t from, std::int64_t to) {
        NodeSet out;
        for (std::int64_t i = std::max<std::int64_t>(from, 1); i <= std::min(to, na); ++i)
            out.push_back(removals[static_cast<std::size_t>(i - 1)]);
        return set_sorted(std::move(out));
    };

    Schedule out;
    NodeSet cur = cp.alpha;
    out.covers.push_back(cur);
    cur = set_union(cur, add_slice(1, r));  // E_0
    out.covers.push_back(cur);
    for (std::int64_t i = 1; i <= ell; ++i) {
        cur = set_minus(cur, rem_slice((i - 1) * s + 1, i * s));  // E_{2i-1}
        out.covers.push_back(cur);
        cur = set_union(cur, add_slice(r + (i - 1) * s + 1, r + i * s));  // E_{2i}
        out.covers.push_back(cur);
    }
    cur = set_minus(cur, rem_slice(ell * s + 1, na));  // E_{2l+1}
    out.covers.push_back(cur);
    return out;
}

}  // namespace vcr
