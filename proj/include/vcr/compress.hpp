#ifndef VCR_COMPRESS_HPP
#define VCR_COMPRESS_HPP

#include "vcr/schedule.hpp"

namespace vcr {

struct InputNotMonotone : std::invalid_argument {
    InputNotMonotone() : std::invalid_argument("compression input must be monotone") {}
};
struct InputNotSequential : std::invalid_argument {
    InputNotSequential() : std::invalid_argument("compression input must be sequential") {}
};
struct CertificateInvalid : std::invalid_argument {
    CertificateInvalid(std::int64_t cost, const std::string& bound)
        : std::invalid_argument("certificate eta*M+c = " + bound +
                               " does not cover input cost " + std::to_string(cost)) {}
};

// epsilon in (0,1], eta >= 1 exact rational, c >= 0; the batch layout
// integers are derived per instance inside compress.
struct CompressionParams {
    Rational epsilon{1};
    Rational eta{1};
    std::int64_t c = 0;
};

// Tightest additive restatement of a measured cost: (1, cost - M).
std::pair<Rational, std::int64_t> derive_eta_c(const Graph& g, const CoverPair& cp,
                                               const Schedule& sched);

// Monotone sequential (eta,c)-schedule -> at most 2*ceil(1/eps) non-empty
// batches, cost <= floor((eta+eps)M) + c + 1. The certificate is checked;
// compressing under a wrong certificate would silently break validity.
Schedule compress(const Graph& g, const CoverPair& cp, const Schedule& sched,
                  const CompressionParams& params);

}  // namespace vcr

#endif
