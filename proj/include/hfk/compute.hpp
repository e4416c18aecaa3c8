#ifndef HFK_COMPUTE_HPP
#define HFK_COMPUTE_HPP

#include <optional>

#include "hfk/spectral.hpp"

namespace hfk {

enum class Range {
    NonNegative, // compute Alexander gradings >= 0, complete by symmetry
    Full         // compute every grading; exercises exact-division checks
};

struct ComputeOptions {
    Range range = Range::NonNegative;
    bool want_tau = false;
    bool want_e2 = false;
};

struct HfkResult {
    BigradedPoly hfk; // stripped, full range
    std::optional<TauResult> tau;
    std::optional<BigradedPoly> e2;
    std::optional<BigradedPoly> d1_ranks;
};

// End-to-end pipeline behind the CLI and the verification harness.
HfkResult compute_hfk(const GridDiagram& g, const ComputeOptions& opts);

} // namespace hfk

#endif
