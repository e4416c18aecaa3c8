#include "hfk/compute.hpp"

#include "hfk/errors.hpp"

namespace hfk {

HfkResult compute_hfk(const GridDiagram& g, const ComputeOptions& opts) {
    require_valid(g);
    WindingTable wt = winding_table(g);
    HfkResult result;

    if (opts.range == Range::Full) {
        BigradedPoly unstripped = associated_graded_poly(g, wt);
        result.hfk = strip_s_factor(unstripped, g.n); // strict: zero remainder required
    } else {
        BigradedPoly nonneg = associated_graded_poly(g, wt, 0);
        BigradedPoly stripped = strip_s_factor(nonneg, g.n, 0);
        result.hfk = symmetry_complete(stripped);
    }

    if (opts.want_tau || opts.want_e2) {
        SpectralEngine engine = opts.range == Range::Full
                                    ? SpectralEngine(g, kNoAlexanderBound)
                                    : make_support_engine(g);
        SpectralPages pages = engine.pages();
        if (pages.e1 != result.hfk)
            throw ComputeError("stripped E^1 page disagrees with the homology table");
        if (opts.want_e2) {
            result.e2 = pages.e2;
            BigradedPoly ranks;
            ranks.terms = pages.d1_ranks;
            result.d1_ranks = ranks;
        }
        if (opts.want_tau) result.tau = tau_from_e2(pages.e2);
    }
    return result;
}

} // namespace hfk
