#pragma once
// Exact samplers for the growth model's point multisets.
//
// Every cell of the product structure draws from its own counter-based
// substream keyed by (seed, region, i, j), so the bulk of a configuration is
// bit-identical whether or not the Sigma boundary rows are attached.  That
// gives the per-seed monotone coupling lambda1(bulk) <= lambda1(extended).

#include <cstdint>

#include "lislab/multiset.hpp"
#include "lislab/params.hpp"

namespace lislab {

// Bulk-only sample of the compatible pair (p_plus, p_minus).
PointMultiset sample_multiset(const ParameterSet& p_plus, const ParameterSet& p_minus,
                              uint64_t seed);

// Bulk plus Sigma boundary rows weighted by (alpha_plus, alpha_minus).
// With both alphas zero this coincides with sample_multiset.
PointMultiset sample_extended(const ExtendedParams& xp, uint64_t seed);

}  // namespace lislab
