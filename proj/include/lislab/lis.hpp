#pragma once
// Longest increasing-chain lengths of weighted point multisets.
//
// A chain is a sequence of point copies nondecreasing in both coordinates,
// where equality is allowed except on strict rows: two copies sharing a
// strict-row coordinate cannot both appear.  Multiplicities count as
// interchangeable copies of a point.

#include <cstddef>
#include <cstdint>

#include "lislab/multiset.hpp"

namespace lislab {

// How chain legality is evaluated.  The axis order fixes the total order used
// on each axis; treat_strict_as_weak disables the strict-row equality rule
// (used as a negative control in the reorder experiment).
struct ChainRules {
    AxisOrder order = AxisOrder::kRowsFirst;
    bool treat_strict_as_weak = false;
};

// Whether a copy of `b` may directly follow a copy of `a` in a chain.
bool precedes(const WeightedPoint& a, const WeightedPoint& b, const ChainRules& rules = {});

// Longest chain length; O(n log n) over the stored points (multiplicities are
// not expanded).  Empty multisets give 0.
int64_t lis_length(const PointMultiset& ms, const ChainRules& rules = {});

// Reference implementation: expands multiplicities and runs the quadratic
// dynamic program.  Throws std::length_error if the expansion exceeds `cap`.
int64_t lis_length_oracle(const PointMultiset& ms, const ChainRules& rules = {},
                          std::size_t cap = 500);

}  // namespace lislab
