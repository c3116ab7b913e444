#pragma once
// Weighted point multisets on the product of two generalized axes.
//
// Each axis carries a totally ordered coordinate alphabet: an optional
// boundary coordinate Sigma, the strict rows, the weak rows, and a continuum
// of real positions in (0,1).  Points live on the product of the two axes and
// carry integer multiplicities.

#include <json.hpp>

#include <cstdint>
#include <vector>

#include "lislab/params.hpp"

namespace lislab {

enum class CoordKind : uint8_t { kSigma = 0, kStrict = 1, kWeak = 2, kCont = 3 };

struct Coordinate {
    CoordKind kind = CoordKind::kSigma;
    int32_t index = 0;  // 1-based row index for kStrict/kWeak
    double u = 0.0;     // position in (0,1) for kCont

    static Coordinate sigma() { return {CoordKind::kSigma, 0, 0.0}; }
    static Coordinate strict(int32_t i) { return {CoordKind::kStrict, i, 0.0}; }
    static Coordinate weak(int32_t i) { return {CoordKind::kWeak, i, 0.0}; }
    static Coordinate cont(double u) { return {CoordKind::kCont, 0, u}; }

    friend bool operator==(const Coordinate& a, const Coordinate& b) {
        if (a.kind != b.kind) return false;
        if (a.kind == CoordKind::kCont) return a.u == b.u;
        return a.index == b.index;
    }
};

// Total orders on the coordinate alphabet.  The canonical order places the
// continuum after all rows; the alternative places it before them.  Sigma is
// first in both.  Row indices and continuum positions order within their kind.
enum class AxisOrder { kRowsFirst, kContFirst };

// -1 / 0 / +1 comparison of coordinates under the given order.
int compare(const Coordinate& a, const Coordinate& b, AxisOrder order);

struct WeightedPoint {
    Coordinate x;
    Coordinate y;
    int64_t m = 1;
};

struct PointMultiset {
    std::vector<WeightedPoint> points;
    // Provenance of a sampled multiset (echoed through serialization).
    ExtendedParams params;
    uint64_t seed = 0;
    bool extended = false;

    int64_t total_multiplicity() const;
};

// Multiplicity carried by the Sigma row (x = Sigma) and Sigma column (y = Sigma).
std::pair<int64_t, int64_t> boundary_counts(const PointMultiset& ms);

// Coordinates serialize as {"kind":"sigma"} | {"kind":"strict","index":i} |
// {"kind":"weak","index":i} | {"kind":"cont","u":x}; multisets as
// {"params":..., "seed":..., "extended":..., "points":[{"x":...,"y":...,"m":n},...]}.
void to_json(nlohmann::json& j, const Coordinate& c);
void from_json(const nlohmann::json& j, Coordinate& c);
void to_json(nlohmann::json& j, const WeightedPoint& p);
void from_json(const nlohmann::json& j, WeightedPoint& p);
void to_json(nlohmann::json& j, const PointMultiset& ms);
void from_json(const nlohmann::json& j, PointMultiset& ms);

}  // namespace lislab
