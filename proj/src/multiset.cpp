#include "lislab/multiset.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lislab {

namespace {

// Rank of a coordinate kind under the chosen axis order.
int kind_rank(CoordKind kind, AxisOrder order) {
    switch (kind) {
        case CoordKind::kSigma: return 0;
        case CoordKind::kStrict: return order == AxisOrder::kRowsFirst ? 1 : 2;
        case CoordKind::kWeak: return order == AxisOrder::kRowsFirst ? 2 : 3;
        case CoordKind::kCont: return order == AxisOrder::kRowsFirst ? 3 : 1;
    }
    return 0;
}

}  // namespace

int compare(const Coordinate& a, const Coordinate& b, AxisOrder order) {
    int ra = kind_rank(a.kind, order);
    int rb = kind_rank(b.kind, order);
    if (ra != rb) return ra < rb ? -1 : 1;
    if (a.kind == CoordKind::kCont) {
        if (a.u != b.u) return a.u < b.u ? -1 : 1;
        return 0;
    }
    if (a.index != b.index) return a.index < b.index ? -1 : 1;
    return 0;
}

int64_t PointMultiset::total_multiplicity() const {
    int64_t total = 0;
    for (const auto& p : points) total += p.m;
    return total;
}

std::pair<int64_t, int64_t> boundary_counts(const PointMultiset& ms) {
    int64_t n_plus = 0, n_minus = 0;
    for (const auto& p : ms.points) {
        if (p.x.kind == CoordKind::kSigma) n_plus += p.m;
        if (p.y.kind == CoordKind::kSigma) n_minus += p.m;
    }
    return {n_plus, n_minus};
}

void to_json(nlohmann::json& j, const Coordinate& c) {
    switch (c.kind) {
        case CoordKind::kSigma: j = nlohmann::json{{"kind", "sigma"}}; break;
        case CoordKind::kStrict: j = nlohmann::json{{"kind", "strict"}, {"index", c.index}}; break;
        case CoordKind::kWeak: j = nlohmann::json{{"kind", "weak"}, {"index", c.index}}; break;
        case CoordKind::kCont: j = nlohmann::json{{"kind", "cont"}, {"u", c.u}}; break;
    }
}

void from_json(const nlohmann::json& j, Coordinate& c) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "sigma") {
        c = Coordinate::sigma();
    } else if (kind == "strict" || kind == "weak") {
        int32_t index = j.at("index").get<int32_t>();
        if (index < 1) throw std::invalid_argument("coordinate: row index must be >= 1");
        c = kind == "strict" ? Coordinate::strict(index) : Coordinate::weak(index);
    } else if (kind == "cont") {
        double u = j.at("u").get<double>();
        if (!std::isfinite(u)) throw std::invalid_argument("coordinate: u must be finite");
        c = Coordinate::cont(u);
    } else {
        throw std::invalid_argument("coordinate: unknown kind '" + kind + "'");
    }
}

void to_json(nlohmann::json& j, const WeightedPoint& p) {
    j = nlohmann::json{{"x", p.x}, {"y", p.y}, {"m", p.m}};
}

void from_json(const nlohmann::json& j, WeightedPoint& p) {
    p.x = j.at("x").get<Coordinate>();
    p.y = j.at("y").get<Coordinate>();
    p.m = j.value("m", int64_t{1});
    if (p.m < 1) throw std::invalid_argument("point: multiplicity must be >= 1");
}

void to_json(nlohmann::json& j, const PointMultiset& ms) {
    j = nlohmann::json{{"params", ms.params},
                       {"seed", ms.seed},
                       {"extended", ms.extended},
                       {"points", ms.points}};
}

void from_json(const nlohmann::json& j, PointMultiset& ms) {
    ms.points = j.value("points", std::vector<WeightedPoint>{});
    if (j.contains("params")) ms.params = j.at("params").get<ExtendedParams>();
    ms.seed = j.value("seed", uint64_t{0});
    ms.extended = j.value("extended", false);
}

}  // namespace lislab
