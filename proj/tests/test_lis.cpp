#include <doctest.h>

#include <set>

#include "lislab/lis.hpp"
#include "lislab/sampler.hpp"
#include "random_multisets.hpp"

using namespace lislab;

namespace {

PointMultiset of_points(std::vector<WeightedPoint> pts) {
    PointMultiset ms;
    ms.points = std::move(pts);
    return ms;
}

}  // namespace

TEST_CASE("hand-checked chain lengths") {
    CHECK(lis_length(of_points({})) == 0);

    // Copies of one point chain freely unless a strict coordinate repeats.
    CHECK(lis_length(of_points({{Coordinate::weak(1), Coordinate::weak(1), 3}})) == 3);
    CHECK(lis_length(of_points({{Coordinate::strict(1), Coordinate::strict(1), 3}})) == 1);
    CHECK(lis_length(of_points({{Coordinate::strict(1), Coordinate::weak(1), 3}})) == 1);
    CHECK(lis_length(of_points({{Coordinate::cont(0.4), Coordinate::cont(0.4), 2}})) == 2);

    // The strict-row rule can be disabled (negative control).
    ChainRules lax;
    lax.treat_strict_as_weak = true;
    CHECK(lis_length(of_points({{Coordinate::strict(1), Coordinate::strict(1), 3}}), lax) == 3);

    // A chain across Sigma, a strict row, and a weak row.
    PointMultiset chain = of_points({{Coordinate::sigma(), Coordinate::cont(0.1), 2},
                                     {Coordinate::strict(1), Coordinate::cont(0.5), 1},
                                     {Coordinate::weak(1), Coordinate::cont(0.5), 2}});
    CHECK(lis_length(chain) == 5);
    CHECK(lis_length(chain, ChainRules{AxisOrder::kContFirst, false}) == 5);

    // A strict antichain.
    CHECK(lis_length(of_points({{Coordinate::cont(0.2), Coordinate::cont(0.8), 1},
                                {Coordinate::cont(0.5), Coordinate::cont(0.5), 1},
                                {Coordinate::cont(0.8), Coordinate::cont(0.2), 1}})) == 1);

    // Two points sharing a strict row cannot both contribute...
    CHECK(lis_length(of_points({{Coordinate::strict(1), Coordinate::cont(0.2), 1},
                                {Coordinate::strict(1), Coordinate::cont(0.7), 1}})) == 1);
    // ...but a weak row imposes no such restriction.
    CHECK(lis_length(of_points({{Coordinate::weak(1), Coordinate::cont(0.2), 1},
                                {Coordinate::weak(1), Coordinate::cont(0.7), 1}})) == 2);
}

TEST_CASE("fast solver equals the oracle on random mixed multisets") {
    const ChainRules rule_sets[] = {{AxisOrder::kRowsFirst, false},
                                    {AxisOrder::kContFirst, false},
                                    {AxisOrder::kRowsFirst, true}};
    std::set<std::pair<int, int>> mixes_seen;
    for (uint64_t seed = 0; seed < 1000; ++seed) {
        PointMultiset ms = random_mixed_multiset(seed);
        for (const auto& p : ms.points)
            mixes_seen.insert({static_cast<int>(p.x.kind), static_cast<int>(p.y.kind)});
        for (const ChainRules& rules : rule_sets) {
            INFO("seed=", seed, " order=", static_cast<int>(rules.order),
                 " lax=", rules.treat_strict_as_weak);
            REQUIRE(lis_length(ms, rules) == lis_length_oracle(ms, rules));
        }
    }
    // Every cell-type mix except (Sigma, Sigma) must have been exercised.
    CHECK(mixes_seen.size() == 15);
}

TEST_CASE("fast solver equals the oracle on sampled configurations") {
    ExtendedParams xp = make_extended(make_params(0.6, {0.4}, {0.3}),
                                      make_params(0.5, {0.35}, {0.25}), 0.8, 0.6);
    for (uint64_t seed = 0; seed < 300; ++seed) {
        PointMultiset ms = sample_extended(xp, seed);
        if (ms.total_multiplicity() > 400) continue;
        REQUIRE(lis_length(ms) == lis_length_oracle(ms));
        REQUIRE(lis_length(ms, {AxisOrder::kContFirst, false}) ==
                lis_length_oracle(ms, {AxisOrder::kContFirst, false}));
    }
}

TEST_CASE("oracle expansion cap throws rather than truncating") {
    PointMultiset big = of_points({{Coordinate::weak(1), Coordinate::weak(1), 600}});
    CHECK_THROWS_AS(lis_length_oracle(big), std::length_error);
    CHECK(lis_length(big) == 600);
}
