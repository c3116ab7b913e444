#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "lislab/params.hpp"
#include "lislab/rng.hpp"

using namespace lislab;

TEST_CASE("parameter validation rejects bad weights") {
    CHECK_THROWS_AS(make_params(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_params(0.0, {-0.5}), std::invalid_argument);
    CHECK_THROWS_AS(make_params(0.0, {}, {std::nan("")}), std::invalid_argument);
    CHECK_THROWS_AS(make_params(std::numeric_limits<double>::infinity()), std::invalid_argument);
    ParameterSet p = make_params(1.0, {0.3, 0.7}, {0.2});
    CHECK(p.max_q() == 0.7);
    CHECK(p.max_r() == 0.2);
    CHECK(make_params(0.0).max_q() == 0.0);
}

TEST_CASE("compatibility requires strict products below one") {
    CHECK(compatible(make_params(1.0, {0.5}), make_params(1.0, {0.9})));
    CHECK_FALSE(compatible(make_params(0.0, {0.5}), make_params(0.0, {2.0})));
    CHECK_FALSE(compatible(make_params(0.0, {}, {0.5}), make_params(0.0, {}, {2.0})));
    // Large weights on one side are fine when the other side is small.
    CHECK(compatible(make_params(0.0, {4.0}, {3.0}), make_params(0.0, {0.2}, {0.1})));
}

TEST_CASE("generating function closed values") {
    ParameterSet poisson1 = make_params(1.0);
    CHECK(eval_E(0.5, poisson1) == doctest::Approx(std::exp(0.5)).epsilon(1e-12));
    CHECK(eval_H(0.5, poisson1) == doctest::Approx(std::exp(0.5)).epsilon(1e-12));
    ParameterSet strict_half = make_params(0.0, {0.5});
    CHECK(eval_H(0.5, strict_half) == doctest::Approx(1.0 / 0.75).epsilon(1e-12));
    CHECK(eval_E(0.5, strict_half) == doctest::Approx(1.25).epsilon(1e-12));
    CHECK_THROWS_AS(eval_H(2.0, strict_half), std::domain_error);  // z Q >= 1
    ParameterSet weak_half = make_params(0.0, {}, {0.5});
    CHECK_THROWS_AS(eval_E(2.0, weak_half), std::domain_error);  // z R >= 1
}

TEST_CASE("E(z) H(-z) = 1 on random parameter draws") {
    CounterRng rng(404);
    for (int i = 0; i < 50; ++i) {
        ParameterSet p = make_params(1.5 * rng.next_unit(),
                                     {0.8 * rng.next_unit(), 0.8 * rng.next_unit()},
                                     {0.8 * rng.next_unit()});
        double bound = std::max(p.max_q(), p.max_r());
        double z = rng.next_unit() * (bound > 0 ? 0.99 / bound : 3.0);
        CHECK(eval_E(z, p) * eval_H(-z, p) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("pair normalizer closed values") {
    CHECK(eval_H_pair(make_params(1.0), make_params(1.0)) ==
          doctest::Approx(std::exp(1.0)).epsilon(1e-12));
    CHECK(eval_H_pair(make_params(0.0, {0.5}), make_params(0.0, {0.5})) ==
          doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    CHECK_THROWS_AS(eval_H_pair(make_params(0.0, {2.0}), make_params(0.0, {0.5})),
                    std::domain_error);
}

TEST_CASE("mean and boundary identities at frozen points") {
    ParameterSet poisson1 = make_params(1.0);
    CHECK(log_deriv_E(1.0, poisson1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(log_deriv_E(2.0, make_params(0.0, {}, {0.25})) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mean_identity(1.0, poisson1, poisson1) == doctest::Approx(2.0).epsilon(1e-12));
    // Single weak row of weight 1 against a Poisson side.
    CHECK(mean_identity(1.5, make_params(0.0, {}, {1.0}), make_params(4.0)) ==
          doctest::Approx(8.0).epsilon(1e-12));
    auto [bp, bm] = boundary_mean(1.0, poisson1, poisson1);
    CHECK(bp == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(bm == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(bp + bm == doctest::Approx(mean_identity(1.0, poisson1, poisson1)).epsilon(1e-12));
    CHECK_THROWS_AS(log_deriv_E(5.0, make_params(0.0, {}, {0.25})), std::domain_error);
}

TEST_CASE("transform identity closed values and reflection") {
    ParameterSet poisson1 = make_params(1.0);
    CHECK(mgf_identity(2.0, 1.0, poisson1, poisson1) ==
          doctest::Approx(std::exp(-1.5)).epsilon(1e-12));
    // With reciprocal weights the transform collapses to 1.
    CHECK(mgf_identity(2.0, 0.5, poisson1, poisson1) == doctest::Approx(1.0).epsilon(1e-12));
    auto [gp, gm] = boundary_mgf(2.0, 1.0, poisson1, poisson1);
    CHECK(gp == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(gm == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
}

TEST_CASE("extended validation enforces the boundary-weight constraint") {
    ParameterSet weak = make_params(0.0, {}, {0.5});
    CHECK_NOTHROW(make_extended(make_params(1.0), weak, 1.9, 0.0));
    CHECK_THROWS_AS(make_extended(make_params(1.0), weak, 2.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_extended(make_params(1.0), make_params(1.0), -1.0, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        make_extended(weak, make_params(1.0), 0.0, 2.5),
        std::invalid_argument);  // alpha- * R(p+) >= 1
}

TEST_CASE("parameter JSON round trips") {
    ExtendedParams xp = make_extended(make_params(1.0, {0.3}, {0.2}),
                                      make_params(0.5, {}, {0.4}), 1.25, 0.5);
    nlohmann::json j = xp;
    ExtendedParams back = j.get<ExtendedParams>();
    CHECK(back.p_plus.t == xp.p_plus.t);
    CHECK(back.p_plus.q == xp.p_plus.q);
    CHECK(back.p_minus.r == xp.p_minus.r);
    CHECK(back.alpha_plus == xp.alpha_plus);
    CHECK(back.alpha_minus == xp.alpha_minus);

    // Missing fields default to the empty model.
    ParameterSet p = nlohmann::json::parse("{}").get<ParameterSet>();
    CHECK(p.t == 0.0);
    CHECK(p.q.empty());

    // Deserialization routes through validation.
    nlohmann::json bad = xp;
    bad["alpha_plus"] = -1.0;
    CHECK_THROWS_AS(bad.get<ExtendedParams>(), std::invalid_argument);
}
