#include <doctest.h>

#include <stdexcept>

#include <json.hpp>

#include "lislab/experiments.hpp"

using namespace lislab;

TEST_CASE("every experiment has a runnable default configuration") {
    for (const std::string& name : experiment_names()) {
        nlohmann::json cfg = default_config(name);
        CHECK(cfg.is_object());
    }
    CHECK_THROWS_AS(default_config("no-such-check"), std::invalid_argument);
    CHECK_THROWS_AS(run_experiment("no-such-check", {}), std::invalid_argument);
}

TEST_CASE("experiments are reproducible from their seed") {
    nlohmann::json cfg = {{"samples", 2000}, {"seed", 9}};
    Report a = run_experiment("mean-check", cfg);
    Report b = run_experiment("mean-check", cfg);
    nlohmann::json ja = report_json(a), jb = report_json(b);
    ja.erase("runtime_seconds");
    jb.erase("runtime_seconds");
    CHECK(ja.dump() == jb.dump());
    CHECK(ja["seed"] == 9);
    CHECK(ja["samples"] == 2000);

    Report c = run_experiment("mean-check", {{"samples", 2000}, {"seed", 10}});
    nlohmann::json jc = report_json(c);
    jc.erase("runtime_seconds");
    CHECK(ja.dump() != jc.dump());
}

TEST_CASE("small-sample smoke runs of each sampling experiment pass") {
    CHECK(run_experiment("mean-check", {{"samples", 5000}}).passed());
    CHECK(run_experiment("mgf-check", {{"samples", 5000}}).passed());
    CHECK(run_experiment("cdf-check", {{"samples", 5000}, {"sup_threshold", 0.05}}).passed());
    CHECK(run_experiment("bound-check", {{"samples", 2000}}).passed());
    CHECK(run_experiment("boundary-check", {{"samples", 5000}}).passed());
    CHECK(run_experiment("reorder-check", {{"samples", 4000}}).passed());
    CHECK_FALSE(
        run_experiment("reorder-check", {{"samples", 4000}, {"negative_control", true}}).passed());
    CHECK(run_experiment("trend-check", {{"samples", 2000}}).passed());
    nlohmann::json cont_cfg = {{"samples", 2000},  {"gue_samples", 500},
                               {"lue_samples", 500}, {"grid_k", 100},
                               {"gue_d_threshold", 0.12}};
    CHECK(run_experiment("continuous-check", cont_cfg).passed());
    CHECK(run_experiment("asymptotics-check", {}).passed());
}

TEST_CASE("config overrides replace defaults at the top level") {
    nlohmann::json cfg = {{"samples", 1000},
                          {"params",
                           {{"p_plus", {{"t", 0.5}}},
                            {"p_minus", {{"t", 0.5}}},
                            {"alpha_plus", 1.0},
                            {"alpha_minus", 1.0}}}};
    Report rep = run_experiment("mean-check", cfg);
    CHECK(rep.config["params"]["p_plus"]["t"] == 0.5);
    // Expected value reflects the overridden parameters: alpha t- + t+/alpha.
    CHECK(rep.checks.at(0).expected == doctest::Approx(1.0));
}

TEST_CASE("degenerate and closed-form example configurations") {
    // The empty model: every observable is exactly zero.
    nlohmann::json zero = {{"samples", 500},
                           {"params",
                            {{"p_plus", {{"t", 0.0}}},
                             {"p_minus", {{"t", 0.0}}},
                             {"alpha_plus", 1.0},
                             {"alpha_minus", 1.0}}}};
    Report rep_zero = run_experiment("mean-check", zero);
    CHECK(rep_zero.passed());
    CHECK(rep_zero.checks.at(0).expected == 0.0);
    CHECK(rep_zero.checks.at(0).observed == 0.0);

    // One unit weak row against a Poisson side of intensity 4 at alpha = 1.5:
    // the mean identity evaluates to 8.
    nlohmann::json weak_row = {{"samples", 20000},
                               {"params",
                                {{"p_plus", {{"r", {1.0}}}},
                                 {"p_minus", {{"t", 4.0}}},
                                 {"alpha_plus", 1.5},
                                 {"alpha_minus", 1.0 / 1.5}}}};
    Report rep_weak = run_experiment("mean-check", weak_row);
    CHECK(rep_weak.checks.at(0).expected == doctest::Approx(8.0));
    CHECK(rep_weak.passed());

    // Reciprocal boundary weights make the transform constant 1.
    nlohmann::json recip = {{"samples", 500},
                            {"params",
                             {{"p_plus", {{"t", 1.0}}},
                              {"p_minus", {{"t", 1.0}}},
                              {"alpha_plus", 2.0},
                              {"alpha_minus", 0.5}}}};
    Report rep_recip = run_experiment("mgf-check", recip);
    CHECK(rep_recip.passed());
    CHECK(rep_recip.checks.at(0).expected == doctest::Approx(1.0));

    // Strict rows on both sides with boundary weights.
    nlohmann::json strict = {{"samples", 20000},
                             {"params",
                              {{"p_plus", {{"q", {0.3}}}},
                               {"p_minus", {{"q", {0.3}}}},
                               {"alpha_plus", 1.2},
                               {"alpha_minus", 1.0}}}};
    CHECK(run_experiment("mgf-check", strict).passed());

    // Empty model: the distribution is a point mass at zero.
    nlohmann::json cdf_zero = {{"samples", 500},
                               {"params",
                                {{"p_plus", {{"t", 0.0}}},
                                 {"p_minus", {{"t", 0.0}}},
                                 {"alpha_plus", 0.0},
                                 {"alpha_minus", 0.0}}}};
    Report rep_point = run_experiment("cdf-check", cdf_zero);
    CHECK(rep_point.passed());
    CHECK(rep_point.checks.at(0).observed == 0.0);  // sup distance

    // Extended distribution against Monte Carlo.
    nlohmann::json cdf_ext = {{"samples", 50000},
                              {"params",
                               {{"p_plus", {{"t", 1.0}}},
                                {"p_minus", {{"t", 1.0}}},
                                {"alpha_plus", 0.5},
                                {"alpha_minus", 0.5}}}};
    CHECK(run_experiment("cdf-check", cdf_ext).passed());

    // Empty model: the bound degenerates to zero and holds with equality.
    nlohmann::json bound_zero = {{"samples", 500},
                                 {"params",
                                  {{"p_plus", {{"t", 0.0}}},
                                   {"p_minus", {{"t", 0.0}}},
                                   {"alpha_plus", 0.0},
                                   {"alpha_minus", 0.0}}}};
    Report rep_bound = run_experiment("bound-check", bound_zero);
    CHECK(rep_bound.passed());
    CHECK(rep_bound.checks.at(0).observed == 0.0);
}

TEST_CASE("invalid configurations are rejected") {
    CHECK_THROWS_AS(run_experiment("mean-check", {{"samples", 50}}), std::invalid_argument);
    // mean-check requires reciprocal boundary weights.
    nlohmann::json bad = {{"samples", 100},
                          {"params",
                           {{"p_plus", {{"t", 1.0}}},
                            {"p_minus", {{"t", 1.0}}},
                            {"alpha_plus", 2.0},
                            {"alpha_minus", 1.0}}}};
    CHECK_THROWS_AS(run_experiment("mean-check", bad), std::invalid_argument);
    CHECK_THROWS_AS(run_experiment("mean-check", nlohmann::json::array()),
                    std::invalid_argument);
}

TEST_CASE("report serialization has the documented shape") {
    Report rep = run_experiment("cdf-check", {{"samples", 3000}});
    nlohmann::json j = report_json(rep);
    for (const char* key : {"experiment", "config", "checks", "pass", "samples", "seed",
                            "runtime_seconds"})
        CHECK(j.contains(key));
    CHECK(j["checks"].is_array());
    CHECK(j["checks"].size() == rep.checks.size());
    for (const auto& line : j["checks"])
        for (const char* key : {"name", "expected", "observed", "tolerance", "pass", "note"})
            CHECK(line.contains(key));
    // cdf-check publishes the comparison table as CSV.
    std::string csv = report_csv(rep);
    CHECK(csv.rfind("l,exact_cdf,empirical_cdf", 0) == 0);
    // Experiments without a table fall back to the check-line CSV.
    std::string csv2 = report_csv(run_experiment("asymptotics-check", {}));
    CHECK(csv2.rfind("name,expected,observed", 0) == 0);
}
