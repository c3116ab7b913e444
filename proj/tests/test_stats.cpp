#include <doctest.h>

#include <cmath>
#include <vector>

#include "lislab/stats.hpp"

using namespace lislab;

TEST_CASE("running statistics") {
    RunningStat s;
    for (double x : {2.0, 4.0, 4.0, 4.0, 5.0, 5.0, 7.0, 9.0}) s.push(x);
    CHECK(s.count() == 8);
    CHECK(s.mean() == doctest::Approx(5.0));
    CHECK(s.variance() == doctest::Approx(32.0 / 7.0));
    CHECK(s.se() == doctest::Approx(std::sqrt(32.0 / 7.0 / 8.0)));
}

TEST_CASE("kolmogorov tail probabilities at reference points") {
    CHECK(kolmogorov_p(0.0) == doctest::Approx(1.0));
    // Median of the Kolmogorov distribution is about 0.8276.
    CHECK(kolmogorov_p(0.8276) == doctest::Approx(0.5).epsilon(0.01));
    // Classic 5% critical point.
    CHECK(kolmogorov_p(1.358) == doctest::Approx(0.05).epsilon(0.02));
    CHECK(kolmogorov_p(3.0) < 1e-6);
}

TEST_CASE("two-sample KS on degenerate inputs") {
    std::vector<double> a, b;
    for (int i = 0; i < 500; ++i) {
        a.push_back(i);
        b.push_back(i + 0.5);
    }
    KsResult same = two_sample_ks(a, a);
    CHECK(same.d == doctest::Approx(0.0));
    CHECK(same.p_value == doctest::Approx(1.0));
    // Interleaved shifted samples: tiny D.
    KsResult near = two_sample_ks(a, b);
    CHECK(near.d <= doctest::Approx(1.0 / 500.0));
    // Fully separated samples: D = 1, vanishing p.
    std::vector<double> c(500, 1e6);
    KsResult far = two_sample_ks(a, c);
    CHECK(far.d == doctest::Approx(1.0));
    CHECK(far.p_value < 1e-12);
}

TEST_CASE("one-sample KS against a discrete CDF") {
    std::vector<double> cdf = {0.5, 1.0};
    KsResult exact = one_sample_ks({0, 1, 0, 1}, cdf);
    CHECK(exact.d == doctest::Approx(0.0));
    KsResult off = one_sample_ks({0, 0, 0, 0}, cdf);
    CHECK(off.d == doctest::Approx(0.5));
    // Values beyond the table count against the final mass.
    KsResult beyond = one_sample_ks({0, 1, 5, 5}, cdf);
    CHECK(beyond.d == doctest::Approx(0.5));
}

TEST_CASE("regularized upper gamma matches special cases") {
    for (double x : {0.25, 1.0, 4.0})
        CHECK(regularized_gamma_q(0.5, x) == doctest::Approx(std::erfc(std::sqrt(x))).epsilon(1e-10));
    for (double x : {0.5, 2.0})
        CHECK(regularized_gamma_q(1.0, x) == doctest::Approx(std::exp(-x)).epsilon(1e-10));
    // Q(3, 2) = P(Poisson(2) <= 2) = 5 e^{-2}.
    CHECK(regularized_gamma_q(3.0, 2.0) == doctest::Approx(5.0 * std::exp(-2.0)).epsilon(1e-10));
}

TEST_CASE("chi-square goodness of fit with pooling") {
    // Perfect agreement on comfortable bins.
    std::vector<int64_t> obs = {100, 200, 300, 400};
    std::vector<double> exp_same = {100, 200, 300, 400};
    CHECK(chi_square_gof(obs, exp_same) > 0.999);
    // A gross mismatch is rejected.
    std::vector<double> exp_off = {400, 300, 200, 100};
    CHECK(chi_square_gof(obs, exp_off) < 1e-10);
    // Sparse tail bins are pooled rather than inflating the statistic.
    std::vector<int64_t> sparse_obs = {500, 3, 1, 0, 0, 1};
    std::vector<double> sparse_exp = {500.0, 2.0, 1.5, 0.8, 0.5, 0.2};
    CHECK(chi_square_gof(sparse_obs, sparse_exp) > 0.01);
}
