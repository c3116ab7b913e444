#pragma once
// Small statistics toolbox for the experiment harness: running moments,
// Kolmogorov-Smirnov tests (two-sample, and one-sample against an exact
// integer CDF), and chi-square goodness of fit.  KS p-values use the
// asymptotic Kolmogorov distribution, which is conservative for discrete
// data.

#include <cstdint>
#include <functional>
#include <vector>

namespace lislab {

class RunningStat {
  public:
    void push(double x) {
        ++n_;
        double d = x - mean_;
        mean_ += d / static_cast<double>(n_);
        m2_ += d * (x - mean_);
    }
    int64_t count() const { return n_; }
    double mean() const { return mean_; }
    double variance() const { return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0; }
    double se() const;

  private:
    int64_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

struct KsResult {
    double d = 0.0;        // sup-norm distance
    double p_value = 1.0;  // asymptotic Kolmogorov tail
};

// P(K > lambda) = 2 sum_{k>=1} (-1)^{k-1} e^{-2 k^2 lambda^2}.
double kolmogorov_p(double lambda);

// Two-sample KS on raw values (ties handled; inputs need not be sorted).
KsResult two_sample_ks(std::vector<double> a, std::vector<double> b);

// One-sample KS of integer data against an exact CDF given as cdf(l) for
// l = 0..L (1 beyond the table).
KsResult one_sample_ks(const std::vector<int64_t>& data, const std::vector<double>& cdf);

// Chi-square goodness of fit of observed bin counts against expected counts.
// Adjacent bins are pooled until every expected count is >= min_expected;
// returns the upper tail of chi-square with (pooled bins - 1) dof.
double chi_square_gof(const std::vector<int64_t>& observed, const std::vector<double>& expected,
                      double min_expected = 5.0);

// Upper regularized incomplete gamma Q(a, x).
double regularized_gamma_q(double a, double x);

}  // namespace lislab
