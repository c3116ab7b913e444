#include "lislab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lislab {

double RunningStat::se() const {
    if (n_ < 2) return 0.0;
    return std::sqrt(variance() / static_cast<double>(n_));
}

double kolmogorov_p(double lambda) {
    if (lambda <= 0.0) return 1.0;
    double sum = 0.0;
    for (int k = 1; k <= 128; ++k) {
        double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += (k % 2 == 1 ? term : -term);
        if (term < 1e-18) break;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

namespace {

double ks_p_from_d(double d, double n_eff) {
    double sqrt_n = std::sqrt(n_eff);
    return kolmogorov_p((sqrt_n + 0.12 + 0.11 / sqrt_n) * d);
}

}  // namespace

KsResult two_sample_ks(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("two_sample_ks: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    KsResult res;
    res.d = d;
    res.p_value = ks_p_from_d(d, na * nb / (na + nb));
    return res;
}

KsResult one_sample_ks(const std::vector<int64_t>& data, const std::vector<double>& cdf) {
    if (data.empty() || cdf.empty()) throw std::invalid_argument("one_sample_ks: empty input");
    int64_t max_l = 0;
    for (int64_t x : data) {
        if (x < 0) throw std::invalid_argument("one_sample_ks: negative value");
        max_l = std::max(max_l, x);
    }
    std::vector<int64_t> counts(static_cast<std::size_t>(max_l) + 1, 0);
    for (int64_t x : data) ++counts[static_cast<std::size_t>(x)];
    double n = static_cast<double>(data.size());
    double d = 0.0, cum = 0.0;
    for (std::size_t l = 0; l < counts.size(); ++l) {
        cum += static_cast<double>(counts[l]);
        double exact = l < cdf.size() ? cdf[l] : 1.0;
        d = std::max(d, std::abs(cum / n - exact));
    }
    // The exact CDF may still have mass above max_l.
    for (std::size_t l = counts.size(); l < cdf.size(); ++l)
        d = std::max(d, std::abs(1.0 - cdf[l]));
    KsResult res;
    res.d = d;
    res.p_value = ks_p_from_d(d, n);
    return res;
}

double regularized_gamma_q(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw std::invalid_argument("regularized_gamma_q: bad arguments");
    if (x == 0.0) return 1.0;
    double log_gamma = std::lgamma(a);
    if (x < a + 1.0) {
        // Lower series: P(a,x) = x^a e^-x sum x^n / gamma(a+n+1).
        double term = 1.0 / a, sum = term;
        for (int n = 1; n < 1000; ++n) {
            term *= x / (a + n);
            sum += term;
            if (std::abs(term) < std::abs(sum) * 1e-16) break;
        }
        double p = sum * std::exp(-x + a * std::log(x) - log_gamma);
        return std::clamp(1.0 - p, 0.0, 1.0);
    }
    // Continued fraction for Q(a,x) (modified Lentz).
    constexpr double kTiny = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / kTiny, d = 1.0 / b, h = d;
    for (int i = 1; i < 1000; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    double q = h * std::exp(-x + a * std::log(x) - log_gamma);
    return std::clamp(q, 0.0, 1.0);
}

double chi_square_gof(const std::vector<int64_t>& observed, const std::vector<double>& expected,
                      double min_expected) {
    if (observed.size() != expected.size() || observed.empty())
        throw std::invalid_argument("chi_square_gof: size mismatch");
    // Pool adjacent bins until each expected count reaches the floor.
    std::vector<double> obs_pooled, exp_pooled;
    double o_acc = 0.0, e_acc = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        o_acc += static_cast<double>(observed[i]);
        e_acc += expected[i];
        if (e_acc >= min_expected) {
            obs_pooled.push_back(o_acc);
            exp_pooled.push_back(e_acc);
            o_acc = e_acc = 0.0;
        }
    }
    if (e_acc > 0.0 || o_acc > 0.0) {
        if (exp_pooled.empty()) {
            obs_pooled.push_back(o_acc);
            exp_pooled.push_back(e_acc);
        } else {
            obs_pooled.back() += o_acc;
            exp_pooled.back() += e_acc;
        }
    }
    if (obs_pooled.size() < 2) return 1.0;  // nothing to test against
    double chi2 = 0.0;
    for (std::size_t i = 0; i < obs_pooled.size(); ++i) {
        double diff = obs_pooled[i] - exp_pooled[i];
        chi2 += diff * diff / exp_pooled[i];
    }
    double dof = static_cast<double>(obs_pooled.size()) - 1.0;
    return regularized_gamma_q(dof / 2.0, chi2 / 2.0);
}

}  // namespace lislab
