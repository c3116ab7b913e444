#include "lislab/continuous.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lislab/rng.hpp"

namespace lislab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum Region : uint64_t { kCellExp = 101, kGridGauss = 102 };

double min_or_inf(const std::vector<double>& v) {
    double m = kInf;
    for (double x : v) m = std::min(m, x);
    return m;
}

}  // namespace

ContinuousParams make_continuous(std::vector<double> rho_plus, std::vector<double> rho_minus,
                                 double u, double a_plus, double a_minus) {
    if (!(u >= 0.0) || !std::isfinite(u))
        throw std::invalid_argument("continuous: u must be finite and >= 0");
    for (double x : rho_plus)
        if (!std::isfinite(x)) throw std::invalid_argument("continuous: rho+ must be finite");
    for (double x : rho_minus)
        if (!std::isfinite(x)) throw std::invalid_argument("continuous: rho- must be finite");
    if (std::isnan(a_plus) || std::isnan(a_minus) || a_plus == -kInf || a_minus == -kInf)
        throw std::invalid_argument("continuous: boundary rates must be > -inf");
    double ip = min_or_inf(rho_plus), im = min_or_inf(rho_minus);
    if (!(ip + im > 0.0) || !(a_plus + im > 0.0) || !(a_minus + ip > 0.0))
        throw std::invalid_argument("continuous: every cell rate sum must be positive");
    return ContinuousParams{std::move(rho_plus), std::move(rho_minus), u, a_plus, a_minus};
}

double continuous_mean(double a, const ContinuousParams& cp) {
    if (!(a > -min_or_inf(cp.rho_minus)) || !(a < min_or_inf(cp.rho_plus)))
        throw std::domain_error("continuous_mean: a outside (-inf(rho-), inf(rho+))");
    double m = -cp.u * a;
    for (double rho : cp.rho_minus) m += 1.0 / (rho + a);
    for (double rho : cp.rho_plus) m += 1.0 / (rho - a);
    return m;
}

double continuous_mgf(double a_plus, double a_minus, const ContinuousParams& cp) {
    double ip = min_or_inf(cp.rho_plus), im = min_or_inf(cp.rho_minus);
    if (!(a_plus < ip) || !(a_minus < im) || !(a_plus > -im) || !(a_minus > -ip))
        throw std::domain_error("continuous_mgf: boundary rates outside the validity strip");
    double v = std::exp(cp.u * (a_minus * a_minus - a_plus * a_plus) / 2.0);
    for (double rho : cp.rho_plus) v *= (rho + a_minus) / (rho - a_plus);
    for (double rho : cp.rho_minus) v *= (rho + a_plus) / (rho - a_minus);
    return v;
}

double sample_chi1(const ContinuousParams& cp, int grid_k, uint64_t seed) {
    if (grid_k < 1) throw std::invalid_argument("sample_chi1: grid_k must be >= 1");
    // Row 0 / column 0 are the boundary row/column (possibly of rate +inf, in
    // which case their cells are pinned to zero).
    std::vector<double> rows{cp.a_plus};
    rows.insert(rows.end(), cp.rho_plus.begin(), cp.rho_plus.end());
    std::vector<double> cols{cp.a_minus};
    cols.insert(cols.end(), cp.rho_minus.begin(), cp.rho_minus.end());
    const std::size_t nr = rows.size(), nc = cols.size();

    // Point phase: V[i][j] = best chain weight ending at cell (i,j).
    std::vector<std::vector<double>> v(nr, std::vector<double>(nc, 0.0));
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < nc; ++j) {
            double w = 0.0;
            if (!(i == 0 && j == 0) && std::isfinite(rows[i]) && std::isfinite(cols[j])) {
                CounterRng rng = substream(seed, kCellExp, i, j);
                w = rng.exponential(1.0 / (rows[i] + cols[j]));
            }
            double best = 0.0;
            if (i > 0) best = std::max(best, v[i - 1][j]);
            if (j > 0) best = std::max(best, v[i][j - 1]);
            v[i][j] = w + best;
        }
    }
    if (cp.u == 0.0) return v[nr - 1][nc - 1];

    // Interval phase: rows with finite rate carry Brownian increments
    // N(-rate u/K, u/K); a path assigns one row per increment, nondecreasing.
    std::vector<std::size_t> finite_rows;
    for (std::size_t i = 0; i < nr; ++i)
        if (std::isfinite(rows[i])) finite_rows.push_back(i);
    if (finite_rows.empty()) return -kInf;

    double step = cp.u / grid_k;
    double sd = std::sqrt(step);
    // Entry state: best chain weight reachable from at or below each finite
    // row (V is monotone in the row index, so no prefix pass is needed).
    std::vector<double> w(finite_rows.size());
    for (std::size_t f = 0; f < finite_rows.size(); ++f) w[f] = v[finite_rows[f]][nc - 1];

    std::vector<CounterRng> row_rng;
    row_rng.reserve(finite_rows.size());
    for (std::size_t i : finite_rows) row_rng.push_back(substream(seed, kGridGauss, i));

    for (int k = 0; k < grid_k; ++k) {
        // best_below tracks max_{f' <= f} of the previous step's values, read
        // before each w[f] is overwritten.
        double best_below = -kInf;
        for (std::size_t f = 0; f < w.size(); ++f) {
            best_below = std::max(best_below, w[f]);
            double inc = -rows[finite_rows[f]] * step + sd * row_rng[f].normal();
            w[f] = best_below + inc;
        }
    }
    double best = -kInf;
    for (double x : w) best = std::max(best, x);
    return best;
}

namespace {

Eigen::MatrixXcd complex_gaussian(int nr, int nc, CounterRng& rng, double component_sd) {
    Eigen::MatrixXcd a(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j)
            a(i, j) = std::complex<double>(component_sd * rng.normal(), component_sd * rng.normal());
    return a;
}

}  // namespace

double gue_reference_sample(int n, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gue_reference_sample: n must be >= 1");
    CounterRng rng = substream(seed, 103);
    Eigen::MatrixXcd h(n, n);
    for (int i = 0; i < n; ++i) {
        h(i, i) = rng.normal();
        for (int j = i + 1; j < n; ++j) {
            std::complex<double> z(rng.normal() / std::sqrt(2.0), rng.normal() / std::sqrt(2.0));
            h(i, j) = z;
            h(j, i) = std::conj(z);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().maxCoeff();
}

double lue_reference_sample(int n_plus, int n_minus, uint64_t seed) {
    if (n_plus < 1 || n_minus < 1)
        throw std::invalid_argument("lue_reference_sample: dimensions must be >= 1");
    CounterRng rng = substream(seed, 104);
    Eigen::MatrixXcd a = complex_gaussian(n_plus, n_minus, rng, 1.0 / std::sqrt(2.0));
    Eigen::MatrixXcd w = a * a.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(w, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().maxCoeff();
}

void to_json(nlohmann::json& j, const ContinuousParams& cp) {
    j = nlohmann::json{{"rho_plus", cp.rho_plus}, {"rho_minus", cp.rho_minus}, {"u", cp.u}};
    if (std::isfinite(cp.a_plus)) j["a_plus"] = cp.a_plus;
    if (std::isfinite(cp.a_minus)) j["a_minus"] = cp.a_minus;
}

void from_json(const nlohmann::json& j, ContinuousParams& cp) {
    auto rate = [&](const char* key) {
        return (!j.contains(key) || j.at(key).is_null()) ? kInf : j.at(key).get<double>();
    };
    cp = make_continuous(j.value("rho_plus", std::vector<double>{}),
                         j.value("rho_minus", std::vector<double>{}), j.value("u", 0.0),
                         rate("a_plus"), rate("a_minus"));
}

}  // namespace lislab
