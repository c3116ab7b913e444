#include "lislab/exact_dist.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lislab {

namespace {

// Power-series coefficients (degree <= D) of (1+alpha z) H(z;p) with all
// weights rescaled by s: e^{stz} prod (1 - s q z)^{-1} prod (1 + s r z) (1 + s alpha z).
std::vector<double> side_series(const ParameterSet& p, double alpha, double s, int D) {
    std::vector<double> a(static_cast<size_t>(D) + 1, 0.0);
    a[0] = 1.0;
    double st = s * p.t;
    for (int n = 1; n <= D; ++n) a[n] = a[n - 1] * st / n;          // e^{stz}
    for (double q : p.q) {
        double sq = s * q;
        for (int n = 1; n <= D; ++n) a[n] += sq * a[n - 1];          // 1/(1 - sqz)
    }
    auto poly_factor = [&](double w) {                               // (1 + wz)
        if (w == 0.0) return;
        for (int n = D; n >= 1; --n) a[n] += w * a[n - 1];
    };
    for (double r : p.r) poly_factor(s * r);
    poly_factor(s * alpha);
    return a;
}

LaurentCoeffs laurent_unchecked(const ExtendedParams& xp, int K) {
    if (K < 0) throw std::invalid_argument("laurent_coeffs: K must be >= 0");
    // Rebalance the symbol, z -> sz: the diagonal similarity diag(s^i) leaves
    // every Toeplitz determinant unchanged, and any s in (Q(p-), 1/Q(p+))
    // makes both one-sided series decay.  Use the geometric mean when both
    // strict maxima are positive (symmetric decay ~ sqrt(Q+Q-)^{|k|}).
    double qg_plus = xp.p_plus.max_q();
    double qg_minus = xp.p_minus.max_q();
    double s = 1.0;
    if (qg_plus > 0.0 && qg_minus > 0.0)
        s = std::sqrt(qg_minus / qg_plus);
    else if (qg_plus >= 1.0)
        s = 0.5 / qg_plus;
    else if (qg_minus >= 1.0)
        s = 2.0 * qg_minus;

    int D = 2 * K + 40;
    std::vector<double> plus = side_series(xp.p_plus, xp.alpha_plus, s, D);
    std::vector<double> minus = side_series(xp.p_minus, xp.alpha_minus, 1.0 / s, D);

    LaurentCoeffs out;
    out.K = K;
    out.c.assign(2 * static_cast<size_t>(K) + 1, 0.0);
    for (int k = -K; k <= K; ++k) {
        double sum = 0.0;
        // c_k = sum_m plus[k+m] * minus[m]; accumulate small terms first.
        for (int m = D - std::max(k, 0); m >= std::max(-k, 0); --m)
            sum += plus[static_cast<size_t>(k + m)] * minus[static_cast<size_t>(m)];
        out.c[static_cast<size_t>(k + K)] = sum;
    }
    return out;
}

bool tail_converged(const LaurentCoeffs& co) {
    double scale = std::abs(co.at(0));
    return std::max(std::abs(co.at(co.K)), std::abs(co.at(-co.K))) < 1e-14 * scale;
}

}  // namespace

LaurentCoeffs laurent_coeffs(const ExtendedParams& xp, int K) {
    LaurentCoeffs co = laurent_unchecked(xp, K);
    double scale = std::abs(co.at(0));
    if (std::max(std::abs(co.at(K)), std::abs(co.at(-K))) >= 1e-12 * scale) {
        std::ostringstream msg;
        msg << "laurent_coeffs: tail has not decayed at K=" << K << "; retry with K >= "
            << 2 * K;
        throw std::runtime_error(msg.str());
    }
    return co;
}

double toeplitz_det(const LaurentCoeffs& coeffs, int l) {
    if (l < 0 || l > coeffs.K + 1)
        throw std::invalid_argument("toeplitz_det: need 0 <= l <= K + 1");
    if (l == 0) return 1.0;
    std::vector<std::vector<double>> a(static_cast<size_t>(l),
                                       std::vector<double>(static_cast<size_t>(l)));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = coeffs.at(i - j);

    double det = 1.0;
    for (int col = 0; col < l; ++col) {
        int pivot = col;
        for (int row = col + 1; row < l; ++row)
            if (std::abs(a[static_cast<size_t>(row)][static_cast<size_t>(col)]) >
                std::abs(a[static_cast<size_t>(pivot)][static_cast<size_t>(col)]))
                pivot = row;
        if (pivot != col) {
            std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(col)]);
            det = -det;
        }
        double d = a[static_cast<size_t>(col)][static_cast<size_t>(col)];
        if (d == 0.0) return 0.0;
        det *= d;
        for (int row = col + 1; row < l; ++row) {
            double f = a[static_cast<size_t>(row)][static_cast<size_t>(col)] / d;
            if (f == 0.0) continue;
            for (int j = col; j < l; ++j)
                a[static_cast<size_t>(row)][static_cast<size_t>(j)] -=
                    f * a[static_cast<size_t>(col)][static_cast<size_t>(j)];
        }
    }
    return det;
}

namespace {

// One CDF evaluation given precomputed coefficients.
double cdf_from_coeffs(const ExtendedParams& xp, const LaurentCoeffs& co, int l) {
    double norm = eval_E(xp.alpha_plus, xp.p_minus) * eval_E(xp.alpha_minus, xp.p_plus) *
                  eval_H_pair(xp.p_plus, xp.p_minus);
    double d_l = toeplitz_det(co, l);
    double d_prev = l == 0 ? 0.0 : toeplitz_det(co, l - 1);
    return (d_l - xp.alpha_plus * xp.alpha_minus * d_prev) / norm;
}

LaurentCoeffs coeffs_for_depth(const ExtendedParams& xp, int L) {
    int K = L + 20;
    constexpr int kMaxK = 1 << 14;
    while (true) {
        LaurentCoeffs co = laurent_unchecked(xp, K);
        if (tail_converged(co)) return co;
        if (K >= kMaxK)
            throw std::runtime_error("cdf_table: Laurent tail did not converge by K=16384");
        K = std::min(2 * K, kMaxK);
    }
}

}  // namespace

double cdf_value(const ExtendedParams& xp, int l) {
    if (l < 0) return 0.0;
    return std::clamp(cdf_from_coeffs(xp, coeffs_for_depth(xp, l), l), 0.0, 1.0);
}

CdfTable cdf_table(const ExtendedParams& xp, int L) {
    if (L < 0) throw std::invalid_argument("cdf_table: L must be >= 0");
    LaurentCoeffs co = coeffs_for_depth(xp, L);
    CdfTable table;
    table.params = xp;
    table.K_used = co.K;
    table.cdf.reserve(static_cast<size_t>(L) + 1);
    double prev = 0.0;
    for (int l = 0; l <= L; ++l) {
        double v = table.complete ? 1.0 : cdf_from_coeffs(xp, co, l);
        if (v < prev - 1e-9 || v < -1e-9 || v > 1.0 + 1e-9)
            throw std::runtime_error("cdf_table: determinant ratios are not a valid CDF");
        v = std::clamp(v, 0.0, 1.0);
        if (1.0 - v < 1e-12) {
            v = 1.0;
            table.complete = true;
        }
        table.cdf.push_back(v);
        prev = v;
    }
    return table;
}

CdfTable cdf_table_auto(const ExtendedParams& xp, int max_L) {
    int L = 16;
    while (true) {
        CdfTable table = cdf_table(xp, L);
        if (table.complete) {
            while (table.cdf.size() > 1 && table.cdf[table.cdf.size() - 2] == 1.0)
                table.cdf.pop_back();
            return table;
        }
        if (L >= max_L)
            throw std::runtime_error("cdf_table_auto: distribution not exhausted by max_L");
        L = std::min(2 * L, max_L);
    }
}

std::string CdfTable::to_csv() const {
    nlohmann::json meta{{"kind", "exact-cdf"}, {"params", params}, {"K", K_used},
                        {"complete", complete}};
    std::ostringstream out;
    out << "# " << meta.dump() << "\n";
    out << "l,cdf\n";
    out.precision(17);
    for (size_t l = 0; l < cdf.size(); ++l) out << l << "," << cdf[l] << "\n";
    return out.str();
}

double table_mean(const CdfTable& table) {
    if (!table.complete)
        throw std::invalid_argument("table_mean: table does not exhaust the distribution");
    double mean = 0.0;
    for (size_t l = 0; l + 1 < table.cdf.size(); ++l) mean += 1.0 - table.cdf[l];
    return mean;
}

double table_mgf(const CdfTable& table) {
    if (!table.complete)
        throw std::invalid_argument("table_mgf: table does not exhaust the distribution");
    double s = table.params.alpha_plus * table.params.alpha_minus;
    double sum = table.cdf[0];
    for (size_t l = 1; l < table.cdf.size(); ++l)
        sum += std::pow(s, -static_cast<double>(l)) * (table.cdf[l] - table.cdf[l - 1]);
    return sum;
}

}  // namespace lislab
