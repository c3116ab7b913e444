#include "lislab/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace lislab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Value and first two derivatives of log_deriv_E(x, p) in its own argument.
MeanDerivatives side_derivatives(double x, const ParameterSet& p) {
    MeanDerivatives d;
    d.m = x * p.t;
    d.m1 = p.t;
    for (double q : p.q) {
        double g = 1.0 + x * q;
        d.m += x * q / g;
        d.m1 += q / (g * g);
        d.m2 += -2.0 * q * q / (g * g * g);
    }
    for (double r : p.r) {
        double g = 1.0 - x * r;
        d.m += x * r / g;
        d.m1 += r / (g * g);
        d.m2 += 2.0 * r * r / (g * g * g);
    }
    return d;
}

int positive_count(const std::vector<double>& v) {
    int n = 0;
    for (double x : v)
        if (x > 0.0) ++n;
    return n;
}

// Limit of m at the lower end of the domain (alpha -> R(p+)^+).
double lower_limit(const ParameterSet& p_plus, const ParameterSet& p_minus) {
    (void)p_minus;
    if (p_plus.max_r() > 0.0) return kInf;  // pole of the p+ weak terms
    if (p_plus.t > 0.0) return kInf;        // t+/alpha blows up
    return positive_count(p_plus.q);        // each strict term tends to 1
}

// Limit of m at the upper end (alpha -> 1/R(p-)^-, or +inf).
double upper_limit(const ParameterSet& p_plus, const ParameterSet& p_minus) {
    (void)p_plus;
    if (p_minus.max_r() > 0.0) return kInf;
    if (p_minus.t > 0.0) return kInf;
    return positive_count(p_minus.q);
}

}  // namespace

MeanDerivatives m_derivatives(double alpha, const ParameterSet& p_plus,
                              const ParameterSet& p_minus) {
    if (!(alpha > p_plus.max_r()) || !(alpha * p_minus.max_r() < 1.0))
        throw std::domain_error("m_derivatives: alpha outside (R(p+), 1/R(p-))");
    MeanDerivatives lo = side_derivatives(alpha, p_minus);          // p- part in alpha
    MeanDerivatives hi = side_derivatives(1.0 / alpha, p_plus);     // p+ part in 1/alpha
    double a2 = alpha * alpha;
    MeanDerivatives d;
    d.m = lo.m + hi.m;
    d.m1 = lo.m1 - hi.m1 / a2;
    d.m2 = lo.m2 + hi.m2 / (a2 * a2) + 2.0 * hi.m1 / (a2 * alpha);
    return d;
}

CriticalAlpha critical_alpha(const ParameterSet& p_plus, const ParameterSet& p_minus) {
    if (!compatible(p_plus, p_minus))
        throw std::invalid_argument("critical_alpha: parameter sets are not compatible");
    double lo = p_plus.max_r();
    double hi = p_minus.max_r() > 0.0 ? 1.0 / p_minus.max_r() : kInf;

    // Scan window strictly inside (lo, hi).
    double a = lo > 0.0 ? lo * (1.0 + 1e-9) : (std::isfinite(hi) ? hi * 1e-12 : 1e-9);
    double b = std::isfinite(hi) ? hi * (1.0 - 1e-9) : (lo > 0.0 ? lo * 1e12 : 1e9);
    constexpr int kGrid = 512;
    auto slope = [&](double alpha) { return m_derivatives(alpha, p_plus, p_minus).m1; };

    double best_val = kInf, best_alpha = 0.0;
    double log_a = std::log(a), log_step = (std::log(b) - log_a) / (kGrid - 1);
    double prev_x = a, prev_s = slope(a);
    for (int i = 1; i < kGrid; ++i) {
        double x = std::exp(log_a + i * log_step);
        double s = slope(x);
        if ((prev_s < 0.0 && s >= 0.0) || (prev_s > 0.0 && s <= 0.0) || prev_s == 0.0) {
            double u = prev_x, v = x, su = prev_s;
            while (v - u > 1e-12 * std::max(std::abs(u), std::abs(v))) {
                double mid = 0.5 * (u + v);
                double sm = slope(mid);
                if ((sm < 0.0) == (su < 0.0)) {
                    u = mid;
                    su = sm;
                } else {
                    v = mid;
                }
            }
            double root = 0.5 * (u + v);
            double val = m_derivatives(root, p_plus, p_minus).m;
            if (val < best_val) {
                best_val = val;
                best_alpha = root;
            }
        }
        prev_x = x;
        prev_s = s;
    }

    double limit_lo = lower_limit(p_plus, p_minus);
    double limit_hi = upper_limit(p_plus, p_minus);
    CriticalAlpha out;
    if (std::isfinite(best_val) && best_val <= limit_lo && best_val <= limit_hi) {
        out.alpha_tilde = best_alpha;
        out.regime = Regime::kInterior;
        out.infimum = best_val;
    } else if (limit_lo <= limit_hi) {
        out.alpha_tilde = 0.0;
        out.regime = Regime::kPathologicalZero;
        out.infimum = limit_lo;
    } else {
        out.alpha_tilde = kInf;
        out.regime = Regime::kPathologicalInfinity;
        out.infimum = limit_hi;
    }
    return out;
}

ScaleFactors scale_factors(const ParameterSet& p_plus, const ParameterSet& p_minus) {
    CriticalAlpha ca = critical_alpha(p_plus, p_minus);
    if (ca.regime != Regime::kInterior)
        throw std::domain_error("scale_factors: mean function has no interior minimum (" +
                                regime_name(ca.regime) + ")");
    MeanDerivatives d = m_derivatives(ca.alpha_tilde, p_plus, p_minus);
    ScaleFactors sf;
    sf.alpha_tilde = ca.alpha_tilde;
    sf.mu = d.m;
    sf.sigma = std::cbrt(ca.alpha_tilde * ca.alpha_tilde * d.m2 / 2.0);
    sf.regime = Regime::kInterior;
    return sf;
}

std::pair<double, double> gaussian_regime(double z, const ParameterSet& p_plus,
                                          const ParameterSet& p_minus) {
    MeanDerivatives d = m_derivatives(z, p_plus, p_minus);
    return {d.m, std::sqrt(std::abs(z * d.m1))};
}

MeanDerivatives continuous_m_derivatives(double z, const ContinuousParams& cp) {
    MeanDerivatives d;
    d.m = -cp.u * z;
    d.m1 = -cp.u;
    for (double rho : cp.rho_minus) {
        double g = rho + z;
        if (!(g > 0.0)) throw std::domain_error("continuous_m_derivatives: z <= -inf(rho-)");
        d.m += 1.0 / g;
        d.m1 -= 1.0 / (g * g);
        d.m2 += 2.0 / (g * g * g);
    }
    for (double rho : cp.rho_plus) {
        double g = rho - z;
        if (!(g > 0.0)) throw std::domain_error("continuous_m_derivatives: z >= inf(rho+)");
        d.m += 1.0 / g;
        d.m1 += 1.0 / (g * g);
        d.m2 += 2.0 / (g * g * g);
    }
    return d;
}

ScaleFactors continuous_scale_factors(const ContinuousParams& cp) {
    double lo = -kInf, hi = kInf;
    for (double rho : cp.rho_minus) lo = std::max(lo, -rho);
    for (double rho : cp.rho_plus) hi = std::min(hi, rho);
    auto slope = [&](double z) { return continuous_m_derivatives(z, cp).m1; };

    // m_c is convex (m_c'' > 0 whenever a rate list is nonempty), so a sign
    // change of m_c' exists iff both boundary signs differ; otherwise the
    // infimum sits at a boundary of the domain.
    ScaleFactors sf;
    // Bracket the root: march toward each end until the sign shows up.
    double anchor;
    if (std::isfinite(lo) && std::isfinite(hi)) anchor = 0.5 * (lo + hi);
    else if (std::isfinite(lo)) anchor = lo + 1.0;
    else if (std::isfinite(hi)) anchor = hi - 1.0;
    else anchor = 0.0;

    double neg = kInf, pos = kInf;  // bracket endpoints (z with m'<0 / m'>0)
    double x = anchor, gap = std::isfinite(lo) ? (anchor - lo) * 0.5 : 1.0;
    for (int it = 0; it < 200 && !std::isfinite(neg); ++it) {
        if (slope(x) < 0.0) neg = x;
        x = std::isfinite(lo) ? lo + (x - lo) * 0.5 : x - gap, gap *= 2.0;
    }
    x = anchor, gap = std::isfinite(hi) ? (hi - anchor) * 0.5 : 1.0;
    for (int it = 0; it < 200 && !std::isfinite(pos); ++it) {
        if (slope(x) > 0.0) pos = x;
        x = std::isfinite(hi) ? hi - (hi - x) * 0.5 : x + gap, gap *= 2.0;
    }

    if (!std::isfinite(neg)) {
        // m_c' >= 0 throughout.  A finite lower end always carries a pole
        // (m_c' -> -inf), so this branch implies rho- empty and u = 0, where
        // the infimum is the z -> -inf limit, 0.
        sf.regime = Regime::kPathologicalZero;
        sf.alpha_tilde = lo;
        sf.mu = 0.0;
        sf.sigma = 0.0;
        return sf;
    }
    if (!std::isfinite(pos)) {
        sf.regime = Regime::kPathologicalInfinity;
        sf.alpha_tilde = hi;
        sf.mu = cp.u > 0.0 ? -kInf : 0.0;
        sf.sigma = 0.0;
        return sf;
    }

    double u = neg, v = pos;
    for (int it = 0; it < 200 && v - u > 1e-13 * std::max(1.0, std::max(std::abs(u), std::abs(v)));
         ++it) {
        double mid = 0.5 * (u + v);
        (slope(mid) < 0.0 ? u : v) = mid;
    }
    double root = 0.5 * (u + v);
    MeanDerivatives d = continuous_m_derivatives(root, cp);
    sf.alpha_tilde = root;
    sf.mu = d.m;
    sf.sigma = std::cbrt(d.m2 / 2.0);
    sf.regime = Regime::kInterior;
    return sf;
}

std::pair<double, double> continuous_gaussian_regime(double z, const ContinuousParams& cp) {
    MeanDerivatives d = continuous_m_derivatives(z, cp);
    return {d.m, std::sqrt(std::abs(d.m1))};
}

std::string regime_name(Regime regime) {
    switch (regime) {
        case Regime::kInterior: return "interior";
        case Regime::kPathologicalZero: return "pathological_zero";
        case Regime::kPathologicalInfinity: return "pathological_infinity";
    }
    return "unknown";
}

void to_json(nlohmann::json& j, const ScaleFactors& sf) {
    j = nlohmann::json{{"alpha_tilde", sf.alpha_tilde},
                       {"mu", sf.mu},
                       {"sigma", sf.sigma},
                       {"regime", regime_name(sf.regime)}};
}

}  // namespace lislab
