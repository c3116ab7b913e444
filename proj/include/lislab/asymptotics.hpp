#pragma once
// Scale factors for the large-parameter regimes of the growth model.
//
// The mean function m(alpha) = mean_identity(alpha, p+, p-) bounds E[lambda1]
// of the bulk model by its infimum over (R(p+), 1/R(p-)).  When the infimum
// is attained at an interior critical point a~, the model has a soft edge
// with mu = m(a~) and fluctuation scale sigma = (a~^2 m''(a~)/2)^{1/3}; when
// m is monotone up to a boundary of the interval, the edge degenerates
// (pathological regimes).  Fixing instead boundary weights (z, 1/z) away from
// a~ puts lambda1 in a Gaussian regime with mean m(z) and variance |z m'(z)|.

#include <json.hpp>

#include "lislab/continuous.hpp"
#include "lislab/params.hpp"

namespace lislab {

struct MeanDerivatives {
    double m = 0.0;
    double m1 = 0.0;
    double m2 = 0.0;
};

// m, m', m'' at alpha, each evaluated termwise (no finite differences).
MeanDerivatives m_derivatives(double alpha, const ParameterSet& p_plus,
                              const ParameterSet& p_minus);

enum class Regime { kInterior, kPathologicalZero, kPathologicalInfinity };

struct CriticalAlpha {
    double alpha_tilde = 0.0;  // 0 / +inf in the pathological regimes
    Regime regime = Regime::kInterior;
    double infimum = 0.0;  // inf of m over the domain (boundary limit if pathological)
};

// Locate the infimum of m: a 512-point logarithmic scan for sign changes of
// m', each refined by bisection to 1e-12 relative width, compared against the
// analytic boundary limits of m.
CriticalAlpha critical_alpha(const ParameterSet& p_plus, const ParameterSet& p_minus);

struct ScaleFactors {
    double alpha_tilde = 0.0;
    double mu = 0.0;
    double sigma = 0.0;
    Regime regime = Regime::kInterior;
};

// Soft-edge factors; throws std::domain_error in the pathological regimes.
ScaleFactors scale_factors(const ParameterSet& p_plus, const ParameterSet& p_minus);

// Gaussian-regime mean and standard deviation at boundary weights (z, 1/z):
// {m(z), sqrt(|z m'(z)|)}.
std::pair<double, double> gaussian_regime(double z, const ParameterSet& p_plus,
                                          const ParameterSet& p_minus);

// Continuous analogues.  m_c(z) = -uz + sum_j 1/(rho-_j + z) + sum_i 1/(rho+_i - z)
// is convex on (-inf(rho-), inf(rho+)); its minimizer gives mu = m_c(a~) and
// sigma = (m_c''(a~)/2)^{1/3}.  The Gaussian regime at boundary rates (z, -z)
// has mean m_c(z) and variance |m_c'(z)|.
MeanDerivatives continuous_m_derivatives(double z, const ContinuousParams& cp);
ScaleFactors continuous_scale_factors(const ContinuousParams& cp);
std::pair<double, double> continuous_gaussian_regime(double z, const ContinuousParams& cp);

// {"alpha_tilde":..., "mu":..., "sigma":..., "regime":"interior"|
//  "pathological_zero"|"pathological_infinity"}; non-finite numbers are null.
void to_json(nlohmann::json& j, const ScaleFactors& sf);

std::string regime_name(Regime regime);

}  // namespace lislab
