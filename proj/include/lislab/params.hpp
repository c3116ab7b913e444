#pragma once
// Parameter sets for the generalized increasing-subsequence growth model and
// the closed forms attached to them.
//
// A parameter set p = t:q/r bundles a continuous (Poisson) intensity t >= 0,
// strict-row weights q_i >= 0 and weak-row weights r_i >= 0.  A model instance
// is a pair (p_plus, p_minus) acting on the two axes; it may be extended by
// boundary weights (alpha_plus, alpha_minus) that attach one extra weak
// row/column (the Sigma coordinates) to each axis.

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace lislab {

struct ParameterSet {
    double t = 0.0;
    std::vector<double> q;  // strict-row weights
    std::vector<double> r;  // weak-row weights

    double max_q() const;  // Q(p): largest strict weight, 0 if none
    double max_r() const;  // R(p): largest weak weight, 0 if none
};

// Checked construction; throws std::invalid_argument on negative, NaN or
// infinite entries.
ParameterSet make_params(double t, std::vector<double> q = {}, std::vector<double> r = {});

// Two parameter sets can share a model iff Q+Q- < 1 and R+R- < 1 (strict).
bool compatible(const ParameterSet& p_plus, const ParameterSet& p_minus);

// H(z;p) = e^{tz} prod_i (1 - z q_i)^{-1} prod_i (1 + z r_i), |z| < 1/Q(p).
double eval_H(double z, const ParameterSet& p);

// E(z;p) = e^{tz} prod_i (1 + z q_i) prod_i (1 - z r_i)^{-1}, |z| < 1/R(p).
double eval_E(double z, const ParameterSet& p);

// Two-set evaluation of H over the product alphabet:
//   H(p+;p-) = e^{t+t-} prod_i e^{t-(q+_i + r+_i)} prod_j e^{t+(q-_j + r-_j)}
//              prod_{ij} (1-q+_i q-_j)^{-1} (1-r+_i r-_j)^{-1}
//                        (1+q+_i r-_j) (1+r+_i q-_j).
// Requires compatible(p_plus, p_minus).
double eval_H_pair(const ParameterSet& p_plus, const ParameterSet& p_minus);

// alpha * d/dalpha log E(alpha;p)
//   = alpha t + sum_i alpha q_i/(1+alpha q_i) + sum_i alpha r_i/(1-alpha r_i),
// for 0 <= alpha < 1/R(p).
double log_deriv_E(double alpha, const ParameterSet& p);

// Mean of the extended model's longest chain at boundary weights (alpha, 1/alpha):
//   m(alpha) = log_deriv_E(alpha, p_minus) + log_deriv_E(1/alpha, p_plus),
// valid for R(p_plus) < alpha < 1/R(p_minus).
double mean_identity(double alpha, const ParameterSet& p_plus, const ParameterSet& p_minus);

// E[(a+ a-)^{-lambda1}] for the extended model:
//   E(a+;p-)^{-1} E(a-;p+)^{-1} E(1/a+;p+) E(1/a-;p-),
// valid for a+ in (R(p+), 1/R(p-)) and a- in (R(p-), 1/R(p+)).
double mgf_identity(double alpha_plus, double alpha_minus, const ParameterSet& p_plus,
                    const ParameterSet& p_minus);

// Boundary-row transforms: {E[(a+ a-)^{-N+}], E[(a+ a-)^{-N-}]} where N+/N- count
// the points carried by the Sigma row/column.
std::pair<double, double> boundary_mgf(double alpha_plus, double alpha_minus,
                                       const ParameterSet& p_plus, const ParameterSet& p_minus);

// {E[N+], E[N-]} at boundary weights (alpha, 1/alpha); their sum is
// mean_identity(alpha, p_plus, p_minus).
std::pair<double, double> boundary_mean(double alpha, const ParameterSet& p_plus,
                                        const ParameterSet& p_minus);

// A sampleable model instance: compatible pair plus boundary weights.
// alpha values of 0 mean "no boundary row on that axis".
struct ExtendedParams {
    ParameterSet p_plus;
    ParameterSet p_minus;
    double alpha_plus = 0.0;
    double alpha_minus = 0.0;
};

// Checked construction; enforces compatibility and the extended validity
// conditions alpha+ R(p-) < 1, alpha- R(p+) < 1 (plus alpha+- >= 0, finite,
// and alpha+ q-_j < 1 style constraints implied by them).
ExtendedParams make_extended(ParameterSet p_plus, ParameterSet p_minus, double alpha_plus,
                             double alpha_minus);

// JSON form: {"t": 1.0, "q": [...], "r": [...]}; missing keys default to 0/empty.
void to_json(nlohmann::json& j, const ParameterSet& p);
void from_json(const nlohmann::json& j, ParameterSet& p);
void to_json(nlohmann::json& j, const ExtendedParams& xp);
void from_json(const nlohmann::json& j, ExtendedParams& xp);

}  // namespace lislab
