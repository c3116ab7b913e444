#include "lislab/params.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lislab {

namespace {

double max_entry(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, x);
    return m;
}

void check_weights(const std::vector<double>& v, const char* what) {
    for (double x : v) {
        if (!std::isfinite(x) || x < 0.0)
            throw std::invalid_argument(std::string(what) + " weights must be finite and >= 0");
    }
}

}  // namespace

double ParameterSet::max_q() const { return max_entry(q); }
double ParameterSet::max_r() const { return max_entry(r); }

ParameterSet make_params(double t, std::vector<double> q, std::vector<double> r) {
    if (!std::isfinite(t) || t < 0.0)
        throw std::invalid_argument("intensity t must be finite and >= 0");
    check_weights(q, "strict");
    check_weights(r, "weak");
    return ParameterSet{t, std::move(q), std::move(r)};
}

bool compatible(const ParameterSet& p_plus, const ParameterSet& p_minus) {
    return p_plus.max_q() * p_minus.max_q() < 1.0 && p_plus.max_r() * p_minus.max_r() < 1.0;
}

double eval_H(double z, const ParameterSet& p) {
    if (std::abs(z) * p.max_q() >= 1.0)
        throw std::domain_error("eval_H: |z| outside radius 1/Q(p)");
    double v = std::exp(p.t * z);
    for (double q : p.q) v /= 1.0 - z * q;
    for (double r : p.r) v *= 1.0 + z * r;
    return v;
}

double eval_E(double z, const ParameterSet& p) {
    if (std::abs(z) * p.max_r() >= 1.0)
        throw std::domain_error("eval_E: |z| outside radius 1/R(p)");
    double v = std::exp(p.t * z);
    for (double q : p.q) v *= 1.0 + z * q;
    for (double r : p.r) v /= 1.0 - z * r;
    return v;
}

double eval_H_pair(const ParameterSet& p_plus, const ParameterSet& p_minus) {
    if (!compatible(p_plus, p_minus))
        throw std::domain_error("eval_H_pair: parameter sets are not compatible");
    double log_v = p_plus.t * p_minus.t;
    for (double q : p_plus.q) log_v += p_minus.t * q;
    for (double r : p_plus.r) log_v += p_minus.t * r;
    for (double q : p_minus.q) log_v += p_plus.t * q;
    for (double r : p_minus.r) log_v += p_plus.t * r;
    double v = std::exp(log_v);
    for (double qp : p_plus.q)
        for (double qm : p_minus.q) v /= 1.0 - qp * qm;
    for (double rp : p_plus.r)
        for (double rm : p_minus.r) v /= 1.0 - rp * rm;
    for (double qp : p_plus.q)
        for (double rm : p_minus.r) v *= 1.0 + qp * rm;
    for (double rp : p_plus.r)
        for (double qm : p_minus.q) v *= 1.0 + rp * qm;
    return v;
}

double log_deriv_E(double alpha, const ParameterSet& p) {
    if (alpha < 0.0 || alpha * p.max_r() >= 1.0)
        throw std::domain_error("log_deriv_E: alpha outside [0, 1/R(p))");
    double v = alpha * p.t;
    for (double q : p.q) v += alpha * q / (1.0 + alpha * q);
    for (double r : p.r) v += alpha * r / (1.0 - alpha * r);
    return v;
}

double mean_identity(double alpha, const ParameterSet& p_plus, const ParameterSet& p_minus) {
    if (alpha <= p_plus.max_r() || alpha * p_minus.max_r() >= 1.0)
        throw std::domain_error("mean_identity: alpha outside (R(p+), 1/R(p-))");
    return log_deriv_E(alpha, p_minus) + log_deriv_E(1.0 / alpha, p_plus);
}

double mgf_identity(double alpha_plus, double alpha_minus, const ParameterSet& p_plus,
                    const ParameterSet& p_minus) {
    if (alpha_plus <= p_plus.max_r() || alpha_plus * p_minus.max_r() >= 1.0)
        throw std::domain_error("mgf_identity: alpha+ outside (R(p+), 1/R(p-))");
    if (alpha_minus <= p_minus.max_r() || alpha_minus * p_plus.max_r() >= 1.0)
        throw std::domain_error("mgf_identity: alpha- outside (R(p-), 1/R(p+))");
    return eval_E(1.0 / alpha_plus, p_plus) * eval_E(1.0 / alpha_minus, p_minus) /
           (eval_E(alpha_plus, p_minus) * eval_E(alpha_minus, p_plus));
}

std::pair<double, double> boundary_mgf(double alpha_plus, double alpha_minus,
                                       const ParameterSet& p_plus, const ParameterSet& p_minus) {
    if (alpha_plus <= p_plus.max_r() || alpha_plus * p_minus.max_r() >= 1.0)
        throw std::domain_error("boundary_mgf: alpha+ outside (R(p+), 1/R(p-))");
    if (alpha_minus <= p_minus.max_r() || alpha_minus * p_plus.max_r() >= 1.0)
        throw std::domain_error("boundary_mgf: alpha- outside (R(p-), 1/R(p+))");
    double n_plus = eval_E(1.0 / alpha_minus, p_minus) / eval_E(alpha_plus, p_minus);
    double n_minus = eval_E(1.0 / alpha_plus, p_plus) / eval_E(alpha_minus, p_plus);
    return {n_plus, n_minus};
}

std::pair<double, double> boundary_mean(double alpha, const ParameterSet& p_plus,
                                        const ParameterSet& p_minus) {
    if (alpha <= p_plus.max_r() || alpha * p_minus.max_r() >= 1.0)
        throw std::domain_error("boundary_mean: alpha outside (R(p+), 1/R(p-))");
    return {log_deriv_E(alpha, p_minus), log_deriv_E(1.0 / alpha, p_plus)};
}

ExtendedParams make_extended(ParameterSet p_plus, ParameterSet p_minus, double alpha_plus,
                             double alpha_minus) {
    if (!compatible(p_plus, p_minus))
        throw std::invalid_argument("make_extended: parameter sets are not compatible");
    if (!std::isfinite(alpha_plus) || !std::isfinite(alpha_minus) || alpha_plus < 0.0 ||
        alpha_minus < 0.0)
        throw std::invalid_argument("make_extended: boundary weights must be finite and >= 0");
    if (alpha_plus * p_minus.max_r() >= 1.0 || alpha_minus * p_plus.max_r() >= 1.0)
        throw std::invalid_argument(
            "make_extended: need alpha+ R(p-) < 1 and alpha- R(p+) < 1");
    return ExtendedParams{std::move(p_plus), std::move(p_minus), alpha_plus, alpha_minus};
}

void to_json(nlohmann::json& j, const ParameterSet& p) {
    j = nlohmann::json{{"t", p.t}, {"q", p.q}, {"r", p.r}};
}

void from_json(const nlohmann::json& j, ParameterSet& p) {
    double t = j.value("t", 0.0);
    std::vector<double> q = j.value("q", std::vector<double>{});
    std::vector<double> r = j.value("r", std::vector<double>{});
    p = make_params(t, std::move(q), std::move(r));
}

void to_json(nlohmann::json& j, const ExtendedParams& xp) {
    j = nlohmann::json{{"p_plus", xp.p_plus},
                       {"p_minus", xp.p_minus},
                       {"alpha_plus", xp.alpha_plus},
                       {"alpha_minus", xp.alpha_minus}};
}

void from_json(const nlohmann::json& j, ExtendedParams& xp) {
    ParameterSet pp = j.value("p_plus", ParameterSet{});
    ParameterSet pm = j.value("p_minus", ParameterSet{});
    double ap = j.value("alpha_plus", 0.0);
    double am = j.value("alpha_minus", 0.0);
    xp = make_extended(std::move(pp), std::move(pm), ap, am);
}

}  // namespace lislab
