#include "lislab/experiments.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "lislab/asymptotics.hpp"
#include "lislab/continuous.hpp"
#include "lislab/exact_dist.hpp"
#include "lislab/lis.hpp"
#include "lislab/params.hpp"
#include "lislab/rng.hpp"
#include "lislab/sampler.hpp"
#include "lislab/stats.hpp"

namespace lislab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Common {
    uint64_t seed = 1;
    int64_t samples = 0;
    double tol_sigmas = 4.0;
    double ks_p = 0.001;
};

Common common_of(const nlohmann::json& cfg) {
    Common c;
    c.seed = cfg.value("seed", uint64_t{1});
    c.samples = cfg.value("samples", int64_t{0});
    c.tol_sigmas = cfg.value("tolerance_sigmas", 4.0);
    c.ks_p = cfg.value("ks_p_threshold", 0.001);
    if (c.samples < 100) throw std::invalid_argument("config: samples must be >= 100");
    if (!(c.tol_sigmas > 0.0)) throw std::invalid_argument("config: tolerance_sigmas must be > 0");
    return c;
}

uint64_t arm_seed(uint64_t seed, uint64_t arm) { return key_combine(mix64(seed) ^ 0xC3C3C3C3C3C3C3C3ull, arm); }

CheckLine stat_line(const std::string& name, double expected, const RunningStat& stat,
                    double tol_sigmas) {
    CheckLine line;
    line.name = name;
    line.expected = expected;
    line.observed = stat.mean();
    line.tolerance = tol_sigmas * stat.se();
    line.pass = std::abs(line.observed - line.expected) <= line.tolerance;
    std::ostringstream note;
    note << "se=" << stat.se() << " n=" << stat.count();
    line.note = note.str();
    return line;
}

CheckLine ks_line(const std::string& name, const KsResult& ks, double p_threshold) {
    CheckLine line;
    line.name = name;
    line.expected = p_threshold;
    line.observed = ks.p_value;
    line.tolerance = p_threshold;
    line.pass = ks.p_value >= p_threshold;
    std::ostringstream note;
    note << "pass iff p >= threshold; D=" << ks.d;
    line.note = note.str();
    return line;
}

ExtendedParams params_of(const nlohmann::json& cfg) {
    if (!cfg.contains("params")) throw std::invalid_argument("config: missing \"params\"");
    return cfg.at("params").get<ExtendedParams>();
}

// ----------------------------------------------------------------------
// mean-check: E[lambda1], E[N+], E[N-] of the extended model at boundary
// weights (alpha, 1/alpha) against the closed forms.
// ----------------------------------------------------------------------
void run_mean_check(const nlohmann::json& cfg, Report& rep) {
    Common c = common_of(cfg);
    ExtendedParams xp = params_of(cfg);
    if (std::abs(xp.alpha_plus * xp.alpha_minus - 1.0) > 1e-9)
        throw std::invalid_argument("mean-check: needs alpha- = 1/alpha+");
    double alpha = xp.alpha_plus;
    double m = mean_identity(alpha, xp.p_plus, xp.p_minus);
    auto [en_plus, en_minus] = boundary_mean(alpha, xp.p_plus, xp.p_minus);

    RunningStat lam, np, nm, nsum;
    for (int64_t i = 0; i < c.samples; ++i) {
        PointMultiset ms = sample_extended(xp, sample_seed(c.seed, static_cast<uint64_t>(i)));
        lam.push(static_cast<double>(lis_length(ms)));
        auto [a, b] = boundary_counts(ms);
        np.push(static_cast<double>(a));
        nm.push(static_cast<double>(b));
        nsum.push(static_cast<double>(a + b));
    }
    rep.checks.push_back(stat_line("lambda1 mean vs identity", m, lam, c.tol_sigmas));
    rep.checks.push_back(stat_line("sigma-row count mean", en_plus, np, c.tol_sigmas));
    rep.checks.push_back(stat_line("sigma-column count mean", en_minus, nm, c.tol_sigmas));
    rep.checks.push_back(stat_line("sigma count sum vs identity", m, nsum, c.tol_sigmas));
}

// ----------------------------------------------------------------------
// mgf-check: E[(a+a-)^{-lambda1}] against the closed form.
// ----------------------------------------------------------------------
void run_mgf_check(const nlohmann::json& cfg, Report& rep) {
    Common c = common_of(cfg);
    ExtendedParams xp = params_of(cfg);
    double s = xp.alpha_plus * xp.alpha_minus;
    if (!(s > 0.0)) throw std::invalid_argument("mgf-check: needs positive boundary weights");
    double theory = mgf_identity(xp.alpha_plus, xp.alpha_minus, xp.p_plus, xp.p_minus);

    RunningStat stat;
    for (int64_t i = 0; i < c.samples; ++i) {
        PointMultiset ms = sample_extended(xp, sample_seed(c.seed, static_cast<uint64_t>(i)));
        stat.push(std::pow(s, -static_cast<double>(lis_length(ms))));
    }
    if (stat.se() > 0.25 * std::abs(theory)) {
        CheckLine line;
        line.name = "estimator stability";
        line.expected = 0.25 * std::abs(theory);
        line.observed = stat.se();
        line.tolerance = 0.0;
        line.pass = false;
        line.note = "aborted: transform variance too large for a reliable comparison";
        rep.checks.push_back(line);
        return;
    }
    rep.checks.push_back(stat_line("transform mean vs identity", theory, stat, c.tol_sigmas));
}

// ----------------------------------------------------------------------
// cdf-check: empirical CDF of lambda1 against the Toeplitz-determinant CDF.
// ----------------------------------------------------------------------
void run_cdf_check(const nlohmann::json& cfg, Report& rep) {
    Common c = common_of(cfg);
    ExtendedParams xp = params_of(cfg);
    double sup_threshold = cfg.value("sup_threshold", 0.01);
    CdfTable exact = cdf_table_auto(xp);

    std::vector<int64_t> values;
    values.reserve(static_cast<std::size_t>(c.samples));
    for (int64_t i = 0; i < c.samples; ++i) {
        PointMultiset ms = sample_extended(xp, sample_seed(c.seed, static_cast<uint64_t>(i)));
        values.push_back(lis_length(ms));
    }
    KsResult ks = one_sample_ks(values, exact.cdf);

    CheckLine sup;
    sup.name = "cdf sup distance";
    sup.expected = 0.0;
    sup.observed = ks.d;
    sup.tolerance = sup_threshold;
    sup.pass = ks.d < sup_threshold;
    sup.note = "sup over l of |empirical - exact|";
    rep.checks.push_back(sup);
    rep.checks.push_back(ks_line("cdf KS p-value", ks, c.ks_p));

    // Table: l, exact, empirical.
    std::vector<int64_t> counts(exact.cdf.size(), 0);
    for (int64_t v : values)
        if (v >= 0 && static_cast<std::size_t>(v) < counts.size()) ++counts[static_cast<std::size_t>(v)];
    std::ostringstream csv;
    csv << "l,exact_cdf,empirical_cdf\n";
    csv.precision(12);
    double cum = 0.0;
    for (std::size_t l = 0; l < exact.cdf.size(); ++l) {
        cum += static_cast<double>(counts[l]) / static_cast<double>(c.samples);
        csv << l << "," << exact.cdf[l] << "," << std::min(cum, 1.0) << "\n";
    }
    rep.table_csv = csv.str();
}

// ----------------------------------------------------------------------
// bound-check: E[lambda1(bulk)] <= inf m, and per-seed coupling.
// ----------------------------------------------------------------------
void run_bound_check(const nlohmann::json& cfg, Report& rep) {
    Common c = common_of(cfg);
    ExtendedParams xp = params_of(cfg);
    CriticalAlpha ca = critical_alpha(xp.p_plus, xp.p_minus);

    RunningStat bulk;
    int64_t violations = 0;
    for (int64_t i = 0; i < c.samples; ++i) {
        uint64_t s = sample_seed(c.seed, static_cast<uint64_t>(i));
        int64_t lam_bulk = lis_length(sample_multiset(xp.p_plus, xp.p_minus, s));
        bulk.push(static_cast<double>(lam_bulk));
        if (xp.alpha_plus > 0.0 || xp.alpha_minus > 0.0) {
            int64_t lam_ext = lis_length(sample_extended(xp, s));
            if (lam_bulk > lam_ext) ++violations;
        }
    }

    CheckLine bound;
    bound.name = "bulk mean <= infimum of mean identity";
    bound.expected = ca.infimum;
    bound.observed = bulk.mean();
    bound.tolerance = c.tol_sigmas * bulk.se();
    bound.pass = bulk.mean() <= ca.infimum + bound.tolerance;
    bound.note = "one-sided; regime=" + regime_name(ca.regime);
    rep.checks.push_back(bound);

    if (xp.alpha_plus > 0.0 || xp.alpha_minus > 0.0) {
        CheckLine coupling;
        coupling.name = "coupling violations (bulk > extended)";
        coupling.expected = 0.0;
        coupling.observed = static_cast<double>(violations);
        coupling.tolerance = 0.0;
        coupling.pass = violations == 0;
        rep.checks.push_back(coupling);
    }
}

// ----------------------------------------------------------------------
// reorder-check: lambda1 distribution under the two axis orders, two-sample
// KS.  With negative_control the second arm instead breaks the strict-row
// rule and the check is expected to fail.
// ----------------------------------------------------------------------
void run_reorder_check(const nlohmann::json& cfg, Report& rep) {
    Common c = common_of(cfg);
    ExtendedParams xp = params_of(cfg);
    bool negative = cfg.value("negative_control", false);

    ChainRules arm_a;  // canonical
    ChainRules arm_b;
    if (negative)
        arm_b.treat_strict_as_weak = true;
    else
        arm_b.order = AxisOrder::kContFirst;

    auto draw = [&](uint64_t arm, const ChainRules& rules) {
        std::vector<double> out;
        out.reserve(static_cast<std::size_t>(c.samples));
        uint64_t base = arm_seed(c.seed, arm);
        for (int64_t i = 0; i < c.samples; ++i) {
            PointMultiset ms = sample_extended(xp, sample_seed(base, static_cast<uint64_t>(i)));
            out.push_back(static_cast<double>(lis_length(ms, rules)));
        }
        return out;
    };
    KsResult ks = two_sample_ks(draw(1, arm_a), draw(2, arm_b));
    CheckLine line = ks_line(negative ? "order-invariance KS p-value (negative control)"
                                      : "order-invariance KS p-value",
                             ks, c.ks_p);
    if (negative) line.note += "; strict rows deliberately treated as weak";
    rep.checks.push_back(line);
}

// ----------------------------------------------------------------------
// boundary-check: Sigma-row/column count transforms and means.
// ----------------------------------------------------------------------
void run_boundary_check(const nlohmann::json& cfg, Report& rep) {
    Common c = common_of(cfg);
    ExtendedParams xp = params_of(cfg);
    if (!(xp.alpha_plus > 0.0) || !(xp.alpha_minus > 0.0))
        throw std::invalid_argument("boundary-check: needs positive boundary weights");
    double s = xp.alpha_plus * xp.alpha_minus;

    auto [mgf_np, mgf_nm] = boundary_mgf(xp.alpha_plus, xp.alpha_minus, xp.p_plus, xp.p_minus);
    RunningStat tp, tm;
    uint64_t base = arm_seed(c.seed, 1);
    for (int64_t i = 0; i < c.samples; ++i) {
        PointMultiset ms = sample_extended(xp, sample_seed(base, static_cast<uint64_t>(i)));
        auto [np, nm] = boundary_counts(ms);
        tp.push(std::pow(s, -static_cast<double>(np)));
        tm.push(std::pow(s, -static_cast<double>(nm)));
    }
    rep.checks.push_back(stat_line("sigma-row transform mean", mgf_np, tp, c.tol_sigmas));
    rep.checks.push_back(stat_line("sigma-column transform mean", mgf_nm, tm, c.tol_sigmas));

    // Count means at the reciprocal pair (alpha, 1/alpha).
    double alpha = xp.alpha_plus;
    ExtendedParams recip = make_extended(xp.p_plus, xp.p_minus, alpha, 1.0 / alpha);
    auto [en_plus, en_minus] = boundary_mean(alpha, xp.p_plus, xp.p_minus);
    RunningStat np_stat, nm_stat, sum_stat;
    base = arm_seed(c.seed, 2);
    for (int64_t i = 0; i < c.samples; ++i) {
        PointMultiset ms = sample_extended(recip, sample_seed(base, static_cast<uint64_t>(i)));
        auto [np, nm] = boundary_counts(ms);
        np_stat.push(static_cast<double>(np));
        nm_stat.push(static_cast<double>(nm));
        sum_stat.push(static_cast<double>(np + nm));
    }
    rep.checks.push_back(stat_line("sigma-row count mean", en_plus, np_stat, c.tol_sigmas));
    rep.checks.push_back(stat_line("sigma-column count mean", en_minus, nm_stat, c.tol_sigmas));
    rep.checks.push_back(stat_line("boundary count sum vs mean identity",
                                   mean_identity(alpha, xp.p_plus, xp.p_minus), sum_stat,
                                   c.tol_sigmas));
}

// ----------------------------------------------------------------------
// continuous-check: chi1 mean/MGF identities, plus GUE and Laguerre
// reference KS tests.
// ----------------------------------------------------------------------
void run_continuous_check(const nlohmann::json& cfg, Report& rep) {
    Common c = common_of(cfg);
    int grid_k = cfg.value("grid_k", 400);

    if (cfg.contains("continuous")) {
        ContinuousParams base = cfg.at("continuous").get<ContinuousParams>();
        double a = cfg.value("a", 0.0);
        double a_plus = cfg.value("a_plus", 0.25);
        double a_minus = cfg.value("a_minus", 0.25);

        double mean_theory = continuous_mean(a, base);
        ContinuousParams cp_mean =
            make_continuous(base.rho_plus, base.rho_minus, base.u, a, -a);
        RunningStat mean_stat;
        uint64_t seed_mean = arm_seed(c.seed, 1);
        for (int64_t i = 0; i < c.samples; ++i)
            mean_stat.push(sample_chi1(cp_mean, grid_k, sample_seed(seed_mean, static_cast<uint64_t>(i))));
        rep.checks.push_back(stat_line("chi1 mean vs identity", mean_theory, mean_stat, c.tol_sigmas));

        double mgf_theory = continuous_mgf(a_plus, a_minus, base);
        ContinuousParams cp_mgf =
            make_continuous(base.rho_plus, base.rho_minus, base.u, a_plus, a_minus);
        RunningStat mgf_stat;
        uint64_t seed_mgf = arm_seed(c.seed, 2);
        for (int64_t i = 0; i < c.samples; ++i) {
            double chi = sample_chi1(cp_mgf, grid_k, sample_seed(seed_mgf, static_cast<uint64_t>(i)));
            mgf_stat.push(std::exp((a_plus + a_minus) * chi));
        }
        if (mgf_stat.se() > 0.25 * std::abs(mgf_theory)) {
            CheckLine line;
            line.name = "chi1 transform stability";
            line.expected = 0.25 * std::abs(mgf_theory);
            line.observed = mgf_stat.se();
            line.pass = false;
            line.note = "aborted: transform variance too large for a reliable comparison";
            rep.checks.push_back(line);
        } else {
            rep.checks.push_back(
                stat_line("chi1 transform mean vs identity", mgf_theory, mgf_stat, c.tol_sigmas));
        }
    }

    int gue_n = cfg.value("gue_n", 0);
    if (gue_n > 0) {
        int64_t n_samples = cfg.value("gue_samples", int64_t{20000});
        ContinuousParams gue = make_continuous(std::vector<double>(gue_n, 0.0), {}, 1.0, kInf, kInf);
        std::vector<double> chi, ref;
        uint64_t sa = arm_seed(c.seed, 3), sb = arm_seed(c.seed, 4);
        for (int64_t i = 0; i < n_samples; ++i) {
            chi.push_back(sample_chi1(gue, grid_k, sample_seed(sa, static_cast<uint64_t>(i))));
            ref.push_back(gue_reference_sample(gue_n, sample_seed(sb, static_cast<uint64_t>(i))));
        }
        // The grid walk has a small systematic O(sqrt(u/grid_k)) deficit, so a
        // p-value would reject at large sample counts by design; the right
        // statistic here is the KS distance against a threshold.
        KsResult ks = two_sample_ks(std::move(chi), std::move(ref));
        CheckLine d_line;
        d_line.name = "gaussian-ensemble KS distance";
        d_line.expected = 0.0;
        d_line.observed = ks.d;
        d_line.tolerance = cfg.value("gue_d_threshold", 0.05);
        d_line.pass = ks.d < d_line.tolerance;
        d_line.note = "grid_k=" + std::to_string(grid_k);
        rep.checks.push_back(d_line);
    }

    int lue_n_plus = cfg.value("lue_n_plus", 0);
    int lue_n_minus = cfg.value("lue_n_minus", 0);
    if (lue_n_plus > 0 && lue_n_minus > 0) {
        int64_t n_samples = cfg.value("lue_samples", int64_t{20000});
        ContinuousParams lue = make_continuous(std::vector<double>(lue_n_plus, 0.5),
                                               std::vector<double>(lue_n_minus, 0.5), 0.0, kInf, kInf);
        std::vector<double> chi, ref;
        uint64_t sa = arm_seed(c.seed, 5), sb = arm_seed(c.seed, 6);
        for (int64_t i = 0; i < n_samples; ++i) {
            chi.push_back(sample_chi1(lue, grid_k, sample_seed(sa, static_cast<uint64_t>(i))));
            ref.push_back(
                lue_reference_sample(lue_n_plus, lue_n_minus, sample_seed(sb, static_cast<uint64_t>(i))));
        }
        KsResult ks = two_sample_ks(std::move(chi), std::move(ref));
        rep.checks.push_back(ks_line("laguerre-ensemble KS p-value", ks, c.ks_p));
    }
}

// ----------------------------------------------------------------------
// asymptotics-check: generic minimizer against the closed-form families,
// pathological-regime detection, and the Gaussian regime.
// ----------------------------------------------------------------------
struct ClosedFormCase {
    std::string name;
    ParameterSet pp, pm;
    double alpha_tilde, mu, sigma;
};

std::vector<ClosedFormCase> closed_form_cases() {
    std::vector<ClosedFormCase> cases;
    auto fmt = [](double v) {
        std::ostringstream os;
        os << v;
        return os.str();
    };
    // Two-sided Poisson: alpha~ = 1, mu = 2t, sigma = t^{1/3}.
    for (double t : {0.5, 1.0, 2.0, 4.0, 8.0})
        cases.push_back(
            {"poisson t=" + fmt(t), make_params(t), make_params(t), 1.0, 2.0 * t, std::cbrt(t)});
    // Weak rows on both sides, weights sqrt(q); always an interior minimum.
    for (auto [q, np, nm] : std::vector<std::tuple<double, int, int>>{
             {0.25, 2, 1}, {0.09, 3, 2}, {0.16, 1, 1}, {0.04, 4, 2}, {0.36, 2, 3}}) {
        double sq = std::sqrt(q);
        ParameterSet pp = make_params(0.0, {}, std::vector<double>(np, sq));
        ParameterSet pm = make_params(0.0, {}, std::vector<double>(nm, sq));
        double at = (std::sqrt(double(np)) + std::sqrt(q * nm)) /
                    (std::sqrt(double(nm)) + std::sqrt(q * np));
        double mu = (q * (np + nm) + 2.0 * std::sqrt(q * np * nm)) / (1.0 - q);
        double sigma = std::pow(q * np * nm, 1.0 / 6.0) *
                       std::pow(1.0 + std::sqrt(q * np / nm), 2.0 / 3.0) *
                       std::pow(1.0 + std::sqrt(q * nm / np), 2.0 / 3.0) / (1.0 - q);
        cases.push_back({"weak-weak q=" + fmt(q) + " n+=" + fmt(np) + " n-=" + fmt(nm), pp, pm, at,
                         mu, sigma});
    }
    // Unit weak rows against a Poisson side; always an interior minimum.
    for (auto [n, t] : std::vector<std::pair<int, double>>{
             {1, 1.0}, {2, 1.0}, {1, 4.0}, {3, 2.0}, {2, 0.5}}) {
        ParameterSet pp = make_params(0.0, {}, std::vector<double>(n, 1.0));
        ParameterSet pm = make_params(t);
        double at = 1.0 + std::sqrt(n / t);
        double mu = t + 2.0 * std::sqrt(t * n);
        double sigma = std::sqrt(t) * std::pow(double(n), -1.0 / 6.0) *
                       std::pow(1.0 + std::sqrt(n / t), 2.0 / 3.0);
        cases.push_back({"unit-weak vs poisson n=" + fmt(n) + " t=" + fmt(t), pp, pm, at, mu, sigma});
    }
    // Strict rows on both sides, weights sqrt(q); interior iff q*n- < n+ and
    // q*n+ < n-.
    for (auto [q, np, nm] : std::vector<std::tuple<double, int, int>>{
             {0.25, 2, 1}, {0.25, 1, 1}, {0.16, 2, 3}, {0.09, 1, 2}, {0.49, 3, 2}}) {
        ParameterSet pp = make_params(0.0, std::vector<double>(np, std::sqrt(q)), {});
        ParameterSet pm = make_params(0.0, std::vector<double>(nm, std::sqrt(q)), {});
        double at = (std::sqrt(double(np)) - std::sqrt(q * nm)) /
                    (std::sqrt(double(nm)) - std::sqrt(q * np));
        double mu = (2.0 * std::sqrt(q * np * nm) - q * (np + nm)) / (1.0 - q);
        double sigma = std::pow(q * np * nm, 1.0 / 6.0) *
                       std::pow(1.0 - std::sqrt(q * np / nm), 2.0 / 3.0) *
                       std::pow(1.0 - std::sqrt(q * nm / np), 2.0 / 3.0) / (1.0 - q);
        cases.push_back({"strict-strict q=" + fmt(q) + " n+=" + fmt(np) + " n-=" + fmt(nm), pp, pm,
                         at, mu, sigma});
    }
    // Strict rows against weak rows; interior iff q*n- < n+.
    for (auto [q, np, nm] : std::vector<std::tuple<double, int, int>>{
             {0.25, 4, 1}, {0.25, 2, 1}, {0.09, 1, 2}, {0.16, 3, 2}, {0.36, 2, 1}}) {
        ParameterSet pp = make_params(0.0, std::vector<double>(np, std::sqrt(q)), {});
        ParameterSet pm = make_params(0.0, {}, std::vector<double>(nm, std::sqrt(q)));
        double at = (std::sqrt(double(np)) - std::sqrt(q * nm)) /
                    (std::sqrt(double(nm)) + std::sqrt(q * np));
        double mu = (2.0 * std::sqrt(q * np * nm) + q * (np - nm)) / (1.0 + q);
        double sigma = std::pow(q * np * nm, 1.0 / 6.0) *
                       std::pow(1.0 - std::sqrt(q * nm / np), 2.0 / 3.0) *
                       std::pow(1.0 + std::sqrt(q * np / nm), 2.0 / 3.0) / (1.0 + q);
        cases.push_back({"strict-weak q=" + fmt(q) + " n+=" + fmt(np) + " n-=" + fmt(nm), pp, pm,
                         at, mu, sigma});
    }
    // Unit strict rows against a Poisson side; interior iff n > t.
    for (auto [n, t] : std::vector<std::pair<int, double>>{
             {4, 1.0}, {2, 1.0}, {8, 2.0}, {3, 0.5}, {9, 4.0}}) {
        ParameterSet pp = make_params(0.0, std::vector<double>(n, 1.0), {});
        ParameterSet pm = make_params(t);
        double at = std::sqrt(n / t) - 1.0;
        double mu = 2.0 * std::sqrt(t * n) - t;
        double sigma = std::pow(t * n, 1.0 / 6.0) * std::pow(1.0 - std::sqrt(t / n), 2.0 / 3.0);
        cases.push_back(
            {"unit-strict vs poisson n=" + fmt(n) + " t=" + fmt(t), pp, pm, at, mu, sigma});
    }
    return cases;
}

void run_asymptotics_check(const nlohmann::json& cfg, Report& rep) {
    double rel_tol = cfg.value("rel_tolerance", 1e-8);
    // Relative deviation, falling back to absolute deviation for targets
    // below 1 (in particular exact zeros such as a symmetric critical point).
    auto rel = [](double got, double want) {
        double scale = std::max({std::abs(want), std::abs(got), 1.0});
        return std::abs(got - want) / scale;
    };
    auto push_case = [&](const std::string& name, double dev) {
        CheckLine line;
        line.name = name;
        line.expected = 0.0;
        line.observed = dev;
        line.tolerance = rel_tol;
        line.pass = dev <= rel_tol;
        line.note = "max relative deviation over (alpha~, mu, sigma)";
        rep.checks.push_back(line);
    };

    for (const auto& cs : closed_form_cases()) {
        ScaleFactors sf = scale_factors(cs.pp, cs.pm);
        double dev = std::max({rel(sf.alpha_tilde, cs.alpha_tilde), rel(sf.mu, cs.mu),
                               rel(sf.sigma, cs.sigma)});
        push_case(cs.name, dev);
    }

    // Pathological-regime detection.
    auto regime_line = [&](const std::string& name, const ParameterSet& pp,
                           const ParameterSet& pm, Regime want) {
        CriticalAlpha ca = critical_alpha(pp, pm);
        CheckLine line;
        line.name = name;
        line.expected = 0.0;
        line.observed = ca.regime == want ? 0.0 : 1.0;
        line.tolerance = 0.0;
        line.pass = ca.regime == want;
        line.note = "detected " + regime_name(ca.regime) + ", want " + regime_name(want) +
                    "; boundary infimum=" + std::to_string(ca.infimum);
        rep.checks.push_back(line);
    };
    regime_line("degenerate low edge: unit-strict vs poisson n=1 t=2",
                make_params(0.0, {1.0}, {}), make_params(2.0), Regime::kPathologicalZero);
    regime_line("degenerate low edge: strict-strict q=0.5 n+=1 n-=2",
                make_params(0.0, {std::sqrt(0.5)}, {}),
                make_params(0.0, std::vector<double>(2, std::sqrt(0.5)), {}),
                Regime::kPathologicalZero);
    regime_line("degenerate high edge: strict-strict q=0.5 n+=4 n-=1",
                make_params(0.0, std::vector<double>(4, std::sqrt(0.5)), {}),
                make_params(0.0, {std::sqrt(0.5)}, {}), Regime::kPathologicalInfinity);
    regime_line("degenerate low edge: strict-weak q=0.5 n+=1 n-=2",
                make_params(0.0, {std::sqrt(0.5)}, {}),
                make_params(0.0, {}, std::vector<double>(2, std::sqrt(0.5))),
                Regime::kPathologicalZero);
    // Exact threshold cases (equality in the degeneracy condition).
    regime_line("threshold: unit-strict vs poisson n=2 t=2",
                make_params(0.0, std::vector<double>(2, 1.0), {}), make_params(2.0),
                Regime::kPathologicalZero);
    regime_line("threshold: strict-strict q=0.5 n+=4 n-=2",
                make_params(0.0, std::vector<double>(4, std::sqrt(0.5)), {}),
                make_params(0.0, std::vector<double>(2, std::sqrt(0.5)), {}),
                Regime::kPathologicalInfinity);

    // Continuous families: Laguerre rates 1/2 and the Hermite interval model.
    for (auto [np, nm] : std::vector<std::pair<int, int>>{{1, 1}, {2, 3}}) {
        ContinuousParams cp = make_continuous(std::vector<double>(np, 0.5),
                                              std::vector<double>(nm, 0.5), 0.0, kInf, kInf);
        double sp = std::sqrt(double(np)), sm = std::sqrt(double(nm));
        double at = (sm - sp) / (2.0 * (sp + sm));
        double mu = (sp + sm) * (sp + sm);
        double sigma = std::pow(double(np) * nm, -1.0 / 6.0) * std::pow(sp + sm, 4.0 / 3.0);
        ScaleFactors sf = continuous_scale_factors(cp);
        push_case("exponential-cell n+=" + std::to_string(np) + " n-=" + std::to_string(nm),
                  std::max({rel(sf.alpha_tilde, at), rel(sf.mu, mu), rel(sf.sigma, sigma)}));
    }
    for (int n : {1, 4}) {
        ContinuousParams cp =
            make_continuous(std::vector<double>(n, 0.0), {}, 1.0, kInf, kInf);
        ScaleFactors sf = continuous_scale_factors(cp);
        double at = -std::sqrt(double(n));
        double mu = 2.0 * std::sqrt(double(n));
        double sigma = std::pow(double(n), -1.0 / 6.0);
        push_case("brownian-interval n=" + std::to_string(n),
                  std::max({rel(sf.alpha_tilde, at), rel(sf.mu, mu), rel(sf.sigma, sigma)}));
    }

    // Gaussian regime away from the critical point.
    {
        double t = 1.5, z = 2.0;
        auto [mu, sigma] = gaussian_regime(z, make_params(t), make_params(t));
        double dev = std::max(rel(mu, (z + 1.0 / z) * t), rel(sigma, std::sqrt((z - 1.0 / z) * t)));
        push_case("gaussian regime poisson t=1.5 z=2", dev);
    }
    {
        double z = -2.0;
        ContinuousParams cp = make_continuous({0.0}, {}, 1.0, kInf, kInf);
        auto [mu, sigma] = continuous_gaussian_regime(z, cp);
        double dev = std::max(rel(mu, -z - 1.0 / z), rel(sigma, std::sqrt(1.0 - 1.0 / (z * z))));
        push_case("gaussian regime brownian-interval n=1 z=-2", dev);
    }
}

// ----------------------------------------------------------------------
// trend-check: normalized means of scaled configurations are nondecreasing
// and bounded by the infimum of the mean identity.
// ----------------------------------------------------------------------
ParameterSet power_params(const ParameterSet& p, int n) {
    ParameterSet out;
    out.t = n * p.t;
    for (int k = 0; k < n; ++k) {
        out.q.insert(out.q.end(), p.q.begin(), p.q.end());
        out.r.insert(out.r.end(), p.r.begin(), p.r.end());
    }
    return out;
}

void run_trend_check(const nlohmann::json& cfg, Report& rep) {
    Common c = common_of(cfg);
    ExtendedParams xp = params_of(cfg);
    std::vector<int> n_values = cfg.value("n_values", std::vector<int>{1, 2, 4, 8});
    double inf_1 = critical_alpha(xp.p_plus, xp.p_minus).infimum;

    std::vector<double> norm_mean, norm_se;
    for (std::size_t k = 0; k < n_values.size(); ++k) {
        int n = n_values[k];
        if (n < 1) throw std::invalid_argument("trend-check: n_values must be >= 1");
        ParameterSet pp = power_params(xp.p_plus, n);
        ParameterSet pm = power_params(xp.p_minus, n);
        RunningStat stat;
        uint64_t base = arm_seed(c.seed, static_cast<uint64_t>(k) + 1);
        for (int64_t i = 0; i < c.samples; ++i)
            stat.push(static_cast<double>(
                lis_length(sample_multiset(pp, pm, sample_seed(base, static_cast<uint64_t>(i))))));
        norm_mean.push_back(stat.mean() / n);
        norm_se.push_back(stat.se() / n);

        CheckLine bound;
        bound.name = "normalized mean <= infimum (n=" + std::to_string(n) + ")";
        bound.expected = inf_1;
        bound.observed = norm_mean.back();
        bound.tolerance = c.tol_sigmas * norm_se.back();
        bound.pass = norm_mean.back() <= inf_1 + bound.tolerance;
        bound.note = "one-sided";
        rep.checks.push_back(bound);
    }
    for (std::size_t k = 0; k + 1 < n_values.size(); ++k) {
        CheckLine mono;
        mono.name = "normalized mean nondecreasing (n=" + std::to_string(n_values[k]) + " -> " +
                    std::to_string(n_values[k + 1]) + ")";
        mono.expected = 0.0;
        mono.observed = norm_mean[k + 1] - norm_mean[k];
        mono.tolerance =
            c.tol_sigmas * std::sqrt(norm_se[k] * norm_se[k] + norm_se[k + 1] * norm_se[k + 1]);
        mono.pass = mono.observed >= -mono.tolerance;
        mono.note = "one-sided";
        rep.checks.push_back(mono);
    }
}

using Runner = void (*)(const nlohmann::json&, Report&);

const std::map<std::string, Runner>& runners() {
    static const std::map<std::string, Runner> map = {
        {"mean-check", run_mean_check},           {"mgf-check", run_mgf_check},
        {"cdf-check", run_cdf_check},             {"bound-check", run_bound_check},
        {"reorder-check", run_reorder_check},     {"boundary-check", run_boundary_check},
        {"continuous-check", run_continuous_check},
        {"asymptotics-check", run_asymptotics_check},
        {"trend-check", run_trend_check},
    };
    return map;
}

}  // namespace

bool Report::passed() const {
    for (const auto& line : checks)
        if (!line.pass) return false;
    return !checks.empty();
}

const std::vector<std::string>& experiment_names() {
    static const std::vector<std::string> names = {
        "mean-check",     "mgf-check",      "cdf-check",
        "bound-check",    "reorder-check",  "boundary-check",
        "continuous-check", "asymptotics-check", "trend-check"};
    return names;
}

nlohmann::json default_config(const std::string& experiment) {
    auto poisson_pair = [](double ap, double am) {
        return nlohmann::json{{"p_plus", {{"t", 1.0}}},
                              {"p_minus", {{"t", 1.0}}},
                              {"alpha_plus", ap},
                              {"alpha_minus", am}};
    };
    nlohmann::json cfg{{"seed", 1}, {"tolerance_sigmas", 4.0}, {"ks_p_threshold", 0.001}};
    if (experiment == "mean-check") {
        cfg["params"] = poisson_pair(1.0, 1.0);
        cfg["samples"] = 200000;
    } else if (experiment == "mgf-check") {
        cfg["params"] = poisson_pair(2.0, 1.0);
        cfg["samples"] = 200000;
    } else if (experiment == "cdf-check") {
        cfg["params"] = poisson_pair(0.0, 0.0);
        cfg["samples"] = 100000;
        cfg["sup_threshold"] = 0.01;
    } else if (experiment == "bound-check") {
        cfg["params"] = nlohmann::json{{"p_plus", {{"t", 2.0}}},
                                       {"p_minus", {{"t", 2.0}}},
                                       {"alpha_plus", 0.5},
                                       {"alpha_minus", 0.5}};
        cfg["samples"] = 10000;
    } else if (experiment == "reorder-check") {
        cfg["params"] = nlohmann::json{
            {"p_plus", {{"t", 1.0}, {"q", {0.4}}, {"r", {0.4}}}},
            {"p_minus", {{"t", 1.0}, {"q", {0.4}}, {"r", {0.4}}}},
            {"alpha_plus", 0.0},
            {"alpha_minus", 0.0}};
        cfg["samples"] = 50000;
        cfg["negative_control"] = false;
    } else if (experiment == "boundary-check") {
        cfg["params"] = poisson_pair(2.0, 1.0);
        cfg["samples"] = 100000;
    } else if (experiment == "continuous-check") {
        cfg["continuous"] = nlohmann::json{{"rho_plus", {1.0}}, {"rho_minus", {1.0}}, {"u", 0.0}};
        cfg["a"] = 0.0;
        cfg["a_plus"] = 0.25;
        cfg["a_minus"] = 0.25;
        cfg["samples"] = 100000;
        cfg["grid_k"] = 400;
        cfg["gue_n"] = 2;
        cfg["gue_samples"] = 20000;
        cfg["gue_d_threshold"] = 0.05;
        cfg["lue_n_plus"] = 2;
        cfg["lue_n_minus"] = 2;
        cfg["lue_samples"] = 20000;
    } else if (experiment == "asymptotics-check") {
        cfg["rel_tolerance"] = 1e-8;
    } else if (experiment == "trend-check") {
        cfg["params"] = poisson_pair(0.0, 0.0);
        cfg["samples"] = 20000;
        cfg["n_values"] = {1, 2, 4, 8};
    } else {
        throw std::invalid_argument("unknown experiment '" + experiment + "'");
    }
    return cfg;
}

Report run_experiment(const std::string& experiment, const nlohmann::json& config) {
    auto it = runners().find(experiment);
    if (it == runners().end())
        throw std::invalid_argument("unknown experiment '" + experiment + "'");
    nlohmann::json effective = default_config(experiment);
    if (!config.is_null()) {
        if (!config.is_object()) throw std::invalid_argument("config must be a JSON object");
        effective.update(config);
    }

    Report rep;
    rep.experiment = experiment;
    rep.config = effective;
    rep.seed = effective.value("seed", uint64_t{1});
    rep.samples = effective.value("samples", int64_t{0});
    auto start = std::chrono::steady_clock::now();
    it->second(effective, rep);
    rep.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

nlohmann::json report_json(const Report& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& line : report.checks)
        checks.push_back({{"name", line.name},
                          {"expected", line.expected},
                          {"observed", line.observed},
                          {"tolerance", line.tolerance},
                          {"pass", line.pass},
                          {"note", line.note}});
    return nlohmann::json{{"experiment", report.experiment}, {"config", report.config},
                          {"seed", report.seed},             {"samples", report.samples},
                          {"checks", checks},                {"pass", report.passed()},
                          {"runtime_seconds", report.runtime_seconds}};
}

std::string report_csv(const Report& report) {
    if (!report.table_csv.empty()) return report.table_csv;
    std::ostringstream csv;
    csv << "name,expected,observed,tolerance,pass\n";
    csv.precision(12);
    for (const auto& line : report.checks)
        csv << '"' << line.name << "\"," << line.expected << "," << line.observed << ","
            << line.tolerance << "," << (line.pass ? "true" : "false") << "\n";
    return csv.str();
}

}  // namespace lislab
