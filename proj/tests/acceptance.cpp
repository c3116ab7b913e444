// Acceptance suite: the ten release criteria at their stated sample sizes and
// tolerances.  Prints one PASS/FAIL line per criterion; the exit status is the
// number of failed criteria.

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lislab/exact_dist.hpp"
#include "lislab/experiments.hpp"
#include "lislab/lis.hpp"
#include "lislab/params.hpp"
#include "lislab/rng.hpp"
#include "random_multisets.hpp"

using namespace lislab;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    failures += pass ? 0 : 1;
    std::printf("criterion %2d %-28s %s  %s\n", id, (name + ":").c_str(),
                pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
}

const CheckLine* find_line(const Report& rep, const std::string& prefix) {
    for (const auto& line : rep.checks)
        if (line.name.rfind(prefix, 0) == 0) return &line;
    return nullptr;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

void criterion_mean_identity() {
    double closed = mean_identity(1.0, make_params(1.0), make_params(1.0));
    bool closed_ok = std::abs(closed - 2.0) <= 1e-12;
    Report rep = run_experiment("mean-check", {});  // defaults: 2e5 samples, 4 SE
    const CheckLine* line = find_line(rep, "lambda1 mean");
    bool ok = closed_ok && line && line->pass && rep.runtime_seconds < 60.0;
    report(1, "mean identity", ok,
           "E[len]=" + fmt(line ? line->observed : 0.0) + " target 2 +- " +
               fmt(line ? line->tolerance : 0.0) + ", closed form " +
               (closed_ok ? "exact" : "WRONG") + ", " + fmt(rep.runtime_seconds) + "s");
}

void criterion_mgf_identity() {
    Report rep = run_experiment("mgf-check", {});  // defaults: alpha=(2,1), 2e5 samples
    const CheckLine* line = find_line(rep, "transform mean");
    bool ok = line && line->pass && rep.runtime_seconds < 60.0;
    report(2, "transform identity", ok,
           "E[2^-len]=" + fmt(line ? line->observed : 0.0) + " target " +
               fmt(line ? line->expected : 0.0) + " +- " + fmt(line ? line->tolerance : 0.0) +
               ", " + fmt(rep.runtime_seconds) + "s");
}

void criterion_exact_cdf() {
    ExtendedParams xp = make_extended(make_params(1.0), make_params(1.0), 0.0, 0.0);
    double c0 = cdf_value(xp, 0);
    bool c0_ok = std::abs(c0 - std::exp(-1.0)) <= 1e-12;
    double series = 0.0, term = 1.0;
    for (int n = 0; n < 40; ++n) {
        series += term;
        term /= (n + 1.0) * (n + 1.0);
    }
    double c1 = cdf_value(xp, 1);
    bool c1_ok = std::abs(c1 - std::exp(-1.0) * series) <= 1e-10;
    Report rep = run_experiment("cdf-check", {});  // defaults: 1e5 samples, sup < 0.01
    const CheckLine* sup = find_line(rep, "cdf sup distance");
    bool ok = c0_ok && c1_ok && sup && sup->pass;
    report(3, "exact distribution", ok,
           "cdf(0)-e^-1=" + fmt(c0 - std::exp(-1.0)) + ", cdf(1)-oracle=" +
               fmt(c1 - std::exp(-1.0) * series) + ", sup dist=" +
               fmt(sup ? sup->observed : 1.0));
}

void criterion_determinant_symmetry() {
    CounterRng rng(314159);
    double worst = 0.0;
    for (int draw = 0; draw < 20; ++draw) {
        auto weights = [&rng](double lo, double hi, int max_n) {
            std::vector<double> w;
            int n = static_cast<int>(rng.next_u64() % static_cast<uint64_t>(max_n + 1));
            for (int i = 0; i < n; ++i) w.push_back(lo + (hi - lo) * rng.next_unit());
            return w;
        };
        ParameterSet pp = make_params(1.2 * rng.next_unit(), weights(0.1, 0.55, 2),
                                      weights(0.05, 0.45, 2));
        ParameterSet pm = make_params(1.2 * rng.next_unit(), weights(0.1, 0.55, 2),
                                      weights(0.05, 0.45, 2));
        double ap = 0.5 + 1.3 * rng.next_unit();
        double am = 0.5 + 1.3 * rng.next_unit();
        LaurentCoeffs direct = laurent_coeffs(make_extended(pp, pm, ap, am), 64);
        LaurentCoeffs swapped = laurent_coeffs(make_extended(pp, pm, 1.0 / am, 1.0 / ap), 64);
        double factor = 1.0;
        for (int l = 0; l <= 10; ++l) {
            double lhs = toeplitz_det(direct, l);
            double rhs = factor * toeplitz_det(swapped, l);
            worst = std::max(worst, std::abs(lhs - rhs) /
                                        std::max({std::abs(lhs), std::abs(rhs), 1e-300}));
            factor *= ap * am;
        }
    }
    report(4, "determinant symmetry", worst < 1e-9,
           "worst relative deviation " + fmt(worst) + " over 20 draws, l <= 10");
}

void criterion_oracle_equivalence() {
    const ChainRules rule_sets[] = {{AxisOrder::kRowsFirst, false},
                                    {AxisOrder::kContFirst, false},
                                    {AxisOrder::kRowsFirst, true}};
    std::set<std::pair<int, int>> mixes;
    int mismatches = 0;
    for (uint64_t seed = 0; seed < 1000; ++seed) {
        PointMultiset ms = random_mixed_multiset(seed, 40);
        for (const auto& p : ms.points)
            mixes.insert({static_cast<int>(p.x.kind), static_cast<int>(p.y.kind)});
        for (const ChainRules& rules : rule_sets)
            if (lis_length(ms, rules) != lis_length_oracle(ms, rules)) ++mismatches;
    }
    bool ok = mismatches == 0 && mixes.size() == 15;
    report(5, "oracle equivalence", ok,
           std::to_string(mismatches) + " mismatches over 1000 multisets x 3 rule sets, " +
               std::to_string(mixes.size()) + "/15 cell-type mixes seen");
}

void criterion_coupling_and_bound() {
    // Per-seed coupling at positive boundary weight, 1e4 samples.
    Report coupled = run_experiment("bound-check", {});  // t=2 pair, alpha=0.5
    const CheckLine* viol = find_line(coupled, "coupling violations");
    // Unextended means below the infimum of the mean identity at t = 1, 2, 4,
    // via the scaled-family trend (normalized means, monotone and bounded).
    Report trend = run_experiment(
        "trend-check", {{"n_values", {1, 2, 4}}, {"samples", 20000}});
    bool ok = coupled.passed() && viol && viol->pass && trend.passed();
    report(6, "coupling and mean bound", ok,
           "violations=" + fmt(viol ? viol->observed : -1.0) + "/10000, bounds at t in {1,2,4} " +
               (trend.passed() ? "hold" : "VIOLATED"));
}

void criterion_order_invariance() {
    Report positive = run_experiment("reorder-check", {});  // 5e4 per arm, mixed params
    Report negative = run_experiment("reorder-check", {{"negative_control", true}});
    const CheckLine* pos = find_line(positive, "order-invariance");
    const CheckLine* neg = find_line(negative, "order-invariance");
    bool ok = positive.passed() && !negative.passed();
    report(7, "ordering invariance", ok,
           "KS p=" + fmt(pos ? pos->observed : 0.0) + ", negative control p=" +
               fmt(neg ? neg->observed : 1.0) + (negative.passed() ? " (UNEXPECTED PASS)" : ""));
}

void criterion_asymptotics() {
    Report rep = run_experiment("asymptotics-check", {});
    int n_pass = 0;
    for (const auto& line : rep.checks) n_pass += line.pass ? 1 : 0;
    report(8, "asymptotic scale factors", rep.passed(),
           std::to_string(n_pass) + "/" + std::to_string(rep.checks.size()) +
               " sweep points within 1e-8 (incl. regime detection)");
}

void criteria_continuous(const Report& rep) {
    const CheckLine* mean = find_line(rep, "chi1 mean");
    const CheckLine* mgf = find_line(rep, "chi1 transform mean");
    bool ok9 = mean && mean->pass && mgf && mgf->pass;
    report(9, "continuous identities", ok9,
           "mean=" + fmt(mean ? mean->observed : 0.0) + " (target 2), transform=" +
               fmt(mgf ? mgf->observed : 0.0) + " (target 25/9)");

    const CheckLine* gue = find_line(rep, "gaussian-ensemble KS distance");
    bool ok10 = gue && gue->pass;
    report(10, "GUE degeneration", ok10,
           "KS distance=" + fmt(gue ? gue->observed : 1.0) +
               " threshold 0.05 (n=2, grid 400, 2e4 samples)");
}

}  // namespace

int main() {
    std::printf("acceptance suite: ten criteria at full sample sizes\n");
    criterion_mean_identity();
    criterion_mgf_identity();
    criterion_exact_cdf();
    criterion_determinant_symmetry();
    criterion_oracle_equivalence();
    criterion_coupling_and_bound();
    criterion_order_invariance();
    criterion_asymptotics();
    Report cont = run_experiment("continuous-check", {});  // serves criteria 9 and 10
    criteria_continuous(cont);
    std::printf("%s (%d/10 criteria passed)\n", failures == 0 ? "ALL PASS" : "FAILURES",
                10 - failures);
    return failures;
}
