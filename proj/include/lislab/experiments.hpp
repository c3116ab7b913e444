#pragma once
// Experiment harness: each experiment samples a configuration, compares the
// empirical statistics against the module closed forms, and emits a report of
// named pass/fail check lines.
//
// Configs are JSON objects; missing keys take per-experiment defaults
// (default_config).  Statistical comparisons use a tolerance of
// `tolerance_sigmas` standard errors (default 4) and KS verdicts use
// `ks_p_threshold` (default 0.001).  Reports are reproducible: identical
// config + seed give identical reports except for the runtime field.

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace lislab {

struct CheckLine {
    std::string name;
    double expected = 0.0;
    double observed = 0.0;
    double tolerance = 0.0;  // allowed |observed - expected|, or threshold for p-values
    bool pass = false;
    std::string note;
};

struct Report {
    std::string experiment;
    nlohmann::json config;  // effective config after defaults
    uint64_t seed = 0;
    int64_t samples = 0;
    std::vector<CheckLine> checks;
    std::string table_csv;  // experiment-specific table (empty if none)
    double runtime_seconds = 0.0;

    bool passed() const;
};

// Known experiment names, in CLI order.
const std::vector<std::string>& experiment_names();

// Built-in defaults for one experiment (throws on unknown names).
nlohmann::json default_config(const std::string& experiment);

// Run one experiment; `config` keys override the defaults.  Throws
// std::invalid_argument / nlohmann::json exceptions on malformed configs.
Report run_experiment(const std::string& experiment, const nlohmann::json& config);

nlohmann::json report_json(const Report& report);

// CSV: the experiment-specific table when present, else the check lines.
std::string report_csv(const Report& report);

}  // namespace lislab
