// lislab: sampling laboratory for generalized increasing-subsequence models.
//
// Usage:
//   lislab <experiment> [--config file.json] [--seed N] [--samples N]
//                       [--out report.json] [--csv table.csv]
//
// Exit codes: 0 all checks passed, 1 at least one check failed,
// 2 configuration or setup error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lislab/experiments.hpp"

namespace {

struct Cli {
    std::string experiment;
    std::string config_path;
    std::optional<uint64_t> seed;
    std::optional<int64_t> samples;
    std::string out_path;
    std::string csv_path;
};

int run(const Cli& cli) {
    nlohmann::json config = nlohmann::json::object();
    if (!cli.config_path.empty()) {
        std::ifstream in(cli.config_path);
        if (!in) {
            std::cerr << "error: cannot open config file '" << cli.config_path << "'\n";
            return 2;
        }
        try {
            in >> config;
        } catch (const nlohmann::json::exception& e) {
            std::cerr << "error: cannot parse config file '" << cli.config_path
                      << "': " << e.what() << "\n";
            return 2;
        }
        if (!config.is_object()) {
            std::cerr << "error: config file must contain a JSON object\n";
            return 2;
        }
    }
    if (cli.seed) config["seed"] = *cli.seed;
    if (cli.samples) config["samples"] = *cli.samples;
    // The config file may name the report path itself; the flag wins.
    std::string out_path = cli.out_path;
    if (out_path.empty() && config.contains("output")) {
        if (!config["output"].is_string()) {
            std::cerr << "error: config \"output\" must be a string path\n";
            return 2;
        }
        out_path = config["output"].get<std::string>();
    }

    lislab::Report report;
    try {
        report = lislab::run_experiment(cli.experiment, config);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    int passed = 0;
    for (const auto& line : report.checks) {
        passed += line.pass ? 1 : 0;
        std::printf("[%s] %s: observed=%.10g expected=%.10g tolerance=%.10g%s%s\n",
                    line.pass ? "PASS" : "FAIL", line.name.c_str(), line.observed, line.expected,
                    line.tolerance, line.note.empty() ? "" : "  -- ",
                    line.note.c_str());
    }
    std::printf("experiment %s: %s (%d/%zu checks passed, %.2fs)\n", report.experiment.c_str(),
                report.passed() ? "PASS" : "FAIL", passed, report.checks.size(),
                report.runtime_seconds);

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write report to '" << out_path << "'\n";
            return 2;
        }
        out << lislab::report_json(report).dump(2) << "\n";
    }
    if (!cli.csv_path.empty()) {
        std::ofstream out(cli.csv_path);
        if (!out) {
            std::cerr << "error: cannot write table to '" << cli.csv_path << "'\n";
            return 2;
        }
        out << lislab::report_csv(report);
    }
    return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"simulation laboratory for generalized increasing-subsequence growth models"};
    app.require_subcommand(1);

    Cli cli;
    for (const std::string& name : lislab::experiment_names()) {
        CLI::App* sub = app.add_subcommand(name, "run the " + name + " experiment");
        sub->add_option("--config", cli.config_path, "JSON config file (overrides defaults)");
        sub->add_option("--seed", cli.seed, "master seed (overrides config)");
        sub->add_option("--samples", cli.samples, "sample count (overrides config)");
        sub->add_option("--out", cli.out_path, "write the full JSON report here");
        sub->add_option("--csv", cli.csv_path, "write the result table as CSV here");
        sub->callback([&cli, name] { cli.experiment = name; });
    }
    CLI::App* show = app.add_subcommand("show-config", "print the default config for an experiment");
    std::string show_name;
    show->add_option("experiment", show_name, "experiment name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (show->parsed()) {
            std::cout << lislab::default_config(show_name).dump(2) << "\n";
            return 0;
        }
        return run(cli);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
