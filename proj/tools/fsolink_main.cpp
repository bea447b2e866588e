// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: one subcommand per experiment, emitting the
// plot-ready CSV tables. Exit codes: 0 success, 2 configuration error,
// 3 numerical failure, 4 I/O error.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fsolink/errors.hpp"
#include "fsolink/experiments.hpp"
#include "fsolink/version.hpp"

namespace {

struct CommonOptions {
    std::string config_path;
    std::vector<std::string> overrides;
    std::string out_path = "-";
    std::uint64_t seed = 0;
    bool seed_set = false;
    int workers = 0;
    bool workers_set = false;
};

void add_common_options(CLI::App *cmd, CommonOptions &opts)
{
    cmd->add_option("--config", opts.config_path, "Configuration file (key = value lines)");
    cmd->add_option("--set", opts.overrides, "Override, key=value (repeatable)");
    cmd->add_option("--out", opts.out_path, "Output CSV path, '-' for stdout");
    cmd->add_option("--seed", opts.seed, "Monte-Carlo seed (overrides mc.seed)")
        ->each([&opts](const std::string &) { opts.seed_set = true; });
    cmd->add_option("--workers", opts.workers,
                    "Logical Monte-Carlo substreams (overrides mc.workers and FSOLINK_WORKERS)")
        ->each([&opts](const std::string &) { opts.workers_set = true; });
}

fsolink::ExperimentConfig build_config(const CommonOptions &opts)
{
    fsolink::ExperimentConfig cfg;
    if (!opts.config_path.empty())
        cfg = fsolink::load_config_file(opts.config_path);

    for (const auto &kv : opts.overrides) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw fsolink::ConfigError("--set expects key=value, got '" + kv + "'");
        std::string key = kv.substr(0, eq);
        std::string value = kv.substr(eq + 1);
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t'))
            key.pop_back();
        while (!value.empty() && (value.front() == ' ' || value.front() == '\t'))
            value.erase(value.begin());
        fsolink::apply_override(cfg, key, value);
    }

    if (opts.seed_set)
        cfg.mc_seed = opts.seed;

    if (opts.workers_set) {
        cfg.mc_workers = opts.workers;
    } else if (const char *env = std::getenv("FSOLINK_WORKERS")) {
        try {
            std::size_t pos = 0;
            int w = std::stoi(env, &pos);
            if (pos != std::string(env).size() || w < 1)
                throw std::invalid_argument("bad value");
            cfg.mc_workers = w;
        } catch (const std::exception &) {
            throw fsolink::ConfigError(std::string("FSOLINK_WORKERS: expected a positive "
                                                   "integer, got '") +
                                       env + "'");
        }
    }

    fsolink::validate_config(cfg);
    return cfg;
}

int run(const CommonOptions &opts,
        const std::function<fsolink::ResultTable(const fsolink::ExperimentConfig &)> &experiment)
{
    try {
        fsolink::ExperimentConfig cfg = build_config(opts);
        fsolink::ResultTable table = experiment(cfg);
        fsolink::write_csv(table, opts.out_path);
        return 0;
    } catch (const fsolink::ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const fsolink::NumericalError &e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const fsolink::IoError &e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument &e) {
        // library-level precondition violations reached through a config
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"IRS-assisted free-space optical link simulator"};
    app.set_version_flag("--version", std::string(fsolink::kToolName) + " " +
                                          fsolink::kToolVersion);
    app.require_subcommand(1);

    CommonOptions field_opts, power_opts, outage_opts, delay_opts;
    CLI::App *field = app.add_subcommand(
        "field-map", "Reflected power density along a horizontal line, wave vs geometric");
    add_common_options(field, field_opts);
    CLI::App *power = app.add_subcommand(
        "power-sweep", "Captured-power fraction vs IRS length for all designs and engines");
    add_common_options(power, power_opts);
    CLI::App *outage = app.add_subcommand(
        "outage", "Outage probability vs transmit SNR for IRS and relay systems");
    add_common_options(outage, outage_opts);
    CLI::App *delay =
        app.add_subcommand("delay", "Delay dispersion over lengths and angle pairs");
    add_common_options(delay, delay_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (field->parsed())
        return run(field_opts, fsolink::run_field_map);
    if (power->parsed())
        return run(power_opts, fsolink::run_power_sweep);
    if (outage->parsed())
        return run(outage_opts, fsolink::run_outage);
    return run(delay_opts, fsolink::run_delay);
}
