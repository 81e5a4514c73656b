// SPDX-License-Identifier: Apache-2.0
//
// ipred - interference prediction for URLLC link adaptation
// Copyright (C) 2026 The ipred authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// ipred command line front end.
//
// Exit codes: 0 success, 1 usage, 2 invalid configuration, 3 runtime error.

#include "ipred/config.hpp"
#include "ipred/dtmc.hpp"
#include "ipred/engine.hpp"
#include "ipred/fbl.hpp"
#include "ipred/interference_model.hpp"
#include "ipred/results.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace ipred;

enum ExitCode { exit_ok = 0, exit_usage = 1, exit_validation = 2, exit_runtime = 3 };

// Flags shared by the simulation subcommands.
struct CommonOptions {
    std::string config_path;
    std::string predictor;
    std::optional<double> eta;
    std::optional<std::uint64_t> slots;
    std::optional<std::uint64_t> seed;
    std::optional<double> rho;
    std::vector<double> targets;
    std::string output;
    std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_predictor)
{
    cmd->add_option("--config", opt.config_path, "JSON scenario config")->check(CLI::ExistingFile);
    if (with_predictor)
        cmd->add_option("--predictor", opt.predictor, "dtmc, iir or genie");
    cmd->add_option("--slots", opt.slots, "measured slots");
    cmd->add_option("--seed", opt.seed, "random seed");
    cmd->add_option("--rho", opt.rho, "interferer fading correlation in [0, 1)");
    cmd->add_option("--targets", opt.targets, "target error probabilities")->delimiter(',');
    cmd->add_option("--output", opt.output, "result file (stdout when omitted)");
    cmd->add_option("--format", opt.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

ScenarioConfig load_config(const CommonOptions& opt)
{
    ScenarioConfig config = opt.config_path.empty() ? ScenarioConfig{} : parse_config(opt.config_path);
    if (!opt.predictor.empty()) {
        try {
            config.predictor = parse_predictor_kind(opt.predictor);
        } catch (const std::invalid_argument& e) {
            throw ValidationError("predictor", e.what());
        }
    }
    if (opt.eta)
        config.confidence = *opt.eta;
    if (opt.slots)
        config.measured_slots = *opt.slots;
    if (opt.seed)
        config.seed = *opt.seed;
    if (opt.rho)
        config.correlation = *opt.rho;
    if (!opt.targets.empty())
        config.target_errors = opt.targets;
    config.validate();
    return config;
}

void emit(const CommonOptions& opt, const std::vector<ResultRow>& rows, RunManifest manifest)
{
    const auto format = parse_output_format(opt.format);
    if (opt.output.empty()) {
        if (format == OutputFormat::csv)
            write_csv(std::cout, rows);
        else
            std::cout << to_json(rows, manifest).dump(2) << '\n';
        return;
    }
    emit_results(opt.output, format, rows, std::move(manifest));
}

RunManifest make_manifest(const ScenarioConfig& config, std::string command)
{
    RunManifest manifest;
    manifest.config = config_to_json(config);
    manifest.seed = config.seed;
    manifest.command = std::move(command);
    manifest.started_at = utc_timestamp();
    return manifest;
}

std::vector<PredictorSpec> all_kinds(double eta)
{
    return {{PredictorKind::dtmc, eta}, {PredictorKind::iir, eta}, {PredictorKind::genie, eta}};
}

// ---- subcommands ---------------------------------------------------------

int cmd_run(const CommonOptions& opt)
{
    const auto config = load_config(opt);
    const std::vector<RunMetrics> runs{run_scenario(config)};
    emit(opt, to_rows(runs, "custom"), make_manifest(config, "run"));
    return exit_ok;
}

int cmd_sweep(const CommonOptions& opt, std::vector<double> etas)
{
    const auto config = load_config(opt);
    if (etas.empty())
        etas = {0.8, 0.85, 0.9, 0.95};
    for (double eta : etas)
        if (!(eta > 0.0 && eta < 1.0))
            throw ValidationError("confidence", "every --eta value must lie in (0, 1)");
    const auto runs = sweep_eta(config, etas);
    emit(opt, to_rows(runs, "sweep"), make_manifest(config, "sweep"));
    return exit_ok;
}

int cmd_scenarios(const CommonOptions& opt)
{
    const auto base = load_config(opt);
    std::vector<ResultRow> rows;
    for (auto name : scenario_preset_names()) {
        if (name == "table1")
            continue;
        ScenarioConfig config = base;
        apply_scenario_preset(name, config);
        const auto kinds = all_kinds(config.confidence);
        const auto runs = compare_predictors(config, kinds);
        const auto part = to_rows(runs, name);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    emit(opt, rows, make_manifest(base, "scenarios"));
    return exit_ok;
}

int cmd_correlated(const CommonOptions& opt)
{
    auto correlated = load_config(opt);
    if (!opt.rho)
        correlated.correlation = 0.9;
    auto uncorrelated = correlated;
    uncorrelated.correlation = 0.0;

    const auto kinds = all_kinds(correlated.confidence);
    std::vector<ResultRow> rows = to_rows(compare_predictors(uncorrelated, kinds), "uncorrelated");
    const auto part = to_rows(compare_predictors(correlated, kinds), "correlated");
    rows.insert(rows.end(), part.begin(), part.end());
    emit(opt, rows, make_manifest(correlated, "correlated"));
    return exit_ok;
}

struct FblOptions {
    double payload_bits = 50.0;
    double target_error = 1e-5;
    double sinr_db = 20.0;
    std::string format = "text";
};

int cmd_fbl(const FblOptions& opt)
{
    const double sinr = db_to_linear(opt.sinr_db);
    fbl::AllocationRequest request{opt.payload_bits, opt.target_error, sinr};
    double blocklength = 0.0;
    try {
        blocklength = fbl::required_blocklength(request);
    } catch (const std::invalid_argument& e) {
        throw ValidationError("fbl", e.what());
    }
    const double check = fbl::realized_error(opt.payload_bits, blocklength, sinr);
    const double capacity = fbl::shannon_capacity(sinr);
    const double dispersion = fbl::channel_dispersion(sinr);

    if (opt.format == "json") {
        nlohmann::json doc{{"payload_bits", opt.payload_bits},
                           {"target_error", opt.target_error},
                           {"sinr_db", opt.sinr_db},
                           {"sinr", sinr},
                           {"capacity", capacity},
                           {"dispersion", dispersion},
                           {"blocklength", blocklength},
                           {"blocklength_ceiled", fbl::required_blocklength_ceiled(request)},
                           {"realized_error", check}};
        std::cout << doc.dump(2) << '\n';
    } else {
        std::printf("payload_bits     %.10g\n", opt.payload_bits);
        std::printf("target_error     %.10g\n", opt.target_error);
        std::printf("sinr             %.10g (%.4g dB)\n", sinr, opt.sinr_db);
        std::printf("capacity         %.10g bit/cu\n", capacity);
        std::printf("dispersion       %.10g\n", dispersion);
        std::printf("blocklength      %.10g cu\n", blocklength);
        std::printf("realized_error   %.10g\n", check);
    }
    return exit_ok;
}

int cmd_dump_matrix(const CommonOptions& opt)
{
    auto config = load_config(opt);
    if (!opt.slots)
        config.measured_slots = 0;

    ChannelRealization channel(config);
    std::vector<double> warmup(config.warmup_length);
    for (auto& sample : warmup)
        sample = channel.next().interference;
    dtmc::Predictor predictor(warmup, config.state_count, config.confidence, config.learning_scale);
    for (std::uint64_t t = 0; t < config.measured_slots; ++t)
        predictor.observe(channel.next().interference);

    if (opt.output.empty()) {
        predictor.model().write_csv(std::cout);
        return exit_ok;
    }
    std::ofstream out(opt.output, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + opt.output + "'");
    predictor.model().write_csv(out);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Markov-chain interference prediction for URLLC resource allocation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(ipred::artifact_version));

    CommonOptions run_opt;
    auto* run = app.add_subcommand("run", "run a single scenario");
    add_common(run, run_opt, true);
    run->add_option("--eta", run_opt.eta, "DTMC confidence level");

    CommonOptions sweep_opt;
    std::vector<double> sweep_etas;
    auto* sweep = app.add_subcommand("sweep", "DTMC over a grid of eta values and targets");
    add_common(sweep, sweep_opt, false);
    sweep->add_option("--eta", sweep_etas, "comma-separated eta values")->delimiter(',');

    CommonOptions scen_opt;
    auto* scenarios = app.add_subcommand("scenarios", "all predictors on the three interference presets");
    add_common(scenarios, scen_opt, false);
    scenarios->add_option("--eta", scen_opt.eta, "DTMC confidence level");

    CommonOptions corr_opt;
    auto* correlated = app.add_subcommand("correlated", "all predictors with and without fading correlation");
    add_common(correlated, corr_opt, false);
    correlated->add_option("--eta", corr_opt.eta, "DTMC confidence level");

    FblOptions fbl_opt;
    auto* fbl_cmd = app.add_subcommand("fbl", "finite-blocklength calculator");
    fbl_cmd->add_option("--bits,-D", fbl_opt.payload_bits, "payload in bits");
    fbl_cmd->add_option("--target,-e", fbl_opt.target_error, "target error probability");
    fbl_cmd->add_option("--sinr-db,-g", fbl_opt.sinr_db, "SINR in dB");
    fbl_cmd->add_option("--format", fbl_opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    CommonOptions dump_opt;
    auto* dump = app.add_subcommand("dump-matrix", "warm up a DTMC predictor and print its transition matrix");
    add_common(dump, dump_opt, false);
    dump->add_option("--eta", dump_opt.eta, "DTMC confidence level");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*run)
            return cmd_run(run_opt);
        if (*sweep)
            return cmd_sweep(sweep_opt, sweep_etas);
        if (*scenarios)
            return cmd_scenarios(scen_opt);
        if (*correlated)
            return cmd_correlated(corr_opt);
        if (*fbl_cmd)
            return cmd_fbl(fbl_opt);
        if (*dump)
            return cmd_dump_matrix(dump_opt);
    } catch (const ValidationError& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return exit_validation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_runtime;
    }
    return exit_usage;
}
