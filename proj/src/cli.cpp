/*
* Copyright (C) 2026 The t2dsim Authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/
#include "t2dsim/cli.hpp"
#include "t2dsim/errors.hpp"
#include "t2dsim/scenario.hpp"
#include "t2dsim/trajectory_io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

namespace t2d
{
namespace
{

struct RunOptions
{
    std::string scenario;
    std::string params;
    std::string out;
    std::string format = "csv";
    std::optional<double> sample_min;
    std::optional<double> rtol;
    std::optional<double> atol;
    std::optional<double> fixed_step;
};

struct BasalOptions
{
    std::string params;
    std::string gb = "180.16mg/dl";
    double ipf     = 1.0;
};

std::string fmt10(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

ParameterSet base_parameters(const std::string& path)
{
    return path.empty() ? ParameterSet{} : load_parameters(path);
}

int do_run(const RunOptions& o, std::ostream& out)
{
    const auto format = output_format_from_name(o.format);
    if (!format) {
        throw DomainError("unknown format '" + o.format + "' (expected csv or jsonl)");
    }
    Scenario sc = load_scenario(o.scenario, base_parameters(o.params));
    if (o.sample_min) {
        sc.settings.sample_interval = *o.sample_min;
    }
    if (o.rtol) {
        sc.settings.rtol = *o.rtol;
    }
    if (o.atol) {
        sc.settings.atol = *o.atol;
    }
    if (o.fixed_step) {
        sc.settings.method     = Method::fixed_step;
        sc.settings.fixed_step = *o.fixed_step;
    }
    const auto traj = simulate(sc);
    if (o.out.empty()) {
        write_trajectory(traj, out, *format);
    }
    else {
        std::ofstream file(o.out, std::ios::binary);
        if (!file) {
            throw Error("cannot open '" + o.out + "' for writing");
        }
        write_trajectory(traj, file, *format);
    }
    return kExitOk;
}

int do_basal(const BasalOptions& o, std::ostream& out)
{
    const double gb = parse_glucose(o.gb, "--gb", 0, "gb");
    if (!(gb > 0.0)) {
        throw InvalidBasalError("--gb must be > 0");
    }
    const auto sol  = compute_basal_state(base_parameters(o.params), gb, o.ipf);
    const auto& b   = sol.model.basal;
    out << "# basal state, G_H = " << fmt10(b.G_H) << " mg/dl\n";
    for (std::size_t i = 0; i < kStateCount; ++i) {
        out << state_name(static_cast<St>(i)) << " = " << fmt10(sol.state.values[i]) << '\n';
    }
    out << "# closing rates\n"
        << "r_HGP_b = " << fmt10(b.r_HGP) << " mg/min\n"
        << "r_PIR_b = " << fmt10(b.r_PIR) << " mU/min\n"
        << "S_b = " << fmt10(b.S) << " U/min\n";
    return kExitOk;
}

int do_cases(std::ostream& out)
{
    for (const auto& path : bundled_case_paths()) {
        const auto sc = load_scenario(path);
        out << std::filesystem::path(path).stem().string() << '\t' << path;
        if (!sc.description.empty()) {
            out << '\t' << sc.description;
        }
        out << '\n';
    }
    return kExitOk;
}

} // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Type 2 diabetes metabolic simulator", "t2dsim"};
    app.require_subcommand(1);

    RunOptions run;
    auto* run_cmd = app.add_subcommand("run", "simulate a scenario file");
    run_cmd->add_option("--scenario", run.scenario, "scenario file")->required();
    run_cmd->add_option("--params", run.params, "parameter file");
    run_cmd->add_option("--out", run.out, "output file (default: stdout)");
    run_cmd->add_option("--format", run.format, "csv or jsonl");
    run_cmd->add_option("--sample-min", run.sample_min, "sample interval, min");
    run_cmd->add_option("--rtol", run.rtol, "relative tolerance");
    run_cmd->add_option("--atol", run.atol, "absolute tolerance");
    run_cmd->add_option("--fixed-step", run.fixed_step, "use fixed-step RK4 with this step, min");

    BasalOptions basal;
    auto* basal_cmd = app.add_subcommand("basal", "print the basal steady state");
    basal_cmd->add_option("--params", basal.params, "parameter file");
    basal_cmd->add_option("--gb", basal.gb, "basal heart glucose with unit, e.g. 10mmol or 180mg/dl");
    basal_cmd->add_option("--ipf", basal.ipf, "basal periphery interstitial insulin, mU/dl");

    auto* cases_cmd = app.add_subcommand("cases", "list bundled scenarios");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    }
    catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }

    try {
        if (run_cmd->parsed()) {
            return do_run(run, out);
        }
        if (basal_cmd->parsed()) {
            return do_basal(basal, out);
        }
        if (cases_cmd->parsed()) {
            return do_cases(out);
        }
    }
    catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    catch (const SolverError& e) {
        err << "solver failure: " << e.what() << '\n';
        return kExitSolverFail;
    }
    catch (const BasalConvergenceError& e) {
        err << "solver failure: " << e.what() << '\n';
        return kExitSolverFail;
    }
    catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitInvalid;
}

} // namespace t2d
