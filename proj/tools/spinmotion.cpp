// Copyright 2026 The spinmotion Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinmotion/commands.hpp"
#include "spinmotion/errors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitParse = 3;

void write_or_print(const std::string &out_path, const std::string &text)
{
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') {
            std::cout << '\n';
        }
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    os << text;
    if (!text.empty() && text.back() != '\n') {
        os << '\n';
    }
    if (!os) {
        throw spinmotion::ParseError("cannot write " + out_path);
    }
}

spinmotion::FitParam parse_bound(const std::string &spec)
{
    const auto eq = spec.find('=');
    const auto colon = spec.find(':', eq == std::string::npos ? 0 : eq);
    if (eq == std::string::npos || colon == std::string::npos) {
        throw CLI::ValidationError("--free expects name=lo:hi");
    }
    spinmotion::FitParam p;
    p.name = spec.substr(0, eq);
    p.lo = std::stod(spec.substr(eq + 1, colon - eq - 1));
    p.hi = std::stod(spec.substr(colon + 1));
    return p;
}

} // namespace

int main(int argc, char **argv)
{
    using namespace spinmotion;

    CLI::App app{"Trapped-ion spin-motion coupling toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string format = "csv";
    std::uint64_t seed = 1;
    int shots = 0;

    auto *params_cmd = app.add_subcommand("params", "Report the derived trap/drive quantities");
    params_cmd->add_option("--config", config_path, "key = value configuration file");
    params_cmd->add_option("--out", out_path, "write the report here instead of stdout");
    params_cmd->add_option("--format", format, "csv (text) or json")
        ->check(CLI::IsMember({"csv", "json"}));

    std::string figure;
    auto *repro_cmd = app.add_subcommand("reproduce", "Emit a bundled demonstration curve");
    repro_cmd->add_option("figure", figure, "fig3, fig4 or fig5")->required();
    repro_cmd->add_option("--out", out_path, "output directory (default .)");
    repro_cmd->add_option("--shots", shots, "also emit synthetic shot data");
    repro_cmd->add_option("--seed", seed, "shot-noise seed");

    auto *scan_cmd = app.add_subcommand("scan", "Run the scan described by a config file");
    scan_cmd->add_option("--config", config_path, "key = value configuration file")->required();
    scan_cmd->add_option("--out", out_path, "override the config output path");
    scan_cmd->add_option("--shots", shots, "override the config shot count");
    scan_cmd->add_option("--seed", seed, "override the config seed");

    std::string data_path;
    std::string model = "sideband_nbar";
    std::vector<std::string> bounds;
    auto *fit_cmd = app.add_subcommand("fit", "Fit a model to an x,p,sigma CSV file");
    fit_cmd->add_option("data", data_path, "data file (x in Hz)")->required();
    fit_cmd->add_option("--model", model, "sideband_nbar or two_ion");
    fit_cmd->add_option("--config", config_path, "model template configuration");
    fit_cmd->add_option("--free", bounds, "free parameter bounds, name=lo:hi (repeatable)");
    fit_cmd->add_option("--out", out_path, "write the JSON report here");
    fit_cmd->add_option("--seed", seed, "seed recorded in the report");

    int drives = 50;
    double integrator_tol = 1e-4;
    double laguerre_tol = 1e-6;
    int dim_divisor = 1;
    auto *oracle_cmd =
        app.add_subcommand("oracle-check", "Run the closed-form/integrator equivalence suites");
    oracle_cmd->add_option("--drives", drives, "number of random drives");
    oracle_cmd->add_option("--integrator-tol", integrator_tol, "closed-form agreement tolerance");
    oracle_cmd->add_option("--laguerre-tol", laguerre_tol, "thermal identity tolerance");
    oracle_cmd->add_option("--dim-divisor", dim_divisor,
                           "shrink truncations (exercises the failure path)");
    oracle_cmd->add_option("--out", out_path, "write the JSON report here");
    oracle_cmd->add_option("--seed", seed, "drive-sampling seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (params_cmd->parsed()) {
            RunConfig cfg;
            if (!config_path.empty()) {
                cfg = load_run_config(config_path);
            } else {
                // Bundled demonstration preset.
                cfg.trap = TrapEnvironment{units::hz_to_angular(268e3), 23.3, 0.0};
                cfg.drive.rabi = units::hz_to_angular(40e3);
                cfg.splitting = units::hz_to_angular(2.71e6);
            }
            write_or_print(out_path, params_report(cfg, format == "json"));
        } else if (repro_cmd->parsed()) {
            for (const auto &path : run_reproduce(figure, out_path, shots, seed)) {
                std::cout << "wrote " << path << "\n";
            }
        } else if (scan_cmd->parsed()) {
            RunConfig cfg = load_run_config(config_path);
            if (!out_path.empty()) {
                cfg.out_path = out_path;
            }
            if (scan_cmd->count("--shots") > 0) {
                cfg.shots = shots;
            }
            if (scan_cmd->count("--seed") > 0) {
                cfg.seed = seed;
            }
            for (const auto &path : run_scan(cfg)) {
                std::cout << "wrote " << path << "\n";
            }
        } else if (fit_cmd->parsed()) {
            FitRequest request;
            request.data_path = data_path;
            request.model = model;
            request.seed = seed;
            if (!config_path.empty()) {
                request.cfg = load_run_config(config_path);
            }
            for (const auto &b : bounds) {
                request.overrides.push_back(parse_bound(b));
            }
            write_or_print(out_path, run_fit_command(request));
        } else if (oracle_cmd->parsed()) {
            OracleProfile profile;
            profile.n_drives = drives;
            profile.integrator_tol = integrator_tol;
            profile.laguerre_tol = laguerre_tol;
            profile.dim_divisor = dim_divisor;
            if (oracle_cmd->count("--seed") > 0) {
                profile.seed = seed;
            }
            const OracleReport report = run_oracle_suite(profile);
            write_or_print(out_path, report.to_json());
            if (!report.pass) {
                for (const auto &c : report.checks) {
                    if (!c.pass) {
                        std::cerr << "FAILED: " << c.name << " max deviation " << c.max_deviation
                                  << " > " << c.tolerance << "\n";
                    }
                }
                return kExitNumeric;
            }
        }
    } catch (const ParseError &e) {
        std::cerr << "parse error";
        if (e.line > 0) {
            std::cerr << " (line " << e.line << ")";
        }
        std::cerr << ": " << e.what() << "\n";
        return kExitParse;
    } catch (const TruncationError &e) {
        std::cerr << "truncation error: " << e.what() << " (suggested dim " << e.suggested_dim
                  << ")\n";
        return kExitNumeric;
    } catch (const IntegrationError &e) {
        std::cerr << "integration error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitOk;
}
