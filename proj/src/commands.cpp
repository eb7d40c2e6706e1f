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

#include "spinmotion/commands.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "spinmotion/constants.hpp"
#include "spinmotion/csv.hpp"
#include "spinmotion/dynamics.hpp"
#include "spinmotion/errors.hpp"
#include "spinmotion/spectroscopy.hpp"

namespace spinmotion {

using constants::two_pi;

namespace {

std::vector<double> linspace(double lo, double hi, int n)
{
    std::vector<double> xs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        xs[static_cast<size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    }
    return xs;
}

std::string with_suffix(const std::string &path, const std::string &suffix)
{
    const auto dot = path.rfind('.');
    const auto slash = path.find_last_of("/\\");
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
        return path + suffix;
    }
    return path.substr(0, dot) + suffix + path.substr(dot);
}

ScanResult x_to_hz(const ScanResult &scan)
{
    ScanResult out = scan;
    for (auto &x : out.x) {
        x = units::angular_to_hz(x);
    }
    return out;
}

// Demonstration presets bundled with the tool.
struct TwoIonPreset {
    double splitting = two_pi * 2.71e6; // rad/s
    double rabi = two_pi * 40e3;
    double span = 2e6;  // Hz, half-width of the grid around the midpoint
    double step = 5e3;  // Hz; resonances land on grid points
};

struct SidebandPreset {
    double rabi = two_pi * 46e3;
    double nu_z = two_pi * 268e3;
    double pulse = 40e-6;
    double nbar = 290.0;
    double eta_eff = 0.013;
    double span = 350e3; // Hz
    double step = 2e3;   // Hz; carrier and sidebands land on grid points
};

struct ForceScanPreset {
    double rabi = two_pi * 35e3;
    double tau = 180e-6;
    double nbar = 110.0;
    double eta_eff = 0.013;
    // Grid commensurate with 1/tau so the closure zeros land on points:
    // 4.5 loop spacings each side, 20 points per spacing.
    int zeros_each_side = 4;
    int points_per_zero = 20;
    double extra_half_zeros = 0.5;
};

ScanResult two_ion_preset_curve()
{
    const TwoIonPreset p;
    const int half = static_cast<int>(std::lround(p.span / p.step));
    std::vector<double> grid;
    grid.reserve(static_cast<size_t>(2 * half + 1));
    for (int k = -half; k <= half; ++k) {
        grid.push_back(units::hz_to_angular(k * p.step));
    }
    const double t_pi = constants::pi / p.rabi;
    return two_ion_spectrum(-0.5 * p.splitting, 0.5 * p.splitting, p.rabi, t_pi, grid);
}

ScanResult sideband_preset_curve()
{
    const SidebandPreset p;
    const int half = static_cast<int>(std::lround(p.span / p.step));
    std::vector<double> grid;
    grid.reserve(static_cast<size_t>(2 * half + 1));
    for (int k = -half; k <= half; ++k) {
        grid.push_back(units::hz_to_angular(k * p.step));
    }
    LineshapeModel model;
    model.carrier_freq = 0.0;
    model.rabi = p.rabi;
    model.nu_z = p.nu_z;
    model.eta_eff = p.eta_eff;
    model.nbar = p.nbar;
    model.pulse_time = p.pulse;
    return sideband_spectrum(model, grid);
}

ScanResult force_preset_curve()
{
    const ForceScanPreset p;
    const double zero_spacing = two_pi / p.tau;
    const double step = zero_spacing / p.points_per_zero;
    const int half =
        static_cast<int>(std::lround((p.zeros_each_side + p.extra_half_zeros) * p.points_per_zero));
    std::vector<double> grid;
    grid.reserve(static_cast<size_t>(2 * half + 1));
    for (int k = -half; k <= half; ++k) {
        grid.push_back(k * step);
    }
    const DriveConfig drive{p.rabi, 0.0, p.tau, 0.0};
    return detuning_scan(drive, p.eta_eff, p.nbar, grid);
}

} // namespace

std::string params_report(const RunConfig &cfg, bool json)
{
    const DerivedQuantities q =
        derive_quantities(cfg.species, cfg.trap, cfg.wavelength, cfg.counterpropagating);
    const double splitting_pred =
        splitting_from_gradient(cfg.species, cfg.trap.gradient, q.ion_separation);
    const double gradient_round_trip =
        cfg.splitting != 0.0
            ? gradient_from_splitting(cfg.species, cfg.splitting, q.ion_separation)
            : cfg.trap.gradient;
    const double crosstalk =
        cfg.splitting != 0.0 ? crosstalk_bound(cfg.drive.rabi, cfg.splitting) : 0.0;

    if (json) {
        nlohmann::json j;
        j["species"] = cfg.species.label;
        j["z0_m"] = q.z0;
        j["eta_eff"] = q.eta_eff;
        if (q.eta_laser) {
            j["eta_laser"] = *q.eta_laser;
        }
        j["ion_separation_m"] = q.ion_separation;
        j["predicted_splitting_rad_s"] = splitting_pred;
        j["gradient_from_splitting_t_per_m"] = gradient_round_trip;
        j["crosstalk_bound"] = crosstalk;
        return j.dump(2);
    }

    std::ostringstream os;
    os << "species:                    " << cfg.species.label << "\n";
    os << "z0:                         " << format_sig17(units::m_to_um(q.z0)) << " um\n";
    os << "eta_eff:                    " << format_sig17(q.eta_eff) << "\n";
    if (q.eta_laser) {
        os << "eta_laser:                  " << format_sig17(*q.eta_laser) << "\n";
    }
    os << "two-ion separation:         " << format_sig17(units::m_to_um(q.ion_separation))
       << " um\n";
    os << "predicted splitting:        " << format_sig17(units::angular_to_hz(splitting_pred))
       << " Hz\n";
    if (cfg.splitting != 0.0) {
        os << "gradient from splitting:    " << format_sig17(gradient_round_trip) << " T/m\n";
        os << "crosstalk bound:            " << format_sig17(crosstalk) << "\n";
    }
    return os.str();
}

std::vector<std::string> run_reproduce(const std::string &figure, const std::string &out_dir,
                                       int shots, std::uint64_t seed)
{
    const std::string dir = out_dir.empty() ? "." : out_dir;
    std::vector<std::string> written;

    ScanResult curve;
    std::string theory_path;
    bool detuning_schema = false;
    if (figure == "fig3") {
        curve = two_ion_preset_curve();
        theory_path = dir + "/fig3_theory.csv";
    } else if (figure == "fig4") {
        curve = sideband_preset_curve();
        theory_path = dir + "/fig4_theory.csv";
    } else if (figure == "fig5") {
        curve = force_preset_curve();
        theory_path = dir + "/fig5_theory.csv";
        detuning_schema = true;
    } else {
        throw std::domain_error("unknown figure key '" + figure +
                                "' (expected fig3, fig4 or fig5)");
    }

    if (detuning_schema) {
        write_detuning_csv(theory_path, curve);
    } else {
        write_scan_csv(theory_path, x_to_hz(curve));
    }
    written.push_back(theory_path);

    if (shots > 0) {
        const ScanResult data = simulate_shots(curve, shots, seed);
        const std::string data_path = dir + "/" + figure + "_data.csv";
        write_scan_csv(data_path, x_to_hz(data));
        written.push_back(data_path);
    }
    return written;
}

std::vector<std::string> run_scan(const RunConfig &cfg)
{
    if (cfg.scan_points < 2) {
        throw std::domain_error("scan_points must be at least 2");
    }
    if (!(cfg.scan_min < cfg.scan_max)) {
        throw std::domain_error("scan bounds must satisfy min < max");
    }
    if (cfg.out_path.empty()) {
        throw std::domain_error("scan needs an output path");
    }

    ScanResult curve;
    bool detuning_schema = false;
    if (cfg.kind == ScanKind::detuning) {
        curve = detuning_scan(cfg.drive, cfg.eta_eff(), cfg.nbar,
                              linspace(cfg.scan_min, cfg.scan_max, cfg.scan_points));
        detuning_schema = true;
    } else if (cfg.kind == ScanKind::frequency) {
        const std::vector<double> grid = linspace(cfg.scan_min, cfg.scan_max, cfg.scan_points);
        if (cfg.model == "two_ion") {
            if (cfg.splitting == 0.0) {
                throw std::domain_error("two_ion scans need splitting_hz");
            }
            curve = two_ion_spectrum(-0.5 * cfg.splitting, 0.5 * cfg.splitting, cfg.drive.rabi,
                                     cfg.pulse_time, grid, cfg.independent_excitation);
        } else {
            LineshapeModel model;
            model.carrier_freq = 0.0;
            model.rabi = cfg.drive.rabi;
            model.nu_z = cfg.trap.nu_z;
            model.eta_eff = cfg.eta_eff();
            model.nbar = cfg.nbar;
            model.pulse_time = cfg.pulse_time;
            model.carrier_debye_waller = cfg.carrier_debye_waller;
            curve = sideband_spectrum(model, grid);
        }
    } else {
        const std::vector<double> times = linspace(cfg.scan_min, cfg.scan_max, cfg.scan_points);
        curve.x = times;
        curve.sigma.assign(times.size(), 0.0);
        for (const double t : times) {
            curve.p.push_back(p_up_thermal(cfg.drive, cfg.eta_eff(), t, cfg.nbar));
        }
        std::ostringstream meta;
        meta << "time-scan nbar=" << cfg.nbar;
        curve.meta = meta.str();
        curve.validate();
    }

    std::vector<std::string> written;
    if (detuning_schema) {
        write_detuning_csv(cfg.out_path, curve);
    } else if (cfg.kind == ScanKind::frequency) {
        write_scan_csv(cfg.out_path, x_to_hz(curve));
    } else {
        write_scan_csv(cfg.out_path, curve); // time axis stays in seconds
    }
    written.push_back(cfg.out_path);

    if (cfg.shots > 0) {
        const ScanResult data = simulate_shots(curve, cfg.shots, cfg.seed);
        const std::string data_path = with_suffix(cfg.out_path, "_data");
        if (cfg.kind == ScanKind::frequency || cfg.kind == ScanKind::detuning) {
            write_scan_csv(data_path, x_to_hz(data));
        } else {
            write_scan_csv(data_path, data);
        }
        written.push_back(data_path);
    }

    if (cfg.kind == ScanKind::time && !cfg.trajectory_out.empty()) {
        write_trajectory_csv(cfg.trajectory_out,
                             trajectory(cfg.drive, cfg.eta_eff(), cfg.scan_points));
        written.push_back(cfg.trajectory_out);
    }
    return written;
}

std::string run_fit_command(const FitRequest &request)
{
    const ScanResult data = read_scan_csv(request.data_path);
    std::vector<double> grid(data.x.size());
    for (size_t i = 0; i < data.x.size(); ++i) {
        grid[i] = units::hz_to_angular(data.x[i]);
    }

    // overrides come in CLI units: Hz for frequency-like names, plain otherwise
    auto bound_or = [&request](const std::string &name, double lo, double hi) {
        const bool freq_like = name == "f1" || name == "f2" || name == "rabi";
        for (const auto &p : request.overrides) {
            if (p.name == name) {
                return freq_like
                           ? FitParam{name, units::hz_to_angular(p.lo),
                                      units::hz_to_angular(p.hi)}
                           : FitParam{name, p.lo, p.hi};
            }
        }
        return FitParam{name, lo, hi};
    };

    FitResult result;
    std::vector<FitParam> free_params;
    if (request.model == "sideband_nbar") {
        if (!request.cfg) {
            throw std::domain_error("sideband_nbar fits need --config for the model template");
        }
        const RunConfig &cfg = *request.cfg;
        LineshapeModel base;
        base.carrier_freq = 0.0;
        base.rabi = cfg.drive.rabi;
        base.nu_z = cfg.trap.nu_z;
        base.eta_eff = cfg.eta_eff();
        base.nbar = 1.0; // placeholder; the free parameter drives it
        base.pulse_time = cfg.pulse_time;
        free_params = {bound_or("nbar", 20.0, 1000.0)};
        const CurveFn model = make_nbar_spectrum_model(base, grid, free_params[0].hi);
        result = fit_least_squares(model, free_params, data);
    } else if (request.model == "two_ion") {
        const double pulse = request.cfg ? request.cfg->pulse_time : 0.0;
        if (pulse <= 0.0) {
            throw std::domain_error("two_ion fits need pulse_us in the config");
        }
        ScanResult angular = data;
        angular.x = grid;
        const std::vector<FitParam> defaults = two_ion_default_bounds(angular);
        free_params = {bound_or("f1", defaults[0].lo, defaults[0].hi),
                       bound_or("f2", defaults[1].lo, defaults[1].hi),
                       bound_or("rabi", defaults[2].lo, defaults[2].hi)};
        const CurveFn model = make_two_ion_model(pulse, grid);
        result = fit_least_squares(model, free_params, data);
    } else {
        throw std::domain_error("unknown fit model '" + request.model +
                                "' (expected sideband_nbar or two_ion)");
    }

    nlohmann::json j;
    j["model"] = request.model;
    j["data"] = request.data_path;
    nlohmann::json params;
    for (const auto &[name, value] : result.params) {
        // frequency-like parameters are reported in Hz at the CLI boundary
        if (name == "f1" || name == "f2" || name == "rabi") {
            params[name + "_hz"] = units::angular_to_hz(value);
        } else {
            params[name] = value;
        }
    }
    if (result.params.count("f1") && result.params.count("f2")) {
        params["splitting_hz"] =
            units::angular_to_hz(result.params.at("f2") - result.params.at("f1"));
    }
    j["params"] = params;
    j["residual"] = result.residual;
    j["converged"] = result.converged;
    j["n_eval"] = result.n_eval;
    j["seed"] = request.seed;
    return j.dump(2);
}

} // namespace spinmotion
