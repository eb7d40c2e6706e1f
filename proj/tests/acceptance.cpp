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

// End-to-end acceptance suite. Each case evaluates one release criterion at
// its pinned tolerance and prints a single [PASS]/[FAIL] line.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <string>
#include <vector>

#include <doctest.h>

#include "spinmotion/commands.hpp"
#include "spinmotion/constants.hpp"
#include "spinmotion/csv.hpp"
#include "spinmotion/dynamics.hpp"
#include "spinmotion/fit.hpp"
#include "spinmotion/fock.hpp"
#include "spinmotion/oracle.hpp"
#include "spinmotion/params.hpp"
#include "spinmotion/spectroscopy.hpp"

using namespace spinmotion;
using constants::pi;
using constants::two_pi;

namespace {

const IonSpecies kYb = IonSpecies::yb171();
const double kNuZ = two_pi * 268e3;

void report(int number, const char *name, bool pass, const std::string &detail)
{
    std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", number, name,
                detail.c_str());
    std::fflush(stdout);
    CHECK_MESSAGE(pass, "criterion ", number, ": ", name, " -- ", detail);
}

std::string num(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

std::vector<double> preset_grid(double half_span, double step)
{
    std::vector<double> grid;
    const int half = static_cast<int>(std::lround(half_span / step));
    for (int k = -half; k <= half; ++k) {
        grid.push_back(k * step);
    }
    return grid;
}

LineshapeModel sideband_preset()
{
    LineshapeModel m;
    m.carrier_freq = 0.0;
    m.rabi = two_pi * 46e3;
    m.nu_z = kNuZ;
    m.eta_eff = 0.013;
    m.nbar = 290.0;
    m.pulse_time = 40e-6;
    return m;
}

} // namespace

TEST_CASE("criterion 1: gradient-induced coupling strength")
{
    const double eta = effective_lamb_dicke(kYb, TrapEnvironment{kNuZ, 23.3, 0.0});
    const bool pass = std::abs(eta - 0.013) <= 0.0005;
    report(1, "eta_eff at 23.3 T/m and 268 kHz", pass,
           "eta_eff = " + num(eta) + ", target 0.013 +- 0.0005");
}

TEST_CASE("criterion 2: separation and gradient pipeline")
{
    const double d = two_ion_separation(kYb, kNuZ);
    const double grad = gradient_from_splitting(kYb, two_pi * 2.71e6, d);
    const bool pass_d = std::abs(d - 8.3e-6) <= 0.05e-6;
    const bool pass_g = std::abs(grad - 23.3) <= 0.6;
    report(2, "two-ion separation and extracted gradient", pass_d && pass_g,
           "d = " + num(d * 1e6) + " um (target 8.3 +- 0.05), gradient = " + num(grad) +
               " T/m (target 23.3 +- 0.6)");
}

TEST_CASE("criterion 3: optical coupling comparison")
{
    const double eta = laser_lamb_dicke(kYb, TrapEnvironment{kNuZ, 23.3, 0.0}, 369.5e-9, true);
    const bool pass = std::abs(eta - 0.36) <= 0.01;
    report(3, "counterpropagating Raman Lamb-Dicke parameter", pass,
           "eta = " + num(eta) + ", target 0.36 +- 0.01");
}

TEST_CASE("criterion 4: addressing crosstalk bound")
{
    const double p = crosstalk_bound(two_pi * 40e3, two_pi * 2.71e6);
    const bool pass = std::abs(p - 2.2e-4) <= 0.1e-4;
    report(4, "off-resonant excitation bound", pass,
           "bound = " + num(p) + ", target 2.2e-4 +- 0.1e-4");
}

TEST_CASE("criterion 5: closed forms against the brute-force integrator")
{
    OracleProfile profile;
    profile.n_drives = 50;
    const OracleReport suite = run_oracle_suite(profile);
    double integrator_dev = -1.0;
    for (const auto &check : suite.checks) {
        if (check.name == "integrator_vs_closed_form") {
            integrator_dev = check.max_deviation;
        }
    }

    // explicit ground-state route on top of the Fock-level sweep
    const DriveConfig drive{two_pi * 35e3, two_pi * 3e3, 180e-6, 0.0};
    const SpinMotionState evolved = evolve_numeric(
        drive, 0.013, SpinMotionState::product({1.0, 0.0}, FockVector::vacuum(64)));
    const double ground_dev =
        std::abs(evolved.population_up() - p_up_ground(drive, 0.013, drive.duration));

    const bool pass = integrator_dev >= 0.0 && integrator_dev <= 1e-4 && ground_dev <= 1e-4;
    report(5, "50 random drives, Fock 0..2, tolerance 1e-4", pass,
           "max |P_numeric - P_analytic| = " + num(integrator_dev) +
               ", ground-state deviation = " + num(ground_dev));
}

TEST_CASE("criterion 6: thermal average identity")
{
    double max_rel = 0.0;
    for (const double nbar : {0.0, 1.0, 5.0}) {
        const ThermalEnsemble ensemble =
            nbar == 0.0 ? ThermalEnsemble(0.0, 1) : ThermalEnsemble::for_tail(nbar, 1e-13);
        for (double a = 0.05; a <= 0.5; a += 0.025) {
            double sum = 0.0;
            for (int n = 0; n < ensemble.dim(); ++n) {
                sum += ensemble.weight(n) * laguerre(n, 4.0 * a * a);
            }
            const double lhs = std::exp(-2.0 * a * a) * sum;
            const double rhs = std::exp(-2.0 * (2.0 * nbar + 1.0) * a * a);
            max_rel = std::max(max_rel, std::abs(lhs - rhs) / rhs);
        }
    }
    const bool pass = max_rel <= 1e-6;
    report(6, "level-sum equals the thermal closed form", pass,
           "max relative deviation = " + num(max_rel) + " for nbar in {0, 1, 5}, |alpha| <= 0.5");
}

TEST_CASE("criterion 7: detuning-scan reproduction")
{
    const DriveConfig drive{two_pi * 35e3, 0.0, 180e-6, 0.0};
    const double eta = 0.013;
    const double nbar = 110.0;

    double worst_zero = 0.0;
    for (int j = 1; j <= 4; ++j) {
        DriveConfig dj = drive;
        dj.detuning = two_pi * j / drive.duration;
        worst_zero = std::max(worst_zero, p_up_thermal(dj, eta, drive.duration, nbar));
    }

    double worst_mid = 1.0;
    for (const double sign : {-1.0, 1.0}) {
        DriveConfig dm = drive;
        dm.detuning = sign * pi / drive.duration; // +-2.78 kHz, inside the 8 kHz window
        worst_mid = std::min(worst_mid, p_up_thermal(dm, eta, drive.duration, nbar));
    }

    const bool pass = worst_zero <= 1e-10 && worst_mid >= 0.45;
    report(7, "closure zeros and depolarization plateaus", pass,
           "max P at the loop detunings = " + num(worst_zero) +
               " (<= 1e-10), min midpoint P = " + num(worst_mid) + " (>= 0.45)");
}

TEST_CASE("criterion 8: sideband spectrum and occupation fit round trip")
{
    const LineshapeModel base = sideband_preset();
    const std::vector<double> grid = preset_grid(two_pi * 350e3, two_pi * 2e3);
    const ScanResult curve = sideband_spectrum(base, grid);

    // maxima at the carrier and both sidebands
    auto index_of = [&](double x) {
        size_t best = 0;
        for (size_t i = 0; i < grid.size(); ++i) {
            if (std::abs(grid[i] - x) < std::abs(grid[best] - x)) {
                best = i;
            }
        }
        return best;
    };
    bool maxima_ok = true;
    for (const double x : {-base.nu_z, 0.0, base.nu_z}) {
        const size_t i = index_of(x);
        maxima_ok = maxima_ok && curve.p[i] > curve.p[i - 1] && curve.p[i] > curve.p[i + 1];
    }

    // occupation fit: one pinned seed, then the spread over 100 seeds
    const CurveFn model = make_nbar_spectrum_model(base, grid, 800.0);
    const std::vector<FitParam> bounds = {{"nbar", 50.0, 800.0}};
    std::vector<double> recovered;
    recovered.reserve(100);
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const ScanResult data = simulate_shots(curve, 200, seed);
        recovered.push_back(fit_least_squares(model, bounds, data).params.at("nbar"));
    }
    const double pinned = recovered[0]; // seed 1
    const double mean =
        std::accumulate(recovered.begin(), recovered.end(), 0.0) / recovered.size();
    double var = 0.0;
    for (const double r : recovered) {
        var += (r - mean) * (r - mean);
    }
    const double stdev = std::sqrt(var / (recovered.size() - 1));

    const bool pass_pinned = std::abs(pinned - 290.0) <= 50.0;
    const bool pass_spread = stdev >= 25.0 && stdev <= 100.0;
    report(8, "three-peak spectrum and nbar recovery", maxima_ok && pass_pinned && pass_spread,
           "maxima at 0, +-268 kHz: " + std::string(maxima_ok ? "yes" : "no") +
               ", seed-1 nbar = " + num(pinned) + " (290 +- 50), 100-seed std = " + num(stdev) +
               " (in [25, 100]), mean = " + num(mean));
}

TEST_CASE("criterion 9: two-resonance fit and gradient round trip")
{
    const double splitting_in = two_pi * 2.71e6;
    const double rabi = two_pi * 40e3;
    const double t_pi = pi / rabi;
    const std::vector<double> grid = preset_grid(two_pi * 2e6, two_pi * 5e3);

    const ScanResult curve =
        two_ion_spectrum(-0.5 * splitting_in, 0.5 * splitting_in, rabi, t_pi, grid);
    const ScanResult data = simulate_shots(curve, 200, 7);
    const CurveFn model = make_two_ion_model(t_pi, grid);
    const FitResult fit = fit_least_squares(model, two_ion_default_bounds(data), data);
    const double splitting_out = fit.params.at("f2") - fit.params.at("f1");
    const double split_err = std::abs(splitting_out - splitting_in) / splitting_in;

    const double d = two_ion_separation(kYb, kNuZ);
    const double grad_in = gradient_from_splitting(kYb, splitting_in, d);
    const double grad_out = gradient_from_splitting(kYb, splitting_out, d);
    const double grad_err = std::abs(grad_out - grad_in) / grad_in;

    const bool pass = split_err < 0.01 && grad_err < 0.02;
    report(9, "splitting recovery through the gradient formula", pass,
           "splitting error = " + num(100.0 * split_err) + "% (< 1%), gradient " +
               num(grad_out) + " vs " + num(grad_in) + " T/m, error = " +
               num(100.0 * grad_err) + "% (< 2%)");
}

TEST_CASE("criterion 10: entangled two-branch structure")
{
    DriveConfig drive;
    drive.detuning = two_pi * 10e3;
    drive.rabi = two_pi * 230.769230769e3; // branch radius 0.15, far point 0.3
    drive.duration = two_pi / drive.detuning;

    double min_fidelity = 1.0;
    for (int k = 1; k <= 10; ++k) {
        const double t = drive.duration * k / 10.0;
        const CatMetrics m = cat_state_fidelity(drive, 0.013, t);
        min_fidelity = std::min(min_fidelity, m.fidelity);
    }
    const CatMetrics closed = cat_state_fidelity(drive, 0.013, drive.duration);

    const bool pass = min_fidelity >= 1.0 - 1e-4 && closed.entropy_bits < 1e-6;
    report(10, "two-branch fidelity and loop-closure entropy", pass,
           "min fidelity over 10 sample times = " + num(min_fidelity) +
               " (>= 1 - 1e-4), entropy after a full loop = " + num(closed.entropy_bits) +
               " bits (< 1e-6)");
}

TEST_CASE("criterion 11: bit-stable outputs")
{
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "spinmotion_acceptance";
    fs::remove_all(dir);
    const fs::path a = dir / "a", b = dir / "b";
    fs::create_directories(a);
    fs::create_directories(b);

    auto read_all = [](const fs::path &p) {
        std::ifstream is(p, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(is),
                           std::istreambuf_iterator<char>());
    };

    bool identical = true;
    for (const std::string fig : {"fig3", "fig4", "fig5"}) {
        run_reproduce(fig, a.string(), 200, 2026);
        run_reproduce(fig, b.string(), 200, 2026);
        for (const std::string suffix : {"_theory.csv", "_data.csv"}) {
            const std::string fa = read_all(a / (fig + suffix));
            identical = identical && !fa.empty() && fa == read_all(b / (fig + suffix));
        }
    }
    report(11, "identical bytes across repeated runs", identical,
           std::string("six files compared: ") + (identical ? "all equal" : "MISMATCH"));
}
