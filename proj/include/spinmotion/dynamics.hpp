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

#pragma once

#include <span>
#include <vector>

#include "spinmotion/fock.hpp"
#include "spinmotion/scan.hpp"

namespace spinmotion {

/// Symmetric two-tone drive: carrier Rabi frequency, common sideband
/// detuning, pulse duration and the aggregate field phase that orients the
/// spin-flip axis. All angular.
struct DriveConfig {
    double rabi = 0.0;      // rad/s
    double detuning = 0.0;  // rad/s, zero allowed
    double duration = 0.0;  // s
    double phase_sum = 0.0; // rad

    void validate() const;
};

struct TrajectoryPoint {
    double t = 0.0;
    cplx alpha;
};

/// Phase-space displacement of the +1 spin branch,
/// alpha(t) = alpha0 (1 - e^{-i delta t}) with alpha0 = eta_eff rabi / (2 delta),
/// evaluated through the removable delta -> 0 limit (-> i eta rabi t / 2).
cplx alpha_of_t(const DriveConfig &drive, double eta_eff, double t);

/// |alpha(t)| without forming the complex value; shares the delta -> 0 handling.
double alpha_abs(const DriveConfig &drive, double eta_eff, double t);

/// Spin-up probability from the ground-state closed form,
/// 1/2 - 1/2 exp(-2 |alpha(t)|^2).
double p_up_ground(const DriveConfig &drive, double eta_eff, double t);

/// Thermal closed form, 1/2 - 1/2 exp(-2 (2 nbar + 1) |alpha(t)|^2).
double p_up_thermal(const DriveConfig &drive, double eta_eff, double t, double nbar);

/// Spin-up probability for an initial Fock level n,
/// 1/2 - 1/2 e^{-2|alpha|^2} L_n(4 |alpha|^2).
double p_up_fock(const DriveConfig &drive, double eta_eff, double t, int n);

/// Max over t in [0, duration] of the branch separation 2 |alpha(t)|;
/// the delta -> 0 limit evaluates to eta_eff * rabi * duration.
double max_branch_distance(const DriveConfig &drive, double eta_eff);

/// alpha(t) sampled on n_points uniform times across [0, duration].
std::vector<TrajectoryPoint> trajectory(const DriveConfig &drive, double eta_eff, int n_points);

struct IntegratorOptions {
    double agree_tol = 1e-8;  // max amplitude difference between refinements
    int max_halvings = 6;
    double norm_tol = 1e-9;
    double leak_tol = kLeakageBudget;
};

/// Brute-force fixed-step RK4 integration of the two-tone interaction-picture
/// Hamiltonian over [0, duration]. The step starts at
/// min(2pi/|delta|, 2pi/(eta rabi))/200 and is halved until two successive
/// refinements agree to agree_tol in every amplitude. Throws IntegrationError
/// on non-convergence and TruncationError when population reaches the top of
/// the Fock window at any step.
SpinMotionState evolve_numeric(const DriveConfig &drive, double eta_eff,
                               const SpinMotionState &initial,
                               const IntegratorOptions &opts = {});

/// Closed-form propagator: D(alpha(t)) on the +1 branch of the spin-flip
/// axis, D(-alpha(t)) on the -1 branch.
SpinMotionState apply_ms_unitary(const DriveConfig &drive, double eta_eff,
                                 const SpinMotionState &initial, double t);

struct CatMetrics {
    double fidelity = 0.0;     // numeric state vs two-branch construction
    double entropy_bits = 0.0; // spin reduced-state entropy of the numeric state
};

/// Evolves |0> (x) |n=0> numerically to time t and scores it against the
/// two-branch coherent construction. Entropy runs from 0 to 1 bit as the
/// branch overlap e^{-2|alpha|^2} falls.
CatMetrics cat_state_fidelity(const DriveConfig &drive, double eta_eff, double t,
                              const IntegratorOptions &opts = {});

/// Spin entropy (bits) of an arbitrary pure state, from the 2x2 reduced
/// spin density matrix.
double spin_entropy_bits(const SpinMotionState &state);

/// Thermal closed form evaluated on a detuning grid at fixed duration.
/// Grid must be non-empty and strictly increasing.
ScanResult detuning_scan(const DriveConfig &drive_template, double eta_eff, double nbar,
                         std::span<const double> delta_grid);

} // namespace spinmotion
