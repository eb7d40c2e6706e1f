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

#include "spinmotion/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "spinmotion/constants.hpp"
#include "spinmotion/errors.hpp"

namespace spinmotion {

using constants::two_pi;

namespace {

// sin(x)/x with the removable singularity expanded.
double sinc(double x)
{
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

int next_pow2(int n)
{
    int p = 1;
    while (p < n) {
        p *= 2;
    }
    return p;
}

} // namespace

void DriveConfig::validate() const
{
    if (!(rabi >= 0.0) || !std::isfinite(rabi)) {
        throw std::domain_error("carrier Rabi frequency must be non-negative and finite");
    }
    if (!(duration >= 0.0) || !std::isfinite(duration)) {
        throw std::domain_error("drive duration must be non-negative and finite");
    }
    if (!std::isfinite(detuning) || !std::isfinite(phase_sum)) {
        throw std::domain_error("detuning and phase must be finite");
    }
}

cplx alpha_of_t(const DriveConfig &drive, double eta_eff, double t)
{
    drive.validate();
    if (t < 0.0) {
        throw std::domain_error("time must be non-negative");
    }
    // alpha0 (1 - e^{-i delta t}) rewritten as
    // i (eta rabi t / 2) sinc(delta t / 2) e^{-i delta t / 2}: finite at delta = 0.
    const double half = 0.5 * drive.detuning * t;
    const double mag = 0.5 * eta_eff * drive.rabi * t * sinc(half);
    return mag * cplx(std::sin(half), std::cos(half)); // i e^{-i half}
}

double alpha_abs(const DriveConfig &drive, double eta_eff, double t)
{
    const double half = 0.5 * drive.detuning * t;
    return std::abs(0.5 * eta_eff * drive.rabi * t * sinc(half));
}

double p_up_ground(const DriveConfig &drive, double eta_eff, double t)
{
    drive.validate();
    if (t < 0.0) {
        throw std::domain_error("time must be non-negative");
    }
    const double a = alpha_abs(drive, eta_eff, t);
    return 0.5 - 0.5 * std::exp(-2.0 * a * a);
}

double p_up_thermal(const DriveConfig &drive, double eta_eff, double t, double nbar)
{
    if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
        throw std::domain_error("mean occupation must be non-negative and finite");
    }
    drive.validate();
    const double a = alpha_abs(drive, eta_eff, t);
    return 0.5 - 0.5 * std::exp(-2.0 * (2.0 * nbar + 1.0) * a * a);
}

double p_up_fock(const DriveConfig &drive, double eta_eff, double t, int n)
{
    if (n < 0) {
        throw std::domain_error("Fock level must be non-negative");
    }
    const double a = alpha_abs(drive, eta_eff, t);
    const double a2 = a * a;
    return 0.5 - 0.5 * std::exp(-2.0 * a2) * laguerre(n, 4.0 * a2);
}

double max_branch_distance(const DriveConfig &drive, double eta_eff)
{
    drive.validate();
    // 2 |alpha(t)| = eta rabi t sinc(delta t / 2), maximal at the half period
    // once the pulse is long enough to reach it.
    const double x = 0.5 * std::abs(drive.detuning) * drive.duration;
    if (x >= 0.5 * constants::pi) {
        return 2.0 * eta_eff * drive.rabi / std::abs(drive.detuning);
    }
    return eta_eff * drive.rabi * drive.duration * sinc(x);
}

std::vector<TrajectoryPoint> trajectory(const DriveConfig &drive, double eta_eff, int n_points)
{
    drive.validate();
    if (n_points < 2) {
        throw std::domain_error("trajectory needs at least two samples");
    }
    std::vector<TrajectoryPoint> out(static_cast<size_t>(n_points));
    for (int k = 0; k < n_points; ++k) {
        const double t = drive.duration * k / (n_points - 1);
        out[static_cast<size_t>(k)] = TrajectoryPoint{t, alpha_of_t(drive, eta_eff, t)};
    }
    return out;
}

namespace {

struct RunResult {
    std::vector<cplx> amp;
    double max_leak = 0.0;
    double norm_drift = 0.0;
};

// One fixed-step RK4 pass of
//   d psi/dt = i g sigma_phi (a^dag e^{-i delta t} + a e^{i delta t}) psi,
// the sign fixed so the +1 eigenbranch of the spin-flip axis displaces along
// +alpha(t).
RunResult run_fixed_steps(const DriveConfig &drive, double eta_eff,
                          const std::vector<cplx> &initial, int dim, long n_steps)
{
    const double g = 0.5 * eta_eff * drive.rabi;
    const double h = drive.duration / static_cast<double>(n_steps);
    const cplx ephi = std::exp(cplx(0.0, drive.phase_sum));

    std::vector<double> sq(static_cast<size_t>(dim + 1));
    for (int n = 0; n <= dim; ++n) {
        sq[static_cast<size_t>(n)] = std::sqrt(static_cast<double>(n));
    }

    const size_t len = initial.size();
    std::vector<cplx> psi = initial;
    std::vector<cplx> k1(len), k2(len), k3(len), k4(len), tmp(len);

    auto deriv = [&](double t, const std::vector<cplx> &in, std::vector<cplx> &out) {
        const cplx em = std::exp(cplx(0.0, -drive.detuning * t)); // rides with a^dag
        const cplx ep = std::conj(em);
        const cplx c0 = cplx(0.0, g) * std::conj(ephi); // onto spin 0 from spin 1
        const cplx c1 = cplx(0.0, g) * ephi;            // onto spin 1 from spin 0
        for (int n = 0; n < dim; ++n) {
            cplx m1 = 0.0, m0 = 0.0; // (M psi_spin)_n for spin 1 and spin 0
            if (n > 0) {
                m1 += em * sq[static_cast<size_t>(n)] * in[static_cast<size_t>(dim + n - 1)];
                m0 += em * sq[static_cast<size_t>(n)] * in[static_cast<size_t>(n - 1)];
            }
            if (n + 1 < dim) {
                m1 += ep * sq[static_cast<size_t>(n + 1)] * in[static_cast<size_t>(dim + n + 1)];
                m0 += ep * sq[static_cast<size_t>(n + 1)] * in[static_cast<size_t>(n + 1)];
            }
            out[static_cast<size_t>(n)] = c0 * m1;
            out[static_cast<size_t>(dim + n)] = c1 * m0;
        }
    };

    const int window = leak_window(dim);
    double max_leak = 0.0;
    auto leak_of = [&](const std::vector<cplx> &v) {
        double s = 0.0;
        for (int n = dim - window; n < dim; ++n) {
            s += std::norm(v[static_cast<size_t>(n)]) + std::norm(v[static_cast<size_t>(dim + n)]);
        }
        return s;
    };

    for (long step = 0; step < n_steps; ++step) {
        const double t = drive.duration * static_cast<double>(step) / static_cast<double>(n_steps);
        deriv(t, psi, k1);
        for (size_t i = 0; i < len; ++i) {
            tmp[i] = psi[i] + 0.5 * h * k1[i];
        }
        deriv(t + 0.5 * h, tmp, k2);
        for (size_t i = 0; i < len; ++i) {
            tmp[i] = psi[i] + 0.5 * h * k2[i];
        }
        deriv(t + 0.5 * h, tmp, k3);
        for (size_t i = 0; i < len; ++i) {
            tmp[i] = psi[i] + h * k3[i];
        }
        deriv(t + h, tmp, k4);
        for (size_t i = 0; i < len; ++i) {
            psi[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        max_leak = std::max(max_leak, leak_of(psi));
    }

    double norm2 = 0.0;
    for (const auto &c : psi) {
        norm2 += std::norm(c);
    }
    return RunResult{std::move(psi), max_leak, std::abs(std::sqrt(norm2) - 1.0)};
}

} // namespace

SpinMotionState evolve_numeric(const DriveConfig &drive, double eta_eff,
                               const SpinMotionState &initial, const IntegratorOptions &opts)
{
    drive.validate();
    if (std::abs(initial.norm() - 1.0) > 1e-9) {
        throw std::domain_error("initial state must be normalized");
    }
    const double coupling = eta_eff * drive.rabi;
    if (coupling == 0.0 || drive.duration == 0.0) {
        return initial;
    }

    double base = two_pi / coupling;
    if (drive.detuning != 0.0) {
        base = std::min(base, two_pi / std::abs(drive.detuning));
    }
    const double h0 = base / 200.0;
    const long steps0 = std::max<long>(1, static_cast<long>(std::ceil(drive.duration / h0)));

    const int dim = initial.dim();
    RunResult prev = run_fixed_steps(drive, eta_eff, initial.amplitudes(), dim, steps0);
    if (prev.max_leak >= opts.leak_tol) {
        throw TruncationError("integration leaks past the Fock truncation", next_pow2(2 * dim));
    }
    for (int halving = 1; halving <= opts.max_halvings; ++halving) {
        RunResult cur =
            run_fixed_steps(drive, eta_eff, initial.amplitudes(), dim, steps0 << halving);
        if (cur.max_leak >= opts.leak_tol) {
            throw TruncationError("integration leaks past the Fock truncation",
                                  next_pow2(2 * dim));
        }
        double max_diff = 0.0;
        for (size_t i = 0; i < cur.amp.size(); ++i) {
            max_diff = std::max(max_diff, std::abs(cur.amp[i] - prev.amp[i]));
        }
        if (max_diff <= opts.agree_tol && cur.norm_drift < opts.norm_tol) {
            SpinMotionState out(dim);
            out.amplitudes() = std::move(cur.amp);
            return out;
        }
        prev = std::move(cur);
    }
    throw IntegrationError("step halving did not converge to the requested tolerance");
}

SpinMotionState apply_ms_unitary(const DriveConfig &drive, double eta_eff,
                                 const SpinMotionState &initial, double t)
{
    const SpinBasis basis = ms_spin_basis(drive.phase_sum);
    const cplx a = alpha_of_t(drive, eta_eff, t);
    const FockVector right = displace(initial.spin_component(basis.right), a);
    const FockVector left = displace(initial.spin_component(basis.left), -a);
    SpinMotionState out(initial.dim());
    for (int s = 0; s < 2; ++s) {
        const cplx br = basis.right[static_cast<size_t>(s)];
        const cplx bl = basis.left[static_cast<size_t>(s)];
        for (int n = 0; n < initial.dim(); ++n) {
            out.at(s, n) = br * right[n] + bl * left[n];
        }
    }
    return out;
}

double spin_entropy_bits(const SpinMotionState &state)
{
    // 2x2 reduced spin density matrix.
    double r00 = 0.0, r11 = 0.0;
    cplx r01 = 0.0;
    for (int n = 0; n < state.dim(); ++n) {
        r00 += std::norm(state.at(0, n));
        r11 += std::norm(state.at(1, n));
        r01 += state.at(0, n) * std::conj(state.at(1, n));
    }
    const double tr = r00 + r11;
    const double disc = std::sqrt(std::max(0.0, (r00 - r11) * (r00 - r11) + 4.0 * std::norm(r01)));
    const double lp = 0.5 * (tr + disc);
    const double lm = 0.5 * (tr - disc);
    auto h = [](double x) { return x > 1e-300 ? -x * std::log2(x) : 0.0; };
    return h(lp) + h(lm);
}

CatMetrics cat_state_fidelity(const DriveConfig &drive, double eta_eff, double t,
                              const IntegratorOptions &opts)
{
    drive.validate();
    DriveConfig upto = drive;
    upto.duration = t;

    const double a_end = alpha_abs(drive, eta_eff, t);
    const double a_peak = 0.5 * max_branch_distance(upto, eta_eff);
    const int dim = required_dim(2.0 * a_peak + a_end, 0);

    const SpinMotionState initial = SpinMotionState::product({1.0, 0.0}, FockVector::vacuum(dim));
    const SpinMotionState evolved = evolve_numeric(upto, eta_eff, initial, opts);
    const SpinMotionState target = apply_ms_unitary(drive, eta_eff, initial, t);

    return CatMetrics{fidelity(evolved, target), spin_entropy_bits(evolved)};
}

ScanResult detuning_scan(const DriveConfig &drive_template, double eta_eff, double nbar,
                         std::span<const double> delta_grid)
{
    if (delta_grid.empty()) {
        throw std::domain_error("scan grid must be non-empty");
    }
    for (size_t i = 1; i < delta_grid.size(); ++i) {
        const bool up = delta_grid[i] > delta_grid[i - 1];
        const bool consistent = (delta_grid[1] > delta_grid[0]) == up;
        if (delta_grid[i] == delta_grid[i - 1] || !consistent) {
            throw std::domain_error("scan grid must be strictly monotone");
        }
    }
    ScanResult out;
    out.x.reserve(delta_grid.size());
    out.p.reserve(delta_grid.size());
    out.sigma.assign(delta_grid.size(), 0.0);
    for (const double delta : delta_grid) {
        DriveConfig d = drive_template;
        d.detuning = delta;
        out.x.push_back(delta);
        out.p.push_back(p_up_thermal(d, eta_eff, d.duration, nbar));
    }
    std::ostringstream meta;
    meta.precision(17);
    meta << "ms-detuning-scan nbar=" << nbar << " rabi=" << drive_template.rabi
         << " duration=" << drive_template.duration << " eta_eff=" << eta_eff;
    out.meta = meta.str();
    out.validate();
    return out;
}

} // namespace spinmotion
