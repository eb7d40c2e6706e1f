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

#include "spinmotion/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <json.hpp>

#include "spinmotion/constants.hpp"
#include "spinmotion/dynamics.hpp"
#include "spinmotion/fock.hpp"

namespace spinmotion {

using constants::two_pi;

namespace {

double uniform(std::mt19937_64 &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

int shrink(int dim, int divisor) { return std::max(8, dim / std::max(1, divisor)); }

// Closed-form/integrator comparison over random drives, initial Fock 0..2.
OracleCheck check_integrator(const OracleProfile &profile)
{
    OracleCheck check{"integrator_vs_closed_form", 0.0, profile.integrator_tol, false};
    std::mt19937_64 rng(profile.seed);
    const double eta = 0.013;
    for (int k = 0; k < profile.n_drives; ++k) {
        const double delta = (uniform(rng) < 0.5 ? -1.0 : 1.0) * two_pi *
                             (2e3 + 18e3 * uniform(rng));
        const double alpha0 = 0.05 + 0.45 * uniform(rng);
        const double rabi = 2.0 * alpha0 * std::abs(delta) / eta;
        const double tau = (0.3 + 1.7 * uniform(rng)) * two_pi / std::abs(delta);
        const int n_init = k % 3;
        const DriveConfig drive{rabi, delta, tau, 0.0};

        const double a_end = alpha_abs(drive, eta, tau);
        const int dim = shrink(required_dim(2.0 * alpha0 + a_end, n_init), profile.dim_divisor);
        const SpinMotionState initial =
            SpinMotionState::product({1.0, 0.0}, FockVector::fock(n_init, dim));
        const SpinMotionState evolved = evolve_numeric(drive, eta, initial);
        const double p_numeric = evolved.population_up();
        const double p_analytic = p_up_fock(drive, eta, tau, n_init);
        check.max_deviation = std::max(check.max_deviation, std::abs(p_numeric - p_analytic));
    }
    check.pass = check.max_deviation <= check.tolerance;
    return check;
}

// Thermal level-sum of the displaced-Fock closed form against the
// thermal closed form, for nbar in {0, 1, 5}.
OracleCheck check_laguerre_identity(const OracleProfile &profile)
{
    OracleCheck check{"thermal_laguerre_identity", 0.0, profile.laguerre_tol, false};
    const double nbars[] = {0.0, 1.0, 5.0};
    const double alphas[] = {0.05, 0.1, 0.2, 0.3, 0.4, 0.5};
    for (const double nbar : nbars) {
        const ThermalEnsemble ensemble =
            nbar == 0.0 ? ThermalEnsemble(0.0, 1) : ThermalEnsemble::for_tail(nbar, 1e-13);
        for (const double a : alphas) {
            const double x = 4.0 * a * a;
            double sum = 0.0;
            for (int n = 0; n < ensemble.dim(); ++n) {
                sum += ensemble.weight(n) * laguerre(n, x);
            }
            const double lhs = std::exp(-2.0 * a * a) * sum;
            const double rhs = std::exp(-2.0 * (2.0 * nbar + 1.0) * a * a);
            check.max_deviation = std::max(check.max_deviation, std::abs(lhs - rhs) / rhs);
        }
    }
    check.pass = check.max_deviation <= check.tolerance;
    return check;
}

// Depolarization zeros at delta_j = 2 pi j / tau, closed form and integrator.
OracleCheck check_zeros(const OracleProfile &profile)
{
    OracleCheck check{"loop_zeros", 0.0, profile.integrator_tol, false};
    const double eta = 0.013;
    const double tau = 180e-6;
    const double rabi = two_pi * 35e3;
    for (int j = 1; j <= 5; ++j) {
        const DriveConfig drive{rabi, two_pi * j / tau, tau, 0.0};
        check.max_deviation = std::max(check.max_deviation, p_up_ground(drive, eta, tau));

        const double alpha0 = eta * rabi / (2.0 * drive.detuning);
        const int dim = shrink(required_dim(2.0 * alpha0, 0), profile.dim_divisor);
        const SpinMotionState initial =
            SpinMotionState::product({1.0, 0.0}, FockVector::vacuum(dim));
        const SpinMotionState evolved = evolve_numeric(drive, eta, initial);
        check.max_deviation = std::max(check.max_deviation, evolved.population_up());
    }
    check.pass = check.max_deviation <= check.tolerance;
    return check;
}

// Norm conservation of displace and the composition law
// D(a) D(b) = phase * D(a+b).
OracleCheck check_displacement(const OracleProfile &profile)
{
    OracleCheck check{"displacement_unitarity", 0.0, profile.unitarity_tol, false};
    std::mt19937_64 rng(profile.seed + 1);
    const int dim = shrink(128, profile.dim_divisor);
    for (int k = 0; k < 60; ++k) {
        FockVector v(dim);
        for (int n = 0; n < dim; ++n) {
            const double envelope = std::exp(-0.25 * n);
            v[n] = cplx(envelope * (uniform(rng) - 0.5), envelope * (uniform(rng) - 0.5));
        }
        v.normalize();
        const cplx a(2.0 * uniform(rng) - 1.0, 2.0 * uniform(rng) - 1.0);
        const cplx b(0.5 * (2.0 * uniform(rng) - 1.0), 0.5 * (2.0 * uniform(rng) - 1.0));

        const FockVector da = displace(v, a);
        check.max_deviation = std::max(check.max_deviation, std::abs(da.norm() - 1.0));

        const FockVector lhs = displace(da, b);
        const FockVector rhs = displace(v, a + b);
        check.max_deviation = std::max(check.max_deviation, 1.0 - fidelity(lhs, rhs));
    }
    check.pass = check.max_deviation <= check.tolerance;
    return check;
}

OracleCheck check_loop_closure(const OracleProfile &profile)
{
    OracleCheck check{"trajectory_loop_closure", 0.0, profile.loop_tol, false};
    const double eta = 0.013;
    const double deltas_hz[] = {2e3, 5e3, 10e3, 25e3};
    for (const double dhz : deltas_hz) {
        const double delta = two_pi * dhz;
        const DriveConfig drive{two_pi * 35e3, delta, two_pi / delta, 0.0};
        const double alpha0 = eta * drive.rabi / (2.0 * delta);
        const double residue = std::abs(alpha_of_t(drive, eta, two_pi / delta)) / alpha0;
        check.max_deviation = std::max(check.max_deviation, residue);
    }
    check.pass = check.max_deviation <= check.tolerance;
    return check;
}

OracleCheck check_small_detuning_limit(const OracleProfile &profile)
{
    OracleCheck check{"small_detuning_continuity", 0.0, profile.continuity_tol, false};
    const double eta = 0.013;
    const double tau = 180e-6;
    const double rabi = two_pi * 35e3;
    const DriveConfig at_zero{rabi, 0.0, tau, 0.0};
    const DriveConfig near_zero{rabi, 1e-6 * two_pi / tau, tau, 0.0};
    check.max_deviation =
        std::abs(p_up_ground(near_zero, eta, tau) - p_up_ground(at_zero, eta, tau));
    check.pass = check.max_deviation <= check.tolerance;
    return check;
}

} // namespace

std::string OracleReport::to_json() const
{
    nlohmann::json j;
    j["pass"] = pass;
    j["checks"] = nlohmann::json::array();
    for (const auto &c : checks) {
        j["checks"].push_back({{"name", c.name},
                               {"max_deviation", c.max_deviation},
                               {"tolerance", c.tolerance},
                               {"pass", c.pass}});
    }
    return j.dump(2);
}

OracleReport run_oracle_suite(const OracleProfile &profile)
{
    OracleReport report;
    report.checks.push_back(check_integrator(profile));
    report.checks.push_back(check_laguerre_identity(profile));
    report.checks.push_back(check_zeros(profile));
    report.checks.push_back(check_displacement(profile));
    report.checks.push_back(check_loop_closure(profile));
    report.checks.push_back(check_small_detuning_limit(profile));
    report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const OracleCheck &c) { return c.pass; });
    return report;
}

} // namespace spinmotion
