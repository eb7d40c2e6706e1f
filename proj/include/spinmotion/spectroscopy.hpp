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

#include <cstdint>
#include <span>

#include "spinmotion/scan.hpp"

namespace spinmotion {

/// Carrier + first-sideband Rabi lineshape with thermal averaging.
/// Frequencies angular; `carrier_freq2` enables the two-resonance variant.
struct LineshapeModel {
    double carrier_freq = 0.0;  // rad/s (relative scale is caller's choice)
    double carrier_freq2 = 0.0; // second resonance when two_resonance is set
    bool two_resonance = false;
    double rabi = 0.0;          // rad/s
    double nu_z = 0.0;          // rad/s
    double eta_eff = 0.0;
    double nbar = 0.0;
    double pulse_time = 0.0;    // s
    bool include_sidebands = true;
    /// Scales the carrier Rabi frequency by exp(-eta^2 (2 nbar + 1) / 2).
    bool carrier_debye_waller = false;
    /// Two-ion observable as 1 - (1-P1)(1-P2) instead of the plain sum.
    bool independent_excitation = false;

    void validate() const;
};

/// Two-level transition probability
/// rabi^2/(rabi^2+delta^2) sin^2(sqrt(rabi^2+delta^2) t / 2).
double rabi_line(double delta, double rabi, double t);

/// Carrier plus red/blue sidebands (Rabi eta rabi sqrt(n), eta rabi sqrt(n+1)),
/// each averaged over the thermal level distribution; classical probability
/// sum, clipped to 1 with a note in meta when clipping triggers.
ScanResult sideband_spectrum(const LineshapeModel &model, std::span<const double> freq_grid);

/// Two resonances under a shared drive. The default observable is the plain
/// sum of the two single-ion responses (clipped at 1); the alternative
/// combines them as independent excitations.
ScanResult two_ion_spectrum(double f1, double f2, double rabi, double t,
                            std::span<const double> freq_grid,
                            bool independent_excitation = false);

/// Replaces each probability with a binomial(shots, p)/shots draw from a
/// seeded generator; sigma = sqrt(phat (1-phat)/shots) floored at 1/(2 shots).
ScanResult simulate_shots(const ScanResult &curve, int shots, std::uint64_t seed);

} // namespace spinmotion
