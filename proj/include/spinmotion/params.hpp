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

#include <optional>
#include <string>

namespace spinmotion {

/// Ion species: mass plus the magnetic response of the addressed transition.
///
/// `zeeman_slope` is the transition-frequency shift per tesla (rad s^-1 T^-1),
/// so the differential force in a gradient is hbar * zeeman_slope * dB/dz.
struct IonSpecies {
    double mass_amu = 0.0;
    double zeeman_slope = 0.0; // rad s^-1 T^-1
    std::string label;

    double mass_kg() const;

    /// 171Yb+ with the |F=0> <-> |F=1, mF=+-1> transitions shifting at
    /// one Bohr magneton per tesla.
    static IonSpecies yb171();
};

/// Static trap configuration: axial secular frequency, axial field gradient,
/// bias field at the ion. All frequencies angular (rad/s).
struct TrapEnvironment {
    double nu_z = 0.0;       // rad/s
    double gradient = 0.0;   // T/m
    double bias_field = 0.0; // T
};

/// Closed-form quantities derived from a species/trap pair.
struct DerivedQuantities {
    double z0 = 0.0;                      // m, ground-state wavefunction extent
    double eta_eff = 0.0;                 // gradient-induced Lamb-Dicke parameter
    std::optional<double> eta_laser;      // optical comparison value, if requested
    double ion_separation = 0.0;          // m, two-ion equilibrium spacing
};

/// Ground-state wavepacket extent z0 = sqrt(hbar / (2 m nu_z)).
double ground_state_extent(const IonSpecies &species, double nu_z);

/// Gradient-induced effective Lamb-Dicke parameter,
/// eta_eff = z0 * hbar * zeeman_slope * dB/dz / (hbar * nu_z).
/// Throws std::domain_error for non-finite or non-positive nu_z.
double effective_lamb_dicke(const IonSpecies &species, const TrapEnvironment &trap);

/// Optical Lamb-Dicke parameter k_eff * z0 for comparison. `counterpropagating`
/// doubles the wave vector (difference wave vector of a Raman beam pair).
double laser_lamb_dicke(const IonSpecies &species, const TrapEnvironment &trap,
                        double wavelength, bool counterpropagating);

/// Equilibrium spacing of two identical ions in a harmonic axial well,
/// d = (e^2 / (2 pi eps0 m nu_z^2))^(1/3).
double two_ion_separation(const IonSpecies &species, double nu_z);

/// Transition-frequency splitting of two ions spaced `separation` apart in a
/// field gradient: splitting = zeeman_slope * gradient * separation.
double splitting_from_gradient(const IonSpecies &species, double gradient, double separation);

/// Inverse of splitting_from_gradient: gradient = splitting / (slope * separation).
double gradient_from_splitting(const IonSpecies &species, double splitting, double separation);

/// Worst-case off-resonant excitation probability (rabi / splitting)^2 of a
/// spectator ion under a global drive.
double crosstalk_bound(double rabi, double splitting);

/// Bundle of the closed-form quantities; `wavelength` enables eta_laser.
DerivedQuantities derive_quantities(const IonSpecies &species, const TrapEnvironment &trap,
                                    std::optional<double> wavelength = std::nullopt,
                                    bool counterpropagating = true);

} // namespace spinmotion
