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

#include "spinmotion/params.hpp"

#include <cmath>
#include <stdexcept>

#include "spinmotion/constants.hpp"

namespace spinmotion {

namespace {

void check_species(const IonSpecies &species)
{
    if (!(species.mass_amu > 0.0) || !std::isfinite(species.mass_amu)) {
        throw std::domain_error("ion mass must be positive and finite");
    }
    if (!std::isfinite(species.zeeman_slope)) {
        throw std::domain_error("zeeman slope must be finite");
    }
}

void check_nu_z(double nu_z)
{
    if (!(nu_z > 0.0) || !std::isfinite(nu_z)) {
        throw std::domain_error("secular frequency must be positive and finite");
    }
}

} // namespace

double IonSpecies::mass_kg() const { return mass_amu * constants::atomic_mass_unit; }

IonSpecies IonSpecies::yb171()
{
    // Nuclide mass from AME; slope mu_B/hbar for the mF = +-1 branches.
    return IonSpecies{170.9363302, constants::bohr_magneton / constants::hbar, "171Yb+"};
}

double ground_state_extent(const IonSpecies &species, double nu_z)
{
    check_species(species);
    check_nu_z(nu_z);
    return std::sqrt(constants::hbar / (2.0 * species.mass_kg() * nu_z));
}

double effective_lamb_dicke(const IonSpecies &species, const TrapEnvironment &trap)
{
    check_species(species);
    check_nu_z(trap.nu_z);
    if (!(trap.gradient >= 0.0) || !std::isfinite(trap.gradient)) {
        throw std::domain_error("field gradient must be non-negative and finite");
    }
    const double z0 = ground_state_extent(species, trap.nu_z);
    return species.zeeman_slope * trap.gradient * z0 / trap.nu_z;
}

double laser_lamb_dicke(const IonSpecies &species, const TrapEnvironment &trap,
                        double wavelength, bool counterpropagating)
{
    check_species(species);
    check_nu_z(trap.nu_z);
    if (!(wavelength > 0.0)) {
        throw std::domain_error("wavelength must be positive");
    }
    const double k = constants::two_pi / wavelength;
    const double k_eff = counterpropagating ? 2.0 * k : k;
    return k_eff * ground_state_extent(species, trap.nu_z);
}

double two_ion_separation(const IonSpecies &species, double nu_z)
{
    check_species(species);
    check_nu_z(nu_z);
    const double e = constants::elementary_charge;
    const double d3 = e * e /
                      (constants::two_pi * constants::vacuum_permittivity * species.mass_kg() *
                       nu_z * nu_z);
    return std::cbrt(d3);
}

double splitting_from_gradient(const IonSpecies &species, double gradient, double separation)
{
    check_species(species);
    if (!(separation > 0.0)) {
        throw std::domain_error("ion separation must be positive");
    }
    return species.zeeman_slope * gradient * separation;
}

double gradient_from_splitting(const IonSpecies &species, double splitting, double separation)
{
    check_species(species);
    if (!(separation > 0.0)) {
        throw std::domain_error("ion separation must be positive");
    }
    if (species.zeeman_slope == 0.0) {
        throw std::domain_error("zeeman slope must be non-zero to invert a splitting");
    }
    return splitting / (species.zeeman_slope * separation);
}

double crosstalk_bound(double rabi, double splitting)
{
    if (splitting == 0.0) {
        throw std::domain_error("splitting must be non-zero");
    }
    const double r = rabi / splitting;
    return r * r;
}

DerivedQuantities derive_quantities(const IonSpecies &species, const TrapEnvironment &trap,
                                    std::optional<double> wavelength, bool counterpropagating)
{
    DerivedQuantities out;
    out.z0 = ground_state_extent(species, trap.nu_z);
    out.eta_eff = effective_lamb_dicke(species, trap);
    if (wavelength) {
        out.eta_laser = laser_lamb_dicke(species, trap, *wavelength, counterpropagating);
    }
    out.ion_separation = two_ion_separation(species, trap.nu_z);
    return out;
}

} // namespace spinmotion
