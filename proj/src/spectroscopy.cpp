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

#include "spinmotion/spectroscopy.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "spinmotion/fock.hpp"

namespace spinmotion {

namespace {

// Tail mass for the thermal averages in spectra. Tighter than the ensemble
// invariant so that doubling the cutoff moves no spectrum value above 1e-8.
constexpr double kSpectrumTail = 1e-10;

void check_grid(std::span<const double> grid)
{
    if (grid.empty()) {
        throw std::domain_error("frequency grid must be non-empty");
    }
    for (size_t i = 1; i < grid.size(); ++i) {
        const bool up = grid[1] > grid[0];
        if (grid[i] == grid[i - 1] || (grid[i] > grid[i - 1]) != up) {
            throw std::domain_error("frequency grid must be strictly monotone");
        }
    }
}

} // namespace

void LineshapeModel::validate() const
{
    if (!(pulse_time > 0.0) || !std::isfinite(pulse_time)) {
        throw std::domain_error("pulse time must be positive");
    }
    if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
        throw std::domain_error("mean occupation must be non-negative");
    }
    if (!(rabi >= 0.0) || !(nu_z >= 0.0) || !(eta_eff >= 0.0)) {
        throw std::domain_error("model frequencies must be non-negative");
    }
    if (two_resonance && carrier_freq == carrier_freq2) {
        throw std::domain_error("the two resonances must be distinct");
    }
}

double rabi_line(double delta, double rabi, double t)
{
    if (t < 0.0) {
        throw std::domain_error("pulse time must be non-negative");
    }
    if (rabi == 0.0) {
        return 0.0;
    }
    const double w2 = rabi * rabi + delta * delta;
    const double s = std::sin(0.5 * std::sqrt(w2) * t);
    return rabi * rabi / w2 * s * s;
}

ScanResult sideband_spectrum(const LineshapeModel &model, std::span<const double> freq_grid)
{
    model.validate();
    if (!model.include_sidebands) {
        throw std::domain_error("sideband_spectrum requires include_sidebands");
    }
    check_grid(freq_grid);

    const ThermalEnsemble ensemble = ThermalEnsemble::for_tail(model.nbar, kSpectrumTail);
    const int cutoff = ensemble.dim();
    const double t = model.pulse_time;
    const double sideband_rabi = model.eta_eff * model.rabi;
    double carrier_rabi = model.rabi;
    if (model.carrier_debye_waller) {
        carrier_rabi *= std::exp(-0.5 * model.eta_eff * model.eta_eff * (2.0 * model.nbar + 1.0));
    }

    ScanResult out;
    out.x.assign(freq_grid.begin(), freq_grid.end());
    out.p.resize(freq_grid.size());
    out.sigma.assign(freq_grid.size(), 0.0);

    bool clipped = false;
    for (size_t i = 0; i < freq_grid.size(); ++i) {
        const double delta = freq_grid[i] - model.carrier_freq;
        double p = rabi_line(delta, carrier_rabi, t);
        double blue = 0.0, red = 0.0;
        for (int n = 0; n < cutoff; ++n) {
            const double w = ensemble.weight(n);
            blue += w * rabi_line(delta - model.nu_z, sideband_rabi * std::sqrt(n + 1.0), t);
            if (n > 0) {
                red += w * rabi_line(delta + model.nu_z, sideband_rabi * std::sqrt(double(n)), t);
            }
        }
        p += blue + red;
        if (p > 1.0) {
            p = 1.0;
            clipped = true;
        }
        out.p[i] = p;
    }

    std::ostringstream meta;
    meta.precision(17);
    meta << "sideband-spectrum rabi=" << model.rabi << " nu_z=" << model.nu_z
         << " eta_eff=" << model.eta_eff << " nbar=" << model.nbar << " t=" << t
         << " cutoff=" << cutoff;
    if (model.carrier_debye_waller) {
        meta << " debye_waller=1";
    }
    if (clipped) {
        meta << " clipped=1";
    }
    out.meta = meta.str();
    out.validate();
    return out;
}

ScanResult two_ion_spectrum(double f1, double f2, double rabi, double t,
                            std::span<const double> freq_grid, bool independent_excitation)
{
    if (f1 == f2) {
        throw std::domain_error("the two resonances must be distinct");
    }
    check_grid(freq_grid);

    ScanResult out;
    out.x.assign(freq_grid.begin(), freq_grid.end());
    out.p.resize(freq_grid.size());
    out.sigma.assign(freq_grid.size(), 0.0);

    bool clipped = false;
    for (size_t i = 0; i < freq_grid.size(); ++i) {
        const double p1 = rabi_line(freq_grid[i] - f1, rabi, t);
        const double p2 = rabi_line(freq_grid[i] - f2, rabi, t);
        double p;
        if (independent_excitation) {
            p = 1.0 - (1.0 - p1) * (1.0 - p2);
        } else {
            p = p1 + p2;
            if (p > 1.0) {
                p = 1.0;
                clipped = true;
            }
        }
        out.p[i] = p;
    }

    std::ostringstream meta;
    meta.precision(17);
    meta << "two-ion-spectrum f1=" << f1 << " f2=" << f2 << " rabi=" << rabi << " t=" << t
         << " observable=" << (independent_excitation ? "independent" : "sum");
    if (clipped) {
        meta << " clipped=1";
    }
    out.meta = meta.str();
    out.validate();
    return out;
}

ScanResult simulate_shots(const ScanResult &curve, int shots, std::uint64_t seed)
{
    curve.validate();
    if (shots < 1) {
        throw std::domain_error("shot count must be at least 1");
    }
    std::mt19937_64 rng(seed);
    // Uniform doubles built from the top 53 bits: identical draws everywhere.
    auto uniform = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    ScanResult out = curve;
    const double floor_sigma = 1.0 / (2.0 * shots);
    for (size_t i = 0; i < curve.p.size(); ++i) {
        int hits = 0;
        for (int s = 0; s < shots; ++s) {
            if (uniform() < curve.p[i]) {
                ++hits;
            }
        }
        const double phat = static_cast<double>(hits) / shots;
        out.p[i] = phat;
        out.sigma[i] = std::max(std::sqrt(phat * (1.0 - phat) / shots), floor_sigma);
    }
    std::ostringstream meta;
    meta << curve.meta << " | shots=" << shots << " seed=" << seed;
    out.meta = meta.str();
    out.validate();
    return out;
}

} // namespace spinmotion
