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

#include "spinmotion/config.hpp"

#include <fstream>

#include "spinmotion/constants.hpp"
#include "spinmotion/errors.hpp"

namespace spinmotion {

namespace units {
double hz_to_angular(double hz) { return constants::two_pi * hz; }
double angular_to_hz(double rad_per_s) { return rad_per_s / constants::two_pi; }
double us_to_s(double us) { return us * 1e-6; }
double s_to_us(double s) { return s * 1e6; }
double um_to_m(double um) { return um * 1e-6; }
double m_to_um(double m) { return m * 1e6; }
double nm_to_m(double nm) { return nm * 1e-9; }
} // namespace units

namespace {

std::string trim(const std::string &s)
{
    const auto a = s.find_first_not_of(" \t");
    if (a == std::string::npos) {
        return "";
    }
    const auto b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

} // namespace

KeyValueFile KeyValueFile::parse(const std::string &path)
{
    std::ifstream is(path);
    if (!is) {
        throw ParseError("cannot open: " + path);
    }
    KeyValueFile kv;
    kv.path_ = path;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError("expected key = value in " + path, lineno);
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ParseError("empty key or value in " + path, lineno);
        }
        kv.entries_[key] = value;
        kv.lines_[key] = lineno;
    }
    return kv;
}

bool KeyValueFile::has(const std::string &key) const { return entries_.count(key) > 0; }

std::string KeyValueFile::get_string(const std::string &key) const
{
    const auto it = entries_.find(key);
    if (it == entries_.end()) {
        throw ParseError("missing key '" + key + "' in " + path_);
    }
    return it->second;
}

double KeyValueFile::get_double(const std::string &key) const
{
    const std::string v = get_string(key);
    try {
        size_t used = 0;
        const double x = std::stod(v, &used);
        if (used != v.size()) {
            throw std::invalid_argument(v);
        }
        return x;
    } catch (const std::exception &) {
        throw ParseError("key '" + key + "' is not a number in " + path_, lines_.at(key));
    }
}

long KeyValueFile::get_long(const std::string &key) const
{
    const std::string v = get_string(key);
    try {
        size_t used = 0;
        const long x = std::stol(v, &used);
        if (used != v.size()) {
            throw std::invalid_argument(v);
        }
        return x;
    } catch (const std::exception &) {
        throw ParseError("key '" + key + "' is not an integer in " + path_, lines_.at(key));
    }
}

std::string KeyValueFile::get_string(const std::string &key, const std::string &fallback) const
{
    return has(key) ? get_string(key) : fallback;
}

double KeyValueFile::get_double(const std::string &key, double fallback) const
{
    return has(key) ? get_double(key) : fallback;
}

long KeyValueFile::get_long(const std::string &key, long fallback) const
{
    return has(key) ? get_long(key) : fallback;
}

IonSpecies load_species(const std::string &path)
{
    const KeyValueFile kv = KeyValueFile::parse(path);
    IonSpecies species;
    species.label = kv.get_string("label");
    species.mass_amu = kv.get_double("mass_amu");
    species.zeeman_slope = kv.get_double("zeeman_slope_rad_per_s_per_T");
    if (!(species.mass_amu > 0.0)) {
        throw ParseError("mass_amu must be positive in " + path);
    }
    return species;
}

double RunConfig::eta_eff() const
{
    if (eta_override) {
        return *eta_override;
    }
    return effective_lamb_dicke(species, trap);
}

RunConfig load_run_config(const std::string &path)
{
    const KeyValueFile kv = KeyValueFile::parse(path);
    RunConfig cfg;

    if (kv.has("species_file")) {
        cfg.species = load_species(kv.get_string("species_file"));
    } else {
        const std::string name = kv.get_string("species", "yb171");
        if (name != "yb171") {
            throw ParseError("unknown species preset '" + name + "' (built-in: yb171)");
        }
    }

    cfg.trap.nu_z = units::hz_to_angular(kv.get_double("nu_z_hz", 268e3));
    cfg.trap.gradient = kv.get_double("gradient_t_per_m", 0.0);
    cfg.trap.bias_field = kv.get_double("bias_field_t", 0.0);

    cfg.drive.rabi = units::hz_to_angular(kv.get_double("rabi_hz", 0.0));
    cfg.drive.detuning = units::hz_to_angular(kv.get_double("detuning_hz", 0.0));
    cfg.drive.duration = units::us_to_s(kv.get_double("duration_us", 0.0));
    cfg.drive.phase_sum = kv.get_double("phase_sum", 0.0);

    cfg.nbar = kv.get_double("nbar", 0.0);
    if (kv.has("eta_eff")) {
        cfg.eta_override = kv.get_double("eta_eff");
    }

    const std::string kind = kv.get_string("scan_kind", "detuning");
    if (kind == "frequency") {
        cfg.kind = ScanKind::frequency;
    } else if (kind == "detuning") {
        cfg.kind = ScanKind::detuning;
    } else if (kind == "time") {
        cfg.kind = ScanKind::time;
    } else {
        throw ParseError("scan_kind must be frequency, detuning or time");
    }

    // Scan keys are optional here; run_scan validates them when it runs.
    if (cfg.kind == ScanKind::time) {
        cfg.scan_min = units::us_to_s(kv.get_double("scan_min_us", 0.0));
        cfg.scan_max = units::us_to_s(kv.get_double("scan_max_us", 0.0));
    } else {
        cfg.scan_min = units::hz_to_angular(kv.get_double("scan_min_hz", 0.0));
        cfg.scan_max = units::hz_to_angular(kv.get_double("scan_max_hz", 0.0));
    }
    cfg.scan_points = static_cast<int>(kv.get_long("scan_points", 0));

    cfg.model = kv.get_string("model", "sideband");
    if (cfg.model != "sideband" && cfg.model != "two_ion") {
        throw ParseError("model must be sideband or two_ion");
    }
    cfg.pulse_time = units::us_to_s(kv.get_double("pulse_us", 0.0));
    cfg.splitting = units::hz_to_angular(kv.get_double("splitting_hz", 0.0));
    cfg.carrier_debye_waller = kv.get_long("carrier_debye_waller", 0) != 0;
    cfg.independent_excitation = kv.get_long("independent_excitation", 0) != 0;
    cfg.wavelength = units::nm_to_m(kv.get_double("wavelength_nm", 369.5));
    cfg.counterpropagating = kv.get_long("counterpropagating", 1) != 0;

    cfg.shots = static_cast<int>(kv.get_long("shots", 0));
    if (cfg.shots < 0) {
        throw ParseError("shots must be non-negative");
    }
    cfg.seed = static_cast<std::uint64_t>(kv.get_long("seed", 1));
    cfg.out_path = kv.get_string("out", "");
    cfg.trajectory_out = kv.get_string("trajectory_out", "");
    return cfg;
}

} // namespace spinmotion
