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
#include <map>
#include <optional>
#include <string>

#include "spinmotion/dynamics.hpp"
#include "spinmotion/params.hpp"

namespace spinmotion {

// The CLI boundary speaks Hz, us, um; the library speaks rad/s, s, m.
namespace units {
double hz_to_angular(double hz);
double angular_to_hz(double rad_per_s);
double us_to_s(double us);
double s_to_us(double s);
double um_to_m(double um);
double m_to_um(double m);
double nm_to_m(double nm);
} // namespace units

/// Flat `key = value` file with '#' comments.
class KeyValueFile {
  public:
    static KeyValueFile parse(const std::string &path);

    bool has(const std::string &key) const;
    std::string get_string(const std::string &key) const;
    double get_double(const std::string &key) const;
    long get_long(const std::string &key) const;
    std::string get_string(const std::string &key, const std::string &fallback) const;
    double get_double(const std::string &key, double fallback) const;
    long get_long(const std::string &key, long fallback) const;

    const std::map<std::string, std::string> &entries() const { return entries_; }

  private:
    std::map<std::string, std::string> entries_;
    std::string path_;
    std::map<std::string, int> lines_; // key -> defining line, for messages
};

/// Species preset file: label, mass_amu, zeeman_slope_rad_per_s_per_T.
IonSpecies load_species(const std::string &path);

enum class ScanKind { frequency, detuning, time };

/// One simulation/scan request, as assembled from a config file.
struct RunConfig {
    IonSpecies species = IonSpecies::yb171();
    TrapEnvironment trap;
    DriveConfig drive;
    double nbar = 0.0;
    std::optional<double> eta_override; // bypasses the trap-derived eta_eff
    ScanKind kind = ScanKind::detuning;
    double scan_min = 0.0; // rad/s or s, already converted
    double scan_max = 0.0;
    int scan_points = 0;
    // frequency-scan model selection and parameters
    std::string model = "sideband"; // "sideband" | "two_ion"
    double pulse_time = 0.0;        // s
    double splitting = 0.0;         // rad/s, two-ion model
    bool carrier_debye_waller = false;
    bool independent_excitation = false;
    double wavelength = 369.5e-9;   // m, optical comparison in the params report
    bool counterpropagating = true;
    int shots = 0;
    std::uint64_t seed = 1;
    std::string out_path;
    std::string trajectory_out; // optional companion file for time scans

    double eta_eff() const;
};

RunConfig load_run_config(const std::string &path);

} // namespace spinmotion
