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

#include <string>
#include <vector>

#include "spinmotion/dynamics.hpp"
#include "spinmotion/scan.hpp"

namespace spinmotion {

/// 17-significant-digit decimal form; round-trips IEEE doubles exactly.
std::string format_sig17(double value);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

/// Strict reader for the tool's own outputs: one header row, numeric cells,
/// uniform column count. Throws ParseError with the offending 1-based line.
CsvTable read_csv(const std::string &path);

/// `x,p,sigma` data file.
void write_scan_csv(const std::string &path, const ScanResult &scan);
ScanResult read_scan_csv(const std::string &path);

/// `delta_rad_s,p_f1` detuning-scan curve.
void write_detuning_csv(const std::string &path, const ScanResult &scan);

/// `t_s,re_alpha,im_alpha` phase-space trajectory.
void write_trajectory_csv(const std::string &path, const std::vector<TrajectoryPoint> &traj);

} // namespace spinmotion
