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

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "spinmotion/scan.hpp"
#include "spinmotion/spectroscopy.hpp"

namespace spinmotion {

struct FitParam {
    std::string name;
    double lo = 0.0;
    double hi = 0.0;
};

struct FitResult {
    std::map<std::string, double> params;
    double residual = 0.0; // weighted sum of squares at the reported point
    bool converged = false;
    int n_eval = 0;
};

/// Model curve sampled on the data grid, as a function of the free parameters.
using CurveFn = std::function<std::vector<double>(std::span<const double>)>;

struct FitOptions {
    int multistarts = 8;
    double diameter_tol = 1e-6; // relative to the bound box
    int max_eval_per_start = 4000;
};

/// Weighted least squares by a derivative-free simplex search with
/// deterministic multi-starts spread over the bound box. Zero-sigma points
/// weight as sigma = 1. Throws std::domain_error for degenerate bounds or
/// when data points < 2x free parameters.
FitResult fit_least_squares(const CurveFn &model, std::span<const FitParam> free_params,
                            const ScanResult &data, const FitOptions &opts = {});

/// Sideband-spectrum model with nbar free. Caches the per-level line values
/// on the grid, so repeated fits over the same grid reuse one table.
CurveFn make_nbar_spectrum_model(const LineshapeModel &base, std::vector<double> grid,
                                 double nbar_max);

/// Two-resonance model with (f1, f2, rabi) free.
CurveFn make_two_ion_model(double pulse_time, std::vector<double> grid,
                           bool independent_excitation = false);

/// Default (f1, f2, rabi) bounds for a two-resonance fit: each resonance
/// boxed around one of the two highest well-separated data maxima. The
/// narrow-peak landscape needs starts near the peaks to be searchable.
std::vector<FitParam> two_ion_default_bounds(const ScanResult &data);

} // namespace spinmotion
