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
#include <optional>
#include <string>
#include <vector>

#include "spinmotion/config.hpp"
#include "spinmotion/fit.hpp"
#include "spinmotion/oracle.hpp"

namespace spinmotion {

/// Derived-quantity report; `json` switches the rendering, values are the
/// untouched library results either way.
std::string params_report(const RunConfig &cfg, bool json);

/// Bundled demonstration presets. `fig3`: two-resonance addressing spectrum,
/// `fig4`: carrier/sideband spectrum, `fig5`: detuning scan of the
/// spin-dependent force. Emits the theory curve and, when shots > 0, a
/// synthetic-shot data file. Returns the written paths.
std::vector<std::string> run_reproduce(const std::string &figure, const std::string &out_dir,
                                       int shots, std::uint64_t seed);

/// Executes the configured scan; writes the theory curve to cfg.out_path and
/// shot data next to it when cfg.shots > 0. Returns the written paths.
std::vector<std::string> run_scan(const RunConfig &cfg);

struct FitRequest {
    std::string data_path;
    std::string model; // "sideband_nbar" | "two_ion"
    std::optional<RunConfig> cfg;
    std::vector<FitParam> overrides; // CLI-units bounds, by name
    std::uint64_t seed = 0;          // recorded in the report only
};

/// Fits the named model to an `x,p,sigma` file (x in Hz) and renders the
/// JSON report. Non-convergence is flagged in the report, not thrown.
std::string run_fit_command(const FitRequest &request);

} // namespace spinmotion
