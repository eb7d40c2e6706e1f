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
#include <string>
#include <vector>

namespace spinmotion {

/// Tolerances and workload of the self-check suite.
struct OracleProfile {
    int n_drives = 50;           // random drives for the closed-form/integrator comparison
    std::uint64_t seed = 20260801;
    double integrator_tol = 1e-4;
    double laguerre_tol = 1e-6;
    double unitarity_tol = 1e-9;
    double loop_tol = 1e-12;     // relative loop-closure residue
    double continuity_tol = 1e-6;
    int dim_divisor = 1;         // >1 shrinks truncations to exercise failure paths
};

struct OracleCheck {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct OracleReport {
    bool pass = false;
    std::vector<OracleCheck> checks;

    std::string to_json() const;
};

/// Runs the cross-route equivalence suites: closed forms against the
/// brute-force integrator, the thermal Laguerre identity, displacement
/// unitarity/composition, loop closure and the detuning -> 0 limit.
/// Truncation failures propagate as TruncationError.
OracleReport run_oracle_suite(const OracleProfile &profile = {});

} // namespace spinmotion
