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

namespace spinmotion {

/// Ordered samples from a frequency/detuning/time scan. `x` carries whatever
/// the scan swept (rad/s or s); `sigma` is zero for noiseless theory curves.
struct ScanResult {
    std::vector<double> x;
    std::vector<double> p;
    std::vector<double> sigma;
    std::string meta; // model + provenance

    void validate() const; // lengths equal, p in [0,1], sigma >= 0
};

} // namespace spinmotion
