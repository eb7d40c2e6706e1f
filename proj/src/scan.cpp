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

#include "spinmotion/scan.hpp"

#include <cmath>
#include <stdexcept>

namespace spinmotion {

void ScanResult::validate() const
{
    if (x.size() != p.size() || x.size() != sigma.size()) {
        throw std::domain_error("scan columns must have equal length");
    }
    for (size_t i = 0; i < x.size(); ++i) {
        if (!std::isfinite(x[i]) || !(p[i] >= 0.0 && p[i] <= 1.0) || !(sigma[i] >= 0.0)) {
            throw std::domain_error("scan sample out of range");
        }
    }
}

} // namespace spinmotion
