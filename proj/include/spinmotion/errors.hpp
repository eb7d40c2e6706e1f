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

#include <stdexcept>
#include <string>

namespace spinmotion {

// Fock truncation too small for the requested state or operation.
class TruncationError : public std::runtime_error {
  public:
    TruncationError(const std::string &what, int suggested_dim)
        : std::runtime_error(what), suggested_dim(suggested_dim)
    {
    }
    int suggested_dim;
};

// The step-halving loop of the integrator failed to converge.
class IntegrationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed input file; `line` is 1-based (0 when not line-specific).
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string &what, int line = 0) : std::runtime_error(what), line(line) {}
    int line;
};

} // namespace spinmotion
