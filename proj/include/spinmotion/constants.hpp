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

namespace spinmotion::constants {

// CODATA 2018. Single source for every physical constant in the library.
inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

inline constexpr double planck = 6.62607015e-34;               // J s (exact)
inline constexpr double hbar = 1.0545718176461565e-34;         // J s, h / 2pi
inline constexpr double bohr_magneton = 9.2740100783e-24;      // J / T
inline constexpr double elementary_charge = 1.602176634e-19;   // C (exact)
inline constexpr double vacuum_permittivity = 8.8541878128e-12;// F / m
inline constexpr double atomic_mass_unit = 1.66053906660e-27;  // kg

} // namespace spinmotion::constants
