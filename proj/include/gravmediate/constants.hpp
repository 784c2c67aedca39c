// Copyright 2026 The gravmediate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

namespace gm::constants {

// Gravitational constant as used throughout the protocol analysis (m^3 kg^-1 s^-2).
inline constexpr double G = 6.67408e-11;
// CODATA 2018, exact since the 2019 SI redefinition (J s).
inline constexpr double hbar = 1.054571817e-34;
// Exact (m/s).
inline constexpr double c = 299792458.0;

inline constexpr double pi = 3.14159265358979323846;

}  // namespace gm::constants
