// Copyright 2026 The qinfo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

namespace qinfo {

// Structural invariants (hermiticity, orthonormality, normalization).
inline constexpr double kStructuralTol = 1e-10;

// Derived equalities (identities that hold up to accumulated rounding).
inline constexpr double kDerivedTol = 1e-9;

// Below this, an outcome probability is treated as exactly zero.
inline constexpr double kZeroProbTol = 1e-15;

}  // namespace qinfo
