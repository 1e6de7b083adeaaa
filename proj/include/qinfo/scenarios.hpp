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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qinfo/states.hpp"

namespace qinfo {

// A single checked value inside a scenario. When `expected` is set, pass
// means |computed - expected| <= tol; threshold-style quantities leave
// `expected` empty and set `pass` from the criterion described in `note`.
struct Quantity {
    std::string label;
    double computed = 0.0;
    std::optional<double> expected;
    double tol = 0.0;
    std::string note;
    bool pass = true;
};

struct ScenarioReport {
    std::string name;
    std::vector<Quantity> quantities;
    bool overall = true;  // conjunction of the individual pass flags
};

// Polarization filter cascade on an unpolarized beam: a vertical filter
// passes half; a crossed (horizontal) filter behind it passes nothing;
// inserting a diagonal filter between them lets a quarter of the vertical
// beam through again. The report also shows the information inversion
// behind that: the crossed-filter outcome is certain (0 bits) until the
// diagonal result is learned, after which it is maximally uncertain (1 bit).
ScenarioReport run_filter_cascade();

// Two successive spin measurements on |z+>, in both orders: spin along the
// direction tilted by alpha from z, and spin along x. The conditional terms
// of the two orders coincide; the first-measurement terms do not, giving an
// order asymmetry of 1 - H(cos^2 a/2, sin^2 a/2) bits.
ScenarioReport run_spin_order(double alpha);

// Drawing a ball that is black or white and wooden or plastic: information
// gathered about color then material equals material then color, 1.5 bits
// either way. Uses the fixed joint table
//   black&plastic 1/2, white&plastic 1/4, white&wooden 1/4.
ScenarioReport run_classical_balls();

// Monte Carlo check, over seeded random states and unitaries, that the
// quadratic total over a complete basis set equals Tr rho^2 - 1/n and is
// invariant under evolution, while the Shannon total over the same bases
// spreads by more than 0.05 bits across pure states.
ScenarioReport run_invariance_sweep(std::size_t dim, std::size_t trials,
                                    std::uint64_t seed);

// Repeated unitary evolution: the entropy of the optimal (eigenbasis)
// measurement and the quadratic total both stay constant at every step.
ScenarioReport run_conservation(const DensityMatrix& rho0,
                                const ComplexMatrix& u, std::size_t steps);

// Aligned-column text rendering; `precision` is significant digits.
std::string to_text(const ScenarioReport& report, int precision = 4);

// CSV rows: scenario,label,computed,expected,tol,pass (full precision).
std::string to_csv(const ScenarioReport& report);

}  // namespace qinfo
