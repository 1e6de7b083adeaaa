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
#include <vector>

#include "qinfo/coding.hpp"
#include "qinfo/measures.hpp"
#include "qinfo/mub.hpp"
#include "qinfo/states.hpp"

// Monte Carlo sweeps over many independent trials. Every function here comes
// in two flavors: the plain name runs the trial loop under OpenMP when the
// library was built with it, and the _serial twin runs the identical loop
// body sequentially. Trial t always draws its randomness from streams
// derived as derive_seed(seed, ...) of the trial index alone, and per-trial
// results are folded in trial order after the loop, so the two flavors
// return bit-identical results and serve as each other's test oracle.

namespace qinfo {

// Mean of |U(0,0)|^2 over `samples` seeded Haar unitaries; tends to 1/dim.
double haar_moment(std::size_t dim, std::size_t samples, std::uint64_t seed);
double haar_moment_serial(std::size_t dim, std::size_t samples,
                          std::uint64_t seed);

// Recursion check over random (distribution, split) pairs. Sizes are drawn
// from 2..6, entries are kept away from zero, and the split point is
// uniform inside the last entry.
struct FaddeevSweepResult {
    std::size_t pairs = 0;
    double tol = 0.0;
    std::size_t violations = 0;  // pairs with |lhs - rhs| >= tol
    double max_abs_dev = 0.0;
};

FaddeevSweepResult faddeev_sweep(const MeasureKind& kind, std::size_t pairs,
                                 std::uint64_t seed, double tol);
FaddeevSweepResult faddeev_sweep_serial(const MeasureKind& kind,
                                        std::size_t pairs, std::uint64_t seed,
                                        double tol);

// Per-trial: draw a state (pure on even trials, mixed on odd), check the
// quadratic total against its closed form, evolve by a random unitary and
// check both values again; on pure trials also record the Shannon total.
struct InvarianceStats {
    std::size_t trials = 0;
    std::size_t pure_trials = 0;
    double max_mub_sum_dev = 0.0;      // |quadratic total - closed form|
    double max_itotal_drift = 0.0;     // change under unitary evolution
    double max_pure_itotal_dev = 0.0;  // |closed form - (n-1)/n| on pure
    double h_total_min = 0.0;          // Shannon total over pure trials
    double h_total_max = 0.0;
};

InvarianceStats invariance_sweep_stats(std::size_t dim, std::size_t trials,
                                       std::uint64_t seed);
InvarianceStats invariance_sweep_stats_serial(std::size_t dim,
                                              std::size_t trials,
                                              std::uint64_t seed);

// Per-state: compare the Shannon information of the eigenbasis measurement
// with the von Neumann entropy, then with `bases_per_state` random bases.
struct EigenOptStats {
    std::size_t states = 0;
    double max_entropy_mismatch = 0.0;  // |eigenbasis Shannon - S(rho)|
    double min_margin = 0.0;            // min(sampled - eigenbasis Shannon)
};

EigenOptStats eigenbasis_optimality_sweep(std::size_t dim, std::size_t states,
                                          std::size_t bases_per_state,
                                          std::uint64_t seed);
EigenOptStats eigenbasis_optimality_sweep_serial(std::size_t dim,
                                                 std::size_t states,
                                                 std::size_t bases_per_state,
                                                 std::uint64_t seed);

// The draw sequence of simulate_drawings, produced batch-parallel. Batch k
// is an independent stream, so filling batches concurrently reproduces the
// serial sequence exactly.
std::vector<std::uint32_t> draw_sequence(const SymbolSource& source,
                                         std::uint64_t n_draws,
                                         std::uint64_t seed);
std::vector<std::uint32_t> draw_sequence_serial(const SymbolSource& source,
                                                std::uint64_t n_draws,
                                                std::uint64_t seed);

// True when the library was compiled with OpenMP; the plain-name functions
// fall back to the serial path otherwise.
bool openmp_enabled();
int openmp_max_threads();

}  // namespace qinfo
