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

#include <cstddef>
#include <optional>
#include <vector>

#include "qinfo/basis.hpp"
#include "qinfo/measures.hpp"
#include "qinfo/states.hpp"

namespace qinfo {

// A complete set of n + 1 mutually unbiased bases of dimension n: any two
// vectors from different bases have squared overlap exactly 1/n.
struct MubSet {
    std::size_t dim = 0;
    std::vector<Basis> bases;
};

// Builds the complete set for prime dimension n in {2, 3, 5, 7}.
//
// For n = 2 the set is spin z / x / y. For odd primes the bases are the
// computational basis plus, for k = 0..n-1, the vectors
//   v^(k)_j[m] = w^(k m^2 + j m) / sqrt(n),  w = exp(2 pi i / n),
// following Wootters and Fields. The construction is verified before the
// set is returned. Other dimensions throw UnsupportedDimension.
MubSet construct_mubs(std::size_t n);

// Result of checking the defining overlap condition across all pairs of
// bases. `worst_deviation` is max | |<a_j|b_i>|^2 - 1/n | over every vector
// pair; `basis_a` / `basis_b` identify the basis pair achieving it.
struct VerificationReport {
    bool ok = false;
    double worst_deviation = 0.0;
    std::size_t basis_a = 0;
    std::size_t basis_b = 0;
};

VerificationReport verify_mutually_unbiased(const MubSet& mubs,
                                            double tol = kStructuralTol);

// Information summed over a complete set of bases.
struct TotalInfoReport {
    struct Entry {
        std::size_t basis_index = 0;
        ProbDist distribution;
        double info = 0.0;
    };
    MeasureKind measure;
    std::vector<Entry> per_basis;
    double total = 0.0;
    // For the unnormalized quadratic measure the sum has the closed form
    // purity(rho) - 1/n, attached here for comparison; empty otherwise.
    std::optional<double> closed_form;
};

TotalInfoReport total_information(const DensityMatrix& rho, const MubSet& mubs,
                                  const MeasureKind& kind);

// The same set of bases conjugated by a unitary: basis vectors v -> u v.
// Mutual unbiasedness is preserved; the Shannon total over the rotated set
// generally changes, which is the set-dependence the reports expose.
MubSet rotated(const MubSet& mubs, const ComplexMatrix& u);

// Tr rho^2 - 1/n: what the quadratic total evaluates to on any state. An
// invariant of unitary evolution, 1 - 1/n on pure states, 0 on the
// maximally mixed state.
double i_total_closed_form(const DensityMatrix& rho);

// Shannon total over the spin z / x / y bases for the pure qubit state at
// polar angle theta in the x-z plane, evaluated from its closed form
//   h2((1 - sin theta)/2) + h2(cos^2(theta/2)) + 1
// with h2 the binary entropy. Unlike the quadratic total this depends on
// theta, i.e. on the orientation of the state relative to the bases.
double h_total_theta(double theta);

}  // namespace qinfo
