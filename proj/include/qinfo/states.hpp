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

#include "qinfo/complex_matrix.hpp"
#include "qinfo/eig.hpp"
#include "qinfo/tolerances.hpp"

namespace qinfo {

// Normalized state vector: sum |amplitude_i|^2 = 1 within tolerance.
class PureState {
public:
    explicit PureState(std::vector<cplx> amplitudes, double tol = kStructuralTol);

    std::size_t dim() const { return amps_.size(); }
    const std::vector<cplx>& amplitudes() const { return amps_; }
    const cplx& operator[](std::size_t i) const { return amps_[i]; }

private:
    std::vector<cplx> amps_;
};

// Qubit state cos(theta/2) |0> + e^{i phi} sin(theta/2) |1>.
PureState bloch_state(double theta, double phi = 0.0);

// Hermitian, unit-trace, positive-semidefinite matrix. All three structural
// invariants are checked at construction (eigenvalues may undershoot zero by
// at most the tolerance); instances are immutable afterwards.
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix m, double tol = kStructuralTol);

    static DensityMatrix from_pure(const PureState& psi);
    static DensityMatrix maximally_mixed(std::size_t n);
    // diag(w) for a classical probability vector w.
    static DensityMatrix diagonal(const std::vector<double>& weights);

    std::size_t dim() const { return m_.rows(); }
    const ComplexMatrix& matrix() const { return m_; }

private:
    ComplexMatrix m_;
};

// Tr rho^2, in [1/dim, 1].
double purity(const DensityMatrix& rho);

// -sum w_i log2 w_i over the eigenvalues of rho, in [0, log2 dim].
// Eigenvalues in [-1e-10, 0) are clamped to zero before evaluation.
double von_neumann_entropy(const DensityMatrix& rho);

// U rho U^dagger. Throws NotUnitary (tolerance 1e-10) or DimensionMismatch.
DensityMatrix evolve(const DensityMatrix& rho, const ComplexMatrix& u);

// Haar-distributed unitary, deterministic per seed: a matrix of independent
// standard complex Gaussians is orthonormalized column by column (modified
// Gram-Schmidt with positive normalization, i.e. the QR convention whose R
// has positive diagonal), which makes the Q factor uniform.
ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed);

// Haar-random pure state (normalized complex Gaussian vector).
PureState random_pure_state(std::size_t dim, std::uint64_t seed);

// Hilbert-Schmidt-distributed mixed state: G G^dagger / Tr(G G^dagger) for a
// square complex Ginibre matrix G.
DensityMatrix random_density_matrix(std::size_t dim, std::uint64_t seed);

// Qubit rotation about the x axis: exp(-i angle sigma_x / 2).
ComplexMatrix rotation_x(double angle);

}  // namespace qinfo
