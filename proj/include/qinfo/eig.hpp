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

#include <vector>

#include "qinfo/complex_matrix.hpp"
#include "qinfo/tolerances.hpp"

namespace qinfo {

// Eigendecomposition of a Hermitian matrix: real eigenvalues in descending
// order, matching eigenvectors as columns. Satisfies
//   V diag(lambda) V^dagger == input   (max-abs, 1e-9)
// and V has orthonormal columns to the same tolerance.
struct Spectrum {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;

    ComplexMatrix reconstruct() const;
};

// Cyclic Jacobi diagonalization with complex (phase-carrying) rotations.
// At the dimensions used here (n <= 8) Jacobi is slower than tridiagonal
// methods but unconditionally stable and simple to verify.
//
// Throws NotHermitian if the input is not square or deviates from its
// adjoint by more than `tol`; NoConvergence if the sweep cap is reached.
Spectrum hermitian_eig(const ComplexMatrix& m, double tol = kStructuralTol);

}  // namespace qinfo
