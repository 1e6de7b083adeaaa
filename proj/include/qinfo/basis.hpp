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
#include <string>
#include <vector>

#include "qinfo/complex_matrix.hpp"
#include "qinfo/states.hpp"
#include "qinfo/tolerances.hpp"

namespace qinfo {

// An orthonormal measurement basis. Vectors are stored as the columns of a
// unitary matrix; column i is the i-th basis vector and carries a label used
// in reports ("z+", "x-", "2", ...).
class Basis {
public:
    // Throws NotUnitary if the columns are not orthonormal within tol.
    Basis(ComplexMatrix vectors, std::vector<std::string> labels,
          double tol = kStructuralTol);

    std::size_t dim() const { return vectors_.rows(); }
    const ComplexMatrix& vectors() const { return vectors_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }

    // Column i as a state vector.
    std::vector<cplx> vector(std::size_t i) const;

    // Projector |i><i| onto basis vector i.
    ComplexMatrix projector(std::size_t i) const;

private:
    ComplexMatrix vectors_;
    std::vector<std::string> labels_;
};

// Spin along z: the computational basis of a qubit, labels "z+", "z-".
Basis z_basis();

// Spin along x: (|z+> +- |z->)/sqrt(2), labels "x+", "x-".
Basis x_basis();

// Spin along y: (|z+> +- i|z->)/sqrt(2), labels "y+", "y-".
Basis y_basis();

// Qubit basis tilted by alpha from z in the x-z plane:
//   |t+> = ( cos(alpha/2), sin(alpha/2) )
//   |t-> = ( -sin(alpha/2), cos(alpha/2) )
// Labels "t+", "t-". tilt_basis(0) equals z_basis up to labels.
Basis tilt_basis(double alpha);

// Standard basis of dimension n, labels "0" .. "n-1".
Basis computational_basis(std::size_t n);

// Eigenbasis of a density matrix, eigenvalues in descending order.
// Labels "e0" .. "e(n-1)".
Basis eigenbasis(const DensityMatrix& rho);

// Haar-random basis: the columns of random_unitary(dim, seed).
// Labels "r0" .. "r(n-1)".
Basis random_basis(std::size_t dim, std::uint64_t seed);

}  // namespace qinfo
