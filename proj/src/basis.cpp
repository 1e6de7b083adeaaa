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

#include "qinfo/basis.hpp"

#include <cmath>
#include <utility>

#include "qinfo/eig.hpp"
#include "qinfo/errors.hpp"

namespace qinfo {

Basis::Basis(ComplexMatrix vectors, std::vector<std::string> labels, double tol)
    : vectors_(std::move(vectors)), labels_(std::move(labels)) {
    if (vectors_.rows() != vectors_.cols()) {
        throw NotUnitary("basis matrix must be square");
    }
    if (labels_.size() != vectors_.cols()) {
        throw InvalidArgument("label count does not match basis size");
    }
    if (!vectors_.is_unitary(tol)) {
        throw NotUnitary("basis vectors are not orthonormal within tolerance");
    }
}

std::vector<cplx> Basis::vector(std::size_t i) const {
    std::vector<cplx> v(dim());
    for (std::size_t r = 0; r < dim(); ++r) v[r] = vectors_(r, i);
    return v;
}

ComplexMatrix Basis::projector(std::size_t i) const {
    const std::size_t n = dim();
    ComplexMatrix p(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            p(r, c) = vectors_(r, i) * std::conj(vectors_(c, i));
    return p;
}

Basis z_basis() {
    ComplexMatrix m = ComplexMatrix::identity(2);
    return Basis(std::move(m), {"z+", "z-"});
}

Basis x_basis() {
    const double s = 1.0 / std::sqrt(2.0);
    ComplexMatrix m(2, 2);
    m(0, 0) = s;
    m(1, 0) = s;
    m(0, 1) = s;
    m(1, 1) = -s;
    return Basis(std::move(m), {"x+", "x-"});
}

Basis y_basis() {
    const double s = 1.0 / std::sqrt(2.0);
    ComplexMatrix m(2, 2);
    m(0, 0) = s;
    m(1, 0) = cplx{0.0, s};
    m(0, 1) = s;
    m(1, 1) = cplx{0.0, -s};
    return Basis(std::move(m), {"y+", "y-"});
}

Basis tilt_basis(double alpha) {
    const double c = std::cos(alpha / 2.0);
    const double s = std::sin(alpha / 2.0);
    ComplexMatrix m(2, 2);
    m(0, 0) = c;
    m(1, 0) = s;
    m(0, 1) = -s;
    m(1, 1) = c;
    return Basis(std::move(m), {"t+", "t-"});
}

Basis computational_basis(std::size_t n) {
    if (n < 1) throw InvalidArgument("basis dimension must be at least 1");
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
    return Basis(ComplexMatrix::identity(n), std::move(labels));
}

Basis eigenbasis(const DensityMatrix& rho) {
    Spectrum s = hermitian_eig(rho.matrix());
    std::vector<std::string> labels(rho.dim());
    for (std::size_t i = 0; i < labels.size(); ++i)
        labels[i] = "e" + std::to_string(i);
    return Basis(std::move(s.eigenvectors), std::move(labels));
}

Basis random_basis(std::size_t dim, std::uint64_t seed) {
    std::vector<std::string> labels(dim);
    for (std::size_t i = 0; i < dim; ++i) labels[i] = "r" + std::to_string(i);
    return Basis(random_unitary(dim, seed), std::move(labels));
}

}  // namespace qinfo
