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

#include "qinfo/states.hpp"

#include <cmath>

#include "qinfo/errors.hpp"
#include "qinfo/rng.hpp"

namespace qinfo {

PureState::PureState(std::vector<cplx> amplitudes, double tol)
    : amps_(std::move(amplitudes)) {
    if (amps_.empty()) throw InvalidArgument("state vector must be non-empty");
    double norm2 = 0.0;
    for (const cplx& a : amps_) norm2 += std::norm(a);
    if (std::abs(norm2 - 1.0) > tol) {
        throw NotNormalized("state norm^2 = " + std::to_string(norm2));
    }
}

PureState bloch_state(double theta, double phi) {
    const cplx up = std::cos(theta / 2.0);
    const cplx down = std::polar(std::sin(theta / 2.0), phi);
    // Renormalize: cos^2 + sin^2 can be off by an ulp for large angles.
    const double n = std::sqrt(std::norm(up) + std::norm(down));
    return PureState({up / n, down / n});
}

DensityMatrix::DensityMatrix(ComplexMatrix m, double tol) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) {
        throw NotHermitian("density matrix must be square");
    }
    if (!m_.is_hermitian(tol)) {
        throw NotHermitian("density matrix asymmetry exceeds tolerance");
    }
    const cplx tr = m_.trace();
    if (std::abs(tr - cplx{1.0, 0.0}) > tol) {
        throw NotNormalized("density matrix trace = " + std::to_string(tr.real()));
    }
    const Spectrum s = hermitian_eig(m_, tol);
    for (double w : s.eigenvalues) {
        if (w < -tol) {
            throw NotNormalized("negative eigenvalue " + std::to_string(w));
        }
    }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
    const std::size_t n = psi.dim();
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = psi[i] * std::conj(psi[j]);
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0 / static_cast<double>(n);
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::diagonal(const std::vector<double>& weights) {
    ComplexMatrix m(weights.size(), weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) m(i, i) = weights[i];
    return DensityMatrix(std::move(m));
}

double purity(const DensityMatrix& rho) {
    // Tr rho^2 = sum |rho_ij|^2 for Hermitian rho.
    double s = 0.0;
    const ComplexMatrix& m = rho.matrix();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) s += std::norm(m(i, j));
    return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    const Spectrum s = hermitian_eig(rho.matrix());
    double h = 0.0;
    for (double w : s.eigenvalues) {
        if (w < 0.0) w = 0.0;  // construction guarantees w >= -1e-10
        if (w > 0.0) h -= w * std::log2(w);
    }
    return h;
}

DensityMatrix evolve(const DensityMatrix& rho, const ComplexMatrix& u) {
    if (u.rows() != rho.dim() || u.cols() != rho.dim()) {
        throw DimensionMismatch("unitary dimension does not match state");
    }
    if (!u.is_unitary(kStructuralTol)) {
        throw NotUnitary("operator deviates from unitarity beyond tolerance");
    }
    return DensityMatrix(u * rho.matrix() * u.adjoint());
}

ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed) {
    if (dim < 2) throw InvalidArgument("unitary dimension must be at least 2");
    Rng rng(seed);
    // Columns of Gaussians, orthonormalized in order (modified Gram-Schmidt).
    std::vector<std::vector<cplx>> cols(dim, std::vector<cplx>(dim));
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t i = 0; i < dim; ++i) cols[j][i] = rng.gaussian_complex();

    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            cplx proj{0.0, 0.0};
            for (std::size_t i = 0; i < dim; ++i)
                proj += std::conj(cols[k][i]) * cols[j][i];
            for (std::size_t i = 0; i < dim; ++i) cols[j][i] -= proj * cols[k][i];
        }
        double norm2 = 0.0;
        for (std::size_t i = 0; i < dim; ++i) norm2 += std::norm(cols[j][i]);
        const double inv = 1.0 / std::sqrt(norm2);
        for (std::size_t i = 0; i < dim; ++i) cols[j][i] *= inv;
    }

    ComplexMatrix u(dim, dim);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t i = 0; i < dim; ++i) u(i, j) = cols[j][i];
    return u;
}

PureState random_pure_state(std::size_t dim, std::uint64_t seed) {
    if (dim < 1) throw InvalidArgument("state dimension must be at least 1");
    Rng rng(seed);
    std::vector<cplx> amps(dim);
    double norm2 = 0.0;
    for (cplx& a : amps) {
        a = rng.gaussian_complex();
        norm2 += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (cplx& a : amps) a *= inv;
    return PureState(std::move(amps));
}

DensityMatrix random_density_matrix(std::size_t dim, std::uint64_t seed) {
    Rng rng(seed);
    ComplexMatrix g(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) g(i, j) = rng.gaussian_complex();
    ComplexMatrix m = g * g.adjoint();
    const double tr = m.trace().real();
    return DensityMatrix((cplx{1.0 / tr, 0.0}) * m);
}

ComplexMatrix rotation_x(double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    ComplexMatrix u(2, 2);
    u(0, 0) = c;
    u(0, 1) = cplx{0.0, -s};
    u(1, 0) = cplx{0.0, -s};
    u(1, 1) = c;
    return u;
}

}  // namespace qinfo
