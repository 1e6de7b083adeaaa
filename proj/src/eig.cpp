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

#include "qinfo/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qinfo/errors.hpp"

namespace qinfo {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) sum += std::norm(a(i, j));
    return std::sqrt(sum);
}

double frobenius_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) sum += std::norm(a(i, j));
    return std::sqrt(sum);
}

// One complex Jacobi rotation zeroing a(p,q). The 2x2 block
//   [ app  b e^{i phi} ]
//   [ b e^{-i phi} aqq ]
// is diagonalized by R = [[c, s e^{i phi}], [-s e^{-i phi}, c]] where
// (c, s) is the classical symmetric-Schur rotation for [[app, b], [b, aqq]].
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const cplx apq = a(p, q);
    const double b = std::abs(apq);
    if (b == 0.0) return;

    const cplx phase = apq / b;  // e^{i phi}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();

    const double delta = (app - aqq) / (2.0 * b);
    double t;  // tan of the rotation angle, smaller root for stability
    if (delta >= 0.0) {
        t = -1.0 / (delta + std::sqrt(delta * delta + 1.0));
    } else {
        t = 1.0 / (-delta + std::sqrt(delta * delta + 1.0));
    }
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    const std::size_t n = a.rows();

    // Column update: B = A R.
    for (std::size_t k = 0; k < n; ++k) {
        const cplx akp = a(k, p);
        const cplx akq = a(k, q);
        a(k, p) = c * akp - s * std::conj(phase) * akq;
        a(k, q) = s * phase * akp + c * akq;
    }
    // Row update: A' = R^dagger B.
    for (std::size_t k = 0; k < n; ++k) {
        const cplx apk = a(p, k);
        const cplx aqk = a(q, k);
        a(p, k) = c * apk - s * phase * aqk;
        a(q, k) = s * std::conj(phase) * apk + c * aqk;
    }
    // Pin the rotated entries to their exact values.
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = cplx{a(p, p).real(), 0.0};
    a(q, q) = cplx{a(q, q).real(), 0.0};

    // Accumulate eigenvectors: V = V R.
    for (std::size_t k = 0; k < n; ++k) {
        const cplx vkp = v(k, p);
        const cplx vkq = v(k, q);
        v(k, p) = c * vkp - s * std::conj(phase) * vkq;
        v(k, q) = s * phase * vkp + c * vkq;
    }
}

}  // namespace

ComplexMatrix Spectrum::reconstruct() const {
    const std::size_t n = eigenvalues.size();
    ComplexMatrix scaled = eigenvectors;  // columns scaled by eigenvalues
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= eigenvalues[j];
    return scaled * eigenvectors.adjoint();
}

Spectrum hermitian_eig(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) {
        throw NotHermitian("matrix is not square");
    }
    const double defect = m.hermiticity_defect();
    if (defect > tol) {
        throw NotHermitian("asymmetry " + std::to_string(defect) +
                           " exceeds tolerance");
    }

    const std::size_t n = m.rows();

    // Work on the exactly Hermitian average (A + A^dagger)/2 so the
    // tolerated asymmetry cannot leak into the iteration.
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = frobenius_norm(a);
    const double stop = std::max(1e-300, 1e-15 * scale);
    constexpr int kMaxSweeps = 64;

    bool converged = (n == 1) || off_diagonal_norm(a) <= stop;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
        converged = off_diagonal_norm(a) <= stop;
    }
    if (!converged) {
        throw NoConvergence("Jacobi sweep cap reached");
    }

    // Sort eigenvalues descending, carrying eigenvector columns along.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() > a(j, j).real();
    });

    Spectrum s;
    s.eigenvalues.resize(n);
    s.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        s.eigenvalues[j] = a(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i)
            s.eigenvectors(i, j) = v(i, order[j]);
    }
    return s;
}

}  // namespace qinfo
