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

#include <complex>
#include <cstddef>
#include <vector>

#include "qinfo/tolerances.hpp"

namespace qinfo {

using cplx = std::complex<double>;

// Dense complex matrix in row-major order. Sized for the small dimensions
// this library works at (a qudit is at most 8-dimensional here); nothing is
// blocked or vectorized.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    const std::vector<cplx>& entries() const { return data_; }

    ComplexMatrix adjoint() const;
    cplx trace() const;

    bool is_hermitian(double tol = kStructuralTol) const;
    bool is_unitary(double tol = kStructuralTol) const;

    // Largest absolute deviation of any entry from the Hermitian transpose.
    double hermiticity_defect() const;

    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(cplx s, const ComplexMatrix& a);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

// Max-abs entrywise distance, the metric used by all structural checks.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product: entry ((i,k),(j,l)) = a(i,j) * b(k,l).
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qinfo
