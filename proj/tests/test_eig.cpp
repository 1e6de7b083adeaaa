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

#include <cmath>
#include <cstdint>

#include <doctest.h>

#include "qinfo/complex_matrix.hpp"
#include "qinfo/eig.hpp"
#include "qinfo/errors.hpp"
#include "qinfo/rng.hpp"

using qinfo::ComplexMatrix;
using qinfo::cplx;

namespace {

ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
    qinfo::Rng rng(seed);
    ComplexMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.gaussian_complex();
    return cplx(0.5) * (g + g.adjoint());
}

double orthonormality_defect(const ComplexMatrix& v) {
    return qinfo::max_abs_diff(v.adjoint() * v,
                               ComplexMatrix::identity(v.cols()));
}

}  // namespace

TEST_CASE("diagonal matrix eigenvalues, descending order") {
    ComplexMatrix z(2, 2, {cplx(1), cplx(0), cplx(0), cplx(-1)});
    auto s = qinfo::hermitian_eig(z);
    REQUIRE(s.eigenvalues.size() == 2);
    CHECK(s.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(qinfo::max_abs_diff(s.reconstruct(), z) < 1e-12);
}

TEST_CASE("sigma_x eigenvalues are +-1") {
    ComplexMatrix x(2, 2, {cplx(0), cplx(1), cplx(1), cplx(0)});
    auto s = qinfo::hermitian_eig(x);
    CHECK(s.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(qinfo::max_abs_diff(s.reconstruct(), x) < 1e-12);
    CHECK(orthonormality_defect(s.eigenvectors) < 1e-12);
}

TEST_CASE("complex Hermitian 2x2 with known spectrum") {
    // [[2, -i], [i, 2]]: characteristic polynomial (2-l)^2 - 1, roots 3 and 1.
    ComplexMatrix m(2, 2, {cplx(2), cplx(0, -1), cplx(0, 1), cplx(2)});
    auto s = qinfo::hermitian_eig(m);
    CHECK(s.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(s.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(qinfo::max_abs_diff(s.reconstruct(), m) < 1e-12);
}

TEST_CASE("identity has a fully degenerate spectrum") {
    auto id = ComplexMatrix::identity(5);
    auto s = qinfo::hermitian_eig(id);
    for (double w : s.eigenvalues) CHECK(w == doctest::Approx(1.0));
    CHECK(orthonormality_defect(s.eigenvectors) < 1e-10);
}

TEST_CASE("partially degenerate diagonal") {
    ComplexMatrix m(3, 3);
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    m(2, 2) = 0.0;
    auto s = qinfo::hermitian_eig(m);
    CHECK(s.eigenvalues[0] == doctest::Approx(1.0));
    CHECK(s.eigenvalues[1] == doctest::Approx(1.0));
    CHECK(s.eigenvalues[2] == doctest::Approx(0.0));
    CHECK(qinfo::max_abs_diff(s.reconstruct(), m) < 1e-10);
}

TEST_CASE("random Hermitian matrices decompose to tolerance") {
    for (std::size_t n = 2; n <= 8; ++n) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            auto m = random_hermitian(n, 100 * n + seed);
            auto s = qinfo::hermitian_eig(m);
            REQUIRE(s.eigenvalues.size() == n);
            // Reconstruction, orthonormality, ordering, trace preservation.
            CHECK(qinfo::max_abs_diff(s.reconstruct(), m) < 1e-9);
            CHECK(orthonormality_defect(s.eigenvectors) < 1e-9);
            for (std::size_t i = 0; i + 1 < n; ++i)
                CHECK(s.eigenvalues[i] >= s.eigenvalues[i + 1]);
            double wsum = 0.0;
            for (double w : s.eigenvalues) wsum += w;
            CHECK(wsum == doctest::Approx(m.trace().real()).epsilon(1e-9));
        }
    }
}

TEST_CASE("non-Hermitian input is rejected") {
    ComplexMatrix upper(2, 2, {cplx(0), cplx(1), cplx(0), cplx(0)});
    CHECK_THROWS_AS(qinfo::hermitian_eig(upper), qinfo::NotHermitian);
    ComplexMatrix rect(2, 3);
    CHECK_THROWS_AS(qinfo::hermitian_eig(rect), qinfo::NotHermitian);
}

TEST_CASE("1x1 matrix") {
    ComplexMatrix m(1, 1, {cplx(-2.5)});
    auto s = qinfo::hermitian_eig(m);
    CHECK(s.eigenvalues[0] == doctest::Approx(-2.5));
    CHECK(std::abs(std::abs(s.eigenvectors(0, 0)) - 1.0) < 1e-12);
}
