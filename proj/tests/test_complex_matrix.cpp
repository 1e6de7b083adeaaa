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

#include <doctest.h>

#include "qinfo/complex_matrix.hpp"
#include "qinfo/errors.hpp"
#include "qinfo/rng.hpp"

using qinfo::ComplexMatrix;
using qinfo::cplx;

namespace {

ComplexMatrix random_matrix(qinfo::Rng& rng, std::size_t r, std::size_t c) {
    ComplexMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.gaussian_complex();
    return m;
}

}  // namespace

TEST_CASE("constructor validates shape and entries") {
    CHECK_THROWS_AS(ComplexMatrix(0, 2), qinfo::InvalidArgument);
    CHECK_THROWS_AS(ComplexMatrix(2, 2, {cplx(1), cplx(2)}),
                    qinfo::InvalidArgument);
    CHECK_THROWS_AS(
        ComplexMatrix(1, 1, {cplx(std::nan(""), 0.0)}), qinfo::InvalidArgument);
    ComplexMatrix m(2, 3);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m(1, 2) == cplx(0.0, 0.0));
}

TEST_CASE("identity") {
    auto id = ComplexMatrix::identity(3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(id(i, j) == (i == j ? cplx(1.0) : cplx(0.0)));
    CHECK(id.trace() == cplx(3.0));
    CHECK(id.is_hermitian());
    CHECK(id.is_unitary());
}

TEST_CASE("adjoint conjugate-transposes") {
    ComplexMatrix m(2, 3,
                    {cplx(1, 2), cplx(3, 0), cplx(0, -1),
                     cplx(5, 5), cplx(0, 0), cplx(-2, 1)});
    auto a = m.adjoint();
    CHECK(a.rows() == 3);
    CHECK(a.cols() == 2);
    CHECK(a(0, 0) == cplx(1, -2));
    CHECK(a(2, 0) == cplx(0, 1));
    CHECK(a(2, 1) == cplx(-2, -1));
}

TEST_CASE("product against a hand computation") {
    // [[1+i, 2], [0, 1-i]] * [[1, i], [1, 0]] = [[3+i, -1+i], [1-i, 0]]
    ComplexMatrix a(2, 2, {cplx(1, 1), cplx(2, 0), cplx(0, 0), cplx(1, -1)});
    ComplexMatrix b(2, 2, {cplx(1, 0), cplx(0, 1), cplx(1, 0), cplx(0, 0)});
    auto p = a * b;
    CHECK(p(0, 0) == cplx(3, 1));
    CHECK(p(0, 1) == cplx(-1, 1));
    CHECK(p(1, 0) == cplx(1, -1));
    CHECK(p(1, 1) == cplx(0, 0));
}

TEST_CASE("addition, subtraction, scalar multiple") {
    ComplexMatrix a(1, 2, {cplx(1, 0), cplx(0, 1)});
    ComplexMatrix b(1, 2, {cplx(2, 0), cplx(1, -1)});
    auto s = a + b;
    auto d = b - a;
    auto k = cplx(0, 2) * a;
    CHECK(s(0, 0) == cplx(3, 0));
    CHECK(s(0, 1) == cplx(1, 0));
    CHECK(d(0, 1) == cplx(1, -2));
    CHECK(k(0, 0) == cplx(0, 2));
    CHECK(k(0, 1) == cplx(-2, 0));
    CHECK_THROWS_AS(a + ComplexMatrix(2, 2), qinfo::DimensionMismatch);
    CHECK_THROWS_AS(a * b, qinfo::DimensionMismatch);
}

TEST_CASE("hermiticity and unitarity predicates on the spin matrices") {
    ComplexMatrix x(2, 2, {cplx(0), cplx(1), cplx(1), cplx(0)});
    ComplexMatrix y(2, 2, {cplx(0), cplx(0, -1), cplx(0, 1), cplx(0)});
    ComplexMatrix z(2, 2, {cplx(1), cplx(0), cplx(0), cplx(-1)});
    for (const auto* m : {&x, &y, &z}) {
        CHECK(m->is_hermitian());
        CHECK(m->is_unitary());
        CHECK(m->hermiticity_defect() == 0.0);
    }
    ComplexMatrix upper(2, 2, {cplx(0), cplx(1), cplx(0), cplx(0)});
    CHECK_FALSE(upper.is_hermitian());
    CHECK(upper.hermiticity_defect() == doctest::Approx(1.0));
    CHECK_FALSE(upper.is_unitary());
}

TEST_CASE("max_abs_diff") {
    ComplexMatrix a(2, 2, {cplx(1), cplx(2), cplx(3), cplx(4)});
    ComplexMatrix b(2, 2, {cplx(1), cplx(2, 0.5), cplx(3), cplx(4)});
    CHECK(qinfo::max_abs_diff(a, a) == 0.0);
    CHECK(qinfo::max_abs_diff(a, b) == doctest::Approx(0.5));
    CHECK_THROWS_AS(qinfo::max_abs_diff(a, ComplexMatrix(1, 2)),
                    qinfo::DimensionMismatch);
}

TEST_CASE("tensor product index layout") {
    ComplexMatrix a(2, 2, {cplx(1), cplx(2), cplx(3), cplx(4)});
    ComplexMatrix b(2, 2, {cplx(0), cplx(1, 1), cplx(-1), cplx(2)});
    auto t = qinfo::tensor_product(a, b);
    REQUIRE(t.rows() == 4);
    REQUIRE(t.cols() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(t(i, j) == a(i / 2, j / 2) * b(i % 2, j % 2));
}

TEST_CASE("tensor product is multiplicative") {
    qinfo::Rng rng(31u);
    auto a = random_matrix(rng, 2, 3);
    auto b = random_matrix(rng, 3, 2);
    auto c = random_matrix(rng, 2, 2);
    auto d = random_matrix(rng, 2, 3);
    // (a (x) c)(b (x) d) = ab (x) cd
    auto lhs = qinfo::tensor_product(a, c) * qinfo::tensor_product(b, d);
    auto rhs = qinfo::tensor_product(a * b, c * d);
    CHECK(qinfo::max_abs_diff(lhs, rhs) < 1e-12);
}

TEST_CASE("adjoint reverses products") {
    qinfo::Rng rng(77u);
    auto a = random_matrix(rng, 3, 3);
    auto b = random_matrix(rng, 3, 3);
    auto lhs = (a * b).adjoint();
    auto rhs = b.adjoint() * a.adjoint();
    CHECK(qinfo::max_abs_diff(lhs, rhs) < 1e-12);
}
