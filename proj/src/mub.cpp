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

#include "qinfo/mub.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "qinfo/errors.hpp"
#include "qinfo/measurement.hpp"

namespace qinfo {

namespace {

// Basis k of the odd-prime family: column j holds the vector with
// components w^(k m^2 + j m) / sqrt(n). Exponents are reduced mod n before
// evaluating the root of unity so the arguments stay small.
Basis quadratic_phase_basis(std::size_t n, std::size_t k) {
    const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(n));
    ComplexMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t mm = 0; mm < n; ++mm) {
            const std::size_t e = (k * mm * mm + j * mm) % n;
            const double arg =
                2.0 * std::numbers::pi * static_cast<double>(e) /
                static_cast<double>(n);
            m(mm, j) = std::polar(inv_sqrt, arg);
        }
    }
    std::vector<std::string> labels(n);
    for (std::size_t j = 0; j < n; ++j)
        labels[j] = "b" + std::to_string(k) + ":" + std::to_string(j);
    return Basis(std::move(m), std::move(labels));
}

}  // namespace

MubSet construct_mubs(std::size_t n) {
    MubSet set;
    set.dim = n;
    if (n == 2) {
        set.bases = {z_basis(), x_basis(), y_basis()};
    } else if (n == 3 || n == 5 || n == 7) {
        set.bases.push_back(computational_basis(n));
        for (std::size_t k = 0; k < n; ++k)
            set.bases.push_back(quadratic_phase_basis(n, k));
    } else {
        throw UnsupportedDimension(
            "complete sets are implemented for prime dimensions 2, 3, 5, 7 "
            "(Wootters-Fields construction); got " + std::to_string(n));
    }

    const VerificationReport check = verify_mutually_unbiased(set);
    if (!check.ok) {
        throw NotUnitary("constructed bases " + std::to_string(check.basis_a) +
                         " and " + std::to_string(check.basis_b) +
                         " are not mutually unbiased (deviation " +
                         std::to_string(check.worst_deviation) + ")");
    }
    return set;
}

VerificationReport verify_mutually_unbiased(const MubSet& mubs, double tol) {
    const std::size_t n = mubs.dim;
    if (n == 0) throw InvalidArgument("basis set has dimension 0");
    for (const Basis& b : mubs.bases) {
        if (b.dim() != n) {
            throw DimensionMismatch("bases in the set differ in dimension");
        }
    }
    const double target = 1.0 / static_cast<double>(n);

    VerificationReport rep;
    rep.ok = true;
    for (std::size_t a = 0; a < mubs.bases.size(); ++a) {
        for (std::size_t b = a + 1; b < mubs.bases.size(); ++b) {
            const ComplexMatrix& va = mubs.bases[a].vectors();
            const ComplexMatrix& vb = mubs.bases[b].vectors();
            double worst = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    cplx ov{0.0, 0.0};
                    for (std::size_t r = 0; r < n; ++r)
                        ov += std::conj(va(r, i)) * vb(r, j);
                    worst = std::max(worst, std::abs(std::norm(ov) - target));
                }
            }
            if (worst > rep.worst_deviation) {
                rep.worst_deviation = worst;
                rep.basis_a = a;
                rep.basis_b = b;
            }
            if (worst > tol) rep.ok = false;
        }
    }
    return rep;
}

TotalInfoReport total_information(const DensityMatrix& rho, const MubSet& mubs,
                                  const MeasureKind& kind) {
    if (rho.dim() != mubs.dim) {
        throw DimensionMismatch("state dimension does not match basis set");
    }
    const InfoFunctional f = functional_of(kind);

    TotalInfoReport rep;
    rep.measure = kind;
    rep.per_basis.reserve(mubs.bases.size());
    for (std::size_t k = 0; k < mubs.bases.size(); ++k) {
        ProbDist dist = outcome_distribution(rho, mubs.bases[k]);
        const double v = f(dist);
        rep.per_basis.push_back({k, std::move(dist), v});
        rep.total += v;
    }
    if (kind.tag == MeasureTag::quadratic) {
        rep.closed_form = i_total_closed_form(rho);
    }
    return rep;
}

MubSet rotated(const MubSet& mubs, const ComplexMatrix& u) {
    if (u.rows() != mubs.dim || u.cols() != mubs.dim) {
        throw DimensionMismatch("rotation dimension does not match basis set");
    }
    if (!u.is_unitary(kStructuralTol)) {
        throw NotUnitary("rotation must be unitary");
    }
    MubSet out;
    out.dim = mubs.dim;
    out.bases.reserve(mubs.bases.size());
    for (const Basis& b : mubs.bases) {
        out.bases.emplace_back(u * b.vectors(), b.labels());
    }
    return out;
}

double i_total_closed_form(const DensityMatrix& rho) {
    return purity(rho) - 1.0 / static_cast<double>(rho.dim());
}

double h_total_theta(double theta) {
    const auto h2 = [](double p) {
        double h = 0.0;
        if (p > 0.0) h -= p * std::log2(p);
        if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
        return h;
    };
    const double c = std::cos(theta / 2.0);
    return h2((1.0 - std::sin(theta)) / 2.0) + h2(c * c) + 1.0;
}

}  // namespace qinfo
