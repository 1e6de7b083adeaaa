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

#include "qinfo/measurement.hpp"

#include <cmath>
#include <utility>

#include "qinfo/errors.hpp"
#include "qinfo/tolerances.hpp"

namespace qinfo {

namespace {

// <i|rho|i> for basis column i. The imaginary part vanishes for Hermitian
// rho; tiny negative real parts from roundoff are clamped.
double born_probability(const DensityMatrix& rho, const Basis& basis,
                        std::size_t i) {
    const ComplexMatrix& m = rho.matrix();
    const ComplexMatrix& v = basis.vectors();
    cplx acc{0.0, 0.0};
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            acc += std::conj(v(r, i)) * m(r, c) * v(c, i);
    double p = acc.real();
    if (p < 0.0) p = 0.0;
    if (p > 1.0) p = 1.0;
    return p;
}

}  // namespace

ProbDist outcome_distribution(const DensityMatrix& rho, const Basis& basis) {
    if (rho.dim() != basis.dim()) {
        throw DimensionMismatch("basis dimension does not match state");
    }
    std::vector<double> p(basis.dim());
    for (std::size_t i = 0; i < p.size(); ++i) {
        p[i] = born_probability(rho, basis, i);
    }
    return ProbDist(std::move(p), basis.labels());
}

DensityMatrix posterior_state(const DensityMatrix& rho, const Basis& basis,
                              std::size_t outcome) {
    if (rho.dim() != basis.dim()) {
        throw DimensionMismatch("basis dimension does not match state");
    }
    if (outcome >= basis.dim()) {
        throw InvalidArgument("outcome index out of range");
    }
    const double p = born_probability(rho, basis, outcome);
    if (p <= kZeroProbTol) {
        throw ZeroProbabilityOutcome(
            "cannot condition on outcome '" + basis.label(outcome) +
            "' with probability " + std::to_string(p));
    }
    return DensityMatrix(basis.projector(outcome));
}

FilterResult apply_filter(const DensityMatrix& rho, const Basis& basis,
                          std::size_t keep) {
    if (rho.dim() != basis.dim()) {
        throw DimensionMismatch("basis dimension does not match state");
    }
    if (keep >= basis.dim()) {
        throw InvalidArgument("outcome index out of range");
    }
    const double p = born_probability(rho, basis, keep);
    FilterResult r;
    r.fraction = p;
    if (p > kZeroProbTol) {
        r.state = DensityMatrix(basis.projector(keep));
    }
    return r;
}

SequentialReport sequential_info(const DensityMatrix& rho, const Basis& first,
                                 const Basis& second, const InfoFunctional& f) {
    const ProbDist pa = outcome_distribution(rho, first);

    SequentialReport rep;
    rep.first_info = f(pa);
    rep.conditional_info = 0.0;
    for (std::size_t i = 0; i < pa.size(); ++i) {
        const double pi = pa[i];
        if (pi <= kZeroProbTol) continue;
        const DensityMatrix post = posterior_state(rho, first, i);
        ProbDist pb = outcome_distribution(post, second);
        const double info = f(pb);
        rep.conditional_info += pi * info;
        rep.branches.push_back(Branch{pa.label(i), pi, std::move(pb), info});
    }
    rep.total_info = rep.first_info + rep.conditional_info;
    return rep;
}

double order_asymmetry(const DensityMatrix& rho, const Basis& a,
                       const Basis& b, const InfoFunctional& f) {
    const double ab = sequential_info(rho, a, b, f).total_info;
    const double ba = sequential_info(rho, b, a, f).total_info;
    return std::abs(ab - ba);
}

JointTable::JointTable(std::vector<std::string> row_labels,
                       std::vector<std::string> col_labels,
                       std::vector<double> probs, double sum_tol)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      p_(std::move(probs)) {
    if (row_labels_.empty() || col_labels_.empty()) {
        throw InvalidArgument("joint table must have at least one row and column");
    }
    if (p_.size() != row_labels_.size() * col_labels_.size()) {
        throw DimensionMismatch("joint table entry count does not match labels");
    }
    double sum = 0.0;
    for (double& v : p_) {
        if (!(v >= -1e-12) || !(v <= 1.0 + 1e-12)) {
            throw NotNormalized("joint probability outside [0, 1]");
        }
        if (v < 0.0) v = 0.0;
        sum += v;
    }
    if (std::abs(sum - 1.0) > sum_tol) {
        throw NotNormalized("joint probabilities sum to " + std::to_string(sum));
    }
}

ProbDist JointTable::row_marginal() const {
    std::vector<double> m(rows(), 0.0);
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < cols(); ++c) m[r] += (*this)(r, c);
    return ProbDist(std::move(m), row_labels_);
}

ProbDist JointTable::col_marginal() const {
    std::vector<double> m(cols(), 0.0);
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < cols(); ++c) m[c] += (*this)(r, c);
    return ProbDist(std::move(m), col_labels_);
}

ProbDist JointTable::given_row(std::size_t r) const {
    if (r >= rows()) throw InvalidArgument("row index out of range");
    double w = 0.0;
    for (std::size_t c = 0; c < cols(); ++c) w += (*this)(r, c);
    if (w <= kZeroProbTol) {
        throw ZeroProbabilityOutcome("cannot condition on zero-weight row '" +
                                     row_labels_[r] + "'");
    }
    std::vector<double> q(cols());
    for (std::size_t c = 0; c < cols(); ++c) q[c] = (*this)(r, c) / w;
    return ProbDist(std::move(q), col_labels_);
}

ProbDist JointTable::given_col(std::size_t c) const {
    if (c >= cols()) throw InvalidArgument("column index out of range");
    double w = 0.0;
    for (std::size_t r = 0; r < rows(); ++r) w += (*this)(r, c);
    if (w <= kZeroProbTol) {
        throw ZeroProbabilityOutcome("cannot condition on zero-weight column '" +
                                     col_labels_[c] + "'");
    }
    std::vector<double> q(rows());
    for (std::size_t r = 0; r < rows(); ++r) q[r] = (*this)(r, c) / w;
    return ProbDist(std::move(q), row_labels_);
}

SequentialReport classical_chain(const JointTable& table,
                                 const InfoFunctional& f, bool rows_first) {
    const ProbDist marginal =
        rows_first ? table.row_marginal() : table.col_marginal();

    SequentialReport rep;
    rep.first_info = f(marginal);
    for (std::size_t i = 0; i < marginal.size(); ++i) {
        const double w = marginal[i];
        if (w <= kZeroProbTol) continue;
        ProbDist cond = rows_first ? table.given_row(i) : table.given_col(i);
        const double info = f(cond);
        rep.conditional_info += w * info;
        rep.branches.push_back(Branch{marginal.label(i), w, std::move(cond), info});
    }
    rep.total_info = rep.first_info + rep.conditional_info;
    return rep;
}

std::pair<SequentialReport, SequentialReport> classical_joint_info(
    const JointTable& table, const InfoFunctional& f) {
    return {classical_chain(table, f, true), classical_chain(table, f, false)};
}

}  // namespace qinfo
