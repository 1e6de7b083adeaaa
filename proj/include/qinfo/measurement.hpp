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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qinfo/basis.hpp"
#include "qinfo/measures.hpp"
#include "qinfo/prob.hpp"
#include "qinfo/states.hpp"

namespace qinfo {

// Born probabilities p_i = <i|rho|i> of a projective measurement in the
// given basis. Labels are taken from the basis.
ProbDist outcome_distribution(const DensityMatrix& rho, const Basis& basis);

// State after observing the given outcome. For a rank-one projective
// measurement the update rule P rho P / p collapses to the projector
// |i><i| itself, independent of the input state.
// Throws ZeroProbabilityOutcome if the outcome has probability below
// kZeroProbTol.
DensityMatrix posterior_state(const DensityMatrix& rho, const Basis& basis,
                              std::size_t outcome);

// Measure in a basis and keep one outcome, discarding the rest of the beam.
struct FilterResult {
    double fraction;                     // probability of passing the filter
    std::optional<DensityMatrix> state;  // posterior, absent if fraction ~ 0
};

FilterResult apply_filter(const DensityMatrix& rho, const Basis& basis,
                          std::size_t keep);

// One branch of a two-step acquisition: the first property gave `outcome`
// with probability `probability`, and `distribution` is what the second
// property then looks like.
struct Branch {
    std::string outcome;
    double probability;
    ProbDist distribution;
    double info;  // info measure applied to `distribution`
};

// Information balance of reading one property and then another:
//   total = f(first marginal) + sum_i p_i f(second | first = i).
// Branches with probability below kZeroProbTol are dropped; they carry no
// weight and conditioning on them is undefined.
struct SequentialReport {
    double first_info = 0.0;
    double conditional_info = 0.0;
    double total_info = 0.0;
    std::vector<Branch> branches;
};

SequentialReport sequential_info(const DensityMatrix& rho, const Basis& first,
                                 const Basis& second,
                                 const InfoFunctional& f = functional_of(
                                     MeasureKind::shannon()));

// | total(a then b) - total(b then a) |. Zero for classical (commuting)
// situations; generally nonzero for incompatible bases.
double order_asymmetry(const DensityMatrix& rho, const Basis& a,
                       const Basis& b, const InfoFunctional& f);

// Classical joint distribution over two properties, row-major. Rows are the
// outcomes of property A, columns those of property B.
class JointTable {
public:
    JointTable(std::vector<std::string> row_labels,
               std::vector<std::string> col_labels, std::vector<double> probs,
               double sum_tol = 1e-9);

    std::size_t rows() const { return row_labels_.size(); }
    std::size_t cols() const { return col_labels_.size(); }
    double operator()(std::size_t r, std::size_t c) const {
        return p_[r * cols() + c];
    }
    const std::vector<std::string>& row_labels() const { return row_labels_; }
    const std::vector<std::string>& col_labels() const { return col_labels_; }

    ProbDist row_marginal() const;  // distribution of property A
    ProbDist col_marginal() const;  // distribution of property B

    // Distribution of B given A = r (throws ZeroProbabilityOutcome if the
    // row has no weight), and of A given B = c.
    ProbDist given_row(std::size_t r) const;
    ProbDist given_col(std::size_t c) const;

private:
    std::vector<std::string> row_labels_;
    std::vector<std::string> col_labels_;
    std::vector<double> p_;
};

// Reading both properties off a joint table in one order: first the marginal
// of the property read first, then the conditional of the other given each
// outcome. rows_first = true reads property A first.
SequentialReport classical_chain(const JointTable& table,
                                 const InfoFunctional& f, bool rows_first);

// Both acquisition orders from the same joint table. With Shannon's measure
// the two totals always agree (chain rule); that is the classical
// order-indifference this pair exists to exhibit.
std::pair<SequentialReport, SequentialReport> classical_joint_info(
    const JointTable& table,
    const InfoFunctional& f = functional_of(MeasureKind::shannon()));

}  // namespace qinfo
