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

#include <functional>
#include <string>

#include "qinfo/prob.hpp"

namespace qinfo {

// All logarithms in this library are base 2; information is in bits, and
// 0 * log 0 is defined as 0.

// Shannon information H(p) = -sum p_i log2 p_i, in [0, log2 n].
double shannon(const ProbDist& p);

// Quadratic information I(p) = sum (p_i - 1/n)^2, in [0, (n-1)/n]. Zero iff
// uniform; maximal iff deterministic.
//
// With `normalized`, the value is scaled by (n/(n-1)) * log2(n) so that a
// deterministic distribution over n = 2^k outcomes carries exactly k bits.
// The scale factor is a documented convention of this library, chosen to
// reproduce that k-bit calibration; the unscaled form is the default.
double quadratic_info(const ProbDist& p, bool normalized = false);

enum class MeasureTag { shannon, quadratic, tsallis, renyi, hlp };

// Selector for the information functionals in this module. `alpha` is the
// order parameter of the tsallis/renyi/hlp families and must be positive
// and different from 1; it is ignored for shannon and quadratic.
struct MeasureKind {
    MeasureTag tag = MeasureTag::shannon;
    double alpha = 0.0;

    static MeasureKind shannon() { return {MeasureTag::shannon, 0.0}; }
    static MeasureKind quadratic() { return {MeasureTag::quadratic, 0.0}; }
    static MeasureKind tsallis(double alpha) { return {MeasureTag::tsallis, alpha}; }
    static MeasureKind renyi(double alpha) { return {MeasureTag::renyi, alpha}; }
    static MeasureKind hlp(double alpha) { return {MeasureTag::hlp, alpha}; }

    std::string name() const;
};

// Evaluates the selected functional:
//   tsallis:  S_a = (sum p_i^a - 1) / (1 - a)
//   renyi:    H_a = log2(sum p_i^a) / (1 - a)        (bits)
//   hlp:      M_a = (sum p_i^a)^(a-1)
// The hlp exponent is (a - 1), not the 1/(1-a) of the classical power-mean
// form; see the README for the rationale behind keeping it that way.
// Throws BadAlpha if alpha violates the MeasureKind constraint.
double family_info(const ProbDist& p, const MeasureKind& kind);

using InfoFunctional = std::function<double(const ProbDist&)>;

// The functional implementing `kind`, suitable for the measurement chains.
InfoFunctional functional_of(const MeasureKind& kind);

struct FaddeevResult {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
};

// Recursion (grouping) check for an information functional: splitting the
// last outcome p_n of `p` into parts q1 + q2 = p_n, compares
//   lhs = F(p_1, ..., p_{n-1}, q1, q2)
//   rhs = F(p_1, ..., p_n) + p_n * F(q1/p_n, q2/p_n)
// `holds` iff |lhs - rhs| < tol. Shannon information satisfies this
// identity for every split; it is the property that singles H out among
// continuous symmetric measures, and the quadratic measure fails it.
// Throws BadSplit unless q1 + q2 = p_n within 1e-12 and p_n > 0.
FaddeevResult faddeev_check(const InfoFunctional& measure, const ProbDist& p,
                            double q1, double q2, double tol = 1e-12);

}  // namespace qinfo
