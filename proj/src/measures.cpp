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

#include "qinfo/measures.hpp"

#include <cmath>

#include "qinfo/errors.hpp"

namespace qinfo {

double shannon(const ProbDist& p) {
    double h = 0.0;
    for (double pi : p.probs()) {
        if (pi > 0.0) h -= pi * std::log2(pi);
    }
    return h;
}

double quadratic_info(const ProbDist& p, bool normalized) {
    const double n = static_cast<double>(p.size());
    const double inv_n = 1.0 / n;
    double v = 0.0;
    for (double pi : p.probs()) {
        const double d = pi - inv_n;
        v += d * d;
    }
    if (normalized) {
        if (p.size() < 2) return 0.0;
        v *= n / (n - 1.0) * std::log2(n);
    }
    return v;
}

std::string MeasureKind::name() const {
    switch (tag) {
        case MeasureTag::shannon: return "shannon";
        case MeasureTag::quadratic: return "quadratic";
        case MeasureTag::tsallis: return "tsallis";
        case MeasureTag::renyi: return "renyi";
        case MeasureTag::hlp: return "hlp";
    }
    return "?";
}

namespace {

void check_alpha(const MeasureKind& kind) {
    if (kind.tag == MeasureTag::shannon || kind.tag == MeasureTag::quadratic)
        return;
    if (!(kind.alpha > 0.0) || kind.alpha == 1.0) {
        throw BadAlpha("alpha must be positive and != 1, got " +
                       std::to_string(kind.alpha));
    }
}

double power_sum(const ProbDist& p, double alpha) {
    double s = 0.0;
    for (double pi : p.probs()) {
        if (pi > 0.0) s += std::pow(pi, alpha);
    }
    return s;
}

}  // namespace

double family_info(const ProbDist& p, const MeasureKind& kind) {
    check_alpha(kind);
    switch (kind.tag) {
        case MeasureTag::shannon:
            return shannon(p);
        case MeasureTag::quadratic:
            return quadratic_info(p);
        case MeasureTag::tsallis:
            return (power_sum(p, kind.alpha) - 1.0) / (1.0 - kind.alpha);
        case MeasureTag::renyi:
            return std::log2(power_sum(p, kind.alpha)) / (1.0 - kind.alpha);
        case MeasureTag::hlp:
            return std::pow(power_sum(p, kind.alpha), kind.alpha - 1.0);
    }
    throw InvalidArgument("unknown measure kind");
}

InfoFunctional functional_of(const MeasureKind& kind) {
    check_alpha(kind);
    return [kind](const ProbDist& p) { return family_info(p, kind); };
}

FaddeevResult faddeev_check(const InfoFunctional& measure, const ProbDist& p,
                            double q1, double q2, double tol) {
    const double pn = p[p.size() - 1];
    if (pn <= 0.0) {
        throw BadSplit("last outcome has zero probability; nothing to split");
    }
    if (q1 < 0.0 || q2 < 0.0 || std::abs((q1 + q2) - pn) > 1e-12) {
        throw BadSplit("split parts must be non-negative and sum to the last "
                       "outcome probability");
    }

    std::vector<double> refined(p.probs().begin(), p.probs().end() - 1);
    refined.push_back(q1);
    refined.push_back(q2);

    FaddeevResult r;
    r.lhs = measure(ProbDist(refined));
    r.rhs = measure(p) + pn * measure(ProbDist({q1 / pn, q2 / pn}));
    r.holds = std::abs(r.lhs - r.rhs) < tol;
    return r;
}

}  // namespace qinfo
