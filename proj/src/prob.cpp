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

#include "qinfo/prob.hpp"

#include <cmath>

#include "qinfo/errors.hpp"

namespace qinfo {

namespace {
constexpr double kEntrySlack = 1e-12;
}

ProbDist::ProbDist(std::vector<double> probs, std::vector<std::string> labels,
                   double sum_tol)
    : probs_(std::move(probs)), labels_(std::move(labels)) {
    if (probs_.empty()) {
        throw NotNormalized("distribution must have at least one outcome");
    }
    if (!labels_.empty() && labels_.size() != probs_.size()) {
        throw InvalidArgument("label count does not match outcome count");
    }
    double total = 0.0;
    for (double& p : probs_) {
        if (!std::isfinite(p) || p < -kEntrySlack || p > 1.0 + kEntrySlack) {
            throw NotNormalized("probability " + std::to_string(p) +
                                " outside [0, 1]");
        }
        if (p < 0.0) p = 0.0;
        if (p > 1.0) p = 1.0;
        total += p;
    }
    if (std::abs(total - 1.0) > sum_tol) {
        throw NotNormalized("probabilities sum to " + std::to_string(total) +
                            ", not 1");
    }
}

ProbDist ProbDist::uniform(std::size_t n) {
    if (n == 0) throw NotNormalized("distribution must have at least one outcome");
    return ProbDist(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

std::string ProbDist::label(std::size_t i) const {
    if (i < labels_.size()) return labels_[i];
    return std::to_string(i);
}

}  // namespace qinfo
