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

#include <cstddef>
#include <string>
#include <vector>

namespace qinfo {

// Finite probability distribution, validated eagerly: entries may undershoot
// 0 or overshoot 1 by at most 1e-12 (they are clamped into [0,1]), and the
// total must be 1 within `sum_tol`. Labels are optional outcome names.
class ProbDist {
public:
    explicit ProbDist(std::vector<double> probs,
                      std::vector<std::string> labels = {},
                      double sum_tol = 1e-9);

    static ProbDist uniform(std::size_t n);

    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }
    const std::vector<double>& probs() const { return probs_; }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    // Outcome name if labels were provided, otherwise the index as text.
    std::string label(std::size_t i) const;

private:
    std::vector<double> probs_;
    std::vector<std::string> labels_;
};

}  // namespace qinfo
