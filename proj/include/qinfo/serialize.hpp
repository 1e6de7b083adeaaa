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

#include <json.hpp>

#include "qinfo/coding.hpp"
#include "qinfo/complex_matrix.hpp"
#include "qinfo/measurement.hpp"
#include "qinfo/mub.hpp"
#include "qinfo/prob.hpp"
#include "qinfo/scenarios.hpp"

// JSON forms for the report and data types the CLI emits. Complex vectors
// and matrices are written as [re, im] pairs; a basis is its list of
// vectors plus outcome labels. Every to_json here has a from_json partner
// and the pair round-trips exactly (numbers are emitted with round-trip
// precision).

namespace qinfo {

nlohmann::json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ProbDist& p);
ProbDist prob_dist_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Basis& b);
Basis basis_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MubSet& m);
MubSet mub_set_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerificationReport& r);
VerificationReport verification_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SequentialReport& r);
SequentialReport sequential_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TotalInfoReport& r);
TotalInfoReport total_info_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DrawReport& r);
DrawReport draw_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ScenarioReport& r);
ScenarioReport scenario_report_from_json(const nlohmann::json& j);

}  // namespace qinfo
