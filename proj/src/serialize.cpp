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

#include "qinfo/serialize.hpp"

#include "qinfo/errors.hpp"

namespace qinfo {

using nlohmann::json;

namespace {

json complex_to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json measure_to_json(const MeasureKind& kind) {
    return {{"measure", kind.name()}, {"alpha", kind.alpha}};
}

MeasureKind measure_from_json(const json& j) {
    const std::string name = j.at("measure").get<std::string>();
    const double alpha = j.at("alpha").get<double>();
    if (name == "shannon") return MeasureKind::shannon();
    if (name == "quadratic") return MeasureKind::quadratic();
    if (name == "tsallis") return MeasureKind::tsallis(alpha);
    if (name == "renyi") return MeasureKind::renyi(alpha);
    if (name == "hlp") return MeasureKind::hlp(alpha);
    throw InvalidArgument("unknown measure name '" + name + "'");
}

}  // namespace

json to_json(const ComplexMatrix& m) {
    json entries = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(complex_to_json(m(r, c)));
        }
        entries.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

ComplexMatrix matrix_from_json(const json& j) {
    const std::size_t rows = j.at("rows").get<std::size_t>();
    const std::size_t cols = j.at("cols").get<std::size_t>();
    ComplexMatrix m(rows, cols);
    const json& entries = j.at("entries");
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = complex_from_json(entries.at(r).at(c));
        }
    }
    return m;
}

json to_json(const ProbDist& p) {
    json j = {{"probs", p.probs()}};
    if (p.has_labels()) j["labels"] = p.labels();
    return j;
}

ProbDist prob_dist_from_json(const json& j) {
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        labels = j.at("labels").get<std::vector<std::string>>();
    }
    return ProbDist(j.at("probs").get<std::vector<double>>(), std::move(labels));
}

json to_json(const Basis& b) {
    json vectors = json::array();
    for (std::size_t i = 0; i < b.dim(); ++i) {
        json vec = json::array();
        for (const cplx& z : b.vector(i)) vec.push_back(complex_to_json(z));
        vectors.push_back(std::move(vec));
    }
    return {{"labels", b.labels()}, {"vectors", vectors}};
}

Basis basis_from_json(const json& j) {
    const json& vectors = j.at("vectors");
    const std::size_t n = vectors.size();
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t r = 0; r < n; ++r) {
            m(r, i) = complex_from_json(vectors.at(i).at(r));
        }
    }
    return Basis(std::move(m), j.at("labels").get<std::vector<std::string>>());
}

json to_json(const MubSet& m) {
    json bases = json::array();
    for (const Basis& b : m.bases) bases.push_back(to_json(b));
    return {{"dim", m.dim}, {"bases", bases}};
}

MubSet mub_set_from_json(const json& j) {
    MubSet m;
    m.dim = j.at("dim").get<std::size_t>();
    for (const json& b : j.at("bases")) m.bases.push_back(basis_from_json(b));
    return m;
}

json to_json(const VerificationReport& r) {
    return {{"ok", r.ok},
            {"worst_deviation", r.worst_deviation},
            {"basis_a", r.basis_a},
            {"basis_b", r.basis_b}};
}

VerificationReport verification_report_from_json(const json& j) {
    VerificationReport r;
    r.ok = j.at("ok").get<bool>();
    r.worst_deviation = j.at("worst_deviation").get<double>();
    r.basis_a = j.at("basis_a").get<std::size_t>();
    r.basis_b = j.at("basis_b").get<std::size_t>();
    return r;
}

json to_json(const SequentialReport& r) {
    json branches = json::array();
    for (const Branch& b : r.branches) {
        branches.push_back({{"outcome", b.outcome},
                            {"probability", b.probability},
                            {"distribution", to_json(b.distribution)},
                            {"info", b.info}});
    }
    return {{"first_info", r.first_info},
            {"conditional_info", r.conditional_info},
            {"total_info", r.total_info},
            {"branches", branches}};
}

SequentialReport sequential_report_from_json(const json& j) {
    SequentialReport r;
    r.first_info = j.at("first_info").get<double>();
    r.conditional_info = j.at("conditional_info").get<double>();
    r.total_info = j.at("total_info").get<double>();
    for (const json& b : j.at("branches")) {
        r.branches.push_back(Branch{b.at("outcome").get<std::string>(),
                                    b.at("probability").get<double>(),
                                    prob_dist_from_json(b.at("distribution")),
                                    b.at("info").get<double>()});
    }
    return r;
}

json to_json(const TotalInfoReport& r) {
    json per_basis = json::array();
    for (const TotalInfoReport::Entry& e : r.per_basis) {
        per_basis.push_back({{"basis_index", e.basis_index},
                             {"distribution", to_json(e.distribution)},
                             {"info", e.info}});
    }
    json j = measure_to_json(r.measure);
    j["per_basis"] = std::move(per_basis);
    j["total"] = r.total;
    j["closed_form"] = r.closed_form ? json(*r.closed_form) : json(nullptr);
    return j;
}

TotalInfoReport total_info_report_from_json(const json& j) {
    TotalInfoReport r;
    r.measure = measure_from_json(j);
    for (const json& e : j.at("per_basis")) {
        r.per_basis.push_back({e.at("basis_index").get<std::size_t>(),
                               prob_dist_from_json(e.at("distribution")),
                               e.at("info").get<double>()});
    }
    r.total = j.at("total").get<double>();
    if (!j.at("closed_form").is_null()) {
        r.closed_form = j.at("closed_form").get<double>();
    }
    return r;
}

json to_json(const DrawReport& r) {
    return {{"sequence", r.sequence},
            {"cumulative_questions", r.cumulative_questions},
            {"questions_asked", r.questions_asked},
            {"questions_per_symbol", r.questions_per_symbol}};
}

DrawReport draw_report_from_json(const json& j) {
    DrawReport r;
    r.sequence = j.at("sequence").get<std::vector<std::uint32_t>>();
    r.cumulative_questions =
        j.at("cumulative_questions").get<std::vector<std::uint64_t>>();
    r.questions_asked = j.at("questions_asked").get<std::uint64_t>();
    r.questions_per_symbol = j.at("questions_per_symbol").get<double>();
    return r;
}

json to_json(const ScenarioReport& r) {
    json quantities = json::array();
    for (const Quantity& q : r.quantities) {
        quantities.push_back(
            {{"label", q.label},
             {"computed", q.computed},
             {"expected", q.expected ? json(*q.expected) : json(nullptr)},
             {"tol", q.tol},
             {"note", q.note},
             {"pass", q.pass}});
    }
    return {{"name", r.name}, {"quantities", quantities}, {"overall", r.overall}};
}

ScenarioReport scenario_report_from_json(const json& j) {
    ScenarioReport r;
    r.name = j.at("name").get<std::string>();
    r.overall = j.at("overall").get<bool>();
    for (const json& qj : j.at("quantities")) {
        Quantity q;
        q.label = qj.at("label").get<std::string>();
        q.computed = qj.at("computed").get<double>();
        if (!qj.at("expected").is_null()) {
            q.expected = qj.at("expected").get<double>();
        }
        q.tol = qj.at("tol").get<double>();
        q.note = qj.at("note").get<std::string>();
        q.pass = qj.at("pass").get<bool>();
        r.quantities.push_back(std::move(q));
    }
    return r;
}

}  // namespace qinfo
