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

// Command-line front end. Exit codes: 0 = success (and, for scenarios, all
// expectations met), 1 = a scenario expectation failed, 2 = usage or
// validation error.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include "qinfo/coding.hpp"
#include "qinfo/errors.hpp"
#include "qinfo/format.hpp"
#include "qinfo/measures.hpp"
#include "qinfo/mub.hpp"
#include "qinfo/scenarios.hpp"
#include "qinfo/serialize.hpp"
#include "qinfo/states.hpp"

namespace {

struct GlobalOpts {
    std::string format = "text";
    int precision = 4;
};

qinfo::MeasureKind make_kind(const std::string& name, double alpha) {
    if (name == "shannon") return qinfo::MeasureKind::shannon();
    if (name == "quadratic") return qinfo::MeasureKind::quadratic();
    if (name == "tsallis") return qinfo::MeasureKind::tsallis(alpha);
    if (name == "renyi") return qinfo::MeasureKind::renyi(alpha);
    if (name == "hlp") return qinfo::MeasureKind::hlp(alpha);
    throw qinfo::InvalidArgument("unknown measure '" + name + "'");
}

void run_entropy(const GlobalOpts& g, const std::string& dist,
                 const std::string& measure, double alpha, bool normalized) {
    const qinfo::ProbDist p(qinfo::parse_double_list(dist));
    double value = 0.0;
    if (measure == "quadratic" && normalized) {
        value = qinfo::quadratic_info(p, true);
    } else {
        if (normalized) {
            throw qinfo::InvalidArgument(
                "--normalized applies to the quadratic measure only");
        }
        value = qinfo::family_info(p, make_kind(measure, alpha));
    }

    if (g.format == "json") {
        nlohmann::json j = {{"measure", measure},
                            {"alpha", alpha},
                            {"normalized", normalized},
                            {"dist", p.probs()},
                            {"value", value}};
        std::cout << j.dump(2) << "\n";
    } else if (g.format == "csv") {
        std::cout << "measure,alpha,value\n"
                  << measure << "," << qinfo::format_full(alpha) << ","
                  << qinfo::format_full(value) << "\n";
    } else {
        std::cout << qinfo::format_double(value, g.precision) << "\n";
    }
}

void run_mub(const GlobalOpts& g, std::size_t dim, bool verify, bool dump) {
    const qinfo::MubSet mubs = qinfo::construct_mubs(dim);
    if (dump) {
        std::cout << qinfo::to_json(mubs).dump(2) << "\n";
        return;
    }
    const qinfo::VerificationReport rep =
        qinfo::verify_mutually_unbiased(mubs);
    (void)verify;  // construction already verifies; the flag asks to print

    if (g.format == "json") {
        std::cout << qinfo::to_json(rep).dump(2) << "\n";
    } else if (g.format == "csv") {
        std::cout << "dim,bases,ok,worst_deviation\n"
                  << dim << "," << mubs.bases.size() << ","
                  << (rep.ok ? 1 : 0) << ","
                  << qinfo::format_full(rep.worst_deviation) << "\n";
    } else {
        std::cout << "dim " << dim << ": " << mubs.bases.size()
                  << " mutually unbiased bases\n"
                  << "ok: " << (rep.ok ? "true" : "false") << "\n"
                  << "worst overlap deviation: "
                  << qinfo::format_double(rep.worst_deviation, g.precision)
                  << "\n";
    }
}

int emit_scenario(const GlobalOpts& g, const qinfo::ScenarioReport& rep) {
    if (g.format == "json") {
        std::cout << qinfo::to_json(rep).dump(2) << "\n";
    } else if (g.format == "csv") {
        std::cout << qinfo::to_csv(rep);
    } else {
        std::cout << qinfo::to_text(rep, g.precision);
    }
    return rep.overall ? 0 : 1;
}

void run_sweep(const GlobalOpts& g, std::size_t steps, const std::string& kind,
               const std::string& out_path) {
    const qinfo::MubSet mubs = qinfo::construct_mubs(2);

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            throw qinfo::InvalidArgument("cannot open '" + out_path +
                                         "' for writing");
        }
        out = &file;
    }

    const bool want_h = kind != "i-total";
    const bool want_i = kind != "h-total";

    nlohmann::json rows = nlohmann::json::array();
    if (g.format != "json") {
        *out << "theta";
        if (want_h) *out << ",h_total";
        if (want_i) *out << ",i_total";
        *out << "\n";
    }
    for (std::size_t i = 0; i < steps; ++i) {
        const double theta = std::numbers::pi * static_cast<double>(i) /
                             static_cast<double>(steps - 1);
        const qinfo::DensityMatrix rho =
            qinfo::DensityMatrix::from_pure(qinfo::bloch_state(theta));
        const double h =
            want_h ? qinfo::total_information(rho, mubs,
                                              qinfo::MeasureKind::shannon())
                         .total
                   : 0.0;
        const double iv =
            want_i ? qinfo::total_information(rho, mubs,
                                              qinfo::MeasureKind::quadratic())
                         .total
                   : 0.0;
        if (g.format == "json") {
            nlohmann::json row = {{"theta", theta}};
            if (want_h) row["h_total"] = h;
            if (want_i) row["i_total"] = iv;
            rows.push_back(std::move(row));
        } else {
            *out << qinfo::format_full(theta);
            if (want_h) *out << "," << qinfo::format_full(h);
            if (want_i) *out << "," << qinfo::format_full(iv);
            *out << "\n";
        }
    }
    if (g.format == "json") *out << rows.dump(2) << "\n";
}

void run_urn(const GlobalOpts& g, const std::string& probs, std::uint64_t n,
             std::size_t block, std::uint64_t seed) {
    const qinfo::SymbolSource source{
        qinfo::ProbDist(qinfo::parse_double_list(probs))};
    const qinfo::QuestionTree tree = qinfo::build_question_tree(source, block);
    const qinfo::DrawReport rep =
        qinfo::simulate_drawings(source, n, seed, tree);

    if (g.format == "json") {
        nlohmann::json j = qinfo::to_json(rep);
        j["block"] = tree.block();
        j["expected_depth_per_block"] = tree.expected_depth();
        j["block_entropy"] = tree.block_entropy();
        std::cout << j.dump(2) << "\n";
    } else if (g.format == "csv") {
        std::cout << "draw_index,symbol,cumulative_questions\n";
        for (std::size_t i = 0; i < rep.sequence.size(); ++i) {
            std::cout << i << "," << source.probs.label(rep.sequence[i]) << ","
                      << rep.cumulative_questions[i] << "\n";
        }
    } else {
        std::cout << "draws: " << n << "\n"
                  << "questions asked: " << rep.questions_asked << "\n"
                  << "questions per symbol: "
                  << qinfo::format_double(rep.questions_per_symbol, g.precision)
                  << "\n"
                  << "expected per symbol: "
                  << qinfo::format_double(tree.expected_depth() /
                                              static_cast<double>(tree.block()),
                                          g.precision)
                  << "\n"
                  << "source entropy (bits/symbol): "
                  << qinfo::format_double(qinfo::shannon(source.probs),
                                          g.precision)
                  << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum and classical information measures toolkit"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--precision", g.precision,
                   "significant digits in text output")
        ->envname("QINFO_PRECISION")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();

    int rc = 0;

    // entropy
    std::string dist;
    std::string measure = "shannon";
    double alpha = 2.0;
    bool normalized = false;
    CLI::App* entropy = app.add_subcommand("entropy",
                                           "evaluate an information measure");
    entropy->fallthrough();
    entropy->add_option("--dist", dist, "comma-separated probabilities")
        ->required();
    entropy->add_option("--measure", measure, "measure name")
        ->check(CLI::IsMember({"shannon", "quadratic", "tsallis", "renyi", "hlp"}))
        ->capture_default_str();
    entropy->add_option("--alpha", alpha, "order parameter for the families")
        ->capture_default_str();
    entropy->add_flag("--normalized", normalized,
                      "scale the quadratic measure to k bits at n = 2^k");
    entropy->callback([&] { run_entropy(g, dist, measure, alpha, normalized); });

    // mub
    std::size_t mub_dim = 2;
    bool mub_verify = false;
    bool mub_dump = false;
    CLI::App* mub = app.add_subcommand(
        "mub", "construct and verify complete sets of unbiased bases");
    mub->fallthrough();
    mub->add_option("--dim", mub_dim, "dimension (prime, at most 7)")
        ->required();
    mub->add_flag("--verify", mub_verify, "print the verification report");
    mub->add_flag("--dump", mub_dump, "print the bases as JSON");
    mub->callback([&] { run_mub(g, mub_dim, mub_verify, mub_dump); });

    // scenario
    std::string scenario_name;
    double spin_alpha = std::numbers::pi / 3.0;
    std::size_t inv_dim = 2;
    std::size_t inv_trials = 100;
    std::uint64_t seed = 0;
    std::size_t steps = 50;
    double cons_angle = 0.7;
    CLI::App* scenario =
        app.add_subcommand("scenario", "run a worked measurement experiment");
    scenario->fallthrough();
    scenario
        ->add_option("name", scenario_name,
                     "one of: filters, spin-order, balls, invariance, "
                     "conservation")
        ->required()
        ->check(CLI::IsMember(
            {"filters", "spin-order", "balls", "invariance", "conservation"}));
    scenario->add_option("--alpha", spin_alpha,
                         "tilt angle in radians (spin-order)")
        ->capture_default_str();
    scenario->add_option("--dim", inv_dim, "dimension (invariance)")
        ->capture_default_str();
    scenario->add_option("--trials", inv_trials, "trial count (invariance)")
        ->capture_default_str();
    scenario->add_option("--seed", seed, "RNG seed (invariance)")
        ->capture_default_str();
    scenario->add_option("--steps", steps, "evolution steps (conservation)")
        ->capture_default_str();
    scenario->add_option("--angle", cons_angle,
                         "x-rotation angle per step (conservation)")
        ->capture_default_str();
    scenario->callback([&] {
        qinfo::ScenarioReport rep;
        if (scenario_name == "filters") {
            rep = qinfo::run_filter_cascade();
        } else if (scenario_name == "spin-order") {
            rep = qinfo::run_spin_order(spin_alpha);
        } else if (scenario_name == "balls") {
            rep = qinfo::run_classical_balls();
        } else if (scenario_name == "invariance") {
            rep = qinfo::run_invariance_sweep(inv_dim, inv_trials, seed);
        } else {
            rep = qinfo::run_conservation(
                qinfo::DensityMatrix::diagonal({0.75, 0.25}),
                qinfo::rotation_x(cons_angle), steps);
        }
        rc = emit_scenario(g, rep);
    });

    // sweep
    std::size_t sweep_steps = 64;
    std::string sweep_kind = "both";
    std::string sweep_out;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "tabulate the totals over the polar angle");
    sweep->fallthrough();
    sweep->add_option("--steps", sweep_steps, "grid points on [0, pi]")
        ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}))
        ->capture_default_str();
    sweep->add_option("--kind", sweep_kind, "which column(s) to emit")
        ->check(CLI::IsMember({"h-total", "i-total", "both"}))
        ->capture_default_str();
    sweep->add_option("--out", sweep_out, "output path (default stdout)");
    sweep->callback([&] { run_sweep(g, sweep_steps, sweep_kind, sweep_out); });

    // simulate urn
    std::string urn_probs;
    std::uint64_t urn_n = 1000;
    std::size_t urn_block = 1;
    std::uint64_t urn_seed = 0;
    CLI::App* simulate =
        app.add_subcommand("simulate", "Monte Carlo simulations");
    simulate->require_subcommand(1);
    simulate->fallthrough();
    CLI::App* urn = simulate->add_subcommand(
        "urn", "draw from an urn and count yes/no questions");
    urn->fallthrough();
    urn->add_option("--probs", urn_probs, "comma-separated color proportions")
        ->required();
    urn->add_option("--n", urn_n, "number of draws")->capture_default_str();
    urn->add_option("--block", urn_block, "symbols identified per tree walk")
        ->capture_default_str();
    urn->add_option("--seed", urn_seed, "RNG seed")->capture_default_str();
    urn->callback([&] { run_urn(g, urn_probs, urn_n, urn_block, urn_seed); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const qinfo::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
