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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <doctest.h>

#include "qinfo/coding.hpp"
#include "qinfo/errors.hpp"
#include "qinfo/measures.hpp"
#include "qinfo/prob.hpp"
#include "qinfo/rng.hpp"

#include "test_support.hpp"

using qinfo::ProbDist;
using qinfo::QuestionTree;
using qinfo::SymbolSource;

namespace {

// Independent oracle for the minimum expected depth of a binary prefix tree
// over `probs`: subset dynamic programming. cost(S) for |S| > 1 is P(S) plus
// the best split of S into two nonempty halves; singletons cost nothing.
// Exponential, so only used for small outcome counts.
double optimal_tree_cost(const std::vector<double>& probs) {
    std::size_t n = probs.size();
    REQUIRE(n <= 14);
    std::size_t full = (std::size_t(1) << n) - 1;
    std::vector<double> mass(full + 1, 0.0);
    for (std::size_t m = 1; m <= full; ++m) {
        std::size_t low = m & (~m + 1);
        std::size_t idx = 0;
        while ((std::size_t(1) << idx) != low) ++idx;
        mass[m] = mass[m ^ low] + probs[idx];
    }
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> cost(full + 1, inf);
    for (std::size_t i = 0; i < n; ++i) cost[std::size_t(1) << i] = 0.0;
    for (std::size_t m = 1; m <= full; ++m) {
        if ((m & (m - 1)) == 0) continue;  // singleton
        double best = inf;
        for (std::size_t s = (m - 1) & m; s != 0; s = (s - 1) & m) {
            double c = cost[s] + cost[m ^ s];
            if (c < best) best = c;
        }
        cost[m] = mass[m] + best;
    }
    return cost[full];
}

}  // namespace

TEST_CASE("exact sequence counts for small urns") {
    CHECK(qinfo::exact_sequence_count({4}) == 1);
    CHECK(qinfo::exact_sequence_count({0, 4}) == 1);
    CHECK(qinfo::exact_sequence_count({3, 1}) == 4);
    CHECK(qinfo::exact_sequence_count({2, 2}) == 6);
    CHECK(qinfo::exact_sequence_count({2, 2, 2}) == 90);
    // 12 distinct colors drawn once each: 12! orderings.
    CHECK(qinfo::exact_sequence_count(std::vector<std::uint64_t>(12, 1)) ==
          479001600ULL);
}

TEST_CASE("binomial counts match the Pascal recurrence") {
    // C(n, k) built by repeated addition, compared entry by entry.
    std::vector<qinfo::u128> row = {1};
    for (std::uint64_t n = 1; n <= 60; ++n) {
        std::vector<qinfo::u128> next(n + 1, 1);
        for (std::uint64_t k = 1; k < n; ++k) next[k] = row[k - 1] + row[k];
        row = std::move(next);
        for (std::uint64_t k = 0; k <= n; ++k) {
            CHECK(qinfo::exact_sequence_count({k, n - k}) == row[k]);
        }
    }
}

TEST_CASE("counts beyond the exact range overflow") {
    CHECK_THROWS_AS(qinfo::exact_sequence_count({61}), qinfo::Overflow);
    CHECK_THROWS_AS(qinfo::exact_sequence_count({31, 31}), qinfo::Overflow);
    // 60 distinct colors: 60! exceeds 128 bits.
    CHECK_THROWS_AS(
        qinfo::exact_sequence_count(std::vector<std::uint64_t>(60, 1)),
        qinfo::Overflow);
    // The empty drawing has exactly one (empty) sequence.
    CHECK(qinfo::exact_sequence_count({}) == 1);
    CHECK(qinfo::exact_sequence_count({0, 0}) == 1);
}

TEST_CASE("u128 rendering") {
    CHECK(qinfo::u128_to_string(0) == "0");
    CHECK(qinfo::u128_to_string(qinfo::exact_sequence_count({30, 30})) ==
          "118264581564861424");
    CHECK(qinfo::log2_u128(8) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(qinfo::log2_u128(qinfo::exact_sequence_count({30, 30})) ==
          doctest::Approx(56.71479568632751).epsilon(1e-10));
}

TEST_CASE("typical set log size") {
    CHECK(qinfo::typical_set_log_size(ProbDist({0.5, 0.5}), 4) ==
          doctest::Approx(4.0).epsilon(1e-14));
    CHECK(qinfo::typical_set_log_size(ProbDist({1.0, 0.0}), 100) == 0.0);
    CHECK(qinfo::typical_set_log_size(ProbDist({0.5, 0.25, 0.25}), 100) ==
          doctest::Approx(150.0).epsilon(1e-12));
    CHECK_THROWS_AS(qinfo::typical_set_log_size(ProbDist({0.5, 0.5}), 0),
                    qinfo::InvalidArgument);
}

TEST_CASE("typicality report exposes the asymptotic gap") {
    auto rep = qinfo::typicality_report({2, 2});
    CHECK(rep.exact_count == "6");
    CHECK(rep.log2_exact == doctest::Approx(std::log2(6.0)).epsilon(1e-12));
    CHECK(rep.nh_bits == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(rep.log_gap == doctest::Approx(4.0 - std::log2(6.0)).epsilon(1e-12));

    // The gap is nonnegative for every composition: 2^(NH) upper-bounds the
    // multinomial.
    qinfo::Rng rng(41u);
    for (int t = 0; t < 50; ++t) {
        std::vector<std::uint64_t> counts(2 + t % 4);
        for (auto& c : counts) c = std::uint64_t(rng.uniform() * 12);
        std::uint64_t total = 0;
        for (auto c : counts) total += c;
        if (total == 0) counts[0] = total = 1;
        CHECK(qinfo::typicality_report(counts).log_gap >= -1e-9);
    }
}

TEST_CASE("dyadic sources are answered in exactly H questions") {
    auto uniform4 = build_question_tree(SymbolSource{ProbDist::uniform(4)});
    CHECK(uniform4.expected_depth() == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(uniform4.block_entropy() == doctest::Approx(2.0).epsilon(1e-14));
    for (std::size_t i = 0; i < 4; ++i) CHECK(uniform4.depth(i) == 2);
    CHECK(uniform4.kraft_sum() == doctest::Approx(1.0).epsilon(1e-14));

    auto halving =
        build_question_tree(SymbolSource{ProbDist({0.5, 0.25, 0.25})});
    CHECK(halving.expected_depth() == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(halving.depth(0) == 1);
    CHECK(halving.depth(1) == 2);
    CHECK(halving.depth(2) == 2);
}

TEST_CASE("skewed binary source by blocks") {
    SymbolSource source{ProbDist({0.9, 0.1})};
    auto b1 = build_question_tree(source, 1);
    CHECK(b1.expected_depth() == doctest::Approx(1.0).epsilon(1e-14));

    // Desk values for the blocked trees: L2 = 1.29, L3 = 1.598, L4 = 1.9702.
    auto b2 = build_question_tree(source, 2);
    CHECK(b2.expected_depth() == doctest::Approx(1.29).epsilon(1e-12));
    auto b3 = build_question_tree(source, 3);
    CHECK(b3.expected_depth() == doctest::Approx(1.598).epsilon(1e-12));
    CHECK(b3.expected_depth() / 3.0 < 0.6);
    auto b4 = build_question_tree(source, 4);
    CHECK(b4.expected_depth() == doctest::Approx(1.9702).epsilon(1e-12));

    // Exhaustive-search oracle over the 8-outcome block distribution.
    std::vector<double> block3;
    for (double a : {0.9, 0.1})
        for (double b : {0.9, 0.1})
            for (double c : {0.9, 0.1}) block3.push_back(a * b * c);
    CHECK(b3.expected_depth() ==
          doctest::Approx(optimal_tree_cost(block3)).epsilon(1e-12));
}

TEST_CASE("greedy merge reaches the exhaustive optimum") {
    qinfo::Rng rng(59u);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 2 + std::size_t(rng.uniform() * 10);  // up to 11
        auto p = qinfo_test::random_dist(rng, n);
        auto tree = build_question_tree(SymbolSource{p});
        CHECK(tree.expected_depth() ==
              doctest::Approx(optimal_tree_cost(p.probs())).epsilon(1e-12));
    }
}

TEST_CASE("tree construction is deterministic under ties") {
    auto a = build_question_tree(SymbolSource{ProbDist::uniform(6)});
    auto b = build_question_tree(SymbolSource{ProbDist::uniform(6)});
    REQUIRE(a.block_outcomes() == b.block_outcomes());
    for (std::size_t i = 0; i < a.block_outcomes(); ++i) {
        CHECK(a.codeword(i) == b.codeword(i));
    }
    // Uniform over six outcomes: two leaves at depth 2, four at depth 3.
    CHECK(a.expected_depth() == doctest::Approx(16.0 / 6.0).epsilon(1e-12));
    CHECK(a.kraft_sum() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("codewords form a prefix-free set") {
    qinfo::Rng rng(61u);
    for (int t = 0; t < 20; ++t) {
        auto p = qinfo_test::random_dist_with_zeros(rng, 2 + t % 7);
        auto tree = build_question_tree(SymbolSource{p});
        std::vector<std::string> words;
        for (std::size_t i = 0; i < tree.block_outcomes(); ++i) {
            if (tree.has_leaf(i)) words.push_back(tree.codeword(i));
        }
        for (std::size_t i = 0; i < words.size(); ++i) {
            for (std::size_t j = 0; j < words.size(); ++j) {
                if (i == j) continue;
                bool is_prefix = words[i].size() <= words[j].size() &&
                                 words[j].compare(0, words[i].size(),
                                                  words[i]) == 0;
                CHECK_FALSE(is_prefix);
            }
        }
    }
}

TEST_CASE("impossible outcomes get no leaf") {
    auto tree = build_question_tree(SymbolSource{ProbDist({0.5, 0.5, 0.0})});
    CHECK(tree.has_leaf(0));
    CHECK(tree.has_leaf(1));
    CHECK_FALSE(tree.has_leaf(2));
    CHECK_THROWS_AS(tree.codeword(2), qinfo::ZeroProbabilityOutcome);
    CHECK(tree.expected_depth() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(tree.kraft_sum() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("single-outcome source asks nothing") {
    auto tree = build_question_tree(SymbolSource{ProbDist({1.0})});
    CHECK(tree.expected_depth() == 0.0);
    CHECK(tree.codeword(0).empty());
    CHECK(tree.kraft_sum() == doctest::Approx(1.0));

    auto certain = build_question_tree(SymbolSource{ProbDist({1.0, 0.0})});
    CHECK(certain.expected_depth() == 0.0);
}

TEST_CASE("block limits") {
    SymbolSource source{ProbDist::uniform(17)};
    CHECK_THROWS_AS(build_question_tree(source, 0), qinfo::BlockTooLarge);
    CHECK_THROWS_AS(build_question_tree(source, 5), qinfo::BlockTooLarge);
    // 17^3 = 4913 > 4096 rejected; 16^3 = 4096 is the accepted boundary.
    CHECK_THROWS_AS(build_question_tree(source, 3), qinfo::BlockTooLarge);
    auto boundary = build_question_tree(SymbolSource{ProbDist::uniform(16)}, 3);
    CHECK(boundary.block_outcomes() == 4096);
    CHECK(boundary.expected_depth() == doctest::Approx(12.0).epsilon(1e-12));
}

TEST_CASE("block labels concatenate the symbol labels") {
    SymbolSource source{ProbDist({0.5, 0.5}, {"b", "w"})};
    auto tree = build_question_tree(source, 2);
    REQUIRE(tree.block_outcomes() == 4);
    // First draw is the most significant digit of the block index.
    CHECK(tree.label(0) == "bb");
    CHECK(tree.label(1) == "bw");
    CHECK(tree.label(2) == "wb");
    CHECK(tree.label(3) == "ww");
}

TEST_CASE("expected depth brackets the block entropy") {
    qinfo::Rng rng(73u);
    for (int t = 0; t < 200; ++t) {
        std::size_t n = 2 + std::size_t(rng.uniform() * 9);
        auto p = t % 4 == 0 ? qinfo_test::random_dist_with_zeros(rng, n)
                            : qinfo_test::random_dist(rng, n);
        std::size_t max_block = 1;
        for (std::size_t b = 2; b <= 4; ++b) {
            double count = std::pow(double(n), double(b));
            if (count <= 4096.0) max_block = b;
        }
        std::size_t block = 1 + std::size_t(rng.uniform() * double(max_block));
        auto tree = build_question_tree(SymbolSource{p}, block);
        double h = tree.block_entropy();
        double l = tree.expected_depth();
        CHECK(l >= h - 1e-12);
        CHECK(l < h + 1.0);
        CHECK(tree.kraft_sum() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("per-symbol cost never beats the entropy and improves on doubling") {
    // Concatenating two optimal block-b trees is itself a prefix strategy
    // for 2b draws, so doubling the block can never cost more per symbol.
    // (Between non-doubling block sizes no such guarantee exists.)
    qinfo::Rng rng(79u);
    for (int t = 0; t < 100; ++t) {
        std::size_t n = 2 + std::size_t(rng.uniform() * 5);  // up to 6: 6^4 fits
        auto p = qinfo_test::random_dist(rng, n);
        double h = qinfo::shannon(p);
        SymbolSource source{p};
        double l1 = build_question_tree(source, 1).expected_depth();
        double l2 = build_question_tree(source, 2).expected_depth() / 2.0;
        double l4 = build_question_tree(source, 4).expected_depth() / 4.0;
        CHECK(l1 >= h - 1e-12);
        CHECK(l2 >= h - 1e-12);
        CHECK(l4 >= h - 1e-12);
        CHECK(l2 <= l1 + 1e-12);
        CHECK(l4 <= l2 + 1e-12);
    }
}

TEST_CASE("per-symbol cost is non-increasing on the worked sources") {
    for (const auto& probs :
         {std::vector<double>{0.5, 0.25, 0.25}, std::vector<double>{0.9, 0.1},
          std::vector<double>{1.0 / 3, 1.0 / 3, 1.0 / 3},
          std::vector<double>{0.25, 0.25, 0.25, 0.25}}) {
        SymbolSource source{ProbDist(probs)};
        double prev = 1e9;
        for (std::size_t b = 1; b <= 4; ++b) {
            double per = build_question_tree(source, b).expected_depth() /
                         double(b);
            CHECK(per <= prev + 1e-12);
            prev = per;
        }
    }
}

TEST_CASE("drawing from a certain source asks nothing") {
    SymbolSource source{ProbDist({1.0, 0.0})};
    auto tree = build_question_tree(source);
    auto rep = qinfo::simulate_drawings(source, 100, 5u, tree);
    CHECK(rep.questions_asked == 0);
    CHECK(rep.questions_per_symbol == 0.0);
    REQUIRE(rep.sequence.size() == 100);
    for (auto s : rep.sequence) CHECK(s == 0);
}

TEST_CASE("fair binary drawing asks exactly one question per draw") {
    SymbolSource source{ProbDist({0.5, 0.5})};
    auto tree = build_question_tree(source);
    auto rep = qinfo::simulate_drawings(source, 10000, 7u, tree);
    CHECK(rep.questions_asked == 10000);
    CHECK(rep.questions_per_symbol == 1.0);
}

TEST_CASE("halving source approaches 1.5 questions per draw") {
    SymbolSource source{ProbDist({0.5, 0.25, 0.25})};
    auto tree = build_question_tree(source);
    auto rep = qinfo::simulate_drawings(source, 10000, 42u, tree);
    // Depth is 1 or 2 with equal probability: mean 1.5, sd 0.5/100 per draw
    // average, so 0.015 is the three-sigma band around the expectation.
    CHECK(std::abs(rep.questions_per_symbol - 1.5) < 0.015);
}

TEST_CASE("drawing is deterministic per seed") {
    SymbolSource source{ProbDist({0.6, 0.3, 0.1})};
    auto tree = build_question_tree(source);
    auto a = qinfo::simulate_drawings(source, 3000, 11u, tree);
    auto b = qinfo::simulate_drawings(source, 3000, 11u, tree);
    CHECK(a.sequence == b.sequence);
    CHECK(a.cumulative_questions == b.cumulative_questions);
    auto c = qinfo::simulate_drawings(source, 3000, 12u, tree);
    CHECK(a.sequence != c.sequence);
}

TEST_CASE("batched generation makes prefixes independent of the total") {
    // Batch k always consumes stream derive_seed(seed, k), so the first
    // 1024 draws of a long run equal a run of exactly one batch.
    SymbolSource source{ProbDist({0.5, 0.25, 0.25})};
    auto tree = build_question_tree(source);
    auto longer = qinfo::simulate_drawings(source, 2 * qinfo::kDrawBatch + 7,
                                           99u, tree);
    auto shorter = qinfo::simulate_drawings(source, qinfo::kDrawBatch, 99u,
                                            tree);
    for (std::size_t i = 0; i < qinfo::kDrawBatch; ++i) {
        CHECK(longer.sequence[i] == shorter.sequence[i]);
    }
}

TEST_CASE("question accounting with blocks and a trailing remainder") {
    SymbolSource source{ProbDist({0.5, 0.25, 0.25})};
    auto tree = build_question_tree(source, 3);
    auto rep = qinfo::simulate_drawings(source, 10, 21u, tree);
    REQUIRE(rep.cumulative_questions.size() == 10);
    // Questions are booked when a block completes (draws 2, 5, 8) and when
    // the remainder is resolved with a single-symbol tree (draw 9).
    CHECK(rep.cumulative_questions[0] == 0);
    CHECK(rep.cumulative_questions[1] == 0);
    CHECK(rep.cumulative_questions[2] > 0);
    CHECK(rep.cumulative_questions[3] == rep.cumulative_questions[2]);
    CHECK(rep.cumulative_questions[4] == rep.cumulative_questions[2]);
    CHECK(rep.cumulative_questions[9] > rep.cumulative_questions[8]);
    CHECK(rep.cumulative_questions[9] == rep.questions_asked);
    for (std::size_t i = 1; i < 10; ++i) {
        CHECK(rep.cumulative_questions[i] >= rep.cumulative_questions[i - 1]);
    }
}

TEST_CASE("blocked and unblocked runs draw the same sequence") {
    SymbolSource source{ProbDist({0.7, 0.2, 0.1})};
    auto t1 = build_question_tree(source, 1);
    auto t2 = build_question_tree(source, 2);
    auto r1 = qinfo::simulate_drawings(source, 501, 5u, t1);
    auto r2 = qinfo::simulate_drawings(source, 501, 5u, t2);
    CHECK(r1.sequence == r2.sequence);
}

TEST_CASE("mismatched tree is rejected") {
    SymbolSource source{ProbDist({0.5, 0.5})};
    SymbolSource other{ProbDist({0.5, 0.25, 0.25})};
    auto tree = build_question_tree(other);
    CHECK_THROWS_AS(qinfo::simulate_drawings(source, 10, 0u, tree),
                    qinfo::DimensionMismatch);
}
