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

#include <cstdint>
#include <string>
#include <vector>

#include "qinfo/prob.hpp"

namespace qinfo {

// A memoryless symbol source: an urn with fixed color proportions. Labels
// ride along on the distribution.
struct SymbolSource {
    ProbDist probs;
};

using u128 = unsigned __int128;

// Decimal rendering and base-2 log of counts that exceed 64 bits.
std::string u128_to_string(u128 v);
double log2_u128(u128 v);

// Number of distinct sequences with the given per-color counts,
// N! / prod(counts_i!), as an exact integer. N = sum(counts) must be at
// most 60; results beyond the 128-bit exact range throw Overflow (possible
// near N = 60 when many colors have small counts).
u128 exact_sequence_count(const std::vector<std::uint64_t>& counts);

// log2 of the number of typical sequences, N * H(p): the asymptotic count
// is 2^(N H). Equals -log2 of the probability of any one typical sequence.
double typical_set_log_size(const ProbDist& p, std::uint64_t n_draws);

// Exact multinomial count next to its 2^(N H) approximation, where H is
// taken at the empirical proportions counts_i / N. The gap closes only
// asymptotically; exposing both keeps the approximation inspectable.
struct TypicalityReport {
    std::string exact_count;  // decimal digits of the multinomial
    double log2_exact = 0.0;
    double nh_bits = 0.0;  // N * H(empirical proportions)
    double log_gap = 0.0;  // nh_bits - log2_exact, >= 0
};

TypicalityReport typicality_report(const std::vector<std::uint64_t>& counts);

// Binary yes/no questioning strategy over the outcomes of a source,
// optionally block-extended: for block = b the leaves range over all
// length-b symbol tuples and one tree traversal identifies b draws at once.
//
// The tree is a minimum-expected-depth prefix tree (greedy two-least merge,
// ties broken by (probability, lowest covered outcome index) so the shape
// is deterministic). Outcomes with zero probability get no leaf. A source
// with a single possible outcome yields the depth-0 single-leaf tree: no
// questions are ever needed.
class QuestionTree {
public:
    struct Node {
        int zero_child = -1;  // answer "no"
        int one_child = -1;   // answer "yes"
        int outcome = -1;     // leaf only: block-outcome index
        double prob = 0.0;
    };

    std::size_t block() const { return block_; }
    std::size_t alphabet() const { return alphabet_; }
    std::size_t block_outcomes() const { return codewords_.size(); }

    // Yes/no path for a block outcome ("" for the single-leaf tree); empty
    // optional-style sentinel is not needed since zero-probability outcomes
    // are never drawn, but querying one throws ZeroProbabilityOutcome.
    const std::string& codeword(std::size_t block_index) const;
    std::size_t depth(std::size_t block_index) const;
    const std::string& label(std::size_t block_index) const;
    bool has_leaf(std::size_t block_index) const;

    // Expected questions per tree traversal (i.e. per block), and the
    // Shannon information of the block distribution it brackets:
    // block_entropy <= expected_depth < block_entropy + 1.
    double expected_depth() const { return expected_depth_; }
    double block_entropy() const { return block_entropy_; }

    // Sum of 2^(-depth) over leaves; 1 for every tree built here.
    double kraft_sum() const;

    const std::vector<Node>& nodes() const { return nodes_; }
    int root() const { return root_; }

private:
    friend QuestionTree build_question_tree(const SymbolSource&, std::size_t);

    std::vector<Node> nodes_;
    int root_ = -1;
    std::size_t block_ = 1;
    std::size_t alphabet_ = 0;
    std::vector<std::string> codewords_;  // per block outcome, "" if no leaf
    std::vector<bool> present_;           // leaf exists (p > 0)
    std::vector<std::string> labels_;     // concatenated symbol labels
    std::vector<double> probs_;           // block-outcome probabilities
    double expected_depth_ = 0.0;
    double block_entropy_ = 0.0;
};

// Builds the optimal tree for `block` consecutive draws. block must lie in
// [1, 4] and alphabet^block must not exceed 4096; otherwise BlockTooLarge.
QuestionTree build_question_tree(const SymbolSource& source,
                                 std::size_t block = 1);

// Outcome of drawing n_draws symbols and identifying them through the tree.
struct DrawReport {
    std::vector<std::uint32_t> sequence;  // drawn symbol indices
    // Questions spent after each draw. Questions for a block are booked on
    // the draw that completes the block, so the column is flat within one.
    std::vector<std::uint64_t> cumulative_questions;
    std::uint64_t questions_asked = 0;
    double questions_per_symbol = 0.0;
};

// Draws n_draws symbols from the source and counts the questions the tree
// needs to pin down the sequence. Draws are generated in batches of 1024;
// batch k uses derive_seed(seed, k), which makes the sequence identical
// whether batches are produced serially or in parallel. A trailing partial
// block is identified with a freshly built single-symbol tree.
DrawReport simulate_drawings(const SymbolSource& source, std::uint64_t n_draws,
                             std::uint64_t seed, const QuestionTree& tree);

// Number of draws per RNG batch in simulate_drawings; part of the
// reproducibility contract.
inline constexpr std::uint64_t kDrawBatch = 1024;

}  // namespace qinfo
