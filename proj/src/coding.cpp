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

#include "qinfo/coding.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <tuple>

#include "qinfo/errors.hpp"
#include "qinfo/measures.hpp"
#include "qinfo/rng.hpp"

namespace qinfo {

namespace {

u128 checked_mul(u128 a, u128 b) {
    if (a != 0 && b > ~u128{0} / a) {
        throw Overflow("sequence count exceeds the 128-bit exact range");
    }
    return a * b;
}

// C(n, k) by the usual exact iteration: after step i the accumulator holds
// C(n - k + i, i), an integer, so the division is always exact.
u128 binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n - k) k = n - k;
    u128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = checked_mul(r, n - k + i) / i;
    }
    return r;
}

}  // namespace

std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

double log2_u128(u128 v) {
    if (v == 0) throw InvalidArgument("log2 of zero count");
    const long double hi = static_cast<long double>(
        static_cast<std::uint64_t>(v >> 64));
    const long double lo = static_cast<long double>(
        static_cast<std::uint64_t>(v));
    return static_cast<double>(std::log2(hi * 18446744073709551616.0L + lo));
}

u128 exact_sequence_count(const std::vector<std::uint64_t>& counts) {
    std::uint64_t total = 0;
    for (std::uint64_t c : counts) {
        total += c;
        if (total > 60) {
            throw Overflow("total draw count exceeds the exact limit of 60");
        }
    }
    u128 r = 1;
    std::uint64_t cum = 0;
    for (std::uint64_t c : counts) {
        cum += c;
        r = checked_mul(r, binomial(cum, c));
    }
    return r;
}

double typical_set_log_size(const ProbDist& p, std::uint64_t n_draws) {
    if (n_draws < 1) throw InvalidArgument("draw count must be at least 1");
    return static_cast<double>(n_draws) * shannon(p);
}

TypicalityReport typicality_report(const std::vector<std::uint64_t>& counts) {
    std::uint64_t total = 0;
    for (std::uint64_t c : counts) total += c;
    if (total == 0) throw InvalidArgument("at least one ball is required");

    std::vector<double> freq(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        freq[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
    }

    TypicalityReport rep;
    const u128 exact = exact_sequence_count(counts);
    rep.exact_count = u128_to_string(exact);
    rep.log2_exact = log2_u128(exact);
    rep.nh_bits = typical_set_log_size(ProbDist(std::move(freq)), total);
    rep.log_gap = rep.nh_bits - rep.log2_exact;
    return rep;
}

const std::string& QuestionTree::codeword(std::size_t block_index) const {
    if (!has_leaf(block_index)) {
        throw ZeroProbabilityOutcome("block outcome has no leaf");
    }
    return codewords_[block_index];
}

std::size_t QuestionTree::depth(std::size_t block_index) const {
    return codeword(block_index).size();
}

const std::string& QuestionTree::label(std::size_t block_index) const {
    if (block_index >= labels_.size()) {
        throw InvalidArgument("block outcome index out of range");
    }
    return labels_[block_index];
}

bool QuestionTree::has_leaf(std::size_t block_index) const {
    if (block_index >= present_.size()) {
        throw InvalidArgument("block outcome index out of range");
    }
    return present_[block_index];
}

double QuestionTree::kraft_sum() const {
    double s = 0.0;
    for (std::size_t i = 0; i < present_.size(); ++i) {
        if (present_[i]) s += std::pow(2.0, -static_cast<double>(codewords_[i].size()));
    }
    return s;
}

QuestionTree build_question_tree(const SymbolSource& source,
                                 std::size_t block) {
    const std::size_t m = source.probs.size();
    if (block < 1 || block > 4) {
        throw BlockTooLarge("block size must lie in [1, 4]");
    }
    std::size_t n_blocks = 1;
    for (std::size_t i = 0; i < block; ++i) {
        n_blocks *= m;
        if (n_blocks > 4096) {
            throw BlockTooLarge("alphabet^block exceeds 4096 outcomes");
        }
    }

    QuestionTree tree;
    tree.block_ = block;
    tree.alphabet_ = m;
    tree.probs_.resize(n_blocks);
    tree.labels_.resize(n_blocks);
    tree.present_.assign(n_blocks, false);
    tree.codewords_.resize(n_blocks);

    // Block outcome index is mixed-radix over the symbols, first draw most
    // significant; label is the concatenation of the symbol labels.
    for (std::size_t b = 0; b < n_blocks; ++b) {
        double prob = 1.0;
        std::string label;
        std::size_t rest = b;
        std::size_t scale = n_blocks / m;
        for (std::size_t pos = 0; pos < block; ++pos) {
            const std::size_t sym = rest / scale;
            rest %= scale;
            if (scale > 1) scale /= m;
            prob *= source.probs[sym];
            label += source.probs.label(sym);
        }
        tree.probs_[b] = prob;
        tree.labels_[b] = std::move(label);
    }

    // Greedy two-least merge. Live nodes cover disjoint outcome sets, so
    // (probability, lowest covered index) orders them totally; the pair also
    // fixes which child answers "no" (the first node popped).
    struct Item {
        double prob;
        std::size_t min_index;
        int node;
    };
    const auto later = [](const Item& a, const Item& b) {
        return std::tie(a.prob, a.min_index) > std::tie(b.prob, b.min_index);
    };
    std::priority_queue<Item, std::vector<Item>, decltype(later)> queue(later);

    for (std::size_t b = 0; b < n_blocks; ++b) {
        if (tree.probs_[b] <= 0.0) continue;
        QuestionTree::Node leaf;
        leaf.outcome = static_cast<int>(b);
        leaf.prob = tree.probs_[b];
        const int id = static_cast<int>(tree.nodes_.size());
        tree.nodes_.push_back(leaf);
        tree.present_[b] = true;
        queue.push({leaf.prob, b, id});
    }
    if (queue.empty()) {
        throw InvalidArgument("source has no outcome with positive probability");
    }

    while (queue.size() > 1) {
        const Item lo = queue.top();
        queue.pop();
        const Item hi = queue.top();
        queue.pop();
        QuestionTree::Node parent;
        parent.zero_child = lo.node;
        parent.one_child = hi.node;
        parent.prob = lo.prob + hi.prob;
        const int id = static_cast<int>(tree.nodes_.size());
        tree.nodes_.push_back(parent);
        queue.push({parent.prob, std::min(lo.min_index, hi.min_index), id});
    }
    tree.root_ = queue.top().node;

    // Assign codewords by walking the finished tree.
    std::vector<std::pair<int, std::string>> stack{{tree.root_, ""}};
    while (!stack.empty()) {
        auto [id, path] = std::move(stack.back());
        stack.pop_back();
        const QuestionTree::Node& node = tree.nodes_[id];
        if (node.outcome >= 0) {
            tree.codewords_[node.outcome] = std::move(path);
            continue;
        }
        stack.emplace_back(node.zero_child, path + "0");
        stack.emplace_back(node.one_child, path + "1");
    }

    for (std::size_t b = 0; b < n_blocks; ++b) {
        const double p = tree.probs_[b];
        if (p <= 0.0) continue;
        tree.expected_depth_ +=
            p * static_cast<double>(tree.codewords_[b].size());
        tree.block_entropy_ -= p * std::log2(p);
    }
    return tree;
}

DrawReport simulate_drawings(const SymbolSource& source, std::uint64_t n_draws,
                             std::uint64_t seed, const QuestionTree& tree) {
    const std::size_t m = source.probs.size();
    if (tree.alphabet() != m) {
        throw DimensionMismatch("tree was built over a different alphabet");
    }

    std::vector<double> cdf(m);
    double acc = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        acc += source.probs[i];
        cdf[i] = acc;
    }
    cdf[m - 1] = 1.0;

    DrawReport rep;
    rep.sequence.resize(n_draws);

    // Batched generation: batch k draws from its own derived stream, so a
    // parallel producer filling batches out of order lands on the same
    // sequence.
    const std::uint64_t n_batches = (n_draws + kDrawBatch - 1) / kDrawBatch;
    for (std::uint64_t k = 0; k < n_batches; ++k) {
        Rng rng(derive_seed(seed, k));
        const std::uint64_t lo = k * kDrawBatch;
        const std::uint64_t hi = std::min(n_draws, lo + kDrawBatch);
        for (std::uint64_t i = lo; i < hi; ++i) {
            const double u = rng.uniform();
            const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
            rep.sequence[i] = static_cast<std::uint32_t>(
                std::min<std::size_t>(it - cdf.begin(), m - 1));
        }
    }

    rep.cumulative_questions.resize(n_draws, 0);
    const std::size_t block = tree.block();
    const std::uint64_t full_blocks = n_draws / block;

    std::uint64_t q = 0;
    for (std::uint64_t j = 0; j < full_blocks; ++j) {
        std::size_t index = 0;
        for (std::size_t pos = 0; pos < block; ++pos) {
            index = index * m + rep.sequence[j * block + pos];
            if (pos + 1 < block) {
                rep.cumulative_questions[j * block + pos] = q;
            }
        }
        q += tree.depth(index);
        rep.cumulative_questions[j * block + block - 1] = q;
    }

    // Leftover draws that do not fill a block are identified one at a time.
    if (full_blocks * block < n_draws) {
        const QuestionTree single = block == 1
                                        ? tree
                                        : build_question_tree(source, 1);
        for (std::uint64_t i = full_blocks * block; i < n_draws; ++i) {
            q += single.depth(rep.sequence[i]);
            rep.cumulative_questions[i] = q;
        }
    }

    rep.questions_asked = q;
    rep.questions_per_symbol =
        n_draws == 0 ? 0.0
                     : static_cast<double>(q) / static_cast<double>(n_draws);
    return rep;
}

}  // namespace qinfo
