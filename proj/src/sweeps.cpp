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

#include "qinfo/sweeps.hpp"

#include <algorithm>
#include <cmath>

#include "qinfo/errors.hpp"
#include "qinfo/measurement.hpp"
#include "qinfo/rng.hpp"

#if defined(_OPENMP)
#include <omp.h>
#define QINFO_OMP_FOR _Pragma("omp parallel for schedule(static)")
#else
#define QINFO_OMP_FOR
#endif

namespace qinfo {

namespace {

double haar_body(std::size_t dim, std::uint64_t seed, std::int64_t t) {
    const ComplexMatrix u =
        random_unitary(dim, derive_seed(seed, static_cast<std::uint64_t>(t)));
    return std::norm(u(0, 0));
}

double fold_mean(const std::vector<double>& vals) {
    double s = 0.0;
    for (double v : vals) s += v;
    return s / static_cast<double>(vals.size());
}

double faddeev_body(const InfoFunctional& f, std::uint64_t seed,
                    std::int64_t t, double tol) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform() * 5.0);

    std::vector<double> w(n);
    double sum = 0.0;
    for (double& v : w) {
        v = 0.05 + rng.uniform();
        sum += v;
    }
    for (double& v : w) v /= sum;

    const double pn = w.back();
    const double q1 = rng.uniform() * pn;
    const double q2 = pn - q1;

    const FaddeevResult r = faddeev_check(f, ProbDist(std::move(w)), q1, q2, tol);
    return std::abs(r.lhs - r.rhs);
}

FaddeevSweepResult fold_faddeev(const std::vector<double>& devs, double tol) {
    FaddeevSweepResult res;
    res.pairs = devs.size();
    res.tol = tol;
    for (double d : devs) {
        res.max_abs_dev = std::max(res.max_abs_dev, d);
        if (d >= tol) ++res.violations;
    }
    return res;
}

struct InvarianceRow {
    double mub_sum_dev = 0.0;
    double itotal_drift = 0.0;
    bool pure = false;
    double h_total = 0.0;
    double pure_itotal_dev = 0.0;
};

InvarianceRow invariance_body(std::size_t dim, const MubSet& mubs,
                              std::uint64_t seed, std::int64_t t) {
    const std::uint64_t state_seed =
        derive_seed(seed, 2 * static_cast<std::uint64_t>(t));
    const std::uint64_t unitary_seed =
        derive_seed(seed, 2 * static_cast<std::uint64_t>(t) + 1);

    InvarianceRow row;
    row.pure = (t % 2 == 0);
    const DensityMatrix rho =
        row.pure ? DensityMatrix::from_pure(random_pure_state(dim, state_seed))
                 : random_density_matrix(dim, state_seed);

    const TotalInfoReport before =
        total_information(rho, mubs, MeasureKind::quadratic());
    const double closed_before = *before.closed_form;
    row.mub_sum_dev = std::abs(before.total - closed_before);

    const DensityMatrix evolved =
        evolve(rho, random_unitary(dim, unitary_seed));
    const TotalInfoReport after =
        total_information(evolved, mubs, MeasureKind::quadratic());
    const double closed_after = *after.closed_form;
    row.mub_sum_dev =
        std::max(row.mub_sum_dev, std::abs(after.total - closed_after));
    row.itotal_drift = std::max(std::abs(after.total - before.total),
                                std::abs(closed_after - closed_before));

    if (row.pure) {
        row.h_total = total_information(rho, mubs, MeasureKind::shannon()).total;
        const double pure_value =
            (static_cast<double>(dim) - 1.0) / static_cast<double>(dim);
        row.pure_itotal_dev = std::abs(closed_before - pure_value);
    }
    return row;
}

InvarianceStats fold_invariance(const std::vector<InvarianceRow>& rows) {
    InvarianceStats stats;
    stats.trials = rows.size();
    for (const InvarianceRow& row : rows) {
        stats.max_mub_sum_dev = std::max(stats.max_mub_sum_dev, row.mub_sum_dev);
        stats.max_itotal_drift =
            std::max(stats.max_itotal_drift, row.itotal_drift);
        if (!row.pure) continue;
        if (stats.pure_trials == 0) {
            stats.h_total_min = row.h_total;
            stats.h_total_max = row.h_total;
        } else {
            stats.h_total_min = std::min(stats.h_total_min, row.h_total);
            stats.h_total_max = std::max(stats.h_total_max, row.h_total);
        }
        stats.max_pure_itotal_dev =
            std::max(stats.max_pure_itotal_dev, row.pure_itotal_dev);
        ++stats.pure_trials;
    }
    return stats;
}

struct EigenOptRow {
    double mismatch = 0.0;
    double min_margin = 0.0;
};

EigenOptRow eigen_opt_body(std::size_t dim, std::size_t bases_per_state,
                           std::uint64_t seed, std::int64_t t) {
    const std::uint64_t state_seed =
        derive_seed(seed, 2 * static_cast<std::uint64_t>(t));
    const std::uint64_t bases_seed =
        derive_seed(seed, 2 * static_cast<std::uint64_t>(t) + 1);

    const DensityMatrix rho = random_density_matrix(dim, state_seed);
    const double s = von_neumann_entropy(rho);
    const double eigen_h = shannon(outcome_distribution(rho, eigenbasis(rho)));

    EigenOptRow row;
    row.mismatch = std::abs(eigen_h - s);
    row.min_margin = 0.0;
    for (std::size_t j = 0; j < bases_per_state; ++j) {
        const Basis b = random_basis(dim, derive_seed(bases_seed, j));
        const double h = shannon(outcome_distribution(rho, b));
        const double margin = h - eigen_h;
        if (j == 0 || margin < row.min_margin) row.min_margin = margin;
    }
    return row;
}

EigenOptStats fold_eigen_opt(const std::vector<EigenOptRow>& rows) {
    EigenOptStats stats;
    stats.states = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        stats.max_entropy_mismatch =
            std::max(stats.max_entropy_mismatch, rows[i].mismatch);
        stats.min_margin = i == 0 ? rows[i].min_margin
                                  : std::min(stats.min_margin, rows[i].min_margin);
    }
    return stats;
}

std::vector<double> source_cdf(const SymbolSource& source) {
    std::vector<double> cdf(source.probs.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < cdf.size(); ++i) {
        acc += source.probs[i];
        cdf[i] = acc;
    }
    cdf.back() = 1.0;
    return cdf;
}

void draw_batch(const std::vector<double>& cdf, std::uint64_t n_draws,
                std::uint64_t seed, std::int64_t k,
                std::vector<std::uint32_t>& out) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(k)));
    const std::uint64_t lo = static_cast<std::uint64_t>(k) * kDrawBatch;
    const std::uint64_t hi = std::min(n_draws, lo + kDrawBatch);
    for (std::uint64_t i = lo; i < hi; ++i) {
        const double u = rng.uniform();
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        out[i] = static_cast<std::uint32_t>(
            std::min<std::size_t>(it - cdf.begin(), cdf.size() - 1));
    }
}

}  // namespace

double haar_moment(std::size_t dim, std::size_t samples, std::uint64_t seed) {
    if (samples == 0) throw InvalidArgument("sample count must be positive");
    std::vector<double> vals(samples);
    QINFO_OMP_FOR
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(samples); ++t) {
        vals[t] = haar_body(dim, seed, t);
    }
    return fold_mean(vals);
}

double haar_moment_serial(std::size_t dim, std::size_t samples,
                          std::uint64_t seed) {
    if (samples == 0) throw InvalidArgument("sample count must be positive");
    std::vector<double> vals(samples);
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(samples); ++t) {
        vals[t] = haar_body(dim, seed, t);
    }
    return fold_mean(vals);
}

FaddeevSweepResult faddeev_sweep(const MeasureKind& kind, std::size_t pairs,
                                 std::uint64_t seed, double tol) {
    if (pairs == 0) throw InvalidArgument("pair count must be positive");
    const InfoFunctional f = functional_of(kind);
    std::vector<double> devs(pairs);
    QINFO_OMP_FOR
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(pairs); ++t) {
        devs[t] = faddeev_body(f, seed, t, tol);
    }
    return fold_faddeev(devs, tol);
}

FaddeevSweepResult faddeev_sweep_serial(const MeasureKind& kind,
                                        std::size_t pairs, std::uint64_t seed,
                                        double tol) {
    if (pairs == 0) throw InvalidArgument("pair count must be positive");
    const InfoFunctional f = functional_of(kind);
    std::vector<double> devs(pairs);
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(pairs); ++t) {
        devs[t] = faddeev_body(f, seed, t, tol);
    }
    return fold_faddeev(devs, tol);
}

InvarianceStats invariance_sweep_stats(std::size_t dim, std::size_t trials,
                                       std::uint64_t seed) {
    if (trials == 0) throw InvalidArgument("trial count must be positive");
    const MubSet mubs = construct_mubs(dim);
    std::vector<InvarianceRow> rows(trials);
    QINFO_OMP_FOR
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials); ++t) {
        rows[t] = invariance_body(dim, mubs, seed, t);
    }
    return fold_invariance(rows);
}

InvarianceStats invariance_sweep_stats_serial(std::size_t dim,
                                              std::size_t trials,
                                              std::uint64_t seed) {
    if (trials == 0) throw InvalidArgument("trial count must be positive");
    const MubSet mubs = construct_mubs(dim);
    std::vector<InvarianceRow> rows(trials);
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials); ++t) {
        rows[t] = invariance_body(dim, mubs, seed, t);
    }
    return fold_invariance(rows);
}

EigenOptStats eigenbasis_optimality_sweep(std::size_t dim, std::size_t states,
                                          std::size_t bases_per_state,
                                          std::uint64_t seed) {
    if (states == 0) throw InvalidArgument("state count must be positive");
    std::vector<EigenOptRow> rows(states);
    QINFO_OMP_FOR
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(states); ++t) {
        rows[t] = eigen_opt_body(dim, bases_per_state, seed, t);
    }
    return fold_eigen_opt(rows);
}

EigenOptStats eigenbasis_optimality_sweep_serial(std::size_t dim,
                                                 std::size_t states,
                                                 std::size_t bases_per_state,
                                                 std::uint64_t seed) {
    if (states == 0) throw InvalidArgument("state count must be positive");
    std::vector<EigenOptRow> rows(states);
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(states); ++t) {
        rows[t] = eigen_opt_body(dim, bases_per_state, seed, t);
    }
    return fold_eigen_opt(rows);
}

std::vector<std::uint32_t> draw_sequence(const SymbolSource& source,
                                         std::uint64_t n_draws,
                                         std::uint64_t seed) {
    const std::vector<double> cdf = source_cdf(source);
    std::vector<std::uint32_t> out(n_draws);
    const std::int64_t n_batches =
        static_cast<std::int64_t>((n_draws + kDrawBatch - 1) / kDrawBatch);
    QINFO_OMP_FOR
    for (std::int64_t k = 0; k < n_batches; ++k) {
        draw_batch(cdf, n_draws, seed, k, out);
    }
    return out;
}

std::vector<std::uint32_t> draw_sequence_serial(const SymbolSource& source,
                                                std::uint64_t n_draws,
                                                std::uint64_t seed) {
    const std::vector<double> cdf = source_cdf(source);
    std::vector<std::uint32_t> out(n_draws);
    const std::int64_t n_batches =
        static_cast<std::int64_t>((n_draws + kDrawBatch - 1) / kDrawBatch);
    for (std::int64_t k = 0; k < n_batches; ++k) {
        draw_batch(cdf, n_draws, seed, k, out);
    }
    return out;
}

bool openmp_enabled() {
#if defined(_OPENMP)
    return true;
#else
    return false;
#endif
}

int openmp_max_threads() {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace qinfo
