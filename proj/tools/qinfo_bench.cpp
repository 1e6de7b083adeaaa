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

// Times each Monte Carlo kernel against its serial reference and checks
// that the two produce identical results.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "qinfo/sweeps.hpp"

namespace {

double seconds(const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const std::chrono::duration<double> dt =
        std::chrono::steady_clock::now() - start;
    return dt.count();
}

void row(const std::string& name, double t_serial, double t_parallel,
         bool identical) {
    std::printf("%-28s %10.4f s %10.4f s %8.2fx   %s\n", name.c_str(),
                t_serial, t_parallel, t_serial / t_parallel,
                identical ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
    using namespace qinfo;

    std::printf("OpenMP: %s (%d thread%s)\n",
                openmp_enabled() ? "on" : "off", openmp_max_threads(),
                openmp_max_threads() == 1 ? "" : "s");
    std::printf("%-28s %12s %12s %9s\n", "kernel", "serial", "parallel",
                "speedup");

    {
        double a = 0.0, b = 0.0;
        const double ts = seconds([&] { a = haar_moment_serial(4, 20000, 7); });
        const double tp = seconds([&] { b = haar_moment(4, 20000, 7); });
        row("haar moment (d=4, 2e4)", ts, tp, a == b);
    }
    {
        FaddeevSweepResult a, b;
        const double ts = seconds([&] {
            a = faddeev_sweep_serial(MeasureKind::shannon(), 40000, 11, 1e-12);
        });
        const double tp = seconds([&] {
            b = faddeev_sweep(MeasureKind::shannon(), 40000, 11, 1e-12);
        });
        row("faddeev sweep (4e4 pairs)", ts, tp,
            a.max_abs_dev == b.max_abs_dev && a.violations == b.violations);
    }
    {
        InvarianceStats a, b;
        const double ts =
            seconds([&] { a = invariance_sweep_stats_serial(3, 400, 5); });
        const double tp = seconds([&] { b = invariance_sweep_stats(3, 400, 5); });
        row("invariance sweep (d=3, 400)", ts, tp,
            a.max_mub_sum_dev == b.max_mub_sum_dev &&
                a.max_itotal_drift == b.max_itotal_drift &&
                a.h_total_min == b.h_total_min &&
                a.h_total_max == b.h_total_max);
    }
    {
        EigenOptStats a, b;
        const double ts = seconds(
            [&] { a = eigenbasis_optimality_sweep_serial(3, 100, 50, 3); });
        const double tp =
            seconds([&] { b = eigenbasis_optimality_sweep(3, 100, 50, 3); });
        row("eigenbasis opt (d=3, 100)", ts, tp,
            a.max_entropy_mismatch == b.max_entropy_mismatch &&
                a.min_margin == b.min_margin);
    }
    {
        const SymbolSource source{ProbDist({0.5, 0.25, 0.25})};
        std::vector<std::uint32_t> a, b;
        const double ts =
            seconds([&] { a = draw_sequence_serial(source, 4000000, 42); });
        const double tp = seconds([&] { b = draw_sequence(source, 4000000, 42); });
        row("urn draws (4e6)", ts, tp, a == b);
    }
    return 0;
}
