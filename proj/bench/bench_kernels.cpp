// Copyright 2026 The qgeom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference vs OpenMP batch kernels.
#include <omp.h>

#include <cstdio>
#include <random>
#include <vector>

#include "qgeom/kernels.hpp"
#include "qgeom/measurement.hpp"
#include "qgeom/sampling.hpp"

using namespace qgeom;

template <class F>
double time_it(F&& f, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const double t0 = omp_get_wtime();
        f();
        best = std::min(best, omp_get_wtime() - t0);
    }
    return best;
}

int main() {
    std::printf("threads = %d\n", omp_get_max_threads());
    std::printf("%-26s %4s %6s %12s %12s %8s\n", "kernel", "d", "n", "serial[s]", "omp[s]", "speedup");
    for (std::size_t d : {2, 4, 8}) {
        std::mt19937_64 rng(7 + d);
        const std::size_t n = d <= 4 ? 800 : 300;
        std::vector<DensityMatrix> states;
        for (std::size_t k = 0; k < n; ++k) states.push_back(random_density(rng, d));

        auto report = [&](const char* name, double s, double p) {
            std::printf("%-26s %4zu %6zu %12.5f %12.5f %8.2f\n", name, d, n, s, p, s / p);
        };
        report("pairwise_distances", time_it([&] { kernels::pairwise_distances_serial(states); }, 3),
               time_it([&] { kernels::pairwise_distances_omp(states); }, 3));
        report("statepoints", time_it([&] { kernels::statepoints_serial(states); }, 5),
               time_it([&] { kernels::statepoints_omp(states); }, 5));
        report("leaf_decompositions", time_it([&] { kernels::leaf_decompositions_serial(states); }, 5),
               time_it([&] { kernels::leaf_decompositions_omp(states); }, 5));

        std::vector<MeasurementBasis> bases;
        for (int b = 0; b < 64; ++b) bases.emplace_back(haar_unitary(rng, d));
        const TomographyRecord record = simulate_record(states.front(), bases);
        report("tomography_system", time_it([&] { kernels::tomography_system_serial(record); }, 5),
               time_it([&] { kernels::tomography_system_omp(record); }, 5));
    }
    return 0;
}
