// Copyright 2026 The gdsim Authors
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

// OpenMP kernels against their serial references, across register sizes.
// Run with --benchmark_filter=inner etc. to narrow down.

#include <benchmark/benchmark.h>

#include <vector>

#include "gdsim/kernels.hpp"
#include "gdsim/rng.hpp"

namespace {

using gdsim::kernels::Complex;

std::vector<Complex> random_amps(std::size_t n, std::uint64_t seed) {
    gdsim::Rng rng(seed);
    std::vector<Complex> v(n);
    for (Complex& c : v) c = Complex{rng.normal(), rng.normal()};
    return v;
}

void BM_inner_serial(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const auto a = random_amps(n, 1);
    const auto b = random_amps(n, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gdsim::kernels::serial::inner(a.data(), b.data(), n));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_inner_parallel(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const auto a = random_amps(n, 1);
    const auto b = random_amps(n, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gdsim::kernels::inner(a.data(), b.data(), n));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_axpy_serial(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const auto x = random_amps(n, 3);
    auto y = random_amps(n, 4);
    const Complex alpha{0.5, -0.25};
    for (auto _ : state) {
        gdsim::kernels::serial::axpy(alpha, x.data(), y.data(), n);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_axpy_parallel(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const auto x = random_amps(n, 3);
    auto y = random_amps(n, 4);
    const Complex alpha{0.5, -0.25};
    for (auto _ : state) {
        gdsim::kernels::axpy(alpha, x.data(), y.data(), n);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_phase_flip_serial(benchmark::State& state) {
    const int b = static_cast<int>(state.range(0));
    const int d = b;  // square registers, as in protocol use
    const std::size_t dim = (std::size_t{1} << b) * static_cast<std::size_t>(d);
    auto v = random_amps(dim * dim, 5);
    for (auto _ : state) {
        gdsim::kernels::serial::phase_flip_intersecting(v.data(), b, d);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(dim * dim));
}

void BM_phase_flip_parallel(benchmark::State& state) {
    const int b = static_cast<int>(state.range(0));
    const int d = b;
    const std::size_t dim = (std::size_t{1} << b) * static_cast<std::size_t>(d);
    auto v = random_amps(dim * dim, 5);
    for (auto _ : state) {
        gdsim::kernels::phase_flip_intersecting(v.data(), b, d);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(dim * dim));
}

void BM_tensor_serial(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const auto a = random_amps(n, 6);
    const auto b = random_amps(n, 7);
    std::vector<Complex> out(n * n);
    for (auto _ : state) {
        gdsim::kernels::serial::tensor(a.data(), n, b.data(), n, out.data());
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n));
}

void BM_tensor_parallel(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const auto a = random_amps(n, 6);
    const auto b = random_amps(n, 7);
    std::vector<Complex> out(n * n);
    for (auto _ : state) {
        gdsim::kernels::tensor(a.data(), n, b.data(), n, out.data());
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n));
}

}  // namespace

BENCHMARK(BM_inner_serial)->Arg(1 << 16)->Arg(1 << 20)->Arg(1 << 22);
BENCHMARK(BM_inner_parallel)->Arg(1 << 16)->Arg(1 << 20)->Arg(1 << 22);
BENCHMARK(BM_axpy_serial)->Arg(1 << 16)->Arg(1 << 20)->Arg(1 << 22);
BENCHMARK(BM_axpy_parallel)->Arg(1 << 16)->Arg(1 << 20)->Arg(1 << 22);
BENCHMARK(BM_phase_flip_serial)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(BM_phase_flip_parallel)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(BM_tensor_serial)->Arg(512)->Arg(2048);
BENCHMARK(BM_tensor_parallel)->Arg(512)->Arg(2048);

BENCHMARK_MAIN();
