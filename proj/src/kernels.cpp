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

#include "gdsim/kernels.hpp"

#include <algorithm>
#include <vector>

namespace gdsim::kernels {

namespace {

inline std::size_t chunk_count(std::size_t n) { return (n + kChunk - 1) / kChunk; }

}  // namespace

double norm_sq(const Complex* a, std::size_t n) {
    const std::size_t nc = chunk_count(n);
    std::vector<double> partial(nc, 0.0);
#pragma omp parallel for schedule(static) if (n >= kParallelGrain)
    for (long long c = 0; c < static_cast<long long>(nc); ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
        const std::size_t hi = std::min(n, lo + kChunk);
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += std::norm(a[i]);
        partial[static_cast<std::size_t>(c)] = s;
    }
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

Complex inner(const Complex* a, const Complex* b, std::size_t n) {
    const std::size_t nc = chunk_count(n);
    std::vector<Complex> partial(nc, Complex{0.0, 0.0});
#pragma omp parallel for schedule(static) if (n >= kParallelGrain)
    for (long long c = 0; c < static_cast<long long>(nc); ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
        const std::size_t hi = std::min(n, lo + kChunk);
        Complex s{0.0, 0.0};
        for (std::size_t i = lo; i < hi; ++i) s += std::conj(a[i]) * b[i];
        partial[static_cast<std::size_t>(c)] = s;
    }
    Complex total{0.0, 0.0};
    for (const Complex& p : partial) total += p;
    return total;
}

void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t n) {
#pragma omp parallel for schedule(static) if (n >= kParallelGrain)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        y[i] += alpha * x[i];
    }
}

void scale(Complex alpha, Complex* a, std::size_t n) {
#pragma omp parallel for schedule(static) if (n >= kParallelGrain)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        a[i] *= alpha;
    }
}

void tensor(const Complex* a, std::size_t na, const Complex* b, std::size_t nb, Complex* out) {
#pragma omp parallel for schedule(static) if (na * nb >= kParallelGrain)
    for (long long i = 0; i < static_cast<long long>(na); ++i) {
        const Complex ai = a[i];
        Complex* row = out + static_cast<std::size_t>(i) * nb;
        for (std::size_t j = 0; j < nb; ++j) row[j] = ai * b[j];
    }
}

// Only labels with equal block indices can flip, so the loop enumerates
// (bits1, j) pairs and walks the bits2 stripe directly instead of scanning
// and decoding the whole register.
void phase_flip_intersecting(Complex* a, int two_level_count, int d_levels) {
    const std::uint64_t bits_radix = std::uint64_t{1} << two_level_count;
    const std::uint64_t d = static_cast<std::uint64_t>(d_levels);
    const std::uint64_t outer = bits_radix * d;
#pragma omp parallel for schedule(static) if (outer * bits_radix >= kParallelGrain)
    for (long long p = 0; p < static_cast<long long>(outer); ++p) {
        const std::uint64_t bits1 = static_cast<std::uint64_t>(p) / d;
        const std::uint64_t j = static_cast<std::uint64_t>(p) % d;
        const std::uint64_t base = ((bits1 * d + j) * bits_radix) * d + j;
        for (std::uint64_t bits2 = 0; bits2 < bits_radix; ++bits2) {
            if ((bits1 & bits2) != 0) a[base + bits2 * d] = -a[base + bits2 * d];
        }
    }
}

namespace serial {

double norm_sq(const Complex* a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::norm(a[i]);
    return s;
}

Complex inner(const Complex* a, const Complex* b, std::size_t n) {
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) s += std::conj(a[i]) * b[i];
    return s;
}

void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale(Complex alpha, Complex* a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) a[i] *= alpha;
}

void tensor(const Complex* a, std::size_t na, const Complex* b, std::size_t nb, Complex* out) {
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) out[i * nb + j] = a[i] * b[j];
}

// Full scan with a per-index label decode, deliberately a different code
// path from the stripe-structured production kernel.
void phase_flip_intersecting(Complex* a, int two_level_count, int d_levels) {
    const std::uint64_t bits_radix = std::uint64_t{1} << two_level_count;
    const std::uint64_t d = static_cast<std::uint64_t>(d_levels);
    const std::uint64_t copy_dim = bits_radix * d;
    const std::uint64_t n = copy_dim * copy_dim;
    for (std::uint64_t i = 0; i < n; ++i) {
        const std::uint64_t j2 = i % d;
        std::uint64_t t = i / d;
        const std::uint64_t bits2 = t & (bits_radix - 1);
        t >>= two_level_count;
        const std::uint64_t j1 = t % d;
        const std::uint64_t bits1 = t / d;
        if (j1 == j2 && (bits1 & bits2) != 0) a[i] = -a[i];
    }
}

}  // namespace serial

}  // namespace gdsim::kernels
