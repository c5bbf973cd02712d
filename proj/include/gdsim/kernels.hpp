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

#pragma once

#include <complex>
#include <cstddef>

// Dense amplitude kernels. The OpenMP variants are the production path;
// gdsim::kernels::serial holds plain-loop references kept for testing and
// for the benchmark target.
//
// Reductions accumulate over fixed-size chunks combined left to right, so
// the grouping depends only on the array length. A given input produces the
// same bits for any thread count.

namespace gdsim::kernels {

using Complex = std::complex<double>;

inline constexpr std::size_t kChunk = 4096;
inline constexpr std::size_t kParallelGrain = std::size_t{1} << 14;

double norm_sq(const Complex* a, std::size_t n);

// Conjugate-linear in `a`.
Complex inner(const Complex* a, const Complex* b, std::size_t n);

// y += alpha * x
void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t n);

void scale(Complex alpha, Complex* a, std::size_t n);

// out[i * nb + j] = a[i] * b[j]
void tensor(const Complex* a, std::size_t na, const Complex* b, std::size_t nb, Complex* out);

// Flips the sign of every amplitude of a two-copy register whose label has
// equal block indices and overlapping block bits. The array length must be
// ((2^two_level_count) * d_levels)^2.
void phase_flip_intersecting(Complex* a, int two_level_count, int d_levels);

namespace serial {

double norm_sq(const Complex* a, std::size_t n);
Complex inner(const Complex* a, const Complex* b, std::size_t n);
void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t n);
void scale(Complex alpha, Complex* a, std::size_t n);
void tensor(const Complex* a, std::size_t na, const Complex* b, std::size_t nb, Complex* out);
void phase_flip_intersecting(Complex* a, int two_level_count, int d_levels);

}  // namespace serial

}  // namespace gdsim::kernels
