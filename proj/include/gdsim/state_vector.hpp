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
#include <cstdint>
#include <string>
#include <vector>

#include "gdsim/layout.hpp"
#include "gdsim/rng.hpp"

// Dense complex state vectors over composite registers, and the small set of
// linear-algebra primitives everything else is built from. States are treated
// as immutable values: public operations return new vectors and never touch
// their inputs.

namespace gdsim {

using Complex = std::complex<double>;

// Normalization / unitarity tolerance for public operations.
inline constexpr double kNormTol = 1e-12;
// Tolerance for equivalence residuals and subspace-projection checks.
inline constexpr double kResidualTol = 1e-10;

struct StateVector {
    RegisterLayout layout;
    std::vector<Complex> amps;

    static StateVector zero_state(const RegisterLayout& layout);
    static StateVector basis_state(const RegisterLayout& layout, std::uint64_t flat);
    // Takes ownership of the amplitudes; validates length and finiteness only.
    static StateVector from_amplitudes(const RegisterLayout& layout, std::vector<Complex> amps);

    std::uint64_t dimension() const { return amps.size(); }
    double norm() const;
    bool is_normalized(double tol = kNormTol) const;
};

// Product under the mixed-radix order (left factor most significant). Both
// factors must share the per-copy shape; the copy counts add. Products larger
// than the configured amplitude cap raise CapacityError.
StateVector tensor(const StateVector& a, const StateVector& b,
                   std::uint64_t max_amplitudes = kMaxAmplitudes);

// <a|b>, conjugate-linear in the first argument.
Complex inner(const StateVector& a, const StateVector& b);

// v - 2 <axis|v> axis, the reflection through the hyperplane orthogonal
// to `axis`.
StateVector reflect_about(const StateVector& axis, const StateVector& v);

double l2_distance(const StateVector& a, const StateVector& b);

// Each amplitude has normal real and imaginary parts before normalization,
// which makes the draw rotation invariant.
StateVector random_state(const RegisterLayout& layout, Rng& rng);

// A fixed unitary A with A|0...0> = target, built on the two-dimensional
// subspace spanned by |0...0> and the target: writing target = s|0...0> + r u
// with r >= 0 real and u a unit vector orthogonal to |0...0>, A acts as
//
//   A|0...0> = s|0...0> + r u,   A u = -r|0...0> + conj(s) u,
//
// and as the identity on the orthogonal complement. The decomposition is
// exact (u is the stored residual of the target), so forward and inverse are
// numerically stable for every target, including targets parallel to
// |0...0>; when target == |0...0> the operator is the identity.
class StatePreparer {
  public:
    explicit StatePreparer(StateVector target);

    StateVector forward(const StateVector& v) const;
    StateVector inverse(const StateVector& v) const;

    // In-place variants for iterate-heavy callers.
    void forward_inplace(StateVector& v) const;
    void inverse_inplace(StateVector& v) const;

    const StateVector& target() const { return target_; }

  private:
    void apply(StateVector& v, bool inverse) const;

    StateVector target_;
    StateVector residual_dir_;  // u; its first amplitude is exactly zero
    Complex head_{0.0, 0.0};    // s = <0...0|target>
    double tail_norm_ = 0.0;    // r
};

StateVector prepare_from_zero(const StateVector& target, const StateVector& v);
StateVector prepare_from_zero_inverse(const StateVector& target, const StateVector& v);

// Born-rule sample; deterministic given the generator state. Labels carrying
// exactly zero probability are never produced.
BasisLabel measure_sample(const StateVector& v, Rng& rng);

// FNV-1a over the amplitudes quantized at 1e-12; used for transcript digests.
std::string amplitude_digest(const StateVector& v);

}  // namespace gdsim
