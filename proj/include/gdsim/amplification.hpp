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

#include <optional>

#include "gdsim/block_encoding.hpp"
#include "gdsim/state_vector.hpp"

// Amplitude amplification over the two-copy block-encoded register: the
// good/bad decomposition, the Grover iterate Q, the general-diffusion
// pseudo-gate, and the unknown-probability search schedule.

namespace gdsim {

// psi = sqrt(1-a) * bad + sqrt(a) * good, with `good` supported on
// predicate-true labels and `bad` on the rest. Both members are scaled so
// their overlap with psi is real and nonnegative, which makes the split
// unique. A member is absent when its projection is exactly zero
// (a == 0 or a == 1).
struct GoodBadDecomposition {
    std::optional<StateVector> bad;   // psi0
    std::optional<StateVector> good;  // psi1
    double a = 0.0;
};

GoodBadDecomposition decompose_good_bad(const StateVector& psi);

// The general-diffusion pseudo-gate: returns (I - 2|psi><psi|) phi, with the
// reference state understood as untouched classical side data.
//
// THIS IS THE SIMULATOR'S CHEAT. The reflection axis is supplied as an
// explicit classical description of psi — the full amplitude list — which is
// exactly the resource a physical device holding a single copy of psi does
// not have. No linear or unitary operator implements this map from the
// quantum inputs alone; the nogo module produces numerical certificates of
// that. Every use of this function (and every fresh re-preparation from a
// classical description, as in qsearch) marks a point where the simulation
// exceeds single-copy physics.
StateVector general_diffusion_apply(const StateVector& psi_ref, const StateVector& phi);

// The iterate Q = -A S0 A^{-1} S_chi, where A prepares psi_ref from
// |0...0>, S0 negates the |0...0> amplitude and S_chi is the intersection
// phase oracle. Applied right to left.
class GroverIterate {
  public:
    explicit GroverIterate(StateVector psi_ref);

    StateVector apply(const StateVector& v) const;
    void apply_inplace(StateVector& v) const;

    const StateVector& psi_ref() const { return prep_.target(); }

  private:
    StatePreparer prep_;
};

StateVector apply_q(const StateVector& psi_ref, const StateVector& v);

// || Q phi - (-1) * D (U phi) ||, where D reflects about psi_ref and U is the
// phase oracle. The left side goes through the preparer construction of Q and
// the right side through the direct reflection, so a small residual checks
// one route against the other. phi must lie in the span of the good/bad
// components of psi_ref (projection residual below 1e-10), else
// PreconditionError.
double claim_equivalence_residual(const StateVector& psi_ref, const StateVector& phi);

// sin^2((2j+1) * asin(sqrt(a))): the probability that measuring after j
// iterate applications of a fresh preparation yields a good label.
double analytic_success_prob(double a, long j);

struct QSearchConfig {
    double lambda = 1.2;     // schedule growth factor, in (1, 2)
    long cutoff = 1;         // stop once total iterate applications exceed this
    std::uint64_t seed = 0;
};

struct QSearchOutcome {
    std::optional<BasisLabel> found;  // a predicate-true label, when present
    long q_applications = 0;
    long preparations = 0;
};

// Unknown-probability search: m starts at 1; each round draws j uniformly
// from [0, m), freshly prepares psi_ref, applies the iterate j times,
// measures, and returns on a good label; otherwise m grows by lambda up to
// sqrt(dimension). Gives up once the total number of iterate applications
// exceeds the cutoff. Deterministic given the seed.
QSearchOutcome qsearch(const StateVector& psi_ref, const QSearchConfig& config);

struct AnalyticSearchOutcome {
    bool found = false;
    long q_applications = 0;
    long preparations = 0;
};

// Same schedule against the closed-form success curve instead of a state
// vector: a round with j applications succeeds with probability
// analytic_success_prob(a, j). Used for fast scaling studies.
AnalyticSearchOutcome qsearch_analytic(double a, const QSearchConfig& config, double m_cap);

}  // namespace gdsim
