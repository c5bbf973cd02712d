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

#include <utility>
#include <vector>

#include "gdsim/state_vector.hpp"

// Numerical impossibility certificates for the general-diffusion map
// |psi>|phi> -> |psi> (I - 2|psi><psi|) |phi>.
//
// Two independent routes:
//  - unitarity: the required outputs of the map need not preserve the inner
//    product of its inputs; any triple with nonzero distortion rules out a
//    unitary (or any isometric) implementation on those inputs;
//  - linearity: fixing the map on the product basis and extending linearly
//    disagrees with the defining equation on superposed first registers,
//    ruling out every linear implementation.
//
// Certificates serialize with full input vectors so third parties can
// re-verify them with a few lines of independent code.

namespace gdsim {

// Bare qudit register of the given dimension (no two-level subsystems).
RegisterLayout qudit_layout(int dim, int copies = 1);

struct DistortionWitness {
    StateVector psi1, psi2, phi;
    Complex input_overlap{0.0, 0.0};   // <psi1|psi2> <phi|phi>
    Complex output_overlap{0.0, 0.0};  // <psi1|psi2> <R1 phi|R2 phi>, Ri the reflections
    double distortion = 0.0;           // |input_overlap - output_overlap|
};

DistortionWitness inner_product_distortion(const StateVector& psi1, const StateVector& psi2,
                                           const StateVector& phi);

// Strongest witness over `trials` seeded random triples. Each trial also
// scores the aligned variant phi = psi1, which carries most of the mass of
// large distortions in higher dimensions. Monotone in trials: extending the
// trial count never lowers the result.
DistortionWitness search_max_distortion(int dim, long trials, std::uint64_t seed);

struct LinearExtensionReport {
    int dim = 0;
    // (product basis input, required output) for every |e_i>|e_j>.
    std::vector<std::pair<StateVector, StateVector>> training_pairs;
    StateVector test_input;        // (e0 + e_{dim-1})/sqrt(2) tensor e0
    StateVector extension_output;  // what linearity forces on the test input
    StateVector required_output;   // what the defining equation demands
    double deviation = 0.0;        // || extension_output - required_output ||
};

// Builds the unique linear map that agrees with the general-diffusion
// equation on all product basis inputs, evaluates it on a superposed first
// register, and reports the norm distance to the required output.
LinearExtensionReport linear_extension_contradiction(int dim);

}  // namespace gdsim
