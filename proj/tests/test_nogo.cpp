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

#include <doctest.h>

#include <cmath>

#include "gdsim/nogo.hpp"
#include "test_util.hpp"

using namespace gdsim;
using namespace gdsim::test;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kSqrt2 = std::sqrt(2.0);
}

TEST_CASE("identical reference states give zero distortion") {
    Rng rng(61);
    const RegisterLayout layout = qudit_layout(3);
    const StateVector psi = random_state(layout, rng);
    const StateVector phi = random_state(layout, rng);
    const DistortionWitness w = inner_product_distortion(psi, psi, phi);
    CHECK(w.distortion <= 1e-12);
}

TEST_CASE("the textbook triple distorts by one over sqrt(2)") {
    const DistortionWitness w = inner_product_distortion(ket(0), plus_state(), ket(0));
    CHECK(close(w.input_overlap, Complex{kInvSqrt2, 0.0}, 1e-12));
    CHECK(close(w.output_overlap, Complex{0.0, 0.0}, 1e-12));
    CHECK(close(w.distortion, 0.70710678118654752, 1e-12));
}

TEST_CASE("orthogonal reference states certify nothing") {
    const DistortionWitness w = inner_product_distortion(ket(0), ket(1), plus_state());
    CHECK(close(w.input_overlap, Complex{0.0, 0.0}, 1e-15));
    CHECK(close(w.output_overlap, Complex{0.0, 0.0}, 1e-15));
    CHECK(w.distortion <= 1e-15);
}

TEST_CASE("distortion search clears one half at dimension two") {
    const DistortionWitness w = search_max_distortion(2, 1000, 5);
    CHECK(w.distortion >= 0.5);
    // The winner re-verifies from its own stored vectors.
    const DistortionWitness again = inner_product_distortion(w.psi1, w.psi2, w.phi);
    CHECK(close(again.distortion, w.distortion, 1e-12));
}

TEST_CASE("distortion search is monotone in the trial count") {
    const double few = search_max_distortion(2, 200, 7).distortion;
    const double many = search_max_distortion(2, 1000, 7).distortion;
    CHECK(many >= few);
}

TEST_CASE("distortion search is reproducible") {
    const DistortionWitness a = search_max_distortion(4, 300, 13);
    const DistortionWitness b = search_max_distortion(4, 300, 13);
    CHECK(a.distortion == b.distortion);
    CHECK(a.psi1.amps == b.psi1.amps);
    CHECK_THROWS_AS(search_max_distortion(2, 0, 1), InputError);
}

TEST_CASE("both certificates are positive at every probed dimension") {
    for (int dim : {2, 3, 4, 8}) {
        CHECK(search_max_distortion(dim, 1000, 2026).distortion > 1e-6);
        CHECK(linear_extension_contradiction(dim).deviation > 1e-6);
    }
}

TEST_CASE("linear extension contradiction at dimension two") {
    const LinearExtensionReport report = linear_extension_contradiction(2);
    CHECK(report.training_pairs.size() == 4);
    CHECK(close(report.deviation, kSqrt2, 1e-12));
    CHECK(report.deviation > 0.9);

    // Linearity forces (-e0 e0 + e1 e0)/sqrt(2) on the test input.
    CHECK(close(report.extension_output.amps[0], Complex{-kInvSqrt2, 0.0}, 1e-15));
    CHECK(close(report.extension_output.amps[2], Complex{kInvSqrt2, 0.0}, 1e-15));
    // The defining equation demands ((e0+e1)/sqrt(2)) (-e1).
    CHECK(close(report.required_output.amps[1], Complex{-kInvSqrt2, 0.0}, 1e-15));
    CHECK(close(report.required_output.amps[3], Complex{-kInvSqrt2, 0.0}, 1e-15));
}

TEST_CASE("training pairs pin the map on the product basis") {
    const LinearExtensionReport report = linear_extension_contradiction(3);
    REQUIRE(report.training_pairs.size() == 9);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const auto& [input, output] = report.training_pairs[static_cast<std::size_t>(i * 3 + j)];
            const Complex in_amp = input.amps[static_cast<std::size_t>(i * 3 + j)];
            const Complex out_amp = output.amps[static_cast<std::size_t>(i * 3 + j)];
            CHECK(in_amp == Complex{1.0, 0.0});
            CHECK(out_amp == (i == j ? Complex{-1.0, 0.0} : Complex{1.0, 0.0}));
        }
    }
}

TEST_CASE("deviation is blind to a global phase on the test input") {
    const LinearExtensionReport report = linear_extension_contradiction(2);
    const Complex phase{std::cos(0.9), std::sin(0.9)};
    StateVector ext = report.extension_output;
    StateVector req = report.required_output;
    for (Complex& c : ext.amps) c *= phase;
    for (Complex& c : req.amps) c *= phase;
    CHECK(close(l2_distance(ext, req), report.deviation, 1e-12));
}

TEST_CASE("linear extension contradiction one dimension up") {
    const LinearExtensionReport report = linear_extension_contradiction(3);
    CHECK(report.deviation > 0.0);
    CHECK(close(report.deviation, kSqrt2, 1e-12));
    CHECK_THROWS_AS(linear_extension_contradiction(1), InputError);
}
