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

#include "gdsim/nogo.hpp"

#include <cmath>

namespace gdsim {

RegisterLayout qudit_layout(int dim, int copies) {
    if (dim < 2) throw InputError("qudit dimension must be at least 2");
    return RegisterLayout{0, dim, copies};
}

DistortionWitness inner_product_distortion(const StateVector& psi1, const StateVector& psi2,
                                           const StateVector& phi) {
    const Complex s = inner(psi1, psi2);
    const Complex phi_norm = inner(phi, phi);
    const StateVector out1 = reflect_about(psi1, phi);
    const StateVector out2 = reflect_about(psi2, phi);
    DistortionWitness w;
    w.psi1 = psi1;
    w.psi2 = psi2;
    w.phi = phi;
    w.input_overlap = s * phi_norm;
    w.output_overlap = s * inner(out1, out2);
    w.distortion = std::abs(w.input_overlap - w.output_overlap);
    return w;
}

namespace {

// One seeded trial: the sampled triple and its aligned variant.
double trial_distortion(int dim, std::uint64_t trial_seed) {
    Rng rng(trial_seed);
    const RegisterLayout layout = qudit_layout(dim);
    const StateVector psi1 = random_state(layout, rng);
    const StateVector psi2 = random_state(layout, rng);
    const StateVector phi = random_state(layout, rng);
    const double sampled = inner_product_distortion(psi1, psi2, phi).distortion;
    const double aligned = inner_product_distortion(psi1, psi2, psi1).distortion;
    return std::max(sampled, aligned);
}

DistortionWitness rebuild_trial_witness(int dim, std::uint64_t trial_seed) {
    Rng rng(trial_seed);
    const RegisterLayout layout = qudit_layout(dim);
    const StateVector psi1 = random_state(layout, rng);
    const StateVector psi2 = random_state(layout, rng);
    const StateVector phi = random_state(layout, rng);
    const DistortionWitness sampled = inner_product_distortion(psi1, psi2, phi);
    const DistortionWitness aligned = inner_product_distortion(psi1, psi2, psi1);
    return aligned.distortion > sampled.distortion ? aligned : sampled;
}

}  // namespace

DistortionWitness search_max_distortion(int dim, long trials, std::uint64_t seed) {
    if (trials < 1) throw InputError("trials must be at least 1");
    std::vector<double> scores(static_cast<std::size_t>(trials), 0.0);
#pragma omp parallel for schedule(static)
    for (long t = 0; t < trials; ++t) {
        scores[static_cast<std::size_t>(t)] =
            trial_distortion(dim, split_seed(seed, static_cast<std::uint64_t>(t)));
    }
    // First index attaining the maximum, so the winner is schedule independent.
    std::size_t best = 0;
    for (std::size_t t = 1; t < scores.size(); ++t) {
        if (scores[t] > scores[best]) best = t;
    }
    return rebuild_trial_witness(dim, split_seed(seed, best));
}

LinearExtensionReport linear_extension_contradiction(int dim) {
    if (dim < 2) throw InputError("dimension must be at least 2");
    const RegisterLayout pair_layout = qudit_layout(dim, 2);
    const std::uint64_t d = static_cast<std::uint64_t>(dim);

    LinearExtensionReport report;
    report.dim = dim;
    report.training_pairs.reserve(d * d);
    for (std::uint64_t i = 0; i < d; ++i) {
        for (std::uint64_t j = 0; j < d; ++j) {
            // On |e_i>|e_j> the defining map reflects e_j about e_i:
            // the output is |e_i>|e_j - 2 delta_ij e_i|.
            StateVector input = StateVector::basis_state(pair_layout, i * d + j);
            StateVector output = input;
            if (i == j) output.amps[i * d + j] = Complex{-1.0, 0.0};
            report.training_pairs.emplace_back(std::move(input), std::move(output));
        }
    }

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    // Test input: psi tensor e0 with psi = (e0 + e_{dim-1})/sqrt(2).
    std::vector<Complex> test(d * d, Complex{0.0, 0.0});
    test[0] = Complex{inv_sqrt2, 0.0};
    test[(d - 1) * d] = Complex{inv_sqrt2, 0.0};
    report.test_input = StateVector::from_amplitudes(pair_layout, std::move(test));

    // Linearity forces (D(e0 e0) + D(e_{d-1} e0))/sqrt(2)
    //   = (-e0 e0 + e_{d-1} e0)/sqrt(2).
    std::vector<Complex> ext(d * d, Complex{0.0, 0.0});
    ext[0] = Complex{-inv_sqrt2, 0.0};
    ext[(d - 1) * d] = Complex{inv_sqrt2, 0.0};
    report.extension_output = StateVector::from_amplitudes(pair_layout, std::move(ext));

    // The defining equation demands psi tensor (I - 2|psi><psi|) e0
    //   = psi tensor (-e_{d-1}).
    std::vector<Complex> req(d * d, Complex{0.0, 0.0});
    req[d - 1] = Complex{-inv_sqrt2, 0.0};
    req[(d - 1) * d + (d - 1)] = Complex{-inv_sqrt2, 0.0};
    report.required_output = StateVector::from_amplitudes(pair_layout, std::move(req));

    report.deviation = l2_distance(report.extension_output, report.required_output);
    return report;
}

}  // namespace gdsim
