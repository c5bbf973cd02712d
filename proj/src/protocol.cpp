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

#include "gdsim/protocol.hpp"

#include <cmath>

namespace gdsim {

std::string to_string(CutoffMode mode) {
    return mode == CutoffMode::kScaled ? "scaled" : "paper";
}

CutoffMode cutoff_mode_from_string(const std::string& s) {
    if (s == "scaled") return CutoffMode::kScaled;
    if (s == "paper") return CutoffMode::kPaper;
    throw InputError("cutoff mode must be 'scaled' or 'paper'");
}

int Transcript::total_qubits() const {
    int total = 0;
    for (const Message& m : messages) total += m.qubit_count;
    return total;
}

double expected_work_estimate(int n) {
    exact_sqrt(n);
    return 3.0 * std::sqrt(static_cast<double>(n));
}

long cutoff_for(int n, double epsilon, CutoffMode mode) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw InputError("epsilon must lie in (0, 1)");
    if (mode == CutoffMode::kPaper) {
        const long ln = static_cast<long>(n);
        return ln * ln * ln * ln;
    }
    return static_cast<long>(std::ceil(expected_work_estimate(n) / epsilon));
}

int communication_cost(int n) {
    const int r = exact_sqrt(n);
    if (r == 1) return 1;
    int index_qubits = 0;
    while ((1 << index_qubits) < r) ++index_qubits;  // ceil(log2 r)
    return r + index_qubits;
}

bool ground_truth_disjoint(const Bitstring& x, const Bitstring& y) {
    if (x.n() != y.n()) throw InputError("inputs must have equal length");
    for (int k = 0; k < x.n(); ++k) {
        if (x.bits[static_cast<std::size_t>(k)] && y.bits[static_cast<std::size_t>(k)]) {
            return false;
        }
    }
    return true;
}

double failure_probability_bound(int n, double epsilon, CutoffMode mode) {
    const double expected = expected_work_estimate(n);
    const double cutoff = static_cast<double>(cutoff_for(n, epsilon, mode));
    return std::min(1.0, expected / cutoff);
}

ProtocolResult run_disjointness(const ProtocolConfig& config) {
    const int n = config.x.n();
    if (config.y.n() != n) throw InputError("inputs must have equal length");
    exact_sqrt(n);
    if (!(config.epsilon > 0.0 && config.epsilon < 1.0)) {
        throw InputError("epsilon must lie in (0, 1)");
    }

    // Bob's side: encode and send. His input feeds nothing else on Alice's
    // side; she only ever touches the received state.
    const StateVector bob_state = encode_block_state(config.y);
    Message message;
    message.sender = "bob";
    message.label = "bob_state";
    message.qubit_count = communication_cost(n);
    message.state_digest = amplitude_digest(bob_state);
    if (config.keep_message_state) message.state = bob_state.amps;

    ProtocolResult result;
    result.transcript.rounds = 1;
    result.transcript.messages.push_back(std::move(message));

    // Alice's side.
    const StateVector alice_state = encode_block_state(config.x);
    const StateVector joint = tensor(alice_state, bob_state);

    QSearchConfig search;
    search.lambda = config.lambda;
    search.cutoff = cutoff_for(n, config.epsilon, config.cutoff_mode);
    search.seed = config.seed;
    const QSearchOutcome outcome = qsearch(joint, search);

    result.answer = outcome.found.has_value();
    result.ground_truth = !ground_truth_disjoint(config.x, config.y);
    result.q_applications = outcome.q_applications;
    result.preparations = outcome.preparations;
    result.a = exact_a(config.x, config.y);
    return result;
}

}  // namespace gdsim
