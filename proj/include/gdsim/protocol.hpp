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

#include <string>
#include <vector>

#include "gdsim/amplification.hpp"
#include "gdsim/block_encoding.hpp"

// One-round two-party disjointness over the block encoding, with qubit-
// metered messages. Bob encodes his input and sends the single message;
// Alice tensors it with her own encoding and runs the unknown-probability
// search; she answers "intersecting" iff the search measures a good label.
// Ground truth is computed classically by the harness for scoring and is
// never visible to the simulated parties.

namespace gdsim {

enum class CutoffMode {
    kScaled,  // ceil(expected_work_estimate(n) / epsilon) iterate applications
    kPaper,   // n^4 iterate applications
};

std::string to_string(CutoffMode mode);
CutoffMode cutoff_mode_from_string(const std::string& s);

struct ProtocolConfig {
    Bitstring x;  // Alice's input
    Bitstring y;  // Bob's input
    double epsilon = 0.1;
    CutoffMode cutoff_mode = CutoffMode::kScaled;
    double lambda = 1.2;
    std::uint64_t seed = 0;
    bool keep_message_state = false;  // retain Bob's full state in the transcript
};

struct Message {
    std::string sender;
    std::string label;
    int qubit_count = 0;
    std::string state_digest;
    std::vector<Complex> state;  // populated only with keep_message_state
};

struct Transcript {
    std::vector<Message> messages;
    int rounds = 0;

    int total_qubits() const;
};

struct ProtocolResult {
    bool answer = false;        // true = claims the sets intersect
    bool ground_truth = false;  // true = the sets really intersect
    long q_applications = 0;
    long preparations = 0;
    Transcript transcript;
    double a = 0.0;  // exact initial success probability of the instance
};

// Crude mean-work estimate for a worst-case (a = 1/n) instance: 3 * sqrt(n)
// iterate applications. Feeds the scaled cutoff and the failure bound.
double expected_work_estimate(int n);

long cutoff_for(int n, double epsilon, CutoffMode mode);

// Message cost of one encoded state: sqrt(n) two-level subsystems plus
// ceil(log2(sqrt(n))) qubit-equivalents for the index subsystem; floored at
// one qubit for the degenerate n = 1 register.
int communication_cost(int n);

bool ground_truth_disjoint(const Bitstring& x, const Bitstring& y);

// Markov-style bound on the false-negative probability implied by the
// configured cutoff: expected_work_estimate(n) / cutoff, capped at 1. In
// scaled mode this evaluates to (approximately) epsilon by construction.
double failure_probability_bound(int n, double epsilon, CutoffMode mode);

ProtocolResult run_disjointness(const ProtocolConfig& config);

}  // namespace gdsim
