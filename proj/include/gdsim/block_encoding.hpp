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

#include <cstdint>
#include <string>
#include <vector>

#include "gdsim/state_vector.hpp"

// Block encoding of classical bitstrings and the intersection oracle.
//
// An n-bit input x (n a perfect square) is cut into sqrt(n) blocks of
// sqrt(n) bits, and encoded as the uniform superposition
//
//   n^(-1/4) * sum_j |x_block(j)> |j>
//
// over sqrt(n) two-level subsystems plus one sqrt(n)-level index subsystem.
// The oracle predicate tests a *joint* (two-copy) basis label on its own
// contents: block indices equal and block bits overlapping. On the support
// of an encoded pair the label contents are the actual input blocks, and
// defining the predicate on every label makes the phase flip a total
// diagonal unitary, independent of the inputs.
//
// Bit conventions, used everywhere: index 0 of an input is its leftmost
// written character; the set encoded by x is { k : x_k = 1 }.

namespace gdsim {

struct Bitstring {
    std::vector<std::uint8_t> bits;  // bits[0] is the leftmost character

    int n() const { return static_cast<int>(bits.size()); }

    // Accepts an ASCII 0/1 string, or hex with an 0x prefix (which requires
    // an explicit target length). Throws InputError on anything else.
    static Bitstring parse(const std::string& text, int n_hint = -1);

    static Bitstring all_ones(int n);
    static Bitstring zeros(int n);

    std::string to_string() const;
};

// Returns sqrt(n) or throws InputError when n is not a positive perfect square.
int exact_sqrt(int n);

struct BlockView {
    int block_len = 0;
    std::vector<std::uint64_t> blocks;  // packed big-endian, block j first
};

// Block j holds bits [j*sqrt(n), (j+1)*sqrt(n)); the split is lossless.
BlockView block_split(const Bitstring& x);

RegisterLayout party_layout(int n);  // sqrt(n) qubits + sqrt(n)-level index
RegisterLayout joint_layout(int n);  // two copies of the above

// The encoded state described above: exactly sqrt(n) nonzero amplitudes,
// each n^(-1/4).
StateVector encode_block_state(const Bitstring& x);

// True iff the two copies of a joint label have equal block indices and
// their block bits share a set position.
bool predicate_eval(const BasisLabel& joint_label);

// Diagonal involutive unitary: amplitude at label L is negated iff
// predicate_eval(L).
StateVector phase_oracle_apply(const StateVector& v);

// Initial success probability of the encoded pair: the number of block-index
// pairs (j, k) whose labels satisfy the predicate, divided by n. Each of the
// n support labels of the pair state carries probability 1/n, so this equals
// the squared overlap of the state with its predicate-true component.
double exact_a(const Bitstring& x, const Bitstring& y);

}  // namespace gdsim
