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

#include "gdsim/block_encoding.hpp"

#include <cctype>
#include <cmath>

#include "gdsim/kernels.hpp"

namespace gdsim {

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

Bitstring Bitstring::parse(const std::string& text, int n_hint) {
    Bitstring out;
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        if (n_hint <= 0) throw InputError("hex input requires an explicit n");
        std::vector<std::uint8_t> stream;
        stream.reserve(4 * (text.size() - 2));
        for (std::size_t i = 2; i < text.size(); ++i) {
            const int d = hex_digit(text[i]);
            if (d < 0) throw InputError("invalid hex digit in input");
            for (int b = 3; b >= 0; --b) stream.push_back(static_cast<std::uint8_t>((d >> b) & 1));
        }
        const std::size_t n = static_cast<std::size_t>(n_hint);
        if (stream.size() > n) {
            // Leading nibble padding must be zero; the value itself may not
            // exceed n bits.
            for (std::size_t i = 0; i + n < stream.size(); ++i) {
                if (stream[i] != 0) throw InputError("hex value does not fit in n bits");
            }
            out.bits.assign(stream.end() - static_cast<std::ptrdiff_t>(n), stream.end());
        } else {
            out.bits.assign(n - stream.size(), 0);
            out.bits.insert(out.bits.end(), stream.begin(), stream.end());
        }
        return out;
    }
    out.bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') throw InputError("input must be a 0/1 string or 0x-prefixed hex");
        out.bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    if (out.bits.empty()) throw InputError("empty input bitstring");
    if (n_hint > 0 && out.n() != n_hint) throw InputError("bitstring length does not match n");
    return out;
}

Bitstring Bitstring::all_ones(int n) {
    Bitstring out;
    out.bits.assign(static_cast<std::size_t>(n), 1);
    return out;
}

Bitstring Bitstring::zeros(int n) {
    Bitstring out;
    out.bits.assign(static_cast<std::size_t>(n), 0);
    return out;
}

std::string Bitstring::to_string() const {
    std::string s(bits.size(), '0');
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) s[i] = '1';
    }
    return s;
}

int exact_sqrt(int n) {
    if (n < 1) throw InputError("n must be positive");
    const int r = static_cast<int>(std::llround(std::sqrt(static_cast<double>(n))));
    if (r * r != n) throw InputError("n must be a perfect square");
    return r;
}

BlockView block_split(const Bitstring& x) {
    const int r = exact_sqrt(x.n());
    BlockView view;
    view.block_len = r;
    view.blocks.resize(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j) {
        std::uint64_t packed = 0;
        for (int i = 0; i < r; ++i) {
            packed = (packed << 1) | x.bits[static_cast<std::size_t>(j * r + i)];
        }
        view.blocks[static_cast<std::size_t>(j)] = packed;
    }
    return view;
}

RegisterLayout party_layout(int n) {
    const int r = exact_sqrt(n);
    return RegisterLayout{r, r, 1};
}

RegisterLayout joint_layout(int n) {
    const int r = exact_sqrt(n);
    return RegisterLayout{r, r, 2};
}

StateVector encode_block_state(const Bitstring& x) {
    const int r = exact_sqrt(x.n());
    const RegisterLayout layout = party_layout(x.n());
    layout.validate();
    const BlockView view = block_split(x);
    std::vector<Complex> amps(layout.dimension(), Complex{0.0, 0.0});
    const double amp = 1.0 / std::sqrt(static_cast<double>(r));  // n^(-1/4)
    for (int j = 0; j < r; ++j) {
        const std::uint64_t flat =
            view.blocks[static_cast<std::size_t>(j)] * static_cast<std::uint64_t>(r) +
            static_cast<std::uint64_t>(j);
        amps[flat] = Complex{amp, 0.0};
    }
    return StateVector::from_amplitudes(layout, std::move(amps));
}

bool predicate_eval(const BasisLabel& joint_label) {
    if (joint_label.block_index.size() != 2 || joint_label.block_bits.size() != 2) {
        throw ShapeError("predicate expects a two-copy label");
    }
    return joint_label.block_index[0] == joint_label.block_index[1] &&
           (joint_label.block_bits[0] & joint_label.block_bits[1]) != 0;
}

StateVector phase_oracle_apply(const StateVector& v) {
    if (v.layout.copies != 2) throw ShapeError("phase oracle expects a two-copy register");
    StateVector out = v;
    kernels::phase_flip_intersecting(out.amps.data(), v.layout.two_level_count,
                                     v.layout.d_levels);
    return out;
}

double exact_a(const Bitstring& x, const Bitstring& y) {
    if (x.n() != y.n()) throw InputError("inputs must have equal length");
    const int r = exact_sqrt(x.n());
    const BlockView xb = block_split(x);
    const BlockView yb = block_split(y);
    int count = 0;
    for (int j = 0; j < r; ++j) {
        for (int k = 0; k < r; ++k) {
            if (j == k && (xb.blocks[static_cast<std::size_t>(j)] &
                           yb.blocks[static_cast<std::size_t>(k)]) != 0) {
                ++count;
            }
        }
    }
    return static_cast<double>(count) / static_cast<double>(x.n());
}

}  // namespace gdsim
