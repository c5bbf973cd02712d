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

#include "gdsim/errors.hpp"

namespace gdsim {

// Default cap on amplitude-array length; constructors refuse anything larger.
inline constexpr std::uint64_t kMaxAmplitudes = 1ull << 28;

// Shape of a composite register. Each party copy holds `two_level_count`
// two-level subsystems followed by one `d_levels`-level index subsystem;
// all copies share the same shape. two_level_count == 0 describes a bare
// qudit register (used by the no-go certificates, which need arbitrary
// dimensions).
struct RegisterLayout {
    int two_level_count = 1;
    int d_levels = 1;
    int copies = 1;

    std::uint64_t copy_dimension() const {
        return (std::uint64_t{1} << two_level_count) * static_cast<std::uint64_t>(d_levels);
    }

    std::uint64_t dimension() const {
        std::uint64_t dim = 1;
        for (int c = 0; c < copies; ++c) dim *= copy_dimension();
        return dim;
    }

    // Throws InputError / CapacityError for an unusable shape.
    void validate(std::uint64_t max_amplitudes = kMaxAmplitudes) const;

    bool operator==(const RegisterLayout&) const = default;
};

// Basis label in the documented mixed-radix order: copy 1 is most
// significant; within a copy the block bits precede the block index.
// Bit 0 of a block is its leftmost written character and is stored in the
// highest position of the packed word, so "10" packs to 0b10.
struct BasisLabel {
    std::vector<std::uint64_t> block_bits;   // one packed word per copy
    std::vector<std::uint32_t> block_index;  // one index per copy
};

std::uint64_t flat_index(const RegisterLayout& layout, const BasisLabel& label);
BasisLabel label_of(const RegisterLayout& layout, std::uint64_t flat);

// Renders a packed block as its written form, bit 0 first.
std::string bits_to_string(std::uint64_t bits, int width);

}  // namespace gdsim
