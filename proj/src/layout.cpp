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

#include "gdsim/layout.hpp"

namespace gdsim {

void RegisterLayout::validate(std::uint64_t max_amplitudes) const {
    if (two_level_count < 0 || two_level_count > 48) {
        throw InputError("two_level_count out of range");
    }
    if (d_levels < 1) throw InputError("d_levels must be at least 1");
    if (copies < 1) throw InputError("copies must be at least 1");
    // Overflow-safe capacity check: multiply copy by copy.
    std::uint64_t dim = 1;
    for (int c = 0; c < copies; ++c) {
        const std::uint64_t cd = copy_dimension();
        if (dim > max_amplitudes / cd) {
            throw CapacityError("register dimension exceeds the amplitude cap");
        }
        dim *= cd;
    }
}

std::uint64_t flat_index(const RegisterLayout& layout, const BasisLabel& label) {
    if (label.block_bits.size() != static_cast<std::size_t>(layout.copies) ||
        label.block_index.size() != static_cast<std::size_t>(layout.copies)) {
        throw ShapeError("label copy count does not match layout");
    }
    const std::uint64_t bits_radix = std::uint64_t{1} << layout.two_level_count;
    std::uint64_t flat = 0;
    for (int c = 0; c < layout.copies; ++c) {
        const std::uint64_t bits = label.block_bits[static_cast<std::size_t>(c)];
        const std::uint64_t index = label.block_index[static_cast<std::size_t>(c)];
        if (bits >= bits_radix) throw ShapeError("block bits exceed register width");
        if (index >= static_cast<std::uint64_t>(layout.d_levels)) {
            throw ShapeError("block index exceeds d_levels");
        }
        flat = (flat * bits_radix + bits) * static_cast<std::uint64_t>(layout.d_levels) + index;
    }
    return flat;
}

BasisLabel label_of(const RegisterLayout& layout, std::uint64_t flat) {
    if (flat >= layout.dimension()) throw ShapeError("flat index out of range");
    const std::uint64_t bits_radix = std::uint64_t{1} << layout.two_level_count;
    const std::uint64_t d = static_cast<std::uint64_t>(layout.d_levels);
    BasisLabel label;
    label.block_bits.assign(static_cast<std::size_t>(layout.copies), 0);
    label.block_index.assign(static_cast<std::size_t>(layout.copies), 0);
    for (int c = layout.copies - 1; c >= 0; --c) {
        label.block_index[static_cast<std::size_t>(c)] = static_cast<std::uint32_t>(flat % d);
        flat /= d;
        label.block_bits[static_cast<std::size_t>(c)] = flat % bits_radix;
        flat /= bits_radix;
    }
    return label;
}

std::string bits_to_string(std::uint64_t bits, int width) {
    std::string out(static_cast<std::size_t>(width), '0');
    for (int i = 0; i < width; ++i) {
        if ((bits >> (width - 1 - i)) & 1ull) out[static_cast<std::size_t>(i)] = '1';
    }
    return out;
}

}  // namespace gdsim
