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

#include <stdexcept>

namespace gdsim {

// Error taxonomy. The CLI maps InputError to the usage exit code (2);
// the remaining kinds signal a violated contract and exit with 1.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

struct PreconditionError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace gdsim
