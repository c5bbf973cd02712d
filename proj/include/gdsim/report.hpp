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

#include <json.hpp>

#include "gdsim/nogo.hpp"
#include "gdsim/protocol.hpp"

// Report assembly. Every report is a self-describing envelope
//
//   { command, version, config, results, summary }
//
// with the seed echoed inside config, so any run can be reproduced from its
// own output. Numbers are serialized in shortest round-trip form; complex
// values as [re, im] pairs. Reports carry no timestamps — identical
// invocations must produce identical bytes. The envelope schema ships in
// reports/schema.json.

namespace gdsim {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

Json complex_to_json(const Complex& c);
Json amps_to_json(const std::vector<Complex>& amps);
std::vector<Complex> amps_from_json(const Json& j);

Json label_to_json(const RegisterLayout& layout, const BasisLabel& label);

Json protocol_record(const ProtocolConfig& config, const ProtocolResult& result);
Json transcript_to_json(const Transcript& transcript, bool include_states);

Json witness_to_json(int dim, const DistortionWitness& w);
Json linear_report_to_json(const LinearExtensionReport& report);

Json make_envelope(const std::string& command, Json config, Json results, Json summary);

// One row per result record; config and summary ride along as '#'-prefixed
// JSON comment lines. Nested values are embedded as JSON text in their cell.
std::string envelope_to_csv(const Json& envelope);

// Serializes per `format` ("json" or "csv") and writes to `out_path`, or to
// stdout when the path is empty.
void emit_report(const Json& envelope, const std::string& format, const std::string& out_path);

}  // namespace gdsim
