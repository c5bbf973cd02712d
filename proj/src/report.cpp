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

#include "gdsim/report.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace gdsim {

Json complex_to_json(const Complex& c) { return Json::array({c.real(), c.imag()}); }

Json amps_to_json(const std::vector<Complex>& amps) {
    Json arr = Json::array();
    for (const Complex& c : amps) arr.push_back(complex_to_json(c));
    return arr;
}

std::vector<Complex> amps_from_json(const Json& j) {
    std::vector<Complex> amps;
    amps.reserve(j.size());
    for (const auto& pair : j) {
        amps.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
    return amps;
}

Json label_to_json(const RegisterLayout& layout, const BasisLabel& label) {
    Json blocks = Json::array();
    Json indices = Json::array();
    for (int c = 0; c < layout.copies; ++c) {
        blocks.push_back(
            bits_to_string(label.block_bits[static_cast<std::size_t>(c)], layout.two_level_count));
        indices.push_back(label.block_index[static_cast<std::size_t>(c)]);
    }
    return Json{{"blocks", blocks}, {"indices", indices}};
}

Json transcript_to_json(const Transcript& transcript, bool include_states) {
    Json messages = Json::array();
    for (const Message& m : transcript.messages) {
        Json msg{{"sender", m.sender},
                 {"label", m.label},
                 {"qubits", m.qubit_count},
                 {"digest", m.state_digest}};
        if (include_states && !m.state.empty()) msg["state"] = amps_to_json(m.state);
        messages.push_back(std::move(msg));
    }
    return Json{{"messages", messages}, {"rounds", transcript.rounds}};
}

Json protocol_record(const ProtocolConfig& config, const ProtocolResult& result) {
    return Json{{"n", config.x.n()},
                {"x", config.x.to_string()},
                {"y", config.y.to_string()},
                {"answer", result.answer},
                {"ground_truth", result.ground_truth},
                {"a", result.a},
                {"q_applications", result.q_applications},
                {"qubits_sent", result.transcript.total_qubits()},
                {"rounds", result.transcript.rounds},
                {"seed", config.seed},
                {"cutoff_mode", to_string(config.cutoff_mode)}};
}

Json witness_to_json(int dim, const DistortionWitness& w) {
    return Json{{"type", "distortion_witness"},
                {"dim", dim},
                {"psi1", amps_to_json(w.psi1.amps)},
                {"psi2", amps_to_json(w.psi2.amps)},
                {"phi", amps_to_json(w.phi.amps)},
                {"input_overlap", complex_to_json(w.input_overlap)},
                {"output_overlap", complex_to_json(w.output_overlap)},
                {"distortion", w.distortion}};
}

Json linear_report_to_json(const LinearExtensionReport& report) {
    Json pairs = Json::array();
    for (const auto& [input, output] : report.training_pairs) {
        pairs.push_back(
            Json{{"input", amps_to_json(input.amps)}, {"output", amps_to_json(output.amps)}});
    }
    return Json{{"type", "linear_extension"},
                {"dim", report.dim},
                {"training_pairs", pairs},
                {"test_input", amps_to_json(report.test_input.amps)},
                {"extension_output", amps_to_json(report.extension_output.amps)},
                {"required_output", amps_to_json(report.required_output.amps)},
                {"deviation", report.deviation}};
}

Json make_envelope(const std::string& command, Json config, Json results, Json summary) {
    return Json{{"command", command},
                {"version", kVersion},
                {"config", std::move(config)},
                {"results", std::move(results)},
                {"summary", std::move(summary)}};
}

namespace {

std::string csv_cell(const Json& value) {
    std::string text;
    if (value.is_string()) {
        text = value.get<std::string>();
    } else {
        text = value.dump();
    }
    const bool needs_quoting = text.find_first_of(",\"\n") != std::string::npos;
    if (!needs_quoting) return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += "\"\"";
        else quoted += c;
    }
    quoted += "\"";
    return quoted;
}

}  // namespace

std::string envelope_to_csv(const Json& envelope) {
    std::ostringstream out;
    out << "# command=" << envelope.at("command").get<std::string>()
        << " version=" << envelope.at("version").get<std::string>() << "\n";
    out << "# config=" << envelope.at("config").dump() << "\n";
    out << "# summary=" << envelope.at("summary").dump() << "\n";
    const Json& results = envelope.at("results");
    if (results.empty()) return out.str();
    const Json& first = results.front();
    bool lead = true;
    for (const auto& [key, value] : first.items()) {
        (void)value;
        if (!lead) out << ",";
        out << key;
        lead = false;
    }
    out << "\n";
    for (const Json& row : results) {
        lead = true;
        for (const auto& [key, value] : row.items()) {
            (void)key;
            if (!lead) out << ",";
            out << csv_cell(value);
            lead = false;
        }
        out << "\n";
    }
    return out.str();
}

void emit_report(const Json& envelope, const std::string& format, const std::string& out_path) {
    std::string text;
    if (format == "csv") {
        text = envelope_to_csv(envelope);
    } else if (format == "json") {
        text = envelope.dump(2);
        text += "\n";
    } else {
        throw InputError("format must be 'json' or 'csv'");
    }
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw InputError("cannot open output file: " + out_path);
        file << text;
    }
}

}  // namespace gdsim
