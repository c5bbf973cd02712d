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

#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <random>

#include "gdsim/report.hpp"
#include "test_util.hpp"

using namespace gdsim;
using namespace gdsim::test;

TEST_CASE("complex and amplitude arrays round trip through json") {
    const std::vector<Complex> amps{{0.5, -0.25}, {0.1234567890123456789, 1e-17}};
    const Json j = amps_to_json(amps);
    CHECK(amps_from_json(j) == amps);  // bit-exact via shortest round-trip floats
}

TEST_CASE("protocol records carry the published fields") {
    ProtocolConfig config;
    config.x = Bitstring::parse("1010");
    config.y = Bitstring::parse("1000");
    config.seed = 9;
    ProtocolResult result;
    result.answer = true;
    result.ground_truth = true;
    result.a = 0.25;
    result.q_applications = 3;
    result.transcript.rounds = 1;
    result.transcript.messages.push_back(Message{"bob", "bob_state", 3, "abc", {}});
    const Json record = protocol_record(config, result);
    for (const char* key : {"n", "x", "y", "answer", "ground_truth", "a", "q_applications",
                            "qubits_sent", "rounds", "seed", "cutoff_mode"}) {
        CHECK(record.contains(key));
    }
    CHECK(record["qubits_sent"] == 3);
    CHECK(record["cutoff_mode"] == "scaled");
}

TEST_CASE("csv flattening quotes nested cells") {
    Json results = Json::array();
    results.push_back(Json{{"name", "alpha"}, {"value", 1.5}, {"nested", Json::array({1, 2})}});
    const Json envelope =
        make_envelope("demo", Json{{"seed", 0}}, results, Json{{"count", 1}});
    const std::string csv = envelope_to_csv(envelope);
    CHECK(csv.find("# command=demo") != std::string::npos);
    CHECK(csv.find("name,value,nested") != std::string::npos);
    CHECK(csv.find("alpha,1.5,\"[1,2]\"") != std::string::npos);
}

TEST_CASE("seed splitting is stable and collision averse") {
    CHECK(split_seed(1, 2) == split_seed(1, 2));
    CHECK(split_seed(1, 2) != split_seed(1, 3));
    CHECK(split_seed(1, 2) != split_seed(2, 2));
}

TEST_CASE("the generator matches the standard mt19937_64 stream") {
    Rng rng(42);
    std::mt19937_64 reference(42);
    for (int i = 0; i < 5; ++i) CHECK(rng.next_u64() == reference());
}

TEST_CASE("uniform draws live in the half-open unit interval") {
    Rng rng(8);
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("the published schema parses and names the envelope") {
    const char* path = std::getenv("GDSIM_SCHEMA");
    if (path == nullptr) return;  // available only under ctest
    std::ifstream in(path);
    REQUIRE(in.good());
    const Json schema = Json::parse(in);
    REQUIRE(schema.contains("required"));
    for (const char* key : {"command", "version", "config", "results", "summary"}) {
        bool found = false;
        for (const auto& item : schema["required"]) found |= item == key;
        CHECK(found);
    }
}
