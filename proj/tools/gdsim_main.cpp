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

// Command-line surface. Every command is deterministic given its full flag
// set; reports echo their configuration so runs can be reproduced from the
// output alone. Exit codes: 0 success, 1 invariant violation, 2 usage error.

#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gdsim/report.hpp"

namespace {

using namespace gdsim;

constexpr double kPi = 3.14159265358979323846;

struct OutputOptions {
    std::string format = "json";
    std::string out_path;
};

void add_output_flags(CLI::App* cmd, OutputOptions* opts) {
    cmd->add_option("--format", opts->format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opts->out_path, "Write the report to a file instead of stdout");
}

Bitstring bitstring_from_value(std::uint64_t value, int n) {
    Bitstring out;
    out.bits.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out.bits[static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>((value >> (n - 1 - i)) & 1ull);
    }
    return out;
}

Bitstring random_bitstring(int n, Rng& rng) {
    Bitstring out;
    out.bits.resize(static_cast<std::size_t>(n));
    for (auto& bit : out.bits) bit = rng.uniform() < 0.5 ? 1 : 0;
    return out;
}

// ---------------------------------------------------------------- encode --

struct EncodeArgs {
    int n = -1;
    std::string x;
    OutputOptions output;
};

int cmd_encode(const EncodeArgs& args) {
    const Bitstring x = Bitstring::parse(args.x, args.n);
    const StateVector state = encode_block_state(x);
    const int r = exact_sqrt(x.n());

    Json rows = Json::array();
    for (std::uint64_t i = 0; i < state.dimension(); ++i) {
        if (state.amps[i] == Complex{0.0, 0.0}) continue;
        const BasisLabel label = label_of(state.layout, i);
        rows.push_back(Json{{"block", bits_to_string(label.block_bits[0], r)},
                            {"index", label.block_index[0]},
                            {"amplitude", complex_to_json(state.amps[i])}});
    }
    Json config{{"n", x.n()}, {"x", x.to_string()}};
    Json summary{{"nonzero_count", rows.size()},
                 {"amplitude_magnitude", 1.0 / std::sqrt(static_cast<double>(r))}};
    emit_report(make_envelope("encode", config, rows, summary), args.output.format,
                args.output.out_path);
    return 0;
}

// ------------------------------------------------------------------- run --

struct RunArgs {
    int n = -1;
    std::string x, y;
    std::uint64_t seed = 0;
    double epsilon = 0.1;
    std::string cutoff = "scaled";
    double lambda = 1.2;
    bool verbose = false;
    OutputOptions output;
};

int cmd_run(const RunArgs& args) {
    ProtocolConfig config;
    config.x = Bitstring::parse(args.x, args.n);
    config.y = Bitstring::parse(args.y, args.n);
    config.epsilon = args.epsilon;
    config.cutoff_mode = cutoff_mode_from_string(args.cutoff);
    config.lambda = args.lambda;
    config.seed = args.seed;
    config.keep_message_state = args.verbose;

    const ProtocolResult result = run_disjointness(config);

    Json record = protocol_record(config, result);
    record["transcript"] = transcript_to_json(result.transcript, args.verbose);
    Json config_echo{{"n", config.x.n()},
                     {"x", config.x.to_string()},
                     {"y", config.y.to_string()},
                     {"seed", config.seed},
                     {"epsilon", config.epsilon},
                     {"cutoff_mode", to_string(config.cutoff_mode)},
                     {"cutoff", cutoff_for(config.x.n(), config.epsilon, config.cutoff_mode)},
                     {"lambda", config.lambda}};
    Json summary{{"true_rate", result.answer ? 1.0 : 0.0},
                 {"mean_q_applications", static_cast<double>(result.q_applications)},
                 {"failure_probability_bound",
                  failure_probability_bound(config.x.n(), config.epsilon, config.cutoff_mode)}};
    emit_report(make_envelope("run", config_echo, Json::array({record}), summary),
                args.output.format, args.output.out_path);
    return 0;
}

// ----------------------------------------------------------------- sweep --

struct SweepArgs {
    std::vector<int> n_list{4};
    long trials = 100;
    std::uint64_t seed = 0;
    std::string mode = "random";
    double epsilon = 0.1;
    std::string cutoff = "scaled";
    double lambda = 1.2;
    OutputOptions output;
};

int cmd_sweep(const SweepArgs& args) {
    if (args.trials < 1) throw InputError("trials must be at least 1");
    const CutoffMode cutoff_mode = cutoff_mode_from_string(args.cutoff);
    const bool exhaustive = args.mode == "exhaustive";

    Json results = Json::array();
    long intersecting = 0;
    long intersecting_true = 0;
    long disjoint = 0;
    long false_positives = 0;
    double q_total = 0.0;

    std::uint64_t record_base = 0;
    for (int n : args.n_list) {
        exact_sqrt(n);
        std::vector<ProtocolConfig> configs;
        if (exhaustive) {
            if (n > 4) throw InputError("exhaustive mode is limited to n <= 4");
            const std::uint64_t values = std::uint64_t{1} << n;
            for (std::uint64_t xv = 0; xv < values; ++xv) {
                for (std::uint64_t yv = 0; yv < values; ++yv) {
                    for (long t = 0; t < args.trials; ++t) {
                        ProtocolConfig config;
                        config.x = bitstring_from_value(xv, n);
                        config.y = bitstring_from_value(yv, n);
                        config.seed = split_seed(args.seed, record_base + configs.size());
                        configs.push_back(std::move(config));
                    }
                }
            }
        } else {
            for (long t = 0; t < args.trials; ++t) {
                const std::uint64_t record_seed = split_seed(args.seed, record_base + configs.size());
                Rng rng(record_seed);
                ProtocolConfig config;
                config.x = random_bitstring(n, rng);
                config.y = random_bitstring(n, rng);
                config.seed = rng.next_u64();
                configs.push_back(std::move(config));
            }
        }
        record_base += configs.size();

        for (ProtocolConfig& config : configs) {
            config.epsilon = args.epsilon;
            config.cutoff_mode = cutoff_mode;
            config.lambda = args.lambda;
        }

        std::vector<ProtocolResult> outcomes(configs.size());
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(configs.size()); ++i) {
            outcomes[static_cast<std::size_t>(i)] =
                run_disjointness(configs[static_cast<std::size_t>(i)]);
        }

        for (std::size_t i = 0; i < configs.size(); ++i) {
            const ProtocolResult& r = outcomes[i];
            results.push_back(protocol_record(configs[i], r));
            q_total += static_cast<double>(r.q_applications);
            if (r.ground_truth) {
                ++intersecting;
                if (r.answer) ++intersecting_true;
            } else {
                ++disjoint;
                if (r.answer) ++false_positives;
            }
        }
    }

    Json n_list = Json::array();
    for (int n : args.n_list) n_list.push_back(n);
    Json config_echo{{"n_list", n_list},      {"trials", args.trials},
                     {"seed", args.seed},     {"mode", args.mode},
                     {"epsilon", args.epsilon}, {"cutoff_mode", args.cutoff},
                     {"lambda", args.lambda}};
    const long total = intersecting + disjoint;
    Json summary{{"records", total},
                 {"intersecting_count", intersecting},
                 {"disjoint_count", disjoint},
                 {"true_rate", intersecting > 0
                                   ? static_cast<double>(intersecting_true) /
                                         static_cast<double>(intersecting)
                                   : 1.0},
                 {"false_positive_count", false_positives},
                 {"mean_q_applications",
                  total > 0 ? q_total / static_cast<double>(total) : 0.0}};
    emit_report(make_envelope("sweep", config_echo, results, summary), args.output.format,
                args.output.out_path);
    // The disjoint side of the sweep is the operational one-sided-error
    // check: any positive answer there is an invariant violation.
    return false_positives > 0 ? 1 : 0;
}

// ---------------------------------------------------------- certify-nogo --

struct CertifyArgs {
    int dim = 2;
    long trials = 1000;
    std::uint64_t seed = 0;
    OutputOptions output;
};

int cmd_certify_nogo(const CertifyArgs& args) {
    if (args.trials < 1) throw InputError("trials must be at least 1");
    if (args.dim < 2) throw InputError("dim must be at least 2");

    const DistortionWitness witness = search_max_distortion(args.dim, args.trials, args.seed);
    const LinearExtensionReport linear = linear_extension_contradiction(args.dim);

    Json results = Json::array({witness_to_json(args.dim, witness), linear_report_to_json(linear)});
    Json config{{"dim", args.dim}, {"trials", args.trials}, {"seed", args.seed}};
    Json summary{{"max_distortion", witness.distortion},
                 {"linear_deviation", linear.deviation}};
    emit_report(make_envelope("certify-nogo", config, results, summary), args.output.format,
                args.output.out_path);
    // Either certificate failing to clear the positivity floor would mean we
    // found no evidence at this dimension.
    return (witness.distortion > 1e-6 && linear.deviation > 1e-6) ? 0 : 1;
}

// ----------------------------------------------------------- verify-claim --

struct VerifyClaimArgs {
    int n = -1;
    std::string x, y;
    long phis = 100;
    std::uint64_t seed = 0;
    std::string phi_mode = "span";
    OutputOptions output;
};

StateVector sample_span_phi(const GoodBadDecomposition& decomp, const RegisterLayout& layout,
                            Rng& rng) {
    const double mix_angle = rng.uniform() * (kPi / 2.0);
    const double rel_phase = rng.uniform() * 2.0 * kPi;
    const Complex phase{std::cos(rel_phase), std::sin(rel_phase)};
    std::vector<Complex> amps(layout.dimension(), Complex{0.0, 0.0});
    if (decomp.bad && decomp.good) {
        const Complex c_bad{std::cos(mix_angle), 0.0};
        const Complex c_good = phase * std::sin(mix_angle);
        for (std::uint64_t i = 0; i < layout.dimension(); ++i) {
            amps[i] = c_bad * decomp.bad->amps[i] + c_good * decomp.good->amps[i];
        }
    } else {
        const StateVector& only = decomp.good ? *decomp.good : *decomp.bad;
        for (std::uint64_t i = 0; i < layout.dimension(); ++i) amps[i] = phase * only.amps[i];
    }
    return StateVector::from_amplitudes(layout, std::move(amps));
}

int cmd_verify_claim(const VerifyClaimArgs& args) {
    if (args.phis < 1) throw InputError("phis must be at least 1");
    const Bitstring x = Bitstring::parse(args.x, args.n);
    const Bitstring y = Bitstring::parse(args.y, args.n);
    if (x.n() != y.n()) throw InputError("inputs must have equal length");

    const StateVector psi = tensor(encode_block_state(x), encode_block_state(y));
    const GoodBadDecomposition decomp = decompose_good_bad(psi);

    Json results = Json::array();
    double max_residual = 0.0;
    for (long i = 0; i < args.phis; ++i) {
        Rng rng(split_seed(args.seed, static_cast<std::uint64_t>(i)));
        const StateVector phi = args.phi_mode == "random"
                                    ? random_state(psi.layout, rng)
                                    : sample_span_phi(decomp, psi.layout, rng);
        const double residual = claim_equivalence_residual(psi, phi);
        max_residual = std::max(max_residual, residual);
        results.push_back(Json{{"phi_index", i}, {"residual", residual}});
    }

    Json config{{"n", x.n()},       {"x", x.to_string()},       {"y", y.to_string()},
                {"phis", args.phis}, {"seed", args.seed},        {"phi_mode", args.phi_mode}};
    Json summary{{"a", exact_a(x, y)}, {"max_residual", max_residual}};
    emit_report(make_envelope("verify-claim", config, results, summary), args.output.format,
                args.output.out_path);
    return max_residual <= kResidualTol ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gdsim: block-encoded disjointness simulator and general-diffusion "
                 "no-go certifier"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(gdsim::kVersion));

    EncodeArgs encode_args;
    CLI::App* encode = app.add_subcommand("encode", "Print the block-encoded state of an input");
    encode->add_option("--n", encode_args.n, "Input length (perfect square)");
    encode->add_option("--x", encode_args.x, "Input bits (0/1 string or 0x-prefixed hex)")
        ->required();
    add_output_flags(encode, &encode_args.output);

    RunArgs run_args;
    CLI::App* run = app.add_subcommand("run", "Run the one-round disjointness protocol once");
    run->add_option("--n", run_args.n, "Input length (perfect square)");
    run->add_option("--x", run_args.x, "Alice's input")->required();
    run->add_option("--y", run_args.y, "Bob's input")->required();
    run->add_option("--seed", run_args.seed, "Random seed");
    run->add_option("--epsilon", run_args.epsilon, "Failure budget in (0, 1)");
    run->add_option("--cutoff", run_args.cutoff, "Cutoff mode")
        ->check(CLI::IsMember({"scaled", "paper"}));
    run->add_option("--lambda", run_args.lambda, "Search schedule growth factor");
    run->add_flag("--verbose", run_args.verbose, "Include full message states in the transcript");
    add_output_flags(run, &run_args.output);

    SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand("sweep", "Run many protocol instances and aggregate");
    sweep->add_option("--n-list", sweep_args.n_list, "Input lengths (perfect squares)");
    sweep->add_option("--trials", sweep_args.trials,
                      "Seeds per pair (exhaustive) or instances (random)");
    sweep->add_option("--seed", sweep_args.seed, "Master seed");
    sweep->add_option("--mode", sweep_args.mode, "Instance source")
        ->check(CLI::IsMember({"exhaustive", "random"}));
    sweep->add_option("--epsilon", sweep_args.epsilon, "Failure budget in (0, 1)");
    sweep->add_option("--cutoff", sweep_args.cutoff, "Cutoff mode")
        ->check(CLI::IsMember({"scaled", "paper"}));
    sweep->add_option("--lambda", sweep_args.lambda, "Search schedule growth factor");
    add_output_flags(sweep, &sweep_args.output);

    CertifyArgs certify_args;
    CLI::App* certify =
        app.add_subcommand("certify-nogo", "Emit impossibility certificates for the "
                                           "general-diffusion map");
    certify->add_option("--dim", certify_args.dim, "State dimension (>= 2)");
    certify->add_option("--trials", certify_args.trials, "Random search trials");
    certify->add_option("--seed", certify_args.seed, "Master seed");
    add_output_flags(certify, &certify_args.output);

    VerifyClaimArgs claim_args;
    CLI::App* claim = app.add_subcommand(
        "verify-claim", "Check the iterate against the diffusion-oracle composition");
    claim->add_option("--n", claim_args.n, "Input length (perfect square)");
    claim->add_option("--x", claim_args.x, "Alice's input")->required();
    claim->add_option("--y", claim_args.y, "Bob's input")->required();
    claim->add_option("--phis", claim_args.phis, "Number of sampled working states");
    claim->add_option("--seed", claim_args.seed, "Master seed");
    claim->add_option("--phi-mode", claim_args.phi_mode,
                      "span: sample inside the good/bad span; random: unconstrained "
                      "(violates the in-span precondition)")
        ->check(CLI::IsMember({"span", "random"}));
    add_output_flags(claim, &claim_args.output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (encode->parsed()) return cmd_encode(encode_args);
        if (run->parsed()) return cmd_run(run_args);
        if (sweep->parsed()) return cmd_sweep(sweep_args);
        if (certify->parsed()) return cmd_certify_nogo(certify_args);
        if (claim->parsed()) return cmd_verify_claim(claim_args);
    } catch (const gdsim::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
