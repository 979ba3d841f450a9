// Copyright 2026 The PQC Toolkit Authors
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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pqc/errors.h"
#include "pqc/runner.h"

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw pqc::ParseError(0, "cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

pqc::OutputFormat parse_format(const std::string &s) {
    return s == "csv" ? pqc::OutputFormat::kCsv : pqc::OutputFormat::kJson;
}

int emit(const pqc::Report &report, const std::string &format) {
    std::cout << report.render(parse_format(format));
    return report.exit_code;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Pure-state quantum computation on NDME encodings"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    std::uint64_t seed = 0;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", seed, "Master seed");

    double gate_tol = 1e-12;
    auto *verify = app.add_subcommand("verify-gates", "Check every gate channel against its target");
    verify->add_option("--tolerance", gate_tol);

    std::string circuit_path;
    std::string alpha_text;
    double amp_tol = 1e-9;
    auto *amplitude = app.add_subcommand("amplitude", "Estimate <alpha|U|+...+> through the channel pipeline");
    amplitude->add_option("circuit", circuit_path, "Circuit file")->required();
    amplitude->add_option("--alpha", alpha_text, "Bit string, default all zeros");
    amplitude->add_option("--tolerance", amp_tol);

    std::string hamiltonian_path;
    pqc::LindbladOptions lopts;
    auto *lindblad = app.add_subcommand("lindblad", "Lindbladian imaginary time evolution");
    lindblad->add_option("hamiltonian", hamiltonian_path, "Hamiltonian file")->required();
    lindblad->add_option("--t-max", lopts.t_max)->check(CLI::PositiveNumber);
    lindblad->add_option("--dt", lopts.dt)->check(CLI::PositiveNumber);
    lindblad->add_option("--stride", lopts.record_stride)->check(CLI::PositiveNumber);
    lindblad->add_flag("--dt-halving", lopts.dt_halving);

    std::string target_text;
    pqc::SearchOptions sopts;
    pqc::SweepOptions sweep;
    bool do_sweep = false;
    auto *search = app.add_subcommand("search", "Hidden bit-string search");
    search->add_option("--target", target_text);
    search->add_option("--shots", sopts.shots)->check(CLI::PositiveNumber);
    search->add_option("--max-batches", sopts.max_batches)->check(CLI::PositiveNumber);
    search->add_flag("--sweep", do_sweep, "Query-count sweep over n");
    search->add_option("--n-min", sweep.n_min)->check(CLI::Range(1, 10));
    search->add_option("--n-max", sweep.n_max)->check(CLI::Range(1, 10));
    search->add_option("--runs", sweep.runs)->check(CLI::PositiveNumber);

    bool timings = false;
    auto *all = app.add_subcommand("all", "Run every acceptance criterion");
    all->add_flag("--timings", timings, "Include wall-clock seconds (output no longer reproducible)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : pqc::kExitUsage;
    }

    try {
        if (*verify) {
            return emit(pqc::cmd_verify_gates(gate_tol), format);
        }
        if (*amplitude) {
            const pqc::Circuit u = pqc::parse_circuit(read_file(circuit_path));
            const pqc::BitString alpha =
                alpha_text.empty() ? pqc::BitString(u.n(), 0) : pqc::BitString::parse(alpha_text);
            if (alpha.size() != u.n()) {
                throw pqc::DimensionError("alpha length does not match the circuit");
            }
            return emit(pqc::cmd_amplitude(u, alpha, amp_tol), format);
        }
        if (*lindblad) {
            return emit(pqc::cmd_lindblad(pqc::parse_hamiltonian(read_file(hamiltonian_path)), lopts), format);
        }
        if (*search) {
            if (do_sweep) {
                sweep.seed = seed;
                sweep.max_batches = sopts.max_batches;
                if (sweep.n_min > sweep.n_max) {
                    throw pqc::DimensionError("--n-min exceeds --n-max");
                }
                return emit(pqc::cmd_search_sweep(sweep), format);
            }
            if (target_text.empty()) {
                throw pqc::DimensionError("--target is required without --sweep");
            }
            sopts.seed = seed;
            return emit(pqc::cmd_search(pqc::BitString::parse(target_text), sopts), format);
        }
        pqc::AcceptanceOptions aopts;
        aopts.seed = seed;
        return emit(pqc::cmd_all(aopts, timings), format);
    } catch (const pqc::IntegratorError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return pqc::kExitFail;
    } catch (const pqc::NumericError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return pqc::kExitFail;
    } catch (const pqc::Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return pqc::kExitUsage;
    }
}
