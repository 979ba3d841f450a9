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

#ifndef PQC_RUNNER_H
#define PQC_RUNNER_H

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pqc/channels.h"
#include "pqc/circuit.h"
#include "pqc/hamiltonian.h"
#include "pqc/pauli_string.h"

namespace pqc {

enum class OutputFormat { kJson, kCsv };

/// Exit codes shared by every command.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct Report {
    nlohmann::json json;
    std::string csv;
    int exit_code = kExitPass;

    std::string render(OutputFormat format) const;
};

/// One row of the gate verification table.
struct GateCase {
    std::string name;
    F0Variant variant = F0Variant::kProjector;
    KrausPairChannel channel;
    ComplexMatrix target;
    double eta = 1.0;
};

/// The seven gate constructions plus the three identity-F0 Pauli channels.
std::vector<GateCase> default_gate_table();

Report cmd_verify_gates(double tolerance = 1e-12, const std::vector<GateCase> &table = default_gate_table());

Report cmd_amplitude(const Circuit &u, const BitString &alpha, double tolerance = 1e-9);

struct LindbladOptions {
    double t_max = 3.0;
    double dt = 1e-3;
    bool dt_halving = false;
    double residual_tolerance = 1e-6;
    double steadiness_tolerance = 1e-6;
    double decay_tolerance = 0.05;
    int record_stride = 10;
};

/// Evolves encode(|+>^n) under the Lindbladian of the Hamiltonian. The
/// trajectory CSV goes into Report::csv.
Report cmd_lindblad(const PauliHamiltonian &h, const LindbladOptions &options);

struct SearchOptions {
    std::int64_t shots = 10000;
    std::uint64_t seed = 0;
    int max_batches = 64;
};

Report cmd_search(const BitString &target, const SearchOptions &options);

struct SweepOptions {
    int n_min = 3;
    int n_max = 8;
    int runs = 200;
    std::uint64_t seed = 0;
    int max_batches = 64;
};

Report cmd_search_sweep(const SweepOptions &options);

/// Result of one acceptance criterion.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    nlohmann::json metrics;
    double seconds = 0.0;
};

struct AcceptanceOptions {
    std::uint64_t seed = 0;
    std::vector<GateCase> gate_table = default_gate_table();
    /// Criteria to run (1-10); empty means all ten.
    std::vector<int> only;
};

/// Runs criteria 1-10 in order. Sub-seeds are sub_seed(seed, id).
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions &options);

/// Aggregate of run_acceptance. Timings appear only when requested so that
/// the default output is byte-identical across runs.
Report cmd_all(const AcceptanceOptions &options, bool include_timings = false);

nlohmann::json matrix_to_json(const ComplexMatrix &m);
nlohmann::json channel_to_json(const KrausPairChannel &ch);

}  // namespace pqc

#endif
