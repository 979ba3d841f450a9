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

#ifndef PQC_CIRCUIT_H
#define PQC_CIRCUIT_H

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pqc {

enum class CircuitGate { kH, kS, kT, kCnot };

struct GateOp {
    CircuitGate gate = CircuitGate::kH;
    std::array<int, 2> qubits{0, 0};  // CNOT: control, target

    int arity() const { return gate == CircuitGate::kCnot ? 2 : 1; }
    friend bool operator==(const GateOp &, const GateOp &) = default;
};

/// A gate sequence over {H, S, T, CNOT}.
class Circuit {
  public:
    static constexpr int kMaxQubits = 12;

    explicit Circuit(int n);

    /// Throws DimensionError on a bad index or a CNOT with equal qubits.
    void add(GateOp op);

    int n() const { return n_; }
    const std::vector<GateOp> &gates() const { return gates_; }
    int hadamard_count() const;

    /// Round-trips through parse_circuit.
    std::string to_text() const;

  private:
    int n_ = 0;
    std::vector<GateOp> gates_;
};

/// Format: a "qubits n" line, then "H q", "S q", "T q" or "CNOT c t" per
/// line. '#' starts a comment.
Circuit parse_circuit(std::string_view text);

/// Random circuit with exactly `hadamards` H gates among `gate_count`, the
/// rest drawn from S, T and (for n >= 2) CNOT.
Circuit random_circuit(int n, int gate_count, int hadamards, std::uint64_t seed);

}  // namespace pqc

#endif
