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

#include "pqc/circuit.h"

#include <algorithm>
#include <sstream>

#include "pqc/errors.h"
#include "pqc/rng.h"
#include "pqc/text_format.h"

namespace pqc {

Circuit::Circuit(int n) : n_(n) {
    if (n < 1 || n > kMaxQubits) {
        throw SizeError("circuit qubit count " + std::to_string(n) + " out of range");
    }
}

void Circuit::add(GateOp op) {
    for (int i = 0; i < op.arity(); ++i) {
        if (op.qubits[i] < 0 || op.qubits[i] >= n_) {
            throw DimensionError("qubit index " + std::to_string(op.qubits[i]) + " out of range");
        }
    }
    if (op.gate == CircuitGate::kCnot && op.qubits[0] == op.qubits[1]) {
        throw DimensionError("CNOT control and target must differ");
    }
    if (op.arity() == 1) {
        op.qubits[1] = 0;
    }
    gates_.push_back(op);
}

int Circuit::hadamard_count() const {
    return static_cast<int>(
        std::count_if(gates_.begin(), gates_.end(), [](const GateOp &g) { return g.gate == CircuitGate::kH; }));
}

std::string Circuit::to_text() const {
    std::ostringstream out;
    out << "qubits " << n_ << "\n";
    for (const GateOp &g : gates_) {
        switch (g.gate) {
            case CircuitGate::kH:
                out << "H " << g.qubits[0] << "\n";
                break;
            case CircuitGate::kS:
                out << "S " << g.qubits[0] << "\n";
                break;
            case CircuitGate::kT:
                out << "T " << g.qubits[0] << "\n";
                break;
            case CircuitGate::kCnot:
                out << "CNOT " << g.qubits[0] << " " << g.qubits[1] << "\n";
                break;
        }
    }
    return out.str();
}

Circuit parse_circuit(std::string_view text) {
    const std::vector<TextLine> lines = meaningful_lines(text);
    Circuit circuit(parse_qubits_header(lines, Circuit::kMaxQubits));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const TextLine &line = lines[i];
        const std::string &name = line.tokens[0];
        GateOp op;
        if (name == "H") {
            op.gate = CircuitGate::kH;
        } else if (name == "S") {
            op.gate = CircuitGate::kS;
        } else if (name == "T") {
            op.gate = CircuitGate::kT;
        } else if (name == "CNOT") {
            op.gate = CircuitGate::kCnot;
        } else {
            throw ParseError(line.number, "unknown gate '" + name + "'");
        }
        if (static_cast<int>(line.tokens.size()) != op.arity() + 1) {
            throw ParseError(line.number, name + " takes " + std::to_string(op.arity()) + " qubit index(es)");
        }
        for (int q = 0; q < op.arity(); ++q) {
            op.qubits[q] = parse_int_token(line.tokens[q + 1], line.number);
            if (op.qubits[q] < 0 || op.qubits[q] >= circuit.n()) {
                throw ParseError(line.number, "qubit index " + line.tokens[q + 1] + " out of range");
            }
        }
        if (op.gate == CircuitGate::kCnot && op.qubits[0] == op.qubits[1]) {
            throw ParseError(line.number, "CNOT control and target must be distinct");
        }
        circuit.add(op);
    }
    return circuit;
}

Circuit random_circuit(int n, int gate_count, int hadamards, std::uint64_t seed) {
    if (hadamards < 0 || hadamards > gate_count) {
        throw DimensionError("Hadamard count must lie in [0, gate_count]");
    }
    Rng rng(seed);
    // Choose which slots hold the Hadamards by a partial Fisher-Yates shuffle.
    std::vector<int> slots(static_cast<std::size_t>(gate_count));
    for (int i = 0; i < gate_count; ++i) {
        slots[static_cast<std::size_t>(i)] = i;
    }
    for (int i = 0; i < hadamards; ++i) {
        const auto j = static_cast<std::size_t>(i) + rng.below(static_cast<std::uint64_t>(gate_count - i));
        std::swap(slots[static_cast<std::size_t>(i)], slots[j]);
    }
    std::vector<bool> is_h(static_cast<std::size_t>(gate_count), false);
    for (int i = 0; i < hadamards; ++i) {
        is_h[static_cast<std::size_t>(slots[static_cast<std::size_t>(i)])] = true;
    }
    Circuit circuit(n);
    const std::uint64_t kinds = n >= 2 ? 3 : 2;
    for (int i = 0; i < gate_count; ++i) {
        GateOp op;
        if (is_h[static_cast<std::size_t>(i)]) {
            op.gate = CircuitGate::kH;
        } else {
            op.gate = std::array{CircuitGate::kS, CircuitGate::kT, CircuitGate::kCnot}[rng.below(kinds)];
        }
        op.qubits[0] = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (op.gate == CircuitGate::kCnot) {
            const auto shift = 1 + rng.below(static_cast<std::uint64_t>(n - 1));
            op.qubits[1] = static_cast<int>((static_cast<std::uint64_t>(op.qubits[0]) + shift) % static_cast<std::uint64_t>(n));
        }
        circuit.add(op);
    }
    return circuit;
}

}  // namespace pqc
