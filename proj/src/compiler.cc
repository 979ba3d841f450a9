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

#include "pqc/compiler.h"

#include <array>
#include <cmath>
#include <set>

#include "pqc/errors.h"

namespace pqc {

std::vector<int> CompiledProgram::touched_qubits() const {
    std::set<int> seen;
    for (const GateOp &g : source) {
        for (int i = 0; i < g.arity(); ++i) {
            seen.insert(g.qubits[i]);
        }
    }
    return {seen.begin(), seen.end()};
}

CompiledProgram compile(const Circuit &u) {
    static const std::array<KrausPairChannel, 4> library{
        gate_channel({Gate::kH}), gate_channel({Gate::kHSH}), gate_channel({Gate::kHTH}),
        gate_channel({Gate::kHHCnotHH})};
    CompiledProgram p;
    p.n = u.n();
    p.hadamard_count = u.hadamard_count();
    p.channels.reserve(u.gates().size());
    for (const GateOp &g : u.gates()) {
        const KrausPairChannel &base = library[static_cast<std::size_t>(g.gate)];
        p.channels.push_back(embed_channel(base, std::span<const int>(g.qubits.data(), g.arity()), u.n()));
        p.source.push_back(g);
        p.eta_total *= base.eta().value_or(1.0);
    }
    return p;
}

NdmeState run_program(const CompiledProgram &p, const NdmeState &input) {
    if (input.n() != p.n) {
        throw DimensionError("program acts on " + std::to_string(p.n) + " qubits, state encodes " +
                             std::to_string(input.n()));
    }
    NdmeState state = input;
    for (const KrausPairChannel &ch : p.channels) {
        state = apply_channel(ch, state);
    }
    return state;
}

ComplexMatrix program_cbe_operator(const CompiledProgram &p) {
    if (p.n > kMaxCbeQubits) {
        throw SizeError("program CBE operator limited to " + std::to_string(kMaxCbeQubits) + " qubits");
    }
    const Eigen::Index dim = Eigen::Index{1} << (2 * p.n);
    ComplexMatrix acc = ComplexMatrix::Identity(dim, dim);
    for (const KrausPairChannel &ch : p.channels) {
        acc = cbe_operator(ch) * acc;
    }
    return acc;
}

double predicted_signal_factor(int n, int k, double gamma0) {
    return std::pow(2.0, 0.5 * n + 1.0) * gamma0 * std::pow(2.0, -0.5 * k);
}

}  // namespace pqc
