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

#ifndef PQC_COMPILER_H
#define PQC_COMPILER_H

#include <vector>

#include "pqc/channels.h"
#include "pqc/circuit.h"
#include "pqc/ndme.h"

namespace pqc {

/// Channel pipeline realizing V = H^n U H^n for a {H,S,T,CNOT} circuit U.
struct CompiledProgram {
    int n = 0;
    std::vector<KrausPairChannel> channels;
    std::vector<GateOp> source;  // gate of U behind each channel
    double eta_total = 1.0;
    int hadamard_count = 0;

    /// Qubits touched by at least one channel.
    std::vector<int> touched_qubits() const;
};

/// Each gate g of U becomes the channel for H g H on the same qubits:
/// H -> H, S -> HSH, T -> HTH, CNOT c t -> HH_CNOT_HH on (c, t).
CompiledProgram compile(const Circuit &u);

/// Applies the channels in order.
NdmeState run_program(const CompiledProgram &p, const NdmeState &input);

/// Product of the channel CBE operators, last channel leftmost (n <= 4).
ComplexMatrix program_cbe_operator(const CompiledProgram &p);

/// 2^{n/2+1} gamma0 2^{-k/2}: the factor between the raw Pauli trace and the
/// amplitude it encodes.
double predicted_signal_factor(int n, int k, double gamma0);

}  // namespace pqc

#endif
