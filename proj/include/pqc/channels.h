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

#ifndef PQC_CHANNELS_H
#define PQC_CHANNELS_H

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pqc/linalg.h"
#include "pqc/ndme.h"
#include "pqc/pauli_string.h"

namespace pqc {

struct KrausPair {
    ComplexMatrix k;  // acts on the |0> block of the assistant qubit
    ComplexMatrix l;  // acts on the |1> block
};

/// rho -> sum_i diag(K_i, L_i) rho diag(K_i, L_i)^dagger on a (1+n)-qubit
/// state. Both families must be complete; eta is the attenuation of the
/// target the channel block-encodes, when known.
class KrausPairChannel {
  public:
    static constexpr double kCompletenessTol = 1e-12;

    KrausPairChannel(int n, std::vector<KrausPair> pairs, std::optional<double> eta = std::nullopt);

    static KrausPairChannel identity(int n);

    int n() const { return n_; }
    const std::vector<KrausPair> &pairs() const { return pairs_; }
    std::optional<double> eta() const { return eta_; }

  private:
    int n_ = 0;
    std::vector<KrausPair> pairs_;
    std::optional<double> eta_;
};

/// Largest entry of sum K^dagger K - I and sum L^dagger L - I.
double completeness_residual(std::span<const KrausPair> pairs);

enum class F0Variant { kProjector, kIdentity };

enum class Gate { kX, kY, kZ, kH, kHSH, kHTH, kHHCnotHH };

struct GateId {
    Gate gate = Gate::kH;
    F0Variant variant = F0Variant::kProjector;
};

std::string gate_name(Gate g);
/// Inverse of gate_name; throws ParseError(line 1) on unknown names.
Gate parse_gate(std::string_view name);
int gate_arity(Gate g);

/// The logical operator V a gate channel realizes: X, Y, Z, H, H S H, H T H,
/// or (H ⊗ H) CNOT (H ⊗ H) with the first qubit as CNOT control.
ComplexMatrix gate_target(Gate g);

/// Kraus pairs for the gate on its own qubits, with eta set. Only the Pauli
/// gates accept the identity variant.
KrausPairChannel gate_channel(GateId g);

/// sum_i K_i ⊗ conj(L_i), in the row-major vectorized frame.
inline constexpr int kMaxCbeQubits = 4;
ComplexMatrix cbe_operator(const KrausPairChannel &ch);

/// |0..0><0..0| or the identity on m qubits.
ComplexMatrix f0_operator(F0Variant variant, int m);

/// eta * U_B^dagger (F0 ⊗ V) U_B.
ComplexMatrix po_target(const ComplexMatrix &f0, const ComplexMatrix &v, double eta);

/// max |cbe_operator(ch) - po_target(F0, V, eta)|.
double po_residual(const KrausPairChannel &ch, const ComplexMatrix &f0, const ComplexMatrix &v, double eta);
double verify_po(const KrausPairChannel &ch, const ComplexMatrix &v, F0Variant variant, double eta);

/// eta = 1 channel realizing the Pauli string (phase +1 or -1). The projector
/// variant has 2^n pairs, the identity variant a single pair.
KrausPairChannel pauli_channel(const PauliString &p, F0Variant variant);

/// Runs `first`, then `then`: pairs (K2 K1, L2 L1), eta multiplied.
KrausPairChannel compose(const KrausPairChannel &first, const KrausPairChannel &then);

/// Places a k-qubit channel on `targets` of an n-qubit register (identity
/// elsewhere, eta unchanged).
KrausPairChannel embed_channel(const KrausPairChannel &ch, std::span<const int> targets, int n);

/// F0 of an embedded gate chain: |0><0| on `touched` qubits, I on the rest.
ComplexMatrix f0_on_qubits(std::span<const int> touched, int n);

/// Applies the channel blockwise. The output gamma is the norm of the
/// decoded block amplitudes, which equals eta * gamma0 * |V psi| whenever the
/// channel block-encodes V.
NdmeState apply_channel(const KrausPairChannel &ch, const NdmeState &state);

/// Dense action on an arbitrary (1+n)-qubit matrix.
ComplexMatrix apply_channel_dense(const KrausPairChannel &ch, const ComplexMatrix &rho);

}  // namespace pqc

#endif
