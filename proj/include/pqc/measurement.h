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

#ifndef PQC_MEASUREMENT_H
#define PQC_MEASUREMENT_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pqc/linalg.h"
#include "pqc/ndme.h"
#include "pqc/pauli_string.h"

namespace pqc {

struct MeasurementRecord {
    std::string observable;
    cplx value;
    std::optional<std::int64_t> shots;  // empty for exact traces
    std::optional<std::uint64_t> seed;
};

/// Tr(P rho) without any Hermiticity assumptions, in O(2^n).
cplx pauli_trace(const ComplexMatrix &rho, const PauliString &p);

/// Real Tr(P rho). Throws StateError if rho is not Hermitian within 1e-10 or
/// the trace has an imaginary part above 1e-10.
double pauli_expectation(const ComplexMatrix &rho, const PauliString &p);

/// X ⊗ Q_alpha and Y ⊗ Q_alpha on the assistant qubit plus n qubits.
PauliString assisted_x_string(char assistant, const BitString &alpha);

/// (Tr(X⊗Q_a rho) - i Tr(Y⊗Q_a rho)) / (2^{n/2+1} gamma) = c_alpha. Throws
/// EncodingError when gamma < 1e-14.
cplx amplitude_via_pauli(const NdmeState &state, const BitString &alpha);

/// Tr(|01><10| ⊗ SWAP_n (rho ⊗ rho1)), with the qubits of rho ⊗ rho1 ordered
/// (assistant, system, assistant', system'). When rho1 is a Pauli image of
/// rho with eta = 1 this is gamma^2 <psi|P|psi>. Throws ConsistencyError if the
/// two gammas disagree.
cplx expectation_via_swap(const NdmeState &state, const NdmeState &state1);

struct HleCheck {
    double lhs = 0.0;  // <P|I_e ⊗ (X⊗Q_a + I)|P>
    double rhs = 0.0;  // 1 + Tr((X⊗Q_a) rho)
    double residual = 0.0;
};

/// Builds the purification sum_k sqrt(lambda_k)|k>_e|v_k> of rho explicitly.
HleCheck hle_identity_check(const NdmeState &state, const BitString &alpha);

struct SampleEstimate {
    double mean = 0.0;
    double standard_error = 0.0;
    double exact = 0.0;
    bool flagged = false;  // mean more than 5 standard errors from exact
    std::vector<std::int8_t> outcomes;
};

/// Draws +-1 outcomes with P(+1) = (1 + Tr(P rho)) / 2.
SampleEstimate sample_pauli(const ComplexMatrix &rho, const PauliString &p, std::int64_t shots, std::uint64_t seed);

}  // namespace pqc

#endif
