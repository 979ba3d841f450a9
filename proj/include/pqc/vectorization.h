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

#ifndef PQC_VECTORIZATION_H
#define PQC_VECTORIZATION_H

#include <map>

#include "pqc/linalg.h"
#include "pqc/pauli_string.h"

namespace pqc {

// Vectorization is row-major: O = sum o_ij |i><j| maps to sum o_ij |i>|j>, so
// the row index occupies the leading n qubits of the 2n-qubit vector and the
// column index the trailing n qubits.

ComplexVector vectorize(const ComplexMatrix &o);
ComplexMatrix matrixize(const ComplexVector &v);

struct KrausBlockResult {
    ComplexMatrix block;        // K O L^dagger
    ComplexVector vectorized;   // (K ⊗ conj(L)) vec(O)
};

/// Evaluates both sides of vec(K O L^dagger) = (K ⊗ L^*) vec(O).
KrausBlockResult kraus_block_identity(const ComplexMatrix &k, const ComplexMatrix &l, const ComplexMatrix &o);

inline constexpr int kMaxDecomposeQubits = 8;

/// Pauli coefficients 2^{-n} Tr(P O) over all +1-phase strings, keeping those
/// whose magnitude exceeds `cutoff`.
std::map<PauliString, cplx> pauli_decompose(const ComplexMatrix &o, double cutoff = 1e-14);

/// Sum of coeff * pauli_matrix(P).
ComplexMatrix pauli_recompose(const std::map<PauliString, cplx> &terms, int n);

inline constexpr int kMaxBellFrameQubits = 6;

/// U_B^{\otimes n} on 2n qubits, U_B = (H ⊗ I) CNOT acting on the pair
/// (j, n+j) with qubit j as control. Maps vec(Q_alpha) / 2^{n/2} to |0..0>|alpha>.
ComplexMatrix bell_frame(int n);

}  // namespace pqc

#endif
