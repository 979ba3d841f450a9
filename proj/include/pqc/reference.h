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

#ifndef PQC_REFERENCE_H
#define PQC_REFERENCE_H

#include "pqc/circuit.h"
#include "pqc/hamiltonian.h"
#include "pqc/linalg.h"

// Brute-force ground truth. Nothing here touches channels or encodings.

namespace pqc {

class StateVector {
  public:
    explicit StateVector(ComplexVector amplitudes);
    static StateVector zero(int n);
    static StateVector plus(int n);

    int n() const { return n_; }
    const ComplexVector &amplitudes() const { return amps_; }

    void apply_h(int q);
    void apply_s(int q);
    void apply_t(int q);
    void apply_cnot(int control, int target);
    void apply(const GateOp &op);

  private:
    void apply_phase(int q, cplx phase);

    int n_ = 0;
    ComplexVector amps_;
};

StateVector simulate(const Circuit &u, StateVector input);

/// <+|^n U |0>^n.
cplx amplitude_plus_u_zero(const Circuit &u);

/// Dense unitary of the circuit, built column by column (n <= 10).
ComplexMatrix circuit_unitary(const Circuit &u);

inline constexpr int kMaxDenseHermitianQubits = 6;

/// exp(-t Hm) for Hermitian Hm via eigendecomposition.
ComplexMatrix herm_exp(const ComplexMatrix &hm, double t);

struct GroundSpace {
    ComplexMatrix projector;
    double energy = 0.0;
    int dimension = 0;
    /// Smallest gap between the ground energy and the next eigenvalue above
    /// the 1e-9 window; infinity when the spectrum is flat.
    double gap = 0.0;
};

/// Projector onto eigenvalues within 1e-9 of the minimum.
GroundSpace ground_projector(const PauliHamiltonian &h);

}  // namespace pqc

#endif
