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

#ifndef PQC_LINDBLAD_H
#define PQC_LINDBLAD_H

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "pqc/hamiltonian.h"
#include "pqc/linalg.h"
#include "pqc/ndme.h"
#include "pqc/pauli_string.h"

namespace pqc {

/// F = diag(P1, P2) with rate lambda.
struct Jump {
    double lambda = 0.0;
    PauliString p1;
    PauliString p2;
    PauliString target;  // the Hamiltonian term P_i
};

struct JumpSet {
    int n = 0;
    std::vector<Jump> jumps;
};

/// Per-qubit pairs I->(I,I), X->(I,X), Y->(Z,-Y), Z->(Z,Z), with the sign of
/// P2 flipped once when P_i has phase +1, so that
/// U_B (P1 ⊗ conj(P2)) U_B^dagger = -I ⊗ P_i.
JumpSet build_jumps(const PauliHamiltonian &h);

/// max |U_B (P1 ⊗ conj(P2)) U_B^dagger + I ⊗ P_i| (n <= 3).
double jump_residual(const Jump &jump);

/// sum_i lambda_i (F_i rho F_i^dagger - rho).
ComplexMatrix lindblad_rhs(const ComplexMatrix &rho, const JumpSet &jumps);

struct Trajectory {
    std::vector<double> times;
    std::vector<NdmeState> states;
    std::vector<double> block_norms;  // Frobenius norm of the upper-right block
    double max_trace_error = 0.0;
    double max_hermitian_error = 0.0;
};

/// Classical RK4 with the step adjusted to t_max / round(t_max / dt). Every
/// `record_stride`-th state is kept, plus the last. Throws IntegratorError when
/// the trace drifts by more than 1e-6.
Trajectory evolve(const NdmeState &rho0, const JumpSet &jumps, double t_max, double dt, int record_stride = 1);

/// exp(-t (H_p + sum lambda_i)) psi0, unnormalized.
ComplexVector ite_reference(const AmplitudeVector &psi0, const PauliHamiltonian &h, double t);

/// max |block - gamma0 * S(u)| where S(u) is the {I,X} matrix of u.
double block_ite_residual(const ComplexMatrix &block, double gamma0, const ComplexVector &u);

/// Tr(rho (X ⊗ O)) for an n-qubit O on the encoding register.
cplx coherence_value(const ComplexMatrix &rho, const ComplexMatrix &o);

struct Steadiness {
    std::vector<double> values;       // Re Tr(rho_t X⊗O)
    std::vector<double> derivatives;  // second-order finite differences
    double max_derivative = 0.0;
    double initial_derivative = 0.0;
};

Steadiness coherence_steadiness(const Trajectory &trajectory, const SMatrix &o);

/// Least-squares slope of log(block norm) against t over [t_from, t_to],
/// negated: the exponential decay rate of the block.
double fit_decay_rate(const Trajectory &trajectory, double t_from, double t_to);

/// Writes "t,trace,block_norm,gamma" rows.
void write_trajectory_csv(std::ostream &out, const Trajectory &trajectory);

/// H_p = sum lambda_i P_i where -P_i are m independent commuting generators
/// of a stabilizer group, lambda_i in [0.5, 1.5). Frustration-free by
/// construction.
PauliHamiltonian random_stabilizer_hamiltonian(int n, int m, std::uint64_t seed);

}  // namespace pqc

#endif
