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

#include "pqc/reference.h"

#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "pqc/errors.h"

namespace pqc {

StateVector::StateVector(ComplexVector amplitudes)
    : n_(log2_exact(static_cast<std::size_t>(amplitudes.size()))), amps_(std::move(amplitudes)) {
    if (n_ > Circuit::kMaxQubits) {
        throw SizeError("state vector too large");
    }
}

StateVector StateVector::zero(int n) {
    ComplexVector v = ComplexVector::Zero(Eigen::Index{1} << n);
    v(0) = 1.0;
    return StateVector(std::move(v));
}

StateVector StateVector::plus(int n) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    return StateVector(ComplexVector::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim))));
}

void StateVector::apply_h(int q) {
    const auto bit = static_cast<Eigen::Index>(qubit_bit(n_, q));
    for (Eigen::Index b = 0; b < amps_.size(); ++b) {
        if ((b & bit) == 0) {
            const cplx a0 = amps_(b);
            const cplx a1 = amps_(b | bit);
            amps_(b) = kInvSqrt2 * (a0 + a1);
            amps_(b | bit) = kInvSqrt2 * (a0 - a1);
        }
    }
}

void StateVector::apply_phase(int q, cplx phase) {
    const auto bit = static_cast<Eigen::Index>(qubit_bit(n_, q));
    for (Eigen::Index b = 0; b < amps_.size(); ++b) {
        if ((b & bit) != 0) {
            amps_(b) *= phase;
        }
    }
}

void StateVector::apply_s(int q) { apply_phase(q, kI); }

void StateVector::apply_t(int q) { apply_phase(q, std::polar(1.0, std::numbers::pi / 4)); }

void StateVector::apply_cnot(int control, int target) {
    const auto cbit = static_cast<Eigen::Index>(qubit_bit(n_, control));
    const auto tbit = static_cast<Eigen::Index>(qubit_bit(n_, target));
    for (Eigen::Index b = 0; b < amps_.size(); ++b) {
        if ((b & cbit) != 0 && (b & tbit) == 0) {
            std::swap(amps_(b), amps_(b | tbit));
        }
    }
}

void StateVector::apply(const GateOp &op) {
    for (int i = 0; i < op.arity(); ++i) {
        if (op.qubits[i] < 0 || op.qubits[i] >= n_) {
            throw DimensionError("gate qubit out of range");
        }
    }
    switch (op.gate) {
        case CircuitGate::kH:
            apply_h(op.qubits[0]);
            break;
        case CircuitGate::kS:
            apply_s(op.qubits[0]);
            break;
        case CircuitGate::kT:
            apply_t(op.qubits[0]);
            break;
        case CircuitGate::kCnot:
            apply_cnot(op.qubits[0], op.qubits[1]);
            break;
    }
}

StateVector simulate(const Circuit &u, StateVector input) {
    if (input.n() != u.n()) {
        throw DimensionError("circuit and state widths differ");
    }
    for (const GateOp &op : u.gates()) {
        input.apply(op);
    }
    return input;
}

cplx amplitude_plus_u_zero(const Circuit &u) {
    const StateVector out = simulate(u, StateVector::zero(u.n()));
    return out.amplitudes().sum() / std::sqrt(static_cast<double>(out.amplitudes().size()));
}

ComplexMatrix circuit_unitary(const Circuit &u) {
    if (u.n() > 10) {
        throw SizeError("dense circuit unitary limited to 10 qubits");
    }
    const Eigen::Index dim = Eigen::Index{1} << u.n();
    ComplexMatrix m(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        ComplexVector e = ComplexVector::Zero(dim);
        e(col) = 1.0;
        m.col(col) = simulate(u, StateVector(std::move(e))).amplitudes();
    }
    return m;
}

ComplexMatrix herm_exp(const ComplexMatrix &hm, double t) {
    const int n = qubits_of_square(hm);
    if (n > kMaxDenseHermitianQubits) {
        throw SizeError("herm_exp limited to " + std::to_string(kMaxDenseHermitianQubits) + " qubits");
    }
    if (!is_hermitian(hm, 1e-10)) {
        throw NumericError("herm_exp needs a Hermitian matrix");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(hm);
    if (eig.info() != Eigen::Success) {
        throw NumericError("eigendecomposition failed");
    }
    const Eigen::VectorXd scale = (-t * eig.eigenvalues().array()).exp();
    return eig.eigenvectors() * scale.cast<cplx>().asDiagonal() * eig.eigenvectors().adjoint();
}

GroundSpace ground_projector(const PauliHamiltonian &h) {
    if (h.n() > kMaxDenseHermitianQubits) {
        throw SizeError("ground_projector limited to " + std::to_string(kMaxDenseHermitianQubits) + " qubits");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h.matrix());
    if (eig.info() != Eigen::Success) {
        throw NumericError("eigendecomposition failed");
    }
    const Eigen::VectorXd &values = eig.eigenvalues();
    const double e0 = values(0);
    const Eigen::Index dim = values.size();
    GroundSpace g;
    g.energy = e0;
    g.projector = ComplexMatrix::Zero(dim, dim);
    g.gap = std::numeric_limits<double>::infinity();
    for (Eigen::Index k = 0; k < dim; ++k) {
        if (values(k) - e0 <= 1e-9) {
            g.projector += eig.eigenvectors().col(k) * eig.eigenvectors().col(k).adjoint();
            ++g.dimension;
        } else {
            g.gap = std::min(g.gap, values(k) - e0);
        }
    }
    return g;
}

}  // namespace pqc
