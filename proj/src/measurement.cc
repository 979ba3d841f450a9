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

#include "pqc/measurement.h"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "pqc/errors.h"
#include "pqc/rng.h"

namespace pqc {

cplx pauli_trace(const ComplexMatrix &rho, const PauliString &p) {
    const int n = qubits_of_square(rho);
    if (p.size() != n) {
        throw DimensionError("Pauli string width " + std::to_string(p.size()) + " does not match " +
                             std::to_string(n) + " qubits");
    }
    // P|c> = a(c)|c ^ x>, so Tr(P rho) = sum_c a(c) rho(c, c ^ x).
    const std::uint64_t x = p.x_mask();
    cplx tr{};
    for (Eigen::Index c = 0; c < rho.rows(); ++c) {
        const auto cu = static_cast<std::uint64_t>(c);
        tr += p.action_amplitude(cu) * rho(c, static_cast<Eigen::Index>(cu ^ x));
    }
    return tr;
}

double pauli_expectation(const ComplexMatrix &rho, const PauliString &p) {
    if (!is_hermitian(rho, 1e-10)) {
        throw StateError("density matrix is not Hermitian");
    }
    const cplx tr = pauli_trace(rho, p);
    if (std::abs(tr.imag()) > 1e-10) {
        throw StateError("expectation of " + p.str() + " is not real");
    }
    return tr.real();
}

PauliString assisted_x_string(char assistant, const BitString &alpha) {
    std::vector<PauliLetter> letters;
    letters.reserve(static_cast<std::size_t>(alpha.size()) + 1);
    letters.push_back(assistant == 'Y' ? PauliLetter::Y : PauliLetter::X);
    for (int i = 0; i < alpha.size(); ++i) {
        letters.push_back(alpha[i] ? PauliLetter::X : PauliLetter::I);
    }
    return PauliString(0, std::move(letters));
}

cplx amplitude_via_pauli(const NdmeState &state, const BitString &alpha) {
    if (alpha.size() != state.n()) {
        throw DimensionError("alpha has " + std::to_string(alpha.size()) + " bits, state encodes " +
                             std::to_string(state.n()) + " qubits");
    }
    if (state.gamma() < 1e-14) {
        throw EncodingError("degenerate encoding: gamma is zero");
    }
    const double tx = pauli_expectation(state.rho(), assisted_x_string('X', alpha));
    const double ty = pauli_expectation(state.rho(), assisted_x_string('Y', alpha));
    const double scale = std::pow(2.0, 0.5 * state.n() + 1.0) * state.gamma();
    return cplx{tx, -ty} / scale;
}

cplx expectation_via_swap(const NdmeState &state, const NdmeState &state1) {
    if (state.n() != state1.n()) {
        throw DimensionError("states encode different qubit counts");
    }
    if (std::abs(state.gamma() - state1.gamma()) > 1e-9 * std::max(1.0, state.gamma())) {
        throw ConsistencyError("second state does not carry the same gamma");
    }
    // The operator has one nonzero entry per (i, j): row |0,j,1,i>, column
    // |1,i,0,j>, so the trace picks rho(|1 i>,|0 j>) * rho1(|0 j>,|1 i>).
    const Eigen::Index dim = Eigen::Index{1} << state.n();
    const ComplexMatrix &rho = state.rho();
    const ComplexMatrix &rho1 = state1.rho();
    cplx tr{};
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            tr += rho(dim + i, j) * rho1(j, dim + i);
        }
    }
    return tr;
}

HleCheck hle_identity_check(const NdmeState &state, const BitString &alpha) {
    const ComplexMatrix &rho = state.rho();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(0.5 * (rho + rho.adjoint()));
    if (eig.info() != Eigen::Success) {
        throw NumericError("eigendecomposition failed");
    }
    const Eigen::Index dim = rho.rows();
    // |P> = sum_k sqrt(lambda_k) |k>_e |v_k>, environment index leading.
    ComplexVector purification(dim * dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        const double weight = std::sqrt(std::max(0.0, eig.eigenvalues()(k)));
        purification.segment(k * dim, dim) = weight * eig.eigenvectors().col(k);
    }
    const PauliString xq = assisted_x_string('X', alpha);
    ComplexVector applied(dim * dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        const ComplexVector block = purification.segment(k * dim, dim);
        applied.segment(k * dim, dim) = apply_pauli(xq, block) + block;
    }
    HleCheck out;
    out.lhs = purification.dot(applied).real();
    out.rhs = 1.0 + pauli_expectation(rho, xq);
    out.residual = std::abs(out.lhs - out.rhs);
    return out;
}

SampleEstimate sample_pauli(const ComplexMatrix &rho, const PauliString &p, std::int64_t shots, std::uint64_t seed) {
    if (shots < 1) {
        throw DimensionError("shots must be positive");
    }
    SampleEstimate est;
    est.exact = pauli_expectation(rho, p);
    const double p_plus = std::clamp(0.5 * (1.0 + est.exact), 0.0, 1.0);
    Rng rng(seed);
    est.outcomes.reserve(static_cast<std::size_t>(shots));
    double sum = 0.0;
    for (std::int64_t s = 0; s < shots; ++s) {
        const std::int8_t outcome = rng.uniform() < p_plus ? 1 : -1;
        est.outcomes.push_back(outcome);
        sum += outcome;
    }
    est.mean = sum / static_cast<double>(shots);
    est.standard_error = std::sqrt(std::max(0.0, 1.0 - est.mean * est.mean) / static_cast<double>(shots));
    est.flagged = std::abs(est.mean - est.exact) > std::max(5.0 * est.standard_error, 1e-12);
    return est;
}

}  // namespace pqc
