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

#include "pqc/ndme.h"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "pqc/errors.h"

namespace pqc {

AmplitudeVector::AmplitudeVector(ComplexVector values) : n_(log2_exact(static_cast<std::size_t>(values.size()))) {
    const double norm = values.norm();
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > kNormSlack) {
        throw NormalizationError("amplitude vector norm " + std::to_string(norm) + " is not 1");
    }
    values_ = std::move(values) / norm;
}

AmplitudeVector AmplitudeVector::basis(int n, std::uint64_t alpha) {
    ComplexVector v = ComplexVector::Zero(Eigen::Index{1} << n);
    v(static_cast<Eigen::Index>(alpha)) = 1.0;
    return AmplitudeVector(std::move(v));
}

AmplitudeVector AmplitudeVector::plus_state(int n) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    return AmplitudeVector(ComplexVector::Constant(dim, std::pow(2.0, -0.5 * n)));
}

ComplexMatrix xor_circulant(const ComplexVector &u) {
    const int n = log2_exact(static_cast<std::size_t>(u.size()));
    const Eigen::Index dim = u.size();
    const double scale = std::pow(2.0, -0.5 * n);
    ComplexMatrix m(dim, dim);
    for (Eigen::Index b = 0; b < dim; ++b) {
        for (Eigen::Index a = 0; a < dim; ++a) {
            m(a, b) = scale * u(a ^ b);
        }
    }
    return m;
}

ComplexVector decode_block_amplitudes(const ComplexMatrix &m) {
    const int n = qubits_of_square(m);
    const Eigen::Index dim = m.rows();
    const double scale = std::pow(2.0, -0.5 * n);
    ComplexVector u = ComplexVector::Zero(dim);
    // Tr(Q_alpha M) = sum_b M(b, b XOR alpha).
    for (Eigen::Index alpha = 0; alpha < dim; ++alpha) {
        cplx tr{};
        for (Eigen::Index b = 0; b < dim; ++b) {
            tr += m(b, b ^ alpha);
        }
        u(alpha) = scale * tr;
    }
    return u;
}

double ix_sector_residual(const ComplexMatrix &m) { return max_abs_diff(m, xor_circulant(decode_block_amplitudes(m))); }

SMatrix SMatrix::from_matrix(ComplexMatrix m, double tol) {
    const int n = qubits_of_square(m);
    const double residual = ix_sector_residual(m);
    if (residual > tol) {
        throw EncodingError("matrix has weight outside the {I,X} sector (residual " + std::to_string(residual) + ")");
    }
    const double norm = decode_block_amplitudes(m).norm();
    if (std::abs(norm - 1.0) > AmplitudeVector::kNormSlack) {
        throw NormalizationError("S-matrix amplitude norm " + std::to_string(norm) + " is not 1");
    }
    return SMatrix(n, std::move(m));
}

SMatrix s_from_amplitudes(const AmplitudeVector &c) { return SMatrix(c.n(), xor_circulant(c.values())); }

AmplitudeVector pqc_decode(const SMatrix &s) { return AmplitudeVector(decode_block_amplitudes(s.matrix())); }

ComplexMatrix ndme_block(const ComplexMatrix &rho) {
    const int total = qubits_of_square(rho);
    if (total < 2) {
        throw DimensionError("density matrix needs an assistant qubit and at least one encoding qubit");
    }
    const Eigen::Index half = rho.rows() / 2;
    return rho.block(0, half, half, half);
}

ComplexVector hadamard_spectrum(const AmplitudeVector &c) { return hadamard_transform(c.values()); }

double gamma_upper_bound(const AmplitudeVector &c) {
    return 1.0 / (2.0 * hadamard_spectrum(c).cwiseAbs().sum());
}

NdmeState::NdmeState(ComplexMatrix rho, double gamma) : rho_(std::move(rho)), gamma_(gamma) {
    const int total = qubits_of_square(rho_);
    if (total < 2) {
        throw DimensionError("density matrix needs an assistant qubit and at least one encoding qubit");
    }
    if (!std::isfinite(gamma) || gamma < 0.0) {
        throw StateError("gamma must be finite and non-negative");
    }
    n_ = total - 1;
}

NdmeState NdmeState::from_density(ComplexMatrix rho) {
    const double gamma = decode_block_amplitudes(ndme_block(rho)).norm();
    return NdmeState(std::move(rho), gamma);
}

SMatrix NdmeState::s_matrix() const {
    if (gamma_ < 1e-14) {
        throw EncodingError("gamma is too small to carry an encoding");
    }
    return SMatrix::from_matrix(block() / gamma_, 1e-10);
}

AmplitudeVector NdmeState::amplitudes() const { return pqc_decode(s_matrix()); }

NdmeDiagnostics diagnose(const NdmeState &state) {
    NdmeDiagnostics d;
    const ComplexMatrix &rho = state.rho();
    d.hermitian_residual = max_abs_diff(rho, rho.adjoint());
    d.trace_error = std::abs(rho.trace() - cplx{1.0});
    const ComplexMatrix herm = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(herm, Eigen::EigenvaluesOnly);
    d.min_eigenvalue = eig.eigenvalues().minCoeff();
    const ComplexMatrix block = state.block();
    d.block_residual = ix_sector_residual(block);
    const ComplexVector u = decode_block_amplitudes(block);
    d.gamma_times_chi_sum = hadamard_transform(u).cwiseAbs().sum();
    const double norm = u.norm();
    if (norm > 1e-14) {
        d.bound_slack = gamma_upper_bound(AmplitudeVector(u / norm)) - state.gamma();
    }
    return d;
}

NdmeState encode_state_optimal(const AmplitudeVector &c) {
    const ComplexVector chi = hadamard_spectrum(c);
    const Eigen::VectorXd magnitude = chi.cwiseAbs();
    const double total = magnitude.sum();
    if (!(total > 0.0)) {
        throw NumericError("Hadamard spectrum vanishes for a unit vector");
    }
    // rho = sum_beta q_beta |phi_beta><phi_beta| with q = |chi| / total. Both
    // diagonal blocks equal (1/2) H diag(q) H, the off-diagonal block
    // (1/2) H diag(chi / total) H = gamma S.
    const ComplexVector weights = magnitude.cast<cplx>() / total;
    const ComplexMatrix diag_block = 0.5 * xor_circulant(hadamard_transform(weights));
    const ComplexMatrix off_block = xor_circulant(c.values()) / (2.0 * total);
    const Eigen::Index dim = diag_block.rows();
    ComplexMatrix rho(2 * dim, 2 * dim);
    rho.topLeftCorner(dim, dim) = diag_block;
    rho.bottomRightCorner(dim, dim) = diag_block;
    rho.topRightCorner(dim, dim) = off_block;
    rho.bottomLeftCorner(dim, dim) = off_block.adjoint();
    return NdmeState(std::move(rho), 1.0 / (2.0 * total));
}

}  // namespace pqc
