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

#ifndef PQC_NDME_H
#define PQC_NDME_H

#include <cstdint>

#include "pqc/linalg.h"

namespace pqc {

/// Unit-norm logical amplitudes c_alpha over n qubits. Inputs whose norm is
/// within 1e-9 of one are renormalized; anything further off is rejected.
class AmplitudeVector {
  public:
    static constexpr double kNormSlack = 1e-9;

    explicit AmplitudeVector(ComplexVector values);

    static AmplitudeVector basis(int n, std::uint64_t alpha);
    /// |+>^{\otimes n}.
    static AmplitudeVector plus_state(int n);

    int n() const { return n_; }
    const ComplexVector &values() const { return values_; }
    cplx operator[](std::uint64_t alpha) const { return values_(static_cast<Eigen::Index>(alpha)); }

  private:
    int n_ = 0;
    ComplexVector values_;
};

/// An n-qubit matrix S = 2^{-n/2} sum_alpha c_alpha Q_alpha, supported on
/// {I,X}-strings only, with unit amplitude norm.
class SMatrix {
  public:
    /// Validates support (residual < tol) and amplitude norm.
    static SMatrix from_matrix(ComplexMatrix m, double tol = kExactTol);

    int n() const { return n_; }
    const ComplexMatrix &matrix() const { return matrix_; }

  private:
    SMatrix(int n, ComplexMatrix m) : n_(n), matrix_(std::move(m)) {}
    friend SMatrix s_from_amplitudes(const AmplitudeVector &c);

    int n_ = 0;
    ComplexMatrix matrix_;
};

// {I,X}-sector helpers on unnormalized data. An {I,X}-supported matrix has
// entries that depend only on row XOR column.

/// M_{ab} = 2^{-n/2} u_{a XOR b}: the matrix whose decoded amplitudes are u.
ComplexMatrix xor_circulant(const ComplexVector &u);

/// u_alpha = 2^{-n/2} Tr(Q_alpha M), for any square M.
ComplexVector decode_block_amplitudes(const ComplexMatrix &m);

/// Largest entry of M minus its projection onto the {I,X} sector.
double ix_sector_residual(const ComplexMatrix &m);

SMatrix s_from_amplitudes(const AmplitudeVector &c);

/// c_alpha = 2^{-n/2} Tr(Q_alpha S).
AmplitudeVector pqc_decode(const SMatrix &s);

/// Upper-right 2^n x 2^n block (<0| ⊗ I) rho (|1> ⊗ I).
ComplexMatrix ndme_block(const ComplexMatrix &rho);

/// chi_beta = <beta|H^{\otimes n}|psi>, the diagonal of H^n S H^n.
ComplexVector hadamard_spectrum(const AmplitudeVector &c);

/// 1 / (2 sum_beta |chi_beta|).
double gamma_upper_bound(const AmplitudeVector &c);

/// A (1+n)-qubit density matrix whose upper-right block is gamma * S.
class NdmeState {
  public:
    NdmeState(ComplexMatrix rho, double gamma);

    /// Reads gamma off the block as the norm of its decoded amplitudes.
    static NdmeState from_density(ComplexMatrix rho);

    int n() const { return n_; }
    const ComplexMatrix &rho() const { return rho_; }
    double gamma() const { return gamma_; }

    ComplexMatrix block() const { return ndme_block(rho_); }
    /// Unnormalized amplitudes of the block, i.e. gamma * c.
    ComplexVector block_amplitudes() const { return decode_block_amplitudes(block()); }
    /// Throws EncodingError when gamma is degenerate or the block leaves the {I,X} sector.
    SMatrix s_matrix() const;
    AmplitudeVector amplitudes() const;

  private:
    int n_ = 0;
    ComplexMatrix rho_;
    double gamma_ = 0.0;
};

struct NdmeDiagnostics {
    double hermitian_residual = 0.0;
    double trace_error = 0.0;
    double min_eigenvalue = 0.0;
    double block_residual = 0.0;  // |block - gamma * S| with S reconstructed from the block
    double bound_slack = 0.0;     // gamma_upper_bound(c) - gamma
    /// gamma * sum_beta |chi_beta| computed from the recorded S.
    double gamma_times_chi_sum = 0.0;

    bool ok() const {
        return hermitian_residual < 1e-10 && trace_error < 1e-10 && min_eigenvalue >= -1e-10 &&
               block_residual < kExactTol && bound_slack >= -kExactTol;
    }
};

NdmeDiagnostics diagnose(const NdmeState &state);

/// Mixture of phased pure states that attains gamma_upper_bound(c).
NdmeState encode_state_optimal(const AmplitudeVector &c);

}  // namespace pqc

#endif
