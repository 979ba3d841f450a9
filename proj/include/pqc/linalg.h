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

#ifndef PQC_LINALG_H
#define PQC_LINALG_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>

#include <Eigen/Dense>

namespace pqc {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr cplx kI{0.0, 1.0};
inline constexpr double kInvSqrt2 = 0.70710678118654752440;

/// Tolerance for exact algebraic identities.
inline constexpr double kExactTol = 1e-12;

constexpr bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

/// Returns log2(v); throws DimensionError unless v is a power of two.
int log2_exact(std::size_t v);

/// Qubit count of a square 2^n x 2^n matrix; throws DimensionError otherwise.
int qubits_of_square(const ComplexMatrix &m);

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Largest entry magnitude of a - b. Shapes must agree.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
double max_abs(const ComplexMatrix &a);

bool is_hermitian(const ComplexMatrix &m, double tol);
bool all_finite(const ComplexMatrix &m);

/// Applies H^{\otimes n} in place to a length-2^n vector (fast Walsh-Hadamard,
/// including the 2^{-n/2} normalization).
void hadamard_transform(std::span<cplx> v);
ComplexVector hadamard_transform(const ComplexVector &v);

/// Dense H^{\otimes n}.
ComplexMatrix hadamard_layer(int n);

/// Embeds a k-qubit operator acting on `targets` (in the operator's own qubit
/// order) into an n-qubit identity. Qubit 0 is the most significant bit.
ComplexMatrix embed_operator(const ComplexMatrix &op, std::span<const int> targets, int n);

/// Bit of qubit q (0 = most significant) in an n-qubit basis index.
constexpr std::uint64_t qubit_bit(int n, int q) { return std::uint64_t{1} << (n - 1 - q); }

}  // namespace pqc

#endif
