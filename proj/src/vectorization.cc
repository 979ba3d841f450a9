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

#include "pqc/vectorization.h"

#include <cmath>

#include "pqc/errors.h"

namespace pqc {

ComplexVector vectorize(const ComplexMatrix &o) {
    qubits_of_square(o);
    const Eigen::Index d = o.rows();
    ComplexVector v(d * d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            v(i * d + j) = o(i, j);
        }
    }
    return v;
}

ComplexMatrix matrixize(const ComplexVector &v) {
    const int two_n = log2_exact(static_cast<std::size_t>(v.size()));
    if (two_n % 2 != 0) {
        throw DimensionError("vector length " + std::to_string(v.size()) + " is not a power of four");
    }
    const Eigen::Index d = Eigen::Index{1} << (two_n / 2);
    ComplexMatrix o(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            o(i, j) = v(i * d + j);
        }
    }
    return o;
}

KrausBlockResult kraus_block_identity(const ComplexMatrix &k, const ComplexMatrix &l, const ComplexMatrix &o) {
    const int n = qubits_of_square(o);
    if (qubits_of_square(k) != n || qubits_of_square(l) != n) {
        throw DimensionError("Kraus pair and operand dimensions differ");
    }
    return {k * o * l.adjoint(), kron(k, l.conjugate()) * vectorize(o)};
}

std::map<PauliString, cplx> pauli_decompose(const ComplexMatrix &o, double cutoff) {
    const int n = qubits_of_square(o);
    if (n > kMaxDecomposeQubits) {
        throw SizeError("pauli_decompose supports at most " + std::to_string(kMaxDecomposeQubits) + " qubits");
    }
    const std::uint64_t dim = std::uint64_t{1} << n;
    const double norm = 1.0 / static_cast<double>(dim);
    std::map<PauliString, cplx> out;
    std::vector<PauliLetter> letters(static_cast<std::size_t>(n));
    for (std::uint64_t x = 0; x < dim; ++x) {
        for (std::uint64_t z = 0; z < dim; ++z) {
            for (int q = 0; q < n; ++q) {
                const bool xb = x & qubit_bit(n, q);
                const bool zb = z & qubit_bit(n, q);
                letters[static_cast<std::size_t>(q)] =
                    xb ? (zb ? PauliLetter::Y : PauliLetter::X) : (zb ? PauliLetter::Z : PauliLetter::I);
            }
            const PauliString p(0, letters);
            // Tr(P O) = sum_b <b|P O|b> with P|b^x> = a(b^x)|b>.
            cplx tr{};
            for (std::uint64_t b = 0; b < dim; ++b) {
                tr += p.action_amplitude(b) * o(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b ^ x));
            }
            tr *= norm;
            if (std::abs(tr) > cutoff) {
                out.emplace(p, tr);
            }
        }
    }
    return out;
}

ComplexMatrix pauli_recompose(const std::map<PauliString, cplx> &terms, int n) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (const auto &[p, c] : terms) {
        if (p.size() != n) {
            throw DimensionError("term width does not match n");
        }
        out += c * pauli_matrix(p);
    }
    return out;
}

ComplexMatrix bell_frame(int n) {
    if (n < 1 || n > kMaxBellFrameQubits) {
        throw SizeError("bell_frame supports 1.." + std::to_string(kMaxBellFrameQubits) + " qubits");
    }
    // U_B^{\otimes n} = (H^{\otimes n} ⊗ I) * C, where C|r,c> = |r, c XOR r>.
    const std::uint64_t d = std::uint64_t{1} << n;
    const ComplexMatrix h = hadamard_layer(n);
    const Eigen::Index big = static_cast<Eigen::Index>(d * d);
    ComplexMatrix u = ComplexMatrix::Zero(big, big);
    for (std::uint64_t r = 0; r < d; ++r) {
        for (std::uint64_t c = 0; c < d; ++c) {
            const std::uint64_t c_out = c ^ r;
            const auto col = static_cast<Eigen::Index>(r * d + c);
            for (std::uint64_t r_out = 0; r_out < d; ++r_out) {
                u(static_cast<Eigen::Index>(r_out * d + c_out), col) =
                    h(static_cast<Eigen::Index>(r_out), static_cast<Eigen::Index>(r));
            }
        }
    }
    return u;
}

}  // namespace pqc
