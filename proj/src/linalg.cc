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

#include "pqc/linalg.h"

#include <bit>
#include <cmath>
#include <string>

#include "pqc/errors.h"

namespace pqc {

int log2_exact(std::size_t v) {
    if (!is_power_of_two(v)) {
        throw DimensionError("dimension " + std::to_string(v) + " is not a power of two");
    }
    int n = 0;
    while ((std::size_t{1} << n) != v) {
        ++n;
    }
    return n;
}

int qubits_of_square(const ComplexMatrix &m) {
    if (m.rows() != m.cols()) {
        throw DimensionError("matrix is not square (" + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + ")");
    }
    return log2_exact(static_cast<std::size_t>(m.rows()));
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("shape mismatch in comparison");
    }
    return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
}

double max_abs(const ComplexMatrix &a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

bool is_hermitian(const ComplexMatrix &m, double tol) {
    return m.rows() == m.cols() && max_abs_diff(m, m.adjoint()) <= tol;
}

bool all_finite(const ComplexMatrix &m) { return m.allFinite(); }

void hadamard_transform(std::span<cplx> v) {
    const int n = log2_exact(v.size());
    for (std::size_t half = 1; half < v.size(); half <<= 1) {
        for (std::size_t i = 0; i < v.size(); i += 2 * half) {
            for (std::size_t j = i; j < i + half; ++j) {
                const cplx a = v[j];
                const cplx b = v[j + half];
                v[j] = a + b;
                v[j + half] = a - b;
            }
        }
    }
    const double scale = std::pow(2.0, -0.5 * n);
    for (auto &x : v) {
        x *= scale;
    }
}

ComplexVector hadamard_transform(const ComplexVector &v) {
    ComplexVector out = v;
    hadamard_transform(std::span<cplx>(out.data(), static_cast<std::size_t>(out.size())));
    return out;
}

ComplexMatrix hadamard_layer(int n) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    const double scale = std::pow(2.0, -0.5 * n);
    ComplexMatrix h(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            const int parity = std::popcount(static_cast<std::uint64_t>(r & c)) & 1;
            h(r, c) = parity ? -scale : scale;
        }
    }
    return h;
}

ComplexMatrix embed_operator(const ComplexMatrix &op, std::span<const int> targets, int n) {
    const int k = qubits_of_square(op);
    if (static_cast<int>(targets.size()) != k) {
        throw DimensionError("operator arity does not match target count");
    }
    for (std::size_t a = 0; a < targets.size(); ++a) {
        if (targets[a] < 0 || targets[a] >= n) {
            throw DimensionError("target qubit out of range");
        }
        for (std::size_t b = a + 1; b < targets.size(); ++b) {
            if (targets[a] == targets[b]) {
                throw DimensionError("duplicate target qubit");
            }
        }
    }
    const std::uint64_t dim = std::uint64_t{1} << n;
    std::uint64_t target_mask = 0;
    for (int t : targets) {
        target_mask |= qubit_bit(n, t);
    }
    // Local index of a global basis state restricted to the targets.
    auto local = [&](std::uint64_t g) {
        std::uint64_t l = 0;
        for (int t : targets) {
            l = (l << 1) | ((g & qubit_bit(n, t)) ? 1 : 0);
        }
        return l;
    };
    auto with_local = [&](std::uint64_t g, std::uint64_t l) {
        g &= ~target_mask;
        for (int a = k - 1; a >= 0; --a) {
            if (l & 1) {
                g |= qubit_bit(n, targets[static_cast<std::size_t>(a)]);
            }
            l >>= 1;
        }
        return g;
    };
    ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    const std::uint64_t local_dim = std::uint64_t{1} << k;
    for (std::uint64_t col = 0; col < dim; ++col) {
        const std::uint64_t lc = local(col);
        for (std::uint64_t lr = 0; lr < local_dim; ++lr) {
            const cplx v = op(static_cast<Eigen::Index>(lr), static_cast<Eigen::Index>(lc));
            if (v != cplx{}) {
                out(static_cast<Eigen::Index>(with_local(col, lr)), static_cast<Eigen::Index>(col)) += v;
            }
        }
    }
    return out;
}

}  // namespace pqc
