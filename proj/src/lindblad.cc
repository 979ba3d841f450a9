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

#include "pqc/lindblad.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>

#include "pqc/errors.h"
#include "pqc/reference.h"
#include "pqc/rng.h"
#include "pqc/vectorization.h"

namespace pqc {

JumpSet build_jumps(const PauliHamiltonian &h) {
    JumpSet set{h.n(), {}};
    for (const HamiltonianTerm &term : h.terms()) {
        if (!term.pauli.has_real_phase()) {
            throw UnsupportedPhaseError("term " + term.pauli.str() + " has an imaginary phase");
        }
        std::vector<PauliLetter> l1;
        std::vector<PauliLetter> l2;
        int sign = 0;
        for (PauliLetter letter : term.pauli.letters()) {
            switch (letter) {
                case PauliLetter::I:
                    l1.push_back(PauliLetter::I);
                    l2.push_back(PauliLetter::I);
                    break;
                case PauliLetter::X:
                    l1.push_back(PauliLetter::I);
                    l2.push_back(PauliLetter::X);
                    break;
                case PauliLetter::Y:
                    l1.push_back(PauliLetter::Z);
                    l2.push_back(PauliLetter::Y);
                    sign ^= 1;
                    break;
                case PauliLetter::Z:
                    l1.push_back(PauliLetter::Z);
                    l2.push_back(PauliLetter::Z);
                    break;
            }
        }
        if (term.pauli.phase_exponent() == 0) {
            sign ^= 1;
        }
        set.jumps.push_back({term.lambda, PauliString(0, std::move(l1)), PauliString(2 * sign, std::move(l2)), term.pauli});
    }
    return set;
}

double jump_residual(const Jump &jump) {
    const int n = jump.target.size();
    if (n > 3) {
        throw SizeError("dense jump check limited to 3 qubits");
    }
    const ComplexMatrix ub = bell_frame(n);
    const ComplexMatrix lhs = ub * kron(pauli_matrix(jump.p1), pauli_matrix(jump.p2).conjugate()) * ub.adjoint();
    const Eigen::Index dim = Eigen::Index{1} << n;
    const ComplexMatrix rhs = -kron(ComplexMatrix::Identity(dim, dim), pauli_matrix(jump.target));
    return max_abs_diff(lhs, rhs);
}

ComplexMatrix lindblad_rhs(const ComplexMatrix &rho, const JumpSet &jumps) {
    const Eigen::Index dim = Eigen::Index{1} << jumps.n;
    if (rho.rows() != 2 * dim || rho.cols() != 2 * dim) {
        throw DimensionError("density matrix does not match the jump set width");
    }
    ComplexMatrix out = ComplexMatrix::Zero(2 * dim, 2 * dim);
    for (const Jump &j : jumps.jumps) {
        out.topLeftCorner(dim, dim) += j.lambda * pauli_sandwich(j.p1, rho.topLeftCorner(dim, dim), j.p1);
        out.topRightCorner(dim, dim) += j.lambda * pauli_sandwich(j.p1, rho.topRightCorner(dim, dim), j.p2);
        out.bottomLeftCorner(dim, dim) += j.lambda * pauli_sandwich(j.p2, rho.bottomLeftCorner(dim, dim), j.p1);
        out.bottomRightCorner(dim, dim) += j.lambda * pauli_sandwich(j.p2, rho.bottomRightCorner(dim, dim), j.p2);
        out -= j.lambda * rho;
    }
    return out;
}

namespace {

void record(Trajectory &traj, double t, const ComplexMatrix &rho) {
    NdmeState state = NdmeState::from_density(rho);
    traj.times.push_back(t);
    traj.block_norms.push_back(state.block().norm());
    traj.max_hermitian_error = std::max(traj.max_hermitian_error, max_abs_diff(rho, rho.adjoint()));
    traj.states.push_back(std::move(state));
}

}  // namespace

Trajectory evolve(const NdmeState &rho0, const JumpSet &jumps, double t_max, double dt, int record_stride) {
    if (!(dt > 0.0) || !(t_max >= dt) || record_stride < 1) {
        throw IntegratorError("need dt > 0, t_max >= dt and a positive record stride");
    }
    if (rho0.n() != jumps.n) {
        throw DimensionError("initial state and jump set widths differ");
    }
    const long long steps = std::max(1LL, std::llround(t_max / dt));
    const double h = t_max / static_cast<double>(steps);
    ComplexMatrix rho = rho0.rho();
    const cplx trace0 = rho.trace();
    Trajectory traj;
    record(traj, 0.0, rho);
    for (long long s = 1; s <= steps; ++s) {
        const ComplexMatrix k1 = lindblad_rhs(rho, jumps);
        const ComplexMatrix k2 = lindblad_rhs(rho + 0.5 * h * k1, jumps);
        const ComplexMatrix k3 = lindblad_rhs(rho + 0.5 * h * k2, jumps);
        const ComplexMatrix k4 = lindblad_rhs(rho + h * k3, jumps);
        rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        const double drift = std::abs(rho.trace() - trace0);
        traj.max_trace_error = std::max(traj.max_trace_error, std::abs(rho.trace() - cplx{1.0}));
        if (drift > 1e-6 || !all_finite(rho)) {
            throw IntegratorError("trace drifted by " + std::to_string(drift) + " at step " + std::to_string(s));
        }
        if (s % record_stride == 0 || s == steps) {
            record(traj, static_cast<double>(s) * h, rho);
        }
    }
    return traj;
}

ComplexVector ite_reference(const AmplitudeVector &psi0, const PauliHamiltonian &h, double t) {
    if (psi0.n() != h.n()) {
        throw DimensionError("state and Hamiltonian widths differ");
    }
    const Eigen::Index dim = Eigen::Index{1} << h.n();
    const ComplexMatrix shifted = h.matrix() + h.lambda_sum() * ComplexMatrix::Identity(dim, dim);
    return herm_exp(shifted, t) * psi0.values();
}

double block_ite_residual(const ComplexMatrix &block, double gamma0, const ComplexVector &u) {
    return max_abs_diff(block, gamma0 * xor_circulant(u));
}

cplx coherence_value(const ComplexMatrix &rho, const ComplexMatrix &o) {
    const Eigen::Index dim = o.rows();
    if (rho.rows() != 2 * dim) {
        throw DimensionError("observable does not match the encoding register");
    }
    // X ⊗ O = [[0, O], [O, 0]].
    return (rho.topRightCorner(dim, dim) * o).trace() + (rho.bottomLeftCorner(dim, dim) * o).trace();
}

Steadiness coherence_steadiness(const Trajectory &trajectory, const SMatrix &o) {
    Steadiness out;
    std::vector<cplx> v;
    for (const NdmeState &s : trajectory.states) {
        v.push_back(coherence_value(s.rho(), o.matrix()));
        out.values.push_back(v.back().real());
    }
    const std::vector<double> &t = trajectory.times;
    const std::size_t m = v.size();
    std::vector<cplx> d(m, cplx{});
    if (m == 2) {
        d[0] = d[1] = (v[1] - v[0]) / (t[1] - t[0]);
    } else if (m >= 3) {
        for (std::size_t k = 0; k < m; ++k) {
            // Three-point stencils on possibly uneven spacing.
            const std::size_t c = std::clamp<std::size_t>(k, 1, m - 2);
            const double h1 = t[c] - t[c - 1];
            const double h2 = t[c + 1] - t[c];
            if (k == 0) {
                d[k] = -(2 * h1 + h2) / (h1 * (h1 + h2)) * v[0] + (h1 + h2) / (h1 * h2) * v[1] -
                       h1 / (h2 * (h1 + h2)) * v[2];
            } else if (k == m - 1) {
                d[k] = h2 / (h1 * (h1 + h2)) * v[m - 3] - (h1 + h2) / (h1 * h2) * v[m - 2] +
                       (h1 + 2 * h2) / (h2 * (h1 + h2)) * v[m - 1];
            } else {
                d[k] = -h2 / (h1 * (h1 + h2)) * v[k - 1] + (h2 - h1) / (h1 * h2) * v[k] +
                       h1 / (h2 * (h1 + h2)) * v[k + 1];
            }
        }
    }
    for (const cplx &x : d) {
        out.derivatives.push_back(std::abs(x));
        out.max_derivative = std::max(out.max_derivative, std::abs(x));
    }
    if (!d.empty()) {
        out.initial_derivative = std::abs(d.front());
    }
    return out;
}

double fit_decay_rate(const Trajectory &trajectory, double t_from, double t_to) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int count = 0;
    for (std::size_t k = 0; k < trajectory.times.size(); ++k) {
        const double t = trajectory.times[k];
        if (t < t_from - 1e-12 || t > t_to + 1e-12) {
            continue;
        }
        if (!(trajectory.block_norms[k] > 0.0)) {
            throw NumericError("block norm vanished inside the fit window");
        }
        const double y = std::log(trajectory.block_norms[k]);
        sx += t;
        sy += y;
        sxx += t * t;
        sxy += t * y;
        ++count;
    }
    if (count < 2) {
        throw NumericError("decay fit needs at least two snapshots in the window");
    }
    const double denom = count * sxx - sx * sx;
    return -(count * sxy - sx * sy) / denom;
}

void write_trajectory_csv(std::ostream &out, const Trajectory &trajectory) {
    out << "t,trace,block_norm,gamma\n";
    const auto old_precision = out.precision(17);
    for (std::size_t k = 0; k < trajectory.times.size(); ++k) {
        const NdmeState &s = trajectory.states[k];
        out << trajectory.times[k] << ',' << s.rho().trace().real() << ',' << trajectory.block_norms[k] << ','
            << s.gamma() << '\n';
    }
    out.precision(old_precision);
}

PauliHamiltonian random_stabilizer_hamiltonian(int n, int m, std::uint64_t seed) {
    if (m < 0 || m > n) {
        throw DimensionError("generator count must lie in [0, n]");
    }
    Rng rng(seed);
    PauliHamiltonian h(n);
    std::vector<PauliString> generators;
    std::vector<std::uint64_t> basis;  // reduced symplectic vectors, (x | z)
    auto reduce = [&basis](std::uint64_t v) {
        for (std::uint64_t b : basis) {
            v = std::min(v, v ^ b);
        }
        return v;
    };
    while (static_cast<int>(generators.size()) < m) {
        std::vector<PauliLetter> letters;
        for (int q = 0; q < n; ++q) {
            letters.push_back(static_cast<PauliLetter>(rng.below(4)));
        }
        PauliString g(rng.below(2) == 0 ? 0 : 2, std::move(letters));
        if (g.is_identity_up_to_phase()) {
            continue;
        }
        bool commutes = true;
        for (const PauliString &other : generators) {
            commutes = commutes && g.commutes_with(other);
        }
        const std::uint64_t v = reduce((g.x_mask() << n) | g.z_mask());
        if (!commutes || v == 0) {
            continue;
        }
        basis.push_back(v);
        // Keep the basis sorted descending so the greedy reduction stays valid.
        std::sort(basis.begin(), basis.end(), std::greater<>());
        generators.push_back(g);
        h.add_term(0.5 + rng.uniform(), -g);
    }
    return h;
}

}  // namespace pqc
