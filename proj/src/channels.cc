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

#include "pqc/channels.h"

#include <array>
#include <cmath>
#include <numbers>

#include "pqc/errors.h"
#include "pqc/vectorization.h"

namespace pqc {

namespace {

ComplexMatrix mat2(cplx a, cplx b, cplx c, cplx d) {
    ComplexMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

ComplexMatrix letter_matrix(PauliLetter letter) { return pauli_matrix(PauliString(0, {letter})); }

void require_dim(const ComplexMatrix &m, Eigen::Index dim, const char *what) {
    if (m.rows() != dim || m.cols() != dim) {
        throw DimensionError(std::string(what) + " has shape " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + ", expected " + std::to_string(dim) + " square");
    }
}

// The two 2x2 pairs of a projector-variant Pauli channel, before the 1/sqrt2.
std::array<KrausPair, 2> projector_letter_pairs(PauliLetter letter) {
    const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
    const ComplexMatrix x = letter_matrix(PauliLetter::X);
    const ComplexMatrix y = letter_matrix(PauliLetter::Y);
    const ComplexMatrix z = letter_matrix(PauliLetter::Z);
    switch (letter) {
        case PauliLetter::I:
            return {KrausPair{i2, i2}, KrausPair{x, x}};
        case PauliLetter::X:
            return {KrausPair{i2, x}, KrausPair{x, i2}};
        case PauliLetter::Y:
            return {KrausPair{z, -y}, KrausPair{y, z}};
        case PauliLetter::Z:
            return {KrausPair{z, z}, KrausPair{y, y}};
    }
    throw ChannelError("bad Pauli letter");
}

KrausPair identity_letter_pair(PauliLetter letter) {
    const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
    switch (letter) {
        case PauliLetter::I:
            return {i2, i2};
        case PauliLetter::X:
            return {i2, letter_matrix(PauliLetter::X)};
        case PauliLetter::Y:
            return {letter_matrix(PauliLetter::Z), -letter_matrix(PauliLetter::Y)};
        case PauliLetter::Z:
            return {letter_matrix(PauliLetter::Z), letter_matrix(PauliLetter::Z)};
    }
    throw ChannelError("bad Pauli letter");
}

KrausPair kron_pair(const KrausPair &a, const KrausPair &b) { return {kron(a.k, b.k), kron(a.l, b.l)}; }

}  // namespace

double completeness_residual(std::span<const KrausPair> pairs) {
    if (pairs.empty()) {
        return 1.0;
    }
    const Eigen::Index dim = pairs.front().k.rows();
    ComplexMatrix sum_k = ComplexMatrix::Zero(dim, dim);
    ComplexMatrix sum_l = ComplexMatrix::Zero(dim, dim);
    for (const KrausPair &p : pairs) {
        sum_k.noalias() += p.k.adjoint() * p.k;
        sum_l.noalias() += p.l.adjoint() * p.l;
    }
    const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);
    return std::max(max_abs_diff(sum_k, id), max_abs_diff(sum_l, id));
}

KrausPairChannel::KrausPairChannel(int n, std::vector<KrausPair> pairs, std::optional<double> eta)
    : n_(n), pairs_(std::move(pairs)), eta_(eta) {
    if (n < 1 || n > 12) {
        throw DimensionError("channel qubit count " + std::to_string(n) + " out of range");
    }
    if (pairs_.empty()) {
        throw ChannelError("channel needs at least one Kraus pair");
    }
    const Eigen::Index dim = Eigen::Index{1} << n;
    for (const KrausPair &p : pairs_) {
        require_dim(p.k, dim, "K");
        require_dim(p.l, dim, "L");
        if (!all_finite(p.k) || !all_finite(p.l)) {
            throw ChannelError("Kraus operator has non-finite entries");
        }
    }
    const double residual = completeness_residual(pairs_);
    if (residual > kCompletenessTol) {
        throw ChannelError("Kraus pairs are not trace preserving (residual " + std::to_string(residual) + ")");
    }
    if (eta_ && !(std::isfinite(*eta_) && *eta_ > 0.0)) {
        throw ChannelError("eta must be positive");
    }
}

KrausPairChannel KrausPairChannel::identity(int n) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);
    return KrausPairChannel(n, {KrausPair{id, id}}, 1.0);
}

std::string gate_name(Gate g) {
    switch (g) {
        case Gate::kX:
            return "X";
        case Gate::kY:
            return "Y";
        case Gate::kZ:
            return "Z";
        case Gate::kH:
            return "H";
        case Gate::kHSH:
            return "HSH";
        case Gate::kHTH:
            return "HTH";
        case Gate::kHHCnotHH:
            return "HH_CNOT_HH";
    }
    return "?";
}

Gate parse_gate(std::string_view name) {
    for (Gate g : {Gate::kX, Gate::kY, Gate::kZ, Gate::kH, Gate::kHSH, Gate::kHTH, Gate::kHHCnotHH}) {
        if (gate_name(g) == name) {
            return g;
        }
    }
    throw ParseError(1, "unknown gate '" + std::string(name) + "'");
}

int gate_arity(Gate g) { return g == Gate::kHHCnotHH ? 2 : 1; }

ComplexMatrix gate_target(Gate g) {
    const double r = kInvSqrt2;
    const ComplexMatrix h = mat2(r, r, r, -r);
    switch (g) {
        case Gate::kX:
            return letter_matrix(PauliLetter::X);
        case Gate::kY:
            return letter_matrix(PauliLetter::Y);
        case Gate::kZ:
            return letter_matrix(PauliLetter::Z);
        case Gate::kH:
            return h;
        case Gate::kHSH:
            return h * mat2(1, 0, 0, kI) * h;
        case Gate::kHTH:
            return h * mat2(1, 0, 0, std::polar(1.0, std::numbers::pi / 4)) * h;
        case Gate::kHHCnotHH: {
            ComplexMatrix cnot = ComplexMatrix::Zero(4, 4);
            cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
            const ComplexMatrix hh = kron(h, h);
            return hh * cnot * hh;
        }
    }
    throw ChannelError("unknown gate");
}

KrausPairChannel gate_channel(GateId id) {
    const double r = kInvSqrt2;
    const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
    const ComplexMatrix x = letter_matrix(PauliLetter::X);
    switch (id.gate) {
        case Gate::kX:
            return pauli_channel(PauliString(0, {PauliLetter::X}), id.variant);
        case Gate::kY:
            return pauli_channel(PauliString(0, {PauliLetter::Y}), id.variant);
        case Gate::kZ:
            return pauli_channel(PauliString(0, {PauliLetter::Z}), id.variant);
        default:
            break;
    }
    if (id.variant != F0Variant::kProjector) {
        throw ChannelError(gate_name(id.gate) + " has no identity-F0 construction");
    }
    switch (id.gate) {
        case Gate::kH: {
            const ComplexMatrix y = letter_matrix(PauliLetter::Y);
            const ComplexMatrix z = letter_matrix(PauliLetter::Z);
            return KrausPairChannel(1, {{0.5 * i2, 0.5 * x}, {0.5 * z, 0.5 * z}, {0.5 * x, 0.5 * i2}, {0.5 * y, 0.5 * y}},
                                    r);
        }
        case Gate::kHSH:
        case Gate::kHTH: {
            const cplx w = id.gate == Gate::kHSH ? kI : std::polar(1.0, std::numbers::pi / 4);
            const ComplexMatrix l0 = mat2(1.0 + w, 1.0 - w, 1.0 - w, 1.0 + w).conjugate() * (0.5 * r);
            const ComplexMatrix l1 = mat2(1.0 - w, 1.0 + w, 1.0 + w, 1.0 - w).conjugate() * (0.5 * r);
            return KrausPairChannel(1, {{r * i2, l0}, {r * x, l1}}, 1.0);
        }
        case Gate::kHHCnotHH: {
            // CNOT with qubit 1 as control: |a b> -> |a^b, b>.
            ComplexMatrix c = ComplexMatrix::Zero(4, 4);
            for (int b = 0; b < 4; ++b) {
                const int hi = b >> 1;
                const int lo = b & 1;
                c(((hi ^ lo) << 1) | lo, b) = 1.0;
            }
            std::vector<KrausPair> pairs;
            for (const auto &[qa, qb] : {std::pair{i2, i2}, std::pair{i2, x}, std::pair{x, i2}, std::pair{x, x}}) {
                const ComplexMatrix op = 0.5 * c * kron(qa, qb);
                pairs.push_back({op, op});
            }
            return KrausPairChannel(2, std::move(pairs), 1.0);
        }
        default:
            break;
    }
    throw ChannelError("unknown gate");
}

ComplexMatrix cbe_operator(const KrausPairChannel &ch) {
    if (ch.n() > kMaxCbeQubits) {
        throw SizeError("cbe_operator supports at most " + std::to_string(kMaxCbeQubits) + " qubits");
    }
    const Eigen::Index dim = Eigen::Index{1} << (2 * ch.n());
    ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
    for (const KrausPair &p : ch.pairs()) {
        sum += kron(p.k, p.l.conjugate());
    }
    return sum;
}

ComplexMatrix f0_operator(F0Variant variant, int m) {
    const Eigen::Index dim = Eigen::Index{1} << m;
    if (variant == F0Variant::kIdentity) {
        return ComplexMatrix::Identity(dim, dim);
    }
    ComplexMatrix f0 = ComplexMatrix::Zero(dim, dim);
    f0(0, 0) = 1.0;
    return f0;
}

ComplexMatrix po_target(const ComplexMatrix &f0, const ComplexMatrix &v, double eta) {
    const int m = qubits_of_square(v);
    require_dim(f0, v.rows(), "F0");
    const ComplexMatrix ub = bell_frame(m);
    return eta * (ub.adjoint() * kron(f0, v) * ub);
}

double po_residual(const KrausPairChannel &ch, const ComplexMatrix &f0, const ComplexMatrix &v, double eta) {
    if (qubits_of_square(v) != ch.n()) {
        throw DimensionError("target acts on " + std::to_string(qubits_of_square(v)) + " qubits, channel on " +
                             std::to_string(ch.n()));
    }
    return max_abs_diff(cbe_operator(ch), po_target(f0, v, eta));
}

double verify_po(const KrausPairChannel &ch, const ComplexMatrix &v, F0Variant variant, double eta) {
    return po_residual(ch, f0_operator(variant, qubits_of_square(v)), v, eta);
}

KrausPairChannel pauli_channel(const PauliString &p, F0Variant variant) {
    if (!p.has_real_phase()) {
        throw UnsupportedPhaseError("Pauli channel needs phase +1 or -1, got " + p.str());
    }
    const int n = p.size();
    if (n < 1) {
        throw DimensionError("Pauli string is empty");
    }
    std::vector<KrausPair> pairs{KrausPair{ComplexMatrix::Identity(1, 1), ComplexMatrix::Identity(1, 1)}};
    for (int q = 0; q < n; ++q) {
        std::vector<KrausPair> next;
        if (variant == F0Variant::kIdentity) {
            const KrausPair base = identity_letter_pair(p[q]);
            for (const KrausPair &acc : pairs) {
                next.push_back(kron_pair(acc, base));
            }
        } else {
            const auto base = projector_letter_pairs(p[q]);
            for (const KrausPair &acc : pairs) {
                for (const KrausPair &b : base) {
                    next.push_back(kron_pair(acc, KrausPair{kInvSqrt2 * b.k, kInvSqrt2 * b.l}));
                }
            }
        }
        pairs = std::move(next);
    }
    if (p.phase_exponent() == 2) {
        for (KrausPair &pair : pairs) {
            pair.l = -pair.l;
        }
    }
    return KrausPairChannel(n, std::move(pairs), 1.0);
}

KrausPairChannel compose(const KrausPairChannel &first, const KrausPairChannel &then) {
    if (first.n() != then.n()) {
        throw DimensionError("cannot compose channels on " + std::to_string(first.n()) + " and " +
                             std::to_string(then.n()) + " qubits");
    }
    std::vector<KrausPair> pairs;
    pairs.reserve(first.pairs().size() * then.pairs().size());
    for (const KrausPair &b : then.pairs()) {
        for (const KrausPair &a : first.pairs()) {
            pairs.push_back({b.k * a.k, b.l * a.l});
        }
    }
    std::optional<double> eta;
    if (first.eta() && then.eta()) {
        eta = *first.eta() * *then.eta();
    }
    return KrausPairChannel(first.n(), std::move(pairs), eta);
}

KrausPairChannel embed_channel(const KrausPairChannel &ch, std::span<const int> targets, int n) {
    if (static_cast<int>(targets.size()) != ch.n()) {
        throw DimensionError("channel acts on " + std::to_string(ch.n()) + " qubits but " +
                             std::to_string(targets.size()) + " targets were given");
    }
    std::vector<KrausPair> pairs;
    pairs.reserve(ch.pairs().size());
    for (const KrausPair &p : ch.pairs()) {
        pairs.push_back({embed_operator(p.k, targets, n), embed_operator(p.l, targets, n)});
    }
    return KrausPairChannel(n, std::move(pairs), ch.eta());
}

ComplexMatrix f0_on_qubits(std::span<const int> touched, int n) {
    std::uint64_t mask = 0;
    for (int q : touched) {
        if (q < 0 || q >= n) {
            throw DimensionError("qubit index " + std::to_string(q) + " out of range");
        }
        mask |= qubit_bit(n, q);
    }
    const Eigen::Index dim = Eigen::Index{1} << n;
    ComplexMatrix f0 = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index b = 0; b < dim; ++b) {
        if ((static_cast<std::uint64_t>(b) & mask) == 0) {
            f0(b, b) = 1.0;
        }
    }
    return f0;
}

ComplexMatrix apply_channel_dense(const KrausPairChannel &ch, const ComplexMatrix &rho) {
    const Eigen::Index dim = Eigen::Index{1} << ch.n();
    require_dim(rho, 2 * dim, "density matrix");
    const auto a = rho.topLeftCorner(dim, dim);
    const auto b = rho.topRightCorner(dim, dim);
    const auto c = rho.bottomLeftCorner(dim, dim);
    const auto d = rho.bottomRightCorner(dim, dim);
    ComplexMatrix out = ComplexMatrix::Zero(2 * dim, 2 * dim);
    ComplexMatrix tmp(dim, dim);
    for (const KrausPair &p : ch.pairs()) {
        tmp.noalias() = p.k * a;
        out.topLeftCorner(dim, dim).noalias() += tmp * p.k.adjoint();
        tmp.noalias() = p.k * b;
        out.topRightCorner(dim, dim).noalias() += tmp * p.l.adjoint();
        tmp.noalias() = p.l * c;
        out.bottomLeftCorner(dim, dim).noalias() += tmp * p.k.adjoint();
        tmp.noalias() = p.l * d;
        out.bottomRightCorner(dim, dim).noalias() += tmp * p.l.adjoint();
    }
    return out;
}

NdmeState apply_channel(const KrausPairChannel &ch, const NdmeState &state) {
    if (state.n() != ch.n()) {
        throw DimensionError("channel acts on " + std::to_string(ch.n()) + " qubits, state encodes " +
                             std::to_string(state.n()));
    }
    return NdmeState::from_density(apply_channel_dense(ch, state.rho()));
}

}  // namespace pqc
