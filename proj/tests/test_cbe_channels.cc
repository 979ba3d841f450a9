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

#include <gtest/gtest.h>

#include <random>

#include "oracles.h"
#include "pqc/channels.h"
#include "pqc/errors.h"
#include "pqc/ndme.h"
#include "pqc/pauli_string.h"

namespace pqc {
namespace {

using Pairs = std::vector<std::pair<oracle::Mat, oracle::Mat>>;

Pairs as_pairs(const KrausPairChannel &ch) {
    Pairs out;
    for (const KrausPair &p : ch.pairs()) {
        out.emplace_back(p.k, p.l);
    }
    return out;
}

std::vector<KrausPair> to_kraus(const Pairs &pairs, double scale) {
    std::vector<KrausPair> out;
    for (const auto &[k, l] : pairs) {
        out.push_back({scale * k, scale * l});
    }
    return out;
}

oracle::Mat dense_target(Gate g) {
    const oracle::Mat h = oracle::hadamard();
    switch (g) {
        case Gate::kX: return oracle::pauli("X");
        case Gate::kY: return oracle::pauli("Y");
        case Gate::kZ: return oracle::pauli("Z");
        case Gate::kH: return h;
        case Gate::kHSH: return h * oracle::phase_gate(cplx(0, 1)) * h;
        case Gate::kHTH: return h * oracle::phase_gate(std::polar(1.0, M_PI / 4)) * h;
        case Gate::kHHCnotHH: return oracle::hadamard_layer(2) * oracle::cnot(0, 1, 2) * oracle::hadamard_layer(2);
    }
    return {};
}

constexpr std::array kAllGates{Gate::kX, Gate::kY, Gate::kZ, Gate::kH, Gate::kHSH, Gate::kHTH, Gate::kHHCnotHH};

TEST(KrausPairChannel, ValidatesConstruction) {
    EXPECT_THROW(KrausPairChannel(1, {}), ChannelError);
    EXPECT_THROW(KrausPairChannel(1, {{oracle::pauli("X"), oracle::pauli("XX")}}), DimensionError);
    EXPECT_THROW(KrausPairChannel(1, {{2.0 * oracle::pauli("X"), oracle::pauli("X")}}), ChannelError);
    EXPECT_THROW(KrausPairChannel(1, {{oracle::pauli("X"), oracle::pauli("X")}}, 0.0), ChannelError);
    EXPECT_NO_THROW(KrausPairChannel(1, {{oracle::pauli("X"), oracle::pauli("Y")}}, 1.0));
}

TEST(Cbe, IdentityPairIsIdentity) {
    for (int n = 1; n <= 3; ++n) {
        const Eigen::Index d = Eigen::Index{1} << (2 * n);
        EXPECT_LT(oracle::max_diff(cbe_operator(KrausPairChannel::identity(n)), oracle::Mat::Identity(d, d)), 1e-15);
    }
    EXPECT_THROW(cbe_operator(KrausPairChannel::identity(kMaxCbeQubits + 1)), SizeError);
}

TEST(Cbe, HadamardChannelOperator) {
    const oracle::Mat expected = 0.25 * (oracle::pauli("IX") + oracle::pauli("ZZ") + oracle::pauli("XI") - oracle::pauli("YY"));
    const KrausPairChannel h = gate_channel({Gate::kH});
    EXPECT_EQ(h.pairs().size(), 4u);
    EXPECT_NEAR(*h.eta(), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_LT(oracle::max_diff(cbe_operator(h), expected), 1e-15);
    EXPECT_LT(oracle::max_diff(cbe_operator(h), oracle::cbe(as_pairs(h))), 1e-15);
}

TEST(Cbe, XProjectorChannelOperator) {
    const KrausPairChannel x = gate_channel({Gate::kX});
    EXPECT_LT(oracle::max_diff(cbe_operator(x), 0.5 * (oracle::pauli("IX") + oracle::pauli("XI"))), 1e-15);
}

TEST(GateLibrary, EverySetMeetsItsTargetAgainstOracle) {
    for (Gate g : kAllGates) {
        SCOPED_TRACE(gate_name(g));
        const KrausPairChannel ch = gate_channel({g});
        const double eta = g == Gate::kH ? 1.0 / std::sqrt(2.0) : 1.0;
        ASSERT_TRUE(ch.eta().has_value());
        EXPECT_NEAR(*ch.eta(), eta, 1e-15);
        EXPECT_LT(oracle::max_diff(gate_target(g), dense_target(g)), 1e-15);
        EXPECT_LT(oracle::max_diff(oracle::cbe(as_pairs(ch)), oracle::po_target(dense_target(g), true, eta)), 1e-12);
        EXPECT_LT(verify_po(ch, dense_target(g), F0Variant::kProjector, eta), 1e-12);
        EXPECT_LT(completeness_residual(ch.pairs()), 1e-12);
    }
    for (Gate g : {Gate::kX, Gate::kY, Gate::kZ}) {
        const KrausPairChannel ch = gate_channel({g, F0Variant::kIdentity});
        EXPECT_EQ(ch.pairs().size(), 1u);
        EXPECT_LT(oracle::max_diff(oracle::cbe(as_pairs(ch)), oracle::po_target(dense_target(g), false, 1.0)), 1e-12);
    }
}

TEST(GateLibrary, PairCounts) {
    EXPECT_EQ(gate_channel({Gate::kHSH}).pairs().size(), 2u);
    EXPECT_EQ(gate_channel({Gate::kHTH}).pairs().size(), 2u);
    EXPECT_EQ(gate_channel({Gate::kHHCnotHH}).pairs().size(), 4u);
    EXPECT_EQ(gate_channel({Gate::kZ}).pairs().size(), 2u);
    EXPECT_THROW(gate_channel({Gate::kH, F0Variant::kIdentity}), ChannelError);
}

TEST(GateLibrary, NamesRoundTrip) {
    for (Gate g : kAllGates) {
        EXPECT_EQ(parse_gate(gate_name(g)), g);
    }
    EXPECT_EQ(gate_arity(Gate::kHHCnotHH), 2);
    EXPECT_THROW(parse_gate("CZ"), ParseError);
}

TEST(GateLibrary, ZProjectorUsesZZAndYYPairs) {
    const KrausPairChannel z = gate_channel({Gate::kZ});
    const double s = 1.0 / std::sqrt(2.0);
    EXPECT_LT(oracle::max_diff(z.pairs()[0].k, s * oracle::pauli("Z")), 1e-15);
    EXPECT_LT(oracle::max_diff(z.pairs()[0].l, s * oracle::pauli("Z")), 1e-15);
    EXPECT_LT(oracle::max_diff(z.pairs()[1].k, s * oracle::pauli("Y")), 1e-15);
    EXPECT_LT(oracle::max_diff(z.pairs()[1].l, s * oracle::pauli("Y")), 1e-15);
}

// The printed Y and Z projector-variant sets pair I with the target letter.
// Checked densely they miss the target operator.
TEST(GateLibraryErrata, PrintedYAndZProjectorSetsMissTarget) {
    const double s = 1.0 / std::sqrt(2.0);
    const KrausPairChannel y(1, to_kraus({{oracle::pauli("I"), oracle::pauli("Y")}, {oracle::pauli("Y"), oracle::pauli("Z")}}, s));
    const KrausPairChannel z(1, to_kraus({{oracle::pauli("I"), oracle::pauli("Z")}, {oracle::pauli("Y"), oracle::pauli("Y")}}, s));
    EXPECT_GT(verify_po(y, oracle::pauli("Y"), F0Variant::kProjector, 1.0), 0.4);
    EXPECT_GT(verify_po(z, oracle::pauli("Z"), F0Variant::kProjector, 1.0), 0.4);
}

// The printed HSH and HTH L blocks realize the complex conjugate gate.
TEST(GateLibraryErrata, PrintedPhaseGateBlocksAreConjugated) {
    for (double angle : {M_PI / 2, M_PI / 4}) {
        const cplx w = std::polar(1.0, angle);
        oracle::Mat l1(2, 2), l2(2, 2);
        l1 << 1.0 + w, 1.0 - w, 1.0 - w, 1.0 + w;
        l2 << 1.0 - w, 1.0 + w, 1.0 + w, 1.0 - w;
        const double s = 1.0 / std::sqrt(2.0);
        const KrausPairChannel printed(1, to_kraus({{oracle::pauli("I"), 0.5 * l1}, {oracle::pauli("X"), 0.5 * l2}}, s));
        const KrausPairChannel fixed(
            1, to_kraus({{oracle::pauli("I"), 0.5 * l1.conjugate()}, {oracle::pauli("X"), 0.5 * l2.conjugate()}}, s));
        const oracle::Mat v = oracle::hadamard() * oracle::phase_gate(w) * oracle::hadamard();
        EXPECT_GT(verify_po(printed, v, F0Variant::kProjector, 1.0), 0.1);
        EXPECT_LT(verify_po(printed, v.conjugate(), F0Variant::kProjector, 1.0), 1e-12);
        EXPECT_LT(verify_po(fixed, v, F0Variant::kProjector, 1.0), 1e-12);
    }
}

// The printed eight-pair two-qubit set factorizes into single-qubit
// channels and misses the entangling target for either CNOT orientation.
TEST(GateLibraryErrata, PrintedEightPairSetMissesTarget) {
    const double s = 1.0 / (2.0 * std::sqrt(2.0));
    const KrausPairChannel printed(
        2, to_kraus({{oracle::pauli("II"), oracle::pauli("II")},
                     {oracle::pauli("IX"), oracle::pauli("IX")},
                     {oracle::pauli("ZI"), oracle::pauli("XI")},
                     {oracle::pauli("ZX"), oracle::pauli("XX")},
                     {oracle::pauli("XI"), oracle::pauli("ZI")},
                     {oracle::pauli("XX"), oracle::pauli("ZX")},
                     {oracle::pauli("YI"), -oracle::pauli("YI")},
                     {oracle::pauli("YX"), -oracle::pauli("YX")}},
                    s));
    const oracle::Mat hh = oracle::hadamard_layer(2);
    EXPECT_GT(verify_po(printed, hh * oracle::cnot(0, 1, 2) * hh, F0Variant::kProjector, 1.0), 0.1);
    EXPECT_GT(verify_po(printed, hh * oracle::cnot(1, 0, 2) * hh, F0Variant::kProjector, 1.0), 0.1);
}

TEST(GateLibrary, ProjectorF0TargetsDifferFromIdentity) {
    EXPECT_LT(oracle::max_diff(f0_operator(F0Variant::kIdentity, 2), oracle::Mat::Identity(4, 4)), 1e-15);
    oracle::Mat p = oracle::Mat::Zero(4, 4);
    p(0, 0) = 1.0;
    EXPECT_LT(oracle::max_diff(f0_operator(F0Variant::kProjector, 2), p), 1e-15);
    EXPECT_THROW(verify_po(gate_channel({Gate::kH}), oracle::pauli("XX"), F0Variant::kProjector, 1.0), DimensionError);
}

TEST(PauliChannel, SpecExamples) {
    const KrausPairChannel x = pauli_channel(PauliString::parse("+X"), F0Variant::kIdentity);
    ASSERT_EQ(x.pairs().size(), 1u);
    EXPECT_LT(oracle::max_diff(x.pairs()[0].k, oracle::pauli("I")), 1e-15);
    EXPECT_LT(oracle::max_diff(x.pairs()[0].l, oracle::pauli("X")), 1e-15);
    const KrausPairChannel zz = pauli_channel(PauliString::parse("-ZZ"), F0Variant::kIdentity);
    ASSERT_EQ(zz.pairs().size(), 1u);
    EXPECT_LT(oracle::max_diff(zz.pairs()[0].k, oracle::pauli("ZZ")), 1e-15);
    EXPECT_LT(oracle::max_diff(zz.pairs()[0].l, -oracle::pauli("ZZ")), 1e-15);
    EXPECT_LT(verify_po(zz, -oracle::pauli("ZZ"), F0Variant::kIdentity, 1.0), 1e-12);
    EXPECT_THROW(pauli_channel(PauliString::parse("iX"), F0Variant::kIdentity), UnsupportedPhaseError);
}

TEST(PauliChannel, EveryStringBothVariants) {
    for (int n = 1; n <= 2; ++n) {
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << (2 * n)); ++code) {
            std::string letters;
            for (int q = 0; q < n; ++q) {
                letters.push_back("IXYZ"[(code >> (2 * q)) & 3]);
            }
            for (int phase : {0, 2}) {
                const PauliString p = PauliString::parse(letters).with_phase(phase);
                const oracle::Mat v = oracle::pauli(letters, phase == 0 ? 1.0 : -1.0);
                for (F0Variant var : {F0Variant::kProjector, F0Variant::kIdentity}) {
                    const KrausPairChannel ch = pauli_channel(p, var);
                    EXPECT_LT(oracle::max_diff(oracle::cbe(as_pairs(ch)),
                                               oracle::po_target(v, var == F0Variant::kProjector, 1.0)),
                              1e-12)
                        << p.str();
                }
            }
        }
    }
}

TEST(Compose, SpecExamples) {
    const KrausPairChannel id = compose(KrausPairChannel::identity(1), KrausPairChannel::identity(1));
    EXPECT_LT(oracle::max_diff(cbe_operator(id), oracle::Mat::Identity(4, 4)), 1e-15);
    const KrausPairChannel h = gate_channel({Gate::kH});
    const KrausPairChannel hh = compose(h, h);
    EXPECT_NEAR(*hh.eta(), 0.5, 1e-15);
    EXPECT_LT(verify_po(hh, oracle::pauli("I"), F0Variant::kProjector, 0.5), 1e-12);
    const KrausPairChannel hsh = gate_channel({Gate::kHSH});
    EXPECT_LT(verify_po(compose(hsh, hsh), oracle::pauli("X"), F0Variant::kProjector, 1.0), 1e-12);
    EXPECT_THROW(compose(h, KrausPairChannel::identity(2)), DimensionError);
}

TEST(Compose, CbeIsMultiplicative) {
    std::mt19937_64 gen(31);
    const std::array single{Gate::kX, Gate::kY, Gate::kZ, Gate::kH, Gate::kHSH, Gate::kHTH};
    for (int trial = 0; trial < 20; ++trial) {
        const KrausPairChannel a = gate_channel({single[gen() % single.size()]});
        const KrausPairChannel b = gate_channel({single[gen() % single.size()]});
        EXPECT_LT(oracle::max_diff(cbe_operator(compose(a, b)), cbe_operator(b) * cbe_operator(a)), 1e-12);
        EXPECT_LT(completeness_residual(compose(a, b).pairs()), 1e-12);
    }
}

TEST(Embed, EmbeddedGatesKeepTheirTargets) {
    for (int n = 1; n <= 3; ++n) {
        for (int q = 0; q < n; ++q) {
            for (Gate g : {Gate::kH, Gate::kHSH, Gate::kHTH, Gate::kX}) {
                const std::array<int, 1> t{q};
                const KrausPairChannel ch = embed_channel(gate_channel({g}), t, n);
                const oracle::Mat v = oracle::on_qubit(dense_target(g), q, n);
                EXPECT_LT(po_residual(ch, f0_on_qubits(t, n), v, *ch.eta()), 1e-12);
            }
        }
    }
    for (auto [c, t] : {std::pair{0, 1}, std::pair{2, 0}, std::pair{1, 2}}) {
        const std::array<int, 2> targets{c, t};
        const KrausPairChannel ch = embed_channel(gate_channel({Gate::kHHCnotHH}), targets, 3);
        const oracle::Mat hhh = oracle::hadamard_layer(3);
        const oracle::Mat v = hhh * oracle::cnot(c, t, 3) * hhh;
        EXPECT_LT(po_residual(ch, f0_on_qubits(targets, 3), v, 1.0), 1e-12);
    }
}

TEST(ApplyChannel, MatchesBlockDiagonalKrausOracle) {
    std::mt19937_64 gen(32);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + trial % 3;
        const int q = static_cast<int>(gen() % static_cast<std::uint64_t>(n));
        const std::array<int, 1> t{q};
        const KrausPairChannel ch = embed_channel(gate_channel({kAllGates[gen() % 6]}), t, n);
        const oracle::Mat rho = oracle::random_density(n + 1, gen);
        const oracle::Mat out = apply_channel_dense(ch, rho);
        EXPECT_LT(oracle::max_diff(out, oracle::apply_block_kraus(as_pairs(ch), rho)), 1e-14);
        Eigen::SelfAdjointEigenSolver<oracle::Mat> eig(out);
        EXPECT_GE(eig.eigenvalues().minCoeff(), -1e-10);
        EXPECT_NEAR(out.trace().real(), 1.0, 1e-13);
    }
}

TEST(ApplyChannel, IdentityLeavesStateUnchanged) {
    std::mt19937_64 gen(33);
    const NdmeState s = encode_state_optimal(AmplitudeVector(oracle::random_state(2, gen)));
    const NdmeState out = apply_channel(KrausPairChannel::identity(2), s);
    EXPECT_LT(oracle::max_diff(out.rho(), s.rho()), 1e-15);
    EXPECT_NEAR(out.gamma(), s.gamma(), 1e-15);
    EXPECT_THROW(apply_channel(KrausPairChannel::identity(1), s), DimensionError);
}

TEST(ApplyChannel, HadamardOnPlusGivesZero) {
    const NdmeState out = apply_channel(gate_channel({Gate::kH}), encode_state_optimal(AmplitudeVector::plus_state(1)));
    const AmplitudeVector c = out.amplitudes();
    EXPECT_NEAR(std::abs(c[0] - 1.0), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(c[1]), 0.0, 1e-14);
    EXPECT_NEAR(out.gamma(), 0.5 / std::sqrt(2.0), 1e-14);
    EXPECT_NEAR(out.gamma(), gamma_upper_bound(c), 1e-14);
}

TEST(ApplyChannel, IdentityVariantXFlipsBasisState) {
    const NdmeState out =
        apply_channel(gate_channel({Gate::kX, F0Variant::kIdentity}), encode_state_optimal(AmplitudeVector::basis(1, 0)));
    EXPECT_NEAR(std::abs(out.amplitudes()[1] - 1.0), 0.0, 1e-14);
}

TEST(ApplyChannel, OutputAmplitudesFollowTheGate) {
    std::mt19937_64 gen(34);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + trial % 3;
        const oracle::Vec c = oracle::random_state(n, gen);
        const int q = static_cast<int>(gen() % static_cast<std::uint64_t>(n));
        const Gate g = kAllGates[gen() % 6];
        const std::array<int, 1> t{q};
        const NdmeState s = encode_state_optimal(AmplitudeVector(c));
        const NdmeState out = apply_channel(embed_channel(gate_channel({g}), t, n), s);
        const oracle::Vec expected = oracle::on_qubit(dense_target(g), q, n) * c;
        const double eta = g == Gate::kH ? 1.0 / std::sqrt(2.0) : 1.0;
        EXPECT_LT((out.block_amplitudes() - eta * s.gamma() * expected).cwiseAbs().maxCoeff(), 1e-13);
        EXPECT_LE(out.gamma(), gamma_upper_bound(out.amplitudes()) + 1e-12);
    }
}

}  // namespace
}  // namespace pqc
