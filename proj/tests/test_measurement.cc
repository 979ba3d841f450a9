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
#include "pqc/compiler.h"
#include "pqc/errors.h"
#include "pqc/measurement.h"
#include "pqc/reference.h"
#include "pqc/vectorization.h"

namespace pqc {
namespace {

BitString bits(const std::string &s) { return BitString::parse(s); }

/// Dense 2(n+1)-qubit operator whose trace against rho (x) rho1 is the
/// swap-type overlap of the two upper-right blocks.
oracle::Mat swap_operator(int n) {
    const Eigen::Index half = Eigen::Index{1} << n;
    const Eigen::Index d = 2 * half;
    oracle::Mat m = oracle::Mat::Zero(d * d, d * d);
    for (Eigen::Index i = 0; i < half; ++i) {
        for (Eigen::Index j = 0; j < half; ++j) {
            const Eigen::Index row = j * d + (half + i);
            const Eigen::Index col = (half + i) * d + j;
            m(row, col) = 1.0;
        }
    }
    return m;
}

TEST(PauliTrace, SpecExamples) {
    oracle::Mat plus = oracle::Mat::Constant(2, 2, 0.5);
    EXPECT_NEAR(pauli_expectation(plus, PauliString::parse("X")), 1.0, 1e-15);
    EXPECT_NEAR(pauli_expectation(oracle::Mat::Identity(2, 2) / 2.0, PauliString::parse("Z")), 0.0, 1e-15);
    oracle::Mat bad = plus;
    bad(0, 1) = 0.3;
    EXPECT_THROW(pauli_expectation(bad, PauliString::parse("X")), StateError);
    EXPECT_THROW(pauli_trace(plus, PauliString::parse("XX")), DimensionError);
}

TEST(PauliTrace, MatchesDenseTraceAndDecomposition) {
    std::mt19937_64 gen(51);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + trial % 3;
        const oracle::Mat rho = oracle::random_density(n, gen);
        const std::string letters = oracle::random_letters(n, gen);
        const PauliString p = PauliString::parse(letters);
        const cplx dense = (oracle::pauli(letters) * rho).trace();
        EXPECT_LT(std::abs(pauli_trace(rho, p) - dense), 1e-14);
        const auto terms = pauli_decompose(rho);
        const auto it = terms.find(p);
        const cplx coeff = it == terms.end() ? cplx{} : it->second;
        EXPECT_NEAR(pauli_expectation(rho, p), (coeff * static_cast<double>(1 << n)).real(), 1e-13);
    }
}

TEST(AssistedString, Layout) {
    EXPECT_EQ(assisted_x_string('X', bits("101")).str(), "+XXIX");
    EXPECT_EQ(assisted_x_string('Y', bits("01")).str(), "+YIX");
}

TEST(AmplitudeViaPauli, PlusStateRawTracesAndAmplitudes) {
    for (int n = 1; n <= 3; ++n) {
        const NdmeState s = encode_state_optimal(AmplitudeVector::plus_state(n));
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
            const BitString alpha(n, a);
            EXPECT_NEAR(pauli_expectation(s.rho(), assisted_x_string('X', alpha)), 1.0, 1e-14);
            EXPECT_LT(std::abs(amplitude_via_pauli(s, alpha) - std::pow(2.0, -0.5 * n)), 1e-14);
        }
    }
    const NdmeState zero = encode_state_optimal(AmplitudeVector::basis(3, 0));
    EXPECT_LT(std::abs(amplitude_via_pauli(zero, bits("000")) - 1.0), 1e-14);
}

TEST(AmplitudeViaPauli, RecoversComplexAmplitudes) {
    std::mt19937_64 gen(52);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + trial % 3;
        const oracle::Vec c = oracle::random_state(n, gen);
        const NdmeState s = encode_state_optimal(AmplitudeVector(c));
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
            EXPECT_LT(std::abs(amplitude_via_pauli(s, BitString(n, a)) - c(static_cast<Eigen::Index>(a))), 1e-13);
        }
    }
}

// Adding i Tr(Y (x) Q) instead of subtracting it returns the conjugate.
TEST(AmplitudeViaPauliErrata, PlusSignGivesConjugate) {
    oracle::Vec c(2);
    c << cplx(0.6, 0.0), cplx(0.0, 0.8);
    const NdmeState s = encode_state_optimal(AmplitudeVector(c));
    const BitString one = bits("1");
    const double tx = pauli_expectation(s.rho(), assisted_x_string('X', one));
    const double ty = pauli_expectation(s.rho(), assisted_x_string('Y', one));
    const double scale = std::pow(2.0, 1.5) * s.gamma();
    const cplx literal = cplx(tx, ty) / scale;
    EXPECT_GT(std::abs(literal - c(1)), 1.0);
    EXPECT_LT(std::abs(literal - std::conj(c(1))), 1e-14);
    EXPECT_LT(std::abs(amplitude_via_pauli(s, one) - c(1)), 1e-14);
}

TEST(AmplitudeViaPauli, PipelineMatchesStatevector) {
    std::mt19937_64 gen(53);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Circuit u = random_circuit(3, 10, static_cast<int>(seed % 3), seed);
        const oracle::Vec psi = oracle::random_state(3, gen);
        const NdmeState out = run_program(compile(u), encode_state_optimal(AmplitudeVector(psi)));
        const oracle::Mat h = oracle::hadamard_layer(3);
        const oracle::Vec v_psi = h * circuit_unitary(u) * h * psi;
        for (std::uint64_t a = 0; a < 8; ++a) {
            EXPECT_LT(std::abs(amplitude_via_pauli(out, BitString(3, a)) - v_psi(static_cast<Eigen::Index>(a)) / v_psi.norm()),
                      1e-9);
        }
    }
}

TEST(AmplitudeViaPauli, Errors) {
    const NdmeState mixed = NdmeState::from_density(oracle::Mat::Identity(4, 4) / 4.0);
    EXPECT_THROW(amplitude_via_pauli(mixed, bits("0")), EncodingError);
    EXPECT_THROW(amplitude_via_pauli(encode_state_optimal(AmplitudeVector::plus_state(2)), bits("0")), DimensionError);
}

TEST(SwapExpectation, SpecExamples) {
    const NdmeState plus = encode_state_optimal(AmplitudeVector::plus_state(2));
    const NdmeState x1 = apply_channel(pauli_channel(PauliString::parse("XI"), F0Variant::kIdentity), plus);
    EXPECT_LT(std::abs(expectation_via_swap(plus, x1) - 0.25), 1e-14);
    EXPECT_LT(std::abs(expectation_via_swap(plus, plus) - 0.25), 1e-14);
    const NdmeState zero = encode_state_optimal(AmplitudeVector::basis(2, 0));
    const NdmeState z1 = apply_channel(pauli_channel(PauliString::parse("ZI"), F0Variant::kIdentity), zero);
    EXPECT_LT(std::abs(expectation_via_swap(zero, z1) / (zero.gamma() * zero.gamma()) - 1.0), 1e-14);
}

TEST(SwapExpectation, MatchesDenseOperatorAndStatevector) {
    std::mt19937_64 gen(54);
    for (int trial = 0; trial < 16; ++trial) {
        const int n = 1 + trial % 2;
        const oracle::Vec c = oracle::random_state(n, gen);
        const std::string letters = oracle::random_letters(n, gen);
        const double sign = trial % 3 == 0 ? -1.0 : 1.0;
        const PauliString p = PauliString::parse(letters).with_phase(sign < 0 ? 2 : 0);
        const NdmeState s = encode_state_optimal(AmplitudeVector(c));
        for (F0Variant var : {F0Variant::kIdentity, F0Variant::kProjector}) {
            const NdmeState s1 = apply_channel(pauli_channel(p, var), s);
            const cplx value = expectation_via_swap(s, s1);
            const cplx dense = (swap_operator(n) * oracle::kron(s.rho(), s1.rho())).trace();
            EXPECT_LT(std::abs(value - dense), 1e-14);
            const cplx exact = sign * c.dot(oracle::pauli(letters) * c);
            EXPECT_LT(std::abs(value / (s.gamma() * s.gamma()) - exact), 1e-10);
        }
    }
}

TEST(SwapExpectation, GammaMismatchIsRejected) {
    const NdmeState a = encode_state_optimal(AmplitudeVector::plus_state(1));
    const NdmeState b = encode_state_optimal(AmplitudeVector::basis(1, 0));
    EXPECT_THROW(expectation_via_swap(a, b), ConsistencyError);
}

TEST(Purification, SpecExamples) {
    const NdmeState plus = encode_state_optimal(AmplitudeVector::plus_state(2));
    const HleCheck pure = hle_identity_check(plus, bits("00"));
    EXPECT_NEAR(pure.lhs, 2.0, 1e-12);
    EXPECT_NEAR(pure.rhs, 2.0, 1e-12);
    const NdmeState mixed(oracle::Mat::Identity(8, 8) / 8.0, 0.0);
    const HleCheck m = hle_identity_check(mixed, bits("01"));
    EXPECT_NEAR(m.lhs, 1.0, 1e-12);
    EXPECT_NEAR(m.rhs, 1.0, 1e-12);
}

TEST(Purification, RandomStates) {
    std::mt19937_64 gen(55);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + trial % 3;
        const NdmeState s = encode_state_optimal(AmplitudeVector(oracle::random_state(n, gen)));
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
            EXPECT_LT(hle_identity_check(s, BitString(n, a)).residual, 1e-10);
        }
    }
}

TEST(Sampling, DeterministicOutcome) {
    const SampleEstimate e = sample_pauli(oracle::Mat::Constant(2, 2, 0.5), PauliString::parse("X"), 500, 7);
    EXPECT_EQ(e.mean, 1.0);
    EXPECT_FALSE(e.flagged);
    for (auto o : e.outcomes) {
        EXPECT_EQ(o, 1);
    }
}

TEST(Sampling, UnbiasedAndReproducible) {
    const oracle::Mat mixed = oracle::Mat::Identity(2, 2) / 2.0;
    const SampleEstimate a = sample_pauli(mixed, PauliString::parse("Z"), 10000, 3);
    const SampleEstimate b = sample_pauli(mixed, PauliString::parse("Z"), 10000, 3);
    EXPECT_LT(std::abs(a.mean), 0.05);
    EXPECT_EQ(a.outcomes, b.outcomes);
    EXPECT_NEAR(a.standard_error, 0.01, 1e-3);
    EXPECT_THROW(sample_pauli(mixed, PauliString::parse("Z"), 0, 3), DimensionError);
}

TEST(Sampling, MeanTracksExactValue) {
    std::mt19937_64 gen(56);
    int flagged = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const oracle::Mat rho = oracle::random_density(2, gen);
        const SampleEstimate e = sample_pauli(rho, PauliString::parse(oracle::random_letters(2, gen)), 4000, gen());
        flagged += e.flagged ? 1 : 0;
    }
    EXPECT_LE(flagged, 1);
}

}  // namespace
}  // namespace pqc
