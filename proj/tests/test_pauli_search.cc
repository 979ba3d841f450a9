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
#include "pqc/measurement.h"
#include "pqc/rng.h"
#include "pqc/search.h"

namespace pqc {
namespace {

std::string x_letters(std::uint64_t a, int n) {
    std::string s;
    for (int q = 0; q < n; ++q) {
        s.push_back((a >> (n - 1 - q)) & 1 ? 'X' : 'I');
    }
    return s;
}

/// The oracle channel written out from its two components: a replacement
/// channel on the x-shifted diagonal, and a sign-flipping {I,X} twirl.
oracle::Mat oracle_by_components(int n, std::uint64_t x, const oracle::Mat &rho) {
    const Eigen::Index d = Eigen::Index{1} << n;
    const oracle::Mat a = rho.topLeftCorner(d, d);
    const oracle::Mat b = rho.topRightCorner(d, d);
    const oracle::Mat c = rho.bottomLeftCorner(d, d);
    const oracle::Mat dd = rho.bottomRightCorner(d, d);
    oracle::Mat replaced = oracle::Mat::Zero(2 * d, 2 * d);
    replaced.topLeftCorner(d, d) = a.trace() * oracle::Mat::Identity(d, d) / static_cast<double>(d);
    replaced.bottomRightCorner(d, d) = dd.trace() * oracle::Mat::Identity(d, d) / static_cast<double>(d);
    cplx shifted{};
    for (Eigen::Index j = 0; j < d; ++j) {
        shifted += b(j, j ^ static_cast<Eigen::Index>(x));
    }
    for (Eigen::Index i = 0; i < d; ++i) {
        replaced(i, d + (i ^ static_cast<Eigen::Index>(x))) = shifted / static_cast<double>(d);
        replaced(d + (i ^ static_cast<Eigen::Index>(x)), i) = std::conj(shifted) / static_cast<double>(d);
    }
    oracle::Mat twirled = oracle::Mat::Zero(2 * d, 2 * d);
    for (Eigen::Index q = 0; q < d; ++q) {
        const oracle::Mat p = oracle::pauli(x_letters(static_cast<std::uint64_t>(q), n));
        oracle::Mat f = oracle::Mat::Zero(2 * d, 2 * d);
        f.topLeftCorner(d, d) = p;
        f.bottomRightCorner(d, d) = -p;
        twirled += f * rho * f.adjoint() / static_cast<double>(d);
    }
    (void)c;
    return (2.0 / 3.0) * replaced + (1.0 / 3.0) * twirled;
}

oracle::Mat plus_projector(int qubits) {
    const Eigen::Index d = Eigen::Index{1} << qubits;
    return oracle::Mat::Constant(d, d, 1.0 / static_cast<double>(d));
}

TEST(SearchOracle, VerificationValues) {
    for (int n = 1; n <= 3; ++n) {
        const Eigen::Index d = Eigen::Index{1} << n;
        for (std::uint64_t x = 0; x < static_cast<std::uint64_t>(d); ++x) {
            const SearchOracle o(n, BitString(n, x));
            for (std::uint64_t a = 0; a < static_cast<std::uint64_t>(d); ++a) {
                const oracle::Mat in = (oracle::Mat::Identity(2 * d, 2 * d) + oracle::pauli("X" + x_letters(a, n))) /
                                       static_cast<double>(2 * d);
                const double value = pauli_expectation(oracle_apply(o, in), assisted_x_string('X', BitString(n, a)));
                EXPECT_NEAR(value, a == x ? 1.0 / 3.0 : -1.0 / 3.0, 1e-14);
            }
            const oracle::Mat mixed = oracle::Mat::Identity(2 * d, 2 * d) / static_cast<double>(2 * d);
            EXPECT_LT(oracle::max_diff(oracle_apply(o, mixed), mixed), 1e-15);
        }
    }
}

TEST(SearchOracle, StructuredKrausAndComponentFormsAgree) {
    std::mt19937_64 gen(71);
    for (int n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 4; ++trial) {
            const std::uint64_t x = gen() % (std::uint64_t{1} << n);
            const SearchOracle o(n, BitString(n, x));
            const oracle::Mat rho = oracle::random_density(n + 1, gen);
            const oracle::Mat expected = oracle_by_components(n, x, rho);
            EXPECT_LT(oracle::max_diff(oracle_apply(o, rho), expected), 1e-14);
            EXPECT_LT(oracle::max_diff(apply_channel_dense(oracle_channel(o), rho), expected), 1e-14);
        }
    }
    EXPECT_THROW(oracle_apply(SearchOracle(2, BitString(2, 0)), oracle::Mat::Identity(4, 4)), DimensionError);
}

TEST(SearchOracle, RealizesPhaseOracleWithEtaOneThird) {
    for (int n = 1; n <= 2; ++n) {
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
            const SearchOracle o(n, BitString(n, x));
            const Eigen::Index d = Eigen::Index{1} << n;
            oracle::Mat u = -oracle::Mat::Identity(d, d);
            u(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x)) = 1.0;
            EXPECT_LT(oracle::max_diff(search_unitary(o), u), 1e-15);
            const KrausPairChannel ch = oracle_channel(o);
            EXPECT_NEAR(*ch.eta(), 1.0 / 3.0, 1e-15);
            std::vector<std::pair<oracle::Mat, oracle::Mat>> pairs;
            for (const KrausPair &p : ch.pairs()) {
                pairs.emplace_back(p.k, p.l);
            }
            EXPECT_LT(oracle::max_diff(oracle::cbe(pairs), oracle::po_target(u, true, 1.0 / 3.0)), 1e-12);
        }
    }
    EXPECT_THROW(SearchOracle(3, BitString(2, 0)), DimensionError);
}

TEST(Protocol, ClosedFormAndDenseMixture) {
    for (int n = 1; n <= 5; ++n) {
        for (std::uint64_t x : {std::uint64_t{0}, (std::uint64_t{1} << n) - 1, std::uint64_t{1}}) {
            const SearchOracle o(n, BitString(n, x));
            const oracle::Mat sys = plus_projector(n + 1);
            const oracle::Mat expected = 0.25 * sys + 0.75 * oracle_by_components(n, x, sys);
            EXPECT_LT(oracle::max_diff(run_protocol(o), expected), 1e-14);
            const Eigen::Index d = Eigen::Index{1} << n;
            oracle::Mat closed(2 * d, 2 * d);
            const oracle::Mat a = plus_projector(n) / 4.0 + std::pow(2.0, -n - 2) * oracle::Mat::Identity(d, d);
            const oracle::Mat b = std::pow(2.0, -n - 2) * oracle::pauli(x_letters(x, n));
            closed << a, b, b, a;
            EXPECT_LT(oracle::max_diff(protocol_closed_form(n, BitString(n, x)), closed), 1e-15);
            EXPECT_LT(oracle::max_diff(run_protocol(o), closed), 1e-14);
        }
    }
}

TEST(Protocol, BlockExampleAndOutputTraces) {
    const oracle::Mat out = run_protocol(SearchOracle(2, BitString::parse("10")));
    EXPECT_LT(oracle::max_diff(out.topRightCorner(4, 4), oracle::pauli("XI") / 16.0), 1e-15);
    for (std::uint64_t a = 0; a < 4; ++a) {
        const double v = pauli_expectation(out, assisted_x_string('X', BitString(2, a)));
        EXPECT_NEAR(v, a == 2 ? 0.5 : 0.0, 1e-14);
    }
}

TEST(XBasis, ProbabilitiesMatchDenseRotation) {
    std::mt19937_64 gen(72);
    for (int qubits = 1; qubits <= 4; ++qubits) {
        const oracle::Mat rho = oracle::random_density(qubits, gen);
        const oracle::Mat h = oracle::hadamard_layer(qubits);
        const oracle::Mat rotated = h * rho * h;
        const Eigen::VectorXd p = x_basis_probabilities(rho);
        for (Eigen::Index i = 0; i < p.size(); ++i) {
            EXPECT_NEAR(p(i), rotated(i, i).real(), 1e-14);
        }
    }
}

TEST(XBasis, ExactAcceptanceAndParity) {
    for (int n = 1; n <= 6; ++n) {
        const std::uint64_t x = (std::uint64_t{0x2D}) & ((std::uint64_t{1} << n) - 1);
        const Eigen::VectorXd p = x_basis_probabilities(run_protocol(SearchOracle(n, BitString(n, x))));
        double accepted = 0.0;
        for (Eigen::Index b = 0; b < p.size(); ++b) {
            const BitString beta(n + 1, static_cast<std::uint64_t>(b));
            if (p(b) > 1e-15 && accepted_outcome(beta)) {
                EXPECT_TRUE(satisfies_parity(beta, BitString(n, x))) << beta.str();
            }
            if (accepted_outcome(beta)) {
                accepted += p(b);
            }
        }
        EXPECT_NEAR(accepted, 0.5 - std::pow(2.0, -(n + 1)), 1e-14);
    }
}

TEST(XBasis, PostSelectionRule) {
    EXPECT_FALSE(accepted_outcome(BitString::parse("000")));
    EXPECT_FALSE(accepted_outcome(BitString::parse("100")));
    EXPECT_TRUE(accepted_outcome(BitString::parse("001")));
    EXPECT_TRUE(accepted_outcome(BitString::parse("110")));
}

TEST(Sampler, InverseCdf) {
    Eigen::VectorXd p(4);
    p << 0.0, 0.25, 0.0, 0.75;
    const XBasisSampler s(p);
    EXPECT_EQ(s.width(), 2);
    EXPECT_EQ(s.draw(0.0), 1u);
    EXPECT_EQ(s.draw(0.2), 1u);
    EXPECT_EQ(s.draw(0.3), 3u);
    EXPECT_EQ(s.draw(0.999999), 3u);
}

TEST(Sampler, BatchesAreReproducibleAndFollowStatistics) {
    const oracle::Mat out = run_protocol(SearchOracle(4, BitString::parse("0110")));
    const SampleBatch a = sample_x_basis(out, 10000, 5);
    const SampleBatch b = sample_x_basis(out, 10000, 5);
    EXPECT_EQ(a.outcomes, b.outcomes);
    EXPECT_EQ(a.accepted, b.accepted);
    const double rate = static_cast<double>(a.accepted.size()) / 10000.0;
    EXPECT_NEAR(rate, 0.5 - std::pow(2.0, -5), 0.02);
    for (const BitString &beta : a.outcomes) {
        EXPECT_EQ(beta.size(), 5);
    }
    for (const BitString &beta : a.accepted) {
        EXPECT_TRUE(satisfies_parity(beta, BitString::parse("0110")));
    }
}

TEST(Extract, SpecExamples) {
    const SampleBatch batch = sample_x_basis(run_protocol(SearchOracle(3, BitString::parse("101"))), 40, 11);
    std::vector<BitString> first(batch.accepted.begin(), batch.accepted.begin() + 20);
    const ExtractResult r = extract_target(first, 3);
    ASSERT_TRUE(r.target.has_value());
    EXPECT_EQ(r.target->str(), "101");
    EXPECT_EQ(r.rank, 3);
    const ExtractResult dup = extract_target({BitString::parse("0001"), BitString::parse("0001")}, 3);
    EXPECT_FALSE(dup.target.has_value());
    EXPECT_EQ(dup.rank, 1);
    const ExtractResult one = extract_target({BitString::parse("11")}, 1);
    ASSERT_TRUE(one.target.has_value());
    EXPECT_EQ(one.target->str(), "1");
    EXPECT_THROW(extract_target({BitString::parse("11")}, 2), DimensionError);
}

TEST(Extract, AgreesWithBruteForce) {
    std::mt19937_64 gen(73);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 5;
        const std::uint64_t x = gen() % (std::uint64_t{1} << n);
        std::vector<BitString> rows;
        std::vector<std::pair<std::uint64_t, int>> constraints;
        const int count = 1 + static_cast<int>(gen() % static_cast<std::uint64_t>(n + 2));
        for (int i = 0; i < count; ++i) {
            const std::uint64_t rest = gen() % (std::uint64_t{1} << n);
            const int b0 = __builtin_popcountll(rest & x) % 2;
            rows.emplace_back(n + 1, (static_cast<std::uint64_t>(b0) << n) | rest);
            constraints.emplace_back(rest, b0);
        }
        const auto solutions = oracle::parity_solutions(constraints, n);
        const ExtractResult r = extract_target(rows, n);
        if (solutions.size() == 1) {
            ASSERT_TRUE(r.target.has_value());
            EXPECT_EQ(r.target->index(), solutions[0]);
        } else {
            EXPECT_FALSE(r.target.has_value());
        }
    }
}

TEST(EndToEnd, PlantedTargets) {
    const SearchResult r = end_to_end_search(5, BitString::parse("10110"), 7);
    ASSERT_TRUE(r.found.has_value());
    EXPECT_EQ(r.found->str(), "10110");
    EXPECT_GT(r.stats.oracle_queries, 0);
    for (int n = 1; n <= 8; ++n) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            Rng pick(seed);
            const BitString x(n, pick.below(std::uint64_t{1} << n));
            const SearchResult s = end_to_end_search(n, x, seed + 100);
            ASSERT_TRUE(s.found.has_value());
            EXPECT_EQ(*s.found, x);
            EXPECT_LE(s.stats.independent_batches, s.stats.batches);
        }
    }
}

TEST(EndToEnd, GivesUpAfterRetryBudget) {
    // A sampler that only ever yields one accepted direction cannot reach rank 2.
    Eigen::VectorXd p = Eigen::VectorXd::Zero(8);
    p(1) = 1.0;
    const SearchResult r = search_with_sampler(XBasisSampler(p), 2, 3, 5);
    EXPECT_FALSE(r.found.has_value());
    EXPECT_EQ(r.stats.batches, 5);
    EXPECT_EQ(r.stats.independent_batches, 0);
}

// Constant-query alternative: estimate every Tr(X (x) Q_alpha rho_out)
// from one batch of raw outcomes and keep the largest.
TEST(EndToEnd, ParityScanFindsTargetAtSmallN) {
    for (int n = 2; n <= 4; ++n) {
        const BitString x(n, (std::uint64_t{0b1011}) & ((std::uint64_t{1} << n) - 1));
        const SampleBatch batch = sample_x_basis(run_protocol(SearchOracle(n, x)), 10000, 17);
        std::uint64_t best = 0;
        double best_value = -2.0;
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
            double sum = 0.0;
            for (const BitString &beta : batch.outcomes) {
                const int parity = (beta[0] ? 1 : 0) ^ (__builtin_popcountll(beta.index() & a) & 1);
                sum += parity ? -1.0 : 1.0;
            }
            const double mean = sum / static_cast<double>(batch.outcomes.size());
            EXPECT_NEAR(mean, a == x.index() ? 0.5 : 0.0, 0.05);
            if (mean > best_value) {
                best_value = mean;
                best = a;
            }
        }
        EXPECT_EQ(best, x.index());
    }
}

}  // namespace
}  // namespace pqc
