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

#include "pqc/search.h"

#include <algorithm>
#include <cmath>

#include "pqc/errors.h"
#include "pqc/rng.h"

namespace pqc {

SearchOracle::SearchOracle(int n_, BitString target) : n(n_), x(target) {
    if (n < 1 || n > kMaxQubits) {
        throw SizeError("search register must have 1.." + std::to_string(kMaxQubits) + " qubits");
    }
    if (x.size() != n) {
        throw DimensionError("target has " + std::to_string(x.size()) + " bits, expected " + std::to_string(n));
    }
}

namespace {

// twirl(M)_{ab} = 2^{-n} sum_j M(j, j ^ a ^ b) = 2^{-n} sum_i Q_i M Q_i.
ComplexMatrix twirl(const ComplexMatrix &m) {
    const Eigen::Index dim = m.rows();
    ComplexVector diag_sums = ComplexVector::Zero(dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        for (Eigen::Index s = 0; s < dim; ++s) {
            diag_sums(s) += m(j, j ^ s);
        }
    }
    diag_sums /= static_cast<double>(dim);
    ComplexMatrix out(dim, dim);
    for (Eigen::Index b = 0; b < dim; ++b) {
        for (Eigen::Index a = 0; a < dim; ++a) {
            out(a, b) = diag_sums(a ^ b);
        }
    }
    return out;
}

ComplexMatrix x_permutation(Eigen::Index dim, std::uint64_t x, cplx value) {
    ComplexMatrix q = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        q(i, static_cast<Eigen::Index>(static_cast<std::uint64_t>(i) ^ x)) = value;
    }
    return q;
}

cplx shifted_trace(const ComplexMatrix &m, std::uint64_t x) {
    cplx s{};
    for (Eigen::Index j = 0; j < m.rows(); ++j) {
        s += m(j, static_cast<Eigen::Index>(static_cast<std::uint64_t>(j) ^ x));
    }
    return s;
}

}  // namespace

ComplexMatrix oracle_apply(const SearchOracle &o, const ComplexMatrix &rho) {
    const Eigen::Index dim = Eigen::Index{1} << o.n;
    if (rho.rows() != 2 * dim || rho.cols() != 2 * dim) {
        throw DimensionError("density matrix does not match the oracle width");
    }
    const double inv = 1.0 / static_cast<double>(dim);
    const std::uint64_t x = o.x.index();
    const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);
    ComplexMatrix out(2 * dim, 2 * dim);
    const auto a = rho.topLeftCorner(dim, dim);
    const auto b = rho.topRightCorner(dim, dim);
    const auto c = rho.bottomLeftCorner(dim, dim);
    const auto d = rho.bottomRightCorner(dim, dim);
    out.topLeftCorner(dim, dim) = (2.0 / 3.0) * (a.trace() * inv) * id + (1.0 / 3.0) * twirl(a);
    out.bottomRightCorner(dim, dim) = (2.0 / 3.0) * (d.trace() * inv) * id + (1.0 / 3.0) * twirl(d);
    out.topRightCorner(dim, dim) = x_permutation(dim, x, (2.0 / 3.0) * inv * shifted_trace(b, x)) - (1.0 / 3.0) * twirl(b);
    out.bottomLeftCorner(dim, dim) =
        x_permutation(dim, x, (2.0 / 3.0) * inv * shifted_trace(c, x)) - (1.0 / 3.0) * twirl(c);
    return out;
}

KrausPairChannel oracle_channel(const SearchOracle &o) {
    if (o.n > 4) {
        throw SizeError("explicit oracle Kraus pairs limited to 4 qubits");
    }
    const Eigen::Index dim = Eigen::Index{1} << o.n;
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    const double wx = std::sqrt(2.0 / 3.0) * scale;
    const double wi = std::sqrt(1.0 / 3.0) * scale;
    const auto x = static_cast<Eigen::Index>(o.x.index());
    std::vector<KrausPair> pairs;
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            KrausPair p{ComplexMatrix::Zero(dim, dim), ComplexMatrix::Zero(dim, dim)};
            p.k(i, j) = wx;
            p.l(i ^ x, j ^ x) = wx;
            pairs.push_back(std::move(p));
        }
    }
    for (Eigen::Index i = 0; i < dim; ++i) {
        const ComplexMatrix q = x_permutation(dim, static_cast<std::uint64_t>(i), 1.0);
        pairs.push_back({wi * q, -wi * q});
    }
    return KrausPairChannel(o.n, std::move(pairs), SearchOracle::kEta);
}

ComplexMatrix search_unitary(const SearchOracle &o) {
    const Eigen::Index dim = Eigen::Index{1} << o.n;
    ComplexMatrix u = -ComplexMatrix::Identity(dim, dim);
    u(static_cast<Eigen::Index>(o.x.index()), static_cast<Eigen::Index>(o.x.index())) += 2.0;
    return u;
}

ComplexMatrix run_protocol(const SearchOracle &o) {
    const Eigen::Index dim = Eigen::Index{2} << o.n;
    const ComplexMatrix rho_sys = ComplexMatrix::Constant(dim, dim, 1.0 / static_cast<double>(dim));
    const double eta = SearchOracle::kEta;
    return (eta / (1.0 + eta)) * rho_sys + (1.0 / (1.0 + eta)) * oracle_apply(o, rho_sys);
}

ComplexMatrix protocol_closed_form(int n, const BitString &x) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    const double inv = 1.0 / static_cast<double>(dim);
    const ComplexMatrix diag =
        ComplexMatrix::Constant(dim, dim, 0.25 * inv) + 0.25 * inv * ComplexMatrix::Identity(dim, dim);
    const ComplexMatrix off = x_permutation(dim, x.index(), 0.25 * inv);
    ComplexMatrix rho(2 * dim, 2 * dim);
    rho << diag, off, off, diag;
    return rho;
}

Eigen::VectorXd x_basis_probabilities(const ComplexMatrix &rho) {
    log2_exact(static_cast<std::size_t>(rho.rows()));
    ComplexMatrix m = rho;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        hadamard_transform(std::span<cplx>(m.col(c).data(), static_cast<std::size_t>(m.rows())));
    }
    m.transposeInPlace();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        hadamard_transform(std::span<cplx>(m.col(c).data(), static_cast<std::size_t>(m.rows())));
    }
    Eigen::VectorXd p = m.diagonal().real();
    return p.cwiseMax(0.0);
}

bool accepted_outcome(const BitString &beta) {
    const std::uint64_t rest_mask = (std::uint64_t{1} << (beta.size() - 1)) - 1;
    return (beta.index() & rest_mask) != 0;
}

bool satisfies_parity(const BitString &beta, const BitString &x) {
    const std::uint64_t rest_mask = (std::uint64_t{1} << x.size()) - 1;
    int parity = beta[0] ? 1 : 0;
    parity ^= std::popcount(beta.index() & rest_mask & x.index()) & 1;
    return parity == 0;
}

XBasisSampler::XBasisSampler(const Eigen::VectorXd &probabilities)
    : width_(log2_exact(static_cast<std::size_t>(probabilities.size()))) {
    double acc = 0.0;
    cdf_.reserve(static_cast<std::size_t>(probabilities.size()));
    for (Eigen::Index i = 0; i < probabilities.size(); ++i) {
        acc += probabilities(i);
        cdf_.push_back(acc);
    }
    if (!(acc > 0.0)) {
        throw NumericError("outcome distribution has no weight");
    }
}

std::uint64_t XBasisSampler::draw(double u) const {
    const double target = u * cdf_.back();
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), target);
    const auto idx = static_cast<std::size_t>(it - cdf_.begin());
    return std::min(idx, cdf_.size() - 1);
}

SampleBatch sample_x_basis(const ComplexMatrix &rho_out, std::int64_t shots, std::uint64_t seed) {
    if (shots < 1) {
        throw DimensionError("shots must be positive");
    }
    const XBasisSampler sampler(x_basis_probabilities(rho_out));
    Rng rng(seed);
    SampleBatch batch;
    batch.seed = seed;
    for (std::int64_t s = 0; s < shots; ++s) {
        const BitString beta(sampler.width(), sampler.draw(rng.uniform()));
        batch.outcomes.push_back(beta);
        if (accepted_outcome(beta)) {
            batch.accepted.push_back(beta);
        }
    }
    return batch;
}

ExtractResult extract_target(const std::vector<BitString> &accepted, int n) {
    // Rows are (beta_1..beta_n | beta_0) as an (n+1)-bit word, rhs in bit 0.
    std::vector<std::uint64_t> pivots(static_cast<std::size_t>(n), 0);
    const std::uint64_t rest_mask = (std::uint64_t{1} << n) - 1;
    ExtractResult out;
    for (const BitString &beta : accepted) {
        if (beta.size() != n + 1) {
            throw DimensionError("outcome width does not match n + 1");
        }
        std::uint64_t row = ((beta.index() & rest_mask) << 1) | (beta[0] ? 1 : 0);
        for (int col = n - 1; col >= 0; --col) {
            const std::uint64_t bit = std::uint64_t{1} << (col + 1);
            if ((row & bit) == 0) {
                continue;
            }
            std::uint64_t &pivot = pivots[static_cast<std::size_t>(col)];
            if (pivot == 0) {
                pivot = row;
                ++out.rank;
                break;
            }
            row ^= pivot;
        }
    }
    if (out.rank < n) {
        return out;
    }
    // Back substitution from the lowest pivot column upward.
    std::uint64_t r = 0;
    for (int col = 0; col < n; ++col) {
        const std::uint64_t row = pivots[static_cast<std::size_t>(col)];
        const std::uint64_t lower = (row >> 1) & ((std::uint64_t{1} << col) - 1);
        const int value = static_cast<int>((row & 1) ^ (std::popcount(lower & r) & 1));
        r |= static_cast<std::uint64_t>(value) << col;
    }
    out.target = BitString(n, r);
    return out;
}

SearchResult search_with_sampler(const XBasisSampler &sampler, int n, std::uint64_t seed, int max_batches) {
    if (sampler.width() != n + 1) {
        throw DimensionError("sampler width does not match n + 1");
    }
    Rng rng(seed);
    SearchResult result;
    SearchStats &st = result.stats;
    while (st.batches < max_batches) {
        std::vector<BitString> batch;
        while (static_cast<int>(batch.size()) < n) {
            const BitString beta(n + 1, sampler.draw(rng.uniform()));
            ++st.oracle_queries;
            if (accepted_outcome(beta)) {
                batch.push_back(beta);
                ++st.accepted;
            }
        }
        ++st.batches;
        const ExtractResult solved = extract_target(batch, n);
        if (solved.target) {
            ++st.independent_batches;
            result.found = solved.target;
            break;
        }
    }
    st.acceptance_rate = static_cast<double>(st.accepted) / static_cast<double>(st.oracle_queries);
    st.independence_rate = static_cast<double>(st.independent_batches) / static_cast<double>(st.batches);
    return result;
}

SearchResult end_to_end_search(int n, const BitString &x, std::uint64_t seed, int max_batches) {
    const SearchOracle oracle(n, x);
    const XBasisSampler sampler(x_basis_probabilities(run_protocol(oracle)));
    return search_with_sampler(sampler, n, seed, max_batches);
}

}  // namespace pqc
