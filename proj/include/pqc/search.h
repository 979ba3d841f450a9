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

#ifndef PQC_SEARCH_H
#define PQC_SEARCH_H

#include <cstdint>
#include <optional>
#include <vector>

#include "pqc/channels.h"
#include "pqc/linalg.h"
#include "pqc/pauli_string.h"

namespace pqc {

/// C_search = (2/3) C_x + (1/3) C_I: keeps X⊗Q_x at 1/3 and maps every other
/// X⊗Q_alpha to -1/3 of itself.
struct SearchOracle {
    static constexpr int kMaxQubits = 10;
    static constexpr double kEta = 1.0 / 3.0;

    SearchOracle(int n, BitString target);

    int n;
    BitString x;
};

/// Closed-form block action, O(4^n).
ComplexMatrix oracle_apply(const SearchOracle &o, const ComplexMatrix &rho);

/// The same mixture as 4^n + 2^n explicit Kraus pairs (n <= 4).
KrausPairChannel oracle_channel(const SearchOracle &o);

/// -I + 2|x><x|.
ComplexMatrix search_unitary(const SearchOracle &o);

/// Ancilla-traced output (eta/(1+eta)) rho_sys + (1/(1+eta)) C_search[rho_sys]
/// with rho_sys = |+><+|^{n+1}.
ComplexMatrix run_protocol(const SearchOracle &o);

/// Diagonal blocks |+><+|^n / 4 + 2^{-n-2} I, off-diagonal blocks 2^{-n-2} Q_x.
ComplexMatrix protocol_closed_form(int n, const BitString &x);

/// <v_beta|rho|v_beta> with |v_beta> = H^{n+1}|beta>.
Eigen::VectorXd x_basis_probabilities(const ComplexMatrix &rho);

/// True unless beta = b0 0...0, the two outcomes post-selection discards.
bool accepted_outcome(const BitString &beta);

/// (-1)^{beta_0 + sum x_l beta_l} == 1.
bool satisfies_parity(const BitString &beta, const BitString &x);

struct SampleBatch {
    std::uint64_t seed = 0;
    std::vector<BitString> outcomes;  // length n + 1 each
    std::vector<BitString> accepted;
};

/// Inverse-CDF sampling from precomputed outcome probabilities.
class XBasisSampler {
  public:
    explicit XBasisSampler(const Eigen::VectorXd &probabilities);
    std::uint64_t draw(double u) const;
    int width() const { return width_; }

  private:
    std::vector<double> cdf_;
    int width_ = 0;
};

SampleBatch sample_x_basis(const ComplexMatrix &rho_out, std::int64_t shots, std::uint64_t seed);

struct ExtractResult {
    std::optional<BitString> target;  // empty: insufficient rank
    int rank = 0;
};

/// Solves sum_l beta_l r_l = beta_0 (mod 2) over the accepted outcomes.
ExtractResult extract_target(const std::vector<BitString> &accepted, int n);

struct SearchStats {
    std::int64_t oracle_queries = 0;
    std::int64_t accepted = 0;
    int batches = 0;
    int independent_batches = 0;
    double acceptance_rate = 0.0;
    double independence_rate = 0.0;
};

struct SearchResult {
    std::optional<BitString> found;
    SearchStats stats;
};

/// Repeats: query until n outcomes are accepted, then try to solve. Gives up
/// after max_batches batches.
SearchResult end_to_end_search(int n, const BitString &x, std::uint64_t seed, int max_batches = 64);

/// Same loop against a sampler prepared once for (n, x).
SearchResult search_with_sampler(const XBasisSampler &sampler, int n, std::uint64_t seed, int max_batches = 64);

}  // namespace pqc

#endif
