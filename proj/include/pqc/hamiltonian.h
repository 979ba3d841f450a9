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

#ifndef PQC_HAMILTONIAN_H
#define PQC_HAMILTONIAN_H

#include <string_view>
#include <vector>

#include "pqc/linalg.h"
#include "pqc/pauli_string.h"

namespace pqc {

struct HamiltonianTerm {
    double lambda = 0.0;
    PauliString pauli;
};

/// H_p = sum_i lambda_i P_i with lambda_i >= 0 and P_i of phase +1 or -1.
class PauliHamiltonian {
  public:
    static constexpr int kMaxQubits = 10;

    explicit PauliHamiltonian(int n);

    /// Throws StateError on negative or non-finite lambda, UnsupportedPhaseError
    /// on an imaginary phase and DimensionError on a width mismatch.
    void add_term(double lambda, PauliString p);

    int n() const { return n_; }
    const std::vector<HamiltonianTerm> &terms() const { return terms_; }
    double lambda_sum() const;
    ComplexMatrix matrix() const;

  private:
    int n_ = 0;
    std::vector<HamiltonianTerm> terms_;
};

/// Format: a "qubits n" line, then one "<lambda> <sign><letters>" term per
/// line, e.g. "1.0 -ZZ". '#' starts a comment.
PauliHamiltonian parse_hamiltonian(std::string_view text);

}  // namespace pqc

#endif
