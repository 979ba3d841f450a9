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

#include "pqc/hamiltonian.h"

#include <cmath>

#include "pqc/errors.h"
#include "pqc/text_format.h"

namespace pqc {

PauliHamiltonian::PauliHamiltonian(int n) : n_(n) {
    if (n < 1 || n > kMaxQubits) {
        throw SizeError("Hamiltonian qubit count " + std::to_string(n) + " out of range");
    }
}

void PauliHamiltonian::add_term(double lambda, PauliString p) {
    if (!std::isfinite(lambda) || lambda < 0.0) {
        throw StateError("term weight must be non-negative, got " + std::to_string(lambda));
    }
    if (!p.has_real_phase()) {
        throw UnsupportedPhaseError("term " + p.str() + " has an imaginary phase");
    }
    if (p.size() != n_) {
        throw DimensionError("term " + p.str() + " does not act on " + std::to_string(n_) + " qubits");
    }
    terms_.push_back({lambda, std::move(p)});
}

double PauliHamiltonian::lambda_sum() const {
    double sum = 0.0;
    for (const HamiltonianTerm &t : terms_) {
        sum += t.lambda;
    }
    return sum;
}

ComplexMatrix PauliHamiltonian::matrix() const {
    const Eigen::Index dim = Eigen::Index{1} << n_;
    ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
    for (const HamiltonianTerm &t : terms_) {
        for (Eigen::Index b = 0; b < dim; ++b) {
            const auto bu = static_cast<std::uint64_t>(b);
            h(static_cast<Eigen::Index>(bu ^ t.pauli.x_mask()), b) += t.lambda * t.pauli.action_amplitude(bu);
        }
    }
    return h;
}

PauliHamiltonian parse_hamiltonian(std::string_view text) {
    const std::vector<TextLine> lines = meaningful_lines(text);
    PauliHamiltonian h(parse_qubits_header(lines, PauliHamiltonian::kMaxQubits));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const TextLine &line = lines[i];
        if (line.tokens.size() != 2) {
            throw ParseError(line.number, "expected '<lambda> <pauli>'");
        }
        const double lambda = parse_double_token(line.tokens[0], line.number);
        if (lambda < 0.0) {
            throw ParseError(line.number, "term weight must be non-negative");
        }
        PauliString p;
        try {
            p = PauliString::parse(line.tokens[1]);
        } catch (const ParseError &e) {
            throw ParseError(line.number, "bad Pauli string '" + line.tokens[1] + "'");
        }
        if (!p.has_real_phase()) {
            throw ParseError(line.number, "term sign must be + or -");
        }
        if (p.size() != h.n()) {
            throw ParseError(line.number, "term '" + line.tokens[1] + "' has length " + std::to_string(p.size()) +
                                              ", expected " + std::to_string(h.n()));
        }
        h.add_term(lambda, std::move(p));
    }
    return h;
}

}  // namespace pqc
