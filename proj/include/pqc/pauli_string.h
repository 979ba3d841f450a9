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

#ifndef PQC_PAULI_STRING_H
#define PQC_PAULI_STRING_H

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pqc/linalg.h"

namespace pqc {

/// Fixed-length bit string. Position 0 is the first (most significant) qubit,
/// so index() of "100" is 4.
class BitString {
  public:
    static constexpr int kMaxBits = 63;

    BitString() = default;
    BitString(int size, std::uint64_t index);

    /// Parses a string over {0,1}; throws ParseError(line 1) otherwise.
    static BitString parse(std::string_view text);

    int size() const { return size_; }
    std::uint64_t index() const { return index_; }
    bool operator[](int pos) const;
    void set(int pos, bool value);
    std::string str() const;

    friend bool operator==(const BitString &, const BitString &) = default;
    friend auto operator<=>(const BitString &, const BitString &) = default;

  private:
    int size_ = 0;
    std::uint64_t index_ = 0;
};

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// A signed tensor product i^k * P_1 ⊗ ... ⊗ P_n.
class PauliString {
  public:
    PauliString() = default;
    PauliString(int phase_exponent, std::vector<PauliLetter> letters);

    static PauliString identity(int n);

    /// Accepts an optional sign prefix (+, -, +i, -i, i) followed by letters,
    /// e.g. "-ZZ", "+iXY", "IX".
    static PauliString parse(std::string_view text);

    /// Q_alpha: X where alpha has a 1, I elsewhere.
    static PauliString x_string(const BitString &alpha);

    int size() const { return static_cast<int>(letters_.size()); }
    /// Phase is i^phase_exponent(), exponent in [0, 4).
    int phase_exponent() const { return phase_; }
    cplx phase() const;
    bool has_real_phase() const { return (phase_ & 1) == 0; }
    PauliLetter operator[](int q) const { return letters_[static_cast<std::size_t>(q)]; }
    const std::vector<PauliLetter> &letters() const { return letters_; }

    std::uint64_t x_mask() const;
    std::uint64_t z_mask() const;
    int y_count() const;

    /// Amplitude a with P|b> = a |b ^ x_mask()>.
    cplx action_amplitude(std::uint64_t basis_index) const;

    bool commutes_with(const PauliString &other) const;
    bool is_identity_up_to_phase() const;

    PauliString operator*(const PauliString &rhs) const;
    PauliString operator-() const;
    PauliString with_phase(int phase_exponent) const;

    std::string str() const;

    friend bool operator==(const PauliString &, const PauliString &) = default;
    friend auto operator<=>(const PauliString &, const PauliString &) = default;

  private:
    int phase_ = 0;
    std::vector<PauliLetter> letters_;
};

/// Dense 2^n x 2^n realization.
ComplexMatrix pauli_matrix(const PauliString &p);

/// P v, in O(2^n).
ComplexVector apply_pauli(const PauliString &p, const ComplexVector &v);

/// P m Q^dagger for equal-width Pauli strings, in O(4^n).
ComplexMatrix pauli_sandwich(const PauliString &p, const ComplexMatrix &m, const PauliString &q);

}  // namespace pqc

#endif
