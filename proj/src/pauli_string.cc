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

#include "pqc/pauli_string.h"

#include <bit>

#include "pqc/errors.h"

namespace pqc {

BitString::BitString(int size, std::uint64_t index) : size_(size), index_(index) {
    if (size < 0 || size > kMaxBits) {
        throw SizeError("bit string length " + std::to_string(size) + " out of range");
    }
    if (size < 64 && (index >> size) != 0) {
        throw DimensionError("bit string index does not fit in " + std::to_string(size) + " bits");
    }
}

BitString BitString::parse(std::string_view text) {
    if (text.empty() || text.size() > static_cast<std::size_t>(kMaxBits)) {
        throw ParseError(1, "bit string must have 1.." + std::to_string(kMaxBits) + " characters");
    }
    std::uint64_t index = 0;
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw ParseError(1, std::string("invalid bit character '") + c + "'");
        }
        index = (index << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return BitString(static_cast<int>(text.size()), index);
}

bool BitString::operator[](int pos) const { return (index_ >> (size_ - 1 - pos)) & 1; }

void BitString::set(int pos, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (size_ - 1 - pos);
    index_ = value ? (index_ | bit) : (index_ & ~bit);
}

std::string BitString::str() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(size_));
    for (int i = 0; i < size_; ++i) {
        out.push_back((*this)[i] ? '1' : '0');
    }
    return out;
}

namespace {

// Product table for single letters: result letter and phase exponent.
struct LetterProduct {
    PauliLetter letter;
    int phase;
};

LetterProduct multiply_letters(PauliLetter a, PauliLetter b) {
    using L = PauliLetter;
    if (a == L::I) return {b, 0};
    if (b == L::I) return {a, 0};
    if (a == b) return {L::I, 0};
    // Cyclic X -> Y -> Z gives +i, anti-cyclic gives -i.
    auto next = [](L p) { return p == L::X ? L::Y : p == L::Y ? L::Z : L::X; };
    const L third = static_cast<L>(6 - static_cast<int>(a) - static_cast<int>(b));
    return {third, next(a) == b ? 1 : 3};
}

constexpr cplx kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

PauliString::PauliString(int phase_exponent, std::vector<PauliLetter> letters)
    : phase_(((phase_exponent % 4) + 4) % 4), letters_(std::move(letters)) {
    if (letters_.size() > static_cast<std::size_t>(BitString::kMaxBits)) {
        throw SizeError("Pauli string too long");
    }
}

PauliString PauliString::identity(int n) {
    return PauliString(0, std::vector<PauliLetter>(static_cast<std::size_t>(n), PauliLetter::I));
}

PauliString PauliString::parse(std::string_view text) {
    int phase = 0;
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        phase = text[pos] == '-' ? 2 : 0;
        ++pos;
    }
    if (pos < text.size() && text[pos] == 'i') {
        phase += 1;
        ++pos;
    }
    std::vector<PauliLetter> letters;
    for (; pos < text.size(); ++pos) {
        switch (text[pos]) {
            case 'I': letters.push_back(PauliLetter::I); break;
            case 'X': letters.push_back(PauliLetter::X); break;
            case 'Y': letters.push_back(PauliLetter::Y); break;
            case 'Z': letters.push_back(PauliLetter::Z); break;
            default:
                throw ParseError(1, "invalid Pauli letter '" + std::string(1, text[pos]) + "' in '" +
                                        std::string(text) + "'");
        }
    }
    if (letters.empty()) {
        throw ParseError(1, "empty Pauli string '" + std::string(text) + "'");
    }
    return PauliString(phase, std::move(letters));
}

PauliString PauliString::x_string(const BitString &alpha) {
    std::vector<PauliLetter> letters(static_cast<std::size_t>(alpha.size()), PauliLetter::I);
    for (int q = 0; q < alpha.size(); ++q) {
        if (alpha[q]) {
            letters[static_cast<std::size_t>(q)] = PauliLetter::X;
        }
    }
    return PauliString(0, std::move(letters));
}

cplx PauliString::phase() const { return kPhases[phase_]; }

std::uint64_t PauliString::x_mask() const {
    std::uint64_t m = 0;
    for (PauliLetter l : letters_) {
        m = (m << 1) | static_cast<std::uint64_t>(l == PauliLetter::X || l == PauliLetter::Y);
    }
    return m;
}

std::uint64_t PauliString::z_mask() const {
    std::uint64_t m = 0;
    for (PauliLetter l : letters_) {
        m = (m << 1) | static_cast<std::uint64_t>(l == PauliLetter::Z || l == PauliLetter::Y);
    }
    return m;
}

int PauliString::y_count() const {
    int c = 0;
    for (PauliLetter l : letters_) {
        c += l == PauliLetter::Y;
    }
    return c;
}

cplx PauliString::action_amplitude(std::uint64_t basis_index) const {
    // Y|b> = i (-1)^b |b^1>, so each Y contributes i on top of the Z sign.
    const int sign = std::popcount(basis_index & z_mask()) & 1;
    return kPhases[(phase_ + y_count() + 2 * sign) % 4];
}

bool PauliString::commutes_with(const PauliString &other) const {
    if (size() != other.size()) {
        throw DimensionError("Pauli strings of different width");
    }
    const int anti = std::popcount(x_mask() & other.z_mask()) + std::popcount(z_mask() & other.x_mask());
    return (anti & 1) == 0;
}

bool PauliString::is_identity_up_to_phase() const { return x_mask() == 0 && z_mask() == 0; }

PauliString PauliString::operator*(const PauliString &rhs) const {
    if (size() != rhs.size()) {
        throw DimensionError("Pauli strings of different width");
    }
    int phase = phase_ + rhs.phase_;
    std::vector<PauliLetter> letters(letters_.size());
    for (std::size_t q = 0; q < letters_.size(); ++q) {
        const LetterProduct p = multiply_letters(letters_[q], rhs.letters_[q]);
        letters[q] = p.letter;
        phase += p.phase;
    }
    return PauliString(phase, std::move(letters));
}

PauliString PauliString::operator-() const { return PauliString(phase_ + 2, letters_); }

PauliString PauliString::with_phase(int phase_exponent) const { return PauliString(phase_exponent, letters_); }

std::string PauliString::str() const {
    static constexpr const char *kPrefix[4] = {"+", "+i", "-", "-i"};
    std::string out = kPrefix[phase_];
    for (PauliLetter l : letters_) {
        out.push_back("IXYZ"[static_cast<int>(l)]);
    }
    return out;
}

ComplexMatrix pauli_matrix(const PauliString &p) {
    const std::uint64_t dim = std::uint64_t{1} << p.size();
    const std::uint64_t x = p.x_mask();
    ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::uint64_t b = 0; b < dim; ++b) {
        m(static_cast<Eigen::Index>(b ^ x), static_cast<Eigen::Index>(b)) = p.action_amplitude(b);
    }
    return m;
}

ComplexVector apply_pauli(const PauliString &p, const ComplexVector &v) {
    const std::uint64_t dim = std::uint64_t{1} << p.size();
    if (static_cast<std::uint64_t>(v.size()) != dim) {
        throw DimensionError("vector length does not match Pauli width");
    }
    const std::uint64_t x = p.x_mask();
    ComplexVector out(v.size());
    for (std::uint64_t b = 0; b < dim; ++b) {
        out(static_cast<Eigen::Index>(b ^ x)) = p.action_amplitude(b) * v(static_cast<Eigen::Index>(b));
    }
    return out;
}

ComplexMatrix pauli_sandwich(const PauliString &p, const ComplexMatrix &m, const PauliString &q) {
    const std::uint64_t dim = std::uint64_t{1} << p.size();
    if (p.size() != q.size() || static_cast<std::uint64_t>(m.rows()) != dim ||
        static_cast<std::uint64_t>(m.cols()) != dim) {
        throw DimensionError("pauli_sandwich dimension mismatch");
    }
    const std::uint64_t xp = p.x_mask();
    const std::uint64_t xq = q.x_mask();
    std::vector<cplx> ap(dim), aq(dim);
    for (std::uint64_t b = 0; b < dim; ++b) {
        ap[b] = p.action_amplitude(b ^ xp);
        aq[b] = std::conj(q.action_amplitude(b ^ xq));
    }
    ComplexMatrix out(m.rows(), m.cols());
    for (std::uint64_t b = 0; b < dim; ++b) {
        for (std::uint64_t a = 0; a < dim; ++a) {
            out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
                ap[a] * m(static_cast<Eigen::Index>(a ^ xp), static_cast<Eigen::Index>(b ^ xq)) * aq[b];
        }
    }
    return out;
}

}  // namespace pqc
