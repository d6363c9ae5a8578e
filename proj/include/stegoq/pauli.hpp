// Copyright 2026 The stegoq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace stegoq {

/// Single-qubit Pauli letter. Bit 0 is the X component, bit 1 the Z component.
enum class PauliLetter : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char letter_char(PauliLetter letter);

/// n-qubit Pauli operator i^phase * (P_1 ⊗ ... ⊗ P_n), stored in bit-packed
/// symplectic form. Qubit q (0-based) lives in bit q of the x/z words, and the
/// letter Y means Y itself (Y = iXZ), so the phase of "Y" is 0.
class PauliOperator {
  public:
    static constexpr std::size_t kMaxQubits = 64;

    PauliOperator() = default;
    explicit PauliOperator(std::size_t num_qubits);
    PauliOperator(std::size_t num_qubits, std::uint64_t x_bits, std::uint64_t z_bits,
                  int phase = 0);

    static PauliOperator identity(std::size_t num_qubits) { return PauliOperator(num_qubits); }
    static PauliOperator single(std::size_t num_qubits, std::size_t qubit, PauliLetter letter);

    /// Parses letter form, e.g. "XZZXI", "-iXY", "+ZZ".
    static PauliOperator from_string(std::string_view text);
    /// Parses subscripted product form, e.g. "Z₄Z₅", "Z4Z9", "-X1", "I".
    /// Qubit indices are 1-based.
    static PauliOperator from_subscripts(std::string_view text, std::size_t num_qubits);
    /// Accepts either grammar: a string of exactly num_qubits letters is read as
    /// letter form, anything else as subscripted form.
    static PauliOperator parse(std::string_view text, std::size_t num_qubits);

    std::size_t num_qubits() const { return n_; }
    std::uint64_t x_bits() const { return x_; }
    std::uint64_t z_bits() const { return z_; }
    /// Quarter turns: 0 -> +1, 1 -> +i, 2 -> -1, 3 -> -i.
    int phase() const { return phase_; }

    PauliLetter letter(std::size_t qubit) const;
    std::uint64_t support() const { return x_ | z_; }
    std::size_t weight() const;
    bool is_identity_pattern() const { return (x_ | z_) == 0; }
    bool is_hermitian() const { return phase_ % 2 == 0; }

    PauliOperator with_phase(int phase) const;
    PauliOperator adjoint() const;

    std::string to_string() const;
    std::string to_subscript_string() const;

    PauliOperator &operator*=(const PauliOperator &rhs);
    friend bool operator==(const PauliOperator &, const PauliOperator &) = default;

  private:
    std::size_t n_ = 0;
    std::uint64_t x_ = 0;
    std::uint64_t z_ = 0;
    int phase_ = 0;
};

PauliOperator multiply(const PauliOperator &a, const PauliOperator &b);
PauliOperator operator*(const PauliOperator &a, const PauliOperator &b);

/// 0 if ab = ba, 1 if ab = -ba.
int commutation_bit(const PauliOperator &a, const PauliOperator &b);
inline bool commutes(const PauliOperator &a, const PauliOperator &b) {
    return commutation_bit(a, b) == 0;
}

std::size_t weight(const PauliOperator &p);

/// Every Pauli pattern of weight at most max_weight, ordered by weight, then
/// by qubit positions, then by letters X < Y < Z.
std::vector<PauliOperator> enumerate_paulis(std::size_t num_qubits, std::size_t max_weight);

/// n-bit selection mask; qubit q in bit q.
class SupportMask {
  public:
    SupportMask() = default;
    explicit SupportMask(std::size_t num_qubits, std::uint64_t bits = 0);

    /// "00011" or "(0,0,0,1,1)"; first character is qubit 1.
    static SupportMask from_string(std::string_view text);
    static SupportMask from_qubits(std::size_t num_qubits, const std::vector<std::size_t> &qubits);

    std::size_t num_qubits() const { return n_; }
    std::uint64_t bits() const { return bits_; }
    bool test(std::size_t qubit) const { return (bits_ >> qubit) & 1U; }
    std::size_t weight() const;
    /// 0-based qubit indices with the bit set, ascending.
    std::vector<std::size_t> qubits() const;
    /// True iff p acts trivially outside the mask.
    bool covers(const PauliOperator &p) const;

    std::string to_string() const;

    friend bool operator==(const SupportMask &, const SupportMask &) = default;

  private:
    std::size_t n_ = 0;
    std::uint64_t bits_ = 0;
};

struct PositionedPauli {
    std::size_t qubit; // 0-based
    PauliLetter letter;

    std::string to_string() const; // "X₄"
    friend bool operator==(const PositionedPauli &, const PositionedPauli &) = default;
};

/// The letters of p at the coordinates selected by q, in ascending qubit order.
std::vector<PositionedPauli> hamming_support(const SupportMask &q, const PauliOperator &p);

std::string subscript_digits(std::size_t value);

} // namespace stegoq
