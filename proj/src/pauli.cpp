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

#include "stegoq/pauli.hpp"

#include <bit>
#include <sstream>

#include "stegoq/error.hpp"

namespace stegoq {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::UnknownLabel: return "UNKNOWN_LABEL";
    case ErrorCode::DuplicateTarget: return "DUPLICATE_TARGET";
    case ErrorCode::InvalidCode: return "INVALID_CODE";
    case ErrorCode::UncorrectableError: return "UNCORRECTABLE_ERROR";
    case ErrorCode::InvalidMask: return "INVALID_MASK";
    case ErrorCode::NoSplit: return "NO_SPLIT";
    case ErrorCode::NotEigenstate: return "NOT_EIGENSTATE";
    case ErrorCode::DecodeFailure: return "DECODE_FAILURE";
    case ErrorCode::ContextError: return "CONTEXT_ERROR";
    case ErrorCode::UnexpectedError: return "UNEXPECTED_ERROR";
    case ErrorCode::Unmodeled: return "UNMODELED";
    }
    return "UNKNOWN";
}

namespace {

std::uint64_t low_mask(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

void check_size(std::size_t n) {
    if (n > PauliOperator::kMaxQubits) {
        throw StegoError(ErrorCode::DimensionMismatch,
                         "Pauli operators support at most 64 qubits, got " + std::to_string(n));
    }
}

void check_same_size(const PauliOperator &a, const PauliOperator &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw StegoError(ErrorCode::DimensionMismatch,
                         "Pauli length mismatch: " + std::to_string(a.num_qubits()) + " vs " +
                             std::to_string(b.num_qubits()));
    }
}

int popc(std::uint64_t v) { return std::popcount(v); }

PauliLetter letter_from_char(char c) {
    switch (c) {
    case 'I': return PauliLetter::I;
    case 'X': return PauliLetter::X;
    case 'Y': return PauliLetter::Y;
    case 'Z': return PauliLetter::Z;
    default:
        throw StegoError(ErrorCode::ParseError, std::string("not a Pauli letter: '") + c + "'");
    }
}

// Strips an optional "+", "-", "i", "+i", "-i" prefix and returns quarter turns.
int parse_phase_prefix(std::string_view &text) {
    int phase = 0;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        if (text.front() == '-') phase = 2;
        text.remove_prefix(1);
    }
    if (!text.empty() && text.front() == 'i') {
        phase = (phase + 1) % 4;
        text.remove_prefix(1);
    }
    return phase;
}

std::string phase_prefix(int phase) {
    switch (phase) {
    case 1: return "i";
    case 2: return "-";
    case 3: return "-i";
    default: return "";
    }
}

// Reads one decimal digit, ASCII or Unicode subscript (U+2080..U+2089, UTF-8
// E2 82 80..89). Returns -1 if the next character is not a digit.
int take_digit(std::string_view &text) {
    if (text.empty()) return -1;
    const auto c = static_cast<unsigned char>(text[0]);
    if (c >= '0' && c <= '9') {
        text.remove_prefix(1);
        return c - '0';
    }
    if (text.size() >= 3 && c == 0xE2 && static_cast<unsigned char>(text[1]) == 0x82) {
        const auto d = static_cast<unsigned char>(text[2]);
        if (d >= 0x80 && d <= 0x89) {
            text.remove_prefix(3);
            return d - 0x80;
        }
    }
    return -1;
}

} // namespace

char letter_char(PauliLetter letter) {
    switch (letter) {
    case PauliLetter::I: return 'I';
    case PauliLetter::X: return 'X';
    case PauliLetter::Z: return 'Z';
    case PauliLetter::Y: return 'Y';
    }
    return '?';
}

std::string subscript_digits(std::size_t value) {
    static constexpr const char *kDigits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    const std::string decimal = std::to_string(value);
    std::string out;
    for (char c : decimal) out += kDigits[c - '0'];
    return out;
}

PauliOperator::PauliOperator(std::size_t num_qubits) : n_(num_qubits) { check_size(num_qubits); }

PauliOperator::PauliOperator(std::size_t num_qubits, std::uint64_t x_bits, std::uint64_t z_bits,
                             int phase)
    : n_(num_qubits), x_(x_bits), z_(z_bits), phase_(((phase % 4) + 4) % 4) {
    check_size(num_qubits);
    if ((x_bits | z_bits) & ~low_mask(num_qubits)) {
        throw StegoError(ErrorCode::DimensionMismatch, "Pauli bits set beyond qubit count");
    }
}

PauliOperator PauliOperator::single(std::size_t num_qubits, std::size_t qubit, PauliLetter letter) {
    if (qubit >= num_qubits) {
        throw StegoError(ErrorCode::DimensionMismatch,
                         "qubit " + std::to_string(qubit + 1) + " outside " +
                             std::to_string(num_qubits) + "-qubit register");
    }
    const auto code = static_cast<std::uint8_t>(letter);
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    return PauliOperator(num_qubits, (code & 1U) ? bit : 0, (code & 2U) ? bit : 0);
}

PauliOperator PauliOperator::from_string(std::string_view text) {
    const int phase = parse_phase_prefix(text);
    if (text.empty()) throw StegoError(ErrorCode::ParseError, "empty Pauli string");
    PauliOperator p(text.size());
    for (std::size_t q = 0; q < text.size(); ++q) {
        const auto code = static_cast<std::uint8_t>(letter_from_char(text[q]));
        if (code & 1U) p.x_ |= std::uint64_t{1} << q;
        if (code & 2U) p.z_ |= std::uint64_t{1} << q;
    }
    p.phase_ = phase;
    return p;
}

PauliOperator PauliOperator::from_subscripts(std::string_view text, std::size_t num_qubits) {
    const std::string original(text);
    PauliOperator result(num_qubits);
    result.phase_ = parse_phase_prefix(text);
    if (text == "I") return result;
    if (text.empty()) throw StegoError(ErrorCode::ParseError, "empty Pauli product");
    while (!text.empty()) {
        if (text.front() == '*' || text.front() == ' ') {
            text.remove_prefix(1);
            continue;
        }
        const PauliLetter letter = letter_from_char(text.front());
        text.remove_prefix(1);
        std::size_t index = 0;
        int digits = 0;
        for (int d = take_digit(text); d >= 0; d = take_digit(text)) {
            index = index * 10 + static_cast<std::size_t>(d);
            ++digits;
        }
        if (digits == 0) {
            throw StegoError(ErrorCode::ParseError, "missing qubit index in '" + original + "'");
        }
        if (index == 0 || index > num_qubits) {
            throw StegoError(ErrorCode::ParseError, "qubit index " + std::to_string(index) +
                                                        " out of range in '" + original + "'");
        }
        result *= single(num_qubits, index - 1, letter);
    }
    return result;
}

PauliOperator PauliOperator::parse(std::string_view text, std::size_t num_qubits) {
    std::string_view body = text;
    parse_phase_prefix(body);
    const bool letters_only =
        body.size() == num_qubits &&
        body.find_first_not_of("IXYZ") == std::string_view::npos;
    if (letters_only) return from_string(text);
    return from_subscripts(text, num_qubits);
}

PauliLetter PauliOperator::letter(std::size_t qubit) const {
    const unsigned x = (x_ >> qubit) & 1U;
    const unsigned z = (z_ >> qubit) & 1U;
    return static_cast<PauliLetter>(x | (z << 1U));
}

std::size_t PauliOperator::weight() const { return static_cast<std::size_t>(popc(x_ | z_)); }

PauliOperator PauliOperator::with_phase(int phase) const {
    PauliOperator p = *this;
    p.phase_ = ((phase % 4) + 4) % 4;
    return p;
}

PauliOperator PauliOperator::adjoint() const { return with_phase(4 - phase_); }

std::string PauliOperator::to_string() const {
    std::string out = phase_prefix(phase_);
    for (std::size_t q = 0; q < n_; ++q) out += letter_char(letter(q));
    return out;
}

std::string PauliOperator::to_subscript_string() const {
    std::string out = phase_prefix(phase_);
    if (is_identity_pattern()) return out + "I";
    for (std::size_t q = 0; q < n_; ++q) {
        const PauliLetter l = letter(q);
        if (l == PauliLetter::I) continue;
        out += letter_char(l);
        out += subscript_digits(q + 1);
    }
    return out;
}

PauliOperator &PauliOperator::operator*=(const PauliOperator &rhs) {
    check_same_size(*this, rhs);
    const std::uint64_t xa = x_, za = z_, xb = rhs.x_, zb = rhs.z_;
    const std::uint64_t ya = xa & za;
    const std::uint64_t only_xa = xa & ~za;
    const std::uint64_t only_za = za & ~xa;
    const std::uint64_t yb = xb & zb;
    const std::uint64_t only_xb = xb & ~zb;
    const std::uint64_t only_zb = zb & ~xb;
    // Per-qubit exponent of i in sigma_a * sigma_b (Y·Z = iX, X·Y = iZ, Z·X = iY, ...).
    const int turns = popc(ya & only_zb) - popc(ya & only_xb) + popc(only_xa & yb) -
                      popc(only_xa & only_zb) + popc(only_za & only_xb) - popc(only_za & yb);
    phase_ = (((phase_ + rhs.phase_ + turns) % 4) + 4) % 4;
    x_ ^= xb;
    z_ ^= zb;
    return *this;
}

PauliOperator multiply(const PauliOperator &a, const PauliOperator &b) {
    PauliOperator out = a;
    out *= b;
    return out;
}

PauliOperator operator*(const PauliOperator &a, const PauliOperator &b) { return multiply(a, b); }

int commutation_bit(const PauliOperator &a, const PauliOperator &b) {
    check_same_size(a, b);
    return popc((a.x_bits() & b.z_bits()) ^ (a.z_bits() & b.x_bits())) & 1;
}

std::size_t weight(const PauliOperator &p) { return p.weight(); }

std::vector<PauliOperator> enumerate_paulis(std::size_t num_qubits, std::size_t max_weight) {
    std::vector<PauliOperator> out{PauliOperator(num_qubits)};
    // Positions chosen as an increasing index list; letters cycle X, Y, Z.
    static constexpr PauliLetter kLetters[] = {PauliLetter::X, PauliLetter::Y, PauliLetter::Z};
    for (std::size_t w = 1; w <= max_weight && w <= num_qubits; ++w) {
        std::vector<std::size_t> pos(w);
        for (std::size_t i = 0; i < w; ++i) pos[i] = i;
        while (true) {
            std::vector<std::size_t> letters(w, 0);
            while (true) {
                PauliOperator p(num_qubits);
                for (std::size_t i = 0; i < w; ++i) {
                    p *= PauliOperator::single(num_qubits, pos[i], kLetters[letters[i]]);
                }
                out.push_back(p.with_phase(0));
                std::size_t j = w;
                while (j > 0 && letters[j - 1] == 2) letters[--j] = 0;
                if (j == 0) break;
                ++letters[j - 1];
            }
            std::size_t i = w;
            while (i > 0 && pos[i - 1] == num_qubits - w + (i - 1)) --i;
            if (i == 0) break;
            ++pos[i - 1];
            for (std::size_t k = i; k < w; ++k) pos[k] = pos[k - 1] + 1;
        }
    }
    return out;
}

SupportMask::SupportMask(std::size_t num_qubits, std::uint64_t bits) : n_(num_qubits), bits_(bits) {
    check_size(num_qubits);
    if (bits & ~low_mask(num_qubits)) {
        throw StegoError(ErrorCode::DimensionMismatch, "mask bits set beyond qubit count");
    }
}

SupportMask SupportMask::from_string(std::string_view text) {
    std::vector<bool> bits;
    for (char c : text) {
        if (c == '0' || c == '1') {
            bits.push_back(c == '1');
        } else if (c != '(' && c != ')' && c != ',' && c != ' ') {
            throw StegoError(ErrorCode::ParseError, "bad mask character '" + std::string(1, c) + "'");
        }
    }
    if (bits.empty()) throw StegoError(ErrorCode::ParseError, "empty mask");
    std::uint64_t word = 0;
    for (std::size_t q = 0; q < bits.size(); ++q) {
        if (bits[q]) word |= std::uint64_t{1} << q;
    }
    return SupportMask(bits.size(), word);
}

SupportMask SupportMask::from_qubits(std::size_t num_qubits, const std::vector<std::size_t> &qubits) {
    std::uint64_t word = 0;
    for (std::size_t q : qubits) {
        if (q >= num_qubits) {
            throw StegoError(ErrorCode::DimensionMismatch, "mask qubit out of range");
        }
        word |= std::uint64_t{1} << q;
    }
    return SupportMask(num_qubits, word);
}

std::size_t SupportMask::weight() const { return static_cast<std::size_t>(popc(bits_)); }

std::vector<std::size_t> SupportMask::qubits() const {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < n_; ++q) {
        if (test(q)) out.push_back(q);
    }
    return out;
}

bool SupportMask::covers(const PauliOperator &p) const {
    if (p.num_qubits() != n_) {
        throw StegoError(ErrorCode::DimensionMismatch, "mask/Pauli length mismatch");
    }
    return (p.support() & ~bits_) == 0;
}

std::string SupportMask::to_string() const {
    std::string out;
    for (std::size_t q = 0; q < n_; ++q) out += test(q) ? '1' : '0';
    return out;
}

std::string PositionedPauli::to_string() const {
    return std::string(1, letter_char(letter)) + subscript_digits(qubit + 1);
}

std::vector<PositionedPauli> hamming_support(const SupportMask &q, const PauliOperator &p) {
    if (q.num_qubits() != p.num_qubits()) {
        throw StegoError(ErrorCode::DimensionMismatch, "mask/Pauli length mismatch");
    }
    std::vector<PositionedPauli> out;
    for (std::size_t i : q.qubits()) out.push_back({i, p.letter(i)});
    return out;
}

} // namespace stegoq
