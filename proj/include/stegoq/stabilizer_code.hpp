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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stegoq/pauli.hpp"
#include "stegoq/statevector.hpp"

namespace stegoq {

/// One bit per generator, ordered as the code's generator list.
struct Syndrome {
    std::vector<std::uint8_t> bits;

    bool is_trivial() const;
    std::string to_string() const;
    auto operator<=>(const Syndrome &) const = default;
};

/// Stabilizer code with explicit logical operators. An entanglement-assisted
/// code is the full register plus an ownership mask marking receiver-held
/// qubits (all-zero when nothing is pre-shared).
struct StabilizerCode {
    std::string name;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    std::vector<PauliOperator> generators;
    std::vector<PauliOperator> logical_x;
    std::vector<PauliOperator> logical_z;
    SupportMask ownership;

    std::size_t correction_radius() const { return d == 0 ? 0 : (d - 1) / 2; }

    /// Throws InvalidCode if generators fail to commute, are dependent, or the
    /// logical operators have the wrong commutation pattern.
    void validate() const;
};

StabilizerCode five_qubit_code();
StabilizerCode shor_ea_code();
StabilizerCode four_two_two_code();
StabilizerCode three_qubit_demo_code();

/// All shipped codes, validated at first use.
const std::vector<StabilizerCode> &catalog();
const StabilizerCode &find_code(std::string_view name);

Syndrome syndrome_of(const StabilizerCode &code, const PauliOperator &e);

struct StabilizerMembership {
    /// p equals +/-(product of generators).
    bool in_group = false;
    /// p equals -(product of generators) rather than +(product).
    bool negated = false;
    /// Generator indices whose product gives the pattern of p.
    std::vector<std::size_t> combination;
};

StabilizerMembership stabilizer_membership(const StabilizerCode &code, const PauliOperator &p);
/// Sign-insensitive, like stabilizer_membership().in_group.
bool in_stabilizer_group(const StabilizerCode &code, const PauliOperator &p);
bool in_normalizer(const StabilizerCode &code, const PauliOperator &p);
/// Same pattern up to a stabilizer element (phases ignored).
bool degenerate_equivalent(const StabilizerCode &code, const PauliOperator &a, const PauliOperator &b);

enum class PairClass { InStabilizer, InEaNormalizer, Violation };

std::string_view pair_class_name(PairClass c);

struct PairClassification {
    PairClass kind = PairClass::Violation;
    /// For InEaNormalizer: e_B e_A = witness_error * witness_normalizer up to phase.
    std::optional<PauliOperator> witness_error;
    std::optional<PauliOperator> witness_normalizer;
};

/// Classifies e_B e_A against S ∪ (E_A - I)∘N(S).
PairClassification check_pair_condition(const StabilizerCode &code,
                                        const std::vector<PauliOperator> &e_a_set,
                                        const PauliOperator &e_a, const PauliOperator &e_b);

/// Logical basis state |word>, word[j] = '0'/'1' for logical qubit j+1.
///
/// |0..0_L> is the normalized projection prod(I+S_i) prod(I+Zbar_j) of the
/// first computational basis state with nonzero overlap, phased so its first
/// nonzero amplitude is real positive; |w_L> = prod Xbar_j^{w_j} |0..0_L>.
/// Qubits are labelled "q1".."qn".
StateVector codeword(const StabilizerCode &code, std::string_view word);
StateVector codeword(const StabilizerCode &code, std::uint64_t word_index);

/// Replaces the k qubits `inputs` (logical qubit 1 first) with the n-qubit
/// code block labelled block_labels, applying the encoding isometry
/// |u> -> |u_L>. The block is placed first, the untouched qubits follow.
StateVector encode_block(const StateVector &state, const StabilizerCode &code, const Labels &inputs,
                         const Labels &block_labels);

/// Adjoint of encode_block: projects the block onto the code space and maps
/// |u_L> back to |u> on `outputs`. Throws DecodeFailure when the block carries
/// weight outside the code space.
StateVector decode_block(const StateVector &state, const StabilizerCode &code, const Labels &block_labels,
                         const Labels &outputs);

/// Minimum-weight coset-leader table over errors of weight <= max_weight.
class DecodingTable {
  public:
    struct Entry {
        PauliOperator error;
        /// Another error of the same minimal weight shares the syndrome and is
        /// not degenerate with `error`.
        bool ambiguous = false;
    };

    DecodingTable(const StabilizerCode &code, std::size_t max_weight);

    const Entry *lookup(const Syndrome &s) const;
    std::size_t size() const { return table_.size(); }

  private:
    std::map<Syndrome, Entry> table_;
};

/// Syndrome read from generator expectations on the block; throws
/// NotEigenstate when an expectation is not ±1.
Syndrome measure_syndrome(const StateVector &state, const StabilizerCode &code, const Labels &block);

/// Text form: one "key value..." pair per line (name, n, k, d, generator,
/// logical_x, logical_z, ownership with 1-based qubits).
std::string serialize_code(const StabilizerCode &code);
StabilizerCode parse_code(std::string_view text);

} // namespace stegoq
