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

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "stegoq/pauli.hpp"
#include "stegoq/stabilizer_code.hpp"
#include "stegoq/statevector.hpp"

namespace stegoq::degenerate {

/// Two-bit message symbol; index 0..3 stands for 00, 01, 10, 11.
using Symbol = int;

std::string symbol_string(Symbol s);
Symbol parse_symbol(std::string_view text);

/// Probability vector over the four symbols.
class Distribution4 {
  public:
    static constexpr double kSumTolerance = 1e-12;

    Distribution4() : p_{1.0, 0.0, 0.0, 0.0} {}
    /// Throws InvalidArgument unless entries are >= 0 and sum to 1 within 1e-12.
    explicit Distribution4(const std::array<double, 4> &p);

    static Distribution4 uniform() { return Distribution4({0.25, 0.25, 0.25, 0.25}); }
    static Distribution4 point(Symbol s);

    double operator[](Symbol s) const { return p_[static_cast<std::size_t>(s)]; }
    const std::array<double, 4> &values() const { return p_; }

  private:
    std::array<double, 4> p_;
};

double entropy(const Distribution4 &d);
/// r_k = sum_j q_{k xor j} p_j.
Distribution4 mix_distribution(const Distribution4 &p, const Distribution4 &q);
/// Solves mix_distribution(p, q) = target for q; nullopt when no valid q exists.
std::optional<Distribution4> solve_innocence(const Distribution4 &p, const Distribution4 &target);
double total_variation(const Distribution4 &a, const Distribution4 &b);

/// Error alphabet: per symbol, the sender's interchangeable errors and the
/// receiver's degenerate counterpart.
struct ErrorAlphabet {
    std::array<std::vector<PauliOperator>, 4> alice;
    std::array<PauliOperator, 4> bob;

    /// Distinct sender errors, identity first.
    std::vector<PauliOperator> alice_set() const;
    std::vector<PauliOperator> bob_set() const;
};

/// 00 -> I | I, 01 -> Z1,Z2 | Z3, 10 -> Z4,Z5 | Z6, 11 -> Z7,Z8 | Z9.
ErrorAlphabet shor_ea_alphabet();

struct EncodedSecret {
    StateVector state;
    PauliOperator e_a;
};

struct NormalDecode {
    Symbol symbol = 0;
    int cover = 0;
    Syndrome syndrome;
};

struct ChallengeResult {
    StateVector state;
    Symbol bob_symbol = 0;
    PauliOperator e_b;
};

struct EveReport {
    /// Symbol of the block Eve attributes the error to (0 = no error).
    Symbol error_class = 0;
    /// Minimum-weight representative Eve would correct.
    PauliOperator inferred_error;
    int cover = 0;
    Syndrome syndrome;
};

/// Degenerate-error stego scheme over shor_ea with the table alphabet.
class DegenerateScheme {
  public:
    DegenerateScheme();
    DegenerateScheme(StabilizerCode code, ErrorAlphabet alphabet);

    const StabilizerCode &code() const { return code_; }
    const ErrorAlphabet &alphabet() const { return alphabet_; }
    const StateVector &codeword(int cover) const;

    /// Applies the choice-th error listed for `symbol` to |w_L>.
    EncodedSecret encode_secret(Symbol symbol, int cover, std::size_t choice) const;
    /// Same with the choice drawn uniformly.
    EncodedSecret encode_secret(Symbol symbol, int cover, std::mt19937_64 &rng) const;

    /// Throws UnexpectedError when the syndrome is outside the alphabet.
    NormalDecode decode_normal(const StateVector &state) const;

    ChallengeResult challenge_randomize(const StateVector &state, const Distribution4 &q,
                                        std::mt19937_64 &rng) const;
    ChallengeResult challenge_apply(const StateVector &state, Symbol bob_symbol) const;

    /// Eve measures all generators and min-weight decodes. Throws Unmodeled
    /// if the state is not a syndrome eigenstate or not a logical basis state
    /// after correction.
    EveReport eve_infer(const StateVector &state) const;

  private:
    Symbol symbol_of(const Syndrome &s) const;

    StabilizerCode code_;
    ErrorAlphabet alphabet_;
    std::array<Syndrome, 4> symbol_syndromes_;
    std::vector<StateVector> codewords_;
    DecodingTable eve_table_;
    Labels block_;
};

struct TrialRecord {
    std::size_t trial = 0;
    Symbol symbol = 0;
    int cover = 0;
    PauliOperator e_a;
    PauliOperator e_b;
    Symbol eve_class = 0;
    int eve_cover = 0;
};

struct InnocenceRun {
    std::vector<TrialRecord> trials;
    Distribution4 empirical;
    Distribution4 analytic;
    double tv_distance = 0.0;
};

/// Full encode -> challenge -> Eve pipeline per trial, each on its own
/// substream of `seed`.
InnocenceRun empirical_innocence_run(const Distribution4 &p, const Distribution4 &q, std::size_t trials,
                                     std::uint64_t seed);

} // namespace stegoq::degenerate
