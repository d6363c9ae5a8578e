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
#include <tuple>
#include <utility>
#include <vector>

#include "stegoq/pauli.hpp"
#include "stegoq/stabilizer_code.hpp"
#include "stegoq/statevector.hpp"
#include "stegoq/trace.hpp"

namespace stegoq::phasebit {

inline constexpr const char *kBobLabel = "bob";

struct PhaseBitContext {
    StabilizerCode code;
    SupportMask q_vec;
    /// Basis indices (block ordering) of each half, per logical word.
    std::vector<std::vector<std::uint64_t>> l0_support;
    std::vector<std::vector<std::uint64_t>> l1_support;
    std::vector<std::size_t> flipping;
    std::vector<std::size_t> non_flipping;
    PauliOperator sublogical_z;
    /// Generator index used for controlled-S_F and the sublogical Hadamard.
    std::size_t flip_generator = 0;
    Labels block;

    std::size_t num_words() const { return std::size_t{1} << code.k; }
    const PauliOperator &flip_operator() const { return code.generators[flip_generator]; }
};

/// Weight floor((d-1)/2) + 1.
std::size_t mask_weight(const StabilizerCode &code);

/// Product of Z over the mask.
PauliOperator sublogical_z(const SupportMask &mask);

/// Odd number of X/Y letters of g on the mask.
bool is_flipping(const SupportMask &mask, const PauliOperator &g);

/// Throws InvalidMask for a supplied mask of the wrong weight or that does not
/// split the codewords, NoSplit when the search finds nothing.
PhaseBitContext build_context(const StabilizerCode &code, std::optional<SupportMask> q_vec = std::nullopt);
/// Same context with another flipping generator for readout and restoration.
PhaseBitContext with_flip_generator(PhaseBitContext ctx, std::size_t generator);

/// Normalized halves (|L0^w>, |L1^w>) on the block labels.
std::pair<StateVector, StateVector> split_codeword(const PhaseBitContext &ctx, std::size_t w);

/// (|L0^w,0> + (-1)^b |L1^w,1>)/sqrt2 on block + "bob".
StateVector prepare_upsilon(const PhaseBitContext &ctx, std::size_t w, int b);
/// Quantum secret alpha|Phi+> + beta|Phi-> pushed through |j> -> sum_w c_w |L_j^w>.
StateVector prepare_upsilon(const PhaseBitContext &ctx, const std::vector<Amplitude> &cover, Amplitude alpha,
                            Amplitude beta);

struct SyndromeRecord {
    /// Bits for the non-flipping generators, in ctx.non_flipping order.
    std::vector<std::uint8_t> nf_values;
    /// (i, j, bit) for flipping generator indices i < j.
    std::vector<std::tuple<std::size_t, std::size_t, std::uint8_t>> pair_sums;
    /// Full syndromes over all generators, ordered so candidates[0] < candidates[1].
    std::vector<Syndrome> candidates;

    /// Measured values only; equal for errors Bob cannot tell apart.
    std::string key() const;
};

/// Throws NotEigenstate if any measured observable is not +/-1 within 1e-10.
SyndromeRecord extract_syndromes(const StateVector &state, const PhaseBitContext &ctx);

struct DecodePolicy {
    enum class Kind { MinWeight, AllowedSet };
    Kind kind = Kind::MinWeight;
    std::vector<PauliOperator> allowed;

    static DecodePolicy min_weight() { return {}; }
    static DecodePolicy allowed_set(std::vector<PauliOperator> errors) {
        return {Kind::AllowedSet, std::move(errors)};
    }
    std::string name() const;
};

/// The collision-free allowed set for five_qubit: one member per collision pair.
std::vector<PauliOperator> five_qubit_allowed_set();

struct Resolution {
    StateVector corrected;
    std::optional<PauliOperator> chosen;
    bool ambiguous = false;
    /// Minimum-weight error per candidate; nullopt when the syndrome is not correctable.
    std::vector<std::optional<PauliOperator>> candidate_errors;
};

Resolution resolve_and_correct(const StateVector &state, const SyndromeRecord &record, const PhaseBitContext &ctx,
                               const DecodePolicy &policy);

/// Controlled-S_F from Bob's qubit, then splits Bob's qubit off.
/// Throws DecodeFailure if it stays entangled.
std::pair<StateVector, std::array<Amplitude, 2>> disentangle(const StateVector &state, const PhaseBitContext &ctx);

/// Disentangles and measures Bob's qubit in the X basis.
struct SecretReadout {
    int bit = 0;
    double probability_one = 0.0;
    StateVector block;
};
SecretReadout read_secret(const StateVector &state, const PhaseBitContext &ctx, std::mt19937_64 &rng);

/// Applies (S_F + Z)/sqrt2 to the block.
StateVector restore_cover(const StateVector &block, const PhaseBitContext &ctx);

struct PhaseBitTrace {
    std::string status = "OK";
    std::vector<TraceEvent> events;
    PauliOperator injected;
    SyndromeRecord record;
    std::optional<PauliOperator> chosen_error;
    std::vector<std::optional<PauliOperator>> candidate_errors;
    bool ambiguous = false;
    int recovered_secret = -1;
    double secret_fidelity = 0.0;
    double cover_fidelity = 0.0;
    bool success = false;
};

PhaseBitTrace run_phasebit_round(const PhaseBitContext &ctx, std::size_t w, int b, const PauliOperator &error,
                                 const DecodePolicy &policy, std::uint64_t seed);
/// Quantum secret and superposed cover; success means both fidelities reach 1 - 1e-9.
PhaseBitTrace run_quantum_round(const PhaseBitContext &ctx, const std::vector<Amplitude> &cover, Amplitude alpha,
                                Amplitude beta, const PauliOperator &error, const DecodePolicy &policy);

struct CollisionEntry {
    PauliOperator error;
    SyndromeRecord record;
};

struct CollisionCensus {
    std::vector<CollisionEntry> entries;
    /// Errors sharing one measurement record, in enumeration order.
    std::vector<std::vector<PauliOperator>> groups;

    std::vector<std::vector<PauliOperator>> collisions() const;
};

/// Runs extract_syndromes on every error of weight <= correction radius.
CollisionCensus census_collisions(const PhaseBitContext &ctx);

} // namespace stegoq::phasebit
