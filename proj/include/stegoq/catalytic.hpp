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
#include <vector>

#include "stegoq/pauli.hpp"
#include "stegoq/stabilizer_code.hpp"
#include "stegoq/statevector.hpp"
#include "stegoq/trace.hpp"

namespace stegoq::catalytic {

/// Dense-coded pair (|0,w> + (-1)^b |1,w̄>)/sqrt2 on labels "A", "B".
StateVector prepare_eta(int cover, int secret);

struct RoundConfig {
    StabilizerCode code;
    int cover = 0;  // w
    int secret = 0; // b
    /// Superposed cover c0|0> + c1|1>; when set, `cover` is ignored and the
    /// round reports the fidelity of the recovered cover qubit instead.
    std::optional<std::array<Amplitude, 2>> cover_state;
    /// Channel error on the transmitted code block.
    std::optional<PauliOperator> error;
    std::uint64_t seed = 0;
};

enum class RoundStatus { Ok, DetectedUncorrectable };

std::string_view round_status_name(RoundStatus s);

struct RoundTrace {
    RoundStatus status = RoundStatus::Ok;
    std::vector<TraceEvent> events;
    Syndrome syndrome;
    std::optional<PauliOperator> correction;
    int recovered_cover = -1;
    int recovered_secret = -1;
    /// Fidelity of the recovered cover qubit (superposed covers only).
    double cover_fidelity = 0.0;
    /// Fidelity of the (l1, l2) pair with |Phi+> after decoding.
    double replenish_fidelity = 0.0;
    /// Pair left behind for the next round on labels "A", "B"; empty if aborted.
    std::optional<StateVector> next_ebit;

    bool success(int cover, int secret) const;
};

/// One round: dense coding on the shared pair, encoding of (l1, A) into the
/// code, channel error, syndrome correction and decoding by Bob, CNOT+H
/// readout. `shared_pair` is the pre-shared ebit on labels "A", "B";
/// defaults to a fresh |Phi+>.
RoundTrace run_round(const RoundConfig &cfg, std::optional<StateVector> shared_pair = std::nullopt);

struct ChainStep {
    int cover = 0;
    int secret = 0;
    std::optional<PauliOperator> error;
};

struct ChainResult {
    std::vector<RoundTrace> rounds;
    /// Pre-shared ebits that had to be supplied from outside the chain.
    int external_ebits_consumed = 0;
    bool aborted = false;
};

/// Round i+1 consumes the ebit replenished by round i. Stops at the first
/// round that cannot be corrected.
ChainResult run_chained(const std::vector<ChainStep> &steps, const StabilizerCode &code, std::uint64_t seed);

struct QuantumStegoPreparation {
    bool success = false;
    int cover_outcome = 0;  // X-basis outcome of the cover ancilla, 0 = "+"
    int secret_outcome = 0; // X-basis outcome of the secret ancilla
    /// Two-qubit state on "A", "B" after discarding the ancillas.
    StateVector state;
};

/// Secret cos(alpha)|0> + sin(alpha)e^{i beta}|1>, cover cos(mu)|0> +
/// sin(mu)e^{i nu}|1> in ancillas; CNOT (cover control) then CPHASE (secret
/// control) onto A of |Phi+>_AB, then both ancillas measured in the X basis.
/// Succeeds on (+,+), which happens with probability 1/4.
QuantumStegoPreparation prepare_quantum_stego(double alpha, double beta, double mu, double nu,
                                              std::mt19937_64 &rng);

double binary_entropy(double p);

/// Asymptotic secrecy-rate lower bound 1/2 - H2(delta) - delta log2 3.
double gv_secrecy_rate(double delta);

} // namespace stegoq::catalytic
