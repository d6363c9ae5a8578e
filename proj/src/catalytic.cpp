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

#include "stegoq/catalytic.hpp"

#include <cmath>
#include <numbers>

#include "stegoq/error.hpp"

namespace stegoq::catalytic {

namespace {

const Labels kPair{"A", "B"};

void check_bit(int v, const char *what) {
    if (v != 0 && v != 1) {
        throw StegoError(ErrorCode::InvalidArgument, std::string(what) + " must be 0 or 1");
    }
}

PauliOperator single_x() { return PauliOperator::from_string("X"); }

} // namespace

std::string_view round_status_name(RoundStatus s) {
    return s == RoundStatus::Ok ? "OK" : "DETECTED_UNCORRECTABLE";
}

bool RoundTrace::success(int cover, int secret) const {
    return status == RoundStatus::Ok && recovered_cover == cover && recovered_secret == secret &&
           std::abs(replenish_fidelity - 1.0) < kAmplitudeTolerance;
}

StateVector prepare_eta(int cover, int secret) {
    check_bit(cover, "cover bit");
    check_bit(secret, "secret bit");
    StateVector s = StateVector::bell_phi_plus("A", "B");
    if (cover) s.apply(Gate::X, {"A"});
    if (secret) s.apply(Gate::Z, {"A"});
    return s;
}

RoundTrace run_round(const RoundConfig &cfg, std::optional<StateVector> shared_pair) {
    const StabilizerCode &code = cfg.code;
    if (code.k < 2) {
        throw StegoError(ErrorCode::InvalidArgument, code.name + " encodes " + std::to_string(code.k) +
                                                         " logical qubit(s); the catalytic round needs k >= 2");
    }
    if (!cfg.cover_state) check_bit(cfg.cover, "cover bit");
    check_bit(cfg.secret, "secret bit");
    if (cfg.error && cfg.error->num_qubits() != code.n) {
        throw StegoError(ErrorCode::DimensionMismatch, "error acts on " + std::to_string(cfg.error->num_qubits()) +
                                                           " qubits, code block has " + std::to_string(code.n));
    }

    RoundTrace trace;
    auto rng = make_rng(cfg.seed, 0);
    const Labels block = StateVector::numbered_labels("code:", code.n);

    // 1. Pre-shared ebit on (A, B), local ebit on (l1, l2).
    StateVector pair = shared_pair ? *shared_pair : StateVector::bell_phi_plus("A", "B");
    if (pair.labels() != kPair) pair = pair.reordered(kPair);
    StateVector state = StateVector::bell_phi_plus("l1", "l2").tensor(pair).reordered({"l1", "A", "l2", "B"});
    trace.events.push_back(make_event(1, "prepare_ebits", state));

    // 2. Dense coding of (w, b) on A.
    if (cfg.cover_state) {
        const auto &c = *cfg.cover_state;
        state.apply_pauli_sum({{c[0], PauliOperator(1)}, {c[1], single_x()}}, {"A"});
    } else if (cfg.cover) {
        state.apply(Gate::X, {"A"});
    }
    if (cfg.secret) state.apply(Gate::Z, {"A"});
    trace.events.push_back(make_event(2, "dense_code", state));

    // 3. Encode (l1, A) into the code block.
    state = encode_block(state, code, {"l1", "A"}, block);
    trace.events.push_back(make_event(3, "encode", state));

    // 4. Channel, then Bob's correction and decoding.
    if (cfg.error) {
        state.apply_pauli(*cfg.error, block);
        trace.events.push_back(make_event(4, "channel", state, cfg.error->to_subscript_string()));
    }
    trace.syndrome = measure_syndrome(state, code, block);
    if (!trace.syndrome.is_trivial()) {
        const DecodingTable table(code, code.correction_radius());
        const DecodingTable::Entry *entry = table.lookup(trace.syndrome);
        if (entry == nullptr || entry->ambiguous) {
            if (code.d <= 2) {
                trace.status = RoundStatus::DetectedUncorrectable;
                trace.events.push_back(make_event(4, "syndrome_detected", state, trace.syndrome.to_string()));
                return trace;
            }
            throw StegoError(ErrorCode::UncorrectableError,
                             "syndrome " + trace.syndrome.to_string() + " has no unique correction in " + code.name);
        }
        trace.correction = entry->error;
        state.apply_pauli(entry->error.adjoint(), block);
    }
    state = decode_block(state, code, block, {"l1", "A"});
    trace.events.push_back(make_event(4, "correct_and_decode", state, trace.syndrome.to_string()));

    // 5. CNOT (control B, target A), Hadamard on B, read out.
    state.apply(Gate::CNOT, {"B", "A"});
    state.apply(Gate::H, {"B"});
    trace.recovered_secret = state.measure("B", MeasurementBasis::Z, rng);
    state.remove_qubit("B");
    if (cfg.cover_state) {
        // Undo the (-1)^b phase left on the w = 1 branch.
        if (trace.recovered_secret) state.apply(Gate::Z, {"A"});
        auto [rest, cover_qubit] = state.factor_qubit("A");
        const auto &c = *cfg.cover_state;
        trace.cover_fidelity = std::norm(std::conj(c[0]) * cover_qubit[0] + std::conj(c[1]) * cover_qubit[1]);
        state = std::move(rest);
    } else {
        trace.recovered_cover = state.measure("A", MeasurementBasis::Z, rng);
        state.remove_qubit("A");
    }
    trace.events.push_back(make_event(5, "dense_decode", state));

    // 6. (l1, l2) becomes the shared ebit of the next round.
    trace.replenish_fidelity = subsystem_fidelity(state, {"l1", "l2"}, StateVector::bell_phi_plus("l1", "l2"));
    StateVector next = state.reordered({"l1", "l2"});
    next.relabel("l1", "A");
    next.relabel("l2", "B");
    trace.next_ebit = next;
    trace.events.push_back(make_event(6, "replenish", next));
    return trace;
}

ChainResult run_chained(const std::vector<ChainStep> &steps, const StabilizerCode &code, std::uint64_t seed) {
    if (steps.empty()) throw StegoError(ErrorCode::InvalidArgument, "a chain needs at least one round");
    ChainResult result;
    std::optional<StateVector> ebit;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (!ebit) {
            ++result.external_ebits_consumed;
            ebit = StateVector::bell_phi_plus("A", "B");
        }
        RoundConfig cfg{code, steps[i].cover, steps[i].secret, std::nullopt, steps[i].error,
                        seed + static_cast<std::uint64_t>(i)};
        RoundTrace trace = run_round(cfg, ebit);
        ebit = trace.next_ebit;
        const bool stop = trace.status != RoundStatus::Ok;
        result.rounds.push_back(std::move(trace));
        if (stop) {
            result.aborted = true;
            break;
        }
    }
    return result;
}

QuantumStegoPreparation prepare_quantum_stego(double alpha, double beta, double mu, double nu,
                                              std::mt19937_64 &rng) {
    const Amplitude i{0.0, 1.0};
    const StateVector cover({"cover"}, {std::cos(mu), std::sin(mu) * std::exp(i * nu)});
    const StateVector secret({"secret"}, {std::cos(alpha), std::sin(alpha) * std::exp(i * beta)});
    StateVector state = cover.tensor(secret).tensor(StateVector::bell_phi_plus("A", "B"));
    state.apply(Gate::CNOT, {"cover", "A"});
    state.apply(Gate::CPHASE, {"secret", "A"});

    QuantumStegoPreparation out;
    out.cover_outcome = state.measure("cover", MeasurementBasis::X, rng);
    out.secret_outcome = state.measure("secret", MeasurementBasis::X, rng);
    out.success = out.cover_outcome == 0 && out.secret_outcome == 0;
    for (const char *ancilla : {"cover", "secret"}) {
        state.apply(Gate::H, {ancilla});
        state.remove_qubit(ancilla);
    }
    out.state = std::move(state);
    return out;
}

double binary_entropy(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double gv_secrecy_rate(double delta) {
    if (!(delta >= 0.0 && delta < 0.5)) {
        throw StegoError(ErrorCode::InvalidArgument, "relative distance must lie in [0, 1/2)");
    }
    return 0.5 - binary_entropy(delta) - delta * std::log2(3.0);
}

} // namespace stegoq::catalytic
