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

#include "stegoq/phasebit.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>

#include "stegoq/error.hpp"
#include "stegoq/gf2.hpp"

namespace stegoq::phasebit {

namespace {

constexpr double kUnitTolerance = 1e-9;
constexpr double kFidelityTolerance = 1e-9;

// Mask bits re-expressed in statevector index order (qubit 1 is the MSB).
std::uint64_t index_mask(const SupportMask &mask) {
    std::uint64_t out = 0;
    const std::size_t n = mask.num_qubits();
    for (std::size_t q : mask.qubits()) out |= std::uint64_t{1} << (n - 1 - q);
    return out;
}

int parity(std::uint64_t v) { return std::popcount(v) & 1; }

std::uint8_t eigen_bit(double value, const std::string &what) {
    if (std::abs(value - 1.0) < kAmplitudeTolerance) return 0;
    if (std::abs(value + 1.0) < kAmplitudeTolerance) return 1;
    throw StegoError(ErrorCode::NotEigenstate, what + " has expectation " + std::to_string(value));
}

bool same_pattern(const PauliOperator &a, const PauliOperator &b) {
    return a.num_qubits() == b.num_qubits() && a.x_bits() == b.x_bits() && a.z_bits() == b.z_bits();
}

std::optional<PhaseBitContext> try_mask(const StabilizerCode &code, const SupportMask &mask) {
    PhaseBitContext ctx;
    ctx.code = code;
    ctx.q_vec = mask;
    ctx.block = StateVector::numbered_labels("code:", code.n);
    for (std::size_t i = 0; i < code.generators.size(); ++i) {
        (is_flipping(mask, code.generators[i]) ? ctx.flipping : ctx.non_flipping).push_back(i);
    }
    const std::size_t phi = ctx.flipping.size();
    if (phi == 0) return std::nullopt;
    ctx.sublogical_z = sublogical_z(mask);
    ctx.flip_generator = ctx.flipping.front();

    const std::uint64_t m = index_mask(mask);
    for (std::size_t w = 0; w < ctx.num_words(); ++w) {
        const StateVector cw = codeword(code, std::uint64_t{w});
        std::vector<std::uint64_t> l0, l1;
        for (std::uint64_t v = 0; v < cw.dimension(); ++v) {
            if (std::abs(cw.amplitudes()[v]) <= 1e-12) continue;
            (parity(v & m) ? l1 : l0).push_back(v);
        }
        if (l0.empty() || l1.empty()) return std::nullopt;
        ctx.l0_support.push_back(std::move(l0));
        ctx.l1_support.push_back(std::move(l1));
    }
    // Enough pairwise products to pin the flipping bits.
    if (phi * (phi - 1) / 2 < phi) return std::nullopt;
    return ctx;
}

void validate(const PhaseBitContext &ctx) {
    for (std::size_t i : ctx.flipping) {
        if (commutes(ctx.sublogical_z, ctx.code.generators[i])) {
            throw StegoError(ErrorCode::ContextError, "sublogical Z commutes with a flipping generator");
        }
    }
    for (std::size_t i : ctx.non_flipping) {
        if (!commutes(ctx.sublogical_z, ctx.code.generators[i])) {
            throw StegoError(ErrorCode::ContextError, "sublogical Z anticommutes with a non-flipping generator");
        }
    }
}

} // namespace

std::size_t mask_weight(const StabilizerCode &code) { return code.correction_radius() + 1; }

PauliOperator sublogical_z(const SupportMask &mask) { return PauliOperator(mask.num_qubits(), 0, mask.bits()); }

bool is_flipping(const SupportMask &mask, const PauliOperator &g) {
    if (mask.num_qubits() != g.num_qubits()) {
        throw StegoError(ErrorCode::DimensionMismatch, "mask and operator sizes differ");
    }
    return std::popcount(g.x_bits() & mask.bits()) % 2 == 1;
}

PhaseBitContext build_context(const StabilizerCode &code, std::optional<SupportMask> q_vec) {
    code.validate();
    if (code.k < 1) throw StegoError(ErrorCode::InvalidArgument, "phase-bit protocol needs k >= 1");
    const std::size_t q = mask_weight(code);
    if (q_vec) {
        if (q_vec->num_qubits() != code.n || q_vec->weight() != q) {
            throw StegoError(ErrorCode::InvalidMask, "mask " + q_vec->to_string() + " must have " +
                                                         std::to_string(code.n) + " entries and weight " +
                                                         std::to_string(q));
        }
        auto ctx = try_mask(code, *q_vec);
        if (!ctx) throw StegoError(ErrorCode::InvalidMask, "mask " + q_vec->to_string() + " does not split the codewords");
        validate(*ctx);
        return *ctx;
    }
    // Ascending integers with qubit 1 as MSB enumerate the strings lexicographically.
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << code.n); ++v) {
        if (static_cast<std::size_t>(std::popcount(v)) != q) continue;
        std::uint64_t bits = 0;
        for (std::size_t i = 0; i < code.n; ++i) {
            if ((v >> (code.n - 1 - i)) & 1U) bits |= std::uint64_t{1} << i;
        }
        if (auto ctx = try_mask(code, SupportMask(code.n, bits))) {
            validate(*ctx);
            return *ctx;
        }
    }
    throw StegoError(ErrorCode::NoSplit, "no weight-" + std::to_string(q) + " mask splits " + code.name);
}

PhaseBitContext with_flip_generator(PhaseBitContext ctx, std::size_t generator) {
    if (std::find(ctx.flipping.begin(), ctx.flipping.end(), generator) == ctx.flipping.end()) {
        throw StegoError(ErrorCode::ContextError, "generator " + std::to_string(generator + 1) + " is not flipping");
    }
    ctx.flip_generator = generator;
    return ctx;
}

std::pair<StateVector, StateVector> split_codeword(const PhaseBitContext &ctx, std::size_t w) {
    if (w >= ctx.num_words()) throw StegoError(ErrorCode::InvalidArgument, "cover word out of range");
    const StateVector cw = codeword(ctx.code, std::uint64_t{w});
    std::vector<Amplitude> a0(cw.dimension()), a1(cw.dimension());
    for (std::uint64_t v : ctx.l0_support[w]) a0[v] = cw.amplitudes()[v];
    for (std::uint64_t v : ctx.l1_support[w]) a1[v] = cw.amplitudes()[v];
    StateVector l0(ctx.block, std::move(a0)), l1(ctx.block, std::move(a1));
    l0.normalize();
    l1.normalize();
    return {std::move(l0), std::move(l1)};
}

StateVector prepare_upsilon(const PhaseBitContext &ctx, const std::vector<Amplitude> &cover, Amplitude alpha,
                            Amplitude beta) {
    if (cover.size() != ctx.num_words()) {
        throw StegoError(ErrorCode::DimensionMismatch, "cover needs " + std::to_string(ctx.num_words()) + " amplitudes");
    }
    double cover_norm = 0.0;
    for (const auto &c : cover) cover_norm += std::norm(c);
    if (std::abs(cover_norm - 1.0) > kUnitTolerance || std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > kUnitTolerance) {
        throw StegoError(ErrorCode::InvalidArgument, "cover and secret amplitudes must be normalized");
    }
    // alpha|Phi+> + beta|Phi-> = a0|00> + a1|11>.
    const std::array<Amplitude, 2> a{(alpha + beta) / std::numbers::sqrt2, (alpha - beta) / std::numbers::sqrt2};
    Labels labels = ctx.block;
    labels.emplace_back(kBobLabel);
    std::vector<Amplitude> amps(std::size_t{1} << labels.size());
    for (std::size_t w = 0; w < ctx.num_words(); ++w) {
        if (cover[w] == Amplitude{}) continue;
        auto halves = split_codeword(ctx, w);
        for (std::uint64_t j = 0; j < 2; ++j) {
            const StateVector &half = j == 0 ? halves.first : halves.second;
            for (std::uint64_t v = 0; v < half.dimension(); ++v) {
                amps[(v << 1U) | j] += a[j] * cover[w] * half.amplitudes()[v];
            }
        }
    }
    return StateVector(std::move(labels), std::move(amps));
}

StateVector prepare_upsilon(const PhaseBitContext &ctx, std::size_t w, int b) {
    if (w >= ctx.num_words()) throw StegoError(ErrorCode::InvalidArgument, "cover word out of range");
    if (b != 0 && b != 1) throw StegoError(ErrorCode::InvalidArgument, "secret bit must be 0 or 1");
    std::vector<Amplitude> cover(ctx.num_words());
    cover[w] = 1.0;
    return prepare_upsilon(ctx, cover, b == 0 ? 1.0 : 0.0, b == 0 ? 0.0 : 1.0);
}

std::string SyndromeRecord::key() const {
    std::string out;
    for (auto b : nf_values) out += static_cast<char>('0' + b);
    out += '|';
    for (const auto &[i, j, bit] : pair_sums) out += static_cast<char>('0' + bit);
    return out;
}

SyndromeRecord extract_syndromes(const StateVector &state, const PhaseBitContext &ctx) {
    const auto &gens = ctx.code.generators;
    SyndromeRecord rec;
    for (std::size_t i : ctx.non_flipping) {
        rec.nf_values.push_back(eigen_bit(state.expectation(gens[i], ctx.block), "S" + std::to_string(i + 1)));
    }
    const std::size_t phi = ctx.flipping.size();
    std::vector<gf2::BitVector> rows;
    gf2::BitVector rhs(phi * (phi - 1) / 2);
    for (std::size_t a = 0; a < phi; ++a) {
        for (std::size_t b = a + 1; b < phi; ++b) {
            const std::size_t i = ctx.flipping[a], j = ctx.flipping[b];
            const std::uint8_t bit = eigen_bit(state.expectation(gens[i] * gens[j], ctx.block),
                                               "S" + std::to_string(i + 1) + "S" + std::to_string(j + 1));
            gf2::BitVector row(phi);
            row.set(a);
            row.set(b);
            rhs.set(rows.size(), bit != 0);
            rows.push_back(std::move(row));
            rec.pair_sums.emplace_back(i, j, bit);
        }
    }
    const auto solutions = gf2::solve(rows, rhs, phi);
    if (!solutions) throw StegoError(ErrorCode::NotEigenstate, "pairwise products are inconsistent");
    for (const auto &x : solutions->enumerate()) {
        Syndrome s;
        s.bits.assign(gens.size(), 0);
        for (std::size_t a = 0; a < ctx.non_flipping.size(); ++a) s.bits[ctx.non_flipping[a]] = rec.nf_values[a];
        for (std::size_t a = 0; a < phi; ++a) s.bits[ctx.flipping[a]] = x.get(a) ? 1 : 0;
        rec.candidates.push_back(std::move(s));
    }
    std::sort(rec.candidates.begin(), rec.candidates.end());
    return rec;
}

std::string DecodePolicy::name() const { return kind == Kind::MinWeight ? "MIN_WEIGHT" : "ALLOWED_SET"; }

std::vector<PauliOperator> five_qubit_allowed_set() {
    std::vector<PauliOperator> out;
    for (const char *e : {"I", "X1", "Z1", "Y1", "Z2", "Z3", "Y3", "Z4"}) out.push_back(PauliOperator::from_subscripts(e, 5));
    return out;
}

Resolution resolve_and_correct(const StateVector &state, const SyndromeRecord &record, const PhaseBitContext &ctx,
                               const DecodePolicy &policy) {
    const DecodingTable table(ctx.code, ctx.code.correction_radius());
    Resolution res{state, std::nullopt, false, {}};
    for (const auto &s : record.candidates) {
        const auto *entry = table.lookup(s);
        res.candidate_errors.push_back(entry ? std::optional<PauliOperator>(entry->error) : std::nullopt);
    }
    std::vector<std::size_t> picks;
    if (policy.kind == DecodePolicy::Kind::MinWeight) {
        std::size_t best = SIZE_MAX;
        for (std::size_t c = 0; c < res.candidate_errors.size(); ++c) {
            if (!res.candidate_errors[c]) continue;
            const std::size_t w = res.candidate_errors[c]->weight();
            if (w < best) {
                best = w;
                picks = {c};
            } else if (w == best) {
                picks.push_back(c);
            }
        }
    } else {
        for (std::size_t c = 0; c < res.candidate_errors.size(); ++c) {
            const auto &e = res.candidate_errors[c];
            if (!e) continue;
            if (std::any_of(policy.allowed.begin(), policy.allowed.end(),
                            [&](const PauliOperator &a) { return same_pattern(a, *e); })) {
                picks.push_back(c);
            }
        }
    }
    if (picks.size() != 1) {
        res.ambiguous = true;
        return res;
    }
    res.chosen = res.candidate_errors[picks.front()];
    res.corrected.apply_pauli(res.chosen->adjoint(), ctx.block);
    return res;
}

std::pair<StateVector, std::array<Amplitude, 2>> disentangle(const StateVector &state, const PhaseBitContext &ctx) {
    StateVector s = state;
    s.apply_controlled_pauli(kBobLabel, ctx.flip_operator(), ctx.block);
    return s.factor_qubit(kBobLabel);
}

SecretReadout read_secret(const StateVector &state, const PhaseBitContext &ctx, std::mt19937_64 &rng) {
    auto [block, bob] = disentangle(state, ctx);
    StateVector qubit(Labels{kBobLabel}, {bob[0], bob[1]});
    SecretReadout out;
    out.probability_one = qubit.probability_one(kBobLabel, MeasurementBasis::X);
    out.bit = qubit.measure(kBobLabel, MeasurementBasis::X, rng);
    out.block = std::move(block);
    return out;
}

StateVector restore_cover(const StateVector &block, const PhaseBitContext &ctx) {
    const PauliOperator &sf = ctx.flip_operator();
    if (commutes(sf, ctx.sublogical_z) || !sf.is_hermitian() || !ctx.sublogical_z.is_hermitian()) {
        throw StegoError(ErrorCode::ContextError, "sublogical Hadamard is not unitary");
    }
    StateVector out = block;
    const Amplitude c = 1.0 / std::numbers::sqrt2;
    out.apply_pauli_sum({{c, sf}, {c, ctx.sublogical_z}}, ctx.block);
    return out;
}

namespace {

StateVector expected_cover(const PhaseBitContext &ctx, const std::vector<Amplitude> &cover) {
    std::vector<Amplitude> amps(std::size_t{1} << ctx.code.n);
    for (std::size_t w = 0; w < ctx.num_words(); ++w) {
        const StateVector cw = codeword(ctx.code, std::uint64_t{w});
        for (std::size_t v = 0; v < amps.size(); ++v) amps[v] += cover[w] * cw.amplitudes()[v];
    }
    return StateVector(ctx.block, std::move(amps));
}

// Shared pipeline; `rng` is set for classical secrets only.
PhaseBitTrace run_pipeline(const PhaseBitContext &ctx, const std::vector<Amplitude> &cover, Amplitude alpha,
                           Amplitude beta, const PauliOperator &error, const DecodePolicy &policy,
                           std::mt19937_64 *rng) {
    if (error.num_qubits() != ctx.code.n) {
        throw StegoError(ErrorCode::DimensionMismatch, "error must act on " + std::to_string(ctx.code.n) + " qubits");
    }
    PhaseBitTrace t;
    t.injected = error;
    StateVector s = prepare_upsilon(ctx, cover, alpha, beta);
    t.events.push_back(make_event(1, "prepare", s, "stego state on code block and Bob's ebit half"));
    s.apply_pauli(error, ctx.block);
    t.events.push_back(make_event(2, "channel", s, "error " + error.to_subscript_string()));

    t.record = extract_syndromes(s, ctx);
    Resolution res = resolve_and_correct(s, t.record, ctx, policy);
    t.candidate_errors = res.candidate_errors;
    t.ambiguous = res.ambiguous;
    t.chosen_error = res.chosen;
    if (res.ambiguous) {
        t.status = "AMBIGUOUS";
        return t;
    }
    s = std::move(res.corrected);
    t.events.push_back(make_event(3, "correct", s, "applied " + res.chosen->to_subscript_string()));

    StateVector block;
    try {
        if (rng != nullptr) {
            SecretReadout r = read_secret(s, ctx, *rng);
            t.recovered_secret = r.bit;
            block = std::move(r.block);
        } else {
            auto [rest, bob] = disentangle(s, ctx);
            // alpha|+> + beta|->
            const Amplitude plus0 = (alpha + beta) / std::numbers::sqrt2;
            const Amplitude plus1 = (alpha - beta) / std::numbers::sqrt2;
            t.secret_fidelity = std::norm(std::conj(plus0) * bob[0] + std::conj(plus1) * bob[1]);
            block = std::move(rest);
        }
    } catch (const StegoError &e) {
        if (e.code() != ErrorCode::DecodeFailure) throw;
        t.status = "DECODE_FAILURE";
        return t;
    }
    t.events.push_back(make_event(4, "readout", block, "controlled-S" + std::to_string(ctx.flip_generator + 1)));

    block = restore_cover(block, ctx);
    t.events.push_back(make_event(5, "restore", block, "sublogical Hadamard"));
    t.cover_fidelity = fidelity(block, expected_cover(ctx, cover));
    return t;
}

} // namespace

PhaseBitTrace run_phasebit_round(const PhaseBitContext &ctx, std::size_t w, int b, const PauliOperator &error,
                                 const DecodePolicy &policy, std::uint64_t seed) {
    if (w >= ctx.num_words()) throw StegoError(ErrorCode::InvalidArgument, "cover word out of range");
    if (b != 0 && b != 1) throw StegoError(ErrorCode::InvalidArgument, "secret bit must be 0 or 1");
    std::vector<Amplitude> cover(ctx.num_words());
    cover[w] = 1.0;
    auto rng = make_rng(seed, 0);
    PhaseBitTrace t = run_pipeline(ctx, cover, b == 0 ? 1.0 : 0.0, b == 0 ? 0.0 : 1.0, error, policy, &rng);
    t.success = t.status == "OK" && t.recovered_secret == b && t.cover_fidelity >= 1.0 - kFidelityTolerance;
    return t;
}

PhaseBitTrace run_quantum_round(const PhaseBitContext &ctx, const std::vector<Amplitude> &cover, Amplitude alpha,
                                Amplitude beta, const PauliOperator &error, const DecodePolicy &policy) {
    PhaseBitTrace t = run_pipeline(ctx, cover, alpha, beta, error, policy, nullptr);
    t.success = t.status == "OK" && t.secret_fidelity >= 1.0 - kFidelityTolerance &&
                t.cover_fidelity >= 1.0 - kFidelityTolerance;
    return t;
}

std::vector<std::vector<PauliOperator>> CollisionCensus::collisions() const {
    std::vector<std::vector<PauliOperator>> out;
    for (const auto &g : groups) {
        if (g.size() > 1) out.push_back(g);
    }
    return out;
}

CollisionCensus census_collisions(const PhaseBitContext &ctx) {
    CollisionCensus census;
    const StateVector upsilon = prepare_upsilon(ctx, std::size_t{0}, 0);
    std::map<std::string, std::size_t> group_of;
    for (const auto &e : enumerate_paulis(ctx.code.n, ctx.code.correction_radius())) {
        StateVector s = upsilon;
        s.apply_pauli(e, ctx.block);
        CollisionEntry entry{e, extract_syndromes(s, ctx)};
        const std::string key = entry.record.key();
        auto [it, fresh] = group_of.emplace(key, census.groups.size());
        if (fresh) census.groups.emplace_back();
        census.groups[it->second].push_back(e);
        census.entries.push_back(std::move(entry));
    }
    return census;
}

} // namespace stegoq::phasebit
