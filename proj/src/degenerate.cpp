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

#include "stegoq/degenerate.hpp"

#include <algorithm>
#include <cmath>

#include "stegoq/error.hpp"

namespace stegoq::degenerate {

namespace {

void check_symbol(Symbol s) {
    if (s < 0 || s > 3) throw StegoError(ErrorCode::InvalidArgument, "symbol must be in 0..3");
}

Symbol sample(const Distribution4 &d, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const double u = uniform(rng);
    double acc = 0.0;
    for (Symbol s = 0; s < 3; ++s) {
        acc += d[s];
        if (u < acc) return s;
    }
    return 3;
}

// Unnormalized Walsh-Hadamard transform on four entries.
std::array<double, 4> walsh(const std::array<double, 4> &v) {
    return {v[0] + v[1] + v[2] + v[3], v[0] - v[1] + v[2] - v[3], v[0] + v[1] - v[2] - v[3],
            v[0] - v[1] - v[2] + v[3]};
}

} // namespace

std::string symbol_string(Symbol s) {
    check_symbol(s);
    return std::string{static_cast<char>('0' + (s >> 1)), static_cast<char>('0' + (s & 1))};
}

Symbol parse_symbol(std::string_view text) {
    if (text.size() != 2 || text.find_first_not_of("01") != std::string_view::npos) {
        throw StegoError(ErrorCode::ParseError, "symbol must be two bits, got '" + std::string(text) + "'");
    }
    return (text[0] - '0') * 2 + (text[1] - '0');
}

Distribution4::Distribution4(const std::array<double, 4> &p) : p_(p) {
    double sum = 0.0;
    for (double v : p_) {
        if (!(v >= 0.0)) throw StegoError(ErrorCode::InvalidArgument, "probabilities must be non-negative");
        sum += v;
    }
    if (std::abs(sum - 1.0) > kSumTolerance) {
        throw StegoError(ErrorCode::InvalidArgument, "probabilities must sum to 1, got " + std::to_string(sum));
    }
}

Distribution4 Distribution4::point(Symbol s) {
    check_symbol(s);
    std::array<double, 4> p{};
    p[static_cast<std::size_t>(s)] = 1.0;
    return Distribution4(p);
}

double entropy(const Distribution4 &d) {
    double h = 0.0;
    for (double v : d.values()) {
        if (v > 0.0) h -= v * std::log2(v);
    }
    return h;
}

Distribution4 mix_distribution(const Distribution4 &p, const Distribution4 &q) {
    std::array<double, 4> r{};
    for (Symbol k = 0; k < 4; ++k) {
        for (Symbol j = 0; j < 4; ++j) r[static_cast<std::size_t>(k)] += q[k ^ j] * p[j];
    }
    // Rounding can leave the sum a few ulps away from 1.
    const double sum = r[0] + r[1] + r[2] + r[3];
    for (auto &v : r) v /= sum;
    return Distribution4(r);
}

std::optional<Distribution4> solve_innocence(const Distribution4 &p, const Distribution4 &target) {
    // XOR-convolution diagonalizes under the Walsh-Hadamard transform:
    // W(r) = W(q) .* W(p), and W is its own inverse up to a factor 4.
    constexpr double kSingular = 1e-12;
    const auto wp = walsh(p.values());
    const auto wr = walsh(target.values());
    std::array<double, 4> wq{};
    for (std::size_t i = 0; i < 4; ++i) {
        if (std::abs(wp[i]) < kSingular) {
            if (std::abs(wr[i]) > kSingular) return std::nullopt;
            wq[i] = 0.0;
        } else {
            wq[i] = wr[i] / wp[i];
        }
    }
    auto q = walsh(wq);
    double sum = 0.0;
    for (auto &v : q) {
        v /= 4.0;
        if (v < -kSingular) return std::nullopt;
        if (v < 0.0) v = 0.0;
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9) return std::nullopt;
    for (auto &v : q) v /= sum;
    return Distribution4(q);
}

double total_variation(const Distribution4 &a, const Distribution4 &b) {
    double total = 0.0;
    for (Symbol s = 0; s < 4; ++s) total += std::abs(a[s] - b[s]);
    return 0.5 * total;
}

std::vector<PauliOperator> ErrorAlphabet::alice_set() const {
    std::vector<PauliOperator> out;
    for (const auto &list : alice) {
        for (const auto &e : list) {
            if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
        }
    }
    return out;
}

std::vector<PauliOperator> ErrorAlphabet::bob_set() const { return {bob.begin(), bob.end()}; }

ErrorAlphabet shor_ea_alphabet() {
    auto z = [](std::size_t qubit) { return PauliOperator::single(9, qubit - 1, PauliLetter::Z); };
    ErrorAlphabet a;
    a.alice = {std::vector<PauliOperator>{PauliOperator(9)}, {z(1), z(2)}, {z(4), z(5)}, {z(7), z(8)}};
    a.bob = {PauliOperator(9), z(3), z(6), z(9)};
    return a;
}

DegenerateScheme::DegenerateScheme() : DegenerateScheme(shor_ea_code(), shor_ea_alphabet()) {}

DegenerateScheme::DegenerateScheme(StabilizerCode code, ErrorAlphabet alphabet)
    : code_(std::move(code)), alphabet_(std::move(alphabet)), eve_table_(code_, 1),
      block_(StateVector::numbered_labels("q", code_.n)) {
    code_.validate();
    if (code_.k != 1) throw StegoError(ErrorCode::InvalidArgument, "degenerate scheme expects k = 1");
    for (Symbol s = 0; s < 4; ++s) {
        const auto &list = alphabet_.alice[static_cast<std::size_t>(s)];
        if (list.empty()) throw StegoError(ErrorCode::InvalidArgument, "empty alphabet entry");
        symbol_syndromes_[static_cast<std::size_t>(s)] = syndrome_of(code_, list.front());
        for (const auto &e : list) {
            if (e.support() & code_.ownership.bits()) {
                throw StegoError(ErrorCode::InvalidArgument, "sender error " + e.to_subscript_string() +
                                                                 " touches receiver-held qubits");
            }
            if (syndrome_of(code_, e) != symbol_syndromes_[static_cast<std::size_t>(s)]) {
                throw StegoError(ErrorCode::InvalidArgument, "errors listed for one symbol must share a syndrome");
            }
        }
        if (!code_.ownership.covers(alphabet_.bob[static_cast<std::size_t>(s)])) {
            throw StegoError(ErrorCode::InvalidArgument, "receiver error outside the ownership mask");
        }
    }
    if (!alphabet_.alice[0].front().is_identity_pattern() || !alphabet_.bob[0].is_identity_pattern()) {
        throw StegoError(ErrorCode::InvalidArgument, "symbol 00 must map to the identity");
    }
    codewords_ = {stegoq::codeword(code_, std::uint64_t{0}), stegoq::codeword(code_, std::uint64_t{1})};
}

const StateVector &DegenerateScheme::codeword(int cover) const {
    if (cover != 0 && cover != 1) throw StegoError(ErrorCode::InvalidArgument, "cover bit must be 0 or 1");
    return codewords_[static_cast<std::size_t>(cover)];
}

EncodedSecret DegenerateScheme::encode_secret(Symbol symbol, int cover, std::size_t choice) const {
    check_symbol(symbol);
    const auto &list = alphabet_.alice[static_cast<std::size_t>(symbol)];
    if (choice >= list.size()) throw StegoError(ErrorCode::InvalidArgument, "alphabet choice out of range");
    EncodedSecret out{codeword(cover), list[choice]};
    out.state.apply_pauli(out.e_a, block_);
    return out;
}

EncodedSecret DegenerateScheme::encode_secret(Symbol symbol, int cover, std::mt19937_64 &rng) const {
    check_symbol(symbol);
    const auto &list = alphabet_.alice[static_cast<std::size_t>(symbol)];
    std::uniform_int_distribution<std::size_t> pick(0, list.size() - 1);
    return encode_secret(symbol, cover, pick(rng));
}

Symbol DegenerateScheme::symbol_of(const Syndrome &s) const {
    for (Symbol sym = 0; sym < 4; ++sym) {
        if (symbol_syndromes_[static_cast<std::size_t>(sym)] == s) return sym;
    }
    return -1;
}

NormalDecode DegenerateScheme::decode_normal(const StateVector &state) const {
    NormalDecode out;
    try {
        out.syndrome = measure_syndrome(state, code_, block_);
    } catch (const StegoError &e) {
        throw StegoError(ErrorCode::UnexpectedError, std::string("normal-mode decode: ") + e.what());
    }
    out.symbol = symbol_of(out.syndrome);
    if (out.symbol < 0) {
        throw StegoError(ErrorCode::UnexpectedError, "syndrome " + out.syndrome.to_string() + " is not in the alphabet");
    }
    StateVector undone = state;
    undone.apply_pauli(alphabet_.alice[static_cast<std::size_t>(out.symbol)].front(), block_);
    const double z = undone.expectation(code_.logical_z[0], block_);
    if (std::abs(std::abs(z) - 1.0) > kAmplitudeTolerance) {
        throw StegoError(ErrorCode::UnexpectedError, "cover is not a logical basis state");
    }
    out.cover = z > 0 ? 0 : 1;
    return out;
}

ChallengeResult DegenerateScheme::challenge_apply(const StateVector &state, Symbol bob_symbol) const {
    check_symbol(bob_symbol);
    ChallengeResult out{state, bob_symbol, alphabet_.bob[static_cast<std::size_t>(bob_symbol)]};
    out.state.apply_pauli(out.e_b, block_);
    return out;
}

ChallengeResult DegenerateScheme::challenge_randomize(const StateVector &state, const Distribution4 &q,
                                                      std::mt19937_64 &rng) const {
    return challenge_apply(state, sample(q, rng));
}

EveReport DegenerateScheme::eve_infer(const StateVector &state) const {
    EveReport out;
    try {
        out.syndrome = measure_syndrome(state, code_, block_);
    } catch (const StegoError &e) {
        throw StegoError(ErrorCode::Unmodeled, std::string("Eve's syndrome readout: ") + e.what());
    }
    const DecodingTable::Entry *entry = eve_table_.lookup(out.syndrome);
    if (entry == nullptr) {
        throw StegoError(ErrorCode::Unmodeled, "syndrome " + out.syndrome.to_string() + " beyond single-qubit errors");
    }
    out.inferred_error = entry->error;
    out.error_class = symbol_of(out.syndrome);
    if (out.error_class < 0) {
        throw StegoError(ErrorCode::Unmodeled, "inferred error " + entry->error.to_subscript_string() +
                                                   " is outside the dephasing alphabet");
    }
    StateVector corrected = state;
    corrected.apply_pauli(entry->error.adjoint(), block_);
    const double z = corrected.expectation(code_.logical_z[0], block_);
    if (std::abs(std::abs(z) - 1.0) > kAmplitudeTolerance) {
        throw StegoError(ErrorCode::Unmodeled, "corrected state is not a logical basis state");
    }
    out.cover = z > 0 ? 0 : 1;
    return out;
}

InnocenceRun empirical_innocence_run(const Distribution4 &p, const Distribution4 &q, std::size_t trials,
                                     std::uint64_t seed) {
    if (trials == 0) throw StegoError(ErrorCode::InvalidArgument, "trials must be at least 1");
    const DegenerateScheme scheme;
    InnocenceRun run;
    run.trials.reserve(trials);
    std::array<double, 4> counts{};
    for (std::size_t t = 0; t < trials; ++t) {
        auto rng = make_rng(seed, t);
        TrialRecord rec;
        rec.trial = t;
        rec.symbol = sample(p, rng);
        rec.cover = static_cast<int>(rng() & 1U);
        const EncodedSecret enc = scheme.encode_secret(rec.symbol, rec.cover, rng);
        const ChallengeResult challenged = scheme.challenge_randomize(enc.state, q, rng);
        const EveReport eve = scheme.eve_infer(challenged.state);
        rec.e_a = enc.e_a;
        rec.e_b = challenged.e_b;
        rec.eve_class = eve.error_class;
        rec.eve_cover = eve.cover;
        counts[static_cast<std::size_t>(rec.eve_class)] += 1.0;
        run.trials.push_back(std::move(rec));
    }
    for (auto &c : counts) c /= static_cast<double>(trials);
    const double sum = counts[0] + counts[1] + counts[2] + counts[3];
    for (auto &c : counts) c /= sum;
    run.empirical = Distribution4(counts);
    run.analytic = mix_distribution(p, q);
    run.tv_distance = total_variation(run.empirical, run.analytic);
    return run;
}

} // namespace stegoq::degenerate
