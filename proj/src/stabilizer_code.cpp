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

#include "stegoq/stabilizer_code.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "stegoq/error.hpp"
#include "stegoq/gf2.hpp"

namespace stegoq {

namespace {

PauliOperator P(std::string_view letters) { return PauliOperator::from_string(letters); }

void require(bool ok, const std::string &code_name, const std::string &what) {
    if (!ok) throw StegoError(ErrorCode::InvalidCode, code_name + ": " + what);
}

gf2::BitVector symplectic_row(const PauliOperator &p) {
    const std::size_t n = p.num_qubits();
    gf2::BitVector v(2 * n);
    for (std::size_t q = 0; q < n; ++q) {
        v.set(q, (p.x_bits() >> q) & 1U);
        v.set(n + q, (p.z_bits() >> q) & 1U);
    }
    return v;
}

void check_dims(const StabilizerCode &code, const PauliOperator &p) {
    if (p.num_qubits() != code.n) {
        throw StegoError(ErrorCode::DimensionMismatch,
                         code.name + " has " + std::to_string(code.n) + " qubits, operator has " +
                             std::to_string(p.num_qubits()));
    }
}

bool same_pattern(const PauliOperator &a, const PauliOperator &b) {
    return a.num_qubits() == b.num_qubits() && a.x_bits() == b.x_bits() && a.z_bits() == b.z_bits();
}

} // namespace

bool Syndrome::is_trivial() const {
    return std::all_of(bits.begin(), bits.end(), [](auto b) { return b == 0; });
}

std::string Syndrome::to_string() const {
    std::string out;
    for (auto b : bits) out += b ? '1' : '0';
    return out;
}

void StabilizerCode::validate() const {
    require(n > 0 && n <= PauliOperator::kMaxQubits, name, "qubit count out of range");
    require(generators.size() + k == n, name, "generator count must equal n - k");
    require(logical_x.size() == k && logical_z.size() == k, name, "need k logical X and Z operators");
    require(ownership.num_qubits() == n, name, "ownership mask length must equal n");
    auto sized = [&](const PauliOperator &p) { return p.num_qubits() == n && p.is_hermitian(); };
    for (const auto &g : generators) require(sized(g), name, "generator " + g.to_string() + " malformed");
    for (std::size_t j = 0; j < k; ++j) {
        require(sized(logical_x[j]) && sized(logical_z[j]), name, "logical operator malformed");
    }
    for (std::size_t a = 0; a < generators.size(); ++a) {
        for (std::size_t b = a + 1; b < generators.size(); ++b) {
            require(commutes(generators[a], generators[b]), name,
                    "generators " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                        " anticommute");
        }
    }
    std::vector<gf2::BitVector> rows;
    for (const auto &g : generators) rows.push_back(symplectic_row(g));
    require(gf2::rank(rows) == generators.size(), name, "generators are not independent");
    for (std::size_t i = 0; i < k; ++i) {
        for (const auto &g : generators) {
            require(commutes(logical_x[i], g) && commutes(logical_z[i], g), name,
                    "logical operator anticommutes with a generator");
        }
        for (std::size_t j = 0; j < k; ++j) {
            require(commutes(logical_x[i], logical_z[j]) == (i != j), name,
                    "logical X/Z commutation pattern broken");
            require(commutes(logical_x[i], logical_x[j]) && commutes(logical_z[i], logical_z[j]), name,
                    "logical operators of the same type must commute");
        }
    }
}

StabilizerCode five_qubit_code() {
    StabilizerCode c;
    c.name = "five_qubit";
    c.n = 5;
    c.k = 1;
    c.d = 3;
    c.generators = {P("XZZXI"), P("XIXZZ"), P("IXZZX"), P("ZXIXZ")};
    c.logical_x = {P("XXXXX")};
    c.logical_z = {P("ZZZZZ")};
    c.ownership = SupportMask(5);
    return c;
}

StabilizerCode shor_ea_code() {
    StabilizerCode c;
    c.name = "shor_ea";
    c.n = 9;
    c.k = 1;
    c.d = 3;
    c.generators = {P("ZZIIIIIII"), P("IZZIIIIII"), P("IIIZZIIII"), P("IIIIZZIII"),
                    P("IIIIIIZZI"), P("IIIIIIIZZ"), P("XXXXXXIII"), P("IIIXXXXXX")};
    c.logical_x = {P("ZIIZIIZII")};
    c.logical_z = {P("XXXXXXXXX")};
    c.ownership = SupportMask::from_qubits(9, {2, 5, 8});
    return c;
}

StabilizerCode four_two_two_code() {
    StabilizerCode c;
    c.name = "four_two_two";
    c.n = 4;
    c.k = 2;
    c.d = 2;
    c.generators = {P("XXXX"), P("ZZZZ")};
    c.logical_x = {P("XXII"), P("XIXI")};
    c.logical_z = {P("ZIZI"), P("ZZII")};
    c.ownership = SupportMask(4);
    return c;
}

StabilizerCode three_qubit_demo_code() {
    StabilizerCode c;
    c.name = "three_qubit_demo";
    c.n = 3;
    c.k = 1;
    c.d = 1;
    c.generators = {P("XXX"), P("ZIZ")};
    c.logical_x = {P("IXI")};
    c.logical_z = {P("ZZI")};
    c.ownership = SupportMask(3);
    return c;
}

const std::vector<StabilizerCode> &catalog() {
    static const std::vector<StabilizerCode> codes = [] {
        std::vector<StabilizerCode> out{five_qubit_code(), shor_ea_code(), four_two_two_code(),
                                        three_qubit_demo_code()};
        for (const auto &c : out) c.validate();
        return out;
    }();
    return codes;
}

const StabilizerCode &find_code(std::string_view name) {
    for (const auto &c : catalog()) {
        if (c.name == name) return c;
    }
    throw StegoError(ErrorCode::InvalidArgument, "unknown code '" + std::string(name) + "'");
}

Syndrome syndrome_of(const StabilizerCode &code, const PauliOperator &e) {
    check_dims(code, e);
    Syndrome s;
    s.bits.reserve(code.generators.size());
    for (const auto &g : code.generators) s.bits.push_back(static_cast<std::uint8_t>(commutation_bit(g, e)));
    return s;
}

StabilizerMembership stabilizer_membership(const StabilizerCode &code, const PauliOperator &p) {
    check_dims(code, p);
    const std::size_t m = code.generators.size();
    const std::size_t n = code.n;
    // Equation per symplectic coordinate, unknown per generator.
    std::vector<gf2::BitVector> rows(2 * n, gf2::BitVector(m));
    for (std::size_t j = 0; j < m; ++j) {
        const auto col = symplectic_row(code.generators[j]);
        for (std::size_t r = 0; r < 2 * n; ++r) rows[r].set(j, col.get(r));
    }
    const auto solution = gf2::solve(rows, symplectic_row(p), m);
    StabilizerMembership out;
    if (!solution) return out;
    PauliOperator product(n);
    for (std::size_t j = 0; j < m; ++j) {
        if (solution->particular.get(j)) {
            out.combination.push_back(j);
            product *= code.generators[j];
        }
    }
    const int offset = ((p.phase() - product.phase()) % 4 + 4) % 4;
    out.in_group = offset % 2 == 0;
    out.negated = offset == 2;
    return out;
}

bool in_stabilizer_group(const StabilizerCode &code, const PauliOperator &p) {
    return stabilizer_membership(code, p).in_group;
}

bool in_normalizer(const StabilizerCode &code, const PauliOperator &p) {
    check_dims(code, p);
    return std::all_of(code.generators.begin(), code.generators.end(),
                       [&](const PauliOperator &g) { return commutes(g, p); });
}

bool degenerate_equivalent(const StabilizerCode &code, const PauliOperator &a, const PauliOperator &b) {
    const PauliOperator prod = multiply(a, b).with_phase(0);
    return in_stabilizer_group(code, prod);
}

std::string_view pair_class_name(PairClass c) {
    switch (c) {
    case PairClass::InStabilizer: return "IN_STABILIZER";
    case PairClass::InEaNormalizer: return "IN_EA_NORMALIZER";
    case PairClass::Violation: return "VIOLATION";
    }
    return "?";
}

PairClassification check_pair_condition(const StabilizerCode &code,
                                        const std::vector<PauliOperator> &e_a_set,
                                        const PauliOperator &e_a, const PauliOperator &e_b) {
    check_dims(code, e_a);
    check_dims(code, e_b);
    if (!code.ownership.covers(e_b)) {
        throw StegoError(ErrorCode::InvalidArgument,
                         "e_B = " + e_b.to_subscript_string() + " acts outside the receiver's qubits");
    }
    const bool listed = std::any_of(e_a_set.begin(), e_a_set.end(),
                                    [&](const PauliOperator &e) { return same_pattern(e, e_a); });
    if (!listed) {
        throw StegoError(ErrorCode::InvalidArgument,
                         "e_A = " + e_a.to_subscript_string() + " is not in the sender's error set");
    }

    PairClassification out;
    const PauliOperator product = multiply(e_b, e_a).with_phase(0);
    if (in_stabilizer_group(code, product)) {
        out.kind = PairClass::InStabilizer;
        return out;
    }
    for (const auto &candidate : e_a_set) {
        if (candidate.is_identity_pattern()) continue;
        // e' is its own inverse up to phase, so n = e' * (e_B e_A).
        const PauliOperator rest = multiply(candidate, product).with_phase(0);
        if (in_normalizer(code, rest)) {
            out.kind = PairClass::InEaNormalizer;
            out.witness_error = candidate.with_phase(0);
            out.witness_normalizer = rest;
            return out;
        }
    }
    out.kind = PairClass::Violation;
    return out;
}

namespace {

StateVector zero_codeword(const StabilizerCode &code) {
    const Labels labels = StateVector::numbered_labels("q", code.n);
    const std::uint64_t dim = std::uint64_t{1} << code.n;
    for (std::uint64_t seed = 0; seed < dim; ++seed) {
        StateVector s = StateVector::basis(labels, seed);
        const PauliOperator id(code.n);
        for (const auto &g : code.generators) s.apply_pauli_sum({{1.0, id}, {1.0, g}}, labels);
        for (const auto &z : code.logical_z) s.apply_pauli_sum({{1.0, id}, {1.0, z}}, labels);
        if (s.norm_squared() > 1e-9) {
            s.normalize();
            s.fix_global_phase();
            return s;
        }
    }
    throw StegoError(ErrorCode::InvalidCode, code.name + ": empty code space");
}

} // namespace

StateVector codeword(const StabilizerCode &code, std::uint64_t word_index) {
    if (word_index >= (std::uint64_t{1} << code.k)) {
        throw StegoError(ErrorCode::InvalidArgument, "logical word out of range");
    }
    StateVector s = zero_codeword(code);
    const Labels labels = s.labels();
    for (std::size_t j = 0; j < code.k; ++j) {
        // Logical qubit 1 is the most significant bit of the word index.
        if ((word_index >> (code.k - 1 - j)) & 1U) s.apply_pauli(code.logical_x[j], labels);
    }
    return s;
}

StateVector codeword(const StabilizerCode &code, std::string_view word) {
    if (word.size() != code.k || word.find_first_not_of("01") != std::string_view::npos) {
        throw StegoError(ErrorCode::InvalidArgument, code.name + " expects a " + std::to_string(code.k) +
                                                         "-bit logical word, got '" + std::string(word) + "'");
    }
    std::uint64_t index = 0;
    for (char c : word) index = (index << 1U) | static_cast<std::uint64_t>(c == '1');
    return codeword(code, index);
}

namespace {

Labels rest_labels(const StateVector &state, const Labels &excluded) {
    Labels rest;
    for (const auto &l : state.labels()) {
        if (std::find(excluded.begin(), excluded.end(), l) == excluded.end()) rest.push_back(l);
    }
    return rest;
}

Labels concat(Labels a, const Labels &b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

} // namespace

StateVector encode_block(const StateVector &state, const StabilizerCode &code, const Labels &inputs,
                         const Labels &block_labels) {
    if (inputs.size() != code.k || block_labels.size() != code.n) {
        throw StegoError(ErrorCode::DimensionMismatch, "encode_block: label counts do not match the code");
    }
    const Labels rest = rest_labels(state, inputs);
    const StateVector arranged = state.reordered(concat(inputs, rest));
    const std::size_t rest_dim = std::size_t{1} << rest.size();
    const std::size_t words = std::size_t{1} << code.k;
    const std::size_t block_dim = std::size_t{1} << code.n;
    std::vector<Amplitude> out(block_dim * rest_dim, 0.0);
    for (std::size_t u = 0; u < words; ++u) {
        const StateVector cw = codeword(code, u);
        for (std::size_t c = 0; c < block_dim; ++c) {
            const Amplitude a = cw.amplitudes()[c];
            if (a == 0.0) continue;
            for (std::size_t r = 0; r < rest_dim; ++r) out[c * rest_dim + r] += a * arranged.amplitudes()[u * rest_dim + r];
        }
    }
    return StateVector(concat(block_labels, rest), std::move(out));
}

StateVector decode_block(const StateVector &state, const StabilizerCode &code, const Labels &block_labels,
                         const Labels &outputs) {
    if (outputs.size() != code.k || block_labels.size() != code.n) {
        throw StegoError(ErrorCode::DimensionMismatch, "decode_block: label counts do not match the code");
    }
    const Labels rest = rest_labels(state, block_labels);
    const StateVector arranged = state.reordered(concat(block_labels, rest));
    const std::size_t rest_dim = std::size_t{1} << rest.size();
    const std::size_t words = std::size_t{1} << code.k;
    const std::size_t block_dim = std::size_t{1} << code.n;
    std::vector<Amplitude> out(words * rest_dim, 0.0);
    for (std::size_t u = 0; u < words; ++u) {
        const StateVector cw = codeword(code, u);
        for (std::size_t c = 0; c < block_dim; ++c) {
            const Amplitude a = std::conj(cw.amplitudes()[c]);
            if (a == 0.0) continue;
            for (std::size_t r = 0; r < rest_dim; ++r) out[u * rest_dim + r] += a * arranged.amplitudes()[c * rest_dim + r];
        }
    }
    StateVector decoded(concat(outputs, rest), std::move(out));
    const double kept = decoded.norm_squared() / state.norm_squared();
    if (kept < 1.0 - 1e-9) {
        throw StegoError(ErrorCode::DecodeFailure,
                         "block has weight " + std::to_string(1.0 - kept) + " outside the code space");
    }
    return decoded;
}

DecodingTable::DecodingTable(const StabilizerCode &code, std::size_t max_weight) {
    for (const auto &e : enumerate_paulis(code.n, max_weight)) {
        const Syndrome s = syndrome_of(code, e);
        auto it = table_.find(s);
        if (it == table_.end()) {
            table_.emplace(s, Entry{e, false});
        } else if (it->second.error.weight() == e.weight() &&
                   !degenerate_equivalent(code, it->second.error, e)) {
            it->second.ambiguous = true;
        }
    }
}

const DecodingTable::Entry *DecodingTable::lookup(const Syndrome &s) const {
    auto it = table_.find(s);
    return it == table_.end() ? nullptr : &it->second;
}

Syndrome measure_syndrome(const StateVector &state, const StabilizerCode &code, const Labels &block) {
    Syndrome s;
    for (std::size_t i = 0; i < code.generators.size(); ++i) {
        const double e = state.expectation(code.generators[i], block);
        if (std::abs(e - 1.0) < kAmplitudeTolerance) {
            s.bits.push_back(0);
        } else if (std::abs(e + 1.0) < kAmplitudeTolerance) {
            s.bits.push_back(1);
        } else {
            throw StegoError(ErrorCode::NotEigenstate, "generator " + std::to_string(i + 1) +
                                                           " has expectation " + std::to_string(e));
        }
    }
    return s;
}

std::string serialize_code(const StabilizerCode &code) {
    std::ostringstream out;
    out << "name " << code.name << '\n'
        << "n " << code.n << '\n'
        << "k " << code.k << '\n'
        << "d " << code.d << '\n';
    for (const auto &g : code.generators) out << "generator " << g.to_string() << '\n';
    for (const auto &x : code.logical_x) out << "logical_x " << x.to_string() << '\n';
    for (const auto &z : code.logical_z) out << "logical_z " << z.to_string() << '\n';
    out << "ownership";
    for (std::size_t q : code.ownership.qubits()) out << ' ' << q + 1;
    out << '\n';
    return out.str();
}

StabilizerCode parse_code(std::string_view text) {
    StabilizerCode code;
    std::vector<std::size_t> owned;
    bool have_ownership = false;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string key;
        if (!(fields >> key) || key.front() == '#') continue;
        std::string value;
        if (key == "name") {
            fields >> code.name;
        } else if (key == "n" || key == "k" || key == "d") {
            std::size_t v = 0;
            if (!(fields >> v)) throw StegoError(ErrorCode::ParseError, "bad integer for '" + key + "'");
            (key == "n" ? code.n : key == "k" ? code.k : code.d) = v;
        } else if (key == "generator" || key == "logical_x" || key == "logical_z") {
            if (!(fields >> value)) throw StegoError(ErrorCode::ParseError, "missing operator for '" + key + "'");
            auto &list = key == "generator" ? code.generators : key == "logical_x" ? code.logical_x : code.logical_z;
            list.push_back(PauliOperator::from_string(value));
        } else if (key == "ownership") {
            have_ownership = true;
            std::size_t q = 0;
            while (fields >> q) {
                if (q == 0) throw StegoError(ErrorCode::ParseError, "ownership qubits are 1-based");
                owned.push_back(q - 1);
            }
        } else {
            throw StegoError(ErrorCode::ParseError, "unknown code field '" + key + "'");
        }
    }
    if (code.name.empty() || code.n == 0) throw StegoError(ErrorCode::ParseError, "code needs a name and n");
    code.ownership = have_ownership ? SupportMask::from_qubits(code.n, owned) : SupportMask(code.n);
    code.validate();
    return code;
}

} // namespace stegoq
