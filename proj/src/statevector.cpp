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

#include "stegoq/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <set>

#include "stegoq/error.hpp"

namespace stegoq {

namespace {

constexpr Amplitude kI{0.0, 1.0};

Amplitude i_power(int turns) {
    switch (((turns % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
    }
}

void check_labels(const Labels &labels) {
    if (labels.size() > StateVector::kMaxQubits) {
        throw StegoError(ErrorCode::DimensionMismatch,
                         "state vectors are capped at 16 qubits, got " + std::to_string(labels.size()));
    }
    std::set<std::string> seen;
    for (const auto &l : labels) {
        if (!seen.insert(l).second) {
            throw StegoError(ErrorCode::DuplicateTarget, "duplicate qubit label '" + l + "'");
        }
    }
}

} // namespace

StateVector::StateVector(Labels labels, std::vector<Amplitude> amplitudes)
    : labels_(std::move(labels)), amps_(std::move(amplitudes)) {
    check_labels(labels_);
    if (amps_.size() != (std::size_t{1} << labels_.size())) {
        throw StegoError(ErrorCode::DimensionMismatch,
                         "amplitude count " + std::to_string(amps_.size()) + " does not match " +
                             std::to_string(labels_.size()) + " qubits");
    }
}

StateVector StateVector::basis(Labels labels, std::uint64_t index) {
    check_labels(labels);
    std::vector<Amplitude> amps(std::size_t{1} << labels.size(), 0.0);
    if (index >= amps.size()) throw StegoError(ErrorCode::DimensionMismatch, "basis index out of range");
    amps[index] = 1.0;
    return StateVector(std::move(labels), std::move(amps));
}

StateVector StateVector::basis(Labels labels, std::string_view word) {
    if (word.size() != labels.size()) {
        throw StegoError(ErrorCode::DimensionMismatch, "basis word length does not match qubit count");
    }
    std::uint64_t index = 0;
    for (char c : word) {
        if (c != '0' && c != '1') throw StegoError(ErrorCode::ParseError, "basis word must be binary");
        index = (index << 1U) | static_cast<std::uint64_t>(c == '1');
    }
    return basis(std::move(labels), index);
}

StateVector StateVector::prepare(std::size_t num_qubits, std::string_view word) {
    return basis(numbered_labels("q", num_qubits), word);
}

StateVector StateVector::bell_phi_plus(std::string a, std::string b) {
    const double h = 1.0 / std::numbers::sqrt2;
    return StateVector({std::move(a), std::move(b)}, {h, 0.0, 0.0, h});
}

Labels StateVector::numbered_labels(std::string_view prefix, std::size_t count) {
    Labels out;
    for (std::size_t i = 1; i <= count; ++i) out.push_back(std::string(prefix) + std::to_string(i));
    return out;
}

Amplitude StateVector::amplitude(std::string_view basis_word) const {
    if (basis_word.size() != num_qubits()) {
        throw StegoError(ErrorCode::DimensionMismatch, "basis word length does not match qubit count");
    }
    std::uint64_t index = 0;
    for (char c : basis_word) index = (index << 1U) | static_cast<std::uint64_t>(c == '1');
    return amps_[index];
}

std::size_t StateVector::position(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) return i;
    }
    throw StegoError(ErrorCode::UnknownLabel, "unknown qubit label '" + std::string(label) + "'");
}

bool StateVector::has_label(std::string_view label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

void StateVector::relabel(std::string_view from, std::string to) {
    const std::size_t pos = position(from);
    if (labels_[pos] != to && has_label(to)) {
        throw StegoError(ErrorCode::DuplicateTarget, "label '" + to + "' already in use");
    }
    labels_[pos] = std::move(to);
}

std::string StateVector::basis_string(std::uint64_t index) const {
    std::string out(num_qubits(), '0');
    for (std::size_t p = 0; p < num_qubits(); ++p) {
        if (index & position_bit(p)) out[p] = '1';
    }
    return out;
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const auto &a : amps_) total += std::norm(a);
    return total;
}

void StateVector::normalize() {
    const double norm = std::sqrt(norm_squared());
    if (norm == 0.0) throw StegoError(ErrorCode::InvalidArgument, "cannot normalize the zero vector");
    for (auto &a : amps_) a /= norm;
}

void StateVector::fix_global_phase(double threshold) {
    for (const auto &a : amps_) {
        if (std::abs(a) > threshold) {
            const Amplitude phase = std::conj(a) / std::abs(a);
            for (auto &b : amps_) b *= phase;
            return;
        }
    }
}

std::vector<std::size_t> StateVector::positions(const Labels &targets) const {
    std::vector<std::size_t> out;
    out.reserve(targets.size());
    for (const auto &t : targets) {
        const std::size_t p = position(t);
        if (std::find(out.begin(), out.end(), p) != out.end()) {
            throw StegoError(ErrorCode::DuplicateTarget, "qubit '" + t + "' targeted twice");
        }
        out.push_back(p);
    }
    return out;
}

std::uint64_t StateVector::block_mask(const std::vector<std::size_t> &pos, std::uint64_t pattern) const {
    std::uint64_t mask = 0;
    for (std::size_t j = 0; j < pos.size(); ++j) {
        if ((pattern >> j) & 1U) mask |= position_bit(pos[j]);
    }
    return mask;
}

void StateVector::apply_matrix(const Matrix2 &m, std::string_view target) {
    const std::uint64_t bit = position_bit(position(target));
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) continue;
        const Amplitude a0 = amps_[i];
        const Amplitude a1 = amps_[i | bit];
        amps_[i] = m[0] * a0 + m[1] * a1;
        amps_[i | bit] = m[2] * a0 + m[3] * a1;
    }
}

void StateVector::apply(Gate gate, const Labels &targets) {
    const std::size_t arity = (gate == Gate::CNOT || gate == Gate::CPHASE) ? 2 : 1;
    if (targets.size() != arity) {
        throw StegoError(ErrorCode::InvalidArgument, "gate expects " + std::to_string(arity) + " target(s)");
    }
    const auto pos = positions(targets);
    const double h = 1.0 / std::numbers::sqrt2;
    switch (gate) {
    case Gate::H: apply_matrix({h, h, h, -h}, targets[0]); break;
    case Gate::X: apply_matrix({0.0, 1.0, 1.0, 0.0}, targets[0]); break;
    case Gate::Y: apply_matrix({0.0, -kI, kI, 0.0}, targets[0]); break;
    case Gate::Z: apply_matrix({1.0, 0.0, 0.0, -1.0}, targets[0]); break;
    case Gate::CNOT: {
        const std::uint64_t c = position_bit(pos[0]);
        const std::uint64_t t = position_bit(pos[1]);
        for (std::uint64_t i = 0; i < amps_.size(); ++i) {
            if ((i & c) && !(i & t)) std::swap(amps_[i], amps_[i | t]);
        }
        break;
    }
    case Gate::CPHASE: {
        const std::uint64_t both = position_bit(pos[0]) | position_bit(pos[1]);
        for (std::uint64_t i = 0; i < amps_.size(); ++i) {
            if ((i & both) == both) amps_[i] = -amps_[i];
        }
        break;
    }
    }
}

void StateVector::apply_pauli(const PauliOperator &p, const Labels &targets) {
    if (targets.size() != p.num_qubits()) {
        throw StegoError(ErrorCode::DimensionMismatch,
                         "Pauli on " + std::to_string(p.num_qubits()) + " qubits applied to " +
                             std::to_string(targets.size()) + " labels");
    }
    const auto pos = positions(targets);
    const std::uint64_t flip = block_mask(pos, p.x_bits());
    const std::uint64_t sign = block_mask(pos, p.z_bits());
    // Y = iXZ: acting on |i> gives i^(phase + #Y) (-1)^{|i & sign|} |i ^ flip>.
    const Amplitude global = i_power(p.phase() + std::popcount(p.x_bits() & p.z_bits()));
    std::vector<Amplitude> out(amps_.size());
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        const Amplitude a = (std::popcount(i & sign) & 1) ? -amps_[i] : amps_[i];
        out[i ^ flip] = global * a;
    }
    amps_ = std::move(out);
}

void StateVector::apply_controlled_pauli(std::string_view control, const PauliOperator &p,
                                         const Labels &targets) {
    Labels all = targets;
    all.emplace_back(control);
    positions(all); // duplicate check
    const std::uint64_t cbit = position_bit(position(control));
    StateVector flipped = *this;
    flipped.apply_pauli(p, targets);
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (i & cbit) amps_[i] = flipped.amps_[i];
    }
}

void StateVector::apply_pauli_sum(const std::vector<std::pair<Amplitude, PauliOperator>> &terms,
                                  const Labels &targets) {
    std::vector<Amplitude> total(amps_.size(), 0.0);
    for (const auto &[coeff, p] : terms) {
        StateVector term = *this;
        term.apply_pauli(p, targets);
        for (std::size_t i = 0; i < total.size(); ++i) total[i] += coeff * term.amps_[i];
    }
    amps_ = std::move(total);
}

double StateVector::expectation(const PauliOperator &p, const Labels &targets) const {
    StateVector image = *this;
    image.apply_pauli(p, targets);
    return inner_product(*this, image).real();
}

double StateVector::probability_one(std::string_view target, MeasurementBasis basis) const {
    if (basis == MeasurementBasis::X) {
        StateVector rotated = *this;
        rotated.apply(Gate::H, {std::string(target)});
        return rotated.probability_one(target, MeasurementBasis::Z);
    }
    const std::uint64_t bit = position_bit(position(target));
    double p1 = 0.0;
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) p1 += std::norm(amps_[i]);
    }
    return p1 / norm_squared();
}

int StateVector::measure(std::string_view target, MeasurementBasis basis, std::mt19937_64 &rng) {
    const Labels t{std::string(target)};
    if (basis == MeasurementBasis::X) apply(Gate::H, t);
    const double p1 = probability_one(target);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const int outcome = uniform(rng) < p1 ? 1 : 0;
    const std::uint64_t bit = position_bit(position(target));
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (static_cast<int>((i & bit) != 0) != outcome) amps_[i] = 0.0;
    }
    normalize();
    if (basis == MeasurementBasis::X) apply(Gate::H, t);
    return outcome;
}

void StateVector::remove_qubit(std::string_view label) {
    const std::size_t pos = position(label);
    const double p1 = probability_one(label);
    int value;
    if (p1 < kAmplitudeTolerance) {
        value = 0;
    } else if (p1 > 1.0 - kAmplitudeTolerance) {
        value = 1;
    } else {
        throw StegoError(ErrorCode::InvalidArgument,
                         "qubit '" + std::string(label) + "' is not in a computational basis state");
    }
    const std::uint64_t bit = position_bit(pos);
    // Bits above `bit` shift down by one.
    const std::uint64_t low = bit - 1;
    std::vector<Amplitude> out(amps_.size() / 2);
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (static_cast<int>((i & bit) != 0) != value) continue;
        const std::uint64_t j = (i & low) | ((i >> 1U) & ~low);
        out[j] = amps_[i];
    }
    labels_.erase(labels_.begin() + static_cast<std::ptrdiff_t>(pos));
    amps_ = std::move(out);
    normalize();
}

Matrix2 StateVector::reduced_density_matrix(std::string_view label) const {
    const std::uint64_t bit = position_bit(position(label));
    Matrix2 rho{0.0, 0.0, 0.0, 0.0};
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) continue;
        const Amplitude a0 = amps_[i];
        const Amplitude a1 = amps_[i | bit];
        rho[0] += a0 * std::conj(a0);
        rho[1] += a0 * std::conj(a1);
        rho[2] += a1 * std::conj(a0);
        rho[3] += a1 * std::conj(a1);
    }
    const double trace = (rho[0] + rho[3]).real();
    for (auto &v : rho) v /= trace;
    return rho;
}

double StateVector::purity(std::string_view label) const {
    const Matrix2 rho = reduced_density_matrix(label);
    return (rho[0] * rho[0] + rho[1] * rho[2] + rho[2] * rho[1] + rho[3] * rho[3]).real();
}

std::pair<StateVector, std::array<Amplitude, 2>> StateVector::factor_qubit(std::string_view label,
                                                                           double purity_tolerance) const {
    const double pur = purity(label);
    if (pur < 1.0 - purity_tolerance) {
        throw StegoError(ErrorCode::DecodeFailure, "qubit '" + std::string(label) +
                                                       "' is entangled with the rest (purity " +
                                                       std::to_string(pur) + ")");
    }
    const std::size_t pos = position(label);
    const std::uint64_t bit = position_bit(pos);
    // For a product state psi(r, b) = chi(r) phi(b), the row of largest weight
    // is proportional to phi.
    std::uint64_t best = 0;
    double best_weight = -1.0;
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) continue;
        const double w = std::norm(amps_[i]) + std::norm(amps_[i | bit]);
        if (w > best_weight) {
            best_weight = w;
            best = i;
        }
    }
    std::array<Amplitude, 2> qubit{amps_[best], amps_[best | bit]};
    const double qn = std::sqrt(std::norm(qubit[0]) + std::norm(qubit[1]));
    qubit[0] /= qn;
    qubit[1] /= qn;

    const std::uint64_t low = bit - 1;
    std::vector<Amplitude> rest(amps_.size() / 2);
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) continue;
        const std::uint64_t j = (i & low) | ((i >> 1U) & ~low);
        rest[j] = std::conj(qubit[0]) * amps_[i] + std::conj(qubit[1]) * amps_[i | bit];
    }
    Labels rest_labels = labels_;
    rest_labels.erase(rest_labels.begin() + static_cast<std::ptrdiff_t>(pos));
    StateVector remainder(std::move(rest_labels), std::move(rest));
    remainder.normalize();
    return {std::move(remainder), qubit};
}

StateVector StateVector::tensor(const StateVector &other) const {
    Labels labels = labels_;
    labels.insert(labels.end(), other.labels_.begin(), other.labels_.end());
    check_labels(labels);
    std::vector<Amplitude> amps(amps_.size() * other.amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        for (std::size_t j = 0; j < other.amps_.size(); ++j) {
            amps[i * other.amps_.size() + j] = amps_[i] * other.amps_[j];
        }
    }
    return StateVector(std::move(labels), std::move(amps));
}

StateVector StateVector::reordered(const Labels &order) const {
    if (order.size() != num_qubits()) {
        throw StegoError(ErrorCode::DimensionMismatch, "reorder needs every label exactly once");
    }
    const auto old_pos = positions(order);
    const std::size_t n = num_qubits();
    std::vector<Amplitude> out(amps_.size());
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        std::uint64_t j = 0;
        for (std::size_t p = 0; p < n; ++p) {
            if (i & position_bit(old_pos[p])) j |= std::uint64_t{1} << (n - 1 - p);
        }
        out[j] = amps_[i];
    }
    return StateVector(order, std::move(out));
}

std::vector<DumpEntry> StateVector::dump(double threshold) const {
    std::vector<DumpEntry> out;
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (std::abs(amps_[i]) > threshold) {
            out.push_back({basis_string(i), amps_[i].real(), amps_[i].imag()});
        }
    }
    return out;
}

Amplitude inner_product(const StateVector &a, const StateVector &b) {
    if (a.dimension() != b.dimension()) {
        throw StegoError(ErrorCode::DimensionMismatch, "inner product of states with different sizes");
    }
    Amplitude total = 0.0;
    for (std::size_t i = 0; i < a.dimension(); ++i) total += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
    return total;
}

double fidelity(const StateVector &a, const StateVector &b) { return std::norm(inner_product(a, b)); }

double subsystem_fidelity(const StateVector &state, const Labels &labels, const StateVector &phi) {
    if (phi.num_qubits() != labels.size()) {
        throw StegoError(ErrorCode::DimensionMismatch, "target state size does not match subsystem");
    }
    Labels order = labels;
    for (const auto &l : state.labels()) {
        if (std::find(labels.begin(), labels.end(), l) == labels.end()) order.push_back(l);
    }
    const StateVector arranged = state.reordered(order);
    const std::size_t sub_dim = phi.dimension();
    const std::size_t rest_dim = arranged.dimension() / sub_dim;
    double total = 0.0;
    for (std::size_t r = 0; r < rest_dim; ++r) {
        Amplitude overlap = 0.0;
        for (std::size_t u = 0; u < sub_dim; ++u) {
            overlap += std::conj(phi.amplitudes()[u]) * arranged.amplitudes()[u * rest_dim + r];
        }
        total += std::norm(overlap);
    }
    return total / arranged.norm_squared();
}

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32U)};
    return std::mt19937_64(seq);
}

} // namespace stegoq
