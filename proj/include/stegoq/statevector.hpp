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
#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stegoq/pauli.hpp"

namespace stegoq {

using Amplitude = std::complex<double>;
using Labels = std::vector<std::string>;
/// Row-major 2x2 complex matrix.
using Matrix2 = std::array<Amplitude, 4>;

inline constexpr double kAmplitudeTolerance = 1e-10;

enum class Gate { H, X, Y, Z, CNOT, CPHASE };
enum class MeasurementBasis { Z, X };

/// One line of a state dump: basis string (qubit 1 first), real and imaginary part.
struct DumpEntry {
    std::string basis;
    double re;
    double im;
};

/// Dense pure state over at most 16 labelled qubits.
///
/// Basis index bit (n-1-p) holds the qubit at tensor position p, so iterating
/// indices in increasing order visits basis strings lexicographically with the
/// first label leftmost, the way kets are conventionally written.
class StateVector {
  public:
    static constexpr std::size_t kMaxQubits = 16;

    StateVector() = default;
    /// Takes amplitudes as given (no normalization); labels must be unique.
    StateVector(Labels labels, std::vector<Amplitude> amplitudes);

    /// Computational basis state; `word` is a bit string, first char = first label.
    static StateVector basis(Labels labels, std::string_view word);
    static StateVector basis(Labels labels, std::uint64_t index);
    /// |word> on qubits labelled "q1".."qn".
    static StateVector prepare(std::size_t num_qubits, std::string_view word);
    /// (|00> + |11>)/sqrt2 on the two given labels.
    static StateVector bell_phi_plus(std::string a, std::string b);

    static Labels numbered_labels(std::string_view prefix, std::size_t count);

    std::size_t num_qubits() const { return labels_.size(); }
    std::size_t dimension() const { return amps_.size(); }
    const Labels &labels() const { return labels_; }
    const std::vector<Amplitude> &amplitudes() const { return amps_; }
    std::vector<Amplitude> &amplitudes() { return amps_; }
    Amplitude amplitude(std::string_view basis_word) const;

    std::size_t position(std::string_view label) const;
    bool has_label(std::string_view label) const;
    void relabel(std::string_view from, std::string to);
    /// Bit of `index` holding the qubit at tensor position `pos`.
    std::uint64_t position_bit(std::size_t pos) const { return std::uint64_t{1} << (num_qubits() - 1 - pos); }
    std::string basis_string(std::uint64_t index) const;

    double norm_squared() const;
    void normalize();
    /// Multiplies by a global phase so the first nonzero amplitude is real positive.
    void fix_global_phase(double threshold = 1e-12);

    void apply_matrix(const Matrix2 &m, std::string_view target);
    void apply(Gate gate, const Labels &targets);
    void apply_pauli(const PauliOperator &p, const Labels &targets);
    void apply_controlled_pauli(std::string_view control, const PauliOperator &p, const Labels &targets);
    /// Applies sum_j c_j P_j; result is not renormalized.
    void apply_pauli_sum(const std::vector<std::pair<Amplitude, PauliOperator>> &terms,
                         const Labels &targets);

    double expectation(const PauliOperator &p, const Labels &targets) const;
    /// Probability that measuring `target` in `basis` yields outcome 1.
    double probability_one(std::string_view target, MeasurementBasis basis = MeasurementBasis::Z) const;
    /// Born-rule sample; the state collapses and is renormalized.
    int measure(std::string_view target, MeasurementBasis basis, std::mt19937_64 &rng);

    /// Removes a qubit that is in a definite computational basis state.
    void remove_qubit(std::string_view label);
    /// Splits off a qubit that is unentangled with the rest. Throws DecodeFailure
    /// if the qubit's reduced purity is below 1 - purity_tolerance.
    std::pair<StateVector, std::array<Amplitude, 2>> factor_qubit(std::string_view label,
                                                                  double purity_tolerance = 1e-9) const;
    Matrix2 reduced_density_matrix(std::string_view label) const;
    double purity(std::string_view label) const;

    /// this ⊗ other; labels concatenated.
    StateVector tensor(const StateVector &other) const;
    /// Same state with qubits permuted into `order` (must be a permutation of labels()).
    StateVector reordered(const Labels &order) const;

    std::vector<DumpEntry> dump(double threshold = 1e-12) const;

  private:
    std::vector<std::size_t> positions(const Labels &targets) const;
    std::uint64_t block_mask(const std::vector<std::size_t> &pos, std::uint64_t pattern) const;

    Labels labels_;
    std::vector<Amplitude> amps_;
};

/// |<a|b>|^2 by tensor position; labels are not compared.
double fidelity(const StateVector &a, const StateVector &b);
/// <a|b> by tensor position.
Amplitude inner_product(const StateVector &a, const StateVector &b);
/// <phi| rho_sub |phi> where rho_sub is the reduced state of `state` on
/// `labels` (in that order) and phi is a pure state on those qubits.
double subsystem_fidelity(const StateVector &state, const Labels &labels, const StateVector &phi);

/// Substream seeded from (seed, stream) so results do not depend on scheduling.
std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream = 0);

} // namespace stegoq
