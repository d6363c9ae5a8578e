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
#include <optional>
#include <string>
#include <vector>

namespace stegoq::gf2 {

/// Dynamically sized bit vector over GF(2).
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t size);

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
    bool any() const;
    std::size_t popcount() const;

    BitVector &operator^=(const BitVector &rhs);
    friend bool operator==(const BitVector &, const BitVector &) = default;

    std::string to_string() const;

  private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Solution set of A x = b: particular + span(nullspace).
struct SolutionSet {
    BitVector particular;
    std::vector<BitVector> nullspace;

    /// Every solution; only sensible for small nullspaces.
    std::vector<BitVector> enumerate() const;
};

/// Rows are equations over num_vars unknowns; rhs has one bit per row.
/// Returns nullopt when the system is inconsistent.
std::optional<SolutionSet> solve(const std::vector<BitVector> &rows, const BitVector &rhs,
                                 std::size_t num_vars);

std::size_t rank(std::vector<BitVector> rows);

} // namespace stegoq::gf2
