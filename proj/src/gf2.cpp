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

#include "stegoq/gf2.hpp"

#include <bit>
#include <utility>

#include "stegoq/error.hpp"

namespace stegoq::gf2 {

BitVector::BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

void BitVector::set(std::size_t i, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    if (value) {
        words_[i / 64] |= bit;
    } else {
        words_[i / 64] &= ~bit;
    }
}

bool BitVector::any() const {
    for (auto w : words_) {
        if (w) return true;
    }
    return false;
}

std::size_t BitVector::popcount() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

BitVector &BitVector::operator^=(const BitVector &rhs) {
    if (rhs.size_ != size_) throw StegoError(ErrorCode::DimensionMismatch, "BitVector size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= rhs.words_[i];
    return *this;
}

std::string BitVector::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < size_; ++i) out += get(i) ? '1' : '0';
    return out;
}

std::vector<BitVector> SolutionSet::enumerate() const {
    std::vector<BitVector> out;
    const std::size_t count = std::size_t{1} << nullspace.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
        BitVector x = particular;
        for (std::size_t j = 0; j < nullspace.size(); ++j) {
            if ((mask >> j) & 1U) x ^= nullspace[j];
        }
        out.push_back(std::move(x));
    }
    return out;
}

std::optional<SolutionSet> solve(const std::vector<BitVector> &rows, const BitVector &rhs,
                                 std::size_t num_vars) {
    if (rhs.size() != rows.size()) {
        throw StegoError(ErrorCode::DimensionMismatch, "rhs length must equal equation count");
    }
    // Augmented matrix: bits [0, num_vars) are coefficients, bit num_vars is rhs.
    std::vector<BitVector> aug;
    aug.reserve(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != num_vars) {
            throw StegoError(ErrorCode::DimensionMismatch, "equation width mismatch");
        }
        BitVector row(num_vars + 1);
        for (std::size_t c = 0; c < num_vars; ++c) row.set(c, rows[r].get(c));
        row.set(num_vars, rhs.get(r));
        aug.push_back(std::move(row));
    }

    std::vector<std::size_t> pivot_cols;
    std::size_t next = 0;
    for (std::size_t col = 0; col < num_vars && next < aug.size(); ++col) {
        std::size_t pivot = next;
        while (pivot < aug.size() && !aug[pivot].get(col)) ++pivot;
        if (pivot == aug.size()) continue;
        std::swap(aug[pivot], aug[next]);
        for (std::size_t r = 0; r < aug.size(); ++r) {
            if (r != next && aug[r].get(col)) aug[r] ^= aug[next];
        }
        pivot_cols.push_back(col);
        ++next;
    }
    for (std::size_t r = next; r < aug.size(); ++r) {
        if (aug[r].get(num_vars)) return std::nullopt;
    }

    SolutionSet out;
    out.particular = BitVector(num_vars);
    std::vector<bool> is_pivot(num_vars, false);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
        is_pivot[pivot_cols[i]] = true;
        out.particular.set(pivot_cols[i], aug[i].get(num_vars));
    }
    for (std::size_t free = 0; free < num_vars; ++free) {
        if (is_pivot[free]) continue;
        BitVector v(num_vars);
        v.set(free);
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
            if (aug[i].get(free)) v.set(pivot_cols[i]);
        }
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

std::size_t rank(std::vector<BitVector> rows) {
    if (rows.empty()) return 0;
    const std::size_t width = rows.front().size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < width && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r && rows[i].get(col)) rows[i] ^= rows[r];
        }
        ++r;
    }
    return r;
}

} // namespace stegoq::gf2
