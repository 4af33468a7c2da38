// Copyright 2026 The galois-qudits Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Bit-packed vectors and matrices over F_2.

#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gq/error.hpp"

namespace gq {

class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    static BitVector from_bits(const std::vector<int> &bits) {
        BitVector v(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i) v.set(i, bits[i] != 0);
        return v;
    }

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool value) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    bool none() const {
        for (auto w : words_) {
            if (w != 0) return false;
        }
        return true;
    }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /// Index of the first set bit, or size() when empty.
    std::size_t first_set() const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if (words_[k] != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
        }
        return size_;
    }

    BitVector &operator^=(const BitVector &o) {
        check_size(o);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector &b) { return a ^= b; }

    /// Inner product over F_2.
    bool dot(const BitVector &o) const {
        check_size(o);
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & o.words_[k];
        return std::popcount(acc) & 1;
    }

    /// Concatenation.
    void append(const BitVector &o) {
        BitVector out(size_ + o.size_);
        for (std::size_t i = 0; i < size_; ++i) out.set(i, get(i));
        for (std::size_t i = 0; i < o.size_; ++i) out.set(size_ + i, o.get(i));
        *this = std::move(out);
    }

    std::string to_string() const {
        std::string s(size_, '0');
        for (std::size_t i = 0; i < size_; ++i) {
            if (get(i)) s[i] = '1';
        }
        return s;
    }

    friend bool operator==(const BitVector &, const BitVector &) = default;

   private:
    void check_size(const BitVector &o) const {
        if (size_ != o.size_) fail(ErrorKind::DimensionMismatch, "bit vectors of unequal length");
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Row-major binary matrix.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}
    explicit BitMatrix(std::size_t cols) : cols_(cols) {}

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    const BitVector &row(std::size_t i) const { return rows_[i]; }
    BitVector &row(std::size_t i) { return rows_[i]; }
    const std::vector<BitVector> &row_list() const { return rows_; }

    bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool v) { rows_[i].set(j, v); }

    void push_row(BitVector r) {
        if (r.size() != cols_) fail(ErrorKind::DimensionMismatch, "row length does not match matrix");
        rows_.push_back(std::move(r));
    }

    BitMatrix transposed() const {
        BitMatrix t(cols_, rows());
        for (std::size_t i = 0; i < rows(); ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                if (get(i, j)) t.set(j, i, true);
            }
        }
        return t;
    }

    /// A * B^T over F_2.
    BitMatrix mul_transpose(const BitMatrix &b) const {
        if (cols_ != b.cols_) fail(ErrorKind::DimensionMismatch, "inner dimensions differ");
        BitMatrix out(rows(), b.rows());
        for (std::size_t i = 0; i < rows(); ++i) {
            for (std::size_t j = 0; j < b.rows(); ++j) out.set(i, j, rows_[i].dot(b.rows_[j]));
        }
        return out;
    }

    /// M v for a column vector v.
    BitVector apply(const BitVector &v) const {
        BitVector out(rows());
        for (std::size_t i = 0; i < rows(); ++i) out.set(i, rows_[i].dot(v));
        return out;
    }

    bool is_zero() const {
        for (const auto &r : rows_) {
            if (!r.none()) return false;
        }
        return true;
    }

    /// Reduced row echelon form in place; returns pivot columns.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows(); ++c) {
            std::size_t p = r;
            while (p < rows() && !rows_[p].get(c)) ++p;
            if (p == rows()) continue;
            std::swap(rows_[r], rows_[p]);
            for (std::size_t i = 0; i < rows(); ++i) {
                if (i != r && rows_[i].get(c)) rows_[i] ^= rows_[r];
            }
            pivots.push_back(c);
            ++r;
        }
        rows_.resize(r);
        return pivots;
    }

    std::size_t rank() const {
        BitMatrix m = *this;
        return m.rref().size();
    }

    /// Inverse of a square invertible matrix, or nullopt when singular.
    std::optional<BitMatrix> inverse() const {
        std::size_t n = rows();
        if (n != cols_) fail(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
        BitMatrix aug(n, 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) aug.set(i, j, get(i, j));
            aug.set(i, n + i, true);
        }
        auto piv = aug.rref();
        if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
        BitMatrix inv(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) inv.set(i, j, aug.get(i, n + j));
        }
        return inv;
    }

    /// Basis of {x : M x = 0}.
    BitMatrix kernel() const {
        BitMatrix m = *this;
        auto piv = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : piv) is_pivot[c] = true;
        BitMatrix out(cols_);
        for (std::size_t f = 0; f < cols_; ++f) {
            if (is_pivot[f]) continue;
            BitVector v(cols_);
            v.set(f, true);
            for (std::size_t i = 0; i < piv.size(); ++i) {
                if (m.get(i, f)) v.set(piv[i], true);
            }
            out.push_row(std::move(v));
        }
        return out;
    }

    /// True iff v lies in the row space.
    bool row_space_contains(const BitVector &v) const {
        BitMatrix m = *this;
        std::size_t r = m.rank();
        m.push_row(v);
        return m.rank() == r;
    }

    friend bool same_row_space(const BitMatrix &a, const BitMatrix &b) {
        if (a.cols_ != b.cols_) return false;
        std::size_t ra = a.rank();
        if (ra != b.rank()) return false;
        BitMatrix both = a;
        for (const auto &r : b.rows_) both.push_row(r);
        return both.rank() == ra;
    }

    friend bool operator==(const BitMatrix &, const BitMatrix &) = default;

   private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

}  // namespace gq
