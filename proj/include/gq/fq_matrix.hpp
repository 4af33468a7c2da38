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

// Dense linear algebra over F_q.

#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gq/gf2e.hpp"

namespace gq {

using FqVector = std::vector<Code>;

inline std::size_t hamming_weight(const FqVector &v) {
    std::size_t w = 0;
    for (auto c : v) w += (c != 0);
    return w;
}

/// Row-major matrix over F_q; rows are element-code vectors.
class FqMatrix {
   public:
    FqMatrix(Field field, std::size_t cols) : field_(std::move(field)), cols_(cols) {}
    FqMatrix(Field field, std::size_t cols, std::vector<FqVector> rows)
        : field_(std::move(field)), cols_(cols), rows_(std::move(rows)) {
        for (const auto &r : rows_) check_row(r);
    }

    const Field &field() const { return field_; }
    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_.empty(); }

    const FqVector &row(std::size_t i) const { return rows_[i]; }
    FqVector &row(std::size_t i) { return rows_[i]; }
    const std::vector<FqVector> &row_list() const { return rows_; }
    Code at(std::size_t i, std::size_t j) const { return rows_[i][j]; }

    void push_row(FqVector r) {
        check_row(r);
        rows_.push_back(std::move(r));
    }
    void erase_row(std::size_t i) { rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i)); }

    /// Row-vector times matrix: sum_j coeffs[j] * row_j.
    FqVector combine(const FqVector &coeffs) const {
        if (coeffs.size() != rows()) fail(ErrorKind::DimensionMismatch, "coefficient count differs from rows");
        FqVector out(cols_, 0);
        for (std::size_t j = 0; j < rows(); ++j) {
            if (coeffs[j] == 0) continue;
            for (std::size_t c = 0; c < cols_; ++c) out[c] ^= field_.mul(coeffs[j], rows_[j][c]);
        }
        return out;
    }

    /// Matrix times column vector.
    FqVector apply(const FqVector &v) const {
        if (v.size() != cols_) fail(ErrorKind::DimensionMismatch, "vector length differs from columns");
        FqVector out(rows(), 0);
        for (std::size_t i = 0; i < rows(); ++i) out[i] = dot(field_, rows_[i], v);
        return out;
    }

    /// A * B^T.
    FqMatrix mul_transpose(const FqMatrix &b) const {
        if (cols_ != b.cols_) fail(ErrorKind::DimensionMismatch, "inner dimensions differ");
        FqMatrix out(field_, b.rows());
        for (std::size_t i = 0; i < rows(); ++i) {
            FqVector r(b.rows(), 0);
            for (std::size_t j = 0; j < b.rows(); ++j) r[j] = dot(field_, rows_[i], b.rows_[j]);
            out.rows_.push_back(std::move(r));
        }
        return out;
    }

    bool is_zero() const {
        for (const auto &r : rows_) {
            for (auto c : r) {
                if (c != 0) return false;
            }
        }
        return true;
    }

    /// Reduced row echelon form in place. Pivots are normalised to 1 and zero
    /// rows are dropped. When `carried` is given it receives the same row
    /// operations (one entry per row) and is truncated alongside.
    std::vector<std::size_t> rref(FqVector *carried = nullptr) {
        if (carried && carried->size() != rows()) fail(ErrorKind::DimensionMismatch, "carried vector size");
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows(); ++c) {
            std::size_t p = r;
            while (p < rows() && rows_[p][c] == 0) ++p;
            if (p == rows()) continue;
            std::swap(rows_[r], rows_[p]);
            if (carried) std::swap((*carried)[r], (*carried)[p]);
            Code s = field_.inv(rows_[r][c]);
            for (auto &x : rows_[r]) x = field_.mul(x, s);
            if (carried) (*carried)[r] = field_.mul((*carried)[r], s);
            for (std::size_t i = 0; i < rows(); ++i) {
                if (i == r || rows_[i][c] == 0) continue;
                Code f = rows_[i][c];
                for (std::size_t k = 0; k < cols_; ++k) rows_[i][k] ^= field_.mul(f, rows_[r][k]);
                if (carried) (*carried)[i] ^= field_.mul(f, (*carried)[r]);
            }
            pivots.push_back(c);
            ++r;
        }
        if (carried) {
            for (std::size_t i = r; i < rows(); ++i) {
                if ((*carried)[i] != 0) fail(ErrorKind::Internal, "dependent rows carry inconsistent values");
            }
            carried->resize(r);
        }
        rows_.resize(r);
        return pivots;
    }

    std::size_t rank() const {
        FqMatrix m = *this;
        return m.rref().size();
    }

    /// Basis of the Euclidean orthogonal complement {v : M v = 0}.
    FqMatrix kernel() const {
        FqMatrix m = *this;
        auto piv = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : piv) is_pivot[c] = true;
        FqMatrix out(field_, cols_);
        for (std::size_t f = 0; f < cols_; ++f) {
            if (is_pivot[f]) continue;
            FqVector v(cols_, 0);
            v[f] = 1;
            for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = m.rows_[i][f];
            out.rows_.push_back(std::move(v));
        }
        return out;
    }

    /// Coefficients c with sum_j c_j row_j = target, or nullopt if target is
    /// outside the row space. Rows must be independent for uniqueness.
    std::optional<FqVector> solve_combination(const FqVector &target) const {
        check_row(target);
        // Columns of the transposed system are the rows of this matrix.
        std::size_t m = rows();
        FqMatrix aug(field_, m + 1);
        for (std::size_t c = 0; c < cols_; ++c) {
            FqVector eq(m + 1, 0);
            for (std::size_t j = 0; j < m; ++j) eq[j] = rows_[j][c];
            eq[m] = target[c];
            aug.rows_.push_back(std::move(eq));
        }
        auto piv = aug.rref();
        if (!piv.empty() && piv.back() == m) return std::nullopt;
        FqVector coeffs(m, 0);
        for (std::size_t i = 0; i < piv.size(); ++i) coeffs[piv[i]] = aug.rows_[i][m];
        return coeffs;
    }

    /// Some x with M x = rhs, or nullopt if inconsistent.
    std::optional<FqVector> solve_right(const FqVector &rhs) const {
        if (rhs.size() != rows()) fail(ErrorKind::DimensionMismatch, "right-hand side size");
        FqMatrix aug(field_, cols_ + 1);
        for (std::size_t i = 0; i < rows(); ++i) {
            FqVector eq = rows_[i];
            eq.push_back(rhs[i]);
            aug.rows_.push_back(std::move(eq));
        }
        auto piv = aug.rref();
        if (!piv.empty() && piv.back() == cols_) return std::nullopt;
        FqVector x(cols_, 0);
        for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug.rows_[i][cols_];
        return x;
    }

    /// Inverse of a square matrix, or nullopt when singular.
    std::optional<FqMatrix> inverse() const {
        const std::size_t n = rows();
        if (n != cols_) fail(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
        FqMatrix aug(field_, 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            FqVector r = rows_[i];
            r.resize(2 * n, 0);
            r[n + i] = 1;
            aug.rows_.push_back(std::move(r));
        }
        auto piv = aug.rref();
        if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
        FqMatrix inv(field_, n);
        for (std::size_t i = 0; i < n; ++i) inv.rows_.emplace_back(aug.rows_[i].begin() + static_cast<std::ptrdiff_t>(n), aug.rows_[i].end());
        return inv;
    }

    FqMatrix transposed() const {
        FqMatrix t(field_, rows());
        for (std::size_t c = 0; c < cols_; ++c) {
            FqVector r(rows());
            for (std::size_t i = 0; i < rows(); ++i) r[i] = rows_[i][c];
            t.rows_.push_back(std::move(r));
        }
        return t;
    }

    bool row_space_contains(const FqVector &v) const { return solve_combination(v).has_value(); }

    friend bool same_row_space(const FqMatrix &a, const FqMatrix &b) {
        if (a.cols_ != b.cols_) return false;
        FqMatrix ra = a, rb = b;
        ra.rref();
        rb.rref();
        return ra.rows_ == rb.rows_;
    }

    friend bool operator==(const FqMatrix &a, const FqMatrix &b) {
        return a.field_ == b.field_ && a.cols_ == b.cols_ && a.rows_ == b.rows_;
    }

   private:
    void check_row(const FqVector &r) const {
        if (r.size() != cols_) fail(ErrorKind::DimensionMismatch, "row length does not match matrix");
        for (auto c : r) {
            if (!field_.contains(c)) fail(ErrorKind::DimensionMismatch, "entry outside the field");
        }
    }

    Field field_;
    std::size_t cols_;
    std::vector<FqVector> rows_;
};

/// Random vector with entries uniform over F_q.
template <class Rng>
FqVector random_vector(const Field &f, std::size_t n, Rng &rng) {
    std::uniform_int_distribution<Code> dist(0, f.order() - 1);
    FqVector v(n);
    for (auto &x : v) x = dist(rng);
    return v;
}

}  // namespace gq
