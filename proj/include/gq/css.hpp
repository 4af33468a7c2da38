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

// Qudit CSS codes CSS(L_X, L_Z) with L_X inside the Euclidean dual of L_Z.

#pragma once

#include <bit>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gq/fq_matrix.hpp"

namespace gq {

class CssCode {
   public:
    CssCode(FqMatrix gx, FqMatrix gz) : gx_(std::move(gx)), gz_(std::move(gz)) {
        if (!(gx_.field() == gz_.field())) fail(ErrorKind::FieldMismatch, "generators over different fields");
        if (gx_.cols() != gz_.cols()) fail(ErrorKind::DimensionMismatch, "generators on different lengths");
        if (gx_.rank() != gx_.rows()) fail(ErrorKind::RankDeficient, "gx rows are dependent");
        if (gz_.rank() != gz_.rows()) fail(ErrorKind::RankDeficient, "gz rows are dependent");
        if (!gx_.mul_transpose(gz_).is_zero()) fail(ErrorKind::NotCommuting, "gx is not orthogonal to gz");
    }

    const Field &field() const { return gx_.field(); }
    std::size_t length() const { return gx_.cols(); }
    const FqMatrix &gx() const { return gx_; }
    const FqMatrix &gz() const { return gz_; }
    std::size_t num_logical() const { return length() - gx_.rows() - gz_.rows(); }

   private:
    FqMatrix gx_;
    FqMatrix gz_;
};

inline CssCode new_css(FqMatrix gx, FqMatrix gz) { return {std::move(gx), std::move(gz)}; }

/// Generator matrix of the Euclidean dual of the row space of m.
inline FqMatrix dual_space(const FqMatrix &m) { return m.kernel(); }

enum class DistanceStatus { Exact, NotComputed, NotApplicable };

inline std::string_view to_string(DistanceStatus s) {
    switch (s) {
        case DistanceStatus::Exact: return "exact";
        case DistanceStatus::NotComputed: return "not-computed";
        case DistanceStatus::NotApplicable: return "not-applicable";
    }
    return "?";
}

struct CodeParams {
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<std::size_t> d_x;
    std::optional<std::size_t> d_z;
    std::optional<std::size_t> d;
    DistanceStatus status = DistanceStatus::NotComputed;
};

inline constexpr std::uint64_t kDefaultDistanceBudget = std::uint64_t{1} << 20;

namespace detail {

/// Minimum weight over span(outer) minus span(inner), where `inner_checks`
/// generates the dual of span(inner). Words of span(outer) are visited by a
/// Gray code over the F_2-basis {alpha^b * row}, one vector XOR per step.
inline std::size_t min_weight_outside(const FqMatrix &outer, const FqMatrix &inner_checks) {
    const auto &f = outer.field();
    const unsigned s = f.degree();
    std::vector<FqVector> basis;
    for (std::size_t r = 0; r < outer.rows(); ++r) {
        for (unsigned b = 0; b < s; ++b) {
            FqVector v(outer.cols());
            for (std::size_t c = 0; c < v.size(); ++c) v[c] = f.mul(Code{1} << b, outer.at(r, c));
            basis.push_back(std::move(v));
        }
    }
    std::size_t best = std::numeric_limits<std::size_t>::max();
    FqVector word(outer.cols(), 0);
    const std::uint64_t total = std::uint64_t{1} << basis.size();
    for (std::uint64_t step = 1; step < total; ++step) {
        const auto flip = static_cast<std::size_t>(std::countr_zero(step));
        for (std::size_t c = 0; c < word.size(); ++c) word[c] ^= basis[flip][c];
        std::size_t w = hamming_weight(word);
        if (w == 0 || w >= best) continue;
        bool in_inner = true;
        for (std::size_t r = 0; r < inner_checks.rows() && in_inner; ++r) in_inner = dot(f, inner_checks.row(r), word) == 0;
        if (!in_inner) best = w;
    }
    return best;
}

inline std::uint64_t enumeration_size(const Field &f, std::size_t dim) {
    const std::size_t bits = f.degree() * dim;
    return bits >= 63 ? std::numeric_limits<std::uint64_t>::max() : std::uint64_t{1} << bits;
}

}  // namespace detail

/// k = n - dim L_X - dim L_Z; d_X over L_Z^perp \ L_X and d_Z over
/// L_X^perp \ L_Z by exhaustive enumeration when within the budget.
inline CodeParams params(const CssCode &c, std::uint64_t distance_budget = kDefaultDistanceBudget) {
    CodeParams p;
    p.n = c.length();
    p.k = c.num_logical();
    if (p.k == 0) {
        p.status = DistanceStatus::NotApplicable;
        return p;
    }
    FqMatrix zperp = dual_space(c.gz());
    FqMatrix xperp = dual_space(c.gx());
    const auto &f = c.field();
    if (detail::enumeration_size(f, zperp.rows()) > distance_budget ||
        detail::enumeration_size(f, xperp.rows()) > distance_budget) {
        p.status = DistanceStatus::NotComputed;
        return p;
    }
    p.d_x = detail::min_weight_outside(zperp, xperp);
    p.d_z = detail::min_weight_outside(xperp, zperp);
    p.d = std::min(*p.d_x, *p.d_z);
    p.status = DistanceStatus::Exact;
    return p;
}

struct LogicalSpaces {
    FqMatrix z_logicals;  // representatives of L_X^perp mod L_Z
    FqMatrix x_logicals;  // representatives of L_Z^perp mod L_X
};

namespace detail {

/// Rows of `outer` extending `inner` to a basis of span(outer).
inline FqMatrix complement_rows(const FqMatrix &outer, const FqMatrix &inner) {
    FqMatrix acc = inner;
    FqMatrix out(outer.field(), outer.cols());
    for (std::size_t r = 0; r < outer.rows(); ++r) {
        if (acc.row_space_contains(outer.row(r))) continue;
        acc.push_row(outer.row(r));
        out.push_row(outer.row(r));
    }
    return out;
}

}  // namespace detail

/// k representatives of each logical coset space, normalised so that
/// x_logicals[i] . z_logicals[j] = delta_ij.
inline LogicalSpaces logical_spaces(const CssCode &c) {
    const auto &f = c.field();
    FqMatrix xs = detail::complement_rows(dual_space(c.gz()), c.gx());
    FqMatrix zs = detail::complement_rows(dual_space(c.gx()), c.gz());
    if (xs.rows() != c.num_logical() || zs.rows() != c.num_logical()) {
        fail(ErrorKind::Internal, "logical coset spaces have the wrong dimension");
    }
    if (xs.rows() == 0) return {zs, xs};
    auto pinv = xs.mul_transpose(zs).inverse();
    if (!pinv) fail(ErrorKind::Internal, "logical pairing is degenerate");
    // z''_j = sum_l (P^{-1})_{lj} z'_l.
    FqMatrix pt = pinv->transposed();
    FqMatrix z_norm(f, zs.cols());
    for (std::size_t j = 0; j < pt.rows(); ++j) z_norm.push_row(zs.combine(pt.row(j)));
    return {z_norm, xs};
}

}  // namespace gq
