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

// Univariate polynomials over F_q, coefficients low degree first.

#pragma once

#include <utility>
#include <vector>

#include "gq/gf2e.hpp"

namespace gq {

using FqPoly = std::vector<Code>;

inline void poly_trim(FqPoly &p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Degree, with -1 for the zero polynomial.
inline int poly_degree(const FqPoly &p) {
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i] != 0) return static_cast<int>(i);
    }
    return -1;
}

inline FqPoly poly_add(const FqPoly &a, const FqPoly &b) {
    FqPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] ^= a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] ^= b[i];
    poly_trim(out);
    return out;
}

inline FqPoly poly_scale(const Field &f, const FqPoly &a, Code c) {
    FqPoly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(c, a[i]);
    poly_trim(out);
    return out;
}

inline FqPoly poly_mul(const Field &f, const FqPoly &a, const FqPoly &b) {
    if (a.empty() || b.empty()) return {};
    FqPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] ^= f.mul(a[i], b[j]);
    }
    poly_trim(out);
    return out;
}

/// (quotient, remainder) of a by b.
inline std::pair<FqPoly, FqPoly> poly_divmod(const Field &f, FqPoly a, const FqPoly &b) {
    const int db = poly_degree(b);
    if (db < 0) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    poly_trim(a);
    const Code lead_inv = f.inv(b[static_cast<std::size_t>(db)]);
    FqPoly quot(a.size() > static_cast<std::size_t>(db) ? a.size() - static_cast<std::size_t>(db) : 0, 0);
    for (int d = poly_degree(a); d >= db; d = poly_degree(a)) {
        const auto shift = static_cast<std::size_t>(d - db);
        const Code c = f.mul(a[static_cast<std::size_t>(d)], lead_inv);
        quot[shift] = c;
        for (std::size_t i = 0; i <= static_cast<std::size_t>(db); ++i) a[shift + i] ^= f.mul(c, b[i]);
        poly_trim(a);
    }
    poly_trim(quot);
    return {quot, a};
}

inline Code poly_eval(const Field &f, const FqPoly &p, Code x) {
    Code acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = f.mul(acc, x) ^ p[i];
    return acc;
}

/// prod_i (x - r_i).
inline FqPoly poly_from_roots(const Field &f, const std::vector<Code> &roots) {
    FqPoly out{1};
    for (auto r : roots) out = poly_mul(f, out, {r, 1});
    return out;
}

/// The polynomial of degree < n through (xs[i], ys[i]), by Lagrange's formula.
inline FqPoly poly_interpolate(const Field &f, const std::vector<Code> &xs, const std::vector<Code> &ys) {
    if (xs.size() != ys.size()) fail(ErrorKind::DimensionMismatch, "interpolation needs one value per point");
    FqPoly out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (ys[i] == 0) continue;
        FqPoly basis{1};
        Code denom = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = poly_mul(f, basis, {xs[j], 1});
            denom = f.mul(denom, xs[i] ^ xs[j]);
        }
        out = poly_add(out, poly_scale(f, basis, f.div(ys[i], denom)));
    }
    return out;
}

}  // namespace gq
