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

// Generalized Reed-Solomon codes and the quantum Reed-Solomon CSS family.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "gq/css.hpp"
#include "gq/poly.hpp"

namespace gq {

/// GRS_k(alpha, v) = {(v_1 f(alpha_1), ..., v_n f(alpha_n)) : deg f < k}.
class GrsCode {
   public:
    GrsCode(Field f, std::size_t k, std::vector<Code> alpha, std::vector<Code> v)
        : field_(std::move(f)), k_(k), alpha_(std::move(alpha)), v_(std::move(v)) {
        const std::size_t n = alpha_.size();
        if (v_.size() != n) fail(ErrorKind::DimensionMismatch, "one multiplier per evaluation point required");
        if (n > field_.order()) fail(ErrorKind::DimensionMismatch, "more evaluation points than field elements");
        if (k_ > n) fail(ErrorKind::DimensionMismatch, "dimension exceeds length");
        std::vector<bool> seen(field_.order(), false);
        for (std::size_t i = 0; i < n; ++i) {
            if (!field_.contains(alpha_[i]) || !field_.contains(v_[i])) {
                fail(ErrorKind::DimensionMismatch, "point or multiplier outside the field");
            }
            if (seen[alpha_[i]]) fail(ErrorKind::DimensionMismatch, "evaluation points must be distinct");
            seen[alpha_[i]] = true;
            if (v_[i] == 0) fail(ErrorKind::InvalidScale, "multipliers must be nonzero");
        }
    }

    const Field &field() const { return field_; }
    std::size_t length() const { return alpha_.size(); }
    std::size_t dimension() const { return k_; }
    const std::vector<Code> &alpha() const { return alpha_; }
    const std::vector<Code> &v() const { return v_; }
    std::size_t min_distance() const { return length() - k_ + 1; }
    std::size_t decoding_radius() const { return (length() - k_) / 2; }

   private:
    Field field_;
    std::size_t k_;
    std::vector<Code> alpha_;
    std::vector<Code> v_;
};

/// Row j is (v_i alpha_i^j), j = 0..k-1.
inline FqMatrix generator_matrix(const GrsCode &c) {
    const auto &f = c.field();
    FqMatrix g(f, c.length());
    for (std::size_t j = 0; j < c.dimension(); ++j) {
        FqVector row(c.length());
        for (std::size_t i = 0; i < c.length(); ++i) row[i] = f.mul(c.v()[i], f.pow(c.alpha()[i], j));
        g.push_row(std::move(row));
    }
    return g;
}

/// Evaluation of the message polynomial (coefficients low degree first).
inline FqVector encode(const GrsCode &c, const FqVector &message) {
    if (message.size() != c.dimension()) fail(ErrorKind::DimensionMismatch, "message length must equal k");
    const auto &f = c.field();
    FqVector out(c.length());
    for (std::size_t i = 0; i < c.length(); ++i) out[i] = f.mul(c.v()[i], poly_eval(f, message, c.alpha()[i]));
    return out;
}

/// Multipliers u with u_i^{-1} = v_i prod_{j != i} (alpha_i - alpha_j).
inline std::vector<Code> dual_multipliers(const GrsCode &c) {
    const auto &f = c.field();
    std::vector<Code> u(c.length());
    for (std::size_t i = 0; i < c.length(); ++i) {
        Code prod = c.v()[i];
        for (std::size_t j = 0; j < c.length(); ++j) {
            if (j != i) prod = f.mul(prod, c.alpha()[i] ^ c.alpha()[j]);
        }
        u[i] = f.inv(prod);
    }
    return u;
}

/// GRS_{n-k}(alpha, u), the Euclidean dual.
inline GrsCode dual(const GrsCode &c) {
    return {c.field(), c.length() - c.dimension(), c.alpha(), dual_multipliers(c)};
}

namespace detail {
inline __int128 binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * static_cast<__int128>(n - k + i) / static_cast<__int128>(i);
    return r;
}
}  // namespace detail

/// Number of weight-w codewords of an [n, k] MDS code over F_q:
/// C(n,w) (q-1) sum_{j=0}^{w-d} (-1)^j C(w-1,j) q^{w-d-j}.
inline std::uint64_t mds_weight_count(std::uint64_t n, std::uint64_t k, std::uint64_t q, std::uint64_t w) {
    if (k == 0 || k > n) fail(ErrorKind::DimensionMismatch, "need 1 <= k <= n");
    const std::uint64_t d = n - k + 1;
    if (w < d) fail(ErrorKind::WeightBelowDistance, "weight below the minimum distance");
    if (w > n) fail(ErrorKind::DimensionMismatch, "weight exceeds length");
    __int128 sum = 0;
    for (std::uint64_t j = 0; j <= w - d; ++j) {
        __int128 qp = 1;
        for (std::uint64_t e = 0; e < w - d - j; ++e) qp *= static_cast<__int128>(q);
        __int128 term = detail::binomial(w - 1, j) * qp;
        sum += (j % 2 == 0) ? term : -term;
    }
    __int128 total = detail::binomial(n, w) * static_cast<__int128>(q - 1) * sum;
    if (total < 0 || total > static_cast<__int128>(UINT64_MAX)) fail(ErrorKind::TooLarge, "count overflows 64 bits");
    return static_cast<std::uint64_t>(total);
}

/// The codeword of eta prod_{beta in roots} (x - beta), of weight n-k+1.
inline FqVector min_weight_codeword(const GrsCode &c, const std::vector<Code> &roots, Code eta) {
    if (c.dimension() == 0) fail(ErrorKind::DimensionMismatch, "the zero code has no nonzero words");
    if (roots.size() + 1 != c.dimension()) fail(ErrorKind::DimensionMismatch, "need exactly k-1 roots");
    if (eta == 0 || !c.field().contains(eta)) fail(ErrorKind::InvalidScale, "eta must be a nonzero field element");
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (std::find(c.alpha().begin(), c.alpha().end(), roots[i]) == c.alpha().end()) {
            fail(ErrorKind::InvalidSupport, "root is not an evaluation point");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (roots[i] == roots[j]) fail(ErrorKind::InvalidSupport, "roots must be distinct");
        }
    }
    FqPoly p = poly_scale(c.field(), poly_from_roots(c.field(), roots), eta);
    p.resize(c.dimension(), 0);
    return encode(c, p);
}

struct DecodeResult {
    FqVector codeword;
    FqVector error;
    FqVector message;
};

/// Unique decoding up to floor((n-k)/2) errors by Gao's interpolation method.
/// Inconsistent inputs raise DecodeFailure instead of returning a far word.
inline DecodeResult decode(const GrsCode &c, const FqVector &received) {
    const auto &f = c.field();
    const std::size_t n = c.length();
    const std::size_t k = c.dimension();
    if (received.size() != n) fail(ErrorKind::DimensionMismatch, "received word has the wrong length");
    for (auto x : received) {
        if (!f.contains(x)) fail(ErrorKind::DimensionMismatch, "received symbol outside the field");
    }
    FqPoly message;
    if (k > 0) {
        std::vector<Code> y(n);
        for (std::size_t i = 0; i < n; ++i) y[i] = f.div(received[i], c.v()[i]);
        FqPoly r0 = poly_from_roots(f, c.alpha());
        FqPoly r1 = poly_interpolate(f, c.alpha(), y);
        FqPoly t0, t1{1};
        // Partial extended Euclid: stop at the first remainder of degree < (n+k)/2.
        while (2 * poly_degree(r1) >= static_cast<int>(n + k)) {
            auto [quot, rem] = poly_divmod(f, r0, r1);
            FqPoly t2 = poly_add(t0, poly_mul(f, quot, t1));
            r0 = std::move(r1);
            r1 = std::move(rem);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        auto [quot, rem] = poly_divmod(f, r1, t1);
        if (poly_degree(rem) >= 0 || poly_degree(quot) >= static_cast<int>(k)) {
            fail(ErrorKind::DecodeFailure, "no codeword within the decoding radius");
        }
        message = std::move(quot);
    }
    message.resize(k, 0);
    DecodeResult out{encode(c, message), FqVector(n), message};
    for (std::size_t i = 0; i < n; ++i) out.error[i] = received[i] ^ out.codeword[i];
    if (hamming_weight(out.error) > c.decoding_radius()) {
        fail(ErrorKind::DecodeFailure, "no codeword within the decoding radius");
    }
    return out;
}

/// QRS_{k1,k2}(alpha, v) = CSS(GRS_{k1}(alpha, v), GRS_{n-k2}(alpha, u)).
class QrsCode {
   public:
    QrsCode(GrsCode x_code, GrsCode z_perp_code)
        : x_code_(std::move(x_code)), z_perp_(std::move(z_perp_code)), z_code_(dual(z_perp_)),
          css_(generator_matrix(x_code_), generator_matrix(z_code_)) {
        if (x_code_.alpha() != z_perp_.alpha() || x_code_.v() != z_perp_.v() ||
            x_code_.dimension() > z_perp_.dimension()) {
            fail(ErrorKind::InvalidNesting, "QRS needs GRS_k1 inside GRS_k2 over shared points and multipliers");
        }
    }

    std::size_t k1() const { return x_code_.dimension(); }
    std::size_t k2() const { return z_perp_.dimension(); }
    std::size_t length() const { return x_code_.length(); }
    const Field &field() const { return x_code_.field(); }

    /// L_X = GRS_{k1}(alpha, v).
    const GrsCode &x_code() const { return x_code_; }
    /// L_Z^perp = GRS_{k2}(alpha, v).
    const GrsCode &z_perp_code() const { return z_perp_; }
    /// L_Z = GRS_{n-k2}(alpha, u).
    const GrsCode &z_code() const { return z_code_; }
    /// L_X^perp = GRS_{n-k1}(alpha, u), the code decoded against Z errors.
    GrsCode x_perp_code() const { return dual(x_code_); }
    const CssCode &css() const { return css_; }

    std::size_t formula_k() const { return k2() - k1(); }
    std::size_t formula_dx() const { return length() - k2() + 1; }
    std::size_t formula_dz() const { return k1() + 1; }

   private:
    GrsCode x_code_;
    GrsCode z_perp_;
    GrsCode z_code_;
    CssCode css_;
};

/// Default points are the field elements 0, 1, ..., n-1 by code (all of F_q
/// in code order when n = q); default multipliers are all 1.
inline QrsCode make_qrs(const Field &f, std::size_t n, std::size_t k1, std::size_t k2,
                        std::optional<std::vector<Code>> alpha = std::nullopt,
                        std::optional<std::vector<Code>> v = std::nullopt) {
    if (k1 > k2) fail(ErrorKind::InvalidNesting, "need k1 <= k2");
    if (k2 > n) fail(ErrorKind::DimensionMismatch, "need k2 <= n");
    if (n > f.order()) fail(ErrorKind::DimensionMismatch, "need n <= q");
    std::vector<Code> a = alpha.value_or(std::vector<Code>{});
    if (!alpha) {
        for (std::size_t i = 0; i < n; ++i) a.push_back(static_cast<Code>(i));
    }
    std::vector<Code> mult = v.value_or(std::vector<Code>(n, 1));
    if (a.size() != n || mult.size() != n) fail(ErrorKind::DimensionMismatch, "alpha and v need n entries");
    return {GrsCode(f, k1, a, mult), GrsCode(f, k2, a, mult)};
}

}  // namespace gq
