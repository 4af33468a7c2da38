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

// n-qudit Galois Pauli words sign * X^x Z^z.

#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gq/fq_matrix.hpp"

namespace gq {

/// sign * X^{xvec} Z^{zvec}, with the X part acting after the Z part on kets
/// (the canonical "X part first" operator order).
class PauliWord {
   public:
    PauliWord(Field field, FqVector x, FqVector z, int sign = +1)
        : field_(std::move(field)), x_(std::move(x)), z_(std::move(z)), sign_(sign) {
        if (x_.size() != z_.size()) fail(ErrorKind::DimensionMismatch, "x and z parts differ in length");
        if (sign_ != 1 && sign_ != -1) fail(ErrorKind::DimensionMismatch, "sign must be +1 or -1");
        for (std::size_t i = 0; i < x_.size(); ++i) {
            if (!field_.contains(x_[i]) || !field_.contains(z_[i])) {
                fail(ErrorKind::DimensionMismatch, "exponent outside the field");
            }
        }
    }

    static PauliWord identity(const Field &f, std::size_t n) { return {f, FqVector(n, 0), FqVector(n, 0)}; }
    static PauliWord x_type(const Field &f, FqVector x) {
        FqVector z(x.size(), 0);
        return {f, std::move(x), std::move(z)};
    }
    static PauliWord z_type(const Field &f, FqVector z) {
        FqVector x(z.size(), 0);
        return {f, std::move(x), std::move(z)};
    }

    const Field &field() const { return field_; }
    std::size_t size() const { return x_.size(); }
    const FqVector &x() const { return x_; }
    const FqVector &z() const { return z_; }
    int sign() const { return sign_; }

    bool has_x() const { return hamming_weight(x_) != 0; }
    bool has_z() const { return hamming_weight(z_) != 0; }
    bool is_identity() const { return !has_x() && !has_z(); }
    /// Pure X-type or pure Z-type (the identity counts as both).
    bool is_pure() const { return !(has_x() && has_z()); }

    friend bool operator==(const PauliWord &a, const PauliWord &b) {
        return a.field_ == b.field_ && a.x_ == b.x_ && a.z_ == b.z_ && a.sign_ == b.sign_;
    }

   private:
    Field field_;
    FqVector x_;
    FqVector z_;
    int sign_;
};

namespace detail {
inline void check_same_shape(const PauliWord &a, const PauliWord &b) {
    if (!(a.field() == b.field())) fail(ErrorKind::FieldMismatch, "Pauli words over different fields");
    if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "Pauli words on different qudit counts");
}
}  // namespace detail

/// Product a * b. Moving Z^{z_a} past X^{x_b} costs (-1)^{tr(z_a . x_b)}.
inline PauliWord multiply(const PauliWord &a, const PauliWord &b) {
    detail::check_same_shape(a, b);
    const auto &f = a.field();
    FqVector x(a.size()), z(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        x[i] = a.x()[i] ^ b.x()[i];
        z[i] = a.z()[i] ^ b.z()[i];
    }
    int sign = a.sign() * b.sign();
    if (f.trace(dot(f, a.z(), b.x())) != 0) sign = -sign;
    return {f, std::move(x), std::move(z), sign};
}

/// tr(x_a . z_b) + tr(x_b . z_a) = 0.
inline bool commutes(const PauliWord &a, const PauliWord &b) {
    detail::check_same_shape(a, b);
    const auto &f = a.field();
    return (f.trace(dot(f, a.x(), b.z())) ^ f.trace(dot(f, b.x(), a.z()))) == 0;
}

/// Every exponent scaled by mu. Only defined for pure-type words.
inline PauliWord power(const PauliWord &p, Code mu) {
    if (!p.is_pure()) fail(ErrorKind::PureTypeRequired, "power needs a pure X- or Z-type word");
    const auto &f = p.field();
    if (!f.contains(mu)) fail(ErrorKind::DimensionMismatch, "scalar outside the field");
    FqVector x(p.size()), z(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        x[i] = f.mul(mu, p.x()[i]);
        z[i] = f.mul(mu, p.z()[i]);
    }
    return {f, std::move(x), std::move(z), mu == 0 ? 1 : p.sign()};
}

/// Number of sites with a non-identity factor.
inline std::size_t weight(const PauliWord &p) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < p.size(); ++i) w += (p.x()[i] != 0 || p.z()[i] != 0);
    return w;
}

namespace detail {
inline std::string codes_to_string(const FqVector &v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out + "]";
}

inline FqVector parse_codes(std::string_view text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
        fail(ErrorKind::ParseError, "expected a bracketed code list");
    }
    FqVector out;
    std::string body(text.substr(1, text.size() - 2));
    if (body.find_first_not_of(" ") == std::string::npos) return out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception &) {
            fail(ErrorKind::ParseError, "bad element code '" + item + "'");
        }
        if (item.find_first_not_of(" ", used) != std::string::npos) {
            fail(ErrorKind::ParseError, "bad element code '" + item + "'");
        }
        out.push_back(static_cast<Code>(v));
    }
    return out;
}
}  // namespace detail

/// Text form `s|x:[codes]|z:[codes]` with s one of + or -.
inline std::string to_text(const PauliWord &p) {
    return std::string(p.sign() > 0 ? "+" : "-") + "|x:" + detail::codes_to_string(p.x()) +
           "|z:" + detail::codes_to_string(p.z());
}

inline PauliWord parse_pauli(const Field &f, std::string_view text) {
    auto bar1 = text.find('|');
    auto bar2 = bar1 == std::string_view::npos ? bar1 : text.find('|', bar1 + 1);
    if (bar2 == std::string_view::npos) fail(ErrorKind::ParseError, "expected s|x:[..]|z:[..]");
    auto sign_part = text.substr(0, bar1);
    auto x_part = text.substr(bar1 + 1, bar2 - bar1 - 1);
    auto z_part = text.substr(bar2 + 1);
    int sign = 0;
    if (sign_part == "+") sign = 1;
    if (sign_part == "-") sign = -1;
    if (sign == 0) fail(ErrorKind::ParseError, "sign must be + or -");
    if (x_part.substr(0, 2) != "x:" || z_part.substr(0, 2) != "z:") fail(ErrorKind::ParseError, "missing x:/z: tags");
    return {f, detail::parse_codes(x_part.substr(2)), detail::parse_codes(z_part.substr(2)), sign};
}

}  // namespace gq
