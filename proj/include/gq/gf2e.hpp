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

// Binary extension fields F_{2^s}.
//
// A field is fixed by an irreducible modulus f over F_2 of degree s. Elements
// are s-bit codes: bit i is the coefficient of alpha^i, where alpha is the
// class of x (code 2). Addition is XOR; multiplication is polynomial product
// reduced modulo f. For s <= 16 log/antilog tables are built once per field.

#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gq/error.hpp"

namespace gq {

/// Field element encoding: bit i is the coefficient of alpha^i.
using Code = std::uint32_t;

/// Polynomial over F_2, least-significant bit is the constant term.
struct PolyOverF2 {
    std::uint64_t bits = 0;

    /// Degree, with -1 for the zero polynomial.
    int degree() const { return bits == 0 ? -1 : 63 - std::countl_zero(bits); }

    friend bool operator==(PolyOverF2, PolyOverF2) = default;
};

namespace detail {

inline std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
    int dm = PolyOverF2{m}.degree();
    for (int da = PolyOverF2{a}.degree(); da >= dm; da = PolyOverF2{a}.degree()) {
        a ^= m << (da - dm);
    }
    return a;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace detail

/// True iff p has no factorisation into two polynomials of positive degree.
/// Trial division by every polynomial of degree at most deg(p)/2.
inline bool is_irreducible(PolyOverF2 p) {
    int deg = p.degree();
    if (deg < 1) fail(ErrorKind::InvalidPolynomial, "irreducibility needs degree >= 1");
    if (deg == 1) return true;
    std::uint64_t limit = std::uint64_t{1} << (deg / 2 + 1);
    for (std::uint64_t d = 2; d < limit; ++d) {
        if (detail::poly_mod(p.bits, d) == 0) return false;
    }
    return true;
}

namespace detail {

struct FieldData {
    unsigned s = 0;
    Code q = 0;
    std::uint64_t modulus = 0;
    Code primitive = 0;
    Code trace_mask = 0;
    // exp_table has 2(q-1) entries so that exp[log a + log b] needs no reduction.
    std::vector<Code> exp_table;
    std::vector<std::int32_t> log_table;

    Code mul_shift_xor(Code a, Code b) const {
        std::uint64_t r = 0;
        std::uint64_t x = a;
        Code high = Code{1} << (s - 1);
        for (; b != 0; b >>= 1) {
            if (b & 1u) r ^= x;
            bool carry = (x & high) != 0;
            x <<= 1;
            if (carry) x ^= modulus;
        }
        return static_cast<Code>(r);
    }

    Code pow_shift_xor(Code a, std::uint64_t m) const {
        Code result = 1;
        while (m != 0) {
            if (m & 1u) result = mul_shift_xor(result, a);
            a = mul_shift_xor(a, a);
            m >>= 1;
        }
        return result;
    }
};

}  // namespace detail

class Element;

/// An immutable, shareable description of F_{2^s}. Two Field handles denote
/// the same field iff their moduli are equal.
class Field {
   public:
    static constexpr unsigned kMaxDegree = 31;
    static constexpr unsigned kMaxTableDegree = 16;

    /// Builds F_{2^s} from an explicit modulus; the degree of the modulus is s.
    static Field from_modulus(PolyOverF2 modulus) {
        int deg = modulus.degree();
        if (deg < 1 || deg > static_cast<int>(kMaxDegree)) {
            fail(ErrorKind::UnsupportedDegree, "modulus degree " + std::to_string(deg) + " outside 1..31");
        }
        if (!is_irreducible(modulus)) {
            fail(ErrorKind::IrreducibleRequired, "modulus " + std::to_string(modulus.bits) + " is reducible");
        }
        return Field(build(modulus.bits, static_cast<unsigned>(deg)));
    }

    /// Canonical modulus: the degree-s irreducible with the smallest encoding,
    /// except s = 1 where x + 1 is used so that alpha = 1.
    static Field with_degree(unsigned s) {
        if (s == 0 || s > kMaxDegree) {
            fail(ErrorKind::UnsupportedDegree, "degree " + std::to_string(s) + " outside 1..31");
        }
        return from_modulus(canonical_modulus(s));
    }

    static PolyOverF2 canonical_modulus(unsigned s) {
        if (s == 0 || s > kMaxDegree) {
            fail(ErrorKind::UnsupportedDegree, "degree " + std::to_string(s) + " outside 1..31");
        }
        if (s == 1) return PolyOverF2{0b11};
        std::uint64_t lo = std::uint64_t{1} << s;
        for (std::uint64_t p = lo | 1u; p < (lo << 1); p += 2) {
            if (is_irreducible(PolyOverF2{p})) return PolyOverF2{p};
        }
        fail(ErrorKind::Internal, "no irreducible polynomial found");
    }

    unsigned degree() const { return d_->s; }
    Code order() const { return d_->q; }
    PolyOverF2 modulus() const { return PolyOverF2{d_->modulus}; }
    Code primitive() const { return d_->primitive; }
    bool has_tables() const { return !d_->log_table.empty(); }
    bool contains(Code a) const { return a < d_->q; }

    Code add(Code a, Code b) const { return a ^ b; }

    Code mul(Code a, Code b) const {
        if (a == 0 || b == 0) return 0;
        if (has_tables()) {
            return d_->exp_table[static_cast<std::size_t>(d_->log_table[a] + d_->log_table[b])];
        }
        return d_->mul_shift_xor(a, b);
    }

    /// Shift-and-XOR product, independent of the lookup tables.
    Code mul_reference(Code a, Code b) const { return d_->mul_shift_xor(a, b); }

    Code pow(Code a, std::uint64_t m) const {
        if (m == 0) return 1;
        if (a == 0) return 0;
        if (has_tables()) {
            std::uint64_t e = (static_cast<std::uint64_t>(d_->log_table[a]) * (m % (d_->q - 1))) % (d_->q - 1);
            return d_->exp_table[e];
        }
        return d_->pow_shift_xor(a, m);
    }

    Code inv(Code a) const {
        if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero");
        if (has_tables()) {
            std::int32_t l = d_->log_table[a];
            return d_->exp_table[static_cast<std::size_t>((d_->q - 1 - static_cast<Code>(l)) % (d_->q - 1))];
        }
        return d_->pow_shift_xor(a, static_cast<std::uint64_t>(d_->q) - 2);
    }

    Code div(Code a, Code b) const { return mul(a, inv(b)); }

    Code frobenius(Code a) const { return mul(a, a); }

    /// Absolute trace to F_2, as 0 or 1. Uses the precomputed trace of each
    /// polynomial-basis element, which is valid because the trace is F_2-linear.
    Code trace(Code a) const { return static_cast<Code>(std::popcount(a & d_->trace_mask) & 1); }

    /// tr(a) = a + a^2 + ... + a^(2^(s-1)), evaluated literally.
    Code trace_by_definition(Code a) const {
        Code acc = 0;
        Code term = a;
        for (unsigned i = 0; i < d_->s; ++i) {
            acc ^= term;
            term = d_->mul_shift_xor(term, term);
        }
        return acc;
    }

    /// The F_2-linear functional indexed by gamma: eta -> tr(gamma * eta).
    Code linear_map(Code gamma, Code eta) const { return trace(mul(gamma, eta)); }

    Element element(Code code) const;

    friend bool operator==(const Field &a, const Field &b) {
        return a.d_ == b.d_ || a.d_->modulus == b.d_->modulus;
    }

   private:
    explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}

    static std::shared_ptr<const detail::FieldData> build(std::uint64_t modulus, unsigned s) {
        auto d = std::make_shared<detail::FieldData>();
        d->s = s;
        d->q = static_cast<Code>(std::uint64_t{1} << s);
        d->modulus = modulus;

        for (unsigned i = 0; i < s; ++i) {
            Code acc = 0;
            Code term = Code{1} << i;
            for (unsigned j = 0; j < s; ++j) {
                acc ^= term;
                term = d->mul_shift_xor(term, term);
            }
            if (acc > 1) fail(ErrorKind::Internal, "trace left F_2");
            d->trace_mask |= acc << i;
        }

        if (s == 1) {
            d->primitive = 1;
        } else {
            std::uint64_t group = d->q - 1;
            auto factors = detail::prime_factors(group);
            for (Code c = 2; c < d->q; ++c) {
                bool ok = true;
                for (auto p : factors) {
                    if (d->pow_shift_xor(c, group / p) == 1) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    d->primitive = c;
                    break;
                }
            }
            if (d->primitive == 0) fail(ErrorKind::Internal, "no primitive element");
        }

        if (s <= kMaxTableDegree) {
            std::size_t n = d->q - 1;
            d->exp_table.resize(2 * n);
            d->log_table.assign(d->q, -1);
            Code x = 1;
            for (std::size_t i = 0; i < n; ++i) {
                d->exp_table[i] = x;
                d->exp_table[i + n] = x;
                d->log_table[x] = static_cast<std::int32_t>(i);
                x = d->mul_shift_xor(x, d->primitive);
            }
        }
        return d;
    }

    std::shared_ptr<const detail::FieldData> d_;
};

/// Builds the field from an explicit modulus.
inline Field make_field(PolyOverF2 modulus) { return Field::from_modulus(modulus); }
/// Builds the field of order 2^s with the canonical modulus.
inline Field make_field(unsigned s) { return Field::with_degree(s); }

/// A field element tied to its field; mixing fields is an error.
class Element {
   public:
    Element(Field field, Code code) : field_(std::move(field)), code_(code) {
        if (!field_.contains(code_)) {
            fail(ErrorKind::DimensionMismatch, "code " + std::to_string(code) + " not below q");
        }
    }

    const Field &field() const { return field_; }
    Code code() const { return code_; }
    bool is_zero() const { return code_ == 0; }

    Element inv() const { return {field_, field_.inv(code_)}; }
    Element pow(std::uint64_t m) const { return {field_, field_.pow(code_, m)}; }
    Element frobenius() const { return {field_, field_.frobenius(code_)}; }
    Code trace() const { return field_.trace(code_); }

    friend Element operator+(const Element &a, const Element &b) {
        check_same(a, b);
        return {a.field_, a.code_ ^ b.code_};
    }
    friend Element operator-(const Element &a, const Element &b) { return a + b; }
    friend Element operator*(const Element &a, const Element &b) {
        check_same(a, b);
        return {a.field_, a.field_.mul(a.code_, b.code_)};
    }
    friend Element operator/(const Element &a, const Element &b) {
        check_same(a, b);
        return {a.field_, a.field_.div(a.code_, b.code_)};
    }
    friend bool operator==(const Element &a, const Element &b) {
        return a.field_ == b.field_ && a.code_ == b.code_;
    }

   private:
    static void check_same(const Element &a, const Element &b) {
        if (!(a.field_ == b.field_)) fail(ErrorKind::FieldMismatch, "elements from different fields");
    }

    Field field_;
    Code code_;
};

inline Element Field::element(Code code) const { return Element(*this, code); }

inline Element add(const Element &a, const Element &b) { return a + b; }
inline Element mul(const Element &a, const Element &b) { return a * b; }
inline Element inv(const Element &a) { return a.inv(); }
inline Element pow(const Element &a, std::uint64_t m) { return a.pow(m); }
inline Element frobenius(const Element &a) { return a.frobenius(); }
inline Code trace(const Element &a) { return a.trace(); }

inline Code linear_map(const Element &gamma, const Element &eta) { return (gamma * eta).trace(); }

/// Dot product over F_q of two equal-length code vectors.
inline Code dot(const Field &f, const std::vector<Code> &a, const std::vector<Code> &b) {
    if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "dot product of unequal lengths");
    Code acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc ^= f.mul(a[i], b[i]);
    return acc;
}

}  // namespace gq
