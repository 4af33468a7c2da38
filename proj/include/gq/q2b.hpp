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

// Qudit CSS codes as qubit CSS codes: vector expansion through a basis
// assignment, code conversion, qubit-level syndrome extraction, and decoding
// of qubit errors with a qudit decoder.
//
// X-type data expands through the bases B_i and Z-type data through the dual
// bases B_i*, so that D_B(v) . D_B*(w) = tr(v . w).

#pragma once

#include <optional>
#include <vector>

#include "gq/bases.hpp"
#include "gq/bits.hpp"
#include "gq/grs.hpp"

namespace gq {

/// D_B(v): block i holds the coordinates of v_i in B_i.
inline BitVector expand_vector(const BasisAssignment &a, const FqVector &v) {
    if (v.size() != a.size()) fail(ErrorKind::DimensionMismatch, "vector length differs from the assignment");
    const unsigned s = a.field().degree();
    BitVector out(v.size() * s);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!a.field().contains(v[i])) fail(ErrorKind::DimensionMismatch, "entry outside the field");
        Code c = a[i].decompose_code(v[i]);
        for (unsigned j = 0; j < s; ++j) out.set(i * s + j, (c >> j) & 1u);
    }
    return out;
}

/// D_B*(w).
inline BitVector expand_dual(const BasisAssignment &a, const FqVector &w) { return expand_vector(a.dual(), w); }

/// Inverse of expand_vector.
inline FqVector contract_vector(const BasisAssignment &a, const BitVector &bits) {
    const unsigned s = a.field().degree();
    if (bits.size() != a.size() * s) fail(ErrorKind::DimensionMismatch, "bit vector length differs from n s");
    FqVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        Code c = 0;
        for (unsigned j = 0; j < s; ++j) c |= static_cast<Code>(bits.get(i * s + j)) << j;
        out[i] = a[i].recompose_code(c);
    }
    return out;
}

inline FqVector contract_dual(const BasisAssignment &a, const BitVector &bits) { return contract_vector(a.dual(), bits); }

struct QubitCssCode {
    std::size_t num_qubits = 0;
    BitMatrix hx;
    BitMatrix hz;

    std::size_t num_logical() const { return num_qubits - hx.rank() - hz.rank(); }
};

namespace detail {

/// {expand(b v) : v a row of m, b in the enumeration basis}.
inline BitMatrix expand_rows(const BasisAssignment &a, const FqMatrix &m, const FieldBasis &enumeration) {
    const auto &f = a.field();
    BitMatrix out(m.cols() * f.degree());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (auto b : enumeration.elements()) {
            FqVector scaled(m.cols());
            for (std::size_t c = 0; c < m.cols(); ++c) scaled[c] = f.mul(b, m.at(r, c));
            out.push_row(expand_vector(a, scaled));
        }
    }
    return out;
}

}  // namespace detail

/// Qubit CSS code with L_X = D_B(span gx) and L_Z = D_B*(span gz).
inline QubitCssCode convert_code(const CssCode &c, const BasisAssignment &a,
                                 std::optional<FieldBasis> enumeration = std::nullopt) {
    if (!(a.field() == c.field())) fail(ErrorKind::FieldMismatch, "code and assignment over different fields");
    if (a.size() != c.length()) fail(ErrorKind::DimensionMismatch, "one basis per qudit required");
    FieldBasis e = enumeration.value_or(polynomial_basis(c.field()));
    QubitCssCode out;
    out.num_qubits = c.length() * c.field().degree();
    out.hx = detail::expand_rows(a, c.gx(), e);
    out.hz = detail::expand_rows(a.dual(), c.gz(), e);
    if (!out.hx.mul_transpose(out.hz).is_zero()) fail(ErrorKind::Internal, "converted checks do not commute");
    return out;
}

struct QubitLogicalSpaces {
    BitMatrix z_space;  // D_B*(L_X^perp)
    BitMatrix x_space;  // D_B(L_Z^perp)
};

inline QubitLogicalSpaces convert_logicals(const CssCode &c, const BasisAssignment &a) {
    FieldBasis e = polynomial_basis(c.field());
    return {detail::expand_rows(a.dual(), dual_space(c.gx()), e), detail::expand_rows(a, dual_space(c.gz()), e)};
}

/// Qubit checks for each qudit check: the s words D(b_i v_j) for b_i in the
/// check's own expansion basis.
struct MeasurementPlan {
    std::vector<FieldBasis> x_bases;
    std::vector<FieldBasis> z_bases;
    BitMatrix x_checks;  // s K_X rows, grouped per qudit check
    BitMatrix z_checks;  // s K_Z rows
};

inline MeasurementPlan make_plan(const CssCode &c, const BasisAssignment &a,
                                 std::optional<std::vector<FieldBasis>> x_bases = std::nullopt,
                                 std::optional<std::vector<FieldBasis>> z_bases = std::nullopt) {
    const auto &f = c.field();
    FieldBasis sd = find_self_dual(f);
    MeasurementPlan p{x_bases.value_or(std::vector<FieldBasis>(c.gx().rows(), sd)),
                      z_bases.value_or(std::vector<FieldBasis>(c.gz().rows(), sd)), BitMatrix(c.length() * f.degree()),
                      BitMatrix(c.length() * f.degree())};
    if (p.x_bases.size() != c.gx().rows() || p.z_bases.size() != c.gz().rows()) {
        fail(ErrorKind::DimensionMismatch, "one expansion basis per qudit check required");
    }
    BasisAssignment ad = a.dual();
    for (std::size_t j = 0; j < c.gx().rows(); ++j) {
        FqMatrix row(f, c.length(), {c.gx().row(j)});
        auto block = detail::expand_rows(a, row, p.x_bases[j]);
        for (const auto &r : block.row_list()) p.x_checks.push_row(r);
    }
    for (std::size_t j = 0; j < c.gz().rows(); ++j) {
        FqMatrix row(f, c.length(), {c.gz().row(j)});
        auto block = detail::expand_rows(ad, row, p.z_bases[j]);
        for (const auto &r : block.row_list()) p.z_checks.push_row(r);
    }
    return p;
}

/// The unique eta with tr(b_i eta) = bits_i.
inline Code reconstruct_syndrome(const BitVector &bits, const FieldBasis &b) { return recover_from_traces(b, bits); }

struct QubitError {
    BitVector x;  // X-type flips
    BitVector z;  // Z-type flips
};

namespace detail {

/// F_q syndrome components of the qudit checks from measured qubit bits.
inline FqVector qudit_syndromes(const BitMatrix &checks, const std::vector<FieldBasis> &bases, const BitVector &err) {
    BitVector bits = checks.apply(err);
    const unsigned s = bases.empty() ? 0 : bases.front().size();
    FqVector out(bases.size());
    for (std::size_t j = 0; j < bases.size(); ++j) {
        BitVector group(s);
        for (unsigned i = 0; i < s; ++i) group.set(i, bits.get(j * s + i));
        out[j] = reconstruct_syndrome(group, bases[j]);
    }
    return out;
}

/// The qudit error of weight within the radius of `code` whose checks against
/// `checks` give `syndrome`.
inline FqVector decode_syndrome(const FqMatrix &checks, const FqVector &syndrome, const GrsCode &code) {
    if (hamming_weight(syndrome) == 0) return FqVector(checks.cols(), 0);
    auto w0 = checks.solve_right(syndrome);
    if (!w0) fail(ErrorKind::DecodeFailure, "syndrome inconsistent with the checks");
    return decode(code, *w0).error;
}

}  // namespace detail

/// Qubit syndrome bits -> F_q syndrome components -> GRS decoding -> qubit error.
/// Z flips are seen by the X checks and decoded in L_X^perp; X flips by the Z
/// checks and decoded in L_Z^perp.
inline QubitError end_to_end_decode(const QrsCode &qrs, const BasisAssignment &a, const MeasurementPlan &plan,
                                    const QubitError &err) {
    const auto &c = qrs.css();
    FqVector sz = detail::qudit_syndromes(plan.x_checks, plan.x_bases, err.z);
    FqVector sx = detail::qudit_syndromes(plan.z_checks, plan.z_bases, err.x);
    FqVector wz = detail::decode_syndrome(c.gx(), sz, qrs.x_perp_code());
    FqVector wx = detail::decode_syndrome(c.gz(), sx, qrs.z_perp_code());
    return {expand_vector(a, wx), expand_dual(a, wz)};
}

}  // namespace gq
