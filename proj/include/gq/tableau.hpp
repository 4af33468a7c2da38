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

// CSS stabiliser tableaux over F_q with F_q-valued syndromes.
//
// A row v with syndrome sigma in the X block asserts
//   X^{mu v} |psi> = (-1)^{tr(mu sigma)} |psi>   for every mu in F_q,
// and likewise for the Z block. Row operations transform syndromes
// covariantly: scaling a row by mu scales its syndrome by mu, and adding row i
// into row j adds sigma_i into sigma_j.

#pragma once

#include <array>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gq/pauli.hpp"

namespace gq {

enum class Block { X, Z };

inline std::string_view to_string(Block b) { return b == Block::X ? "X" : "Z"; }

class CssTableau {
   public:
    CssTableau(FqMatrix xrows, FqMatrix zrows, FqVector xsyn, FqVector zsyn)
        : x_(std::move(xrows)), z_(std::move(zrows)), xsyn_(std::move(xsyn)), zsyn_(std::move(zsyn)) {
        validate();
    }

    /// Empty tableau on n qudits.
    static CssTableau empty(const Field &f, std::size_t n) { return {FqMatrix(f, n), FqMatrix(f, n), {}, {}}; }

    const Field &field() const { return x_.field(); }
    std::size_t num_qudits() const { return x_.cols(); }
    const FqMatrix &xrows() const { return x_; }
    const FqMatrix &zrows() const { return z_; }
    const FqVector &xsyn() const { return xsyn_; }
    const FqVector &zsyn() const { return zsyn_; }
    const FqMatrix &rows(Block b) const { return b == Block::X ? x_ : z_; }
    const FqVector &syndromes(Block b) const { return b == Block::X ? xsyn_ : zsyn_; }
    bool is_full() const { return x_.rows() + z_.rows() == num_qudits(); }

    friend bool operator==(const CssTableau &, const CssTableau &) = default;

   private:
    friend class TableauEditor;

    void validate() const {
        if (!(x_.field() == z_.field())) fail(ErrorKind::FieldMismatch, "blocks over different fields");
        if (x_.cols() != z_.cols()) fail(ErrorKind::DimensionMismatch, "blocks on different qudit counts");
        if (xsyn_.size() != x_.rows() || zsyn_.size() != z_.rows()) {
            fail(ErrorKind::DimensionMismatch, "one syndrome per row required");
        }
        for (auto c : xsyn_) {
            if (!field().contains(c)) fail(ErrorKind::DimensionMismatch, "syndrome outside the field");
        }
        for (auto c : zsyn_) {
            if (!field().contains(c)) fail(ErrorKind::DimensionMismatch, "syndrome outside the field");
        }
        if (x_.rank() != x_.rows()) fail(ErrorKind::RankDeficient, "X rows are dependent");
        if (z_.rank() != z_.rows()) fail(ErrorKind::RankDeficient, "Z rows are dependent");
        if (!x_.mul_transpose(z_).is_zero()) fail(ErrorKind::NotCommuting, "an X row is not orthogonal to a Z row");
    }

    FqMatrix x_;
    FqMatrix z_;
    FqVector xsyn_;
    FqVector zsyn_;
};

inline CssTableau new_tableau(FqMatrix xrows, FqMatrix zrows, FqVector xsyn, FqVector zsyn) {
    return {std::move(xrows), std::move(zrows), std::move(xsyn), std::move(zsyn)};
}

/// Builds modified tableaux; every result is revalidated on construction.
class TableauEditor {
   public:
    explicit TableauEditor(const CssTableau &t) : x_(t.x_), z_(t.z_), xsyn_(t.xsyn_), zsyn_(t.zsyn_) {}

    FqMatrix &rows(Block b) { return b == Block::X ? x_ : z_; }
    FqVector &syndromes(Block b) { return b == Block::X ? xsyn_ : zsyn_; }

    CssTableau finish() && { return {std::move(x_), std::move(z_), std::move(xsyn_), std::move(zsyn_)}; }

   private:
    FqMatrix x_;
    FqMatrix z_;
    FqVector xsyn_;
    FqVector zsyn_;
};

/// Row j of the block multiplied by mu != 0; its syndrome scales by mu.
inline CssTableau scale_row(const CssTableau &t, Block block, std::size_t j, Code mu) {
    if (mu == 0) fail(ErrorKind::InvalidScale, "cannot scale a row by zero");
    if (j >= t.rows(block).rows()) fail(ErrorKind::DimensionMismatch, "row index out of range");
    const auto &f = t.field();
    TableauEditor e(t);
    for (auto &c : e.rows(block).row(j)) c = f.mul(c, mu);
    e.syndromes(block)[j] = f.mul(e.syndromes(block)[j], mu);
    return std::move(e).finish();
}

/// Row i added into row j; syndrome j gains syndrome i.
inline CssTableau add_row(const CssTableau &t, Block block, std::size_t i, std::size_t j) {
    if (i == j) fail(ErrorKind::DimensionMismatch, "cannot add a row to itself");
    if (i >= t.rows(block).rows() || j >= t.rows(block).rows()) {
        fail(ErrorKind::DimensionMismatch, "row index out of range");
    }
    TableauEditor e(t);
    auto &m = e.rows(block);
    for (std::size_t c = 0; c < m.cols(); ++c) m.row(j)[c] ^= m.row(i)[c];
    e.syndromes(block)[j] ^= e.syndromes(block)[i];
    return std::move(e).finish();
}

/// Reduced row echelon form of each block, pivots normalised to 1, syndromes
/// carried. Two tableaux define the same state iff their canonical forms agree.
inline CssTableau canonical_form(const CssTableau &t) {
    TableauEditor e(t);
    for (Block b : {Block::X, Block::Z}) e.rows(b).rref(&e.syndromes(b));
    return std::move(e).finish();
}

struct TableauGate {
    enum class Kind { Cnot, Hadamard, Mult };
    Kind kind;
    std::size_t a = 0;  // control, or the single site
    std::size_t b = 0;  // target for CNOT
    Code delta = 1;     // multiplier for Mult

    static TableauGate cnot(std::size_t control, std::size_t target) { return {Kind::Cnot, control, target, 1}; }
    static TableauGate hadamard(std::size_t site) { return {Kind::Hadamard, site, 0, 1}; }
    static TableauGate mult(std::size_t site, Code delta) { return {Kind::Mult, site, 0, delta}; }
};

/// Conjugation update of every stabiliser row; syndromes are unchanged.
///   CNOT(i,j): X rows x_j += x_i, Z rows z_i += z_j.
///   H(i):      column i moves between blocks; legal only when each row
///              touching site i is supported on site i alone.
///   M^delta(i): X rows x_i *= delta, Z rows z_i *= delta^{-1}.
inline CssTableau apply_gate(const CssTableau &t, const TableauGate &g) {
    const auto &f = t.field();
    const std::size_t n = t.num_qudits();
    if (g.a >= n || (g.kind == TableauGate::Kind::Cnot && (g.b >= n || g.b == g.a))) {
        fail(ErrorKind::DimensionMismatch, "gate site out of range");
    }
    TableauEditor e(t);
    switch (g.kind) {
        case TableauGate::Kind::Cnot: {
            auto &xr = e.rows(Block::X);
            for (std::size_t r = 0; r < xr.rows(); ++r) xr.row(r)[g.b] ^= xr.row(r)[g.a];
            auto &zr = e.rows(Block::Z);
            for (std::size_t r = 0; r < zr.rows(); ++r) zr.row(r)[g.a] ^= zr.row(r)[g.b];
            break;
        }
        case TableauGate::Kind::Mult: {
            if (g.delta == 0) fail(ErrorKind::NonUnitary, "multiplication gate needs delta != 0");
            Code d_inv = f.inv(g.delta);
            auto &xr = e.rows(Block::X);
            for (std::size_t r = 0; r < xr.rows(); ++r) xr.row(r)[g.a] = f.mul(xr.row(r)[g.a], g.delta);
            auto &zr = e.rows(Block::Z);
            for (std::size_t r = 0; r < zr.rows(); ++r) zr.row(r)[g.a] = f.mul(zr.row(r)[g.a], d_inv);
            break;
        }
        case TableauGate::Kind::Hadamard: {
            std::array<FqMatrix, 2> next{FqMatrix(f, n), FqMatrix(f, n)};
            std::array<FqVector, 2> next_syn;
            for (Block b : {Block::X, Block::Z}) {
                const auto &m = t.rows(b);
                const auto &syn = t.syndromes(b);
                for (std::size_t r = 0; r < m.rows(); ++r) {
                    const auto &row = m.row(r);
                    bool moves = row[g.a] != 0;
                    if (moves && hamming_weight(row) != 1) {
                        fail(ErrorKind::NotCssPreserving, "Hadamard would produce a mixed-type row");
                    }
                    Block dest = moves ? (b == Block::X ? Block::Z : Block::X) : b;
                    std::size_t k = dest == Block::X ? 0 : 1;
                    next[k].push_row(row);
                    next_syn[k].push_back(syn[r]);
                }
            }
            return {std::move(next[0]), std::move(next[1]), std::move(next_syn[0]), std::move(next_syn[1])};
        }
    }
    return std::move(e).finish();
}

struct TableauMeasurement {
    Code outcome;
    bool deterministic;
    CssTableau tableau;
};

/// Measures the syndrome component of a pure-type word on a full tableau.
///
/// Deterministic branch: w = sum_j c_j v_j in the same-type block gives
/// outcome sum_j c_j sigma_j and leaves the tableau unchanged. Random branch:
/// the outcome is uniform over F_q; the first opposite-type row u with
/// w.u = c != 0 is used to clear w-overlap from the other opposite-type rows
/// (u' -= (w.u'/c) u, syndromes alike), then removed, and (w, outcome) is
/// appended to the same-type block.
template <class Rng>
TableauMeasurement measure(const CssTableau &t, const PauliWord &p, Rng &rng) {
    if (!t.is_full()) fail(ErrorKind::FullTableauRequired, "measurement needs a full tableau");
    if (!p.is_pure()) fail(ErrorKind::PureTypeRequired, "measurement needs a pure-type word");
    if (!(p.field() == t.field()) || p.size() != t.num_qudits()) {
        fail(ErrorKind::DimensionMismatch, "word does not match the tableau");
    }
    const auto &f = t.field();
    if (p.is_identity()) return {0, true, t};
    Block same = p.has_x() ? Block::X : Block::Z;
    Block other = same == Block::X ? Block::Z : Block::X;
    const FqVector &w = same == Block::X ? p.x() : p.z();

    if (auto coeffs = t.rows(same).solve_combination(w)) {
        return {dot(f, *coeffs, t.syndromes(same)), true, t};
    }

    const auto &opp = t.rows(other);
    std::size_t pick = opp.rows();
    for (std::size_t r = 0; r < opp.rows(); ++r) {
        if (dot(f, w, opp.row(r)) != 0) {
            pick = r;
            break;
        }
    }
    if (pick == opp.rows()) fail(ErrorKind::Internal, "word outside the stabiliser group commutes with all rows");

    std::uniform_int_distribution<Code> dist(0, f.order() - 1);
    Code outcome = dist(rng);

    TableauEditor e(t);
    auto &orows = e.rows(other);
    auto &osyn = e.syndromes(other);
    Code c_inv = f.inv(dot(f, w, orows.row(pick)));
    for (std::size_t r = 0; r < orows.rows(); ++r) {
        if (r == pick) continue;
        Code overlap = dot(f, w, orows.row(r));
        if (overlap == 0) continue;
        Code lambda = f.mul(overlap, c_inv);
        for (std::size_t k = 0; k < orows.cols(); ++k) orows.row(r)[k] ^= f.mul(lambda, orows.row(pick)[k]);
        osyn[r] ^= f.mul(lambda, osyn[pick]);
    }
    orows.erase_row(pick);
    osyn.erase(osyn.begin() + static_cast<std::ptrdiff_t>(pick));
    e.rows(same).push_row(w);
    e.syndromes(same).push_back(outcome);
    return {outcome, false, std::move(e).finish()};
}

/// A uniformly chosen split m_X + m_Z = n with random generators and syndromes.
template <class Rng>
CssTableau random_full_tableau(const Field &f, std::size_t n, Rng &rng) {
    const std::size_t mx = std::uniform_int_distribution<std::size_t>(0, n)(rng);
    FqMatrix gx(f, n);
    do {
        gx = FqMatrix(f, n);
        for (std::size_t i = 0; i < mx; ++i) gx.push_row(random_vector(f, n, rng));
    } while (gx.rank() != mx);
    FqMatrix kernel = gx.kernel();
    const std::size_t mz = kernel.rows();
    FqMatrix gz(f, n);
    while (true) {
        FqMatrix mix(f, mz);
        for (std::size_t i = 0; i < mz; ++i) mix.push_row(random_vector(f, mz, rng));
        if (mz > 0 && !mix.inverse()) continue;
        for (std::size_t i = 0; i < mz; ++i) gz.push_row(kernel.combine(mix.row(i)));
        break;
    }
    FqVector xs = random_vector(f, mx, rng);
    FqVector zs = random_vector(f, mz, rng);
    return {std::move(gx), std::move(gz), std::move(xs), std::move(zs)};
}

struct CatGadgetResult {
    Code recovered = 0;
    std::array<Code, 4> outcomes{};
    Code predicted_fourth = 0;
    bool fourth_deterministic = false;
    CssTableau after_three;
    CssTableau final_tableau;
};

/// Builds the 4-qudit cat state with checks weighted by gamma next to a
/// 4-qudit code block carrying syndrome eta under X^{gamma}, measures XX on
/// the four pairs (cat qudit j, block qudit j) and returns sum_i gamma_i eta_i.
///
/// The code block is completed to a full tableau by X rows e_1, e_2, e_3 with
/// random syndromes so that the measurement rule applies; these rows do not
/// involve eta.
template <class Rng>
CatGadgetResult run_cat_gadget(const Field &f, const std::array<Code, 4> &gamma, Code eta, Rng &rng) {
    for (auto g : gamma) {
        if (g == 0) fail(ErrorKind::InvalidScale, "cat-state weights must be nonzero");
    }
    if (!f.contains(eta)) fail(ErrorKind::DimensionMismatch, "syndrome outside the field");
    const std::size_t n = 8;
    FqMatrix xr(f, n), zr(f, n);
    FqVector xs, zs;
    xr.push_row({gamma[0], gamma[1], gamma[2], gamma[3], 0, 0, 0, 0});
    xs.push_back(0);
    zr.push_row({gamma[1], gamma[0], 0, 0, 0, 0, 0, 0});
    zr.push_row({0, gamma[2], gamma[1], 0, 0, 0, 0, 0});
    zr.push_row({0, 0, gamma[3], gamma[2], 0, 0, 0, 0});
    zs.assign(3, 0);
    xr.push_row({0, 0, 0, 0, gamma[0], gamma[1], gamma[2], gamma[3]});
    xs.push_back(eta);
    std::uniform_int_distribution<Code> dist(0, f.order() - 1);
    for (std::size_t j = 0; j < 3; ++j) {
        FqVector r(n, 0);
        r[4 + j] = 1;
        xr.push_row(std::move(r));
        xs.push_back(dist(rng));
    }
    CssTableau t(std::move(xr), std::move(zr), std::move(xs), std::move(zs));

    CatGadgetResult res{0, {}, 0, false, t, t};
    for (std::size_t j = 0; j < 4; ++j) {
        if (j == 3) {
            res.after_three = t;
            Code acc = eta;
            for (std::size_t i = 0; i < 3; ++i) acc ^= f.mul(gamma[i], res.outcomes[i]);
            res.predicted_fourth = f.mul(f.inv(gamma[3]), acc);
        }
        FqVector w(n, 0);
        w[j] = 1;
        w[4 + j] = 1;
        auto m = measure(t, PauliWord::x_type(f, w), rng);
        res.outcomes[j] = m.outcome;
        if (j == 3) res.fourth_deterministic = m.deterministic;
        t = std::move(m.tableau);
    }
    res.final_tableau = t;
    for (std::size_t i = 0; i < 4; ++i) res.recovered ^= f.mul(gamma[i], res.outcomes[i]);
    return res;
}

}  // namespace gq
