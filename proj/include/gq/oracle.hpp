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

// Brute-force dense simulation of n Galois qudits, used as ground truth.
//
// Basis kets |u_0 ... u_{n-1}> are indexed with u_0 as the most significant
// digit; since q = 2^s the index is the concatenation of the s-bit codes.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <optional>
#include <random>
#include <vector>

#include "gq/tableau.hpp"

namespace gq {

using Complex = std::complex<double>;

inline constexpr double kOracleTolerance = 1e-8;

/// Largest q^n the dense routines will build. Adjustable for experiments.
inline std::size_t &dense_dimension_cap() {
    static std::size_t cap = std::size_t{1} << 14;
    return cap;
}

inline std::size_t hilbert_dimension(const Field &f, std::size_t n) {
    const std::size_t bits = static_cast<std::size_t>(f.degree()) * n;
    if (bits >= 63 || (std::size_t{1} << bits) > dense_dimension_cap()) {
        fail(ErrorKind::TooLarge, "q^n exceeds the dense dimension cap");
    }
    return std::size_t{1} << bits;
}

struct StateVector {
    Field field;
    std::size_t n;
    Eigen::VectorXcd amps;

    StateVector(Field f, std::size_t qudits) : field(std::move(f)), n(qudits), amps(Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(hilbert_dimension(field, n)))) {}

    std::size_t dimension() const { return static_cast<std::size_t>(amps.size()); }
};

struct DenseOperator {
    Field field;
    std::size_t n;
    Eigen::MatrixXcd matrix;

    DenseOperator(Field f, std::size_t qudits) : field(std::move(f)), n(qudits) {
        auto d = static_cast<Eigen::Index>(hilbert_dimension(field, n));
        matrix = Eigen::MatrixXcd::Zero(d, d);
    }
    DenseOperator(Field f, std::size_t qudits, Eigen::MatrixXcd m) : field(std::move(f)), n(qudits), matrix(std::move(m)) {
        auto d = static_cast<Eigen::Index>(hilbert_dimension(field, n));
        if (matrix.rows() != d || matrix.cols() != d) fail(ErrorKind::DimensionMismatch, "matrix size is not q^n");
    }

    std::size_t dimension() const { return static_cast<std::size_t>(matrix.rows()); }
};

namespace detail {

inline std::size_t ket_index(const Field &f, const FqVector &u) {
    std::size_t idx = 0;
    for (auto c : u) idx = (idx << f.degree()) | c;
    return idx;
}

inline FqVector ket_digits(const Field &f, std::size_t n, std::size_t idx) {
    FqVector u(n);
    const std::size_t mask = f.order() - 1;
    for (std::size_t i = n; i-- > 0;) {
        u[i] = static_cast<Code>(idx & mask);
        idx >>= f.degree();
    }
    return u;
}

inline void check_word(const Field &f, std::size_t n, const PauliWord &p) {
    if (!(p.field() == f)) fail(ErrorKind::FieldMismatch, "word and state over different fields");
    if (p.size() != n) fail(ErrorKind::DimensionMismatch, "word length differs from qudit count");
}

}  // namespace detail

inline StateVector basis_state(const Field &f, const FqVector &u) {
    StateVector s(f, u.size());
    s.amps[static_cast<Eigen::Index>(detail::ket_index(f, u))] = 1.0;
    return s;
}

/// P|psi> without building the matrix: X^x Z^z |u> = (-1)^{tr(z.u)} |u + x>.
inline StateVector apply_pauli(const PauliWord &p, const StateVector &psi) {
    detail::check_word(psi.field, psi.n, p);
    const auto &f = psi.field;
    StateVector out(f, psi.n);
    const std::size_t shift = detail::ket_index(f, p.x());
    for (std::size_t idx = 0; idx < psi.dimension(); ++idx) {
        Complex a = psi.amps[static_cast<Eigen::Index>(idx)];
        if (a == Complex{}) continue;
        auto u = detail::ket_digits(f, psi.n, idx);
        double sign = p.sign();
        if (f.trace(dot(f, p.z(), u)) != 0) sign = -sign;
        out.amps[static_cast<Eigen::Index>(idx ^ shift)] = sign * a;
    }
    return out;
}

inline DenseOperator pauli_matrix(const PauliWord &p) {
    const auto &f = p.field();
    DenseOperator op(f, p.size());
    const std::size_t shift = detail::ket_index(f, p.x());
    for (std::size_t idx = 0; idx < op.dimension(); ++idx) {
        auto u = detail::ket_digits(f, p.size(), idx);
        double sign = p.sign();
        if (f.trace(dot(f, p.z(), u)) != 0) sign = -sign;
        op.matrix(static_cast<Eigen::Index>(idx ^ shift), static_cast<Eigen::Index>(idx)) = sign;
    }
    return op;
}

/// Projector onto syndrome component eta: q^{-1} sum_mu (-1)^{tr(mu eta)} P^mu.
inline DenseOperator projector(const PauliWord &p, Code eta) {
    if (!p.is_pure()) fail(ErrorKind::PureTypeRequired, "projector needs a pure-type word");
    const auto &f = p.field();
    DenseOperator out(f, p.size());
    for (Code mu = 0; mu < f.order(); ++mu) {
        double c = f.trace(f.mul(mu, eta)) ? -1.0 : 1.0;
        out.matrix += c * pauli_matrix(power(p, mu)).matrix;
    }
    out.matrix /= static_cast<double>(f.order());
    return out;
}

/// True when a and b agree up to a global phase within tol.
inline bool equal_up_to_phase(const StateVector &a, const StateVector &b, double tol = kOracleTolerance) {
    if (!(a.field == b.field) || a.n != b.n) return false;
    Eigen::Index k = 0;
    a.amps.cwiseAbs().maxCoeff(&k);
    if (std::abs(a.amps[k]) < tol || std::abs(b.amps[k]) < tol) return false;
    Complex phase = b.amps[k] / a.amps[k];
    return (b.amps - phase * a.amps).cwiseAbs().maxCoeff() < tol;
}

/// The unique eta with P^mu |psi> = (-1)^{tr(mu eta)} |psi> for all mu, if any.
inline std::optional<Code> syndrome_component(const StateVector &psi, const PauliWord &p) {
    if (!p.is_pure()) fail(ErrorKind::PureTypeRequired, "syndrome component needs a pure-type word");
    detail::check_word(psi.field, psi.n, p);
    const auto &f = psi.field;
    std::vector<Eigen::VectorXcd> images;
    for (Code mu = 0; mu < f.order(); ++mu) images.push_back(apply_pauli(power(p, mu), psi).amps);
    for (Code eta = 0; eta < f.order(); ++eta) {
        bool fits = true;
        for (Code mu = 0; mu < f.order() && fits; ++mu) {
            double c = f.trace(f.mul(mu, eta)) ? -1.0 : 1.0;
            fits = (images[mu] - c * psi.amps).cwiseAbs().maxCoeff() < kOracleTolerance;
        }
        if (fits) return eta;
    }
    return std::nullopt;
}

/// Whether psi satisfies every defining equation of the tableau, compared
/// amplitude by amplitude without tolerance.
inline bool satisfies_tableau(const StateVector &psi, const CssTableau &t) {
    const auto &f = t.field();
    for (Block b : {Block::X, Block::Z}) {
        const auto &rows = t.rows(b);
        for (std::size_t r = 0; r < rows.rows(); ++r) {
            PauliWord w = b == Block::X ? PauliWord::x_type(f, rows.row(r)) : PauliWord::z_type(f, rows.row(r));
            for (Code mu = 0; mu < f.order(); ++mu) {
                double c = f.trace(f.mul(mu, t.syndromes(b)[r])) ? -1.0 : 1.0;
                if (apply_pauli(power(w, mu), psi).amps != c * psi.amps) return false;
            }
        }
    }
    return true;
}

/// The state defined by a full tableau, proportional to
/// sum_{u in L_X} (-1)^{tr(u.t0)} |x0 + u>, where gz x0 = zsyn and gx t0 = xsyn.
inline StateVector stabiliser_state(const CssTableau &t) {
    if (!t.is_full()) fail(ErrorKind::FullTableauRequired, "the state is only defined by a full tableau");
    const auto &f = t.field();
    const std::size_t n = t.num_qudits();
    auto x0 = t.zrows().solve_right(t.zsyn());
    auto t0 = t.xrows().solve_right(t.xsyn());
    if (!x0 || !t0) fail(ErrorKind::Internal, "syndrome constraints are inconsistent");
    StateVector psi(f, n);
    const std::size_t m = t.xrows().rows();
    const double amp = 1.0 / std::sqrt(std::pow(static_cast<double>(f.order()), static_cast<double>(m)));
    FqVector coeffs(m, 0);
    while (true) {
        FqVector u = t.xrows().combine(coeffs);
        double sign = f.trace(dot(f, u, *t0)) ? -1.0 : 1.0;
        for (std::size_t i = 0; i < n; ++i) u[i] ^= (*x0)[i];
        psi.amps[static_cast<Eigen::Index>(detail::ket_index(f, u))] = sign * amp;
        std::size_t k = 0;
        while (k < m && ++coeffs[k] == f.order()) coeffs[k++] = 0;
        if (k == m) break;
    }
    if (!satisfies_tableau(psi, t)) fail(ErrorKind::Internal, "constructed state violates the tableau");
    return psi;
}

struct ProjectiveOutcome {
    Code outcome;
    StateVector state;
    std::vector<double> probabilities;
};

/// Born-rule sampling of the syndrome component of a pure-type word, with
/// collapse and renormalisation.
template <class Rng>
ProjectiveOutcome measure_projective(const StateVector &psi, const PauliWord &p, Rng &rng) {
    if (!p.is_pure()) fail(ErrorKind::PureTypeRequired, "measurement needs a pure-type word");
    detail::check_word(psi.field, psi.n, p);
    const auto &f = psi.field;
    const Code q = f.order();
    std::vector<Eigen::VectorXcd> images;
    for (Code mu = 0; mu < q; ++mu) images.push_back(apply_pauli(power(p, mu), psi).amps);
    std::vector<Eigen::VectorXcd> branches;
    std::vector<double> probs;
    for (Code eta = 0; eta < q; ++eta) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(psi.amps.size());
        for (Code mu = 0; mu < q; ++mu) v += (f.trace(f.mul(mu, eta)) ? -1.0 : 1.0) * images[mu];
        v /= static_cast<double>(q);
        probs.push_back(v.squaredNorm());
        branches.push_back(std::move(v));
    }
    double total = 0;
    for (double x : probs) total += x;
    double r = std::uniform_real_distribution<double>(0.0, total)(rng);
    Code pick = q - 1;
    double acc = 0;
    for (Code eta = 0; eta < q; ++eta) {
        acc += probs[eta];
        if (r < acc && probs[eta] > 0) {
            pick = eta;
            break;
        }
    }
    while (probs[pick] <= 0 && pick > 0) --pick;
    StateVector out(f, psi.n);
    out.amps = branches[pick] / std::sqrt(probs[pick]);
    return {pick, std::move(out), std::move(probs)};
}

/// Dimension of the joint +1 space of all X^{mu g} (g a gx row) and Z^{mu h}
/// (h a gz row), computed as the trace of the product of projectors.
inline std::size_t codespace_dimension(const FqMatrix &gx, const FqMatrix &gz) {
    const auto &f = gx.field();
    const std::size_t n = gx.cols();
    const std::size_t dim = hilbert_dimension(f, n);
    std::vector<PauliWord> checks;
    for (std::size_t r = 0; r < gx.rows(); ++r) checks.push_back(PauliWord::x_type(f, gx.row(r)));
    for (std::size_t r = 0; r < gz.rows(); ++r) checks.push_back(PauliWord::z_type(f, gz.row(r)));
    double tr = 0;
    for (std::size_t idx = 0; idx < dim; ++idx) {
        StateVector v(f, n);
        v.amps[static_cast<Eigen::Index>(idx)] = 1.0;
        for (const auto &c : checks) {
            StateVector acc(f, n);
            for (Code mu = 0; mu < f.order(); ++mu) acc.amps += apply_pauli(power(c, mu), v).amps;
            acc.amps /= static_cast<double>(f.order());
            v = std::move(acc);
        }
        tr += v.amps[static_cast<Eigen::Index>(idx)].real();
    }
    return static_cast<std::size_t>(std::llround(tr));
}

}  // namespace gq
