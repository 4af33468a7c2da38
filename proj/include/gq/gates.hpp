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

// Dense gate matrices, Pauli expansion, Clifford hierarchy levels, and the
// qudit-to-qubit relabelling maps.

#pragma once

#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "gq/bases.hpp"
#include "gq/oracle.hpp"

namespace gq {

enum class GateKind { X, Z, Hadamard, Mult, Cnot, Ccz, MultiCz, Un, S, T };

struct GateSpec {
    GateKind kind;
    Code param = 1;      // beta, gamma or delta depending on kind
    unsigned arity = 0;  // l for multi_cz
    unsigned power = 1;  // n for u_n

    static GateSpec x(Code beta) { return {GateKind::X, beta}; }
    static GateSpec z(Code gamma) { return {GateKind::Z, gamma}; }
    static GateSpec hadamard() { return {GateKind::Hadamard, 0}; }
    static GateSpec mult(Code delta) { return {GateKind::Mult, delta}; }
    static GateSpec cnot() { return {GateKind::Cnot, 0}; }
    static GateSpec ccz(Code gamma) { return {GateKind::Ccz, gamma}; }
    static GateSpec multi_cz(unsigned l, Code gamma) { return {GateKind::MultiCz, gamma, l}; }
    static GateSpec u_n(unsigned n, Code beta) { return {GateKind::Un, beta, 0, n}; }
    static GateSpec s(Code gamma) { return {GateKind::S, gamma}; }
    static GateSpec t(Code gamma) { return {GateKind::T, gamma}; }
};

inline std::string gate_name(GateKind k) {
    switch (k) {
        case GateKind::X: return "x";
        case GateKind::Z: return "z";
        case GateKind::Hadamard: return "hadamard";
        case GateKind::Mult: return "mult";
        case GateKind::Cnot: return "cnot";
        case GateKind::Ccz: return "ccz";
        case GateKind::MultiCz: return "multi_cz";
        case GateKind::Un: return "u_n";
        case GateKind::S: return "s";
        case GateKind::T: return "t";
    }
    return "?";
}

inline GateKind parse_gate_kind(const std::string &name) {
    for (auto k : {GateKind::X, GateKind::Z, GateKind::Hadamard, GateKind::Mult, GateKind::Cnot, GateKind::Ccz,
                   GateKind::MultiCz, GateKind::Un, GateKind::S, GateKind::T}) {
        if (gate_name(k) == name) return k;
    }
    if (name == "h") return GateKind::Hadamard;
    if (name == "m") return GateKind::Mult;
    fail(ErrorKind::InvalidGate, "unknown gate '" + name + "'");
}

inline unsigned gate_arity(const GateSpec &g) {
    switch (g.kind) {
        case GateKind::Cnot: return 2;
        case GateKind::Ccz: return 3;
        case GateKind::MultiCz: return g.arity;
        default: return 1;
    }
}

namespace detail {

/// Diagonal gate |eta> -> phase(eta) |eta> on `arity` qudits.
inline DenseOperator diagonal_gate(const Field &f, std::size_t arity,
                                   const std::function<Complex(const FqVector &)> &phase) {
    DenseOperator op(f, arity);
    for (std::size_t idx = 0; idx < op.dimension(); ++idx) {
        auto i = static_cast<Eigen::Index>(idx);
        op.matrix(i, i) = phase(ket_digits(f, arity, idx));
    }
    return op;
}

inline Complex sign_of(Code bit) { return bit ? -1.0 : 1.0; }

}  // namespace detail

inline DenseOperator build_gate(const Field &f, const GateSpec &g) {
    if (!f.contains(g.param)) fail(ErrorKind::InvalidGate, "gate parameter outside the field");
    switch (g.kind) {
        case GateKind::X: return pauli_matrix(PauliWord::x_type(f, {g.param}));
        case GateKind::Z: return pauli_matrix(PauliWord::z_type(f, {g.param}));
        case GateKind::Hadamard: {
            DenseOperator op(f, 1);
            const double norm = 1.0 / std::sqrt(static_cast<double>(f.order()));
            for (Code mu = 0; mu < f.order(); ++mu) {
                for (Code eta = 0; eta < f.order(); ++eta) op.matrix(mu, eta) = norm * detail::sign_of(f.trace(f.mul(mu, eta)));
            }
            return op;
        }
        case GateKind::Mult: {
            if (g.param == 0) fail(ErrorKind::NonUnitary, "multiplication gate needs delta != 0");
            DenseOperator op(f, 1);
            for (Code eta = 0; eta < f.order(); ++eta) op.matrix(f.mul(g.param, eta), eta) = 1.0;
            return op;
        }
        case GateKind::Cnot: {
            DenseOperator op(f, 2);
            for (std::size_t idx = 0; idx < op.dimension(); ++idx) {
                auto u = detail::ket_digits(f, 2, idx);
                u[1] ^= u[0];
                op.matrix(static_cast<Eigen::Index>(detail::ket_index(f, u)), static_cast<Eigen::Index>(idx)) = 1.0;
            }
            return op;
        }
        case GateKind::Ccz:
        case GateKind::MultiCz: {
            std::size_t l = g.kind == GateKind::Ccz ? 3 : g.arity;
            if (l < 1) fail(ErrorKind::InvalidGate, "multi_cz needs at least one qudit");
            if (g.kind == GateKind::MultiCz && (l > 4 || f.order() > 4)) {
                fail(ErrorKind::TooLarge, "multi_cz is limited to l <= 4 and q <= 4");
            }
            return detail::diagonal_gate(f, l, [&](const FqVector &u) {
                Code prod = g.param;
                for (auto c : u) prod = f.mul(prod, c);
                return detail::sign_of(f.trace(prod));
            });
        }
        case GateKind::Un: {
            if (g.power < 1) fail(ErrorKind::InvalidGate, "u_n needs n >= 1");
            return detail::diagonal_gate(
                f, 1, [&](const FqVector &u) { return detail::sign_of(f.trace(f.mul(g.param, f.pow(u[0], g.power)))); });
        }
        case GateKind::S:
        case GateKind::T: {
            const double angle = g.kind == GateKind::S ? std::numbers::pi / 2 : std::numbers::pi / 4;
            return detail::diagonal_gate(f, 1, [&](const FqVector &u) {
                return std::polar(1.0, angle * static_cast<double>(f.trace(f.mul(g.param, u[0]))));
            });
        }
    }
    fail(ErrorKind::InvalidGate, "unknown gate kind");
}

/// A k-qudit operator acting on the listed sites of an n-qudit register.
inline DenseOperator embed(const DenseOperator &g, const std::vector<std::size_t> &sites, std::size_t n) {
    const auto &f = g.field;
    if (sites.size() != g.n) fail(ErrorKind::DimensionMismatch, "one site per gate qudit required");
    for (std::size_t i = 0; i < sites.size(); ++i) {
        if (sites[i] >= n) fail(ErrorKind::DimensionMismatch, "site out of range");
        for (std::size_t j = 0; j < i; ++j) {
            if (sites[i] == sites[j]) fail(ErrorKind::DimensionMismatch, "repeated site");
        }
    }
    DenseOperator out(f, n);
    for (std::size_t col = 0; col < out.dimension(); ++col) {
        auto u = detail::ket_digits(f, n, col);
        FqVector local(sites.size());
        for (std::size_t i = 0; i < sites.size(); ++i) local[i] = u[sites[i]];
        auto lc = static_cast<Eigen::Index>(detail::ket_index(f, local));
        for (std::size_t lr = 0; lr < g.dimension(); ++lr) {
            Complex a = g.matrix(static_cast<Eigen::Index>(lr), lc);
            if (a == Complex{}) continue;
            auto lu = detail::ket_digits(f, sites.size(), lr);
            auto v = u;
            for (std::size_t i = 0; i < sites.size(); ++i) v[sites[i]] = lu[i];
            out.matrix(static_cast<Eigen::Index>(detail::ket_index(f, v)), static_cast<Eigen::Index>(col)) = a;
        }
    }
    return out;
}

/// Coefficients c_P of U = sum_P c_P P over the words X^a Z^b (sign +1).
class PauliDecomposition {
   public:
    PauliDecomposition(Field f, std::size_t n, std::vector<Complex> coeffs)
        : field_(std::move(f)), n_(n), coeffs_(std::move(coeffs)) {}

    const Field &field() const { return field_; }
    std::size_t num_qudits() const { return n_; }
    std::size_t dimension() const { return std::size_t{1} << (field_.degree() * n_); }

    Complex coefficient(const FqVector &x, const FqVector &z) const {
        return coeffs_[detail::ket_index(field_, x) * dimension() + detail::ket_index(field_, z)];
    }

    struct Term {
        PauliWord word;
        Complex coefficient;
    };

    /// Terms with |c_P| above tol, in (x, z) index order.
    std::vector<Term> nonzero(double tol = kOracleTolerance) const {
        std::vector<Term> out;
        const std::size_t d = dimension();
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (std::abs(coeffs_[k]) <= tol) continue;
            out.push_back({PauliWord(field_, detail::ket_digits(field_, n_, k / d), detail::ket_digits(field_, n_, k % d)),
                           coeffs_[k]});
        }
        return out;
    }

    DenseOperator reconstruct() const {
        DenseOperator out(field_, n_);
        for (const auto &t : nonzero(0.0)) out.matrix += t.coefficient * pauli_matrix(t.word).matrix;
        return out;
    }

   private:
    Field field_;
    std::size_t n_;
    std::vector<Complex> coeffs_;
};

/// c_{a,b} = q^{-n} Tr((X^a Z^b)^dagger U) = q^{-n} sum_eta (-1)^{tr(b.eta)} U[eta+a, eta].
/// For each shift a the sum over eta is a Walsh-Hadamard transform, because
/// tr(b.eta) is the bit dot product of eta's code with the trace-dual
/// coordinates of b.
inline PauliDecomposition pauli_decompose(const DenseOperator &u) {
    const auto &f = u.field;
    const std::size_t n = u.n;
    const std::size_t d = u.dimension();
    const unsigned s = f.degree();
    // mask(b): bit (i*s + j) of the per-qudit block holds tr(b_i alpha^j).
    std::vector<Code> dual_mask(f.order(), 0);
    for (Code b = 0; b < f.order(); ++b) {
        for (unsigned j = 0; j < s; ++j) dual_mask[b] |= f.trace(f.mul(b, Code{1} << j)) << j;
    }
    std::vector<Complex> coeffs(d * d);
    std::vector<Complex> buf(d);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t eta = 0; eta < d; ++eta) {
            buf[eta] = u.matrix(static_cast<Eigen::Index>(eta ^ a), static_cast<Eigen::Index>(eta));
        }
        for (std::size_t h = 1; h < d; h <<= 1) {
            for (std::size_t i = 0; i < d; i += h << 1) {
                for (std::size_t j = i; j < i + h; ++j) {
                    Complex x = buf[j], y = buf[j + h];
                    buf[j] = x + y;
                    buf[j + h] = x - y;
                }
            }
        }
        for (std::size_t b = 0; b < d; ++b) {
            std::size_t m = 0;
            for (std::size_t i = 0; i < n; ++i) {
                Code bi = static_cast<Code>((b >> (s * (n - 1 - i))) & (f.order() - 1));
                m |= static_cast<std::size_t>(dual_mask[bi]) << (s * (n - 1 - i));
            }
            coeffs[a * d + b] = buf[m] / static_cast<double>(d);
        }
    }
    return {f, n, std::move(coeffs)};
}

/// Proportional to a single Pauli word: exactly one coefficient above tol.
inline bool is_pauli_like(const DenseOperator &u, double tol = kOracleTolerance) {
    return pauli_decompose(u).nonzero(tol).size() == 1;
}

struct PauliGenerator {
    std::size_t site;
    Block type;
    Code exponent;
};

/// X_i^{alpha^j} and Z_i^{alpha^j}: 2 n s words generating the Pauli group up to sign.
inline std::vector<PauliGenerator> pauli_generators(const Field &f, std::size_t n) {
    std::vector<PauliGenerator> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (Block b : {Block::X, Block::Z}) {
            for (unsigned j = 0; j < f.degree(); ++j) out.push_back({i, b, Code{1} << j});
        }
    }
    return out;
}

inline PauliWord generator_word(const Field &f, std::size_t n, const PauliGenerator &g) {
    FqVector v(n, 0);
    v[g.site] = g.exponent;
    return g.type == Block::X ? PauliWord::x_type(f, v) : PauliWord::z_type(f, v);
}

struct HierarchyReport {
    std::string gate;
    std::optional<unsigned> level;  // nullopt: above max_level
    unsigned max_level = 0;
    bool identity = false;          // proportional to the identity
    std::optional<PauliGenerator> witness;
};

inline constexpr std::size_t kHierarchyDimensionCap = std::size_t{1} << 9;

/// Membership tests for the Clifford hierarchy by recursion over generator
/// conjugates, memoised on the rounded matrix.
class HierarchyTester {
   public:
    explicit HierarchyTester(const Field &f, std::size_t n) : field_(f), n_(n) {
        if (hilbert_dimension(f, n) > kHierarchyDimensionCap) fail(ErrorKind::TooLarge, "hierarchy test needs q^n <= 2^9");
        for (const auto &g : pauli_generators(f, n)) generators_.push_back({g, pauli_matrix(generator_word(f, n, g)).matrix});
    }

    /// For k >= 2: a generator G such that U G U^dagger is outside level k-1.
    std::optional<PauliGenerator> first_failure(const Eigen::MatrixXcd &u, unsigned k) {
        if (k < 2) return std::nullopt;
        for (const auto &[g, m] : generators_) {
            Eigen::MatrixXcd conj = u * m * u.adjoint();
            if (!check(conj, k - 1)) return g;
        }
        return std::nullopt;
    }

    bool check(const Eigen::MatrixXcd &u, unsigned k) {
        if (k == 0) return false;
        auto key = std::make_pair(hash(u), k);
        auto &bucket = memo_[key.first];
        for (const auto &e : bucket) {
            if (e.level == k && (e.matrix - u).cwiseAbs().maxCoeff() < kOracleTolerance) return e.result;
        }
        bool result = k == 1 ? is_pauli_like(DenseOperator(field_, n_, u)) : !first_failure(u, k).has_value();
        memo_[key.first].push_back({u, k, result});
        return result;
    }

   private:
    struct Entry {
        Eigen::MatrixXcd matrix;
        unsigned level;
        bool result;
    };

    static std::size_t hash(const Eigen::MatrixXcd &u) {
        std::size_t h = 1469598103934665603ull;
        for (Eigen::Index i = 0; i < u.size(); ++i) {
            auto re = static_cast<long long>(std::llround(u.data()[i].real() * 1e6));
            auto im = static_cast<long long>(std::llround(u.data()[i].imag() * 1e6));
            h = (h ^ static_cast<std::size_t>(re)) * 1099511628211ull;
            h = (h ^ static_cast<std::size_t>(im)) * 1099511628211ull;
        }
        return h;
    }

    Field field_;
    std::size_t n_;
    std::vector<std::pair<PauliGenerator, Eigen::MatrixXcd>> generators_;
    std::unordered_map<std::size_t, std::vector<Entry>> memo_;
};

/// The least level <= max_level containing U, or "above max".
inline HierarchyReport hierarchy_level(const DenseOperator &u, unsigned max_level, const std::string &name = "") {
    HierarchyTester tester(u.field, u.n);
    HierarchyReport rep;
    rep.gate = name;
    rep.max_level = max_level;
    {
        Complex c = u.matrix(0, 0);
        rep.identity = std::abs(c) > kOracleTolerance &&
                       (u.matrix - c * Eigen::MatrixXcd::Identity(u.matrix.rows(), u.matrix.cols())).cwiseAbs().maxCoeff() <
                           kOracleTolerance;
    }
    for (unsigned k = 1; k <= max_level; ++k) {
        if (tester.check(u.matrix, k)) {
            rep.level = k;
            if (k >= 3) rep.witness = tester.first_failure(u.matrix, k - 1);
            return rep;
        }
    }
    if (max_level >= 2) rep.witness = tester.first_failure(u.matrix, max_level);
    return rep;
}

namespace detail {

/// Qubit index of phi(|u>): block i holds D_{B_i}(u_i) with coordinate 0 leftmost.
inline std::size_t phi_index(const BasisAssignment &a, const FqVector &u) {
    const unsigned s = a.field().degree();
    std::size_t idx = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        Code c = a[i].decompose_code(u[i]);
        for (unsigned j = 0; j < s; ++j) idx = (idx << 1) | ((c >> j) & 1u);
    }
    return idx;
}

inline std::vector<std::size_t> phi_permutation(const BasisAssignment &a, std::size_t n) {
    if (a.size() != n) fail(ErrorKind::DimensionMismatch, "one basis per qudit required");
    const auto &f = a.field();
    std::vector<std::size_t> perm(hilbert_dimension(f, n));
    for (std::size_t idx = 0; idx < perm.size(); ++idx) perm[idx] = phi_index(a, ket_digits(f, n, idx));
    return perm;
}

}  // namespace detail

/// phi_B: |u> -> |D_{B_1}(u_1) ... D_{B_n}(u_n)> on n s qubits.
inline StateVector phi_map(const BasisAssignment &a, const StateVector &psi) {
    if (!(a.field() == psi.field)) fail(ErrorKind::FieldMismatch, "basis and state over different fields");
    auto perm = detail::phi_permutation(a, psi.n);
    StateVector out(make_field(1u), psi.n * a.field().degree());
    for (std::size_t idx = 0; idx < perm.size(); ++idx) {
        out.amps[static_cast<Eigen::Index>(perm[idx])] = psi.amps[static_cast<Eigen::Index>(idx)];
    }
    return out;
}

/// Pi_B(U) = phi U phi^{-1}.
inline DenseOperator pi_map(const BasisAssignment &a, const DenseOperator &u) {
    if (!(a.field() == u.field)) fail(ErrorKind::FieldMismatch, "basis and operator over different fields");
    auto perm = detail::phi_permutation(a, u.n);
    DenseOperator out(make_field(1u), u.n * a.field().degree());
    for (std::size_t r = 0; r < perm.size(); ++r) {
        for (std::size_t c = 0; c < perm.size(); ++c) {
            out.matrix(static_cast<Eigen::Index>(perm[r]), static_cast<Eigen::Index>(perm[c])) =
                u.matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    return out;
}

}  // namespace gq
