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

// The end-to-end verification suite behind `gq verify all`. Each criterion
// returns a pass/fail line whose text depends only on the seed.

#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gq/gates.hpp"
#include "gq/io.hpp"
#include "gq/q2b.hpp"

namespace gq {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = true;
    std::string detail;
};

namespace verify {

/// Counts checks and remembers the first failure.
class Checker {
   public:
    void expect(bool ok, const std::string &what) {
        ++checks_;
        if (!ok && failure_.empty()) failure_ = what;
    }
    bool ok() const { return failure_.empty(); }
    std::size_t checks() const { return checks_; }
    const std::string &failure() const { return failure_; }

    /// Runs fn, turning a library error into a failed check.
    void guard(const std::string &what, const std::function<void()> &fn) {
        try {
            fn();
        } catch (const std::exception &e) {
            expect(false, what + ": " + e.what());
        }
    }

    CriterionResult result(int id, std::string title, const std::string &extra = "") const {
        std::string detail = std::to_string(checks_) + " checks";
        if (!extra.empty()) detail += "; " + extra;
        if (!ok()) detail += "; first failure: " + failure_;
        return {id, std::move(title), ok(), detail};
    }

   private:
    std::size_t checks_ = 0;
    std::string failure_;
};

inline double max_abs_diff(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return 1e300;
    return (a - b).cwiseAbs().maxCoeff();
}

/// Chi-square statistic of counts against the uniform distribution.
inline double chi_square_uniform(const std::vector<std::size_t> &counts) {
    double total = 0;
    for (auto c : counts) total += static_cast<double>(c);
    const double expected = total / static_cast<double>(counts.size());
    double chi = 0;
    for (auto c : counts) chi += (static_cast<double>(c) - expected) * (static_cast<double>(c) - expected) / expected;
    return chi;
}

/// Upper 10^-3 critical values of the chi-square distribution by degrees of freedom.
inline double chi_square_critical_1e3(std::size_t dof) {
    static const std::map<std::size_t, double> table{{1, 10.828}, {3, 16.266}, {7, 24.322}, {15, 37.697}};
    auto it = table.find(dof);
    if (it == table.end()) fail(ErrorKind::Internal, "no critical value tabulated for this dof");
    return it->second;
}

inline std::string fmt_double(double x) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(3);
    out << x;
    return out.str();
}

// 1. Field arithmetic.
inline CriterionResult field_suite(std::uint64_t seed) {
    Checker ck;
    std::mt19937_64 rng(seed ^ 0x1001);
    for (unsigned s = 1; s <= 4; ++s) {
        Field f = make_field(s);
        const Code q = f.order();
        const std::string tag = "q=" + std::to_string(q) + " ";
        bool add_ok = true, mul_ok = true, dist_ok = true;
        for (Code a = 0; a < q; ++a) {
            for (Code b = 0; b < q; ++b) {
                if (f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a)) add_ok = false;
                if (f.mul(a, b) != f.mul_reference(a, b)) mul_ok = false;
                for (Code c = 0; c < q; ++c) {
                    if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c))) add_ok = false;
                    if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) mul_ok = false;
                    if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) dist_ok = false;
                }
            }
        }
        ck.expect(add_ok, tag + "additive group axioms");
        ck.expect(mul_ok, tag + "multiplicative associativity/commutativity");
        ck.expect(dist_ok, tag + "distributivity");
        bool ident = true, inverses = true, powers = true, traces = true, chars = true;
        for (Code a = 0; a < q; ++a) {
            if (f.add(a, 0) != a || f.mul(a, 1) != a || f.add(a, a) != 0) ident = false;
            if (a != 0 && f.mul(a, f.inv(a)) != 1) inverses = false;
            if (f.pow(a, q - 1) != (a == 0 ? 0u : 1u) || f.pow(a, q) != a) powers = false;
            Code t = f.trace(a);
            if (t > 1 || t != f.trace_by_definition(a) || f.trace(f.mul(a, a)) != t) traces = false;
            for (Code b = 0; b < q; ++b) {
                if (f.trace(a ^ b) != (t ^ f.trace(b))) traces = false;
            }
            int sum = 0;
            for (Code mu = 0; mu < q; ++mu) sum += f.trace(f.mul(mu, a)) ? -1 : 1;
            if (sum != (a == 0 ? static_cast<int>(q) : 0)) chars = false;
        }
        ck.expect(ident, tag + "identities");
        ck.expect(inverses, tag + "inverses");
        ck.expect(powers, tag + "eta^(q-1) and eta^q");
        ck.expect(traces, tag + "trace properties");
        ck.expect(chars, tag + "character orthogonality");
        std::uniform_int_distribution<Code> el(0, q - 1);
        std::uniform_int_distribution<int> len(1, 8);
        bool squares = true;
        for (int trial = 0; trial < 200; ++trial) {
            Code sum = 0, sum_sq = 0;
            for (int i = len(rng); i > 0; --i) {
                Code e = el(rng);
                sum ^= e;
                sum_sq ^= f.mul(e, e);
            }
            if (f.mul(sum, sum) != sum_sq) squares = false;
        }
        ck.expect(squares, tag + "square of a sum");
    }
    Field f8 = make_field(PolyOverF2{0b1011});
    ck.expect(f8.mul(0b110, 0b111) == 0b100, "(a+a^2)(1+a+a^2) = a^2 in F_8");
    return ck.result(1, "field suite");
}

// 2. Bases, dual bases, self-dual bases.
inline CriterionResult basis_suite(std::uint64_t seed) {
    Checker ck;
    std::mt19937_64 rng(seed ^ 0x2002);
    for (unsigned s = 1; s <= 4; ++s) {
        Field f = make_field(s);
        std::vector<FieldBasis> bases{polynomial_basis(f), find_self_dual(f)};
        for (int i = 0; i < 3; ++i) bases.push_back(random_basis(f, rng));
        for (const auto &b : bases) {
            const std::string tag = "q=" + std::to_string(f.order()) + " basis " + to_json(b).dump() + " ";
            FieldBasis d = dual_basis(b);
            ck.expect(is_identity(trace_gram(b, d)), tag + "dual Gram matrix");
            ck.expect(dual_basis(d) == b, tag + "double dual");
            bool inner = true, recovery = true;
            for (Code beta = 0; beta < f.order(); ++beta) {
                for (Code gamma = 0; gamma < f.order(); ++gamma) {
                    auto bits = static_cast<Code>(std::popcount(b.decompose_code(beta) & d.decompose_code(gamma)) & 1);
                    if (bits != f.trace(f.mul(beta, gamma))) inner = false;
                }
                BitVector t(s);
                for (unsigned i = 0; i < s; ++i) t.set(i, f.trace(f.mul(b[i], beta)));
                if (recover_from_traces(b, t) != beta) recovery = false;
            }
            ck.expect(inner, tag + "tr(bg) = D_B(b).D_B*(g)");
            ck.expect(recovery, tag + "trace-value recovery");
        }
    }
    for (unsigned s = 1; s <= 8; ++s) {
        Field f = make_field(s);
        ck.expect(is_self_dual(find_self_dual(f)), "self-dual basis for s=" + std::to_string(s));
    }
    return ck.result(2, "basis suite");
}

// 3. Tableau measurement against the dense oracle.
inline CriterionResult tableau_oracle_suite(std::uint64_t seed) {
    Checker ck;
    std::mt19937_64 rng(seed ^ 0x3003);
    std::mt19937_64 oracle_rng(seed ^ 0x3103);
    std::size_t deterministic = 0, random_branch = 0;
    std::map<Code, std::vector<std::size_t>> counts;
    std::map<Code, std::pair<CssTableau, PauliWord>> sample_case;
    for (int trial = 0; trial < 200; ++trial) {
        Field f = make_field(trial % 2 == 0 ? 1u : 2u);
        const Code q = f.order();
        counts.try_emplace(q, std::vector<std::size_t>(q, 0));
        const std::size_t n = 1 + static_cast<std::size_t>(trial / 2) % 3;
        const std::string tag = "case " + std::to_string(trial) + " ";
        ck.guard(tag, [&] {
            CssTableau t = random_full_tableau(f, n, rng);
            const bool x_type = std::bernoulli_distribution(0.5)(rng);
            const auto &same = t.rows(x_type ? Block::X : Block::Z);
            FqVector w;
            if (std::bernoulli_distribution(0.5)(rng) && same.rows() > 0) {
                w = same.combine(random_vector(f, same.rows(), rng));
            } else {
                w = random_vector(f, n, rng);
            }
            PauliWord p = x_type ? PauliWord::x_type(f, w) : PauliWord::z_type(f, w);
            StateVector psi = stabiliser_state(t);
            auto m = measure(t, p, rng);
            auto o = measure_projective(psi, p, oracle_rng);
            if (m.deterministic) {
                ++deterministic;
                auto eta = syndrome_component(psi, p);
                ck.expect(eta.has_value() && *eta == m.outcome, tag + "deterministic outcome");
                ck.expect(std::abs(o.probabilities[m.outcome] - 1.0) < kOracleTolerance, tag + "oracle certainty");
                ck.expect(m.tableau == t, tag + "tableau unchanged");
            } else {
                ++random_branch;
                ++counts[q][m.outcome];
                bool uniform = true;
                for (double pr : o.probabilities) uniform = uniform && std::abs(pr - 1.0 / q) < kOracleTolerance;
                ck.expect(uniform, tag + "oracle outcome distribution uniform");
                ck.expect(m.tableau.is_full(), tag + "fullness preserved");
                StateVector expected(f, n);
                for (Code mu = 0; mu < q; ++mu) {
                    double c = f.trace(f.mul(mu, m.outcome)) ? -1.0 : 1.0;
                    expected.amps += c * apply_pauli(power(p, mu), psi).amps;
                }
                expected.amps.normalize();
                ck.expect(equal_up_to_phase(stabiliser_state(m.tableau), expected), tag + "post-measurement state");
                if (!sample_case.count(q)) sample_case.emplace(q, std::make_pair(t, p));
            }
        });
    }
    ck.expect(deterministic > 0 && random_branch > 0, "both measurement branches exercised");
    std::string extra = std::to_string(deterministic) + " deterministic, " + std::to_string(random_branch) + " random";
    for (auto &[q, cs] : counts) {
        double crit = chi_square_critical_1e3(q - 1);
        double chi = chi_square_uniform(cs);
        ck.expect(chi < crit, "pooled chi-square at q=" + std::to_string(q));
        auto it = sample_case.find(q);
        if (it == sample_case.end()) continue;
        const auto &[t, p] = it->second;
        std::vector<std::size_t> tab(q, 0), orc(q, 0);
        StateVector psi = stabiliser_state(t);
        for (int i = 0; i < 4000; ++i) {
            ++tab[measure(t, p, rng).outcome];
            ++orc[measure_projective(psi, p, oracle_rng).outcome];
        }
        double chi_t = chi_square_uniform(tab), chi_o = chi_square_uniform(orc);
        ck.expect(chi_t < crit, "tableau chi-square at q=" + std::to_string(q));
        ck.expect(chi_o < crit, "oracle chi-square at q=" + std::to_string(q));
        extra += "; q=" + std::to_string(q) + " chi2 pooled " + fmt_double(chi) + " tableau " + fmt_double(chi_t) +
                 " oracle " + fmt_double(chi_o) + " (crit " + fmt_double(crit) + ")";
    }
    return ck.result(3, "tableau vs oracle", extra);
}

/// The tableau after the first three XX measurements of the cat gadget,
/// including the completion rows, in canonical form.
inline CssTableau expected_after_three(const Field &f, const std::array<Code, 4> &gamma, Code eta,
                                       const std::array<Code, 3> &outcomes, const CssTableau &actual) {
    FqMatrix xr(f, 8);
    FqVector xs;
    xr.push_row({gamma[0], gamma[1], gamma[2], gamma[3], 0, 0, 0, 0});
    xs.push_back(0);
    for (std::size_t j = 0; j < 3; ++j) {
        FqVector r(8, 0);
        r[j] = 1;
        r[4 + j] = 1;
        xr.push_row(r);
        xs.push_back(outcomes[j]);
    }
    xr.push_row({0, 0, 0, 0, gamma[0], gamma[1], gamma[2], gamma[3]});
    xs.push_back(eta);
    // Completion rows e_5, e_6, e_7 keep whatever syndromes the gadget drew.
    for (std::size_t j = 0; j < 3; ++j) {
        FqVector r(8, 0);
        r[4 + j] = 1;
        auto c = actual.xrows().solve_combination(r);
        if (!c) fail(ErrorKind::Internal, "completion row missing");
        xr.push_row(r);
        xs.push_back(dot(f, *c, actual.xsyn()));
    }
    return canonical_form(new_tableau(xr, FqMatrix(f, 8), xs, {}));
}

// 4. The cat-state syndrome gadget at q = 8.
inline CriterionResult cat_gadget_suite(std::uint64_t seed) {
    Checker ck;
    std::mt19937_64 rng(seed ^ 0x4004);
    Field f = make_field(3u);
    std::uniform_int_distribution<Code> nonzero(1, 7), any(0, 7);
    for (int trial = 0; trial < 100; ++trial) {
        const std::string tag = "trial " + std::to_string(trial) + " ";
        ck.guard(tag, [&] {
            std::array<Code, 4> gamma{nonzero(rng), nonzero(rng), nonzero(rng), nonzero(rng)};
            Code eta = any(rng);
            auto r = run_cat_gadget(f, gamma, eta, rng);
            ck.expect(r.recovered == eta, tag + "recovered syndrome");
            ck.expect(r.fourth_deterministic, tag + "fourth outcome deterministic");
            Code acc = eta;
            for (std::size_t j = 0; j < 3; ++j) acc ^= f.mul(gamma[j], r.outcomes[j]);
            ck.expect(r.predicted_fourth == f.div(acc, gamma[3]), tag + "predicted fourth outcome");
            ck.expect(r.outcomes[3] == r.predicted_fourth, tag + "fourth outcome value");
            auto expected = expected_after_three(f, gamma, eta, {r.outcomes[0], r.outcomes[1], r.outcomes[2]}, r.after_three);
            ck.expect(canonical_form(r.after_three) == expected, tag + "intermediate tableau");
        });
    }
    return ck.result(4, "cat-state gadget");
}

// 5. Gate identities as matrix equalities.
inline CriterionResult gate_identity_suite(std::uint64_t) {
    Checker ck;
    constexpr double tol = 1e-12;
    for (unsigned s = 1; s <= 3; ++s) {
        Field f = make_field(s);
        const Code q = f.order();
        const std::string tag = "q=" + std::to_string(q) + " ";
        auto h = build_gate(f, GateSpec::hadamard()).matrix;
        auto id1 = Eigen::MatrixXcd::Identity(q, q);
        ck.expect(max_abs_diff(h * h, id1) < tol, tag + "H^2 = I");
        auto cnot = build_gate(f, GateSpec::cnot()).matrix;
        for (Code b = 0; b < q; ++b) {
            auto xb = build_gate(f, GateSpec::x(b)).matrix;
            auto zb = build_gate(f, GateSpec::z(b)).matrix;
            ck.expect(max_abs_diff(h * xb * h.adjoint(), zb) < tol, tag + "H X H^dag = Z");
            ck.expect(max_abs_diff(h * zb * h.adjoint(), xb) < tol, tag + "H Z H^dag = X");
            auto x_i = pauli_matrix(PauliWord::x_type(f, {b, 0})).matrix;
            auto x_xx = pauli_matrix(PauliWord::x_type(f, {b, b})).matrix;
            auto i_z = pauli_matrix(PauliWord::z_type(f, {0, b})).matrix;
            auto z_zz = pauli_matrix(PauliWord::z_type(f, {b, b})).matrix;
            ck.expect(max_abs_diff(cnot * x_i * cnot.adjoint(), x_xx) < tol, tag + "CNOT X_1 -> X_1 X_2");
            ck.expect(max_abs_diff(cnot * i_z * cnot.adjoint(), z_zz) < tol, tag + "CNOT Z_2 -> Z_1 Z_2");
            for (Code d = 1; d < q; ++d) {
                auto m = build_gate(f, GateSpec::mult(d)).matrix;
                ck.expect(max_abs_diff(m * xb * m.adjoint(), build_gate(f, GateSpec::x(f.mul(d, b))).matrix) < tol,
                          tag + "M X M^dag");
                ck.expect(max_abs_diff(m * zb * m.adjoint(), build_gate(f, GateSpec::z(f.div(b, d))).matrix) < tol,
                          tag + "M Z M^dag");
            }
        }
        if (s <= 2) {
            auto ccz = build_gate(f, GateSpec::ccz(1)).matrix;
            for (Code g = 1; g < q; ++g) {
                auto mg = embed(build_gate(f, GateSpec::mult(g)), {0}, 3).matrix;
                auto mgi = embed(build_gate(f, GateSpec::mult(f.inv(g))), {0}, 3).matrix;
                ck.expect(max_abs_diff(build_gate(f, GateSpec::ccz(g)).matrix, mgi * ccz * mg) < tol,
                          tag + "CCZ^g = M^{g^-1} CCZ M^g");
            }
        }
    }
    Field f4 = make_field(2u);
    bool witness = false;
    for (Code a = 0; a < 4 && !witness; ++a) {
        for (Code b = 0; b < 4 && !witness; ++b) {
            auto lhs = build_gate(f4, GateSpec::s(a)).matrix * build_gate(f4, GateSpec::s(b)).matrix;
            witness = max_abs_diff(lhs, build_gate(f4, GateSpec::s(a ^ b)).matrix) > tol;
        }
    }
    ck.expect(witness, "S^a S^b != S^(a+b) for some a, b at q=4");
    return ck.result(5, "gate identities");
}

// 6. Clifford hierarchy levels.
inline CriterionResult hierarchy_suite(std::uint64_t) {
    Checker ck;
    for (unsigned s = 1; s <= 3; ++s) {
        Field f = make_field(s);
        const std::string tag = "q=" + std::to_string(f.order()) + " ";
        auto level_is = [&](const GateSpec &g, unsigned want, const std::string &name) {
            ck.guard(tag + name, [&] {
                auto rep = hierarchy_level(build_gate(f, g), 4, name);
                ck.expect(rep.level && *rep.level == want, tag + name + " level " + std::to_string(want));
            });
        };
        level_is(GateSpec::cnot(), 2, "cnot");
        level_is(GateSpec::hadamard(), 2, "hadamard");
        // M^1 is the identity.
        level_is(GateSpec::mult(1), 1, "mult 1");
        for (Code d = 2; d < f.order(); ++d) level_is(GateSpec::mult(d), 2, "mult " + std::to_string(d));
        if (s == 3) continue;
        for (Code g = 1; g < f.order(); ++g) level_is(GateSpec::ccz(g), 3, "ccz " + std::to_string(g));
    }
    Field f8 = make_field(3u);
    for (Code b = 0; b < 8; ++b) {
        const std::string tag = "u_7 beta=" + std::to_string(b) + " ";
        ck.guard(tag, [&] {
            auto rep = hierarchy_level(build_gate(f8, GateSpec::u_n(7, b)), 4, "u_n");
            const bool trivial = f8.trace(b) == 0;
            ck.expect(rep.identity == trivial, tag + "identity iff tr(beta) = 0");
            ck.expect(rep.level && *rep.level == (trivial ? 1u : 3u), tag + "level");
        });
    }
    return ck.result(6, "hierarchy levels");
}

/// Standard-normal complex amplitudes, normalised.
template <class Rng>
StateVector random_state(const Field &f, std::size_t n, Rng &rng) {
    std::normal_distribution<double> g;
    StateVector psi(f, n);
    for (Eigen::Index i = 0; i < psi.amps.size(); ++i) psi.amps[i] = Complex(g(rng), g(rng));
    psi.amps.normalize();
    return psi;
}

// 7. The qudit/qubit operator isomorphism at q = 4.
inline CriterionResult isomorphism_suite(std::uint64_t seed) {
    Checker ck;
    constexpr double tol = 1e-12;
    std::mt19937_64 rng(seed ^ 0x7007);
    Field f = make_field(2u);
    Field f2 = make_field(1u);
    FieldBasis sd = find_self_dual(f);
    BasisAssignment mixed({sd, random_basis(f, rng)});
    BasisAssignment same = BasisAssignment::uniform(sd, 2);

    std::vector<std::pair<std::string, DenseOperator>> gates;
    gates.emplace_back("H x I", embed(build_gate(f, GateSpec::hadamard()), {0}, 2));
    gates.emplace_back("I x M^2", embed(build_gate(f, GateSpec::mult(2)), {1}, 2));
    gates.emplace_back("CNOT", build_gate(f, GateSpec::cnot()));
    gates.emplace_back("CZ", build_gate(f, GateSpec::multi_cz(2, 1)));
    gates.emplace_back("X^3 Z^2", pauli_matrix(PauliWord(f, {3, 0}, {0, 2})));
    gates.emplace_back("S x T", embed(build_gate(f, GateSpec::s(3)), {0}, 2));
    for (const auto *a : {&mixed, &same}) {
        for (const auto &[n1, u1] : gates) {
            auto p1 = pi_map(*a, u1).matrix;
            ck.expect(max_abs_diff(pi_map(*a, DenseOperator(f, 2, u1.matrix.adjoint())).matrix, p1.adjoint()) < tol,
                      "adjoint " + n1);
            for (const auto &[n2, u2] : gates) {
                auto p2 = pi_map(*a, u2).matrix;
                ck.expect(max_abs_diff(pi_map(*a, DenseOperator(f, 2, u1.matrix * u2.matrix)).matrix, p1 * p2) < tol,
                          "product " + n1 + " " + n2);
                ck.expect(max_abs_diff(pi_map(*a, DenseOperator(f, 2, u1.matrix + u2.matrix)).matrix, p1 + p2) < tol,
                          "sum " + n1 + " " + n2);
            }
        }
    }
    for (const auto &b : {sd, polynomial_basis(f), random_basis(f, rng)}) {
        BasisAssignment a = BasisAssignment::uniform(b, 1);
        for (Code g = 0; g < 4; ++g) {
            BitVector dx = expand_vector(a, {g}), dz = expand_dual(a, {g});
            FqVector xb{static_cast<Code>(dx.get(0)), static_cast<Code>(dx.get(1))};
            FqVector zb{static_cast<Code>(dz.get(0)), static_cast<Code>(dz.get(1))};
            ck.expect(pi_map(a, build_gate(f, GateSpec::x(g))).matrix == pauli_matrix(PauliWord::x_type(f2, xb)).matrix,
                      "Pi(X^g) = X^{D_B(g)}");
            ck.expect(pi_map(a, build_gate(f, GateSpec::z(g))).matrix == pauli_matrix(PauliWord::z_type(f2, zb)).matrix,
                      "Pi(Z^g) = Z^{D_B*(g)}");
        }
    }
    for (int i = 0; i < 20; ++i) {
        PauliWord p(f, random_vector(f, 2, rng), random_vector(f, 2, rng));
        ck.expect(is_pauli_like(pi_map(mixed, pauli_matrix(p))), "Pauli maps to Pauli");
    }
    auto same_level = [&](const BasisAssignment &a, const DenseOperator &u, const std::string &name) {
        ck.guard(name, [&] {
            auto lq = hierarchy_level(u, 3, name).level;
            auto lb = hierarchy_level(pi_map(a, u), 3, name).level;
            ck.expect(lq && lb && *lq == *lb, "level preserved for " + name);
        });
    };
    same_level(BasisAssignment::uniform(sd, 1), build_gate(f, GateSpec::hadamard()), "hadamard");
    same_level(BasisAssignment::uniform(sd, 1), build_gate(f, GateSpec::mult(3)), "mult");
    same_level(mixed, build_gate(f, GateSpec::cnot()), "cnot");
    same_level(BasisAssignment({sd, polynomial_basis(f), sd}), build_gate(f, GateSpec::ccz(2)), "ccz");

    auto qcnot = build_gate(f2, GateSpec::cnot());
    auto pairwise = (embed(qcnot, {0, 2}, 4).matrix * embed(qcnot, {1, 3}, 4).matrix).eval();
    ck.expect(pi_map(same, build_gate(f, GateSpec::cnot())).matrix == pairwise, "Pi(CNOT) = pairwise qubit CNOTs");

    for (int i = 0; i < 100; ++i) {
        const auto &u = gates[static_cast<std::size_t>(i) % gates.size()].second;
        StateVector psi = random_state(f, 2, rng);
        StateVector upsi(f, 2);
        upsi.amps = u.matrix * psi.amps;
        auto lhs = (pi_map(mixed, u).matrix * phi_map(mixed, psi).amps).eval();
        ck.expect((lhs - phi_map(mixed, upsi).amps).cwiseAbs().maxCoeff() < tol, "Pi(U) phi = phi U");
    }
    return ck.result(7, "qudit/qubit isomorphism");
}

/// Weight histogram of all q^k codewords.
inline std::vector<std::uint64_t> weight_census(const GrsCode &c) {
    std::vector<std::uint64_t> hist(c.length() + 1, 0);
    const Code q = c.field().order();
    FqVector msg(c.dimension(), 0);
    while (true) {
        ++hist[hamming_weight(encode(c, msg))];
        std::size_t i = 0;
        while (i < msg.size() && ++msg[i] == q) msg[i++] = 0;
        if (i == msg.size()) break;
    }
    return hist;
}

// 8. GRS duality, weight distribution, minimum-weight words.
inline CriterionResult grs_suite(std::uint64_t seed) {
    Checker ck;
    std::mt19937_64 rng(seed ^ 0x8008);
    for (int i = 0; i < 20; ++i) {
        Field f = make_field(i % 2 == 0 ? 2u : 3u);
        const Code q = f.order();
        std::vector<Code> pts(q);
        for (Code x = 0; x < q; ++x) pts[x] = x;
        std::shuffle(pts.begin(), pts.end(), rng);
        const std::size_t n = std::uniform_int_distribution<std::size_t>(2, q)(rng);
        pts.resize(n);
        std::vector<Code> v(n);
        for (auto &x : v) x = std::uniform_int_distribution<Code>(1, q - 1)(rng);
        const std::size_t k = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
        GrsCode c(f, k, pts, v);
        ck.expect(generator_matrix(c).mul_transpose(generator_matrix(dual(c))).is_zero(),
                  "dual orthogonality, instance " + std::to_string(i));
    }
    struct Inst {
        unsigned s;
        std::size_t n, k;
    };
    for (const auto &[s, n, k] : {Inst{2, 3, 2}, Inst{3, 7, 3}}) {
        Field f = make_field(s);
        const Code q = f.order();
        std::vector<Code> alpha(n), v(n, 1);
        for (std::size_t i = 0; i < n; ++i) alpha[i] = static_cast<Code>(i);
        GrsCode c(f, k, alpha, v);
        const std::string tag = "(q=" + std::to_string(q) + ",n=" + std::to_string(n) + ",k=" + std::to_string(k) + ") ";
        auto hist = weight_census(c);
        const std::size_t d = n - k + 1;
        for (std::size_t w = 1; w <= n; ++w) {
            std::uint64_t want = w < d ? 0 : mds_weight_count(n, k, q, w);
            ck.expect(hist[w] == want, tag + "weight " + std::to_string(w));
        }
        std::set<FqVector> words;
        bool weights_ok = true;
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k - 1), true);
        do {
            std::vector<Code> roots;
            for (std::size_t i = 0; i < n; ++i) {
                if (pick[i]) roots.push_back(alpha[i]);
            }
            for (Code eta = 1; eta < q; ++eta) {
                auto w = min_weight_codeword(c, roots, eta);
                weights_ok = weights_ok && hamming_weight(w) == d;
                words.insert(w);
            }
        } while (std::prev_permutation(pick.begin(), pick.end()));
        const auto expected = static_cast<std::uint64_t>(detail::binomial(n, k - 1)) * (q - 1);
        ck.expect(weights_ok, tag + "minimum-weight words have weight d");
        ck.expect(words.size() == expected, tag + "minimum-weight words distinct");
        ck.expect(hist[d] == expected, tag + "census matches enumeration");
    }
    return ck.result(8, "GRS suite");
}

// 9. QRS parameters, qubit conversion, and the qubit-level decode pipeline.
inline CriterionResult qrs_suite(std::uint64_t seed) {
    Checker ck;
    std::mt19937_64 rng(seed ^ 0x9009);
    Field f = make_field(3u);
    std::string extra;
    ck.guard("qrs", [&] {
        QrsCode qrs = make_qrs(f, 8, 2, 5);
        CodeParams p = params(qrs.css());
        ck.expect(p.k == 3 && p.k == qrs.formula_k(), "k = 3");
        ck.expect(p.status == DistanceStatus::Exact, "distances enumerated");
        ck.expect(p.d_x && *p.d_x == 4 && *p.d_x == qrs.formula_dx(), "d_X = 4");
        ck.expect(p.d_z && *p.d_z == 3 && *p.d_z == qrs.formula_dz(), "d_Z = 3");
        BasisAssignment a = BasisAssignment::uniform(find_self_dual(f), 8);
        QubitCssCode qc = convert_code(qrs.css(), a);
        ck.expect(qc.num_qubits == 24 && qc.num_logical() == 9, "[[24,9]]");
        ck.expect(qc.hx.mul_transpose(qc.hz).is_zero(), "hx hz^T = 0");
        ck.expect(qc.hx.rank() == 6 && qc.hz.rank() == 9, "ranks 6 and 9");
        MeasurementPlan plan = make_plan(qrs.css(), a);
        std::uniform_int_distribution<std::size_t> site(0, 7);
        std::uniform_int_distribution<Code> pattern(1, 7);
        std::size_t recovered = 0;
        for (int trial = 0; trial < 500; ++trial) {
            QubitError e{BitVector(24), BitVector(24)};
            const int kind = trial % 3;
            if (kind != 1) {
                std::size_t i = site(rng);
                Code b = pattern(rng);
                for (unsigned j = 0; j < 3; ++j) e.x.set(i * 3 + j, (b >> j) & 1u);
            }
            if (kind != 0) {
                std::size_t i = site(rng);
                Code b = pattern(rng);
                for (unsigned j = 0; j < 3; ++j) e.z.set(i * 3 + j, (b >> j) & 1u);
            }
            ck.guard("trial " + std::to_string(trial), [&] {
                QubitError got = end_to_end_decode(qrs, a, plan, e);
                bool ok = got.x == e.x && got.z == e.z;
                recovered += ok;
                ck.expect(ok, "trial " + std::to_string(trial) + " exact recovery");
            });
        }
        extra = std::to_string(recovered) + "/500 errors recovered";
    });
    return ck.result(9, "QRS end-to-end", extra);
}

}  // namespace verify

struct VerifyCriterion {
    int id;
    const char *name;
    CriterionResult (*run)(std::uint64_t);
};

inline const std::vector<VerifyCriterion> &verify_criteria() {
    static const std::vector<VerifyCriterion> list{
        {1, "field", verify::field_suite},        {2, "basis", verify::basis_suite},
        {3, "tableau", verify::tableau_oracle_suite}, {4, "cat", verify::cat_gadget_suite},
        {5, "gates", verify::gate_identity_suite}, {6, "hierarchy", verify::hierarchy_suite},
        {7, "isomorphism", verify::isomorphism_suite}, {8, "grs", verify::grs_suite},
        {9, "qrs", verify::qrs_suite},
    };
    return list;
}

inline std::string format_result(const CriterionResult &r) {
    return std::string(r.passed ? "PASS" : "FAIL") + " criterion " + std::to_string(r.id) + " (" + r.title + "): " +
           r.detail;
}

}  // namespace gq
