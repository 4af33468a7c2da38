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

#include <gtest/gtest.h>

#include <random>

#include "gq/gates.hpp"
#include "gq/tableau.hpp"

using namespace gq;

namespace {

ErrorKind kind_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

CssTableau cat_tableau(const Field &f, const std::array<Code, 4> &g) {
    FqMatrix x(f, 4, {{g[0], g[1], g[2], g[3]}});
    FqMatrix z(f, 4, {{g[1], g[0], 0, 0}, {0, g[2], g[1], 0}, {0, 0, g[3], g[2]}});
    return new_tableau(x, z, {0}, {0, 0, 0});
}

DenseOperator gate_matrix(const Field &f, const TableauGate &g, std::size_t n) {
    switch (g.kind) {
        case TableauGate::Kind::Cnot: return embed(build_gate(f, GateSpec::cnot()), {g.a, g.b}, n);
        case TableauGate::Kind::Hadamard: return embed(build_gate(f, GateSpec::hadamard()), {g.a}, n);
        case TableauGate::Kind::Mult: return embed(build_gate(f, GateSpec::mult(g.delta)), {g.a}, n);
    }
    return DenseOperator(f, n);
}

}  // namespace

TEST(Tableau, Validation) {
    std::mt19937_64 rng(41);
    Field f8 = make_field(3u);
    std::uniform_int_distribution<Code> nz(1, 7);
    for (int i = 0; i < 20; ++i) EXPECT_NO_THROW(cat_tableau(f8, {nz(rng), nz(rng), nz(rng), nz(rng)}));
    Field f4 = make_field(2u);
    EXPECT_EQ(kind_of([&] { new_tableau(FqMatrix(f4, 2, {{1, 2}, {1, 2}}), FqMatrix(f4, 2), {0, 0}, {}); }),
              ErrorKind::RankDeficient);
    EXPECT_EQ(kind_of([&] { new_tableau(FqMatrix(f4, 2, {{1, 0}}), FqMatrix(f4, 2, {{1, 0}}), {0}, {0}); }),
              ErrorKind::NotCommuting);
    EXPECT_EQ(kind_of([&] { new_tableau(FqMatrix(f4, 2, {{1, 0}}), FqMatrix(f4, 2), {}, {}); }),
              ErrorKind::DimensionMismatch);
}

TEST(Tableau, WalkthroughRowOperations) {
    std::mt19937_64 rng(42);
    Field f = make_field(3u);
    std::uniform_int_distribution<Code> nz(1, 7), any(0, 7);
    for (int trial = 0; trial < 20; ++trial) {
        std::array<Code, 4> g{nz(rng), nz(rng), nz(rng), nz(rng)};
        Code eta = any(rng);
        std::array<Code, 3> e{any(rng), any(rng), any(rng)};
        FqMatrix x(f, 8, {{g[0], g[1], g[2], g[3], 0, 0, 0, 0},
                          {1, 0, 0, 0, 1, 0, 0, 0},
                          {0, 1, 0, 0, 0, 1, 0, 0},
                          {0, 0, 1, 0, 0, 0, 1, 0},
                          {0, 0, 0, 0, g[0], g[1], g[2], g[3]}});
        CssTableau first = new_tableau(x, FqMatrix(f, 8), {0, e[0], e[1], e[2], eta}, {});
        EXPECT_EQ(scale_row(first, Block::X, 2, 1), first);

        CssTableau second = first;
        for (std::size_t j = 0; j < 3; ++j) second = scale_row(second, Block::X, j + 1, g[j]);
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(second.xsyn()[j + 1], f.mul(g[j], e[j]));

        CssTableau third = second;
        for (std::size_t j = 1; j <= 4; ++j) third = add_row(third, Block::X, j, 0);
        Code expect = eta;
        for (std::size_t j = 0; j < 3; ++j) expect ^= f.mul(g[j], e[j]);
        EXPECT_EQ(third.xrows().row(0), (FqVector{0, 0, 0, g[3], 0, 0, 0, g[3]}));
        EXPECT_EQ(third.xsyn()[0], expect);

        CssTableau fourth = scale_row(third, Block::X, 0, f.inv(g[3]));
        EXPECT_EQ(fourth.xrows().row(0), (FqVector{0, 0, 0, 1, 0, 0, 0, 1}));
        EXPECT_EQ(fourth.xsyn()[0], f.div(expect, g[3]));

        auto c = canonical_form(first);
        EXPECT_EQ(canonical_form(second), c);
        EXPECT_EQ(canonical_form(third), c);
        EXPECT_EQ(canonical_form(fourth), c);
        EXPECT_EQ(canonical_form(c), c);
    }
    Field f4 = make_field(2u);
    EXPECT_EQ(kind_of([&] { scale_row(cat_tableau(f4, {1, 1, 1, 1}), Block::X, 0, 0); }), ErrorKind::InvalidScale);
}

TEST(Tableau, CanonicalFormIgnoresRowOperations) {
    std::mt19937_64 rng(43);
    Field f = make_field(2u);
    std::uniform_int_distribution<Code> nz(1, 3);
    for (int trial = 0; trial < 100; ++trial) {
        CssTableau t = random_full_tableau(f, 4, rng);
        CssTableau s = t;
        for (int op = 0; op < 10; ++op) {
            Block b = std::bernoulli_distribution(0.5)(rng) ? Block::X : Block::Z;
            std::size_t m = s.rows(b).rows();
            if (m == 0) continue;
            std::uniform_int_distribution<std::size_t> row(0, m - 1);
            std::size_t i = row(rng), j = row(rng);
            if (i != j && std::bernoulli_distribution(0.5)(rng)) {
                s = add_row(s, b, i, j);
            } else {
                s = scale_row(s, b, i, nz(rng));
            }
        }
        EXPECT_EQ(canonical_form(s), canonical_form(t));
    }
}

TEST(Tableau, GateUpdates) {
    Field f2 = make_field(1u);
    // Qubit CNOT: X_1 -> X_1 X_2, Z_2 -> Z_1 Z_2.
    CssTableau t = new_tableau(FqMatrix(f2, 2, {{1, 0}}), FqMatrix(f2, 2, {{0, 1}}), {0}, {1});
    CssTableau u = apply_gate(t, TableauGate::cnot(0, 1));
    EXPECT_EQ(u.xrows().row(0), (FqVector{1, 1}));
    EXPECT_EQ(u.zrows().row(0), (FqVector{1, 1}));
    EXPECT_EQ(u.zsyn(), FqVector{1});
    Field f4 = make_field(2u);
    std::mt19937_64 rng(1);
    CssTableau r = random_full_tableau(f4, 3, rng);
    EXPECT_EQ(apply_gate(r, TableauGate::mult(1, 1)), r);
    CssTableau h = apply_gate(new_tableau(FqMatrix(f4, 2, {{2, 0}}), FqMatrix(f4, 2, {{0, 3}}), {1}, {2}),
                              TableauGate::hadamard(0));
    EXPECT_EQ(h.xrows().rows(), 0u);
    EXPECT_EQ(h.zrows().row(0), (FqVector{2, 0}));
    EXPECT_EQ(h.zsyn(), (FqVector{1, 2}));
    EXPECT_EQ(kind_of([&] { apply_gate(new_tableau(FqMatrix(f4, 2, {{1, 1}}), FqMatrix(f4, 2), {0}, {}), TableauGate::hadamard(0)); }),
              ErrorKind::NotCssPreserving);
}

TEST(Tableau, GateUpdatesMatchOracle) {
    std::mt19937_64 rng(44);
    Field f = make_field(2u);
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<std::size_t> site(0, 1);
    std::uniform_int_distribution<Code> nz(1, 3);
    int hadamards = 0;
    for (int trial = 0; trial < 100; ++trial) {
        CssTableau t = random_full_tableau(f, 2, rng);
        TableauGate g = TableauGate::mult(site(rng), nz(rng));
        switch (kind(rng)) {
            case 0: g = TableauGate::cnot(0, 1); break;
            case 1: g = TableauGate::cnot(1, 0); break;
            case 2: {
                // A tableau on which H(0) is legal: one row is e_0 scaled.
                Block b = std::bernoulli_distribution(0.5)(rng) ? Block::X : Block::Z;
                FqMatrix m1(f, 2, {{nz(rng), 0}}), m2(f, 2, {{0, nz(rng)}});
                Code s1 = nz(rng), s2 = nz(rng);
                t = b == Block::X ? new_tableau(m1, m2, {s1}, {s2}) : new_tableau(m2, m1, {s2}, {s1});
                g = TableauGate::hadamard(0);
                ++hadamards;
                break;
            }
            default: break;
        }
        StateVector before = stabiliser_state(t);
        StateVector expected(f, 2);
        expected.amps = gate_matrix(f, g, 2).matrix * before.amps;
        EXPECT_TRUE(equal_up_to_phase(stabiliser_state(apply_gate(t, g)), expected)) << trial;
    }
    EXPECT_GT(hadamards, 0);
}

TEST(Tableau, Measurement) {
    std::mt19937_64 rng(45);
    Field f = make_field(2u);
    CssTableau t = random_full_tableau(f, 3, rng);
    while (t.xrows().rows() == 0) t = random_full_tableau(f, 3, rng);
    auto m = measure(t, PauliWord::x_type(f, t.xrows().row(0)), rng);
    EXPECT_TRUE(m.deterministic);
    EXPECT_EQ(m.outcome, t.xsyn()[0]);
    EXPECT_EQ(m.tableau, t);
    CssTableau partial = new_tableau(FqMatrix(f, 2, {{1, 1}}), FqMatrix(f, 2), {0}, {});
    EXPECT_EQ(kind_of([&] { measure(partial, PauliWord::x_type(f, {1, 0}), rng); }), ErrorKind::FullTableauRequired);
    EXPECT_EQ(kind_of([&] { measure(t, PauliWord(f, {1, 0, 0}, {1, 0, 0}), rng); }), ErrorKind::PureTypeRequired);
}

TEST(Tableau, CatGadget) {
    std::mt19937_64 rng(46);
    Field f2 = make_field(1u);
    auto r2 = run_cat_gadget(f2, {1, 1, 1, 1}, 0, rng);
    EXPECT_EQ(r2.recovered, 0u);
    Field f8 = make_field(3u);
    std::uniform_int_distribution<Code> nz(1, 7), any(0, 7);
    for (int trial = 0; trial < 100; ++trial) {
        std::array<Code, 4> g{nz(rng), nz(rng), nz(rng), nz(rng)};
        Code eta = any(rng);
        auto r = run_cat_gadget(f8, g, eta, rng);
        EXPECT_EQ(r.recovered, eta);
        EXPECT_TRUE(r.fourth_deterministic);
        EXPECT_EQ(r.outcomes[3], r.predicted_fourth);
        EXPECT_EQ(r.after_three.zrows().rows(), 0u);
        EXPECT_TRUE(r.after_three.xrows().row_space_contains({1, 0, 0, 0, 1, 0, 0, 0}));
    }
    EXPECT_EQ(kind_of([&] { run_cat_gadget(f8, {1, 0, 1, 1}, 0, rng); }), ErrorKind::InvalidScale);
}
