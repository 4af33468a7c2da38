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

#include <cmath>
#include <random>

#include "gq/oracle.hpp"
#include "oracles.hpp"

using namespace gq;

namespace {

double diff(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) { return (a - b).cwiseAbs().maxCoeff(); }

CssTableau cat_tableau(const Field &f) {
    FqMatrix x(f, 4, {{1, 1, 1, 1}});
    FqMatrix z(f, 4, {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}});
    return new_tableau(x, z, {0}, {0, 0, 0});
}

}  // namespace

TEST(Oracle, PauliMatrixMatchesKronecker) {
    std::mt19937_64 rng(21);
    for (unsigned s = 1; s <= 3; ++s) {
        Field f = make_field(s);
        for (int i = 0; i < 10; ++i) {
            FqVector x = random_vector(f, 2, rng), z = random_vector(f, 2, rng);
            EXPECT_LT(diff(pauli_matrix(PauliWord(f, x, z)).matrix, oracle::pauli(x, z, f.modulus().bits)), 1e-12);
        }
    }
}

TEST(Oracle, ApplyPauliMatchesMatrix) {
    std::mt19937_64 rng(22);
    Field f = make_field(2u);
    std::normal_distribution<double> g;
    StateVector psi(f, 3);
    for (Eigen::Index i = 0; i < psi.amps.size(); ++i) psi.amps[i] = Complex(g(rng), g(rng));
    for (int i = 0; i < 10; ++i) {
        PauliWord p(f, random_vector(f, 3, rng), random_vector(f, 3, rng));
        EXPECT_LT((apply_pauli(p, psi).amps - pauli_matrix(p).matrix * psi.amps).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Oracle, SmallMatrices) {
    Field f2 = make_field(1u);
    Eigen::Matrix2cd x, z;
    x << 0, 1, 1, 0;
    z << 1, 0, 0, -1;
    EXPECT_EQ(pauli_matrix(PauliWord::x_type(f2, {1})).matrix, Eigen::MatrixXcd(x));
    EXPECT_EQ(pauli_matrix(PauliWord::z_type(f2, {1})).matrix, Eigen::MatrixXcd(z));
    EXPECT_EQ(pauli_matrix(PauliWord::identity(f2, 2)).matrix, Eigen::MatrixXcd::Identity(4, 4));
    Field f4 = make_field(2u);
    // Diagonal of Z^gamma at q = 4 is (-1)^{tr(gamma eta)}; traces of 0..3 are 0,0,1,1.
    const double expected[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, -1, 1}, {1, -1, 1, -1}};
    for (Code g = 0; g < 4; ++g) {
        auto m = pauli_matrix(PauliWord::z_type(f4, {g})).matrix;
        for (int e = 0; e < 4; ++e) EXPECT_EQ(m(e, e).real(), expected[g][e]) << g << " " << e;
    }
}

TEST(Oracle, DimensionCap) {
    Field f = make_field(4u);
    EXPECT_THROW(hilbert_dimension(f, 4), Error);
    EXPECT_EQ(hilbert_dimension(f, 3), 4096u);
}

TEST(Oracle, StabiliserStates) {
    Field f2 = make_field(1u);
    StateVector zero = stabiliser_state(new_tableau(FqMatrix(f2, 1), FqMatrix(f2, 1, {{1}}), {}, {0}));
    EXPECT_EQ(zero.amps, basis_state(f2, {0}).amps);

    StateVector cat = stabiliser_state(cat_tableau(f2));
    Eigen::VectorXcd want = Eigen::VectorXcd::Zero(16);
    want[0] = want[15] = 1 / std::sqrt(2.0);
    EXPECT_LT((cat.amps - want).cwiseAbs().maxCoeff(), 1e-12);

    Field f4 = make_field(2u);
    CssTableau bell = new_tableau(FqMatrix(f4, 2, {{1, 1}}), FqMatrix(f4, 2, {{1, 1}}), {0}, {0});
    StateVector b = stabiliser_state(bell);
    for (Code u = 0; u < 4; ++u) {
        for (Code v = 0; v < 4; ++v) EXPECT_NEAR(std::abs(b.amps[static_cast<Eigen::Index>(4 * u + v)]), u == v ? 0.5 : 0.0, 1e-12);
    }
    for (Code mu = 0; mu < 4; ++mu) {
        EXPECT_LT((apply_pauli(PauliWord::x_type(f4, {mu, mu}), b).amps - b.amps).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LT((apply_pauli(PauliWord::z_type(f4, {mu, mu}), b).amps - b.amps).cwiseAbs().maxCoeff(), 1e-12);
    }
    EXPECT_THROW(stabiliser_state(new_tableau(FqMatrix(f4, 2, {{1, 1}}), FqMatrix(f4, 2), {0}, {})), Error);
}

TEST(Oracle, SyndromeComponents) {
    std::mt19937_64 rng(23);
    Field f = make_field(2u);
    StateVector zero = basis_state(f, {0, 0});
    for (int i = 0; i < 5; ++i) EXPECT_EQ(syndrome_component(zero, PauliWord::z_type(f, random_vector(f, 2, rng))), Code{0});

    // X^a|psi> against Z^w has syndrome w.a when |psi> has trivial Z syndromes.
    CssTableau t = new_tableau(FqMatrix(f, 2), FqMatrix(f, 2, {{1, 0}, {0, 1}}), {}, {0, 0});
    StateVector psi = stabiliser_state(t);
    for (int i = 0; i < 10; ++i) {
        FqVector a = random_vector(f, 2, rng), w = random_vector(f, 2, rng);
        StateVector moved = apply_pauli(PauliWord::x_type(f, a), psi);
        EXPECT_EQ(syndrome_component(moved, PauliWord::z_type(f, w)), dot(f, w, a));
    }

    StateVector plus(f, 2);
    plus.amps.setConstant(0.25);
    EXPECT_EQ(syndrome_component(plus, PauliWord::x_type(f, {2, 3})), Code{0});
    EXPECT_FALSE(syndrome_component(plus, PauliWord::z_type(f, {1, 0})).has_value());
}

TEST(Oracle, ProjectiveMeasurement) {
    std::mt19937_64 rng(24);
    Field f2 = make_field(1u);
    auto o = measure_projective(basis_state(f2, {0}), PauliWord::x_type(f2, {1}), rng);
    EXPECT_NEAR(o.probabilities[0], 0.5, 1e-12);
    EXPECT_NEAR(o.probabilities[1], 0.5, 1e-12);

    Field f4 = make_field(2u);
    StateVector plus(f4, 1);
    plus.amps.setConstant(0.5);
    std::vector<std::size_t> counts(4, 0);
    for (int i = 0; i < 4000; ++i) {
        auto r = measure_projective(plus, PauliWord::z_type(f4, {1}), rng);
        ++counts[r.outcome];
        EXPECT_EQ(syndrome_component(r.state, PauliWord::z_type(f4, {1})), r.outcome);
    }
    double chi = 0;
    for (auto c : counts) chi += (c - 1000.0) * (c - 1000.0) / 1000.0;
    EXPECT_LT(chi, 16.266);

    auto det = measure_projective(stabiliser_state(cat_tableau(f2)), PauliWord::x_type(f2, {1, 1, 1, 1}), rng);
    EXPECT_EQ(det.outcome, 0u);
    EXPECT_NEAR(det.probabilities[0], 1.0, 1e-12);
}

TEST(Oracle, CodespaceDimension) {
    Field f = make_field(2u);
    EXPECT_EQ(codespace_dimension(FqMatrix(f, 2), FqMatrix(f, 2)), 16u);
    EXPECT_EQ(codespace_dimension(FqMatrix(f, 2, {{1, 1}}), FqMatrix(f, 2)), 4u);
    EXPECT_EQ(codespace_dimension(FqMatrix(f, 2, {{1, 1}}), FqMatrix(f, 2, {{1, 1}})), 1u);
}
