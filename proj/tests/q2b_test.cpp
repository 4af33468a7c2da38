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

#include <bit>
#include <random>

#include "gq/gates.hpp"
#include "gq/q2b.hpp"
#include "oracles.hpp"

using namespace gq;

namespace {

using Vec = std::vector<std::uint32_t>;

BasisAssignment random_assignment(const Field &f, std::size_t n, std::mt19937_64 &rng) {
    std::vector<FieldBasis> bs;
    for (std::size_t i = 0; i < n; ++i) bs.push_back(random_basis(f, rng));
    return BasisAssignment(bs);
}

// Bit-by-bit dot product over F_2, written out rather than via BitVector::dot.
int bit_dot(const BitVector &a, const BitVector &b) {
    int acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc ^= a.get(i) & b.get(i);
    return acc;
}

// (1/|S|) sum over the stabiliser group X^a Z^b, a in span(gx), b in span(gz),
// built from Kronecker products. For qubits pass modulus 0b11.
oracle::Matrix projector(const std::vector<Vec> &gx, const std::vector<Vec> &gz, std::size_t n, std::uint64_t q,
                         std::uint64_t m) {
    auto span = [&](const std::vector<Vec> &rows) {
        std::vector<Vec> out;
        oracle::for_each_vector(rows.size(), q, [&](const Vec &c) {
            Vec v(n, 0);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                for (std::size_t j = 0; j < n; ++j) v[j] ^= static_cast<std::uint32_t>(oracle::mul(c[r], rows[r][j], m));
            }
            out.push_back(v);
        });
        return out;
    };
    auto sx = span(gx), sz = span(gz);
    const auto d = static_cast<Eigen::Index>(std::llround(std::pow(double(q), double(n))));
    oracle::Matrix p = oracle::Matrix::Zero(d, d);
    for (const auto &a : sx) {
        for (const auto &b : sz) p += oracle::pauli(a, b, m);
    }
    return p / double(sx.size() * sz.size());
}

std::vector<Vec> rows_of(const FqMatrix &m) {
    std::vector<Vec> out;
    for (const auto &r : m.row_list()) out.emplace_back(r.begin(), r.end());
    return out;
}

std::vector<Vec> rows_of(const BitMatrix &m) {
    std::vector<Vec> out;
    for (const auto &r : m.row_list()) {
        Vec v(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) v[i] = r.get(i);
        out.push_back(v);
    }
    return out;
}

// Keep only an independent subset of qubit rows so the projector oracle
// averages over a group rather than a multiset.
BitMatrix independent_rows(const BitMatrix &m) {
    BitMatrix out(m.cols());
    for (const auto &r : m.row_list()) {
        if (!out.row_space_contains(r)) out.push_row(r);
    }
    return out;
}

}  // namespace

TEST(Q2b, ExpansionBasics) {
    std::mt19937_64 rng(70);
    Field f = make_field(3u);
    auto a = random_assignment(f, 4, rng);
    EXPECT_TRUE(expand_vector(a, FqVector(4, 0)).none());
    EXPECT_TRUE(expand_dual(a, FqVector(4, 0)).none());
    for (int i = 0; i < 50; ++i) {
        FqVector v = random_vector(f, 4, rng);
        EXPECT_EQ(contract_vector(a, expand_vector(a, v)), v);
        EXPECT_EQ(contract_dual(a, expand_dual(a, v)), v);
    }
    auto one = BasisAssignment::uniform(a[2], 1);
    for (Code c = 0; c < 8; ++c) {
        BitVector bits = expand_vector(one, {c});
        Code back = 0;
        for (unsigned j = 0; j < 3; ++j) back |= static_cast<Code>(bits.get(j)) << j;
        EXPECT_EQ(back, a[2].decompose_code(c));
        EXPECT_EQ(bits, decompose(a[2], Element(f, c)));
    }
    EXPECT_THROW(expand_vector(a, FqVector(3, 0)), Error);
    EXPECT_THROW(contract_vector(a, BitVector(11)), Error);
}

TEST(Q2b, TraceInnerProductPreserved) {
    std::mt19937_64 rng(71);
    for (unsigned s : {1u, 2u, 3u, 4u}) {
        Field f = make_field(s);
        const std::uint64_t m = f.modulus().bits;
        for (int trial = 0; trial < 100; ++trial) {
            auto a = random_assignment(f, 2, rng);
            FqVector v = random_vector(f, 2, rng), w = random_vector(f, 2, rng);
            Vec vv(v.begin(), v.end()), ww(w.begin(), w.end());
            EXPECT_EQ(bit_dot(expand_vector(a, v), expand_dual(a, w)),
                      static_cast<int>(oracle::trace(oracle::dot(vv, ww, m), m)));
        }
    }
}

TEST(Q2b, TrivialAndSingleChecks) {
    std::mt19937_64 rng(72);
    Field f = make_field(2u);
    // No checks at all: ns physical qubits, all logical.
    CssCode empty(FqMatrix(f, 3), FqMatrix(f, 3));
    auto a = random_assignment(f, 3, rng);
    auto qc = convert_code(empty, a);
    EXPECT_EQ(qc.num_qubits, 6u);
    EXPECT_EQ(qc.num_logical(), 6u);

    // A single X^1 check on one qudit expands to s independent single-qubit checks.
    CssCode single(FqMatrix(f, 1, {{1}}), FqMatrix(f, 1));
    auto a1 = random_assignment(f, 1, rng);
    auto q1 = convert_code(single, a1);
    EXPECT_EQ(q1.hx.rank(), 2u);
    EXPECT_EQ(q1.num_logical(), 0u);
    BitMatrix id(2);
    id.push_row(BitVector::from_bits({1, 0}));
    id.push_row(BitVector::from_bits({0, 1}));
    EXPECT_TRUE(same_row_space(q1.hx, id));

    // XX with the same basis on both qudits gives s pairwise checks (e_i, e_i).
    Field f8 = make_field(3u);
    FieldBasis b = random_basis(f8, rng);
    CssCode xx(FqMatrix(f8, 2, {{1, 1}}), FqMatrix(f8, 2));
    auto q2 = convert_code(xx, BasisAssignment::uniform(b, 2));
    BitMatrix pairs(6);
    for (int i = 0; i < 3; ++i) {
        BitVector r(6);
        r.set(i, true);
        r.set(3 + i, true);
        pairs.push_row(r);
    }
    EXPECT_TRUE(same_row_space(q2.hx, pairs));
}

TEST(Q2b, QrsToQubits) {
    std::mt19937_64 rng(73);
    Field f = make_field(3u);
    QrsCode qrs = make_qrs(f, 8, 2, 5);
    for (int trial = 0; trial < 10; ++trial) {
        auto a = trial == 0 ? BasisAssignment::uniform(find_self_dual(f), 8) : random_assignment(f, 8, rng);
        auto qc = convert_code(qrs.css(), a);
        EXPECT_EQ(qc.num_qubits, 24u);
        EXPECT_EQ(qc.hx.rows(), 6u);
        EXPECT_EQ(qc.hz.rows(), 9u);
        EXPECT_EQ(qc.hx.rank(), 3 * qrs.css().gx().rank());
        EXPECT_EQ(qc.hz.rank(), 3 * qrs.css().gz().rank());
        EXPECT_EQ(qc.num_logical(), 9u);
        for (const auto &hx : qc.hx.row_list()) {
            for (const auto &hz : qc.hz.row_list()) EXPECT_EQ(bit_dot(hx, hz), 0);
        }
        // Logical spaces: ranks s dim and containment of the stabilisers.
        auto logicals = convert_logicals(qrs.css(), a);
        EXPECT_EQ(logicals.z_space.rank(), 24u - qc.hx.rank());
        EXPECT_EQ(logicals.x_space.rank(), 24u - qc.hz.rank());
        for (const auto &r : qc.hz.row_list()) EXPECT_TRUE(logicals.z_space.row_space_contains(r));
        for (const auto &r : qc.hx.row_list()) EXPECT_TRUE(logicals.x_space.row_space_contains(r));
        for (const auto &z : logicals.z_space.row_list()) {
            for (const auto &hx : qc.hx.row_list()) EXPECT_EQ(bit_dot(z, hx), 0);
        }
        // Enumeration basis only changes the generating set.
        auto alt = convert_code(qrs.css(), a, random_basis(f, rng));
        EXPECT_TRUE(same_row_space(alt.hx, qc.hx));
        EXPECT_TRUE(same_row_space(alt.hz, qc.hz));
    }
}

TEST(Q2b, CodespaceMatchesUnderPhi) {
    std::mt19937_64 rng(74);
    Field f = make_field(2u);
    const std::uint64_t m = f.modulus().bits;
    for (int trial = 0; trial < 10; ++trial) {
        // Random one-X-check, one-Z-check commuting code on 3 qudits.
        FqVector gx = random_vector(f, 3, rng);
        if (hamming_weight(gx) == 0) gx[0] = 1;
        FqMatrix gxm(f, 3, {gx});
        auto ker = gxm.kernel();
        FqMatrix gzm(f, 3, {ker.row(trial % ker.rows())});
        CssCode code(gxm, gzm);
        auto a = random_assignment(f, 3, rng);
        auto qc = convert_code(code, a);
        oracle::Matrix qudit = projector(rows_of(code.gx()), rows_of(code.gz()), 3, 4, m);
        oracle::Matrix qubit = projector(rows_of(independent_rows(qc.hx)), rows_of(independent_rows(qc.hz)), 6, 2, 0b11);
        DenseOperator pushed = pi_map(a, DenseOperator(f, 3, qudit));
        EXPECT_LT((pushed.matrix - qubit).cwiseAbs().maxCoeff(), 1e-9);
        EXPECT_NEAR(qubit.trace().real(), 4.0, 1e-9);
    }
}

TEST(Q2b, SyndromeReconstruction) {
    std::mt19937_64 rng(75);
    for (unsigned s : {1u, 2u, 3u, 5u}) {
        Field f = make_field(s);
        for (int trial = 0; trial < 50; ++trial) {
            FieldBasis b = random_basis(f, rng);
            Code eta = random_vector(f, 1, rng)[0];
            BitVector bits(s);
            for (unsigned i = 0; i < s; ++i) bits.set(i, f.trace(f.mul(b[i], eta)));
            EXPECT_EQ(reconstruct_syndrome(bits, b), eta);
        }
    }
    // Planted qudit error: the qubit bits of every check recover tr-components
    // of the F_q syndrome.
    Field f = make_field(3u);
    QrsCode qrs = make_qrs(f, 8, 2, 5);
    auto a = random_assignment(f, 8, rng);
    std::vector<FieldBasis> xb, zb;
    for (std::size_t j = 0; j < qrs.css().gx().rows(); ++j) xb.push_back(random_basis(f, rng));
    for (std::size_t j = 0; j < qrs.css().gz().rows(); ++j) zb.push_back(random_basis(f, rng));
    auto plan = make_plan(qrs.css(), a, xb, zb);
    EXPECT_EQ(plan.x_checks.rows(), 6u);
    EXPECT_EQ(plan.z_checks.rows(), 9u);
    for (int trial = 0; trial < 30; ++trial) {
        FqVector w = random_vector(f, 8, rng);
        auto syn = detail::qudit_syndromes(plan.x_checks, plan.x_bases, expand_dual(a, w));
        for (std::size_t j = 0; j < syn.size(); ++j) {
            Vec row(qrs.css().gx().row(j).begin(), qrs.css().gx().row(j).end());
            EXPECT_EQ(syn[j], oracle::dot(row, Vec(w.begin(), w.end()), f.modulus().bits));
        }
    }
    EXPECT_THROW(make_plan(qrs.css(), a, std::vector<FieldBasis>{}, zb), Error);
}

TEST(Q2b, EndToEndDecoding) {
    std::mt19937_64 rng(76);
    Field f = make_field(3u);
    QrsCode qrs = make_qrs(f, 8, 2, 5);
    auto a = BasisAssignment::uniform(find_self_dual(f), 8);
    auto plan = make_plan(qrs.css(), a);
    auto qc = convert_code(qrs.css(), a);

    QubitError none{BitVector(24), BitVector(24)};
    auto r0 = end_to_end_decode(qrs, a, plan, none);
    EXPECT_TRUE(r0.x.none());
    EXPECT_TRUE(r0.z.none());

    // Every single-qubit flip sits on one qudit and is within both radii.
    for (std::size_t i = 0; i < 24; ++i) {
        QubitError ex{BitVector(24), BitVector(24)}, ez{BitVector(24), BitVector(24)};
        ex.x.set(i, true);
        ez.z.set(i, true);
        EXPECT_EQ(end_to_end_decode(qrs, a, plan, ex).x, ex.x) << i;
        EXPECT_EQ(end_to_end_decode(qrs, a, plan, ez).z, ez.z) << i;
    }

    // Random errors: decode fails, or the correction leaves a syndrome-free
    // residual. Within the radius the correction is exact.
    std::size_t failures = 0;
    for (int trial = 0; trial < 300; ++trial) {
        QubitError e{BitVector(24), BitVector(24)};
        std::size_t flips = 1 + trial % 6;
        for (std::size_t k = 0; k < flips; ++k) {
            e.x.set(rng() % 24, true);
            e.z.set(rng() % 24, true);
        }
        FqVector ex = contract_vector(a, e.x), ez = contract_dual(a, e.z);
        try {
            auto r = end_to_end_decode(qrs, a, plan, e);
            EXPECT_TRUE(qc.hz.apply(r.x ^ e.x).none());
            EXPECT_TRUE(qc.hx.apply(r.z ^ e.z).none());
            if (hamming_weight(ex) <= qrs.z_perp_code().decoding_radius()) {
                EXPECT_EQ(r.x, e.x);
            }
            if (hamming_weight(ez) <= qrs.x_perp_code().decoding_radius()) {
                EXPECT_EQ(r.z, e.z);
            }
        } catch (const Error &err) {
            ++failures;
            EXPECT_EQ(err.kind(), ErrorKind::DecodeFailure);
            EXPECT_TRUE(hamming_weight(ex) > qrs.z_perp_code().decoding_radius() ||
                        hamming_weight(ez) > qrs.x_perp_code().decoding_radius());
        }
    }
    EXPECT_GT(failures, 0u);
}

namespace {

// Minimum weight of span(outer) outside span(inner), by Gray-code enumeration
// over a basis that starts with the inner rows.
std::size_t qubit_distance(const BitMatrix &outer, const BitMatrix &inner) {
    std::vector<BitVector> basis;
    BitMatrix acc(outer.cols());
    for (const auto &r : inner.row_list()) {
        if (!acc.row_space_contains(r)) {
            acc.push_row(r);
            basis.push_back(r);
        }
    }
    const std::size_t inner_dim = basis.size();
    for (const auto &r : outer.row_list()) {
        if (!acc.row_space_contains(r)) {
            acc.push_row(r);
            basis.push_back(r);
        }
    }
    std::size_t best = outer.cols() + 1;
    BitVector cur(outer.cols());
    std::uint64_t outer_mask = 0;
    for (std::uint64_t g = 1; g < (std::uint64_t{1} << basis.size()); ++g) {
        std::size_t bit = static_cast<std::size_t>(std::countr_zero(g));
        cur ^= basis[bit];
        if (bit >= inner_dim) outer_mask ^= std::uint64_t{1} << bit;
        if (outer_mask) best = std::min(best, cur.popcount());
    }
    return best;
}

}  // namespace

TEST(Q2b, ConvertedDistanceNotBelowQuditDistance) {
    // A qubit logical of weight w touches at most w qudits and contracts to a
    // nontrivial qudit logical, so qubit distances bound qudit ones from above.
    std::mt19937_64 rng(77);
    Field f = make_field(3u);
    QrsCode qrs = make_qrs(f, 8, 2, 5);
    CodeParams qp = params(qrs.css());
    for (int trial = 0; trial < 3; ++trial) {
        auto a = trial == 0 ? BasisAssignment::uniform(find_self_dual(f), 8) : random_assignment(f, 8, rng);
        auto qc = convert_code(qrs.css(), a);
        auto logicals = convert_logicals(qrs.css(), a);
        std::size_t dx = qubit_distance(logicals.x_space, qc.hx);
        std::size_t dz = qubit_distance(logicals.z_space, qc.hz);
        EXPECT_GE(dx, *qp.d_x);
        EXPECT_GE(dz, *qp.d_z);
        RecordProperty("qubit_d_x_" + std::to_string(trial), static_cast<int>(dx));
        RecordProperty("qubit_d_z_" + std::to_string(trial), static_cast<int>(dz));
    }
}
