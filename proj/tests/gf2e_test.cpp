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
#include <set>

#include "gq/gf2e.hpp"
#include "oracles.hpp"

using namespace gq;

namespace {

// Every irreducible modulus of degree 1..8, found by the reference trial division.
std::vector<std::uint64_t> all_moduli(unsigned max_degree) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p < (std::uint64_t{2} << max_degree); ++p) {
        if (oracle::irreducible(p)) out.push_back(p);
    }
    return out;
}

}  // namespace

TEST(Gf2e, IrreducibilityMatchesTrialDivision) {
    for (std::uint64_t p = 2; p < 1024; ++p) EXPECT_EQ(is_irreducible(PolyOverF2{p}), oracle::irreducible(p)) << p;
    EXPECT_TRUE(is_irreducible(PolyOverF2{0b111}));
    EXPECT_TRUE(is_irreducible(PolyOverF2{0b1101}));
    EXPECT_FALSE(is_irreducible(PolyOverF2{0b101}));
    EXPECT_TRUE(is_irreducible(PolyOverF2{0b11}));
}

TEST(Gf2e, Construction) {
    Field f8 = make_field(PolyOverF2{0b1011});
    EXPECT_EQ(f8.degree(), 3u);
    EXPECT_EQ(f8.order(), 8u);
    try {
        make_field(PolyOverF2{0b101});
        FAIL() << "reducible modulus accepted";
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::IrreducibleRequired);
    }
    try {
        make_field(0u);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnsupportedDegree);
    }
    Field f2 = make_field(1u);
    EXPECT_EQ(f2.order(), 2u);
    EXPECT_EQ(f2.primitive(), 1u);
    EXPECT_EQ(f2.mul(1, 1), 1u);
    for (unsigned s = 2; s <= 16; ++s) {
        auto m = Field::canonical_modulus(s).bits;
        EXPECT_TRUE(oracle::irreducible(m));
        for (std::uint64_t p = (std::uint64_t{1} << s) | 1u; p < m; ++p) EXPECT_FALSE(oracle::irreducible(p)) << s;
    }
}

TEST(Gf2e, WorkedProduct) {
    Field f8 = make_field(PolyOverF2{0b1011});
    EXPECT_EQ(f8.add(6, 6), 0u);
    EXPECT_EQ(f8.add(0b010, 0b001), 0b011u);
    EXPECT_EQ(f8.mul(0b110, 0b111), 0b100u);
    EXPECT_EQ(f8.trace(1), 1u);
    for (Code x = 0; x < 8; ++x) {
        EXPECT_EQ(f8.add(x, 0), x);
        EXPECT_EQ(f8.mul(x, 1), x);
    }
}

TEST(Gf2e, FrozenF4Values) {
    Field f4 = make_field(PolyOverF2{0b111});
    EXPECT_EQ(f4.mul(2, 3), 1u);
    EXPECT_EQ(f4.inv(2), 3u);
    EXPECT_EQ(f4.inv(1), 1u);
    const Code traces[4] = {0, 0, 1, 1};
    for (Code x = 0; x < 4; ++x) EXPECT_EQ(f4.trace(x), traces[x]);
    // The four functionals eta -> tr(gamma eta) as bit columns over eta = 0..3.
    std::set<std::vector<Code>> columns;
    for (Code g = 0; g < 4; ++g) {
        std::vector<Code> col;
        for (Code e = 0; e < 4; ++e) col.push_back(f4.linear_map(g, e));
        columns.insert(col);
        if (g == 0) {
            EXPECT_EQ(col, (std::vector<Code>{0, 0, 0, 0}));
        }
    }
    EXPECT_EQ(columns.size(), 4u);
}

TEST(Gf2e, AgreesWithReferenceArithmetic) {
    for (auto m : all_moduli(6)) {
        Field f = make_field(PolyOverF2{m});
        const Code q = f.order();
        for (Code a = 0; a < q; ++a) {
            for (Code b = 0; b < q; ++b) ASSERT_EQ(f.mul(a, b), oracle::mul(a, b, m)) << m;
            ASSERT_EQ(f.trace(a), oracle::trace(a, m));
            if (a) {
                ASSERT_EQ(f.inv(a), oracle::inv(a, m));
            }
        }
    }
}

TEST(Gf2e, LargeDegreeWithoutTablesAgrees) {
    std::mt19937_64 rng(17);
    for (unsigned s : {17u, 20u, 31u}) {
        Field f = make_field(s);
        EXPECT_FALSE(f.has_tables());
        const auto m = f.modulus().bits;
        std::uniform_int_distribution<Code> el(0, f.order() - 1);
        for (int i = 0; i < 200; ++i) {
            Code a = el(rng), b = el(rng);
            ASSERT_EQ(f.mul(a, b), oracle::mul(a, b, m));
            ASSERT_EQ(f.trace(a), f.trace_by_definition(a));
            if (a) {
                ASSERT_EQ(f.mul(a, f.inv(a)), 1u);
            }
        }
    }
}

TEST(Gf2e, FieldFacts) {
    for (unsigned s = 1; s <= 8; ++s) {
        Field f = make_field(s);
        const Code q = f.order();
        for (Code a = 0; a < q; ++a) {
            EXPECT_EQ(f.pow(a, q), a);
            EXPECT_EQ(f.pow(a, q - 1), a ? 1u : 0u);
            EXPECT_EQ(f.trace(f.frobenius(a)), f.trace(a));
        }
        // The primitive element generates the multiplicative group.
        std::set<Code> seen;
        for (Code i = 0; i + 1 < q; ++i) seen.insert(f.pow(f.primitive(), i));
        EXPECT_EQ(seen.size(), q - 1);
    }
}

TEST(Gf2e, LinearMapIsAdditive) {
    for (unsigned s = 1; s <= 4; ++s) {
        Field f = make_field(s);
        for (Code g = 0; g < f.order(); ++g) {
            for (Code a = 0; a < f.order(); ++a) {
                for (Code b = 0; b < f.order(); ++b) {
                    ASSERT_EQ(f.linear_map(g, a ^ b), f.linear_map(g, a) ^ f.linear_map(g, b));
                }
            }
        }
    }
}

TEST(Gf2e, SquareOfSumProperty) {
    std::mt19937_64 rng(5);
    for (unsigned s = 1; s <= 8; ++s) {
        Field f = make_field(s);
        std::uniform_int_distribution<Code> el(0, f.order() - 1);
        for (int trial = 0; trial < 100; ++trial) {
            Code sum = 0, sq = 0;
            for (int i = 0; i < 6; ++i) {
                Code e = el(rng);
                sum ^= e;
                sq ^= f.mul(e, e);
            }
            ASSERT_EQ(f.mul(sum, sum), sq);
        }
    }
}

TEST(Gf2e, ElementWrapper) {
    Field f = make_field(PolyOverF2{0b1011});
    Element a = f.element(6), b = f.element(7);
    EXPECT_EQ((a * b).code(), 4u);
    EXPECT_EQ((a + a).code(), 0u);
    EXPECT_EQ((a / a).code(), 1u);
    EXPECT_EQ(trace(f.element(1)), 1u);
    try {
        f.element(0).inv();
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
    }
    Field g = make_field(PolyOverF2{0b1101});
    try {
        (void)(a * g.element(1));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::FieldMismatch);
    }
}
