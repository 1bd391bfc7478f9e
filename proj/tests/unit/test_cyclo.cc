// Copyright 2026 The qe7 Authors
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

#include "generators.h"
#include "qe7/cyclo.h"

using namespace qe7;
using qe7::testing::Gen;
using qe7::testing::to_complex;

TEST(Dyadic, NormalizesAndParses) {
    EXPECT_EQ(Dyadic(4, 3), Dyadic(1, 1));
    EXPECT_EQ(Dyadic(0, 7).exp(), 0);
    EXPECT_EQ(Dyadic::parse("3/2^2"), Dyadic(3, 2));
    EXPECT_EQ(Dyadic::parse("-6/2^2"), Dyadic(-3, 1));
    EXPECT_EQ(Dyadic::parse("5"), Dyadic(5));
    EXPECT_EQ(Dyadic(-3, 1).str(), "-3/2^1");
    EXPECT_THROW(Dyadic::parse("1/3"), std::invalid_argument);
    EXPECT_THROW(Dyadic::parse("x/2^1"), std::invalid_argument);
    EXPECT_THROW(Dyadic::parse("1/2^-1"), std::invalid_argument);
}

TEST(Dyadic, OverflowIsReported) {
    Dyadic big(int64_t{1} << 61);
    EXPECT_THROW(big * big, std::overflow_error);
    EXPECT_THROW(Dyadic(INT64_MAX) + Dyadic(1), std::overflow_error);
}

TEST(Dyadic, RationalRoundTrip) {
    Gen g(1);
    for (int t = 0; t < 200; t++) {
        Dyadic d = g.dyadic();
        EXPECT_EQ(Dyadic::from_rational(d.to_rational()), d);
        EXPECT_EQ(Dyadic::parse(d.str()), d);
    }
    EXPECT_FALSE(Dyadic::from_rational(BigRational(1, 3)).has_value());
}

TEST(CycloDyadic, ZetaPowers) {
    EXPECT_EQ(CycloDyadic::zeta_pow(8), CycloDyadic(1));
    EXPECT_EQ(CycloDyadic::zeta_pow(4), CycloDyadic(-1));
    EXPECT_EQ(CycloDyadic::i_pow(1) * CycloDyadic::i_pow(1), CycloDyadic(-1));
    EXPECT_EQ(CycloDyadic::inv_sqrt2() * CycloDyadic::inv_sqrt2(), CycloDyadic({Dyadic(1, 1), Dyadic(0), Dyadic(0), Dyadic(0)}));
    EXPECT_EQ(CycloDyadic::one_minus_i_half() + CycloDyadic::one_plus_i_half(), CycloDyadic(1));
    for (int m = -9; m < 17; m++) {
        EXPECT_EQ(CycloDyadic::zeta_pow(m).as_zeta_power(), ((m % 8) + 8) % 8);
    }
    EXPECT_FALSE(CycloDyadic(2).as_zeta_power().has_value());
}

TEST(CycloDyadic, PrettyPrinting) {
    EXPECT_EQ(CycloDyadic::one_minus_i_half().pretty(), "1/2 - 1/2*i");
    EXPECT_EQ(CycloDyadic::zeta_pow(1).pretty(), "z");
    EXPECT_EQ(CycloDyadic::zeta_pow(7).pretty(), "-i*z");
    EXPECT_EQ(CycloDyadic().pretty(), "0");
}

TEST(CycloDyadicProperty, RingLawsAgreeWithComplexEvaluation) {
    Gen g(2);
    for (int t = 0; t < 500; t++) {
        CycloDyadic a = g.cyclo();
        CycloDyadic b = g.cyclo();
        CycloDyadic c = g.cyclo();
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a - a, CycloDyadic());
        EXPECT_LT(std::abs(to_complex(a * b) - to_complex(a) * to_complex(b)), 1e-9);
        EXPECT_LT(std::abs(to_complex(a + b) - (to_complex(a) + to_complex(b))), 1e-9);
    }
}

TEST(CycloDyadicProperty, GaloisActsAsAutomorphism) {
    Gen g(3);
    for (int t = 0; t < 300; t++) {
        CycloDyadic a = g.cyclo();
        CycloDyadic b = g.cyclo();
        for (int m : {1, 3, 5, 7}) {
            EXPECT_EQ((a * b).galois(m), a.galois(m) * b.galois(m));
            EXPECT_EQ((a + b).galois(m), a.galois(m) + b.galois(m));
        }
        // Complex conjugation is zeta -> zeta^7.
        EXPECT_LT(std::abs(to_complex(a.galois(7)) - std::conj(to_complex(a))), 1e-9);
    }
    EXPECT_THROW(CycloDyadic(1).galois(2), std::invalid_argument);
}

TEST(CycloDyadicProperty, InversesOfUnits) {
    Gen g(4);
    for (int t = 0; t < 200; t++) {
        // Products of zeta powers, (1 +- i)/2 and dyadic scalars are units of Z[zeta8, 1/2].
        CycloDyadic u = CycloDyadic::zeta_pow(g.uniform(0, 7));
        for (int f = g.uniform(0, 3); f > 0; f--) {
            u = u * (g.coin() ? CycloDyadic::one_minus_i_half() : CycloDyadic::inv_sqrt2());
        }
        auto inv = u.try_inverse();
        ASSERT_TRUE(inv.has_value());
        EXPECT_EQ(u * *inv, CycloDyadic(1));
    }
    EXPECT_FALSE(CycloDyadic().try_inverse().has_value());
    EXPECT_FALSE(CycloDyadic(3).try_inverse().has_value());
}

TEST(CycloRational, InverseMatchesDyadic) {
    Gen g(5);
    for (int t = 0; t < 100; t++) {
        CycloDyadic a = g.cyclo();
        if (a.is_zero()) {
            continue;
        }
        CycloRational r(a);
        CycloRational one = r * r.inverse();
        EXPECT_EQ(one.to_dyadic(), CycloDyadic(1));
    }
    EXPECT_THROW(CycloRational().inverse(), std::domain_error);
    EXPECT_FALSE((CycloRational(1) * CycloRational(CycloDyadic(3)).inverse()).to_dyadic().has_value());
}
