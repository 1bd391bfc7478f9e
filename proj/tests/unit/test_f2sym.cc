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

#include <algorithm>
#include <set>

#include "generators.h"
#include "qe7/f2sym.h"

using namespace qe7;
using qe7::testing::Gen;

namespace {

// Naive coordinate formula for E.
int naive_form(const SympVector &v, const SympVector &w) {
    const int k = v.k();
    int acc = 0;
    for (int i = 0; i < k; i++) {
        acc += v.coordinate(i) * w.coordinate(k + i) + v.coordinate(k + i) * w.coordinate(i);
    }
    return acc % 2;
}

SympMatrix naive_product(const SympMatrix &a, const SympMatrix &b) {
    std::vector<SympVector> cols;
    for (int c = 0; c < a.dim(); c++) {
        SympVector col = SympVector::zero(a.k());
        for (int r = 0; r < a.dim(); r++) {
            int acc = 0;
            for (int l = 0; l < a.dim(); l++) {
                acc ^= a.get(r, l) & b.get(l, c);
            }
            if (acc) {
                col += SympVector::basis(a.k(), r);
            }
        }
        cols.push_back(col);
    }
    return SympMatrix::from_columns(cols);
}

int rank_of_difference(const SympMatrix &m) {
    std::vector<uint32_t> rows;
    const SympMatrix id = SympMatrix::identity(m.k());
    for (int r = 0; r < m.dim(); r++) {
        rows.push_back(m.row_word(r) ^ id.row_word(r));
    }
    int rank = 0;
    for (int bit = 2 * m.k() - 1; bit >= 0; bit--) {
        auto it = std::find_if(rows.begin() + rank, rows.end(), [&](uint32_t x) { return (x >> bit) & 1; });
        if (it == rows.end()) {
            continue;
        }
        std::iter_swap(rows.begin() + rank, it);
        for (std::size_t r = 0; r < rows.size(); r++) {
            if (static_cast<int>(r) != rank && ((rows[r] >> bit) & 1)) {
                rows[r] ^= rows[rank];
            }
        }
        rank++;
    }
    return rank;
}

}  // namespace

TEST(SympVector, ParseAndPrint) {
    SympVector v = SympVector::parse("101:100");
    EXPECT_EQ(v.k(), 3);
    EXPECT_EQ(v.x(), 0b101u);
    EXPECT_EQ(v.xstar(), 0b100u);
    EXPECT_EQ(v.str(), "101:100");
    EXPECT_TRUE(v.coordinate(0));
    EXPECT_FALSE(v.coordinate(1));
    EXPECT_TRUE(v.coordinate(3));
    EXPECT_EQ(v.self_pairing(), 1);
    EXPECT_THROW(SympVector::parse("10:1"), std::invalid_argument);
    EXPECT_THROW(SympVector::parse("102:100"), std::invalid_argument);
    EXPECT_THROW(SympVector::parse("10100"), std::invalid_argument);
    EXPECT_THROW(SympVector::parse("10101:10101"), std::invalid_argument);
    EXPECT_THROW(SympVector::parse("1:0") + SympVector::parse("10:00"), std::invalid_argument);
}

TEST(SympVectorProperty, RoundTripAllVectors) {
    for (int k = 1; k <= 4; k++) {
        EXPECT_EQ(all_vectors(k).size(), std::size_t{1} << (2 * k));
        for (const auto &v : all_vectors(k)) {
            EXPECT_EQ(SympVector::parse(v.str()), v);
        }
    }
}

TEST(SymplecticFormProperty, MatchesCoordinateFormula) {
    for (int k = 1; k <= 3; k++) {
        for (const auto &v : all_vectors(k)) {
            EXPECT_EQ(symplectic_form(v, v), 0);
            for (const auto &w : all_vectors(k)) {
                EXPECT_EQ(symplectic_form(v, w), naive_form(v, w));
            }
        }
    }
}

TEST(SymplecticFormProperty, BilinearOnRandomTriples) {
    Gen g(10);
    for (int t = 0; t < 2000; t++) {
        SympVector a = g.vector(4);
        SympVector b = g.vector(4);
        SympVector c = g.vector(4);
        EXPECT_EQ(symplectic_form(a + b, c), symplectic_form(a, c) ^ symplectic_form(b, c));
        EXPECT_EQ(symplectic_form(a, b), symplectic_form(b, a));
    }
}

TEST(SympMatrixProperty, ProductMatchesNaiveProduct) {
    Gen g(11);
    for (int k = 1; k <= 4; k++) {
        const auto gens = all_transvections(k);
        for (int t = 0; t < 100; t++) {
            SympMatrix a = g.word(gens, SympMatrix::identity(k), g.uniform(0, 8));
            SympMatrix b = g.word(gens, SympMatrix::identity(k), g.uniform(0, 8));
            EXPECT_EQ(a * b, naive_product(a, b));
            EXPECT_TRUE((a * b).is_symplectic());
            SympVector v = g.vector(k);
            EXPECT_EQ((a * b).apply(v), a.apply(b.apply(v)));
            EXPECT_EQ(a.transposed().transposed(), a);
        }
    }
}

TEST(SympMatrix, ConstructorsAndErrors) {
    const std::string_view rows[2] = {"01", "10"};
    SympMatrix s = SympMatrix::from_row_strings(1, rows);
    EXPECT_EQ(s.str(), "01/10");
    EXPECT_TRUE(s.is_symplectic());
    EXPECT_FALSE(SympMatrix::identity(2).get(0, 1));
    const std::string_view bad[2] = {"11", "11"};
    SympMatrix singular = SympMatrix::from_row_strings(1, bad);
    EXPECT_FALSE(singular.is_invertible());
    EXPECT_THROW(generate_group(std::vector<SympMatrix>{singular}), std::invalid_argument);
    EXPECT_THROW(SympMatrix::identity(1) * SympMatrix::identity(2), std::invalid_argument);
}

TEST(TransvectionProperty, FormulaInvolutionAndRankOne) {
    for (int k = 1; k <= 3; k++) {
        for (const auto &v : nonzero_vectors(k)) {
            SympMatrix t = transvection_matrix(v);
            EXPECT_TRUE((t * t).is_identity());
            EXPECT_TRUE(t.is_symplectic());
            EXPECT_EQ(rank_of_difference(t), 1);
            for (const auto &w : all_vectors(k)) {
                SympVector expected = naive_form(w, v) ? w + v : w;
                EXPECT_EQ(transvection_apply(v, w), expected);
                EXPECT_EQ(t.apply(w), expected);
            }
        }
    }
    EXPECT_TRUE(transvection_matrix(SympVector::zero(2)).is_identity());
}

TEST(SymplecticGroup, OrdersMatchFormula) {
    for (int k = 1; k <= 3; k++) {
        EXPECT_EQ(generate_group(diagram_transvections(k)).order(), symplectic_group_order_formula(k));
    }
    EXPECT_EQ(symplectic_group_order_formula(1), 6u);
    EXPECT_EQ(symplectic_group_order_formula(2), 720u);
    EXPECT_EQ(symplectic_group_order_formula(3), 1451520u);
    // The full transvection set generates the same group (k <= 2 for speed).
    for (int k = 1; k <= 2; k++) {
        EXPECT_EQ(generate_group(all_transvections(k)).order(), symplectic_group_order_formula(k));
    }
}

TEST(SymplecticGroup, EveryElementIsSymplecticAtRankTwo) {
    auto group = generate_group(all_transvections(2));
    for (const auto &m : group.elements()) {
        ASSERT_TRUE(m.is_symplectic());
    }
    long long transvections = std::count_if(group.elements().begin(), group.elements().end(),
                                            [](const SympMatrix &m) { return rank_of_difference(m) == 1; });
    EXPECT_EQ(transvections, 15);
}

TEST(DiagramLabels, ShapesAndRangeChecks) {
    EXPECT_EQ(diagram_labels(1).size(), 2u);
    EXPECT_EQ(diagram_labels(2).size(), 5u);
    EXPECT_EQ(diagram_labels(3).size(), 7u);
    EXPECT_EQ(diagram_labels(3)[0].str(), "101:100");
    EXPECT_EQ(diagram_labels(3)[6].str(), "010:111");
    EXPECT_THROW(diagram_labels(4), std::invalid_argument);
    EXPECT_THROW(diagram_labels(0), std::invalid_argument);
}

TEST(QuadForms, LabelsAndEvaluation) {
    QuadLabel q = QuadLabel::parse("A[101:110]");
    EXPECT_FALSE(q.is_even());
    EXPECT_EQ(q.str(), "A[101:110]");
    EXPECT_EQ(QuadLabel::parse("Q[00:00]").str(), "Q[00:00]");
    EXPECT_THROW(QuadLabel::parse("Q[101:110]"), std::invalid_argument);
    EXPECT_THROW(QuadLabel(SympVector::parse("1:1"), Parity::Even), std::invalid_argument);
    EXPECT_EQ(quad_eval(QuadLabel(SympVector::zero(3)), SympVector::parse("101:100")), 1);
    EXPECT_EQ(quad_eval(QuadLabel(SympVector::zero(3)), SympVector::parse("101:010")), 0);
}

TEST(QuadFormsProperty, DirectDefinitionAndTransformLaw) {
    Gen g(12);
    for (int t = 0; t < 3000; t++) {
        const int k = g.uniform(1, 4);
        SympVector w = g.vector(k);
        SympVector u = g.vector(k);
        SympVector v = g.vector(k);
        QuadLabel q(w);
        EXPECT_EQ(quad_eval(q, u), u.self_pairing() ^ naive_form(u, w));
        EXPECT_EQ(quad_eval(quad_transform(v, q), u), quad_eval(q, transvection_apply(v, u)));
        EXPECT_EQ(quad_transform(v, q).parity(), q.parity());
    }
}

TEST(QuadForms, CountsAndZeroCounts) {
    for (int k = 1; k <= 4; k++) {
        const int even = (1 << (k - 1)) * ((1 << k) + 1);
        const int odd = (1 << (k - 1)) * ((1 << k) - 1);
        auto e = enumerate_quad_forms(k, Parity::Even);
        auto o = enumerate_quad_forms(k, Parity::Odd);
        EXPECT_EQ(static_cast<int>(e.size()), even);
        EXPECT_EQ(static_cast<int>(o.size()), odd);
        for (const auto &c : e) {
            EXPECT_EQ(c.zeros, even);
        }
        for (const auto &c : o) {
            EXPECT_EQ(c.zeros, odd);
        }
    }
}

TEST(OrthogonalGroups, OrdersAtRankThree) {
    EXPECT_EQ(orthogonal_group_order(QuadLabel(SympVector::zero(3))), 40320u);
    EXPECT_EQ(orthogonal_group_order(QuadLabel(SympVector::parse("100:111"))), 51840u);
}

TEST(OrthogonalGroups, RankTwoAgainstBruteForceStabilizer) {
    auto sp4 = generate_group(all_transvections(2));
    for (const char *label : {"00:00", "10:10"}) {
        QuadLabel q(SympVector::parse(label));
        std::size_t stabilizer = 0;
        for (const auto &m : sp4.elements()) {
            bool preserves = true;
            for (const auto &v : all_vectors(2)) {
                preserves = preserves && quad_eval(q, m.apply(v)) == quad_eval(q, v);
            }
            stabilizer += preserves;
        }
        const std::size_t generated = orthogonal_group_order(q);
        if (q.is_even()) {
            // O+(4,2): the orthogonal transvections only reach an index-2 subgroup.
            EXPECT_EQ(stabilizer, 72u);
            EXPECT_EQ(generated, 36u);
        } else {
            EXPECT_EQ(stabilizer, 120u);
            EXPECT_EQ(generated, 120u);
        }
    }
}

TEST(Lagrangians, CountsMatchProductFormula) {
    for (int k = 1; k <= 3; k++) {
        long long expected = 1;
        for (int i = 1; i <= k; i++) {
            expected *= (1 << i) + 1;
        }
        auto lags = enumerate_lagrangians(k);
        EXPECT_EQ(static_cast<long long>(lags.size()), expected);
        std::set<std::vector<uint32_t>> distinct;
        for (const auto &l : lags) {
            EXPECT_TRUE(l.is_lagrangian());
            std::vector<uint32_t> words;
            for (const auto &p : l.points()) {
                words.push_back(p.word());
                for (const auto &p2 : l.points()) {
                    EXPECT_EQ(symplectic_form(p, p2), 0);
                }
            }
            EXPECT_EQ(words.size(), (std::size_t{1} << k) - 1);
            distinct.insert(words);
            EXPECT_EQ(IsotropicSubspace::parse(l.str()), l);
        }
        EXPECT_EQ(distinct.size(), lags.size());
    }
}

TEST(Lagrangians, HyperplanesAreFanoLines) {
    auto lines = hyperplanes_of(standard_lagrangian(3));
    EXPECT_EQ(lines.size(), 7u);
    for (const auto &l : lines) {
        EXPECT_EQ(l.points().size(), 3u);
    }
}

TEST(Lagrangians, ParseRejectsBadBases) {
    EXPECT_THROW(IsotropicSubspace::parse("100:000,000:100"), std::invalid_argument);
    EXPECT_THROW(IsotropicSubspace::parse("100:000,100:000"), std::invalid_argument);
    EXPECT_THROW(IsotropicSubspace::parse(""), std::invalid_argument);
}
