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

#include <map>
#include <set>

#include "generators.h"
#include "json.hpp"
#include "qe7/e7.h"

using namespace qe7;
using qe7::testing::Gen;

namespace {

int naive_pairing(const PicVector &a, const PicVector &b) {
    int out = -a.n[0] * b.n[0];
    for (int i = 1; i < 8; i++) {
        out += a.n[i] * b.n[i];
    }
    return out;
}

// Exhaustive scan of the window n0 in [-3, 3], ni in [-2, 2].
std::pair<std::set<PicVector>, std::set<PicVector>> scan_window() {
    const PicVector k = canonical_class();
    std::set<PicVector> roots;
    std::set<PicVector> weights;
    PicVector v;
    for (v.n[0] = -3; v.n[0] <= 3; v.n[0]++) {
        for (int code = 0; code < 78125; code++) {
            int c = code;
            for (int i = 1; i < 8; i++) {
                v.n[i] = c % 5 - 2;
                c /= 5;
            }
            const int vk = naive_pairing(v, k);
            const int vv = naive_pairing(v, v);
            if (vk == 0 && vv == 2) {
                roots.insert(v);
            } else if (vk == 1 && vv == 1) {
                weights.insert(v);
            }
        }
    }
    return {roots, weights};
}

long long determinant7(const std::array<std::array<int, 7>, 7> &m) {
    std::array<int, 7> perm = {0, 1, 2, 3, 4, 5, 6};
    long long out = 0;
    do {
        int inv = 0;
        for (int i = 0; i < 7; i++) {
            for (int j = i + 1; j < 7; j++) {
                inv += perm[i] > perm[j];
            }
        }
        long long term = inv % 2 ? -1 : 1;
        for (int i = 0; i < 7 && term; i++) {
            term *= m[i][perm[i]];
        }
        out += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace

TEST(Picard, PairingAndCanonicalClass) {
    const PicVector k = canonical_class();
    EXPECT_EQ(k.str(), "(-3,1,1,1,1,1,1,1)");
    EXPECT_EQ(pic_pairing(k, k), -9 + 7);
    Gen g(50);
    for (int t = 0; t < 500; t++) {
        PicVector a;
        PicVector b;
        for (int i = 0; i < 8; i++) {
            a.n[i] = g.uniform(-4, 4);
            b.n[i] = g.uniform(-4, 4);
        }
        EXPECT_EQ(pic_pairing(a, b), naive_pairing(a, b));
    }
}

TEST(Roots, EnumerationMatchesWindowScan) {
    auto [scan_roots, scan_weights] = scan_window();
    std::set<PicVector> roots;
    for (const auto &r : enumerate_all_roots()) {
        roots.insert(r.vector());
    }
    EXPECT_EQ(roots, scan_roots);
    std::set<PicVector> weights;
    for (const auto &w : enumerate_weight_classes()) {
        weights.insert(w.vector());
    }
    EXPECT_EQ(weights, scan_weights);
    EXPECT_EQ(roots.size(), 126u);
    EXPECT_EQ(weights.size(), 56u);
}

TEST(Roots, NamesRoundTripAndErrors) {
    for (const auto &r : enumerate_all_roots()) {
        EXPECT_EQ(RootLabel::parse(r.str()), r);
        EXPECT_EQ((-r).vector(), -r.vector());
    }
    for (const auto &w : enumerate_weight_classes()) {
        EXPECT_EQ(WeightLabel::parse(w.str()), w);
    }
    EXPECT_EQ(RootLabel::parse("R12").vector().str(), "(0,1,-1,0,0,0,0,0)");
    for (const char *bad : {"R11", "R9", "R123", "R12345", "X12", "R21", "R1238x", ""}) {
        EXPECT_THROW(RootLabel::parse(bad), std::invalid_argument) << bad;
    }
    for (const char *bad : {"W11", "W88", "W9", "W123", "-"}) {
        EXPECT_THROW(WeightLabel::parse(bad), std::invalid_argument) << bad;
    }
}

TEST(Lattice, CartanMatrixIsE7) {
    const auto &g = cartan_matrix();
    const auto &d = simple_roots();
    int edges = 0;
    std::array<int, 7> degree{};
    for (int i = 0; i < 7; i++) {
        EXPECT_EQ(g[i][i], 2);
        for (int j = 0; j < 7; j++) {
            EXPECT_EQ(g[i][j], pic_pairing(d[i], d[j]));
            if (i < j && g[i][j] != 0) {
                EXPECT_EQ(g[i][j], -1);
                edges++;
                degree[i]++;
                degree[j]++;
            }
        }
    }
    EXPECT_EQ(edges, 6);
    EXPECT_EQ(std::count(degree.begin(), degree.end(), 3), 1);
    EXPECT_EQ(std::count(degree.begin(), degree.end(), 1), 3);
    EXPECT_EQ(determinant7(g), 2);
}

TEST(Lattice, SimpleCoordinatesRoundTrip) {
    std::set<SimpleRootCoords> seen;
    for (const auto &r : enumerate_all_roots()) {
        SimpleRootCoords c = lattice_coords(r.vector());
        EXPECT_EQ(from_simple_coords(c), r.vector());
        bool all_nonneg = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
        bool all_nonpos = std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
        EXPECT_TRUE(all_nonneg || all_nonpos);
        EXPECT_EQ(all_nonneg, !r.negative) << r.str();
        seen.insert(c);
    }
    EXPECT_EQ(seen.size(), 126u);
    EXPECT_THROW(lattice_coords(PicVector::basis(0)), std::invalid_argument);
    SimpleRootCoords h = highest_root_coords();
    EXPECT_EQ(from_simple_coords(h), RootLabel::parse("R18").vector());
    EXPECT_EQ(h, (SimpleRootCoords{2, 2, 3, 4, 3, 2, 1}));
}

TEST(PiMap, LinearModTwoAndTwoToOne) {
    Gen g(51);
    for (int t = 0; t < 500; t++) {
        SimpleRootCoords a;
        SimpleRootCoords b;
        SimpleRootCoords s;
        for (int i = 0; i < 7; i++) {
            a[i] = g.uniform(-5, 5);
            b[i] = g.uniform(-5, 5);
            s[i] = a[i] + b[i];
        }
        EXPECT_EQ(pi_map(s), pi_map(a) + pi_map(b));
    }
    std::map<uint32_t, std::vector<std::string>> fibres;
    for (const auto &r : enumerate_all_roots()) {
        fibres[pi_of_root(r).word()].push_back(r.str());
    }
    EXPECT_EQ(fibres.size(), 63u);
    for (const auto &[w, names] : fibres) {
        EXPECT_NE(w, 0u);
        EXPECT_EQ(names.size(), 2u);
    }
    for (const auto &v : nonzero_vectors(3)) {
        RootLabel r = positive_root_over(v);
        EXPECT_FALSE(r.negative);
        EXPECT_EQ(pi_of_root(r), v);
    }
}

TEST(Reflections, PermutationsAndIsometry) {
    const PicVector e0 = PicVector::basis(0);
    for (const auto &r : enumerate_roots()) {
        const PicVector d = r.vector();
        EXPECT_EQ(reflect(d, d), -d);
        for (int i = 0; i < 8; i++) {
            PicVector x = PicVector::basis(i);
            EXPECT_EQ(reflect(d, reflect(d, x)), x);
        }
        if (r.kind == RootKind::Rij) {
            const int i = r.indices[0];
            const int j = r.indices[1];
            EXPECT_EQ(reflect(d, PicVector::basis(i)), PicVector::basis(j));
            EXPECT_EQ(reflect(d, e0), e0);
        }
    }
    EXPECT_EQ(reflect(RootLabel::parse("R1238").vector(), e0).str(), "(2,-1,-1,-1,0,0,0,0)");
    EXPECT_THROW(reflect(e0, e0), std::invalid_argument);
}

TEST(OddForms, BijectionAndOmegaSeven) {
    std::set<std::string> labels;
    for (const auto &w : enumerate_weights()) {
        QuadLabel q = odd_form_of_weight(w);
        EXPECT_FALSE(q.is_even());
        labels.insert(q.str());
        for (const auto &r : enumerate_roots()) {
            EXPECT_EQ(quad_eval(q, pi_of_root(r)), weight_root_pairing(w, r) == 0 ? 1 : 0);
        }
    }
    EXPECT_EQ(labels.size(), 28u);
    EXPECT_EQ(odd_form_of_weight(WeightLabel::parse("W78")).str(), "A[101:110]");
}

TEST(OrthogonalRootSets, OnePerLagrangian) {
    auto sets = orthogonal_root_sets();
    auto lags = enumerate_lagrangians(3);
    ASSERT_EQ(sets.size(), lags.size());
    std::set<std::set<std::string>> distinct;
    for (std::size_t i = 0; i < sets.size(); i++) {
        EXPECT_EQ(sets[i].lagrangian, lags[i]);
        std::set<std::string> names;
        for (const auto &r : sets[i].roots) {
            names.insert(r.str());
        }
        EXPECT_EQ(names.size(), 7u);
        distinct.insert(names);
    }
    EXPECT_EQ(distinct.size(), 135u);
}

TEST(Restriction, StandardTable) {
    FanoDecomposition d = restriction_decomposition(standard_lagrangian(3));
    EXPECT_TRUE(d.standard);
    const std::map<std::string, std::string> letters = {{"A", "R2568"}, {"B", "R1238"}, {"C", "R3468"},
                                                        {"D", "R2478"}, {"E", "R3578"}, {"F", "R1458"},
                                                        {"G", "R1678"}};
    ASSERT_EQ(d.points.size(), 7u);
    for (const auto &p : d.points) {
        EXPECT_EQ(letters.at(p.letter), p.root.str());
        EXPECT_EQ(pi_of_root(p.root), p.v);
    }
    const std::map<int, std::set<std::string>> weights = {
        {1, {"W23", "W45", "W67", "W18"}}, {2, {"W13", "W47", "W56", "W28"}}, {3, {"W12", "W46", "W57", "W38"}},
        {4, {"W15", "W27", "W36", "W48"}}, {5, {"W14", "W26", "W37", "W58"}}, {6, {"W17", "W25", "W34", "W68"}},
        {7, {"W16", "W24", "W35", "W78"}}};
    ASSERT_EQ(d.lines.size(), 7u);
    for (const auto &l : d.lines) {
        ASSERT_TRUE(l.a.has_value());
        std::set<std::string> ws;
        for (const auto &w : l.weights) {
            ws.insert(w.str());
        }
        EXPECT_EQ(ws, weights.at(*l.a)) << l.name;
        for (const auto &r : l.roots) {
            // Every root on line a involves the index a.
            EXPECT_TRUE(std::count(r.indices.begin(), r.indices.end(), *l.a) == 1) << l.name;
        }
    }
    auto j = nlohmann::json::parse(to_json(d));
    EXPECT_EQ(j["lagrangian"], "100:000,010:000,001:000");
    EXPECT_EQ(j["lines"].size(), 7u);
    EXPECT_TRUE(j["lines"][0].contains("a"));
}

TEST(Restriction, EveryLagrangianAndErrors) {
    for (const auto &lag : enumerate_lagrangians(3)) {
        FanoDecomposition d = restriction_decomposition(lag);
        std::multiset<std::string> ws;
        for (const auto &l : d.lines) {
            EXPECT_EQ(l.roots.size(), 3u);
            EXPECT_EQ(l.points.size(), 3u);
            for (const auto &w : l.weights) {
                ws.insert(w.str());
            }
        }
        EXPECT_EQ(ws.size(), 28u);
        EXPECT_EQ(std::set<std::string>(ws.begin(), ws.end()).size(), 28u);
    }
    EXPECT_THROW(restriction_decomposition(IsotropicSubspace::parse("100:000,010:000")), std::invalid_argument);
    EXPECT_THROW(restriction_decomposition(standard_lagrangian(2)), std::invalid_argument);
}

TEST(Multiplicities, ThirtyTwoTwelveTwelve) {
    auto mult = weight_multiplicities();
    ASSERT_EQ(mult.size(), 63u);
    for (const auto &m : mult) {
        EXPECT_EQ(m.n0, 32) << m.root.str();
        EXPECT_EQ(m.n_plus, 12);
        EXPECT_EQ(m.n_minus, 12);
    }
}

TEST(Weyl, OrderAndKernel) {
    WeylSummary w = weyl_group_summary();
    EXPECT_EQ(w.order, 2903040u);
    EXPECT_TRUE(w.contains_minus_identity);
    EXPECT_EQ(w.kernel_size, 2u);
    EXPECT_TRUE(w.kernel_is_plus_minus_identity);
    EXPECT_EQ(w.image_order, 1451520u);
}
