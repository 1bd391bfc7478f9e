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


#include "qe7/verify.h"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "qe7/e7.h"
#include "qe7/f2sym.h"
#include "qe7/heisenberg.h"
#include "qe7/tensor_forms.h"
#include "qe7_golden_data.h"

namespace qe7 {

namespace {

std::string yes_no(bool b) {
    return b ? "true" : "false";
}

// Rank over F2 of 2k-bit row words.
int f2_rank(std::vector<uint32_t> rows) {
    int rank = 0;
    for (int bit = 31; bit >= 0; bit--) {
        auto it = std::find_if(rows.begin() + rank, rows.end(), [&](uint32_t r) { return (r >> bit) & 1; });
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

bool is_transvection(const SympMatrix &m) {
    std::vector<uint32_t> rows;
    const SympMatrix id = SympMatrix::identity(m.k());
    for (int r = 0; r < m.dim(); r++) {
        rows.push_back(m.row_word(r) ^ id.row_word(r));
    }
    return f2_rank(rows) == 1;
}

PhasedOperator kron(const PhasedOperator &a, const PhasedOperator &b) {
    PhasedOperator out(a.k() + b.k());
    for (int r1 = 0; r1 < a.dim(); r1++) {
        for (int c1 = 0; c1 < a.dim(); c1++) {
            for (int r2 = 0; r2 < b.dim(); r2++) {
                for (int c2 = 0; c2 < b.dim(); c2++) {
                    out.at(r1 * b.dim() + r2, c1 * b.dim() + c2) = a.at(r1, c1) * b.at(r2, c2);
                }
            }
        }
    }
    return out;
}

PhasedOperator pauli_x() {
    return PhasedOperator::from_entries(1, {0, 1, 1, 0});
}

PhasedOperator pauli_z() {
    return PhasedOperator::from_entries(1, {1, 0, 0, -1});
}

std::vector<HeisenbergElement> all_heisenberg(int k) {
    std::vector<HeisenbergElement> out;
    for (int s = 0; s < 4; s++) {
        for (const auto &v : all_vectors(k)) {
            out.emplace_back(s, v);
        }
    }
    return out;
}

// Rows split on whitespace, '#' lines skipped.
std::vector<std::vector<std::string>> parse_table(std::string_view text) {
    std::vector<std::vector<std::string>> out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream fields(line);
        std::vector<std::string> row;
        std::string f;
        while (fields >> f) {
            row.push_back(f);
        }
        if (!row.empty()) {
            out.push_back(row);
        }
    }
    return out;
}

std::string sorted_csv(std::string_view csv) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const auto &p : parts) {
        out += (out.empty() ? "" : ",") + p;
    }
    return out;
}

template <typename T, typename F>
std::string join(const std::vector<T> &items, F f) {
    std::string out;
    for (const auto &x : items) {
        out += (out.empty() ? "" : ",") + f(x);
    }
    return out;
}

std::string sorted_name(std::string name) {
    std::sort(name.begin(), name.end());
    return name;
}

// Row-wise nonzero entries, "col:value" separated by spaces, rows by '|'.
std::string brief(const PhasedOperator &m) {
    std::string out;
    for (int r = 0; r < m.dim(); r++) {
        out += r ? "|" : "";
        bool first = true;
        for (int c = 0; c < m.dim(); c++) {
            if (!m.at(r, c).is_zero()) {
                out += (first ? "" : " ") + std::to_string(c) + ":" + m.at(r, c).pretty();
                first = false;
            }
        }
    }
    return out;
}

// Conjugation by CNOT sends X_c to X_c X_t and Z_t to Z_c Z_t, fixing the others.
SympMatrix cnot_phi_oracle(int control, int target, int k) {
    std::vector<SympVector> images;
    for (int c = 0; c < 2 * k; c++) {
        SympVector e = SympVector::basis(k, c);
        if (c == control - 1) {
            e += SympVector::basis(k, target - 1);
        }
        if (c == k + target - 1) {
            e += SympVector::basis(k, k + control - 1);
        }
        images.push_back(e);
    }
    return SympMatrix::from_columns(images);
}

SympMatrix reverse_qubits(const SympMatrix &m) {
    const int k = m.k();
    auto flip = [k](int c) { return c < k ? k - 1 - c : 3 * k - 1 - c; };
    std::vector<SympVector> images;
    for (int c = 0; c < 2 * k; c++) {
        SympVector col = m.column(flip(c));
        SympVector out = SympVector::zero(k);
        for (int i = 0; i < 2 * k; i++) {
            if (col.coordinate(i)) {
                out += SympVector::basis(k, flip(i));
            }
        }
        images.push_back(out);
    }
    return SympMatrix::from_columns(images);
}

void suite_heisenberg(VerificationReport &r) {
    const SympVector x1 = SympVector::parse("1:0");
    const SympVector z1 = SympVector::parse("0:1");
    r.expect_eq("xz_product", "i^2·U[1:1]", h_mul(HeisenbergElement(0, x1), HeisenbergElement(0, z1)).str());
    r.expect_eq("zx_product", "i^0·U[1:1]", h_mul(HeisenbergElement(0, z1), HeisenbergElement(0, x1)).str());

    for (int k = 1; k <= 2; k++) {
        const auto elems = all_heisenberg(k);
        int inverse_ok = 0;
        int commutator_ok = 0;
        int hom_ok = 0;
        for (const auto &a : elems) {
            inverse_ok += h_mul(a, h_inv(a)) == HeisenbergElement::identity(k);
            for (const auto &b : elems) {
                HeisenbergElement expected(2 * symplectic_form(a.v, b.v), SympVector::zero(k));
                commutator_ok += h_commutator(a, b) == expected;
                hom_ok += schrodinger_matrix(h_mul(a, b)) == schrodinger_matrix(a) * schrodinger_matrix(b);
            }
        }
        const long long n = static_cast<long long>(elems.size());
        const std::string suffix = "_k" + std::to_string(k);
        r.expect_eq("inverse" + suffix, n, inverse_ok);
        r.expect_eq("commutator" + suffix, n * n, commutator_ok);
        r.expect_eq("homomorphism" + suffix, n * n, hom_ok);
    }

    for (int k = 1; k <= 3; k++) {
        std::set<std::string> keys;
        for (const auto &h : all_heisenberg(k)) {
            keys.insert(schrodinger_matrix(h).key());
        }
        r.expect_eq("faithful_k" + std::to_string(k), 4LL << (2 * k), static_cast<long long>(keys.size()));
    }

    r.add("u_x_is_X", schrodinger_matrix(HeisenbergElement(0, x1)) == pauli_x(), "X", "U[1:0]");
    r.add("u_z_is_Z", schrodinger_matrix(HeisenbergElement(0, z1)) == pauli_z(), "Z", "U[0:1]");
    r.add("center_is_scalar",
          schrodinger_matrix(HeisenbergElement(1, SympVector::zero(3))) ==
              PhasedOperator::scalar(3, CycloDyadic::i_pow(1)),
          "iI", brief(schrodinger_matrix(HeisenbergElement(1, SympVector::zero(3)))));

    int tensor_ok = 0;
    for (uint32_t x = 0; x < 8; x++) {
        PhasedOperator expected = PhasedOperator::identity(1);
        bool first = true;
        for (int q = 2; q >= 0; q--) {
            PhasedOperator f = ((x >> q) & 1) ? pauli_x() : PhasedOperator::identity(1);
            expected = first ? f : kron(expected, f);
            first = false;
        }
        tensor_ok += schrodinger_matrix(HeisenbergElement(0, SympVector(3, x, 0))) == expected;
    }
    r.expect_eq("x_part_tensor_factorization", 8, tensor_ok);

    int transpose_ok = 0;
    int order_ok = 0;
    int total = 0;
    for (int k = 1; k <= 3; k++) {
        for (const auto &v : all_vectors(k)) {
            PhasedOperator u = schrodinger_matrix(HeisenbergElement(0, v));
            CycloDyadic sign = v.self_pairing() ? CycloDyadic(-1) : CycloDyadic(1);
            transpose_ok += u.transposed() == u.scaled(sign) && (u.transposed() * u).is_identity();
            order_ok += u * u == PhasedOperator::scalar(k, sign);
            total++;
        }
    }
    r.expect_eq("transpose_law", total, transpose_ok);
    r.expect_eq("order_dichotomy", total, order_ok);

    for (int k = 1; k <= 2; k++) {
        int commute_ok = 0;
        int pairs = 0;
        for (const auto &v : all_vectors(k)) {
            for (const auto &w : all_vectors(k)) {
                PhasedOperator uv = schrodinger_matrix(HeisenbergElement(0, v));
                PhasedOperator uw = schrodinger_matrix(HeisenbergElement(0, w));
                CycloDyadic sign = symplectic_form(v, w) ? CycloDyadic(-1) : CycloDyadic(1);
                commute_ok += uv * uw == (uw * uv).scaled(sign);
                pairs++;
            }
        }
        r.expect_eq("commutation_k" + std::to_string(k), pairs, commute_ok);
    }
}

void suite_normalizer(VerificationReport &r) {
    for (int k = 1; k <= 3; k++) {
        int realize = 0;
        int inverse = 0;
        int square = 0;
        for (const auto &v : nonzero_vectors(k)) {
            PhasedOperator m = lift_transvection(v);
            realize += normalizer_image(m).phi == transvection_matrix(v);
            inverse += (m * lift_transvection_inverse(v)).is_identity();
            auto sq = as_scaled_heisenberg(m * m);
            auto z = sq ? sq->scalar.as_zeta_power() : std::nullopt;
            square += sq && sq->w == v && z && *z % 2 == 0;
        }
        const long long n = (1LL << (2 * k)) - 1;
        const std::string suffix = "_k" + std::to_string(k);
        r.expect_eq("lift_realizes_transvection" + suffix, n, realize);
        r.expect_eq("lift_inverse" + suffix, n, inverse);
        r.expect_eq("lift_square_is_heisenberg" + suffix, n, square);
    }
    r.add("lift_zero_is_identity", lift_transvection(SympVector::zero(3)).is_identity(), "I",
          brief(lift_transvection(SympVector::zero(3))));
    r.add("m_1_is_m_t", lift_transvection(SympVector::parse("1:0")) == mt_operator(), brief(mt_operator()),
          brief(lift_transvection(SympVector::parse("1:0"))));
    PhasedOperator diag = PhasedOperator::from_entries(1, {1, 0, 0, CycloDyadic::i_pow(3)});
    r.add("m_1star_is_diag", lift_transvection(SympVector::parse("0:1")) == diag, brief(diag),
          brief(lift_transvection(SympVector::parse("0:1"))));

    PhasedOperator c12 = cnot_operator(1, 2, 3);
    PhasedOperator expected_c12(3);
    // 2x2 blocks (I 0 0 0; 0 I 0 0; 0 0 0 I; 0 0 I 0)
    const int block_of[4] = {0, 1, 3, 2};
    for (int br = 0; br < 4; br++) {
        for (int i = 0; i < 2; i++) {
            expected_c12.at(2 * br + i, 2 * block_of[br] + i) = 1;
        }
    }
    r.add("cnot_matrix", c12 == expected_c12, brief(expected_c12), brief(c12));
    r.add("cnot_square", (c12 * c12).is_identity(), "I", brief(c12 * c12));
    r.expect_eq("cnot_12_phi", cnot_phi_oracle(1, 2, 3).str(), normalizer_image(c12).phi.str());
    const uint32_t a_rows[3] = {0b100, 0b010, 0b011};
    const uint32_t a_inv_t_rows[3] = {0b100, 0b011, 0b001};
    const SympMatrix block = SympMatrix::block_diagonal(3, a_rows, a_inv_t_rows);
    r.expect_eq("cnot_23_phi_is_block", block.str(), normalizer_image(cnot_operator(2, 3, 3)).phi.str());
    r.expect_eq("cnot_12_phi_reversed_transposed_is_block", block.str(),
                reverse_qubits(normalizer_image(c12).phi.transposed()).str());
    long long oracle_ok = 0;
    for (int c = 1; c <= 3; c++) {
        for (int t = 1; t <= 3; t++) {
            if (c != t) {
                oracle_ok += normalizer_image(cnot_operator(c, t, 3)).phi == cnot_phi_oracle(c, t, 3);
            }
        }
    }
    r.expect_eq("cnot_phi_pauli_rule", 6, oracle_ok);

    int u_ok = 0;
    for (const auto &w : all_vectors(2)) {
        auto img = normalizer_image(schrodinger_matrix(HeisenbergElement(0, w)));
        bool ok = img.phi.is_identity();
        for (int c = 0; c < 4; c++) {
            ok = ok && img.f[c] == 2 * symplectic_form(SympVector::basis(2, c), w);
        }
        u_ok += ok;
    }
    r.expect_eq("heisenberg_phi_identity", 16, u_ok);
    r.expect_eq("m_s_phi", "01/10", normalizer_image(ms_operator()).phi.str());
    r.expect_eq("m_t_phi", transvection_matrix(SympVector::parse("1:0")).str(), normalizer_image(mt_operator()).phi.str());

    std::mt19937 rng(7);
    std::vector<PhasedOperator> pool;
    for (const auto &v : nonzero_vectors(3)) {
        pool.push_back(lift_transvection(v));
    }
    for (int c = 1; c <= 3; c++) {
        for (int t = 1; t <= 3; t++) {
            if (c != t) {
                pool.push_back(cnot_operator(c, t, 3));
            }
        }
    }
    int functorial = 0;
    const int samples = 100;
    for (int s = 0; s < samples; s++) {
        const auto &m = pool[rng() % pool.size()];
        const auto &n = pool[rng() % pool.size()];
        functorial += normalizer_image(m * n).phi == normalizer_image(m).phi * normalizer_image(n).phi;
    }
    r.expect_eq("phi_functorial_sampled", samples, functorial);

    bool rejected = false;
    try {
        normalizer_image(PhasedOperator::from_entries(1, {1, 0, 0, CycloDyadic::zeta_pow(1)}));
    } catch (const NotInNormalizer &) {
        rejected = true;
    }
    r.add("t_gate_not_in_normalizer", rejected, "NotInNormalizer", rejected ? "NotInNormalizer" : "accepted");

    std::vector<PhasedOperator> gens = {ms_operator(), mt_operator()};
    r.expect_eq("projective_order", 24, static_cast<long long>(generate_projective_group(gens).order()));
    r.expect_eq("raw_order", 96, static_cast<long long>(generate_operator_group(gens).order()));
    gens.push_back(PhasedOperator::scalar(1, CycloDyadic::zeta_pow(1)));
    r.expect_eq("scalar_inclusive_order", 192, static_cast<long long>(generate_operator_group(gens).order()));
    PhasedOperator m2 = ms_prime_operator() * mt_operator() * ms_prime_operator();
    r.add("m_double_prime_diag", m2 == diag, brief(diag), brief(m2));
    std::vector<PhasedOperator> g1 = {ms_prime_operator(), m2};
    r.expect_eq("g1_order", 192, static_cast<long long>(generate_operator_group(g1).order()));

    std::vector<SympMatrix> images;
    for (const auto &v : diagram_labels(2)) {
        images.push_back(normalizer_image(lift_transvection(v)).phi);
    }
    r.expect_eq("lift_images_generate_sp4", 720, static_cast<long long>(generate_group(images).order()));
}

void suite_coxeter(VerificationReport &r) {
    for (int k = 1; k <= 3; k++) {
        long long ok = 0;
        long long total = 0;
        for (const auto &v : nonzero_vectors(k)) {
            SympMatrix tv = transvection_matrix(v);
            ok += (tv * tv).is_identity() && tv.is_symplectic();
            total++;
            for (const auto &w : nonzero_vectors(k)) {
                if (v == w) {
                    continue;
                }
                SympMatrix p = tv * transvection_matrix(w);
                bool rel;
                if (symplectic_form(v, w) == 0) {
                    rel = (p * p).is_identity();
                } else {
                    rel = (p * p * p).is_identity() && !p.is_identity() &&
                          tv * transvection_matrix(w) * tv == transvection_matrix(v + w);
                }
                ok += rel;
                total++;
            }
        }
        r.expect_eq("coxeter_relations_k" + std::to_string(k), total, ok);
    }

    const auto v = diagram_labels(3);
    const auto &cartan = cartan_matrix();
    int adj = 0;
    for (int i = 0; i < 7; i++) {
        for (int j = 0; j < 7; j++) {
            if (i != j) {
                adj += symplectic_form(v[i], v[j]) == (cartan[i][j] & 1);
            }
        }
    }
    r.expect_eq("e7_diagram_adjacency", 42, adj);
    const SympVector tilde = SympVector::parse("100:111");
    int tilde_ok = symplectic_form(tilde, v[0]) == 1;
    for (int i = 1; i < 7; i++) {
        tilde_ok += symplectic_form(tilde, v[i]) == 0;
    }
    r.expect_eq("highest_root_label_pairing", 7, tilde_ok);

    const auto u = diagram_labels(2);
    int chain = 0;
    for (int i = 0; i < 5; i++) {
        for (int j = i + 1; j < 5; j++) {
            chain += symplectic_form(u[i], u[j]) == (j == i + 1 ? 1 : 0);
        }
    }
    r.expect_eq("a5_diagram_pattern", 10, chain);
    auto s6 = generate_group(diagram_transvections(2));
    r.expect_eq("a5_group_order", 720, static_cast<long long>(s6.order()));
    long long transvections = std::count_if(s6.elements().begin(), s6.elements().end(), is_transvection);
    r.expect_eq("a5_group_transvections", 15, transvections);

    int nondegenerate = 0;
    for (const auto &a : nonzero_vectors(3)) {
        const auto all = all_vectors(3);
        nondegenerate += std::any_of(all.begin(), all.end(), [&](const SympVector &b) { return symplectic_form(a, b); });
    }
    r.expect_eq("form_nondegenerate_k3", 63, nondegenerate);
}

void suite_quadforms(VerificationReport &r) {
    for (int k = 1; k <= 4; k++) {
        const long long even = (1LL << (k - 1)) * ((1LL << k) + 1);
        const long long odd = (1LL << (k - 1)) * ((1LL << k) - 1);
        auto e = enumerate_quad_forms(k, Parity::Even);
        auto o = enumerate_quad_forms(k, Parity::Odd);
        const std::string suffix = "_k" + std::to_string(k);
        r.expect_eq("even_count" + suffix, even, static_cast<long long>(e.size()));
        r.expect_eq("odd_count" + suffix, odd, static_cast<long long>(o.size()));
        r.expect_eq("even_zeros" + suffix, even * static_cast<long long>(e.size()),
                    std::accumulate(e.begin(), e.end(), 0LL, [](long long acc, const QuadFormCount &c) { return acc + c.zeros; }));
        r.expect_eq("odd_zeros" + suffix, odd * static_cast<long long>(o.size()),
                    std::accumulate(o.begin(), o.end(), 0LL, [](long long acc, const QuadFormCount &c) { return acc + c.zeros; }));
    }
    r.expect_eq("q0_at_101_100", 1, quad_eval(QuadLabel(SympVector::zero(3)), SympVector::parse("101:100")));
    const QuadLabel q7(SympVector::parse("101:110"));
    const auto labels = diagram_labels(3);
    int q7_ok = 0;
    for (int i = 0; i < 6; i++) {
        q7_ok += quad_eval(q7, labels[i]);
    }
    r.expect_eq("q_omega7_on_diagram", 6, q7_ok);

    for (int k = 1; k <= 3; k++) {
        long long ok = 0;
        long long total = 0;
        for (const auto &w : all_vectors(k)) {
            QuadLabel q(w);
            for (const auto &v : all_vectors(k)) {
                QuadLabel t = quad_transform(v, q);
                bool good = t.parity() == q.parity();
                for (const auto &u : all_vectors(k)) {
                    good = good && quad_eval(t, u) == quad_eval(q, transvection_apply(v, u));
                }
                ok += good;
                total++;
            }
        }
        r.expect_eq("transform_pointwise_k" + std::to_string(k), total, ok);
    }

    for (int k = 1; k <= 3; k++) {
        long long ok = 0;
        long long total = 0;
        for (const auto &a : all_vectors(k)) {
            for (const auto &b : all_vectors(k)) {
                QuadLabel qa(a);
                QuadLabel qb(b);
                if (qa.parity() != qb.parity() || a == b) {
                    continue;
                }
                ok += quad_transform(a + b, qa) == qb;
                total++;
            }
        }
        r.expect_eq("transitivity_k" + std::to_string(k), total, ok);
    }

    for (int k = 1; k <= 2; k++) {
        long long ok = 0;
        long long total = 0;
        for (const auto &w : all_vectors(k)) {
            for (const auto &u : all_vectors(k)) {
                for (const auto &v : all_vectors(k)) {
                    QuadLabel q(w);
                    ok += quad_eval(q, u + v) == (quad_eval(q, u) ^ quad_eval(q, v) ^ symplectic_form(u, v));
                    ok += quad_eval(QuadLabel(u + w), v) == (quad_eval(q, v) ^ symplectic_form(v, u));
                    total += 2;
                }
            }
        }
        r.expect_eq("polarization_and_shift_k" + std::to_string(k), total, ok);
    }

    std::set<uint32_t> odd_images;
    int pair_ok = 0;
    for (const auto &w : enumerate_weights()) {
        QuadLabel q = odd_form_of_weight(w);
        odd_images.insert(q.w().word());
        pair_ok += odd_form_of_weight(-w) == q;
    }
    r.expect_eq("odd_form_bijection", 28, static_cast<long long>(odd_images.size()));
    r.expect_eq("odd_form_sign_invariant", 28, pair_ok);
    r.expect_eq("odd_form_omega7", "A[101:110]", odd_form_of_weight(WeightLabel::parse("W78")).str());
    long long ones = 0;
    for (const auto &v : nonzero_vectors(3)) {
        ones += quad_eval(q7, v);
    }
    r.expect_eq("omega7_form_ones", 36, ones);
    const WeightLabel w78 = WeightLabel::parse("W78");
    long long perp = 0;
    for (const auto &root : enumerate_roots()) {
        perp += weight_root_pairing(w78, root) == 0;
    }
    r.expect_eq("omega7_perp_positive_roots", 36, perp);
}

void suite_tensors(VerificationReport &r) {
    auto x = [](int i) { return IntPolynomial::variable(i); };
    auto q = [](std::string_view s) { return form_polynomial(QuadLabel(SympVector::parse(s))); };
    r.add("q00_k1", q("0:0") == x(0) * x(0) + x(1) * x(1), "X0^2+X1^2", join(term_strings(1, q("0:0")), [](auto s) { return s; }));
    r.add("q01_k1", q("0:1") == x(0) * x(0) - x(1) * x(1), "X0^2-X1^2", join(term_strings(1, q("0:1")), [](auto s) { return s; }));
    r.add("q10_k1", q("1:0") == (x(0) * x(1)).scaled(2), "2X0X1", join(term_strings(1, q("1:0")), [](auto s) { return s; }));
    r.add("a11_k1", q("1:1") == x(0) * x(3) - x(1) * x(2), "X0Y1-X1Y0", join(term_strings(1, q("1:1")), [](auto s) { return s; }));
    IntPolynomial q1111 = (x(0) * x(3) - x(2) * x(1)).scaled(2);
    r.add("q1111_k2", q("11:11") == q1111, "2(X00X11-X10X01)", join(term_strings(2, q("11:11")), [](auto s) { return s; }));
    bool wrong_parity = false;
    try {
        form_polynomial(QuadLabel(SympVector::parse("0:0")), FormKind::Alternating);
    } catch (const std::invalid_argument &) {
        wrong_parity = true;
    }
    r.add("wrong_parity_rejected", wrong_parity, "invalid_argument", wrong_parity ? "invalid_argument" : "accepted");

    for (int k = 1; k <= 3; k++) {
        long long ok = 0;
        for (const auto &w : all_vectors(k)) {
            QuadLabel label(w);
            FormKind kind = label.is_even() ? FormKind::Symmetric : FormKind::Alternating;
            ok += to_cyclo(form_polynomial(label)) ==
                  bilinear_polynomial(schrodinger_matrix(HeisenbergElement(0, w)), kind);
        }
        r.expect_eq("matrix_polynomial_agreement_k" + std::to_string(k), 1LL << (2 * k), ok);
    }

    for (int k = 1; k <= 2; k++) {
        long long ok = 0;
        long long total = 0;
        for (const auto &u : all_vectors(k)) {
            PhasedOperator uu = schrodinger_matrix(HeisenbergElement(0, u));
            for (const auto &w : all_vectors(k)) {
                QuadLabel label(w);
                CycloPolynomial p = to_cyclo(form_polynomial(label));
                ok += act_on_polynomial(uu, p) == p.scaled(CycloDyadic(heisenberg_eigenvalue(u, label)));
                total++;
            }
        }
        r.expect_eq("eigenvalue_substitution_k" + std::to_string(k), total, ok);
    }

    std::mt19937 rng(11);
    for (int k = 1; k <= 3; k++) {
        long long ok = 0;
        long long total = 0;
        auto check = [&](const SympVector &v, const SympVector &w) {
            QuadLabel label(w);
            FormAction act = act_on_form(v, label);
            CycloPolynomial moved = act_on_polynomial(lift_transvection(v), to_cyclo(form_polynomial(label)));
            ok += act.output == quad_transform(v, label) &&
                  moved == to_cyclo(form_polynomial(act.output)).scaled(CycloDyadic::i_pow(act.l));
            total++;
        };
        if (k <= 2) {
            for (const auto &v : all_vectors(k)) {
                for (const auto &w : all_vectors(k)) {
                    check(v, w);
                }
            }
        } else {
            for (int s = 0; s < 500; s++) {
                check(SympVector::from_word(3, rng() % 64), SympVector::from_word(3, rng() % 64));
            }
        }
        r.expect_eq("act_on_form_k" + std::to_string(k), total, ok);
    }

    for (int k = 1; k <= 3; k++) {
        std::vector<std::vector<BigInt>> rows;
        std::map<Monomial, std::size_t, std::greater<Monomial>> cols;
        auto evens = enumerate_quad_forms(k, Parity::Even);
        std::vector<IntPolynomial> polys;
        for (const auto &e : evens) {
            polys.push_back(form_polynomial(e.label));
            for (const auto &[m, c] : polys.back().terms()) {
                cols.emplace(m, cols.size());
            }
        }
        for (const auto &p : polys) {
            std::vector<BigInt> row(cols.size());
            for (const auto &[m, c] : p.terms()) {
                row[cols.at(m)] = c;
            }
            rows.push_back(row);
        }
        r.expect_eq("even_forms_independent_k" + std::to_string(k), static_cast<long long>(evens.size()),
                    exact_rank(rows));
        r.expect_eq("form_total_k" + std::to_string(k), 1LL << (2 * k),
                    static_cast<long long>(evens.size() + enumerate_quad_forms(k, Parity::Odd).size()));
    }

    const long long span_expected[3] = {2, 5, 15};
    for (int k = 1; k <= 3; k++) {
        r.expect_eq("span_squares_k" + std::to_string(k), span_expected[k - 1], span_dimension_of_squares(k));
    }

    r.expect_eq("pfaffian_a11", "1", pfaffian(QuadLabel(SympVector::parse("1:1"))).str());
    long long nonzero = 0;
    for (const auto &o : enumerate_quad_forms(3, Parity::Odd)) {
        nonzero += pfaffian(o.label) != 0;
    }
    r.expect_eq("pfaffians_nonzero_k3", 28, nonzero);
    long long pf_det = 0;
    long long odd_total = 0;
    for (int k = 1; k <= 3; k++) {
        for (const auto &o : enumerate_quad_forms(k, Parity::Odd)) {
            BigInt pf = pfaffian(o.label);
            pf_det += pf * pf == form_determinant(o.label);
            odd_total++;
        }
    }
    r.expect_eq("pfaffian_squared_is_determinant", odd_total, pf_det);

    std::vector<PhasedOperator> g1 = {ms_operator(), mt_operator()};
    QuarticReport rep1 = quartic_invariance_check(g1, 1);
    r.add("quartic_k1_permutes", rep1.permutes_q4, "true", yes_no(rep1.permutes_q4));
    r.add("quartic_k1_sum_invariant", rep1.sum_invariant, "true", yes_no(rep1.sum_invariant));
    r.add("hamming_enumerator_identity", rep1.hamming_identity, "2X^8+28X^4Y^4+2Y^8", yes_no(rep1.hamming_identity));
    std::vector<PhasedOperator> id = {PhasedOperator::identity(1)};
    QuarticReport rep_id = quartic_invariance_check(id, 1);
    r.add("quartic_identity_trivial", rep_id.q_permutations[0] == std::vector<int>{0, 1, 2}, "0,1,2",
          join(rep_id.q_permutations[0], [](int i) { return std::to_string(i); }));
    std::vector<PhasedOperator> g2;
    for (const auto &v : diagram_labels(2)) {
        g2.push_back(lift_transvection(v));
    }
    QuarticReport rep2 = quartic_invariance_check(g2, 2);
    r.add("quartic_k2_sum_invariant", rep2.sum_invariant && rep2.permutes_q4, "true",
          yes_no(rep2.sum_invariant && rep2.permutes_q4));
    r.expect_eq("a4_permutation_group_order_k2", 720, static_cast<long long>(rep2.a_permutation_group_order));
}

void suite_hopf(VerificationReport &r) {
    for (int k = 1; k <= 4; k++) {
        HopfRelation h = hopf_relation(k);
        std::string rhs = join(h.rhs, [](const QuadLabel &q) { return q.str() + "^2"; });
        r.add("hopf_k" + std::to_string(k), h.holds, h.lhs.str() + "^2 = " + rhs, yes_no(h.holds));
    }
}

void suite_e7(VerificationReport &r) {
    const PicVector k = canonical_class();
    r.expect_eq("k_squared", -2, pic_pairing(k, k));
    const auto &d = simple_roots();
    const PicVector omega78 = WeightLabel::parse("W78").vector();
    int dual = pic_pairing(d[6], omega78) == 1;
    for (int i = 0; i < 6; i++) {
        dual += pic_pairing(d[i], omega78) == 0;
    }
    r.expect_eq("omega78_dual_to_d7", 7, dual);

    auto roots = enumerate_roots();
    int fam[3] = {0, 0, 0};
    long long good = 0;
    for (const auto &root : roots) {
        fam[static_cast<int>(root.kind)]++;
        good += pic_pairing(root.vector(), k) == 0 && pic_pairing(root.vector(), root.vector()) == 2;
    }
    r.expect_eq("roots_rij", 21, fam[0]);
    r.expect_eq("roots_rijk8", 35, fam[1]);
    r.expect_eq("roots_ri8", 7, fam[2]);
    r.expect_eq("roots_norm_and_perp", 63, good);
    std::set<PicVector> distinct;
    for (const auto &root : enumerate_all_roots()) {
        distinct.insert(root.vector());
    }
    r.expect_eq("roots_total", 126, static_cast<long long>(distinct.size()));
    Census census = brute_force_census();
    r.expect_eq("census_roots", 126, census.roots);
    r.expect_eq("census_weights", 56, census.weights);

    long long rule = 0;
    for (const auto &a : roots) {
        for (const auto &b : roots) {
            int p = pic_pairing(a.vector(), b.vector());
            rule += a == b ? p == 2 : (p >= -1 && p <= 1);
        }
    }
    r.expect_eq("root_pairing_range", 63 * 63, rule);

    auto classes = enumerate_weight_classes();
    long long wgood = 0;
    for (const auto &w : classes) {
        wgood += pic_pairing(w.vector(), k) == 1 && pic_pairing(w.vector(), w.vector()) == 1;
    }
    r.expect_eq("weight_classes", 56, static_cast<long long>(classes.size()));
    r.expect_eq("weight_classes_exceptional", 56, wgood);
    long long sums = 0;
    for (const auto &w : enumerate_weights()) {
        sums += w.vector() + (-w).vector() == -k;
    }
    r.expect_eq("opposite_classes_sum_to_minus_k", 28, sums);

    long long wrule = 0;
    long long range = 0;
    for (const auto &w : classes) {
        for (const auto &root : roots) {
            int p = weight_root_pairing(w, root);
            wrule += p == pic_pairing(w.vector(), root.vector());
            range += p >= -1 && p <= 1;
        }
    }
    r.expect_eq("weight_pairing_is_picard_pairing", 56 * 63, wrule);
    r.expect_eq("weight_pairing_range", 56 * 63, range);
    const RootLabel r12 = RootLabel::parse("R12");
    long long zero12 = std::count_if(classes.begin(), classes.end(),
                                     [&](const WeightLabel &w) { return weight_root_pairing(w, r12) == 0; });
    r.expect_eq("weights_perp_r12", 32, zero12);
    r.expect_eq("w23_r1238_abs", 1, std::abs(weight_root_pairing(WeightLabel::parse("W23"), RootLabel::parse("R1238"))));

    auto coords_str = [](const SimpleRootCoords &c) { return join(std::vector<int>(c.begin(), c.end()), [](int x) { return std::to_string(x); }); };
    r.expect_eq("r2568_coords", "1,1,1,2,2,1,0", coords_str(root_in_simple_coords(RootLabel::parse("R2568"))));
    r.expect_eq("highest_root_is_r18", RootLabel::parse("R18").vector().str(), from_simple_coords(highest_root_coords()).str());
    int units = 0;
    for (int i = 0; i < 7; i++) {
        SimpleRootCoords e{};
        e[i] = 1;
        units += lattice_coords(d[i]) == e;
    }
    r.expect_eq("simple_roots_unit_coords", 7, units);

    r.expect_eq("pi_highest_root", "100:111", pi_map(highest_root_coords()).str());
    r.expect_eq("pi_r2568", "100:000", pi_of_root(RootLabel::parse("R2568")).str());
    r.expect_eq("pi_gamma", "000:000", pi_map(gamma_coords()).str());
    std::map<uint32_t, int> fibres;
    for (const auto &root : enumerate_all_roots()) {
        fibres[pi_of_root(root).word()]++;
    }
    bool two_to_one = fibres.size() == 63 && !fibres.count(0) &&
                      std::all_of(fibres.begin(), fibres.end(), [](const auto &p) { return p.second == 2; });
    r.add("pi_two_to_one", two_to_one, "63 fibres of size 2", std::to_string(fibres.size()) + " fibres");

    long long compat = 0;
    long long transfer = 0;
    long long transfer_total = 0;
    for (const auto &a : roots) {
        for (const auto &b : roots) {
            int p = pic_pairing(a.vector(), b.vector());
            int e = symplectic_form(pi_of_root(a), pi_of_root(b));
            compat += ((p % 2) + 2) % 2 == e;
            if (!(a == b)) {
                transfer += (p == 0) == (e == 0);
                transfer_total++;
            }
        }
    }
    r.expect_eq("pi_compatibility", 63 * 63, compat);
    r.expect_eq("orthogonality_transfer", transfer_total, transfer);

    long long equiv = 0;
    auto all_roots = enumerate_all_roots();
    for (const auto &a : all_roots) {
        for (const auto &x : all_roots) {
            PicVector img = reflect(a.vector(), x.vector());
            equiv += pi_map(lattice_coords(img)) == transvection_apply(pi_of_root(a), pi_of_root(x));
        }
    }
    r.expect_eq("pi_equivariance", 126 * 126, equiv);


    // Columns of 2G^-1 are the doubled fundamental weights in simple-root coordinates.
    const auto &g = cartan_matrix();
    std::array<std::array<BigRational, 14>, 7> aug;
    for (int i = 0; i < 7; i++) {
        for (int j = 0; j < 7; j++) {
            aug[i][j] = g[i][j];
            aug[i][7 + j] = i == j ? 2 : 0;
        }
    }
    for (int c = 0; c < 7; c++) {
        int p = c;
        while (aug[p][c] == 0) {
            p++;
        }
        std::swap(aug[p], aug[c]);
        BigRational inv = 1 / aug[c][c];
        for (auto &x : aug[c]) {
            x *= inv;
        }
        for (int r2 = 0; r2 < 7; r2++) {
            if (r2 != c && aug[r2][c] != 0) {
                BigRational f = aug[r2][c];
                for (int j = 0; j < 14; j++) {
                    aug[r2][j] -= f * aug[c][j];
                }
            }
        }
    }
    int kernel = 0;
    SimpleRootCoords two_omega7{};
    for (int col = 0; col < 7; col++) {
        SimpleRootCoords n{};
        bool integral = true;
        for (int i = 0; i < 7; i++) {
            const BigRational &x = aug[i][7 + col];
            integral = integral && boost::multiprecision::denominator(x) == 1;
            n[i] = static_cast<int>(boost::multiprecision::numerator(x));
        }
        kernel += integral && pi_map(n).is_zero();
        if (col == 6) {
            two_omega7 = n;
        }
    }
    r.expect_eq("pi_kills_doubled_weight_lattice", 7, kernel);
    r.expect_eq("omega7_expansion", "2,3,4,6,5,4,3", coords_str(two_omega7));
    r.expect_eq("omega7_is_projected_w78", "2,3,4,6,5,4,3",
                coords_str(lattice_coords(doubled_projection(omega78))));
    SimpleRootCoords odd_n{};
    odd_n[0] = 1;
    r.add("pi_nonzero_off_kernel", !pi_map(odd_n).is_zero(), "nonzero", pi_map(odd_n).str());

    const PicVector e0 = PicVector::basis(0);
    const PicVector e1 = PicVector::basis(1);
    const PicVector e2 = PicVector::basis(2);
    const PicVector d12 = e1 - e2;
    bool swaps = reflect(d12, e1) == e2 && reflect(d12, e2) == e1 && reflect(d12, e0) == e0;
    r.add("reflection_swaps_indices", swaps, "e1<->e2, e0 fixed", reflect(d12, e1).str());
    const PicVector d123 = RootLabel::parse("R1238").vector();
    r.expect_eq("reflection_of_e0", (e0 * 2 - e1 - e2 - PicVector::basis(3)).str(), reflect(d123, e0).str());
    r.expect_eq("reflection_of_root_itself", (-d123).str(), reflect(d123, d123).str());
    long long refl_ok = 0;
    for (const auto &a : roots) {
        for (const auto &b : roots) {
            PicVector rb = reflect(a.vector(), b.vector());
            refl_ok += reflect(a.vector(), rb) == b.vector() && pic_pairing(rb, rb) == 2 &&
                       pic_pairing(rb, reflect(a.vector(), e0)) == pic_pairing(b.vector(), e0);
        }
        refl_ok += reflect(a.vector(), k) == k;
    }
    r.expect_eq("reflection_isometric_involution", 63 * 64, refl_ok);
    bool wrong_norm = false;
    try {
        reflect(e0, e1);
    } catch (const std::invalid_argument &) {
        wrong_norm = true;
    }
    r.add("reflection_wrong_norm_rejected", wrong_norm, "invalid_argument", yes_no(wrong_norm));

    auto sets = orthogonal_root_sets();
    r.expect_eq("orthogonal_root_sets", 135, static_cast<long long>(sets.size()));
    long long pairwise = 0;
    long long minus_identity = 0;
    long long restriction_linear = 0;
    const auto weights = enumerate_weights();
    for (const auto &set : sets) {
        bool orth = set.roots.size() == 7;
        for (std::size_t a = 0; a < set.roots.size(); a++) {
            orth = orth && pi_of_root(set.roots[a]) == set.lagrangian.points()[a];
            for (std::size_t b = a + 1; b < set.roots.size(); b++) {
                orth = orth && pic_pairing(set.roots[a].vector(), set.roots[b].vector()) == 0;
            }
        }
        pairwise += orth;
        bool neg = true;
        for (const auto &di : d) {
            PicVector x = di;
            for (const auto &root : set.roots) {
                x = reflect(root.vector(), x);
            }
            neg = neg && lattice_coords(x) == lattice_coords(-di);
        }
        minus_identity += neg;
        for (const auto &w : weights) {
            QuadLabel q = odd_form_of_weight(w);
            int zeros = 0;
            bool linear = true;
            for (const auto &u : set.lagrangian.points()) {
                zeros += quad_eval(q, u) == 0;
                for (const auto &v : set.lagrangian.points()) {
                    linear = linear && quad_eval(q, u + v) == (quad_eval(q, u) ^ quad_eval(q, v));
                }
            }
            restriction_linear += linear && zeros == 3;
        }
    }
    r.expect_eq("orthogonal_sets_pairwise", 135, pairwise);
    r.expect_eq("orthogonal_sets_minus_identity", 135, minus_identity);
    r.expect_eq("odd_form_restriction_linear", 135 * 28, restriction_linear);
    std::vector<std::string> names;
    for (const auto &set : sets) {
        bool is_standard = std::all_of(set.lagrangian.points().begin(), set.lagrangian.points().end(),
                                       [](const SympVector &v) { return v.xstar() == 0; });
        if (is_standard) {
            for (const auto &root : set.roots) {
                names.push_back(root.str());
            }
        }
    }
    std::sort(names.begin(), names.end());
    r.expect_eq("standard_orthogonal_set", "R1238,R1458,R1678,R2478,R2568,R3468,R3578",
                join(names, [](const std::string &s) { return s; }));
}

void suite_restriction(VerificationReport &r) {
    const FanoDecomposition dec = restriction_decomposition(IsotropicSubspace::parse("100:000,010:000,001:000"));
    const auto golden_points = parse_table(golden_restriction_points());
    std::map<std::string, std::string> actual_points;
    for (const auto &p : dec.points) {
        actual_points[p.letter] = p.v.str() + " " + p.root.str();
    }
    int point_ok = 0;
    for (const auto &row : golden_points) {
        auto it = actual_points.find(row.at(0));
        bool ok = it != actual_points.end() && it->second == row.at(1) + " " + row.at(2);
        point_ok += ok;
        r.add("point_" + row.at(0), ok, row.at(1) + " " + row.at(2),
              it == actual_points.end() ? "missing" : it->second);
    }
    r.expect_eq("points_total", static_cast<long long>(golden_points.size()), point_ok);

    const auto golden_lines = parse_table(golden_restriction_lines());
    std::map<std::string, const FanoLine *> by_name;
    for (const auto &line : dec.lines) {
        by_name[sorted_name(line.name)] = &line;
    }
    for (const auto &row : golden_lines) {
        const std::string expected = row.at(1) + " " + sorted_csv(row.at(2)) + " " + sorted_csv(row.at(3));
        auto it = by_name.find(sorted_name(row.at(0)));
        std::string actual = "missing";
        if (it != by_name.end()) {
            const FanoLine &l = *it->second;
            actual = (l.a ? std::to_string(*l.a) : "-") + " " +
                     sorted_csv(join(l.roots, [](const RootLabel &x) { return x.str(); })) + " " +
                     sorted_csv(join(l.weights, [](const WeightLabel &x) { return x.str(); }));
        }
        r.add("line_" + row.at(0), actual == expected, expected, actual);
    }

    std::set<std::string> seen;
    long long slots = 0;
    for (const auto &line : dec.lines) {
        for (const auto &w : line.weights) {
            seen.insert(w.str());
            slots++;
        }
    }
    r.expect_eq("weights_partitioned", 28, static_cast<long long>(seen.size()));
    r.expect_eq("weight_slots", 28, slots);

    auto mult = weight_multiplicities();
    long long mult_ok = std::count_if(mult.begin(), mult.end(), [](const RootMultiplicity &m) {
        return m.n0 == 32 && m.n_plus == 12 && m.n_minus == 12;
    });
    r.expect_eq("multiplicities_32_12_12", 63, mult_ok);

    long long every = 0;
    for (const auto &lag : enumerate_lagrangians(3)) {
        FanoDecomposition dl = restriction_decomposition(lag);
        std::set<std::string> ws;
        bool ok = dl.lines.size() == 7;
        for (const auto &line : dl.lines) {
            ok = ok && line.weights.size() == 4 && line.roots.size() == 3;
            for (const auto &w : line.weights) {
                ws.insert(w.str());
            }
        }
        every += ok && ws.size() == 28;
    }
    r.expect_eq("every_lagrangian_seven_by_four", 135, every);

    nlohmann::json j = nlohmann::json::parse(to_json(dec));
    r.expect_eq("json_lines", 7, static_cast<long long>(j.at("lines").size()));
}

void suite_orders(VerificationReport &r) {
    const long long sp_expected[3] = {6, 720, 1451520};
    for (int k = 1; k <= 3; k++) {
        std::vector<SympMatrix> images;
        for (const auto &v : diagram_labels(k)) {
            images.push_back(normalizer_image(lift_transvection(v)).phi);
        }
        const std::string suffix = "_k" + std::to_string(k);
        r.expect_eq("sp_order" + suffix, sp_expected[k - 1], static_cast<long long>(generate_group(images).order()));
        r.expect_eq("sp_order_formula" + suffix, sp_expected[k - 1],
                    static_cast<long long>(symplectic_group_order_formula(k)));
    }
    r.expect_eq("o_q_even_standard", 40320,
                static_cast<long long>(orthogonal_group_order(QuadLabel(SympVector::zero(3)))));
    r.expect_eq("o_q_odd_highest_root", 51840,
                static_cast<long long>(orthogonal_group_order(QuadLabel(SympVector::parse("100:111")))));
    r.expect_eq("o_q_odd_k2", 120,
                static_cast<long long>(orthogonal_group_order(QuadLabel(SympVector::parse("10:10")))));
    const long long lag_expected[3] = {3, 15, 135};
    for (int k = 1; k <= 3; k++) {
        r.expect_eq("lagrangians_k" + std::to_string(k), lag_expected[k - 1],
                    static_cast<long long>(enumerate_lagrangians(k).size()));
    }
    WeylSummary w = weyl_group_summary();
    r.expect_eq("weyl_order", 2903040, static_cast<long long>(w.order));
    r.add("weyl_contains_minus_identity", w.contains_minus_identity, "true", yes_no(w.contains_minus_identity));
    r.expect_eq("weyl_kernel_size", 2, static_cast<long long>(w.kernel_size));
    r.add("weyl_kernel_plus_minus_identity", w.kernel_is_plus_minus_identity, "true",
          yes_no(w.kernel_is_plus_minus_identity));
    r.expect_eq("weyl_image_order", 1451520, static_cast<long long>(w.image_order));
}

using SuiteFn = void (*)(VerificationReport &);

const std::vector<std::pair<std::string, SuiteFn>> &suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"heisenberg", suite_heisenberg}, {"normalizer", suite_normalizer}, {"coxeter", suite_coxeter},
        {"quadforms", suite_quadforms},   {"tensors", suite_tensors},       {"hopf", suite_hopf},
        {"e7", suite_e7},                 {"restriction", suite_restriction}, {"orders", suite_orders},
    };
    return table;
}

}  // namespace

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

void VerificationReport::add(std::string id, bool ok, std::string expected, std::string actual) {
    checks.push_back({std::move(id), ok, std::move(expected), std::move(actual)});
}

void VerificationReport::expect_eq(std::string id, long long expected, long long actual) {
    add(std::move(id), expected == actual, std::to_string(expected), std::to_string(actual));
}

void VerificationReport::expect_eq(std::string id, const std::string &expected, const std::string &actual) {
    add(std::move(id), expected == actual, expected, actual);
}

std::string VerificationReport::text() const {
    std::size_t width = 0;
    for (const auto &c : checks) {
        width = std::max(width, c.id.size());
    }
    std::string out;
    for (const auto &c : checks) {
        out += (c.passed ? "PASS  " : "FAIL  ") + c.id + std::string(width - c.id.size() + 2, ' ');
        out += c.passed ? c.actual : "expected " + c.expected + ", got " + c.actual;
        out += "\n";
    }
    long long failed = std::count_if(checks.begin(), checks.end(), [](const CheckResult &c) { return !c.passed; });
    out += suite + ": " + std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) + " passed, " +
           (failed ? "FAIL" : "PASS") + "\n";
    return out;
}

std::string VerificationReport::json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["passed"] = passed();
    j["checks"] = nlohmann::json::array();
    for (const auto &c : checks) {
        j["checks"].push_back(
            {{"id", c.id}, {"status", c.passed ? "pass" : "fail"}, {"expected", c.expected}, {"actual", c.actual}});
    }
    return j.dump(2);
}

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto &[name, fn] : suites()) {
            out.push_back(name);
        }
        out.push_back("all");
        return out;
    }();
    return names;
}

VerificationReport run_verify(std::string_view suite) {
    VerificationReport report;
    report.suite = std::string(suite);
    if (suite == "all") {
        for (const auto &[name, fn] : suites()) {
            VerificationReport part;
            fn(part);
            for (auto &c : part.checks) {
                c.id = name + "." + c.id;
                report.checks.push_back(std::move(c));
            }
        }
        return report;
    }
    for (const auto &[name, fn] : suites()) {
        if (name == suite) {
            fn(report);
            return report;
        }
    }
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

std::string_view golden_restriction_points() {
    return golden::kRestrictionPoints;
}

std::string_view golden_restriction_lines() {
    return golden::kRestrictionLines;
}

}  // namespace qe7
