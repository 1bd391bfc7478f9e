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


#include "qe7/tensor_forms.h"

#include <stdexcept>
#include <string>

namespace qe7 {

namespace {

struct PermutationTraits {
    using Element = std::vector<int>;
    using Generator = std::vector<int>;
    using Key = std::string;
    static Key key(const Element &p) {
        return std::string(p.begin(), p.end());
    }
    static Element multiply(const Element &a, const Element &g) {
        Element out(a.size());
        for (std::size_t i = 0; i < a.size(); i++) {
            out[i] = g[a[i]];
        }
        return out;
    }
};

// Index of the label j with p proportional to forms[j]; -1 if none.
int find_proportional(const CycloPolynomial &p, const std::vector<CycloPolynomial> &forms) {
    if (p.is_zero()) {
        return -1;
    }
    const auto &[pm, pc] = *p.terms().begin();
    for (std::size_t j = 0; j < forms.size(); j++) {
        const auto &f = forms[j];
        if (f.size() != p.size()) {
            continue;
        }
        const auto &[fm, fc] = *f.terms().begin();
        if (fm != pm) {
            continue;
        }
        if (p.scaled(fc) == f.scaled(pc)) {
            return static_cast<int>(j);
        }
    }
    return -1;
}

std::vector<CycloPolynomial> fourth_powers(const std::vector<QuadLabel> &labels) {
    std::vector<CycloPolynomial> out;
    for (const auto &q : labels) {
        out.push_back(to_cyclo(form_polynomial(q)).pow(4));
    }
    return out;
}

bool is_permutation(const std::vector<int> &p) {
    std::vector<bool> seen(p.size(), false);
    for (int j : p) {
        if (j < 0 || seen[j]) {
            return false;
        }
        seen[j] = true;
    }
    return true;
}

}  // namespace

IntPolynomial form_polynomial(const QuadLabel &label) {
    return form_polynomial(label, label.is_even() ? FormKind::Symmetric : FormKind::Alternating);
}

IntPolynomial form_polynomial(const QuadLabel &label, FormKind kind) {
    if (label.is_even() != (kind == FormKind::Symmetric)) {
        throw std::invalid_argument(label.is_even() ? "A-form of an even label vanishes identically"
                                                    : "Q-form of an odd label vanishes identically");
    }
    const int k = label.k();
    const int n = 1 << k;
    const uint32_t eps = label.w().x();
    const uint32_t eps_dual = label.w().xstar();
    const int second_offset = kind == FormKind::Symmetric ? 0 : n;
    IntPolynomial out;
    for (int sigma = 0; sigma < n; sigma++) {
        Monomial m{};
        m[sigma]++;
        m[second_offset + (sigma ^ static_cast<int>(eps))]++;
        out.add_term(m, BigInt(dual_pairing(eps_dual, static_cast<uint32_t>(sigma)) ? -1 : 1));
    }
    return out;
}

CycloPolynomial bilinear_polynomial(const PhasedOperator &m, FormKind kind) {
    const int n = m.dim();
    const int second_offset = kind == FormKind::Symmetric ? 0 : n;
    CycloPolynomial out;
    for (int r = 0; r < n; r++) {
        for (int c = 0; c < n; c++) {
            Monomial mono{};
            mono[r]++;
            mono[second_offset + c]++;
            out.add_term(mono, m.at(r, c));
        }
    }
    return out;
}

CycloPolynomial act_on_polynomial(const PhasedOperator &m, const CycloPolynomial &p) {
    const int n = m.dim();
    std::vector<CycloPolynomial> images(2 * n);
    for (int sigma = 0; sigma < n; sigma++) {
        for (int tau = 0; tau < n; tau++) {
            images[sigma] = images[sigma] + CycloPolynomial::variable(tau).scaled(m.at(tau, sigma));
            images[n + sigma] = images[n + sigma] + CycloPolynomial::variable(n + tau).scaled(m.at(tau, sigma));
        }
    }
    return p.substitute(images);
}

int heisenberg_eigenvalue(const SympVector &u, const QuadLabel &label) {
    check_same_rank(u, label.w());
    int e = dual_pairing(u.xstar(), label.w().x()) ^ dual_pairing(label.w().xstar(), u.x());
    return e ? -1 : 1;
}

FormAction act_on_form(const SympVector &v, const QuadLabel &label) {
    check_same_rank(v, label.w());
    PhasedOperator m = lift_transvection(v);
    PhasedOperator u = schrodinger_matrix(HeisenbergElement(0, label.w()));
    auto match = as_scaled_heisenberg(m * u * m.transposed());
    if (!match) {
        throw InternalInconsistency("M_v U_w tM_v is not a scaled Heisenberg matrix");
    }
    auto z = match->scalar.as_zeta_power();
    if (!z || *z % 2 != 0) {
        throw InternalInconsistency("M_v U_w tM_v has a phase outside mu_4");
    }
    FormAction out{label, QuadLabel(match->w), *z / 2};
    if (out.output != quad_transform(v, label)) {
        throw InternalInconsistency("form action disagrees with the transvection law");
    }
    return out;
}

std::vector<QuadLabel> hopf_rhs_labels(int k) {
    static const std::vector<std::string_view> kLabels[4] = {
        {"0:1", "1:0"},
        {"00:10", "11:00", "10:01"},
        {"000:100", "100:000", "101:101", "110:111", "111:110"},
        {"0000:1000", "1000:0000", "1001:1001", "1010:1011", "1011:1110", "1100:1111", "1101:1100", "1110:1101",
         "1111:1010"},
    };
    check_rank(k);
    std::vector<QuadLabel> out;
    for (auto text : kLabels[k - 1]) {
        out.emplace_back(SympVector::parse(text), Parity::Even);
    }
    return out;
}

HopfRelation hopf_relation(int k) {
    HopfRelation out;
    out.k = k;
    out.lhs = QuadLabel(SympVector::zero(k));
    out.rhs = hopf_rhs_labels(k);
    IntPolynomial lhs = form_polynomial(out.lhs).pow(2);
    IntPolynomial rhs;
    for (const auto &q : out.rhs) {
        rhs = rhs + form_polynomial(q).pow(2);
    }
    out.holds = lhs == rhs;
    return out;
}

BigInt pfaffian(const QuadLabel &label) {
    if (label.is_even()) {
        throw std::invalid_argument("pfaffian needs an odd label; " + label.str() + " is symmetric");
    }
    PhasedOperator u = schrodinger_matrix(HeisenbergElement(0, label.w()));
    const int n = u.dim();
    std::vector<std::vector<BigRational>> a(n, std::vector<BigRational>(n));
    for (int r = 0; r < n; r++) {
        for (int c = 0; c < n; c++) {
            a[r][c] = u.at(r, c).coeffs()[0].to_rational();
        }
    }
    BigRational pf = 1;
    for (int i = 0; i < n; i += 2) {
        int pivot = -1;
        for (int j = i + 1; j < n; j++) {
            if (a[i][j] != 0) {
                pivot = j;
                break;
            }
        }
        if (pivot < 0) {
            return 0;
        }
        if (pivot != i + 1) {
            std::swap(a[pivot], a[i + 1]);
            for (auto &row : a) {
                std::swap(row[pivot], row[i + 1]);
            }
            pf = -pf;
        }
        pf *= a[i][i + 1];
        // Congruence by unimodular elementary matrices clears rows i, i+1.
        for (int j = i + 2; j < n; j++) {
            BigRational c1 = a[i][j] / a[i][i + 1];
            if (c1 != 0) {
                for (int t = 0; t < n; t++) {
                    a[t][j] -= c1 * a[t][i + 1];
                }
                for (int t = 0; t < n; t++) {
                    a[j][t] -= c1 * a[i + 1][t];
                }
            }
            BigRational c2 = a[i + 1][j] / a[i + 1][i];
            if (c2 != 0) {
                for (int t = 0; t < n; t++) {
                    a[t][j] -= c2 * a[t][i];
                }
                for (int t = 0; t < n; t++) {
                    a[j][t] -= c2 * a[i][t];
                }
            }
        }
    }
    if (boost::multiprecision::denominator(pf) != 1) {
        throw InternalInconsistency("non-integral pfaffian");
    }
    return boost::multiprecision::numerator(pf);
}

BigInt form_determinant(const QuadLabel &label) {
    PhasedOperator u = schrodinger_matrix(HeisenbergElement(0, label.w()));
    const int n = u.dim();
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (int r = 0; r < n; r++) {
        for (int c = 0; c < n; c++) {
            a[r][c] = BigInt(u.at(r, c).coeffs()[0].num());
        }
    }
    // Bareiss
    BigInt sign = 1;
    BigInt prev = 1;
    for (int i = 0; i < n - 1; i++) {
        if (a[i][i] == 0) {
            int swap_row = -1;
            for (int r = i + 1; r < n; r++) {
                if (a[r][i] != 0) {
                    swap_row = r;
                    break;
                }
            }
            if (swap_row < 0) {
                return 0;
            }
            std::swap(a[i], a[swap_row]);
            sign = -sign;
        }
        for (int r = i + 1; r < n; r++) {
            for (int c = i + 1; c < n; c++) {
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) / prev;
            }
        }
        prev = a[i][i];
    }
    return sign * a[n - 1][n - 1];
}

int exact_rank(std::vector<std::vector<BigInt>> rows) {
    if (rows.empty()) {
        return 0;
    }
    const std::size_t cols = rows[0].size();
    int rank = 0;
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); c++) {
        int pivot = -1;
        for (std::size_t r = rank; r < rows.size(); r++) {
            if (rows[r][c] != 0) {
                pivot = static_cast<int>(r);
                break;
            }
        }
        if (pivot < 0) {
            continue;
        }
        std::swap(rows[pivot], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); r++) {
            if (rows[r][c] == 0) {
                continue;
            }
            BigInt a = rows[rank][c];
            BigInt b = rows[r][c];
            for (std::size_t t = c; t < cols; t++) {
                rows[r][t] = rows[r][t] * a - rows[rank][t] * b;
            }
            BigInt g = 0;
            for (std::size_t t = c; t < cols; t++) {
                g = gcd(g, rows[r][t]);
            }
            if (g > 1) {
                for (std::size_t t = c; t < cols; t++) {
                    rows[r][t] /= g;
                }
            }
        }
        rank++;
    }
    return rank;
}

int span_dimension_of_squares(int k) {
    if (k < 1 || k > 3) {
        throw std::invalid_argument("span_dimension_of_squares supports k in 1..3");
    }
    std::vector<IntPolynomial> squares;
    std::map<Monomial, std::size_t, std::greater<Monomial>> columns;
    for (const auto &entry : enumerate_quad_forms(k, Parity::Even)) {
        squares.push_back(form_polynomial(entry.label).pow(2));
        for (const auto &[m, c] : squares.back().terms()) {
            columns.emplace(m, 0);
        }
    }
    std::size_t idx = 0;
    for (auto &[m, i] : columns) {
        i = idx++;
    }
    std::vector<std::vector<BigInt>> rows;
    for (const auto &p : squares) {
        std::vector<BigInt> row(columns.size());
        for (const auto &[m, c] : p.terms()) {
            row[columns.at(m)] = c;
        }
        rows.push_back(std::move(row));
    }
    return exact_rank(std::move(rows));
}

IntPolynomial doubled_hamming_enumerator() {
    auto term = [](int ex, int ey, int c) {
        Monomial m{};
        m[0] = static_cast<uint8_t>(ex);
        m[1] = static_cast<uint8_t>(ey);
        IntPolynomial p;
        p.add_term(m, BigInt(c));
        return p;
    };
    return term(8, 0, 2) + term(4, 4, 28) + term(0, 8, 2);
}

QuarticReport quartic_invariance_check(std::span<const PhasedOperator> generators, int k) {
    check_rank(k);
    QuarticReport out;
    out.k = k;
    for (const auto &g : generators) {
        if (g.k() != k) {
            throw std::invalid_argument("generator rank differs from k");
        }
        normalizer_image(g);
    }
    for (const auto &entry : enumerate_quad_forms(k, Parity::Even)) {
        out.even_labels.push_back(entry.label);
    }
    for (const auto &entry : enumerate_quad_forms(k, Parity::Odd)) {
        out.odd_labels.push_back(entry.label);
    }
    const auto q4 = fourth_powers(out.even_labels);
    const auto a4 = fourth_powers(out.odd_labels);
    CycloPolynomial sum_q4;
    for (const auto &p : q4) {
        sum_q4 = sum_q4 + p;
    }

    out.permutes_q4 = true;
    out.permutes_a4 = true;
    out.sum_invariant = true;
    for (const auto &g : generators) {
        std::vector<int> qp;
        CycloPolynomial image_sum;
        for (const auto &label : out.even_labels) {
            CycloPolynomial moved = act_on_polynomial(g, to_cyclo(form_polynomial(label))).pow(4);
            qp.push_back(find_proportional(moved, q4));
            image_sum = image_sum + moved;
        }
        std::vector<int> ap;
        for (const auto &label : out.odd_labels) {
            CycloPolynomial moved = act_on_polynomial(g, to_cyclo(form_polynomial(label))).pow(4);
            ap.push_back(find_proportional(moved, a4));
        }
        out.permutes_q4 = out.permutes_q4 && is_permutation(qp);
        out.permutes_a4 = out.permutes_a4 && is_permutation(ap);
        out.sum_invariant = out.sum_invariant && image_sum == sum_q4;
        out.q_permutations.push_back(std::move(qp));
        out.a_permutations.push_back(std::move(ap));
    }
    if (out.permutes_a4 && k <= 2 && !out.odd_labels.empty()) {
        std::vector<int> id(out.odd_labels.size());
        for (std::size_t i = 0; i < id.size(); i++) {
            id[i] = static_cast<int>(i);
        }
        std::vector<std::vector<int>> gens = out.a_permutations;
        if (gens.empty()) {
            gens.push_back(id);
        }
        out.a_permutation_group_order = close_group<PermutationTraits>(id, gens).order();
    }
    if (k == 1) {
        out.hamming_identity = sum_q4 == to_cyclo(doubled_hamming_enumerator());
    }
    return out;
}

}  // namespace qe7
