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


#include "qe7/heisenberg.h"

#include <stdexcept>

#include "json.hpp"

namespace qe7 {

namespace {

constexpr std::string_view kMiddleDot = "·";

// Gauss-Jordan over Q(z). Returns row-major entries of the inverse.
std::vector<CycloRational> rational_inverse(int n, std::vector<CycloRational> a) {
    std::vector<CycloRational> inv(n * n);
    for (int i = 0; i < n; i++) {
        inv[i * n + i] = CycloRational(1);
    }
    for (int col = 0; col < n; col++) {
        int pivot = -1;
        for (int r = col; r < n; r++) {
            if (!a[r * n + col].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) {
            throw SingularMatrix("operator is singular");
        }
        if (pivot != col) {
            for (int c = 0; c < n; c++) {
                std::swap(a[pivot * n + c], a[col * n + c]);
                std::swap(inv[pivot * n + c], inv[col * n + c]);
            }
        }
        CycloRational p = a[col * n + col].inverse();
        for (int c = 0; c < n; c++) {
            a[col * n + c] = a[col * n + c] * p;
            inv[col * n + c] = inv[col * n + c] * p;
        }
        for (int r = 0; r < n; r++) {
            if (r == col || a[r * n + col].is_zero()) {
                continue;
            }
            CycloRational factor = a[r * n + col];
            for (int c = 0; c < n; c++) {
                a[r * n + c] = a[r * n + c] - factor * a[col * n + c];
                inv[r * n + c] = inv[r * n + c] - factor * inv[col * n + c];
            }
        }
    }
    return inv;
}

template <typename T>
std::vector<T> mat_mul(int n, const std::vector<T> &a, const std::vector<T> &b) {
    std::vector<T> out(n * n);
    for (int r = 0; r < n; r++) {
        for (int m = 0; m < n; m++) {
            const T &x = a[r * n + m];
            if (x.is_zero()) {
                continue;
            }
            for (int c = 0; c < n; c++) {
                if (!b[m * n + c].is_zero()) {
                    out[r * n + c] = out[r * n + c] + x * b[m * n + c];
                }
            }
        }
    }
    return out;
}

}  // namespace

HeisenbergElement HeisenbergElement::parse(std::string_view text) {
    const std::string original(text);
    int s = 0;
    if (text.starts_with("i^")) {
        if (text.size() < 3 || text[2] < '0' || text[2] > '3') {
            throw std::invalid_argument("malformed Heisenberg element '" + original + "'");
        }
        s = text[2] - '0';
        text.remove_prefix(3);
        if (text.starts_with(kMiddleDot)) {
            text.remove_prefix(kMiddleDot.size());
        } else if (text.starts_with("*")) {
            text.remove_prefix(1);
        } else {
            throw std::invalid_argument("malformed Heisenberg element '" + original + "'");
        }
    }
    if (!text.starts_with("U[") || !text.ends_with("]")) {
        throw std::invalid_argument("malformed Heisenberg element '" + original + "'");
    }
    return HeisenbergElement(s, SympVector::parse(text.substr(2, text.size() - 3)));
}

std::string HeisenbergElement::str() const {
    return "i^" + std::to_string(s) + std::string(kMiddleDot) + "U[" + v.str() + "]";
}

HeisenbergElement h_mul(const HeisenbergElement &a, const HeisenbergElement &b) {
    check_same_rank(a.v, b.v);
    int sign = dual_pairing(b.v.xstar(), a.v.x());
    return HeisenbergElement(a.s + b.s + 2 * sign, a.v + b.v);
}

HeisenbergElement h_inv(const HeisenbergElement &a) {
    return HeisenbergElement(-a.s + 2 * a.v.self_pairing(), a.v);
}

HeisenbergElement h_commutator(const HeisenbergElement &a, const HeisenbergElement &b) {
    return h_mul(h_mul(a, b), h_mul(h_inv(a), h_inv(b)));
}

PhasedOperator::PhasedOperator(int k) : k_(k) {
    check_rank(k);
    entries_.assign(std::size_t{1} << (2 * k), CycloDyadic());
}

PhasedOperator PhasedOperator::identity(int k) {
    return scalar(k, CycloDyadic(1));
}

PhasedOperator PhasedOperator::scalar(int k, const CycloDyadic &c) {
    PhasedOperator out(k);
    for (int i = 0; i < out.dim(); i++) {
        out.at(i, i) = c;
    }
    return out;
}

PhasedOperator PhasedOperator::from_entries(int k, std::vector<CycloDyadic> entries) {
    PhasedOperator out(k);
    if (entries.size() != out.entries_.size()) {
        throw std::invalid_argument("operator needs 4^k entries");
    }
    out.entries_ = std::move(entries);
    return out;
}

PhasedOperator PhasedOperator::operator*(const PhasedOperator &rhs) const {
    if (rhs.k_ != k_) {
        throw std::invalid_argument("rank mismatch in operator product");
    }
    PhasedOperator out(k_);
    out.entries_ = mat_mul(dim(), entries_, rhs.entries_);
    return out;
}

PhasedOperator PhasedOperator::operator+(const PhasedOperator &rhs) const {
    if (rhs.k_ != k_) {
        throw std::invalid_argument("rank mismatch in operator sum");
    }
    PhasedOperator out = *this;
    for (std::size_t i = 0; i < entries_.size(); i++) {
        out.entries_[i] += rhs.entries_[i];
    }
    return out;
}

PhasedOperator PhasedOperator::operator-(const PhasedOperator &rhs) const {
    return *this + rhs.scaled(CycloDyadic(-1));
}

PhasedOperator PhasedOperator::scaled(const CycloDyadic &c) const {
    PhasedOperator out = *this;
    for (auto &e : out.entries_) {
        e = e * c;
    }
    return out;
}

PhasedOperator PhasedOperator::transposed() const {
    PhasedOperator out(k_);
    for (int r = 0; r < dim(); r++) {
        for (int c = 0; c < dim(); c++) {
            out.at(c, r) = at(r, c);
        }
    }
    return out;
}

bool PhasedOperator::is_identity() const {
    return *this == identity(k_);
}

PhasedOperator PhasedOperator::inverse() const {
    std::vector<CycloRational> a;
    a.reserve(entries_.size());
    for (const auto &e : entries_) {
        a.emplace_back(e);
    }
    auto inv = rational_inverse(dim(), std::move(a));
    PhasedOperator out(k_);
    for (std::size_t i = 0; i < inv.size(); i++) {
        auto d = inv[i].to_dyadic();
        if (!d) {
            throw std::domain_error("inverse leaves the dyadic cyclotomic ring");
        }
        out.entries_[i] = *d;
    }
    return out;
}

std::string PhasedOperator::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < dim(); r++) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < dim(); c++) {
            nlohmann::json entry = nlohmann::json::array();
            for (const auto &d : at(r, c).coeffs()) {
                entry.push_back(d.str());
            }
            row.push_back(entry);
        }
        rows.push_back(row);
    }
    return nlohmann::json{{"k", k_}, {"entries", rows}}.dump();
}

PhasedOperator PhasedOperator::from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument(std::string("malformed operator JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("k") || !doc.contains("entries") || !doc["k"].is_number_integer()) {
        throw std::invalid_argument("operator JSON needs integer 'k' and 'entries'");
    }
    PhasedOperator out(doc["k"].get<int>());
    const auto &rows = doc["entries"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != out.dim()) {
        throw std::invalid_argument("operator JSON has the wrong number of rows");
    }
    for (int r = 0; r < out.dim(); r++) {
        if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != out.dim()) {
            throw std::invalid_argument("operator JSON has a row of the wrong length");
        }
        for (int c = 0; c < out.dim(); c++) {
            const auto &entry = rows[r][c];
            if (!entry.is_array() || entry.size() != 4) {
                throw std::invalid_argument("operator entries must have four coefficients");
            }
            std::array<Dyadic, 4> coeffs;
            for (int j = 0; j < 4; j++) {
                if (!entry[j].is_string()) {
                    throw std::invalid_argument("operator coefficients must be strings");
                }
                coeffs[j] = Dyadic::parse(entry[j].get<std::string>());
            }
            out.at(r, c) = CycloDyadic(coeffs);
        }
    }
    return out;
}

std::string PhasedOperator::pretty() const {
    std::string out;
    for (int r = 0; r < dim(); r++) {
        for (int c = 0; c < dim(); c++) {
            out += c ? "\t" : "";
            out += at(r, c).pretty();
        }
        out += "\n";
    }
    return out;
}

std::string PhasedOperator::key() const {
    std::string out;
    for (const auto &e : entries_) {
        out += e.str();
        out += ';';
    }
    return out;
}

std::optional<ScaledHeisenberg> as_scaled_heisenberg(const PhasedOperator &c) {
    const int k = c.k();
    const int n = c.dim();
    int x = -1;
    for (int r = 0; r < n; r++) {
        if (!c.at(r, 0).is_zero()) {
            if (x >= 0) {
                return std::nullopt;
            }
            x = r;
        }
    }
    if (x < 0) {
        return std::nullopt;
    }
    const CycloDyadic c0 = c.at(x, 0);
    uint32_t xstar = 0;
    for (int j = 0; j < k; j++) {
        int a = 1 << (k - 1 - j);
        // U_w(x+a, a) / U_w(x, 0) = (-1)^{x*(a)}
        const CycloDyadic &cj = c.at(x ^ a, a);
        if (cj == -c0) {
            xstar |= static_cast<uint32_t>(a);
        } else if (cj != c0) {
            return std::nullopt;
        }
    }
    ScaledHeisenberg out;
    out.w = SympVector(k, static_cast<uint32_t>(x), xstar);
    out.scalar = out.w.self_pairing() ? -c0 : c0;
    if (c != schrodinger_matrix(HeisenbergElement(0, out.w)).scaled(out.scalar)) {
        return std::nullopt;
    }
    return out;
}

PhasedOperator schrodinger_matrix(const HeisenbergElement &h) {
    const int k = h.v.k();
    PhasedOperator out(k);
    const uint32_t x = h.v.x();
    const uint32_t xs = h.v.xstar();
    for (int a = 0; a < out.dim(); a++) {
        int row = static_cast<int>(x) ^ a;
        int e = 2 * h.s + 4 * dual_pairing(xs, static_cast<uint32_t>(row));
        out.at(row, a) = CycloDyadic::zeta_pow(e);
    }
    return out;
}

PhasedOperator lift_transvection(const SympVector &v) {
    const int k = v.k();
    PhasedOperator u = schrodinger_matrix(HeisenbergElement(0, v));
    PhasedOperator id = PhasedOperator::identity(k);
    PhasedOperator inner = v.self_pairing() == 0 ? id + u.scaled(CycloDyadic::i_pow(1)) : id + u;
    return inner.scaled(CycloDyadic::one_minus_i_half());
}

PhasedOperator lift_transvection_inverse(const SympVector &v) {
    const int k = v.k();
    PhasedOperator u = schrodinger_matrix(HeisenbergElement(0, v));
    PhasedOperator id = PhasedOperator::identity(k);
    PhasedOperator inner = v.self_pairing() == 0 ? id - u.scaled(CycloDyadic::i_pow(1)) : id - u;
    return inner.scaled(CycloDyadic::one_plus_i_half());
}

PhasedOperator cnot_operator(int control, int target, int k) {
    check_rank(k);
    if (control < 1 || control > k || target < 1 || target > k) {
        throw std::invalid_argument("CNOT qubit index out of range 1.." + std::to_string(k));
    }
    if (control == target) {
        throw std::invalid_argument("CNOT control and target must differ");
    }
    PhasedOperator out(k);
    const int cbit = 1 << (k - control);
    const int tbit = 1 << (k - target);
    for (int a = 0; a < out.dim(); a++) {
        int image = (a & cbit) ? a ^ tbit : a;
        out.at(image, a) = CycloDyadic(1);
    }
    return out;
}

PhasedOperator ms_operator() {
    return PhasedOperator::from_entries(1, {1, 1, 1, -1}).scaled(CycloDyadic::one_minus_i_half());
}

PhasedOperator mt_operator() {
    CycloDyadic i = CycloDyadic::i_pow(1);
    return PhasedOperator::from_entries(1, {1, i, i, 1}).scaled(CycloDyadic::one_minus_i_half());
}

PhasedOperator ms_prime_operator() {
    return PhasedOperator::from_entries(1, {1, 1, 1, -1}).scaled(CycloDyadic::inv_sqrt2());
}

NormalizerImage normalizer_image(const PhasedOperator &m) {
    const int k = m.k();
    const int n = m.dim();
    std::vector<CycloRational> a;
    a.reserve(m.entries().size());
    for (const auto &e : m.entries()) {
        a.emplace_back(e);
    }
    std::vector<CycloRational> inv_rational = rational_inverse(n, a);

    // Dyadic fast path whenever the inverse stays in Z[z, 1/2].
    std::optional<PhasedOperator> inv_dyadic = PhasedOperator(k);
    for (std::size_t i = 0; i < inv_rational.size(); i++) {
        auto d = inv_rational[i].to_dyadic();
        if (!d) {
            inv_dyadic.reset();
            break;
        }
        inv_dyadic->at(static_cast<int>(i) / n, static_cast<int>(i) % n) = *d;
    }

    NormalizerImage out;
    std::vector<SympVector> images;
    for (int c = 0; c < 2 * k; c++) {
        SympVector e = SympVector::basis(k, c);
        PhasedOperator mu = m * schrodinger_matrix(HeisenbergElement(0, e));
        PhasedOperator conj(k);
        if (inv_dyadic) {
            conj = mu * *inv_dyadic;
        } else {
            std::vector<CycloRational> mu_r;
            for (const auto &x : mu.entries()) {
                mu_r.emplace_back(x);
            }
            auto prod = mat_mul(n, mu_r, inv_rational);
            for (std::size_t i = 0; i < prod.size(); i++) {
                auto d = prod[i].to_dyadic();
                if (!d) {
                    throw NotInNormalizer("conjugate of U[" + e.str() + "] is not a Heisenberg matrix");
                }
                conj.at(static_cast<int>(i) / n, static_cast<int>(i) % n) = *d;
            }
        }
        auto match = as_scaled_heisenberg(conj);
        std::optional<int> m;
        if (match) {
            m = match->scalar.as_zeta_power();
        }
        if (!m || *m % 2 != 0) {
            throw NotInNormalizer("conjugate of U[" + e.str() + "] is not a Heisenberg matrix");
        }
        images.push_back(match->w);
        out.f.push_back(*m / 2);
    }
    out.phi = SympMatrix::from_columns(images);
    if (!out.phi.is_symplectic()) {
        throw InternalInconsistency("normalizer image is not symplectic");
    }
    return out;
}

PhasedOperator projective_normal_form(const PhasedOperator &m) {
    for (const auto &e : m.entries()) {
        if (e.is_zero()) {
            continue;
        }
        auto inv = e.try_inverse();
        if (inv) {
            return m.scaled(*inv);
        }
        CycloRational r_inv = CycloRational(e).inverse();
        std::vector<CycloDyadic> out;
        for (const auto &x : m.entries()) {
            auto d = (CycloRational(x) * r_inv).to_dyadic();
            if (!d) {
                throw std::domain_error("projective normal form leaves the dyadic cyclotomic ring");
            }
            out.push_back(*d);
        }
        return PhasedOperator::from_entries(m.k(), std::move(out));
    }
    throw SingularMatrix("zero operator has no projective normal form");
}

OperatorGroup generate_operator_group(std::span<const PhasedOperator> generators) {
    if (generators.empty()) {
        throw std::invalid_argument("generate_operator_group needs at least one generator");
    }
    int k = generators[0].k();
    for (const auto &g : generators) {
        if (g.k() != k) {
            throw std::invalid_argument("generators have different ranks");
        }
    }
    return close_group<OperatorTraits>(PhasedOperator::identity(k),
                                       std::vector<PhasedOperator>(generators.begin(), generators.end()));
}

ProjectiveOperatorGroup generate_projective_group(std::span<const PhasedOperator> generators) {
    if (generators.empty()) {
        throw std::invalid_argument("generate_projective_group needs at least one generator");
    }
    int k = generators[0].k();
    std::vector<PhasedOperator> gens;
    for (const auto &g : generators) {
        if (g.k() != k) {
            throw std::invalid_argument("generators have different ranks");
        }
        gens.push_back(projective_normal_form(g));
    }
    return close_group<ProjectiveOperatorTraits>(PhasedOperator::identity(k), std::move(gens));
}

}  // namespace qe7
