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

#include "qe7/f2sym.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qe7 {

void check_rank(int k) {
    if (k < 1 || k > kMaxRank) {
        throw std::invalid_argument("rank k=" + std::to_string(k) + " outside 1.." + std::to_string(kMaxRank));
    }
}

SympVector::SympVector(int k, uint32_t x, uint32_t xstar) : k_(k) {
    check_rank(k);
    uint32_t mask = (1u << k) - 1;
    if ((x & ~mask) != 0 || (xstar & ~mask) != 0) {
        throw std::invalid_argument("SympVector component does not fit in k bits");
    }
    word_ = (x << k) | xstar;
}

SympVector SympVector::from_word(int k, uint32_t word) {
    check_rank(k);
    if (word >> (2 * k)) {
        throw std::invalid_argument("SympVector word does not fit in 2k bits");
    }
    SympVector v;
    v.k_ = k;
    v.word_ = word;
    return v;
}

SympVector SympVector::zero(int k) {
    return from_word(k, 0);
}

SympVector SympVector::basis(int k, int c) {
    check_rank(k);
    if (c < 0 || c >= 2 * k) {
        throw std::out_of_range("basis coordinate out of range");
    }
    return from_word(k, 1u << (2 * k - 1 - c));
}

SympVector SympVector::parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos || colon == 0 || text.size() != 2 * colon + 1) {
        throw std::invalid_argument("malformed SympVector '" + std::string(text) + "', expected e.g. 101:100");
    }
    int k = static_cast<int>(colon);
    check_rank(k);
    uint32_t word = 0;
    for (std::size_t i = 0; i < text.size(); i++) {
        if (i == colon) {
            continue;
        }
        char ch = text[i];
        if (ch != '0' && ch != '1') {
            throw std::invalid_argument("malformed SympVector '" + std::string(text) + "'");
        }
        word = (word << 1) | static_cast<uint32_t>(ch - '0');
    }
    return from_word(k, word);
}

bool SympVector::coordinate(int c) const {
    return (word_ >> (2 * k_ - 1 - c)) & 1;
}

int SympVector::self_pairing() const {
    return dual_pairing(xstar(), x());
}

std::string SympVector::str() const {
    std::string out;
    for (int c = 0; c < 2 * k_; c++) {
        if (c == k_) {
            out.push_back(':');
        }
        out.push_back(coordinate(c) ? '1' : '0');
    }
    return out;
}

void check_same_rank(const SympVector &a, const SympVector &b) {
    if (a.k() != b.k()) {
        throw std::invalid_argument("rank mismatch: " + a.str() + " vs " + b.str());
    }
}

SympVector SympVector::operator+(const SympVector &other) const {
    check_same_rank(*this, other);
    return from_word(k_, word_ ^ other.word_);
}

SympVector &SympVector::operator+=(const SympVector &other) {
    *this = *this + other;
    return *this;
}

int symplectic_form(const SympVector &v, const SympVector &w) {
    check_same_rank(v, w);
    return dual_pairing(w.xstar(), v.x()) ^ dual_pairing(v.xstar(), w.x());
}

SympVector transvection_apply(const SympVector &v, const SympVector &w) {
    return symplectic_form(w, v) ? w + v : w;
}

std::vector<SympVector> all_vectors(int k) {
    check_rank(k);
    std::vector<SympVector> out;
    out.reserve(std::size_t{1} << (2 * k));
    for (uint32_t word = 0; word < (1u << (2 * k)); word++) {
        out.push_back(SympVector::from_word(k, word));
    }
    return out;
}

std::vector<SympVector> nonzero_vectors(int k) {
    auto out = all_vectors(k);
    out.erase(out.begin());
    return out;
}

SympMatrix::SympMatrix(int k) : k_(k) {
    check_rank(k);
}

SympMatrix SympMatrix::identity(int k) {
    SympMatrix m(k);
    for (int r = 0; r < 2 * k; r++) {
        m.set(r, r, true);
    }
    return m;
}

SympMatrix SympMatrix::from_columns(std::span<const SympVector> images) {
    if (images.empty()) {
        throw std::invalid_argument("from_columns needs 2k columns");
    }
    int k = images[0].k();
    if (static_cast<int>(images.size()) != 2 * k) {
        throw std::invalid_argument("from_columns needs exactly 2k columns");
    }
    SympMatrix m(k);
    for (int c = 0; c < 2 * k; c++) {
        check_same_rank(images[0], images[c]);
        for (int r = 0; r < 2 * k; r++) {
            m.set(r, c, images[c].coordinate(r));
        }
    }
    return m;
}

SympMatrix SympMatrix::from_row_strings(int k, std::span<const std::string_view> rows) {
    SympMatrix m(k);
    if (static_cast<int>(rows.size()) != 2 * k) {
        throw std::invalid_argument("from_row_strings needs 2k rows");
    }
    for (int r = 0; r < 2 * k; r++) {
        if (static_cast<int>(rows[r].size()) != 2 * k) {
            throw std::invalid_argument("row length must be 2k");
        }
        for (int c = 0; c < 2 * k; c++) {
            char ch = rows[r][c];
            if (ch != '0' && ch != '1') {
                throw std::invalid_argument("row strings take 0/1 digits");
            }
            m.set(r, c, ch == '1');
        }
    }
    return m;
}

SympMatrix SympMatrix::block_diagonal(int k, std::span<const uint32_t> a_rows, std::span<const uint32_t> d_rows) {
    SympMatrix m(k);
    if (static_cast<int>(a_rows.size()) != k || static_cast<int>(d_rows.size()) != k) {
        throw std::invalid_argument("block_diagonal needs k rows per block");
    }
    for (int r = 0; r < k; r++) {
        m.rows_[r] = static_cast<uint8_t>(a_rows[r] << k);
        m.rows_[k + r] = static_cast<uint8_t>(d_rows[r]);
    }
    return m;
}

bool SympMatrix::get(int r, int c) const {
    return (rows_[r] >> (2 * k_ - 1 - c)) & 1;
}

void SympMatrix::set(int r, int c, bool value) {
    uint8_t bit = static_cast<uint8_t>(1u << (2 * k_ - 1 - c));
    rows_[r] = value ? (rows_[r] | bit) : (rows_[r] & ~bit);
}

SympVector SympMatrix::apply(const SympVector &v) const {
    if (v.k() != k_) {
        throw std::invalid_argument("rank mismatch in SympMatrix::apply");
    }
    uint32_t out = 0;
    for (int r = 0; r < 2 * k_; r++) {
        out = (out << 1) | static_cast<uint32_t>(__builtin_parity(rows_[r] & v.word()));
    }
    return SympVector::from_word(k_, out);
}

SympVector SympMatrix::column(int c) const {
    uint32_t out = 0;
    for (int r = 0; r < 2 * k_; r++) {
        out = (out << 1) | static_cast<uint32_t>(get(r, c));
    }
    return SympVector::from_word(k_, out);
}

SympMatrix SympMatrix::operator*(const SympMatrix &rhs) const {
    if (rhs.k_ != k_) {
        throw std::invalid_argument("rank mismatch in SympMatrix product");
    }
    SympMatrix out(k_);
    const int n = 2 * k_;
    for (int r = 0; r < n; r++) {
        uint8_t acc = 0;
        uint8_t row = rows_[r];
        for (int c = 0; c < n; c++) {
            if ((row >> (n - 1 - c)) & 1) {
                acc ^= rhs.rows_[c];
            }
        }
        out.rows_[r] = acc;
    }
    return out;
}

SympMatrix SympMatrix::transposed() const {
    SympMatrix out(k_);
    for (int r = 0; r < 2 * k_; r++) {
        for (int c = 0; c < 2 * k_; c++) {
            out.set(c, r, get(r, c));
        }
    }
    return out;
}

bool SympMatrix::is_identity() const {
    return *this == identity(k_);
}

bool SympMatrix::is_invertible() const {
    std::array<uint8_t, 2 * kMaxRank> m = rows_;
    const int n = 2 * k_;
    for (int c = 0; c < n; c++) {
        uint8_t bit = static_cast<uint8_t>(1u << (n - 1 - c));
        int pivot = -1;
        for (int r = c; r < n; r++) {
            if (m[r] & bit) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) {
            return false;
        }
        std::swap(m[c], m[pivot]);
        for (int r = 0; r < n; r++) {
            if (r != c && (m[r] & bit)) {
                m[r] ^= m[c];
            }
        }
    }
    return true;
}

bool SympMatrix::is_symplectic() const {
    const int n = 2 * k_;
    for (int a = 0; a < n; a++) {
        for (int b = a + 1; b < n; b++) {
            auto ea = SympVector::basis(k_, a);
            auto eb = SympVector::basis(k_, b);
            if (symplectic_form(apply(ea), apply(eb)) != symplectic_form(ea, eb)) {
                return false;
            }
        }
    }
    return true;
}

uint64_t SympMatrix::encoding() const {
    uint64_t out = 0;
    for (int r = 0; r < 2 * k_; r++) {
        out = (out << (2 * k_)) | rows_[r];
    }
    return out;
}

std::string SympMatrix::str() const {
    std::string out;
    for (int r = 0; r < 2 * k_; r++) {
        if (r) {
            out.push_back('/');
        }
        for (int c = 0; c < 2 * k_; c++) {
            out.push_back(get(r, c) ? '1' : '0');
        }
    }
    return out;
}

SympMatrix transvection_matrix(const SympVector &v) {
    std::vector<SympVector> cols;
    for (int c = 0; c < 2 * v.k(); c++) {
        cols.push_back(transvection_apply(v, SympVector::basis(v.k(), c)));
    }
    return SympMatrix::from_columns(cols);
}

Parity parity_of(const SympVector &w) {
    return w.self_pairing() ? Parity::Odd : Parity::Even;
}

QuadLabel::QuadLabel(const SympVector &w) : w_(w), parity_(parity_of(w)) {
}

QuadLabel::QuadLabel(const SympVector &w, Parity parity) : w_(w), parity_(parity_of(w)) {
    if (parity != parity_) {
        throw std::invalid_argument("label " + w.str() + " has the other parity");
    }
}

QuadLabel QuadLabel::parse(std::string_view text) {
    if (text.size() < 4 || text[1] != '[' || text.back() != ']' || (text[0] != 'Q' && text[0] != 'A')) {
        throw std::invalid_argument("malformed label '" + std::string(text) + "', expected Q[...] or A[...]");
    }
    auto w = SympVector::parse(text.substr(2, text.size() - 3));
    return QuadLabel(w, text[0] == 'Q' ? Parity::Even : Parity::Odd);
}

std::string QuadLabel::str() const {
    return std::string(is_even() ? "Q[" : "A[") + w_.str() + "]";
}

int quad_eval(const QuadLabel &q, const SympVector &v) {
    return v.self_pairing() ^ symplectic_form(v, q.w());
}

QuadLabel quad_transform(const SympVector &v, const QuadLabel &q) {
    if (quad_eval(q, v)) {
        return q;
    }
    return QuadLabel(v + q.w());
}

std::vector<QuadFormCount> enumerate_quad_forms(int k, Parity parity) {
    std::vector<QuadFormCount> out;
    const auto vectors = all_vectors(k);
    for (const auto &w : vectors) {
        if (parity_of(w) != parity) {
            continue;
        }
        QuadLabel q(w);
        int zeros = 0;
        for (const auto &v : vectors) {
            zeros += quad_eval(q, v) == 0;
        }
        out.push_back({q, zeros});
    }
    return out;
}

namespace {

std::vector<SympVector> span_points(int k, const std::vector<SympVector> &basis) {
    std::vector<SympVector> pts;
    const std::size_t n = basis.size();
    for (uint32_t mask = 1; mask < (1u << n); mask++) {
        SympVector acc = SympVector::zero(k);
        for (std::size_t i = 0; i < n; i++) {
            if ((mask >> i) & 1) {
                acc += basis[i];
            }
        }
        pts.push_back(acc);
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

// Greedy basis: smallest point, then smallest point outside the running span.
std::vector<SympVector> canonical_basis(int k, const std::vector<SympVector> &points) {
    std::vector<SympVector> basis;
    std::set<uint32_t> span{0};
    for (const auto &p : points) {
        if (span.count(p.word())) {
            continue;
        }
        basis.push_back(p);
        std::set<uint32_t> grown = span;
        for (uint32_t s : span) {
            grown.insert(s ^ p.word());
        }
        span = std::move(grown);
    }
    (void)k;
    return basis;
}

}  // namespace

IsotropicSubspace::IsotropicSubspace(std::vector<SympVector> basis) : basis_(std::move(basis)) {
    if (basis_.empty()) {
        throw std::invalid_argument("isotropic subspace needs a nonempty basis");
    }
    k_ = basis_[0].k();
    for (const auto &b : basis_) {
        check_same_rank(basis_[0], b);
    }
    for (std::size_t i = 0; i < basis_.size(); i++) {
        for (std::size_t j = i + 1; j < basis_.size(); j++) {
            if (symplectic_form(basis_[i], basis_[j])) {
                throw std::invalid_argument("basis is not isotropic: E(" + basis_[i].str() + "," + basis_[j].str() +
                                            ")=1");
            }
        }
    }
    points_ = span_points(k_, basis_);
    std::size_t expected = (std::size_t{1} << basis_.size()) - 1;
    auto uniq = points_;
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    if (uniq.size() != expected || std::any_of(points_.begin(), points_.end(), [](auto &p) { return p.is_zero(); })) {
        throw std::invalid_argument("basis vectors are linearly dependent");
    }
}

IsotropicSubspace IsotropicSubspace::parse(std::string_view text) {
    std::vector<SympVector> basis;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        basis.push_back(SympVector::parse(piece));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return IsotropicSubspace(std::move(basis));
}

bool IsotropicSubspace::contains(const SympVector &v) const {
    return v.is_zero() || std::binary_search(points_.begin(), points_.end(), v);
}

std::string IsotropicSubspace::str() const {
    std::string out;
    for (std::size_t i = 0; i < basis_.size(); i++) {
        if (i) {
            out.push_back(',');
        }
        out += basis_[i].str();
    }
    return out;
}

IsotropicSubspace standard_lagrangian(int k) {
    std::vector<SympVector> basis;
    for (int c = 0; c < k; c++) {
        basis.push_back(SympVector::basis(k, c));
    }
    return IsotropicSubspace(std::move(basis));
}

std::vector<IsotropicSubspace> enumerate_lagrangians(int k) {
    if (k < 1 || k > 3) {
        throw std::invalid_argument("enumerate_lagrangians supports k in 1..3");
    }
    // Extend isotropic point sets one vector at a time; dedupe by point set.
    std::set<std::vector<uint32_t>> level{{}};
    for (int d = 0; d < k; d++) {
        std::set<std::vector<uint32_t>> next;
        for (const auto &pts : level) {
            for (uint32_t word = 1; word < (1u << (2 * k)); word++) {
                auto v = SympVector::from_word(k, word);
                if (std::binary_search(pts.begin(), pts.end(), word)) {
                    continue;
                }
                bool ok = true;
                for (uint32_t p : pts) {
                    if (symplectic_form(v, SympVector::from_word(k, p))) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) {
                    continue;
                }
                std::vector<uint32_t> grown = pts;
                grown.push_back(word);
                for (uint32_t p : pts) {
                    grown.push_back(p ^ word);
                }
                std::sort(grown.begin(), grown.end());
                next.insert(std::move(grown));
            }
        }
        level = std::move(next);
    }
    std::vector<IsotropicSubspace> out;
    out.reserve(level.size());
    for (const auto &pts : level) {
        std::vector<SympVector> points;
        for (uint32_t p : pts) {
            points.push_back(SympVector::from_word(k, p));
        }
        out.emplace_back(canonical_basis(k, points));
    }
    return out;
}

std::vector<IsotropicSubspace> hyperplanes_of(const IsotropicSubspace &space) {
    const int d = space.dim();
    if (d < 2) {
        throw std::invalid_argument("hyperplanes need dimension >= 2");
    }
    // Each hyperplane is the kernel of a nonzero functional on the span,
    // indexed by its values on the stored basis.
    std::vector<IsotropicSubspace> out;
    for (uint32_t f = 1; f < (1u << d); f++) {
        std::vector<SympVector> kernel_points;
        for (uint32_t mask = 1; mask < (1u << d); mask++) {
            if (__builtin_parity(mask & f) == 0) {
                SympVector acc = SympVector::zero(space.k());
                for (int i = 0; i < d; i++) {
                    if ((mask >> i) & 1) {
                        acc += space.basis()[i];
                    }
                }
                kernel_points.push_back(acc);
            }
        }
        std::sort(kernel_points.begin(), kernel_points.end());
        out.emplace_back(canonical_basis(space.k(), kernel_points));
    }
    std::sort(out.begin(), out.end(),
              [](const IsotropicSubspace &a, const IsotropicSubspace &b) { return a.points() < b.points(); });
    return out;
}

SympGroup generate_group(std::span<const SympMatrix> generators) {
    if (generators.empty()) {
        throw std::invalid_argument("generate_group needs at least one generator");
    }
    int k = generators[0].k();
    for (const auto &g : generators) {
        if (g.k() != k) {
            throw std::invalid_argument("generators have different ranks");
        }
        if (!g.is_invertible()) {
            throw std::invalid_argument("generator " + g.str() + " is not invertible");
        }
    }
    std::size_t hint = k == 3 ? 1451520 : 0;
    return close_group<SympMatrixTraits>(SympMatrix::identity(k),
                                         std::vector<SympMatrix>(generators.begin(), generators.end()), hint);
}

std::vector<SympVector> diagram_labels(int k) {
    static const std::vector<std::string_view> kLabels[3] = {
        {"1:0", "0:1"},
        {"00:10", "10:10", "01:11", "00:01", "01:01"},
        {"101:100", "011:000", "111:111", "101:001", "001:111", "101:011", "010:111"},
    };
    if (k < 1 || k > 3) {
        throw std::invalid_argument("diagram labels are tabulated for k in 1..3");
    }
    std::vector<SympVector> out;
    for (auto text : kLabels[k - 1]) {
        out.push_back(SympVector::parse(text));
    }
    return out;
}

std::vector<SympMatrix> diagram_transvections(int k) {
    std::vector<SympMatrix> out;
    for (const auto &v : diagram_labels(k)) {
        out.push_back(transvection_matrix(v));
    }
    return out;
}

std::vector<SympMatrix> all_transvections(int k) {
    std::vector<SympMatrix> out;
    for (const auto &v : nonzero_vectors(k)) {
        out.push_back(transvection_matrix(v));
    }
    return out;
}

std::vector<SympMatrix> orthogonal_generators(const QuadLabel &q) {
    std::vector<SympMatrix> out;
    for (const auto &v : nonzero_vectors(q.k())) {
        if (quad_eval(q, v)) {
            out.push_back(transvection_matrix(v));
        }
    }
    return out;
}

SympGroup orthogonal_group(const QuadLabel &q) {
    if (q.k() > 3) {
        throw std::invalid_argument("orthogonal_group supports k in 1..3");
    }
    auto gens = orthogonal_generators(q);
    if (gens.empty()) {
        return close_group<SympMatrixTraits>(SympMatrix::identity(q.k()), {});
    }
    return generate_group(gens);
}

uint64_t orthogonal_group_order(const QuadLabel &q) {
    return orthogonal_group(q).order();
}

uint64_t symplectic_group_order_formula(int k) {
    check_rank(k);
    uint64_t order = uint64_t{1} << (k * k);
    for (int i = 1; i <= k; i++) {
        order *= (uint64_t{1} << (2 * i)) - 1;
    }
    return order;
}

}  // namespace qe7
