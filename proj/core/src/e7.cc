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


#include "qe7/e7.h"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "json.hpp"
#include "qe7/cyclo.h"
#include "qe7/errors.h"
#include "qe7/group_closure.h"

namespace qe7 {

namespace {

PicVector sum_e1_to_e7() {
    PicVector out;
    for (int i = 1; i <= 7; i++) {
        out.n[i] = 1;
    }
    return out;
}

std::vector<int> parse_index_digits(std::string_view digits, std::string_view original) {
    std::vector<int> out;
    for (char c : digits) {
        if (c < '1' || c > '8') {
            throw std::invalid_argument("malformed label '" + std::string(original) + "'");
        }
        out.push_back(c - '0');
    }
    for (std::size_t i = 1; i < out.size(); i++) {
        if (out[i] <= out[i - 1]) {
            throw std::invalid_argument("label indices must increase in '" + std::string(original) + "'");
        }
    }
    return out;
}

// 2 G^{-1} for the Cartan matrix G; integral since det G = 2.
const std::array<std::array<int, 7>, 7> &doubled_cartan_inverse() {
    static const auto table = [] {
        const auto &g = cartan_matrix();
        std::array<std::array<BigRational, 14>, 7> a;
        for (int r = 0; r < 7; r++) {
            for (int c = 0; c < 7; c++) {
                a[r][c] = g[r][c];
                a[r][7 + c] = r == c ? 1 : 0;
            }
        }
        for (int col = 0; col < 7; col++) {
            int pivot = col;
            while (a[pivot][col] == 0) {
                pivot++;
            }
            std::swap(a[pivot], a[col]);
            BigRational p = a[col][col];
            for (auto &x : a[col]) {
                x /= p;
            }
            for (int r = 0; r < 7; r++) {
                if (r != col && a[r][col] != 0) {
                    BigRational f = a[r][col];
                    for (int c = 0; c < 14; c++) {
                        a[r][c] -= f * a[col][c];
                    }
                }
            }
        }
        std::array<std::array<int, 7>, 7> out{};
        for (int r = 0; r < 7; r++) {
            for (int c = 0; c < 7; c++) {
                BigRational v = a[r][7 + c] * 2;
                if (boost::multiprecision::denominator(v) != 1) {
                    throw InternalInconsistency("Cartan matrix determinant is not 2");
                }
                out[r][c] = static_cast<int>(boost::multiprecision::numerator(v));
            }
        }
        return out;
    }();
    return table;
}

// Roots in simple coordinates, positives first then negatives, with a
// lookup from coordinates (each in [-4, 4]) to index.
struct RootTable {
    static constexpr int kBase = 9;
    static constexpr int kOffset = 4;

    std::vector<SimpleRootCoords> coords;
    std::vector<int8_t> lookup;

    RootTable() {
        auto positives = enumerate_roots();
        for (const auto &r : positives) {
            coords.push_back(root_in_simple_coords(r));
        }
        for (std::size_t i = 0; i < positives.size(); i++) {
            SimpleRootCoords neg;
            for (int j = 0; j < 7; j++) {
                neg[j] = -coords[i][j];
            }
            coords.push_back(neg);
        }
        int size = 1;
        for (int j = 0; j < 7; j++) {
            size *= kBase;
        }
        lookup.assign(size, -1);
        for (std::size_t i = 0; i < coords.size(); i++) {
            lookup[key(coords[i])] = static_cast<int8_t>(i);
        }
    }

    static int key(const SimpleRootCoords &c) {
        int out = 0;
        for (int j = 6; j >= 0; j--) {
            if (c[j] < -kOffset || c[j] > kOffset) {
                throw InternalInconsistency("root coordinate out of range");
            }
            out = out * kBase + (c[j] + kOffset);
        }
        return out;
    }

    int index_of(const SimpleRootCoords &c) const {
        int idx = lookup[key(c)];
        if (idx < 0) {
            throw InternalInconsistency("Weyl image is not a root");
        }
        return idx;
    }

    int negate(int idx) const {
        return idx < 63 ? idx + 63 : idx - 63;
    }

    int add(int a, int b) const {
        SimpleRootCoords c;
        for (int j = 0; j < 7; j++) {
            c[j] = coords[a][j] + coords[b][j];
        }
        return index_of(c);
    }
};

const RootTable &root_table() {
    static const RootTable table;
    return table;
}

// A Weyl element is stored as the indices of w(alpha_1..alpha_7), 7 bits each.
struct WeylTraits {
    using Element = uint64_t;
    using Generator = int;
    using Key = uint64_t;

    static Key key(Element e) {
        return e;
    }
    static int image(Element e, int j) {
        return static_cast<int>((e >> (7 * j)) & 0x7f);
    }
    // (w s_i)(alpha_j) = w(alpha_j) - C_ij w(alpha_i)
    static Element multiply(Element e, int i) {
        const auto &table = root_table();
        const auto &cartan = cartan_matrix();
        const int wi = image(e, i);
        Element out = 0;
        for (int j = 0; j < 7; j++) {
            int wj = image(e, j);
            int next = wj;
            if (j == i) {
                next = table.negate(wi);
            } else if (cartan[i][j] == -1) {
                next = table.add(wj, wi);
            } else if (cartan[i][j] != 0) {
                throw InternalInconsistency("unexpected Cartan entry");
            }
            out |= static_cast<Element>(next) << (7 * j);
        }
        return out;
    }
};

const std::vector<RootLabel> &positive_roots_cached() {
    static const std::vector<RootLabel> roots = enumerate_roots();
    return roots;
}

const std::string kLetters = "ABCDEFG";

// Letter of a point of the standard Lagrangian.
std::string standard_letter(const SympVector &v) {
    static const std::map<std::string, std::string> kTable = {
        {"100:000", "A"}, {"011:000", "B"}, {"010:000", "C"}, {"111:000", "D"},
        {"001:000", "E"}, {"101:000", "F"}, {"110:000", "G"},
    };
    return kTable.at(v.str());
}

// Lines of the Fano plane on A..G are {j, j+1, j+3} mod 7.
std::string line_name(const std::vector<std::string> &letters) {
    std::vector<int> idx;
    for (const auto &l : letters) {
        idx.push_back(static_cast<int>(kLetters.find(l)));
    }
    std::sort(idx.begin(), idx.end());
    for (int j = 0; j < 7; j++) {
        std::vector<int> cand = {j, (j + 1) % 7, (j + 3) % 7};
        std::sort(cand.begin(), cand.end());
        if (cand == idx) {
            return std::string{kLetters[j], kLetters[(j + 1) % 7], kLetters[(j + 3) % 7]};
        }
    }
    throw InternalInconsistency("three letters do not form a Fano line");
}

}  // namespace

PicVector PicVector::basis(int i) {
    if (i < 0 || i > 7) {
        throw std::out_of_range("Picard basis index must be in 0..7");
    }
    PicVector out;
    out.n[i] = 1;
    return out;
}

PicVector PicVector::operator+(const PicVector &o) const {
    PicVector out;
    for (int i = 0; i < 8; i++) {
        out.n[i] = n[i] + o.n[i];
    }
    return out;
}

PicVector PicVector::operator-(const PicVector &o) const {
    return *this + (-o);
}

PicVector PicVector::operator-() const {
    return *this * -1;
}

PicVector PicVector::operator*(int c) const {
    PicVector out;
    for (int i = 0; i < 8; i++) {
        out.n[i] = n[i] * c;
    }
    return out;
}

std::string PicVector::str() const {
    std::string out = "(";
    for (int i = 0; i < 8; i++) {
        out += (i ? "," : "") + std::to_string(n[i]);
    }
    return out + ")";
}

int pic_pairing(const PicVector &a, const PicVector &b) {
    int out = -a.n[0] * b.n[0];
    for (int i = 1; i < 8; i++) {
        out += a.n[i] * b.n[i];
    }
    return out;
}

PicVector canonical_class() {
    PicVector k = sum_e1_to_e7();
    k.n[0] = -3;
    return k;
}

RootLabel RootLabel::parse(std::string_view text) {
    const std::string_view original = text;
    RootLabel out;
    if (text.starts_with("-")) {
        out.negative = true;
        text.remove_prefix(1);
    }
    if (!text.starts_with("R")) {
        throw std::invalid_argument("root label must start with R: '" + std::string(original) + "'");
    }
    out.indices = parse_index_digits(text.substr(1), original);
    if (out.indices.size() == 2) {
        out.kind = out.indices[1] == 8 ? RootKind::Ri8 : RootKind::Rij;
    } else if (out.indices.size() == 4 && out.indices[3] == 8) {
        out.kind = RootKind::Rijk8;
    } else {
        throw std::invalid_argument("root label needs indices ij, i8 or ijk8: '" + std::string(original) + "'");
    }
    return out;
}

std::string RootLabel::str() const {
    std::string out = negative ? "-R" : "R";
    for (int i : indices) {
        out += std::to_string(i);
    }
    return out;
}

PicVector RootLabel::vector() const {
    PicVector out;
    switch (kind) {
        case RootKind::Rij:
            out = PicVector::basis(indices[0]) - PicVector::basis(indices[1]);
            break;
        case RootKind::Rijk8:
            out = PicVector::basis(0) - PicVector::basis(indices[0]) - PicVector::basis(indices[1]) -
                  PicVector::basis(indices[2]);
            break;
        case RootKind::Ri8:
            out = PicVector::basis(0) * 2 - sum_e1_to_e7() + PicVector::basis(indices[0]);
            break;
    }
    return negative ? -out : out;
}

RootLabel RootLabel::operator-() const {
    RootLabel out = *this;
    out.negative = !negative;
    return out;
}

WeightLabel WeightLabel::parse(std::string_view text) {
    const std::string_view original = text;
    WeightLabel out;
    if (text.starts_with("-")) {
        out.negative = true;
        text.remove_prefix(1);
    }
    if (!text.starts_with("W")) {
        throw std::invalid_argument("weight label must start with W: '" + std::string(original) + "'");
    }
    auto idx = parse_index_digits(text.substr(1), original);
    if (idx.size() != 2) {
        throw std::invalid_argument("weight label needs two indices: '" + std::string(original) + "'");
    }
    out.i = idx[0];
    out.j = idx[1];
    return out;
}

std::string WeightLabel::str() const {
    return std::string(negative ? "-W" : "W") + std::to_string(i) + std::to_string(j);
}

PicVector WeightLabel::vector() const {
    const PicVector e0 = PicVector::basis(0);
    if (j == 8) {
        return negative ? PicVector::basis(i) : e0 * 3 - sum_e1_to_e7() - PicVector::basis(i);
    }
    return negative ? e0 - PicVector::basis(i) - PicVector::basis(j)
                    : e0 * 2 - sum_e1_to_e7() + PicVector::basis(i) + PicVector::basis(j);
}

WeightLabel WeightLabel::operator-() const {
    WeightLabel out = *this;
    out.negative = !negative;
    return out;
}

std::vector<RootLabel> enumerate_roots() {
    std::vector<RootLabel> out;
    for (int i = 1; i <= 7; i++) {
        for (int j = i + 1; j <= 7; j++) {
            out.push_back({RootKind::Rij, {i, j}, false});
        }
    }
    for (int i = 1; i <= 7; i++) {
        for (int j = i + 1; j <= 7; j++) {
            for (int k = j + 1; k <= 7; k++) {
                out.push_back({RootKind::Rijk8, {i, j, k, 8}, false});
            }
        }
    }
    for (int i = 1; i <= 7; i++) {
        out.push_back({RootKind::Ri8, {i, 8}, false});
    }
    return out;
}

std::vector<RootLabel> enumerate_all_roots() {
    auto out = enumerate_roots();
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; i++) {
        out.push_back(-out[i]);
    }
    return out;
}

std::vector<WeightLabel> enumerate_weights() {
    std::vector<WeightLabel> out;
    for (int i = 1; i <= 7; i++) {
        for (int j = i + 1; j <= 7; j++) {
            out.push_back({i, j, false});
        }
    }
    for (int i = 1; i <= 7; i++) {
        out.push_back({i, 8, false});
    }
    return out;
}

std::vector<WeightLabel> enumerate_weight_classes() {
    std::vector<WeightLabel> out;
    for (int i = 1; i <= 7; i++) {
        out.push_back({i, 8, true});
    }
    for (int i = 1; i <= 7; i++) {
        for (int j = i + 1; j <= 7; j++) {
            out.push_back({i, j, true});
        }
    }
    for (int i = 1; i <= 7; i++) {
        for (int j = i + 1; j <= 7; j++) {
            out.push_back({i, j, false});
        }
    }
    for (int i = 1; i <= 7; i++) {
        out.push_back({i, 8, false});
    }
    return out;
}

PicVector doubled_projection(const PicVector &l) {
    const PicVector k = canonical_class();
    // [K,K] = -2
    return l * 2 + k * pic_pairing(l, k);
}

int weight_root_pairing(const WeightLabel &w, const RootLabel &r) {
    int doubled = pic_pairing(doubled_projection(w.vector()), r.vector());
    if (doubled % 2 != 0) {
        throw InternalInconsistency("odd doubled weight-root pairing");
    }
    return doubled / 2;
}

const std::array<PicVector, 7> &simple_roots() {
    static const std::array<PicVector, 7> roots = [] {
        std::array<PicVector, 7> d;
        d[0] = PicVector::basis(1) - PicVector::basis(2);
        d[1] = PicVector::basis(0) - PicVector::basis(1) - PicVector::basis(2) - PicVector::basis(3);
        for (int i = 2; i < 7; i++) {
            d[i] = PicVector::basis(i) - PicVector::basis(i + 1);
        }
        return d;
    }();
    return roots;
}

const std::array<std::array<int, 7>, 7> &cartan_matrix() {
    static const auto g = [] {
        std::array<std::array<int, 7>, 7> out{};
        const auto &d = simple_roots();
        for (int i = 0; i < 7; i++) {
            for (int j = 0; j < 7; j++) {
                out[i][j] = pic_pairing(d[i], d[j]);
            }
        }
        return out;
    }();
    return g;
}

SimpleRootCoords lattice_coords(const PicVector &v) {
    if (pic_pairing(v, canonical_class()) != 0) {
        throw std::invalid_argument("vector " + v.str() + " is not orthogonal to K_S");
    }
    const auto &d = simple_roots();
    const auto &inv2 = doubled_cartan_inverse();
    std::array<int, 7> b;
    for (int i = 0; i < 7; i++) {
        b[i] = pic_pairing(d[i], v);
    }
    SimpleRootCoords out;
    for (int i = 0; i < 7; i++) {
        int acc = 0;
        for (int j = 0; j < 7; j++) {
            acc += inv2[i][j] * b[j];
        }
        if (acc % 2 != 0) {
            throw InternalInconsistency("non-integral simple-root coordinates for " + v.str());
        }
        out[i] = acc / 2;
    }
    if (from_simple_coords(out) != v) {
        throw InternalInconsistency("simple-root coordinates do not reconstruct " + v.str());
    }
    return out;
}

SimpleRootCoords root_in_simple_coords(const RootLabel &r) {
    return lattice_coords(r.vector());
}

PicVector from_simple_coords(const SimpleRootCoords &c) {
    PicVector out;
    const auto &d = simple_roots();
    for (int i = 0; i < 7; i++) {
        out = out + d[i] * c[i];
    }
    return out;
}

SimpleRootCoords highest_root_coords() {
    return {2, 2, 3, 4, 3, 2, 1};
}

SimpleRootCoords gamma_coords() {
    return {0, 1, 0, 0, 1, 0, 1};
}

SympVector pi_map(const SimpleRootCoords &c) {
    static const std::vector<SympVector> labels = diagram_labels(3);
    SympVector out = SympVector::zero(3);
    for (int i = 0; i < 7; i++) {
        if (c[i] & 1) {
            out += labels[i];
        }
    }
    return out;
}

SympVector pi_of_root(const RootLabel &r) {
    return pi_map(root_in_simple_coords(r));
}

RootLabel positive_root_over(const SympVector &v) {
    static const std::vector<RootLabel> table = [] {
        std::vector<RootLabel> out(64);
        std::vector<bool> seen(64, false);
        for (const auto &r : positive_roots_cached()) {
            uint32_t w = pi_of_root(r).word();
            if (w == 0 || seen[w]) {
                throw InternalInconsistency("pi is not a bijection from positive roots to nonzero points");
            }
            seen[w] = true;
            out[w] = r;
        }
        return out;
    }();
    if (v.k() != 3 || v.is_zero()) {
        throw std::invalid_argument("positive_root_over needs a nonzero vector of V_3");
    }
    return table[v.word()];
}

PicVector reflect(const PicVector &d, const PicVector &x) {
    if (pic_pairing(d, d) != 2) {
        throw std::invalid_argument("reflection vector " + d.str() + " must have [d,d] = 2");
    }
    return x - d * pic_pairing(x, d);
}

QuadLabel odd_form_of_weight(const WeightLabel &w) {
    // h(v) = q(v) + x*(x) is the linear functional E(., w_label).
    auto h = [&](const SympVector &v) {
        int q = weight_root_pairing(w, positive_root_over(v)) == 0 ? 1 : 0;
        return q ^ v.self_pairing();
    };
    uint32_t label_x = 0;
    uint32_t label_xstar = 0;
    for (int c = 0; c < 3; c++) {
        // E((e_c, 0), w) = w*_c and E((0, e_c), w) = w_c.
        if (h(SympVector::basis(3, c))) {
            label_xstar |= 1u << (2 - c);
        }
        if (h(SympVector::basis(3, 3 + c))) {
            label_x |= 1u << (2 - c);
        }
    }
    QuadLabel q(SympVector(3, label_x, label_xstar));
    for (const auto &v : nonzero_vectors(3)) {
        int expected = weight_root_pairing(w, positive_root_over(v)) == 0 ? 1 : 0;
        if (quad_eval(q, v) != expected) {
            throw InternalInconsistency("no quadratic form matches weight " + w.str());
        }
    }
    if (q.is_even()) {
        throw InternalInconsistency("weight " + w.str() + " produced an even form");
    }
    return q;
}

std::vector<OrthogonalRootSet> orthogonal_root_sets() {
    std::vector<OrthogonalRootSet> out;
    for (auto &l : enumerate_lagrangians(3)) {
        OrthogonalRootSet set;
        for (const auto &p : l.points()) {
            set.roots.push_back(positive_root_over(p));
        }
        set.lagrangian = std::move(l);
        out.push_back(std::move(set));
    }
    return out;
}

FanoDecomposition restriction_decomposition(const IsotropicSubspace &lagrangian) {
    if (lagrangian.k() != 3 || !lagrangian.is_lagrangian()) {
        throw std::invalid_argument("restriction_decomposition needs a Lagrangian subspace of V_3");
    }
    FanoDecomposition out;
    out.lagrangian = lagrangian;
    out.standard = lagrangian == standard_lagrangian(3);
    for (const auto &p : lagrangian.points()) {
        out.points.push_back({p, positive_root_over(p), out.standard ? standard_letter(p) : ""});
    }
    const auto weights = enumerate_weights();
    for (const auto &line : hyperplanes_of(lagrangian)) {
        FanoLine fl;
        fl.points = line.points();
        std::vector<RootLabel> others;
        for (const auto &p : lagrangian.points()) {
            RootLabel r = positive_root_over(p);
            if (line.contains(p)) {
                fl.roots.push_back(r);
            } else {
                others.push_back(r);
            }
        }
        for (const auto &w : weights) {
            bool on_line = std::all_of(fl.roots.begin(), fl.roots.end(),
                                       [&](const RootLabel &r) { return std::abs(weight_root_pairing(w, r)) == 1; });
            bool off_line = std::all_of(others.begin(), others.end(),
                                        [&](const RootLabel &r) { return weight_root_pairing(w, r) == 0; });
            if (on_line && off_line) {
                fl.weights.push_back(w);
            }
        }
        if (out.standard) {
            std::vector<int> common = {1, 2, 3, 4, 5, 6, 7};
            for (const auto &r : fl.roots) {
                std::vector<int> next;
                std::set_intersection(common.begin(), common.end(), r.indices.begin(), r.indices.end(),
                                      std::back_inserter(next));
                common = next;
            }
            if (common.size() == 1) {
                fl.a = common[0];
            }
            std::vector<std::string> letters;
            for (const auto &p : fl.points) {
                letters.push_back(standard_letter(p));
            }
            fl.name = line_name(letters);
        }
        out.lines.push_back(std::move(fl));
    }
    if (out.standard) {
        std::stable_sort(out.lines.begin(), out.lines.end(),
                         [](const FanoLine &a, const FanoLine &b) { return a.a.value_or(0) < b.a.value_or(0); });
    }
    return out;
}

std::string to_json(const FanoDecomposition &d) {
    nlohmann::json points = nlohmann::json::array();
    for (const auto &p : d.points) {
        nlohmann::json entry = {{"v", p.v.str()}, {"root", p.root.str()}};
        if (!p.letter.empty()) {
            entry["letter"] = p.letter;
        }
        points.push_back(entry);
    }
    nlohmann::json lines = nlohmann::json::array();
    for (const auto &l : d.lines) {
        nlohmann::json entry;
        if (l.a) {
            entry["a"] = *l.a;
        }
        if (!l.name.empty()) {
            entry["name"] = l.name;
        }
        entry["points"] = nlohmann::json::array();
        for (const auto &p : l.points) {
            entry["points"].push_back(p.str());
        }
        entry["roots"] = nlohmann::json::array();
        for (const auto &r : l.roots) {
            entry["roots"].push_back(r.str());
        }
        entry["weights"] = nlohmann::json::array();
        for (const auto &w : l.weights) {
            entry["weights"].push_back(w.str());
        }
        lines.push_back(entry);
    }
    return nlohmann::json{{"lagrangian", d.lagrangian.str()}, {"points", points}, {"lines", lines}}.dump();
}

std::vector<RootMultiplicity> weight_multiplicities() {
    const auto classes = enumerate_weight_classes();
    std::vector<RootMultiplicity> out;
    for (const auto &r : positive_roots_cached()) {
        RootMultiplicity m{r};
        for (const auto &w : classes) {
            int p = weight_root_pairing(w, r);
            m.n0 += p == 0;
            m.n_plus += p == 1;
            m.n_minus += p == -1;
        }
        out.push_back(m);
    }
    return out;
}

WeylSummary weyl_group_summary() {
    const auto &table = root_table();
    // alpha_j is a positive root; find its index.
    WeylTraits::Element identity = 0;
    WeylTraits::Element minus_identity = 0;
    std::array<SympVector, 7> labels;
    for (int j = 0; j < 7; j++) {
        SimpleRootCoords c{};
        c[j] = 1;
        int idx = table.index_of(c);
        identity |= static_cast<uint64_t>(idx) << (7 * j);
        minus_identity |= static_cast<uint64_t>(table.negate(idx)) << (7 * j);
        labels[j] = pi_map(c);
    }
    std::vector<int> gens = {0, 1, 2, 3, 4, 5, 6};
    auto cat = close_group<WeylTraits>(identity, gens, 2903040);

    std::array<SympVector, 126> pi_of_index;
    for (int i = 0; i < 126; i++) {
        pi_of_index[i] = pi_map(table.coords[i]);
    }
    WeylSummary out;
    out.order = cat.order();
    out.contains_minus_identity = cat.contains(minus_identity);
    bool only_pm = true;
    for (auto e : cat.elements()) {
        bool in_kernel = true;
        for (int j = 0; j < 7 && in_kernel; j++) {
            in_kernel = pi_of_index[WeylTraits::image(e, j)] == labels[j];
        }
        if (in_kernel) {
            out.kernel_size++;
            only_pm = only_pm && (e == identity || e == minus_identity);
        }
    }
    out.kernel_is_plus_minus_identity = only_pm && out.kernel_size == 2 && out.contains_minus_identity;
    out.image_order = out.kernel_size ? out.order / out.kernel_size : 0;
    return out;
}

Census brute_force_census() {
    const PicVector k = canonical_class();
    Census out;
    PicVector v;
    for (v.n[0] = -3; v.n[0] <= 3; v.n[0]++) {
        for (int code = 0; code < 78125; code++) {
            int c = code;
            for (int i = 1; i <= 7; i++) {
                v.n[i] = c % 5 - 2;
                c /= 5;
            }
            int vk = pic_pairing(v, k);
            int vv = pic_pairing(v, v);
            out.roots += vk == 0 && vv == 2;
            out.weights += vk == 1 && vv == 1;
        }
    }
    return out;
}

}  // namespace qe7
