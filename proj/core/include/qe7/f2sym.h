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

#ifndef QE7_F2SYM_H
#define QE7_F2SYM_H

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qe7/group_closure.h"

namespace qe7 {

/// Largest supported number of qubits.
inline constexpr int kMaxRank = 4;

/// Throws std::invalid_argument unless 1 <= k <= kMaxRank.
void check_rank(int k);

/// An element (x, x*) of V_k = L_k x L_k^*, packed into a 2k-bit word.
///
/// The x part occupies the high k bits and x* the low k bits. Inside each
/// part coordinate 1 is the most significant bit, so the word 0b101'100 at
/// k=3 prints as "101:100" and the integer value of the x part equals the
/// index of the basis function delta_x.
class SympVector {
   public:
    SympVector() = default;
    SympVector(int k, uint32_t x, uint32_t xstar);

    static SympVector from_word(int k, uint32_t word);
    static SympVector zero(int k);
    /// Unit vector for coordinate c in 0..2k-1 (x_1..x_k then x*_1..x*_k).
    static SympVector basis(int k, int c);
    /// Parses "abc:def".
    static SympVector parse(std::string_view text);

    int k() const {
        return k_;
    }
    uint32_t x() const {
        return word_ >> k_;
    }
    uint32_t xstar() const {
        return word_ & ((1u << k_) - 1);
    }
    uint32_t word() const {
        return word_;
    }
    bool is_zero() const {
        return word_ == 0;
    }
    /// Coordinate c in 0..2k-1.
    bool coordinate(int c) const;
    /// x*(x), the self pairing that decides the order of U_v.
    int self_pairing() const;

    std::string str() const;

    SympVector operator+(const SympVector &other) const;
    SympVector &operator+=(const SympVector &other);

    bool operator==(const SympVector &other) const = default;
    auto operator<=>(const SympVector &other) const = default;

   private:
    int k_ = 1;
    uint32_t word_ = 0;
};

/// Throws std::invalid_argument when the ranks differ.
void check_same_rank(const SympVector &a, const SympVector &b);

/// Parity of the dual pairing x*(x) between two k-bit words.
inline int dual_pairing(uint32_t xstar, uint32_t x) {
    return __builtin_parity(xstar & x);
}

/// E((x,x*),(y,y*)) = y*(x) + x*(y) over F2.
int symplectic_form(const SympVector &v, const SympVector &w);

/// t_v(w) = w + E(w,v) v.
SympVector transvection_apply(const SympVector &v, const SympVector &w);

/// All 4^k vectors of V_k in packed-word order.
std::vector<SympVector> all_vectors(int k);
/// The 4^k - 1 nonzero vectors of V_k in packed-word order.
std::vector<SympVector> nonzero_vectors(int k);

/// A 2k x 2k matrix over F2 acting on column vectors (x; x*).
///
/// Row r is stored as a packed 2k-bit word with the same layout as
/// SympVector, so column c lives at bit 2k-1-c.
class SympMatrix {
   public:
    SympMatrix() = default;
    explicit SympMatrix(int k);

    static SympMatrix identity(int k);
    /// The matrix whose c-th column is images[c].
    static SympMatrix from_columns(std::span<const SympVector> images);
    /// Rows given as strings of 0/1 digits, e.g. {"11", "01"}.
    static SympMatrix from_row_strings(int k, std::span<const std::string_view> rows);
    /// Block matrix (A 0; 0 D) from two k x k matrices given by rows.
    static SympMatrix block_diagonal(int k, std::span<const uint32_t> a_rows, std::span<const uint32_t> d_rows);

    int k() const {
        return k_;
    }
    int dim() const {
        return 2 * k_;
    }
    bool get(int r, int c) const;
    void set(int r, int c, bool value);
    uint32_t row_word(int r) const {
        return rows_[r];
    }

    SympVector apply(const SympVector &v) const;
    SympVector column(int c) const;
    SympMatrix operator*(const SympMatrix &rhs) const;
    SympMatrix transposed() const;

    bool is_identity() const;
    bool is_invertible() const;
    /// Preserves E on every pair of basis vectors.
    bool is_symplectic() const;

    /// Rows concatenated, row 0 in the most significant position.
    uint64_t encoding() const;
    /// Rows joined by '/', e.g. "11/01".
    std::string str() const;

    bool operator==(const SympMatrix &other) const = default;

   private:
    int k_ = 1;
    std::array<uint8_t, 2 * kMaxRank> rows_{};
};

/// The matrix of t_v; identity when v = 0.
SympMatrix transvection_matrix(const SympVector &v);

enum class Parity : uint8_t { Even = 0, Odd = 1 };

/// The quadratic form q_w(v) = x*(x) + E(v, w) on V_k, labeled by w = (eps, eps').
///
/// Even labels index the symmetric forms Q[eps:eps'] and odd labels the
/// alternating forms A[eps:eps'].
class QuadLabel {
   public:
    QuadLabel() = default;
    explicit QuadLabel(const SympVector &w);
    /// Throws std::invalid_argument if the stored parity disagrees with w.
    QuadLabel(const SympVector &w, Parity parity);

    /// Parses "Q[abc:def]" or "A[abc:def]".
    static QuadLabel parse(std::string_view text);

    const SympVector &w() const {
        return w_;
    }
    int k() const {
        return w_.k();
    }
    Parity parity() const {
        return parity_;
    }
    bool is_even() const {
        return parity_ == Parity::Even;
    }

    std::string str() const;

    bool operator==(const QuadLabel &other) const = default;
    auto operator<=>(const QuadLabel &other) const {
        return w_ <=> other.w_;
    }

   private:
    SympVector w_;
    Parity parity_ = Parity::Even;
};

Parity parity_of(const SympVector &w);

int quad_eval(const QuadLabel &q, const SympVector &v);

/// The label of u -> q(t_v(u)): q itself when q(v) = 1, otherwise q_{v+w}.
QuadLabel quad_transform(const SympVector &v, const QuadLabel &q);

struct QuadFormCount {
    QuadLabel label;
    int zeros = 0;
};

/// All labels of the given parity, in packed-word order, with their zero counts.
std::vector<QuadFormCount> enumerate_quad_forms(int k, Parity parity);

/// A subspace of V_k on which E vanishes identically.
class IsotropicSubspace {
   public:
    IsotropicSubspace() = default;
    /// Throws std::invalid_argument if the basis is dependent or not isotropic.
    explicit IsotropicSubspace(std::vector<SympVector> basis);

    /// Parses "abc:def,abc:def,...".
    static IsotropicSubspace parse(std::string_view text);

    int k() const {
        return k_;
    }
    int dim() const {
        return static_cast<int>(basis_.size());
    }
    bool is_lagrangian() const {
        return dim() == k_;
    }
    const std::vector<SympVector> &basis() const {
        return basis_;
    }
    /// Sorted nonzero points.
    const std::vector<SympVector> &points() const {
        return points_;
    }
    bool contains(const SympVector &v) const;

    /// Comma-separated basis.
    std::string str() const;

    bool operator==(const IsotropicSubspace &other) const {
        return k_ == other.k_ && points_ == other.points_;
    }

   private:
    int k_ = 1;
    std::vector<SympVector> basis_;
    std::vector<SympVector> points_;
};

/// The Lagrangian L_k x {0}.
IsotropicSubspace standard_lagrangian(int k);

/// Complete duplicate-free list, ordered by sorted point list. k in 1..3.
std::vector<IsotropicSubspace> enumerate_lagrangians(int k);

/// The codimension-one subspaces of a Lagrangian (its lines when k = 3), ordered by point list.
std::vector<IsotropicSubspace> hyperplanes_of(const IsotropicSubspace &space);

struct SympMatrixTraits {
    using Element = SympMatrix;
    using Generator = SympMatrix;
    using Key = uint64_t;
    static Key key(const SympMatrix &m) {
        return m.encoding();
    }
    static SympMatrix multiply(const SympMatrix &a, const SympMatrix &g) {
        return a * g;
    }
};

using SympGroup = GroupCatalog<SympMatrixTraits>;

/// Breadth-first closure of the generators; throws on rank mismatch or a
/// non-invertible generator.
SympGroup generate_group(std::span<const SympMatrix> generators);

/// The transvections t_v for all nonzero v.
std::vector<SympMatrix> all_transvections(int k);

/// Coxeter-diagram labels whose transvections generate Sp(2k, F2), k in 1..3:
/// the A2 pair at k=1, the A5 chain at k=2 and the E7 labels v1..v7 at k=3.
std::vector<SympVector> diagram_labels(int k);
std::vector<SympMatrix> diagram_transvections(int k);

/// Transvections t_v with q(v) = 1, which generate O(q).
std::vector<SympMatrix> orthogonal_generators(const QuadLabel &q);

/// Closure of orthogonal_generators(q). This is all of O(q) except for the even
/// form at k=2, where the reflections give an index-2 subgroup (order 36).
SympGroup orthogonal_group(const QuadLabel &q);
uint64_t orthogonal_group_order(const QuadLabel &q);

/// |Sp(2k, F2)| = 2^{k^2} prod_{i=1..k} (4^i - 1).
uint64_t symplectic_group_order_formula(int k);

}  // namespace qe7

#endif
