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


#ifndef QE7_E7_H
#define QE7_E7_H

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qe7/f2sym.h"

namespace qe7 {

/// n0 e0 + n1 e1 + ... + n7 e7 in the Picard lattice of a degree-two Del Pezzo surface.
struct PicVector {
    std::array<int, 8> n{};

    static PicVector basis(int i);

    PicVector operator+(const PicVector &o) const;
    PicVector operator-(const PicVector &o) const;
    PicVector operator-() const;
    PicVector operator*(int c) const;

    /// "(n0,n1,...,n7)"
    std::string str() const;

    bool operator==(const PicVector &o) const = default;
    auto operator<=>(const PicVector &o) const = default;
};

/// [a, b] = -a0 b0 + sum_{i>=1} ai bi.
int pic_pairing(const PicVector &a, const PicVector &b);

/// K_S = -3 e0 + e1 + ... + e7.
PicVector canonical_class();

enum class RootKind { Rij, Rijk8, Ri8 };

/// R_I for I a 2- or 4-element subset of {1..8}, with an optional sign.
struct RootLabel {
    RootKind kind = RootKind::Rij;
    /// Sorted, including 8 for Rijk8 and Ri8.
    std::vector<int> indices;
    bool negative = false;

    /// Parses "R12", "R1238", "R18", optionally prefixed by '-'.
    static RootLabel parse(std::string_view text);
    std::string str() const;
    PicVector vector() const;
    RootLabel operator-() const;

    bool operator==(const RootLabel &o) const = default;
};

/// +-Omega_S for S = {i, j}, 1 <= i < j <= 8.
struct WeightLabel {
    int i = 1;
    int j = 2;
    bool negative = false;

    /// Parses "W23" or "-W23".
    static WeightLabel parse(std::string_view text);
    std::string str() const;
    PicVector vector() const;
    WeightLabel operator-() const;

    bool operator==(const WeightLabel &o) const = default;
};

/// The 63 positive roots: 21 Rij, 35 Rijk8, 7 Ri8, each family in lexicographic order.
std::vector<RootLabel> enumerate_roots();
/// The positive roots followed by their negatives.
std::vector<RootLabel> enumerate_all_roots();
/// The 28 positive weights Omega_ij (i<j<=7) then Omega_i8.
std::vector<WeightLabel> enumerate_weights();
/// The 56 classes in the order -Omega_i8, -Omega_ij, Omega_ij, Omega_i8.
std::vector<WeightLabel> enumerate_weight_classes();

/// (omega, alpha) through the projection of the weight class to K_S-perp.
int weight_root_pairing(const WeightLabel &w, const RootLabel &r);

/// 2 l - (2 [l,K] / [K,K]) K, which lies in K_S-perp.
PicVector doubled_projection(const PicVector &l);

using SimpleRootCoords = std::array<int, 7>;

/// d1 .. d7.
const std::array<PicVector, 7> &simple_roots();
/// (alpha_i, alpha_j) = [d_i, d_j].
const std::array<std::array<int, 7>, 7> &cartan_matrix();

/// Coordinates over d1..d7 of a vector in K_S-perp. Throws std::invalid_argument
/// off K_S-perp and InternalInconsistency if the solve is not integral.
SimpleRootCoords lattice_coords(const PicVector &v);
SimpleRootCoords root_in_simple_coords(const RootLabel &r);
PicVector from_simple_coords(const SimpleRootCoords &c);

/// 2a1+2a2+3a3+4a4+3a5+2a6+a7.
SimpleRootCoords highest_root_coords();
/// a2+a5+a7.
SimpleRootCoords gamma_coords();

/// sum n_i v_i over F2 with v_i the diagram labels.
SympVector pi_map(const SimpleRootCoords &c);
SympVector pi_of_root(const RootLabel &r);
/// The unique positive root over a nonzero v in V_3.
RootLabel positive_root_over(const SympVector &v);

/// s_d(x) = x - [x,d] d; throws std::invalid_argument unless [d,d] = 2.
PicVector reflect(const PicVector &d, const PicVector &x);

/// The odd form with q(pi(alpha)) = 1 exactly when (omega, alpha) = 0.
QuadLabel odd_form_of_weight(const WeightLabel &w);

struct OrthogonalRootSet {
    IsotropicSubspace lagrangian;
    /// roots[i] lies over lagrangian.points()[i].
    std::vector<RootLabel> roots;
};

/// One set per Lagrangian of V_3, in enumerate_lagrangians order.
std::vector<OrthogonalRootSet> orthogonal_root_sets();

struct FanoPoint {
    SympVector v;
    RootLabel root;
    /// A..G for the standard Lagrangian, empty otherwise.
    std::string letter;
};

struct FanoLine {
    /// Common index of the three roots; standard Lagrangian only.
    std::optional<int> a;
    /// Three letters, standard Lagrangian only.
    std::string name;
    std::vector<SympVector> points;
    std::vector<RootLabel> roots;
    std::vector<WeightLabel> weights;
};

struct FanoDecomposition {
    IsotropicSubspace lagrangian;
    bool standard = false;
    std::vector<FanoPoint> points;
    std::vector<FanoLine> lines;
};

/// Throws std::invalid_argument unless L is a Lagrangian of V_3.
FanoDecomposition restriction_decomposition(const IsotropicSubspace &lagrangian);
/// {lagrangian, points: [{v, root, letter?}], lines: [{a?, name?, points, roots, weights}]}
std::string to_json(const FanoDecomposition &d);

struct RootMultiplicity {
    RootLabel root;
    /// Signed weight classes pairing to 0, +1 and -1 with the root.
    int n0 = 0;
    int n_plus = 0;
    int n_minus = 0;
};

std::vector<RootMultiplicity> weight_multiplicities();

struct WeylSummary {
    uint64_t order = 0;
    bool contains_minus_identity = false;
    uint64_t kernel_size = 0;
    /// The kernel of W(E7) -> Sp(6, F2) is exactly {I, -I}.
    bool kernel_is_plus_minus_identity = false;
    uint64_t image_order = 0;
};

/// Closes the simple reflections acting on root indices.
WeylSummary weyl_group_summary();

struct Census {
    int roots = 0;
    int weights = 0;
};

/// Scans n0 in [-3,3], ni in [-2,2] for [r,K]=0, [r,r]=2 and [l,K]=1, [l,l]=1.
Census brute_force_census();

}  // namespace qe7

#endif
