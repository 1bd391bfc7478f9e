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


#ifndef QE7_TENSOR_FORMS_H
#define QE7_TENSOR_FORMS_H

#include <cstdint>
#include <span>
#include <vector>

#include "qe7/f2sym.h"
#include "qe7/heisenberg.h"
#include "qe7/polynomial.h"

namespace qe7 {

enum class FormKind { Symmetric, Alternating };

/// Q[eps:eps'] = sum_sigma (-1)^{eps'(sigma)} X_sigma X_{sigma+eps} for even
/// labels, A[eps:eps'] = sum_sigma (-1)^{eps'(sigma)} X_sigma Y_{sigma+eps}
/// for odd ones.
IntPolynomial form_polynomial(const QuadLabel &label);
/// Throws std::invalid_argument when the kind does not match the parity,
/// since the other polynomial vanishes identically.
IntPolynomial form_polynomial(const QuadLabel &label, FormKind kind);

/// tX M X (symmetric) or tX M Y (alternating).
CycloPolynomial bilinear_polynomial(const PhasedOperator &m, FormKind kind);

/// The substitution X -> tM X, Y -> tM Y, under which the form of U becomes
/// the form of M U tM.
CycloPolynomial act_on_polynomial(const PhasedOperator &m, const CycloPolynomial &p);

/// (-1)^{x*(eps) + eps'(x)} for u = (x, x*).
int heisenberg_eigenvalue(const SympVector &u, const QuadLabel &label);

struct FormAction {
    QuadLabel input;
    QuadLabel output;
    /// M_v U_w tM_v = i^l U_{w'}.
    int l = 0;
};

FormAction act_on_form(const SympVector &v, const QuadLabel &label);

struct HopfRelation {
    int k = 0;
    QuadLabel lhs;
    std::vector<QuadLabel> rhs;
    /// lhs^2 == sum of rhs^2, checked by expansion.
    bool holds = false;
};

/// The labels on the right of the tabulated sum-of-squares identity, k in 1..4.
std::vector<QuadLabel> hopf_rhs_labels(int k);
HopfRelation hopf_relation(int k);

/// Pfaffian of the antisymmetric matrix U_w; throws for even labels.
BigInt pfaffian(const QuadLabel &label);
/// Determinant of U_w by fraction-free elimination.
BigInt form_determinant(const QuadLabel &label);

/// Exact rank over Q.
int exact_rank(std::vector<std::vector<BigInt>> rows);

/// Rank of the squares of all even forms, k in 1..3.
int span_dimension_of_squares(int k);

/// 2 W_H8 = 2 (X^8 + 14 X^4 Y^4 + Y^8) with X = X_{0}, Y = X_{1}.
IntPolynomial doubled_hamming_enumerator();

struct QuarticReport {
    int k = 0;
    /// Even labels in packed-word order; permutations index into it.
    std::vector<QuadLabel> even_labels;
    std::vector<QuadLabel> odd_labels;
    /// q_permutations[g][i] = j when generator g sends Q_i^4 to a multiple of Q_j^4.
    std::vector<std::vector<int>> q_permutations;
    std::vector<std::vector<int>> a_permutations;
    bool permutes_q4 = false;
    bool permutes_a4 = false;
    bool sum_invariant = false;
    /// Order of the permutation group generated on the odd labels.
    uint64_t a_permutation_group_order = 0;
    /// k = 1 only: sum of Q^4 equals 2 W_H8.
    bool hamming_identity = false;
};

/// Throws NotInNormalizer if a generator is not in the normalizer.
QuarticReport quartic_invariance_check(std::span<const PhasedOperator> generators, int k);

}  // namespace qe7

#endif
