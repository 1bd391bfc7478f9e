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


#ifndef QE7_HEISENBERG_H
#define QE7_HEISENBERG_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qe7/cyclo.h"
#include "qe7/errors.h"
#include "qe7/f2sym.h"
#include "qe7/group_closure.h"

namespace qe7 {

/// (i^s, x, x*) in H_k = mu_4 x L_k x L_k^*.
struct HeisenbergElement {
    int s = 0;
    SympVector v;

    HeisenbergElement() = default;
    HeisenbergElement(int s, const SympVector &v) : s(((s % 4) + 4) % 4), v(v) {
    }

    static HeisenbergElement identity(int k) {
        return HeisenbergElement(0, SympVector::zero(k));
    }
    /// Parses "i^s·U[abc:def]"; "U[abc:def]" means s = 0 and a plain '*' may replace '·'.
    static HeisenbergElement parse(std::string_view text);
    std::string str() const;

    bool operator==(const HeisenbergElement &other) const = default;
};

/// (s,x,x*)(t,y,y*) = (st(-1)^{y*(x)}, x+y, x*+y*).
HeisenbergElement h_mul(const HeisenbergElement &a, const HeisenbergElement &b);
HeisenbergElement h_inv(const HeisenbergElement &a);
/// a b a^-1 b^-1.
HeisenbergElement h_commutator(const HeisenbergElement &a, const HeisenbergElement &b);

/// A 2^k x 2^k matrix over Z[z, 1/2].
///
/// The basis function delta_a sits at index a, where a is read with
/// qubit 1 as the most significant bit.
class PhasedOperator {
   public:
    PhasedOperator() = default;
    /// The zero operator.
    explicit PhasedOperator(int k);

    static PhasedOperator identity(int k);
    static PhasedOperator scalar(int k, const CycloDyadic &c);
    /// Row-major entries; the size must be 4^k.
    static PhasedOperator from_entries(int k, std::vector<CycloDyadic> entries);
    /// Inverse of to_json.
    static PhasedOperator from_json(std::string_view text);

    int k() const {
        return k_;
    }
    int dim() const {
        return 1 << k_;
    }
    const CycloDyadic &at(int r, int c) const {
        return entries_[r * dim() + c];
    }
    CycloDyadic &at(int r, int c) {
        return entries_[r * dim() + c];
    }
    const std::vector<CycloDyadic> &entries() const {
        return entries_;
    }

    PhasedOperator operator*(const PhasedOperator &rhs) const;
    PhasedOperator operator+(const PhasedOperator &rhs) const;
    PhasedOperator operator-(const PhasedOperator &rhs) const;
    PhasedOperator scaled(const CycloDyadic &c) const;
    PhasedOperator transposed() const;
    bool is_identity() const;

    /// Exact inverse. Throws SingularMatrix, or std::domain_error when the
    /// inverse has entries outside Z[z, 1/2].
    PhasedOperator inverse() const;

    /// {"k": k, "entries": [[["n/2^e" x4], ...], ...]}
    std::string to_json() const;
    /// Rows of pretty-printed entries separated by newlines.
    std::string pretty() const;
    /// Compact key: entries' str() joined by ';'.
    std::string key() const;

    bool operator==(const PhasedOperator &other) const = default;

   private:
    int k_ = 0;
    std::vector<CycloDyadic> entries_;
};

/// U_h: delta_a -> i^s (-1)^{x*(x+a)} delta_{x+a}.
PhasedOperator schrodinger_matrix(const HeisenbergElement &h);

/// M_v = (1-i)/2 (I + i U_v) when x*(x) = 0, and (1-i)/2 (I + U_v) otherwise,
/// with U_v = U_{(1, v)}.
PhasedOperator lift_transvection(const SympVector &v);
/// (1+i)/2 (I - i U_v) resp. (1+i)/2 (I - U_v).
PhasedOperator lift_transvection_inverse(const SympVector &v);

/// The permutation delta_a -> delta_a' where a'_target = a_target + a_control.
/// Qubits are numbered 1..k.
PhasedOperator cnot_operator(int control, int target, int k);

/// (1-i)/2 (1 1; 1 -1).
PhasedOperator ms_operator();
/// (1-i)/2 (1 i; i 1).
PhasedOperator mt_operator();
/// 1/sqrt(2) (1 1; 1 -1).
PhasedOperator ms_prime_operator();

/// c U_{(0,w)} for a nonzero scalar c.
struct ScaledHeisenberg {
    CycloDyadic scalar;
    SympVector w;
};

/// Recognizes c U_{(0,w)}; nullopt for any other matrix.
std::optional<ScaledHeisenberg> as_scaled_heisenberg(const PhasedOperator &m);

struct NormalizerImage {
    SympMatrix phi;
    /// f[c] is the exponent with M U_{e_c} M^-1 = i^{f[c]} U_{phi(e_c)}.
    std::vector<int> f;
};

/// Throws SingularMatrix or NotInNormalizer.
NormalizerImage normalizer_image(const PhasedOperator &m);

/// Divides by the first nonzero entry in row-major order.
PhasedOperator projective_normal_form(const PhasedOperator &m);

struct OperatorTraits {
    using Element = PhasedOperator;
    using Generator = PhasedOperator;
    using Key = std::string;
    static Key key(const PhasedOperator &m) {
        return m.key();
    }
    static PhasedOperator multiply(const PhasedOperator &a, const PhasedOperator &g) {
        return a * g;
    }
};

struct ProjectiveOperatorTraits : OperatorTraits {
    static PhasedOperator multiply(const PhasedOperator &a, const PhasedOperator &g) {
        return projective_normal_form(a * g);
    }
};

using OperatorGroup = GroupCatalog<OperatorTraits>;
using ProjectiveOperatorGroup = GroupCatalog<ProjectiveOperatorTraits>;

/// Exact closure; the caller is responsible for finiteness.
OperatorGroup generate_operator_group(std::span<const PhasedOperator> generators);
/// Closure modulo scalars.
ProjectiveOperatorGroup generate_projective_group(std::span<const PhasedOperator> generators);

}  // namespace qe7

#endif
