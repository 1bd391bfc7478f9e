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

#ifndef QE7_CYCLO_H
#define QE7_CYCLO_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace qe7 {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// num / 2^exp with exp >= 0 and num odd whenever exp > 0.
///
/// Arithmetic is checked; std::overflow_error is thrown instead of wrapping.
class Dyadic {
   public:
    constexpr Dyadic() = default;
    constexpr Dyadic(int64_t n) : num_(n) {  // NOLINT(google-explicit-constructor)
    }
    Dyadic(int64_t num, int exp);

    /// Parses "num/2^e" or a plain integer.
    static Dyadic parse(std::string_view text);

    int64_t num() const {
        return num_;
    }
    int exp() const {
        return exp_;
    }
    bool is_zero() const {
        return num_ == 0;
    }

    Dyadic operator+(const Dyadic &o) const;
    Dyadic operator-(const Dyadic &o) const;
    Dyadic operator-() const;
    Dyadic operator*(const Dyadic &o) const;
    Dyadic &operator+=(const Dyadic &o) {
        return *this = *this + o;
    }

    BigRational to_rational() const;
    /// Exact conversion; nullopt unless the denominator is a power of two.
    static std::optional<Dyadic> from_rational(const BigRational &r);

    /// Always "num/2^e".
    std::string str() const;

    bool operator==(const Dyadic &o) const = default;

   private:
    void normalize();
    int64_t num_ = 0;
    int exp_ = 0;
};

/// An element a0 + a1 z + a2 z^2 + a3 z^3 of Z[z, 1/2] with z = exp(2 pi i / 8),
/// so z^2 = i and z^4 = -1.
class CycloDyadic {
   public:
    CycloDyadic() = default;
    CycloDyadic(int64_t n) {  // NOLINT(google-explicit-constructor)
        c_[0] = Dyadic(n);
    }
    explicit CycloDyadic(std::array<Dyadic, 4> coeffs) : c_(coeffs) {
    }

    static CycloDyadic zeta_pow(int m);
    static CycloDyadic i_pow(int m) {
        return zeta_pow(2 * m);
    }
    /// (1 - i) / 2
    static CycloDyadic one_minus_i_half();
    /// (1 + i) / 2
    static CycloDyadic one_plus_i_half();
    /// 1 / sqrt(2) = z (1 - i) / 2
    static CycloDyadic inv_sqrt2();

    const std::array<Dyadic, 4> &coeffs() const {
        return c_;
    }
    bool is_zero() const;

    CycloDyadic operator+(const CycloDyadic &o) const;
    CycloDyadic operator-(const CycloDyadic &o) const;
    CycloDyadic operator-() const;
    CycloDyadic operator*(const CycloDyadic &o) const;
    CycloDyadic &operator+=(const CycloDyadic &o) {
        return *this = *this + o;
    }
    CycloDyadic &operator*=(const CycloDyadic &o) {
        return *this = *this * o;
    }

    /// Image under z -> z^m for odd m.
    CycloDyadic galois(int m) const;
    /// Exact inverse inside Z[z, 1/2]; nullopt when zero or not a unit there.
    std::optional<CycloDyadic> try_inverse() const;
    /// m in 0..7 with *this == z^m, if any.
    std::optional<int> as_zeta_power() const;

    /// "[a0,a1,a2,a3]" with each entry as "num/2^e".
    std::string str() const;
    /// Human-readable sum such as "1/2 - 1/2*i"; z denotes exp(2 pi i / 8).
    std::string pretty() const;

    bool operator==(const CycloDyadic &o) const = default;

   private:
    std::array<Dyadic, 4> c_{};
};

/// An element of Q(z), used where division by arbitrary elements is needed.
class CycloRational {
   public:
    CycloRational() = default;
    CycloRational(int64_t n) {  // NOLINT(google-explicit-constructor)
        c_[0] = n;
    }
    explicit CycloRational(const CycloDyadic &d);

    bool is_zero() const;
    CycloRational operator+(const CycloRational &o) const;
    CycloRational operator-(const CycloRational &o) const;
    CycloRational operator-() const;
    CycloRational operator*(const CycloRational &o) const;
    CycloRational galois(int m) const;
    /// Throws std::domain_error on zero.
    CycloRational inverse() const;
    std::optional<CycloDyadic> to_dyadic() const;

    bool operator==(const CycloRational &o) const = default;

   private:
    std::array<BigRational, 4> c_{};
};

}  // namespace qe7

#endif
