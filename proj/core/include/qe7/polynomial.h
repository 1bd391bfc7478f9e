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


#ifndef QE7_POLYNOMIAL_H
#define QE7_POLYNOMIAL_H

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qe7/cyclo.h"

namespace qe7 {

/// Variables X_sigma use index sigma and Y_sigma use 2^k + sigma, so 32
/// slots cover k <= 4.
inline constexpr int kMaxVars = 32;

using Monomial = std::array<uint8_t, kMaxVars>;

inline bool coeff_is_zero(const BigInt &c) {
    return c == 0;
}
inline bool coeff_is_zero(const CycloDyadic &c) {
    return c.is_zero();
}
inline std::string coeff_str(const BigInt &c) {
    return c.str();
}
inline std::string coeff_str(const CycloDyadic &c) {
    return c.pretty();
}

/// A sparse polynomial with exact coefficients. Terms are kept in decreasing
/// lexicographic order of exponent vectors and zero terms are never stored.
template <typename Coeff>
class Polynomial {
   public:
    using Terms = std::map<Monomial, Coeff, std::greater<Monomial>>;

    Polynomial() = default;

    static Polynomial constant(const Coeff &c) {
        Polynomial p;
        p.add_term(Monomial{}, c);
        return p;
    }
    static Polynomial variable(int index) {
        if (index < 0 || index >= kMaxVars) {
            throw std::out_of_range("polynomial variable index out of range");
        }
        Monomial m{};
        m[index] = 1;
        Polynomial p;
        p.add_term(m, Coeff(1));
        return p;
    }

    const Terms &terms() const {
        return terms_;
    }
    bool is_zero() const {
        return terms_.empty();
    }
    std::size_t size() const {
        return terms_.size();
    }

    void add_term(const Monomial &m, const Coeff &c) {
        if (coeff_is_zero(c)) {
            return;
        }
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second = it->second + c;
            if (coeff_is_zero(it->second)) {
                terms_.erase(it);
            }
        }
    }

    Polynomial operator+(const Polynomial &o) const {
        Polynomial out = *this;
        for (const auto &[m, c] : o.terms_) {
            out.add_term(m, c);
        }
        return out;
    }
    Polynomial operator-() const {
        Polynomial out;
        for (const auto &[m, c] : terms_) {
            out.terms_.emplace(m, -c);
        }
        return out;
    }
    Polynomial operator-(const Polynomial &o) const {
        return *this + (-o);
    }
    Polynomial operator*(const Polynomial &o) const {
        Polynomial out;
        for (const auto &[ma, ca] : terms_) {
            for (const auto &[mb, cb] : o.terms_) {
                Monomial m;
                for (int i = 0; i < kMaxVars; i++) {
                    m[i] = static_cast<uint8_t>(ma[i] + mb[i]);
                }
                out.add_term(m, ca * cb);
            }
        }
        return out;
    }
    Polynomial scaled(const Coeff &c) const {
        Polynomial out;
        for (const auto &[m, x] : terms_) {
            out.add_term(m, x * c);
        }
        return out;
    }
    Polynomial pow(int e) const {
        Polynomial out = constant(Coeff(1));
        for (int i = 0; i < e; i++) {
            out = out * *this;
        }
        return out;
    }

    /// Replaces every variable v by images[v]. Variables beyond images.size()
    /// must not occur.
    Polynomial substitute(const std::vector<Polynomial> &images) const {
        Polynomial out;
        for (const auto &[m, c] : terms_) {
            Polynomial term = constant(c);
            for (int v = 0; v < kMaxVars; v++) {
                if (m[v] == 0) {
                    continue;
                }
                if (v >= static_cast<int>(images.size())) {
                    throw std::invalid_argument("substitution misses a variable");
                }
                term = term * images[v].pow(m[v]);
            }
            out = out + term;
        }
        return out;
    }

    template <typename Other, typename F>
    Polynomial<Other> map_coefficients(F f) const {
        Polynomial<Other> out;
        for (const auto &[m, c] : terms_) {
            out.add_term(m, f(c));
        }
        return out;
    }

    bool operator==(const Polynomial &o) const {
        return terms_ == o.terms_;
    }

   private:
    Terms terms_;
};

using IntPolynomial = Polynomial<BigInt>;
using CycloPolynomial = Polynomial<CycloDyadic>;

/// "X_{01}" or "Y_{01}" for variable index v at rank k.
inline std::string variable_name(int k, int v) {
    int n = 1 << k;
    char letter = v < n ? 'X' : 'Y';
    int sigma = v % n;
    std::string bits;
    for (int i = k - 1; i >= 0; i--) {
        bits.push_back(((sigma >> i) & 1) ? '1' : '0');
    }
    return std::string(1, letter) + "_{" + bits + "}";
}

/// One string per term, "coef * X_{ab}·X_{cd}", in term order.
template <typename Coeff>
std::vector<std::string> term_strings(int k, const Polynomial<Coeff> &p) {
    std::vector<std::string> out;
    for (const auto &[m, c] : p.terms()) {
        std::string s = coeff_str(c);
        std::string vars;
        for (int v = 0; v < kMaxVars; v++) {
            for (int e = 0; e < m[v]; e++) {
                vars += vars.empty() ? "" : "·";
                vars += variable_name(k, v);
            }
        }
        if (!vars.empty()) {
            s += " * " + vars;
        }
        out.push_back(s);
    }
    return out;
}

inline CycloPolynomial to_cyclo(const IntPolynomial &p) {
    return p.map_coefficients<CycloDyadic>([](const BigInt &c) {
        if (c > BigInt(INT64_MAX) || c < BigInt(INT64_MIN + 1)) {
            throw std::overflow_error("coefficient exceeds 64 bits");
        }
        return CycloDyadic(static_cast<int64_t>(c));
    });
}

}  // namespace qe7

#endif
