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

#include "qe7/cyclo.h"

#include <charconv>
#include <stdexcept>

namespace qe7 {

namespace {

int64_t checked_shift(int64_t n, int s) {
    if (n == 0) {
        return 0;
    }
    if (s >= 62) {
        throw std::overflow_error("dyadic numerator overflow");
    }
    int64_t out;
    if (__builtin_mul_overflow(n, int64_t{1} << s, &out)) {
        throw std::overflow_error("dyadic numerator overflow");
    }
    return out;
}

int64_t checked_add(int64_t a, int64_t b) {
    int64_t out;
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::overflow_error("dyadic numerator overflow");
    }
    return out;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::overflow_error("dyadic numerator overflow");
    }
    return out;
}

int64_t parse_int(std::string_view text) {
    int64_t value = 0;
    const char *begin = text.data();
    if (!text.empty() && text[0] == '+') {
        begin++;
    }
    auto [ptr, ec] = std::from_chars(begin, text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || begin == text.data() + text.size()) {
        throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
    }
    return value;
}

// z^j * z^l expressed as (sign, index) in the basis 1, z, z^2, z^3.
inline std::pair<int, int> reduce_power(int e) {
    e = ((e % 8) + 8) % 8;
    return e < 4 ? std::pair{1, e} : std::pair{-1, e - 4};
}

}  // namespace

Dyadic::Dyadic(int64_t num, int exp) : num_(num), exp_(exp) {
    normalize();
}

void Dyadic::normalize() {
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    if (exp_ < 0) {
        num_ = checked_shift(num_, -exp_);
        exp_ = 0;
    }
    while (exp_ > 0 && (num_ % 2) == 0) {
        num_ /= 2;
        exp_--;
    }
}

Dyadic Dyadic::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Dyadic(parse_int(text));
    }
    auto den = text.substr(slash + 1);
    if (den.size() < 3 || den.substr(0, 2) != "2^") {
        throw std::invalid_argument("malformed dyadic '" + std::string(text) + "', expected num/2^e");
    }
    int64_t e = parse_int(den.substr(2));
    if (e < 0 || e > 62) {
        throw std::invalid_argument("dyadic exponent out of range in '" + std::string(text) + "'");
    }
    return Dyadic(parse_int(text.substr(0, slash)), static_cast<int>(e));
}

Dyadic Dyadic::operator+(const Dyadic &o) const {
    int e = std::max(exp_, o.exp_);
    int64_t a = checked_shift(num_, e - exp_);
    int64_t b = checked_shift(o.num_, e - o.exp_);
    return Dyadic(checked_add(a, b), e);
}

Dyadic Dyadic::operator-() const {
    if (num_ == INT64_MIN) {
        throw std::overflow_error("dyadic numerator overflow");
    }
    Dyadic out = *this;
    out.num_ = -num_;
    return out;
}

Dyadic Dyadic::operator-(const Dyadic &o) const {
    return *this + (-o);
}

Dyadic Dyadic::operator*(const Dyadic &o) const {
    return Dyadic(checked_mul(num_, o.num_), exp_ + o.exp_);
}

BigRational Dyadic::to_rational() const {
    BigInt den = BigInt(1) << exp_;
    return BigRational(BigInt(num_), den);
}

std::optional<Dyadic> Dyadic::from_rational(const BigRational &r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if ((den & (den - 1)) != 0) {
        return std::nullopt;
    }
    int e = static_cast<int>(boost::multiprecision::msb(den));
    if (num > BigInt(INT64_MAX) || num < BigInt(INT64_MIN + 1) || e > 62) {
        return std::nullopt;
    }
    return Dyadic(static_cast<int64_t>(num), e);
}

std::string Dyadic::str() const {
    return std::to_string(num_) + "/2^" + std::to_string(exp_);
}

CycloDyadic CycloDyadic::zeta_pow(int m) {
    auto [sign, idx] = reduce_power(m);
    CycloDyadic out;
    out.c_[idx] = Dyadic(sign);
    return out;
}

CycloDyadic CycloDyadic::one_minus_i_half() {
    return CycloDyadic({Dyadic(1, 1), Dyadic(0), Dyadic(-1, 1), Dyadic(0)});
}

CycloDyadic CycloDyadic::one_plus_i_half() {
    return CycloDyadic({Dyadic(1, 1), Dyadic(0), Dyadic(1, 1), Dyadic(0)});
}

CycloDyadic CycloDyadic::inv_sqrt2() {
    return CycloDyadic({Dyadic(0), Dyadic(1, 1), Dyadic(0), Dyadic(-1, 1)});
}

bool CycloDyadic::is_zero() const {
    for (const auto &d : c_) {
        if (!d.is_zero()) {
            return false;
        }
    }
    return true;
}

CycloDyadic CycloDyadic::operator+(const CycloDyadic &o) const {
    CycloDyadic out;
    for (int j = 0; j < 4; j++) {
        out.c_[j] = c_[j] + o.c_[j];
    }
    return out;
}

CycloDyadic CycloDyadic::operator-(const CycloDyadic &o) const {
    return *this + (-o);
}

CycloDyadic CycloDyadic::operator-() const {
    CycloDyadic out;
    for (int j = 0; j < 4; j++) {
        out.c_[j] = -c_[j];
    }
    return out;
}

CycloDyadic CycloDyadic::operator*(const CycloDyadic &o) const {
    CycloDyadic out;
    for (int j = 0; j < 4; j++) {
        if (c_[j].is_zero()) {
            continue;
        }
        for (int l = 0; l < 4; l++) {
            if (o.c_[l].is_zero()) {
                continue;
            }
            Dyadic p = c_[j] * o.c_[l];
            if (j + l < 4) {
                out.c_[j + l] += p;
            } else {
                out.c_[j + l - 4] += -p;
            }
        }
    }
    return out;
}

CycloDyadic CycloDyadic::galois(int m) const {
    if (m % 2 == 0) {
        throw std::invalid_argument("galois exponent must be odd");
    }
    CycloDyadic out;
    for (int j = 0; j < 4; j++) {
        auto [sign, idx] = reduce_power(j * m);
        out.c_[idx] += sign > 0 ? c_[j] : -c_[j];
    }
    return out;
}

std::optional<CycloDyadic> CycloDyadic::try_inverse() const {
    if (is_zero()) {
        return std::nullopt;
    }
    CycloDyadic conj = galois(3) * galois(5) * galois(7);
    CycloDyadic norm = *this * conj;
    // The norm is rational; a unit of Z[1/2] is +-2^t.
    const Dyadic &n = norm.c_[0];
    int64_t mag = n.num() < 0 ? -n.num() : n.num();
    if ((mag & (mag - 1)) != 0) {
        return std::nullopt;
    }
    int t = 63 - __builtin_clzll(static_cast<uint64_t>(mag));
    // 1/n = sign * 2^(exp - t)
    Dyadic inv_norm(n.num() < 0 ? -1 : 1, t - n.exp());
    return conj * CycloDyadic({inv_norm, Dyadic(0), Dyadic(0), Dyadic(0)});
}

std::optional<int> CycloDyadic::as_zeta_power() const {
    for (int m = 0; m < 8; m++) {
        if (*this == zeta_pow(m)) {
            return m;
        }
    }
    return std::nullopt;
}

std::string CycloDyadic::str() const {
    std::string out = "[";
    for (int j = 0; j < 4; j++) {
        if (j) {
            out += ",";
        }
        out += c_[j].str();
    }
    return out + "]";
}

std::string CycloDyadic::pretty() const {
    static const char *kBasis[4] = {"", "z", "i", "i*z"};
    std::string out;
    for (int j = 0; j < 4; j++) {
        const Dyadic &d = c_[j];
        if (d.is_zero()) {
            continue;
        }
        int64_t mag = d.num() < 0 ? -d.num() : d.num();
        std::string coeff = std::to_string(mag);
        if (d.exp() > 0) {
            coeff += "/" + std::to_string(int64_t{1} << d.exp());
        }
        if (out.empty()) {
            out = d.num() < 0 ? "-" : "";
        } else {
            out += d.num() < 0 ? " - " : " + ";
        }
        if (j == 0) {
            out += coeff;
        } else if (coeff == "1") {
            out += kBasis[j];
        } else {
            out += coeff + "*" + kBasis[j];
        }
    }
    return out.empty() ? "0" : out;
}

CycloRational::CycloRational(const CycloDyadic &d) {
    for (int j = 0; j < 4; j++) {
        c_[j] = d.coeffs()[j].to_rational();
    }
}

bool CycloRational::is_zero() const {
    for (const auto &r : c_) {
        if (r != 0) {
            return false;
        }
    }
    return true;
}

CycloRational CycloRational::operator+(const CycloRational &o) const {
    CycloRational out;
    for (int j = 0; j < 4; j++) {
        out.c_[j] = c_[j] + o.c_[j];
    }
    return out;
}

CycloRational CycloRational::operator-(const CycloRational &o) const {
    CycloRational out;
    for (int j = 0; j < 4; j++) {
        out.c_[j] = c_[j] - o.c_[j];
    }
    return out;
}

CycloRational CycloRational::operator-() const {
    CycloRational out;
    for (int j = 0; j < 4; j++) {
        out.c_[j] = -c_[j];
    }
    return out;
}

CycloRational CycloRational::operator*(const CycloRational &o) const {
    CycloRational out;
    for (int j = 0; j < 4; j++) {
        if (c_[j] == 0) {
            continue;
        }
        for (int l = 0; l < 4; l++) {
            if (o.c_[l] == 0) {
                continue;
            }
            BigRational p = c_[j] * o.c_[l];
            if (j + l < 4) {
                out.c_[j + l] += p;
            } else {
                out.c_[j + l - 4] -= p;
            }
        }
    }
    return out;
}

CycloRational CycloRational::galois(int m) const {
    CycloRational out;
    for (int j = 0; j < 4; j++) {
        auto [sign, idx] = reduce_power(j * m);
        if (sign > 0) {
            out.c_[idx] += c_[j];
        } else {
            out.c_[idx] -= c_[j];
        }
    }
    return out;
}

CycloRational CycloRational::inverse() const {
    if (is_zero()) {
        throw std::domain_error("inverse of zero");
    }
    CycloRational conj = galois(3) * galois(5) * galois(7);
    CycloRational norm = *this * conj;
    CycloRational inv_norm;
    inv_norm.c_[0] = BigRational(1) / norm.c_[0];
    return conj * inv_norm;
}

std::optional<CycloDyadic> CycloRational::to_dyadic() const {
    std::array<Dyadic, 4> out;
    for (int j = 0; j < 4; j++) {
        auto d = Dyadic::from_rational(c_[j]);
        if (!d) {
            return std::nullopt;
        }
        out[j] = *d;
    }
    return CycloDyadic(out);
}

}  // namespace qe7
