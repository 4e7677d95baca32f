// Copyright 2026 The jacwit Authors
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

#ifndef JACWIT_UPOLY_HPP
#define JACWIT_UPOLY_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "jacwit/error.hpp"
#include "jacwit/rational.hpp"

namespace jacwit {

/// Dense univariate polynomial over Q. coeffs()[i] is the coefficient of t^i;
/// the leading coefficient is never zero (the zero polynomial is empty).
class UPoly {
public:
    UPoly() = default;
    UPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly constant(const Rational& value) { return UPoly(std::vector<Rational>{value}); }

    static UPoly monomial(std::size_t degree, const Rational& coeff = 1) {
        std::vector<Rational> c(degree + 1);
        c[degree] = coeff;
        return UPoly(std::move(c));
    }

    /// t - root
    static UPoly linear_root(const Rational& root) { return UPoly{-root, Rational(1)}; }

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }

    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UPoly operator-() const {
        UPoly r = *this;
        for (auto& q : r.c_) q = -q;
        return r;
    }

    UPoly& operator+=(const UPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    UPoly& operator*=(const Rational& s) {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& q : c_) q *= s;
        return *this;
    }

    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
    friend UPoly operator*(const Rational& s, UPoly a) { return a *= s; }

    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(r));
    }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline UPoly derivative(const UPoly& f) {
    if (f.degree() < 1) return {};
    std::vector<Rational> r(f.coeffs().size() - 1);
    for (std::size_t i = 1; i < f.coeffs().size(); ++i) r[i - 1] = f.coeffs()[i] * static_cast<unsigned long>(i);
    return UPoly(std::move(r));
}

/// Euclidean division: a = q*b + r with deg r < deg b.
inline std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DivisionByZero("univariate division by the zero polynomial");
    if (a.degree() < b.degree()) return {UPoly{}, a};
    std::vector<Rational> rem = a.coeffs();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<Rational> quo(rem.size() - db);
    const Rational inv_lead = 1 / b.lead();
    for (std::size_t k = quo.size(); k-- > 0;) {
        Rational q = rem[k + db] * inv_lead;
        if (q == 0) continue;
        quo[k] = q;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs()[j];
    }
    rem.resize(db);
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

inline UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }
inline UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }

inline UPoly monic(const UPoly& f) {
    if (f.is_zero()) return f;
    return f * (1 / f.lead());
}

/// Monic gcd; gcd(0, 0) = 0.
inline UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

struct ExtendedGcd {
    UPoly gcd;  ///< monic
    UPoly s;    ///< s*a + t*b = gcd
    UPoly t;
};

inline ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b) {
    UPoly r0 = a, r1 = b;
    UPoly s0 = UPoly::constant(1), s1;
    UPoly t0, t1 = UPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, std::move(r));
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero()) return {};
    const Rational inv = 1 / r0.lead();
    return {r0 * inv, s0 * inv, t0 * inv};
}

/// f / gcd(f, f'), made monic. Zero maps to zero.
inline UPoly squarefree_part(const UPoly& f) {
    if (f.degree() < 1) return monic(f);
    return monic(f / gcd(f, derivative(f)));
}

inline bool is_squarefree(const UPoly& f) {
    return f.degree() >= 1 && gcd(f, derivative(f)).degree() == 0;
}

/// Canonical text in the given symbol, highest degree first: "t^2 - 1/2*t + 3".
inline std::string to_string(const UPoly& f, const std::string& symbol = "t") {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = f.coeffs().size(); k-- > 0;) {
        const Rational& c = f.coeffs()[k];
        if (c == 0) continue;
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        std::string mono;
        if (k >= 1) mono = symbol;
        if (k >= 2) mono += "^" + std::to_string(k);
        if (mono.empty()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += to_string(mag) + "*" + mono;
        }
    }
    return out;
}

}  // namespace jacwit

#endif  // JACWIT_UPOLY_HPP
