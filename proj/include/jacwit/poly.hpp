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

#ifndef JACWIT_POLY_HPP
#define JACWIT_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jacwit/error.hpp"
#include "jacwit/rational.hpp"
#include "jacwit/upoly.hpp"

namespace jacwit {

using Exponent = std::uint32_t;

/// Exponent vector over the ambient variables x1..xN.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<Exponent> exps) : e_(std::move(exps)) {
        for (auto x : e_) degree_ += x;
    }

    static Monomial variable(std::size_t nvars, std::size_t i, Exponent power = 1) {
        Monomial m(nvars);
        m.e_[i] = power;
        m.degree_ = power;
        return m;
    }

    std::size_t nvars() const noexcept { return e_.size(); }
    Exponent operator[](std::size_t i) const { return e_[i]; }
    const std::vector<Exponent>& exponents() const noexcept { return e_; }
    std::uint64_t total_degree() const noexcept { return degree_; }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        r.degree_ += o.degree_;
        return r;
    }

    /// Copy with the exponent of x_i replaced.
    Monomial with(std::size_t i, Exponent power) const {
        Monomial r = *this;
        r.degree_ = r.degree_ - r.e_[i] + power;
        r.e_[i] = power;
        return r;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    Monomial operator/(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
        r.degree_ -= o.degree_;
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

private:
    std::vector<Exponent> e_;
    std::uint64_t degree_ = 0;
};

/// Strict "a comes before b" in descending graded-lex order with x1 > x2 > ... > xN.
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.total_degree() != b.total_degree()) return a.total_degree() > b.total_degree();
        return a.exponents() > b.exponents();
    }
};

/// Sparse polynomial in x1..xN with rational coefficients. No zero coefficient is
/// ever stored; iteration runs in descending graded-lex order, so begin() is the
/// leading term. The zero polynomial has no terms.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexDescending>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c) {
        Polynomial p(nvars);
        if (c != 0) p.terms_.emplace(Monomial(nvars), c);
        return p;
    }

    static Polynomial variable(std::size_t nvars, std::size_t i) {
        if (i >= nvars) throw IndexError("variable index " + std::to_string(i + 1) + " out of range");
        Polynomial p(nvars);
        p.terms_.emplace(Monomial::variable(nvars, i), Rational(1));
        return p;
    }

    static Polynomial term(const Monomial& m, const Rational& c) {
        Polynomial p(m.nvars());
        if (c != 0) p.terms_.emplace(m, c);
        return p;
    }

    /// Embeds u(t) as u(x_var).
    static Polynomial from_univariate(const UPoly& u, std::size_t nvars, std::size_t var) {
        if (var >= nvars) throw IndexError("variable index " + std::to_string(var + 1) + " out of range");
        Polynomial p(nvars);
        for (std::size_t k = 0; k < u.coeffs().size(); ++k)
            if (u.coeffs()[k] != 0)
                p.terms_.emplace(Monomial::variable(nvars, var, static_cast<Exponent>(k)), u.coeffs()[k]);
        return p;
    }

    std::size_t nvars() const noexcept { return nvars_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total_degree() == 0);
    }
    Rational constant_term() const {
        if (terms_.empty()) return 0;
        auto it = terms_.find(Monomial(nvars_));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// -1 for zero.
    long total_degree() const noexcept {
        return terms_.empty() ? -1 : static_cast<long>(terms_.begin()->first.total_degree());
    }

    /// -1 for zero.
    long degree_in(std::size_t i) const {
        check_index(i);
        long d = -1;
        for (const auto& [m, c] : terms_) d = std::max<long>(d, m[i]);
        return d;
    }

    bool involves(std::size_t i) const { return degree_in(i) > 0; }

    /// Variables with positive degree, ascending.
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (involves(i)) out.push_back(i);
        return out;
    }

    void check_index(std::size_t i) const {
        if (i >= nvars_)
            throw IndexError("variable index " + std::to_string(i + 1) + " out of range for " +
                             std::to_string(nvars_) + " variables");
    }

    /// Adds c*m in place.
    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_domain(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_domain(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Polynomial& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_domain(b);
        Polynomial r(a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    void check_domain(const Polynomial& o) const {
        if (nvars_ != o.nvars_)
            throw DomainError("polynomials over different variable counts (" + std::to_string(nvars_) +
                              " vs " + std::to_string(o.nvars_) + ")");
    }

private:
    std::size_t nvars_ = 0;
    TermMap terms_;
};

inline Polynomial pow(const Polynomial& base, std::uint64_t e) {
    Polynomial result = Polynomial::constant(base.nvars(), 1);
    Polynomial b = base;
    while (e > 0) {
        if (e & 1u) result *= b;
        e >>= 1u;
        if (e > 0) b *= b;
    }
    return result;
}

/// Formal partial derivative with respect to x_i (0-based).
inline Polynomial partial(const Polynomial& f, std::size_t i) {
    f.check_index(i);
    Polynomial r(f.nvars());
    for (const auto& [m, c] : f.terms()) {
        if (m[i] == 0) continue;
        r.add_term(m.with(i, m[i] - 1), c * static_cast<unsigned long>(m[i]));
    }
    return r;
}

/// f(images[0], ..., images[N-1]). The images may live in a different variable count.
inline Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
    if (images.size() != f.nvars())
        throw ArityError("substitute: " + std::to_string(images.size()) + " images for " +
                         std::to_string(f.nvars()) + " variables");
    if (images.empty()) return f;
    const std::size_t target = images.front().nvars();
    for (const auto& g : images)
        if (g.nvars() != target) throw ArityError("substitute: images have mixed variable counts");

    // powers[j][e] = images[j]^e, built lazily up to the largest exponent of x_j.
    std::vector<std::vector<Polynomial>> powers(f.nvars());
    for (std::size_t j = 0; j < f.nvars(); ++j) powers[j].push_back(Polynomial::constant(target, 1));
    auto power = [&](std::size_t j, Exponent e) -> const Polynomial& {
        auto& cache = powers[j];
        while (cache.size() <= e) cache.push_back(cache.back() * images[j]);
        return cache[e];
    };

    Polynomial r(target);
    for (const auto& [m, c] : f.terms()) {
        Polynomial t = Polynomial::constant(target, c);
        for (std::size_t j = 0; j < f.nvars() && !t.is_zero(); ++j)
            if (m[j] > 0) t *= power(j, m[j]);
        r += t;
    }
    return r;
}

inline Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images) {
    return substitute(f, std::span<const Polynomial>(images));
}

/// [p_0, ..., p_d] with f = sum_j p_j * x_i^j and p_d != 0; empty for f = 0.
inline std::vector<Polynomial> coeffs_in_var(const Polynomial& f, std::size_t i) {
    f.check_index(i);
    const long d = f.degree_in(i);
    if (d < 0) return {};
    std::vector<Polynomial> out(static_cast<std::size_t>(d) + 1, Polynomial(f.nvars()));
    for (const auto& [m, c] : f.terms()) out[m[i]].add_term(m.with(i, 0), c);
    return out;
}

/// Reads f as a univariate polynomial in x_i; fails if any other variable appears.
inline UPoly to_univariate(const Polynomial& f, std::size_t i) {
    f.check_index(i);
    std::vector<Rational> c;
    for (const auto& [m, coeff] : f.terms()) {
        if (m.total_degree() != m[i]) throw DomainError("polynomial involves variables other than x" + std::to_string(i + 1));
        if (c.size() <= m[i]) c.resize(m[i] + 1);
        c[m[i]] = coeff;
    }
    return UPoly(std::move(c));
}

/// Exact quotient f / g; throws DomainError if g does not divide f.
inline Polynomial exact_quotient(const Polynomial& f, const Polynomial& g) {
    f.check_domain(g);
    if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
    const auto& [lm_g, lc_g] = *g.terms().begin();
    Polynomial rem = f;
    Polynomial quo(f.nvars());
    while (!rem.is_zero()) {
        const auto& [lm, lc] = *rem.terms().begin();
        if (!lm_g.divides(lm)) throw DomainError("exact_quotient: divisor does not divide dividend");
        Polynomial t = Polynomial::term(lm / lm_g, lc / lc_g);
        quo += t;
        rem -= t * g;
    }
    return quo;
}

/// Evaluates f at a point in any commutative ring T. embed maps a rational
/// coefficient into T; zero is the additive identity of the target.
template <class T, class Embed>
T evaluate_in(const Polynomial& f, std::span<const T> point, const T& zero, Embed embed) {
    if (point.size() != f.nvars())
        throw ArityError("evaluate: point of dimension " + std::to_string(point.size()) + " for " +
                         std::to_string(f.nvars()) + " variables");
    std::vector<std::vector<T>> powers(f.nvars());
    auto power = [&](std::size_t j, Exponent e) -> const T& {
        auto& cache = powers[j];
        if (cache.empty()) cache.push_back(point[j]);
        while (cache.size() < e) cache.push_back(cache.back() * point[j]);
        return cache[e - 1];
    };
    T acc = zero;
    for (const auto& [m, c] : f.terms()) {
        T t = embed(c);
        for (std::size_t j = 0; j < f.nvars(); ++j)
            if (m[j] > 0) t = t * power(j, m[j]);
        acc = acc + t;
    }
    return acc;
}

inline Rational evaluate(const Polynomial& f, std::span<const Rational> point) {
    return evaluate_in<Rational>(f, point, Rational(0), [](const Rational& c) { return c; });
}

}  // namespace jacwit

#endif  // JACWIT_POLY_HPP
