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

#ifndef JACWIT_ENDO_HPP
#define JACWIT_ENDO_HPP

#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "jacwit/error.hpp"
#include "jacwit/matrix.hpp"
#include "jacwit/poly.hpp"
#include "jacwit/rational.hpp"

namespace jacwit {

/// phi = (f_1, ..., f_n), an R-endomorphism of R[x_1..x_n] with R = Q (m = 0)
/// or R = Q[x_{n+1}] (m = 1). Components live in N = n + m variables; the
/// parameter variables are fixed implicitly.
class Endomorphism {
public:
    Endomorphism(std::size_t n, std::size_t m, std::vector<Polynomial> components)
        : n_(n), m_(m), f_(std::move(components)) {
        if (n_ < 2) throw DimensionError("endomorphisms need n >= 2 main variables");
        if (m_ > 1) throw DimensionError("at most one parameter variable (m <= 1) is supported");
        if (f_.size() != n_)
            throw ArityError(std::to_string(f_.size()) + " components for n = " + std::to_string(n_));
        for (const auto& f : f_)
            if (f.nvars() != n_ + m_)
                throw ArityError("component in " + std::to_string(f.nvars()) + " variables, expected " +
                                 std::to_string(n_ + m_));
    }

    static Endomorphism identity(std::size_t n, std::size_t m = 0) {
        std::vector<Polynomial> f;
        for (std::size_t i = 0; i < n; ++i) f.push_back(Polynomial::variable(n + m, i));
        return {n, m, std::move(f)};
    }

    std::size_t n() const noexcept { return n_; }
    std::size_t m() const noexcept { return m_; }
    std::size_t nvars() const noexcept { return n_ + m_; }
    const std::vector<Polynomial>& components() const noexcept { return f_; }
    const Polynomial& operator[](std::size_t i) const { return f_[i]; }

    /// Images of all N variables: f_1..f_n followed by the fixed parameters.
    std::vector<Polynomial> images() const {
        std::vector<Polynomial> img = f_;
        for (std::size_t j = n_; j < n_ + m_; ++j) img.push_back(Polynomial::variable(n_ + m_, j));
        return img;
    }

    friend bool operator==(const Endomorphism& a, const Endomorphism& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.f_ == b.f_;
    }

private:
    std::size_t n_;
    std::size_t m_;
    std::vector<Polynomial> f_;
};

/// phi(p): x_j -> f_j for main variables, parameters fixed.
inline Polynomial apply_endo(const Endomorphism& phi, const Polynomial& p) {
    if (p.nvars() != phi.nvars())
        throw ArityError("apply_endo: polynomial in " + std::to_string(p.nvars()) + " variables, endomorphism in " +
                         std::to_string(phi.nvars()));
    return substitute(p, phi.images());
}

/// sigma o phi = (f_1(g_1..g_n), ..., f_n(g_1..g_n)) where sigma = (g_1..g_n).
///
/// The components of sigma are substituted into those of phi. Read as algebra
/// maps this is ordinary composition (apply phi, then sigma), so
/// apply_endo(compose(s, p), q) == apply_endo(s, apply_endo(p, q)). Read as
/// polynomial maps of affine space it is the reverse order.
inline Endomorphism compose(const Endomorphism& sigma, const Endomorphism& phi) {
    if (sigma.n() != phi.n() || sigma.m() != phi.m())
        throw ArityError("compose: endomorphisms of different shapes");
    const auto img = sigma.images();
    std::vector<Polynomial> f;
    f.reserve(phi.n());
    for (const auto& fi : phi.components()) f.push_back(substitute(fi, img));
    return {phi.n(), phi.m(), std::move(f)};
}

/// n x n matrix of partials d f_i / d x_j over the main variables.
inline PolyMatrix jacobian_matrix(const Endomorphism& phi) {
    std::vector<Polynomial> d;
    d.reserve(phi.n() * phi.n());
    for (const auto& f : phi.components())
        for (std::size_t j = 0; j < phi.n(); ++j) d.push_back(partial(f, j));
    return PolyMatrix(phi.n(), phi.n(), std::move(d));
}

/// det[d f_i / d x_j], parameters not differentiated.
inline Polynomial jacobian(const Endomorphism& phi) {
    return determinant(jacobian_matrix(phi));
}

struct JacobianClass {
    enum class Kind { unit, zero, non_constant };

    Kind kind;
    Rational value;                      ///< the constant, for unit
    std::vector<std::size_t> variables;  ///< variables of positive degree, for non_constant

    bool is_unit() const noexcept { return kind == Kind::unit; }
    bool is_zero() const noexcept { return kind == Kind::zero; }
    bool is_non_constant() const noexcept { return kind == Kind::non_constant; }
};

inline JacobianClass classify(const Polynomial& j) {
    if (j.is_zero()) return {JacobianClass::Kind::zero, 0, {}};
    if (j.is_constant()) return {JacobianClass::Kind::unit, j.constant_term(), {}};
    return {JacobianClass::Kind::non_constant, 0, j.support()};
}

inline JacobianClass jacobian_class(const Endomorphism& phi) { return classify(jacobian(phi)); }

// ---------------------------------------------------------------------------
// Tame words

/// x -> A x + shift on the main variables.
struct LinearGenerator {
    RationalMatrix matrix;
    std::vector<Rational> shift;
};

/// x_target -> x_target + h, h free of x_target.
struct ElementaryGenerator {
    std::size_t target;
    Polynomial h;
};

using Generator = std::variant<LinearGenerator, ElementaryGenerator>;

/// Throws InvalidGenerator unless g is a valid generator for arity n with m parameters.
inline void validate(const Generator& g, std::size_t n, std::size_t m) {
    if (const auto* lin = std::get_if<LinearGenerator>(&g)) {
        if (lin->matrix.rows() != n || lin->matrix.cols() != n || lin->shift.size() != n)
            throw InvalidGenerator("linear generator of the wrong size");
        if (determinant(lin->matrix) == 0) throw InvalidGenerator("singular linear generator");
        return;
    }
    const auto& el = std::get<ElementaryGenerator>(g);
    if (el.target >= n) throw InvalidGenerator("elementary generator targets a non-main variable");
    if (el.h.nvars() != n + m) throw InvalidGenerator("elementary generator term in the wrong variable count");
    if (el.h.involves(el.target) || !partial(el.h, el.target).is_zero())
        throw InvalidGenerator("elementary generator term involves its own target x" + std::to_string(el.target + 1));
}

struct TameWord {
    std::size_t n = 2;
    std::size_t m = 0;
    std::vector<Generator> generators;
};

inline Endomorphism to_endo(const Generator& g, std::size_t n, std::size_t m) {
    validate(g, n, m);
    const std::size_t N = n + m;
    if (const auto* lin = std::get_if<LinearGenerator>(&g)) {
        std::vector<Polynomial> f;
        for (std::size_t i = 0; i < n; ++i) {
            Polynomial c = Polynomial::constant(N, lin->shift[i]);
            for (std::size_t j = 0; j < n; ++j)
                if (lin->matrix(i, j) != 0) c += Polynomial::variable(N, j) * lin->matrix(i, j);
            f.push_back(std::move(c));
        }
        return {n, m, std::move(f)};
    }
    const auto& el = std::get<ElementaryGenerator>(g);
    auto f = Endomorphism::identity(n, m).components();
    f[el.target] += el.h;
    return {n, m, std::move(f)};
}

/// E(g_1) o E(g_2) o ... o E(g_k) under compose().
inline Endomorphism tame_to_endo(const TameWord& w) {
    Endomorphism acc = Endomorphism::identity(w.n, w.m);
    for (const auto& g : w.generators) acc = compose(acc, to_endo(g, w.n, w.m));
    return acc;
}

inline Generator invert(const Generator& g, std::size_t n, std::size_t m) {
    validate(g, n, m);
    if (const auto* lin = std::get_if<LinearGenerator>(&g)) {
        // x -> A x + s  inverts to  x -> A^{-1} x - A^{-1} s
        RationalMatrix inv = inverse(lin->matrix);
        std::vector<Rational> shift(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) shift[i] -= inv(i, j) * lin->shift[j];
        return LinearGenerator{std::move(inv), std::move(shift)};
    }
    const auto& el = std::get<ElementaryGenerator>(g);
    return ElementaryGenerator{el.target, -el.h};
}

inline TameWord invert_tame(const TameWord& w) {
    TameWord r{w.n, w.m, {}};
    for (auto it = w.generators.rbegin(); it != w.generators.rend(); ++it) r.generators.push_back(invert(*it, w.n, w.m));
    return r;
}

// ---------------------------------------------------------------------------
// Coordinates built from the lemma weights

namespace detail {

inline std::vector<std::size_t> resolve_order(std::span<const std::size_t> order, std::size_t count, std::size_t n) {
    std::vector<std::size_t> out;
    if (order.empty()) {
        out.resize(count);
        std::iota(out.begin(), out.end(), std::size_t{0});
        return out;
    }
    if (order.size() != count) throw ArityError("variable order has the wrong length");
    std::vector<bool> seen(n, false);
    for (auto v : order) {
        if (v >= n || seen[v]) throw InvalidGenerator("variable order is not a permutation of main variables");
        seen[v] = true;
    }
    return {order.begin(), order.end()};
}

inline void require_only(const Polynomial& h, std::size_t var, const char* what) {
    for (std::size_t j = 0; j < h.nvars(); ++j)
        if (j != var && h.involves(j))
            throw InvalidGenerator(std::string(what) + " must involve only x" + std::to_string(var + 1));
}

}  // namespace detail

/// An R-linear coordinate with the automorphism that has it as a component.
struct RLinearCoordinate {
    Polynomial p;
    Endomorphism automorphism;
    TameWord word;
};

/// p = x_{o(1)} + h_2(x_{n+1}) x_{o(2)} + ... + h_n(x_{n+1}) x_{o(n)}, with
/// automorphism (x_1, .., p, .., x_n) placing p in slot o(1). The order o
/// defaults to the identity; h holds h_2..h_n as polynomials in n+1 variables
/// involving only x_{n+1}.
inline RLinearCoordinate build_r_linear_coordinate(std::span<const Polynomial> h, std::size_t n,
                                                   std::span<const std::size_t> order = {}) {
    if (h.size() + 1 != n) throw ArityError("need h_2..h_n");
    const std::size_t N = n + 1;
    const auto o = detail::resolve_order(order, n, n);
    Polynomial p = Polynomial::variable(N, o[0]);
    for (std::size_t k = 1; k < n; ++k) {
        if (h[k - 1].nvars() != N) throw ArityError("weights must live in n+1 variables");
        detail::require_only(h[k - 1], n, "R-linear weight");
        p += h[k - 1] * Polynomial::variable(N, o[k]);
    }
    Polynomial shift = p - Polynomial::variable(N, o[0]);
    TameWord word{n, 1, {ElementaryGenerator{o[0], shift}}};
    return {p, tame_to_endo(word), std::move(word)};
}

struct TameCoordinate {
    Polynomial q;
    TameWord word;
};

/// q = x_{o(1)} + h_2(x_n) x_{o(2)} + ... + h_{n-1}(x_n) x_{o(n-1)} + h_n(x_n),
/// witnessed by the single elementary generator x_{o(1)} -> q. The order o is a
/// permutation of x_1..x_{n-1}, identity by default.
inline TameCoordinate build_tame_coordinate(std::span<const Polynomial> h, const Polynomial& h_last, std::size_t n,
                                            std::span<const std::size_t> order = {}) {
    if (h.size() + 2 != n) throw ArityError("need h_2..h_{n-1}");
    const std::size_t dvar = n - 1;
    const auto o = detail::resolve_order(order, n - 1, n - 1);
    if (h_last.nvars() != n) throw ArityError("weights must live in n variables");
    detail::require_only(h_last, dvar, "tame weight");
    Polynomial q = Polynomial::variable(n, o[0]);
    for (std::size_t k = 1; k + 1 < n; ++k) {
        if (h[k - 1].nvars() != n) throw ArityError("weights must live in n variables");
        detail::require_only(h[k - 1], dvar, "tame weight");
        q += h[k - 1] * Polynomial::variable(n, o[k]);
    }
    q += h_last;
    TameWord word{n, 0, {ElementaryGenerator{o[0], q - Polynomial::variable(n, o[0])}}};
    return {std::move(q), std::move(word)};
}

}  // namespace jacwit

#endif  // JACWIT_ENDO_HPP
