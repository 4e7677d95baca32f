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

#ifndef JACWIT_NUMBER_FIELD_HPP
#define JACWIT_NUMBER_FIELD_HPP

#include <algorithm>
#include <cstddef>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "jacwit/error.hpp"
#include "jacwit/poly.hpp"
#include "jacwit/rational.hpp"
#include "jacwit/upoly.hpp"

namespace jacwit {

/// A zero divisor found while inverting modulo mu splits mu = gcd_factor * cofactor.
struct SplitEvent {
    enum class Branch { undecided = -1, gcd_factor = 0, cofactor = 1 };

    UPoly original;
    UPoly gcd_factor;
    UPoly cofactor;
    Branch branch = Branch::undecided;

    const UPoly& chosen() const { return branch == Branch::gcd_factor ? gcd_factor : cofactor; }
};

/// E = Q[t]/(mu) for a monic squarefree mu of degree >= 1. Cheap to copy; the
/// modulus and the split lineage that produced it are shared and immutable.
class ModulusContext {
public:
    /// Validates mu: degree >= 1, monic, squarefree.
    static ModulusContext from_modulus(UPoly mu) {
        if (mu.degree() < 1) throw DegenerateModulus("modulus must have degree >= 1");
        if (mu.lead() != 1) throw DomainError("modulus must be monic: " + to_string(mu));
        if (!is_squarefree(mu)) throw DomainError("modulus is not squarefree: " + to_string(mu));
        return ModulusContext(std::make_shared<const Data>(Data{std::move(mu), {}}));
    }

    const UPoly& modulus() const noexcept { return d_->modulus; }
    std::size_t degree() const noexcept { return static_cast<std::size_t>(d_->modulus.degree()); }
    const std::vector<SplitEvent>& lineage() const noexcept { return d_->lineage; }

    UPoly reduce(const UPoly& r) const { return r.degree() < d_->modulus.degree() ? r : r % d_->modulus; }

    /// The context for the chosen side of a split of this modulus.
    ModulusContext branch(SplitEvent event, SplitEvent::Branch side) const {
        if (!(event.original == d_->modulus)) throw ContextMismatch("split event does not belong to this context");
        event.branch = side;
        Data next{event.chosen(), d_->lineage};
        next.lineage.push_back(std::move(event));
        return ModulusContext(std::make_shared<const Data>(std::move(next)));
    }

    friend bool operator==(const ModulusContext& a, const ModulusContext& b) {
        return a.d_ == b.d_ || a.d_->modulus == b.d_->modulus;
    }

private:
    struct Data {
        UPoly modulus;
        std::vector<SplitEvent> lineage;
    };

    explicit ModulusContext(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

    std::shared_ptr<const Data> d_;
};

/// Modulus = monic squarefree part of g.
inline ModulusContext make_context(const UPoly& g) {
    if (g.degree() < 1) throw DegenerateModulus("cannot build an extension from a constant polynomial");
    return ModulusContext::from_modulus(squarefree_part(g));
}

/// Residue class r(t) mod mu, always stored reduced (deg r < deg mu).
class AlgebraicNumber {
public:
    AlgebraicNumber(ModulusContext ctx, const UPoly& residue) : ctx_(std::move(ctx)), r_(ctx_.reduce(residue)) {}
    AlgebraicNumber(ModulusContext ctx, const Rational& value) : ctx_(std::move(ctx)), r_(UPoly::constant(value)) {}

    /// The class of t itself.
    static AlgebraicNumber generator(const ModulusContext& ctx) { return {ctx, UPoly::monomial(1)}; }

    const ModulusContext& context() const noexcept { return ctx_; }
    const UPoly& residue() const noexcept { return r_; }
    bool is_zero() const noexcept { return r_.is_zero(); }
    bool is_rational() const noexcept { return r_.is_constant(); }

    AlgebraicNumber operator-() const { return {ctx_, -r_}; }

    friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        a.check(b);
        return {a.ctx_, a.r_ + b.r_};
    }
    friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        a.check(b);
        return {a.ctx_, a.r_ - b.r_};
    }
    friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        a.check(b);
        return {a.ctx_, a.r_ * b.r_};
    }
    friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        a.check(b);
        return a.r_ == b.r_;
    }

private:
    void check(const AlgebraicNumber& o) const {
        if (!(ctx_ == o.ctx_))
            throw ContextMismatch("arithmetic between Q[t]/(" + to_string(ctx_.modulus()) + ") and Q[t]/(" +
                                  to_string(o.ctx_.modulus()) + ")");
    }

    ModulusContext ctx_;
    UPoly r_;
};

/// Either the inverse, or the factorization of mu exposed by a zero divisor.
inline std::variant<AlgebraicNumber, SplitEvent> nf_invert(const AlgebraicNumber& a) {
    if (a.is_zero()) throw DivisionByZero("inverse of zero in Q[t]/(" + to_string(a.context().modulus()) + ")");
    const UPoly& mu = a.context().modulus();
    ExtendedGcd eg = extended_gcd(a.residue(), mu);
    if (eg.gcd.degree() == 0) return AlgebraicNumber(a.context(), eg.s);
    return SplitEvent{mu, eg.gcd, mu / eg.gcd};
}

/// Thrown by invert() so elimination code can restart on a smaller modulus.
class SplitRequired : public Error {
public:
    explicit SplitRequired(SplitEvent ev)
        : Error("zero divisor: " + to_string(ev.original) + " = (" + to_string(ev.gcd_factor) + ")*(" +
                to_string(ev.cofactor) + ")"),
          event_(std::move(ev)) {}
    const SplitEvent& event() const noexcept { return event_; }

private:
    SplitEvent event_;
};

inline AlgebraicNumber invert(const AlgebraicNumber& a) {
    auto r = nf_invert(a);
    if (auto* ev = std::get_if<SplitEvent>(&r)) throw SplitRequired(*ev);
    return std::get<AlgebraicNumber>(std::move(r));
}

/// f at a point of E^N.
inline AlgebraicNumber evaluate(const Polynomial& f, std::span<const AlgebraicNumber> point, const ModulusContext& ctx) {
    return evaluate_in<AlgebraicNumber>(f, point, AlgebraicNumber(ctx, Rational(0)),
                                        [&](const Rational& c) { return AlgebraicNumber(ctx, c); });
}

/// f at (a_1, ..., b, ..., a_{N-1}): rational coordinates everywhere except
/// position `index`, which holds b.
inline AlgebraicNumber evaluate(const Polynomial& f, std::span<const Rational> rational_coords, std::size_t index,
                                const AlgebraicNumber& b) {
    if (rational_coords.size() + 1 != f.nvars() || index >= f.nvars())
        throw ArityError("evaluate: point dimension does not match " + std::to_string(f.nvars()) + " variables");
    std::vector<AlgebraicNumber> point;
    point.reserve(f.nvars());
    for (std::size_t j = 0, k = 0; j < f.nvars(); ++j)
        point.push_back(j == index ? b : AlgebraicNumber(b.context(), rational_coords[k++]));
    return evaluate(f, point, b.context());
}

namespace detail {

inline std::vector<Integer> positive_divisors(Integer n) {
    if (n < 0) n = -n;
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        Integer e = n / d;
        if (e != d) large.push_back(e);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace detail

/// Distinct rational roots. Zero comes first when it is a root; the rest follow
/// the candidate order p/q (q ascending, then p ascending, +p/q before -p/q).
inline std::vector<Rational> rational_roots(const UPoly& u) {
    std::vector<Rational> roots;
    if (u.degree() < 1) return roots;
    std::size_t low = 0;
    while (u.coeffs()[low] == 0) ++low;
    if (low > 0) roots.emplace_back(0);
    std::vector<Rational> shifted(u.coeffs().begin() + static_cast<long>(low), u.coeffs().end());
    if (shifted.size() < 2) return roots;

    Integer den = 1;
    for (const auto& c : shifted) den = lcm(den, Integer(c.get_den()));
    std::vector<Integer> ints;
    for (const auto& c : shifted) ints.emplace_back(Rational(c * den).get_num());
    const UPoly g(std::move(shifted));

    for (const auto& q : detail::positive_divisors(ints.back())) {
        for (const auto& p : detail::positive_divisors(ints.front())) {
            Rational r(p, q);
            r.canonicalize();
            for (const Rational& cand : {r, Rational(-r)}) {
                if (std::find(roots.begin(), roots.end(), cand) != roots.end()) continue;
                if (g(cand) == 0) roots.push_back(cand);
            }
        }
    }
    return roots;
}

struct RootInContext {
    ModulusContext context;
    AlgebraicNumber root;
};

/// A root b of u in an extension E: rational when one exists (mu = t - r),
/// otherwise the class of t modulo the squarefree part of u.
inline RootInContext find_root(const UPoly& u) {
    if (u.degree() < 1) throw DegenerateModulus("find_root: polynomial " + to_string(u) + " is constant");
    auto roots = rational_roots(u);
    if (!roots.empty()) {
        auto ctx = ModulusContext::from_modulus(UPoly::linear_root(roots.front()));
        return {ctx, AlgebraicNumber(ctx, roots.front())};
    }
    auto ctx = make_context(u);
    return {ctx, AlgebraicNumber::generator(ctx)};
}

}  // namespace jacwit

#endif  // JACWIT_NUMBER_FIELD_HPP
