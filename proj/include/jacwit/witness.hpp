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

#ifndef JACWIT_WITNESS_HPP
#define JACWIT_WITNESS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jacwit/endo.hpp"
#include "jacwit/error.hpp"
#include "jacwit/matrix.hpp"
#include "jacwit/number_field.hpp"
#include "jacwit/poly.hpp"
#include "jacwit/rational.hpp"
#include "jacwit/upoly.hpp"

namespace jacwit {

/// Output of the critical-point lemmas. With fs = (f_1..f_{N-1}) and the
/// distinguished variable x_d, the target
///
///   g = f_{pi(1)} + h_2(x_d) f_{pi(2)} + ... + h_{N-1}(x_d) f_{pi(N-1)}   (+ h_N(x_d))
///
/// has d target / d x_j = 0 at P for every j in `vanishing`.
struct LemmaWitness {
    std::size_t dvar;
    std::vector<std::size_t> permutation;  ///< slot k uses fs[permutation[k]]
    std::vector<Rational> a;               ///< coordinates of P off x_d, in variable order
    ModulusContext context;
    AlgebraicNumber b;
    Polynomial jacobian;                   ///< G = J(f_1, .., f_{N-1}, x_d)
    std::vector<Polynomial> h;             ///< h_1 = 1, h_2, .., h_{N-1}, each in x_d only
    Polynomial g;
    std::optional<Polynomial> v;           ///< lifted d g / d x_d at P (zero-char variant)
    std::optional<Polynomial> h_last;      ///< h_N = -integral(v)     (zero-char variant)
    Polynomial target;                     ///< g, or u = g + h_N
    std::vector<std::size_t> vanishing;
    bool zero_jacobian = false;

    std::size_t nvars() const noexcept { return a.size() + 1; }

    std::vector<AlgebraicNumber> point() const {
        std::vector<AlgebraicNumber> p;
        for (std::size_t j = 0, k = 0; j < nvars(); ++j)
            p.push_back(j == dvar ? b : AlgebraicNumber(context, a[k++]));
        return p;
    }
};

namespace detail {

inline std::size_t check_lemma_input(std::span<const Polynomial> fs, std::size_t dvar) {
    const std::size_t N = fs.size() + 1;
    if (fs.empty()) throw DimensionError("the lemmas need at least one polynomial");
    for (const auto& f : fs)
        if (f.nvars() != N)
            throw ArityError("lemma input in " + std::to_string(f.nvars()) + " variables, expected " +
                             std::to_string(N));
    if (dvar >= N) throw IndexError("distinguished variable out of range");
    return N;
}

inline std::vector<AlgebraicNumber> make_point(std::span<const Rational> a, std::size_t dvar,
                                               const AlgebraicNumber& b) {
    std::vector<AlgebraicNumber> p;
    for (std::size_t j = 0, k = 0; j <= a.size(); ++j)
        p.push_back(j == dvar ? b : AlgebraicNumber(b.context(), a[k++]));
    return p;
}

// Builds the kernel witness at P = (a, b) with b the class of t in ctx.
// A zero divisor met during elimination shrinks ctx to the cofactor branch and
// the stage restarts there.
inline LemmaWitness complete_at_point(std::span<const Polynomial> fs, std::size_t dvar, std::vector<Rational> a,
                                      ModulusContext ctx, Polynomial G, bool zero_jacobian) {
    const std::size_t N = fs.size() + 1;
    const std::size_t k = fs.size();
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < N; ++j)
        if (j != dvar) cols.push_back(j);

    // partials[r][i] = d fs[i] / d x_{cols[r]}
    std::vector<std::vector<Polynomial>> partials(k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t i = 0; i < k; ++i) partials[r].push_back(partial(fs[i], cols[r]));

    for (;;) {
        try {
            const AlgebraicNumber b = AlgebraicNumber::generator(ctx);
            const auto P = make_point(a, dvar, b);
            const AlgebraicNumber zero(ctx, Rational(0));

            // Transposed partial matrix: c is a left-kernel vector of [d f_i/d x_j]
            // exactly when it is a right-kernel vector of this one.
            Matrix<AlgebraicNumber> m(k, k, zero);
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t i = 0; i < k; ++i) m(r, i) = evaluate(partials[r][i], P, ctx);

            // Reduced row echelon form; every pivot is inverted, so zero divisors surface here.
            std::vector<std::size_t> pivot_col_of_row;
            std::vector<bool> is_pivot(k, false);
            std::size_t row = 0;
            for (std::size_t col = 0; col < k && row < k; ++col) {
                std::size_t p = row;
                while (p < k && m(p, col).is_zero()) ++p;
                if (p == k) continue;
                m.swap_rows(row, p);
                const AlgebraicNumber inv = invert(m(row, col));
                for (std::size_t c = 0; c < k; ++c) m(row, c) = m(row, c) * inv;
                for (std::size_t r = 0; r < k; ++r) {
                    if (r == row || m(r, col).is_zero()) continue;
                    const AlgebraicNumber f = m(r, col);
                    for (std::size_t c = 0; c < k; ++c) m(r, c) = m(r, c) - f * m(row, c);
                }
                pivot_col_of_row.push_back(col);
                is_pivot[col] = true;
                ++row;
            }
            std::size_t free_col = 0;
            while (free_col < k && is_pivot[free_col]) ++free_col;
            if (free_col == k)
                throw std::logic_error("partial matrix is nonsingular at a root of its determinant");

            std::vector<AlgebraicNumber> c(k, zero);
            c[free_col] = AlgebraicNumber(ctx, Rational(1));
            for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) c[pivot_col_of_row[r]] = -m(r, free_col);

            std::vector<std::size_t> perm(k);
            for (std::size_t i = 0; i < k; ++i) perm[i] = i;
            if (c[0].is_zero()) {
                std::size_t first = 1;
                while (c[first].is_zero()) ++first;
                std::swap(perm[0], perm[first]);
            }
            const AlgebraicNumber scale = invert(c[perm[0]]);

            std::vector<Polynomial> h;
            Polynomial g(N);
            for (std::size_t s = 0; s < k; ++s) {
                const AlgebraicNumber cs = c[perm[s]] * scale;
                h.push_back(Polynomial::from_univariate(cs.residue(), N, dvar));
                g += h.back() * fs[perm[s]];
            }
            std::vector<std::size_t> vanishing = cols;
            Polynomial target = g;
            return LemmaWitness{dvar,  std::move(perm), std::move(a),      ctx,           b,
                                std::move(G), std::move(h), std::move(g), std::nullopt, std::nullopt,
                                std::move(target), std::move(vanishing), zero_jacobian};
        } catch (const SplitRequired& split) {
            ctx = ctx.branch(split.event(), SplitEvent::Branch::cofactor);
        }
    }
}

}  // namespace detail

/// G = J(f_1, .., f_{N-1}, x_d): the N x N Jacobian whose last row is d x_d.
inline Polynomial lemma_jacobian(std::span<const Polynomial> fs, std::size_t dvar) {
    const std::size_t N = detail::check_lemma_input(fs, dvar);
    std::vector<Polynomial> d;
    for (const auto& f : fs)
        for (std::size_t j = 0; j < N; ++j) d.push_back(partial(f, j));
    for (std::size_t j = 0; j < N; ++j) d.push_back(Polynomial::constant(N, j == dvar ? 1 : 0));
    return determinant(PolyMatrix(N, N, std::move(d)));
}

/// First a (over all variables but x_d) with lc_{x_d}(G)(a) != 0. Candidates are
/// integer tuples drawn from 0, 1, -1, 2, -2, ... (grid side deg(lc) + 2) in
/// lexicographic order, first coordinate slowest.
inline std::vector<Rational> choose_base_point(const Polynomial& G, std::size_t dvar) {
    if (G.degree_in(dvar) <= 0)
        throw HypothesisViolated("the determinant has degree 0 in x" + std::to_string(dvar + 1));
    const Polynomial lc = coeffs_in_var(G, dvar).back();
    const std::size_t N = G.nvars();
    const std::size_t side = static_cast<std::size_t>(lc.total_degree()) + 2;
    std::vector<Rational> values;
    for (std::size_t i = 0; i < side; ++i) values.push_back(i % 2 == 1 ? long(i + 1) / 2 : -long(i) / 2);

    std::vector<std::size_t> digit(N - 1, 0);
    std::vector<Rational> full(N);
    for (;;) {
        for (std::size_t j = 0, k = 0; j < N; ++j) full[j] = j == dvar ? Rational(0) : values[digit[k++]];
        if (evaluate(lc, full) != 0) {
            std::vector<Rational> a;
            for (std::size_t k = 0; k + 1 < N; ++k) a.push_back(values[digit[k]]);
            return a;
        }
        std::size_t pos = digit.size();
        while (pos > 0 && ++digit[pos - 1] == side) digit[--pos] = 0;
        if (pos == 0) throw std::logic_error("nonzero leading coefficient vanishes on the whole grid");
    }
}

/// Gradient of g in all variables but x_d vanishes at P = (a, b).
inline LemmaWitness lemma_infinite(std::span<const Polynomial> fs, std::size_t dvar) {
    detail::check_lemma_input(fs, dvar);
    Polynomial G = lemma_jacobian(fs, dvar);
    auto a = choose_base_point(G, dvar);

    std::vector<Rational> full;
    for (std::size_t j = 0, k = 0; j < G.nvars(); ++j) full.push_back(j == dvar ? Rational(0) : a[k++]);
    std::vector<Rational> restricted;
    for (const auto& p : coeffs_in_var(G, dvar)) restricted.push_back(evaluate(p, full));
    auto root = find_root(UPoly(std::move(restricted)));
    return detail::complete_at_point(fs, dvar, std::move(a), root.context, std::move(G), false);
}

inline LemmaWitness lemma_infinite(const std::vector<Polynomial>& fs, std::size_t dvar) {
    return lemma_infinite(std::span<const Polynomial>(fs), dvar);
}

/// The identically-zero determinant case: rows are dependent everywhere, so
/// P = 0 with mu = t and the kernel is taken over Q.
inline LemmaWitness lemma_zero_jacobian(std::span<const Polynomial> fs, std::size_t dvar) {
    const std::size_t N = detail::check_lemma_input(fs, dvar);
    Polynomial G = lemma_jacobian(fs, dvar);
    if (!G.is_zero()) throw HypothesisViolated("determinant is not identically zero");
    auto ctx = ModulusContext::from_modulus(UPoly::monomial(1));
    return detail::complete_at_point(fs, dvar, std::vector<Rational>(N - 1, Rational(0)), ctx, std::move(G), true);
}

/// h_N with d h_N / d x_d = -v and no constant term.
inline Polynomial antiderivative_neg(const Polynomial& v, std::size_t dvar) {
    const UPoly u = to_univariate(v, dvar);
    std::vector<Rational> c(u.coeffs().size() + 1);
    for (std::size_t k = 0; k < u.coeffs().size(); ++k) c[k + 1] = -u.coeffs()[k] / static_cast<unsigned long>(k + 1);
    return Polynomial::from_univariate(UPoly(std::move(c)), v.nvars(), dvar);
}

/// Extends a witness with h_N so that the full gradient vanishes.
inline LemmaWitness add_last_weight(LemmaWitness w) {
    const auto P = w.point();
    const AlgebraicNumber vb = evaluate(partial(w.g, w.dvar), P, w.context);
    Polynomial v = Polynomial::from_univariate(vb.residue(), w.nvars(), w.dvar);
    Polynomial h_last = antiderivative_neg(v, w.dvar);
    w.target = w.g + h_last;
    w.v = std::move(v);
    w.h_last = std::move(h_last);
    w.vanishing.clear();
    for (std::size_t j = 0; j < w.nvars(); ++j) w.vanishing.push_back(j);
    return w;
}

/// u = g + h_N(x_d) has vanishing full gradient at P.
inline LemmaWitness lemma_zerochar(std::span<const Polynomial> fs, std::size_t dvar) {
    return add_last_weight(lemma_infinite(fs, dvar));
}

inline LemmaWitness lemma_zerochar(const std::vector<Polynomial>& fs, std::size_t dvar) {
    return lemma_zerochar(std::span<const Polynomial>(fs), dvar);
}

// ---------------------------------------------------------------------------

struct SigmaShift {
    Endomorphism sigma;
    Endomorphism shifted;  ///< compose(sigma, phi)
    std::size_t variable;  ///< x_i -> x_i + x_d
    std::size_t by;        ///< d
};

/// Makes x_d appear in the Jacobian by x_i -> x_i + x_d, where x_i is the main
/// variable of highest degree in J(phi) (smallest index on ties).
inline SigmaShift sigma_shift(const Endomorphism& phi, std::size_t dvar) {
    if (dvar >= phi.nvars()) throw IndexError("distinguished variable out of range");
    const Polynomial J = jacobian(phi);
    if (!classify(J).is_non_constant()) throw HypothesisViolated("sigma shift needs a non-constant Jacobian");
    if (J.involves(dvar)) throw HypothesisViolated("x" + std::to_string(dvar + 1) + " already appears in the Jacobian");
    std::size_t best = phi.n();
    long best_deg = 0;
    for (std::size_t i = 0; i < phi.n(); ++i) {
        const long d = J.degree_in(i);
        if (d > best_deg) {
            best_deg = d;
            best = i;
        }
    }
    if (best == phi.n()) throw HypothesisViolated("no main variable appears in the Jacobian");
    auto f = Endomorphism::identity(phi.n(), phi.m()).components();
    f[best] += Polynomial::variable(phi.nvars(), dvar);
    Endomorphism sigma(phi.n(), phi.m(), std::move(f));
    Endomorphism shifted = compose(sigma, phi);
    return {std::move(sigma), std::move(shifted), best, dvar};
}

// ---------------------------------------------------------------------------
// Certificates

struct SigmaRecord {
    std::size_t variable;
    std::size_t by;
};

struct Provenance {
    std::string pipeline;
    std::optional<SigmaRecord> sigma_shift;
    std::vector<std::size_t> permutation;
    std::vector<SplitEvent> split_lineage;
    bool zero_jacobian = false;
    std::vector<std::string> notes;
};

/// Claims that d target / d x_j vanishes at `point` in Q[t]/(modulus) for every
/// j in claimed_zero. When the claimed set is a full Jacobian row of an
/// automorphism's component, no automorphism can have it, since its Jacobian
/// would vanish at the point; that is the non-coordinate reading.
struct Certificate {
    std::size_t nvars = 0;
    UPoly modulus;
    std::vector<UPoly> point;  ///< residues mod `modulus`
    Polynomial target;
    std::vector<std::size_t> claimed_zero;
    Provenance provenance;
};

struct PartialValue {
    std::size_t index;
    UPoly value;
};

struct VerificationReport {
    bool pass = false;
    std::vector<PartialValue> values;   ///< one per claimed index
    std::vector<PartialValue> failing;  ///< the nonzero ones
    std::vector<std::string> warnings;
};

namespace detail {

// Plain reduction-mod-mu evaluation, kept apart from AlgebraicNumber on purpose.
inline UPoly eval_mod(const Polynomial& f, const std::vector<UPoly>& point, const UPoly& mu) {
    UPoly acc;
    for (const auto& [mono, c] : f.terms()) {
        UPoly t = UPoly::constant(c);
        for (std::size_t j = 0; j < f.nvars(); ++j)
            for (Exponent e = 0; e < mono[j]; ++e) t = (t * point[j]) % mu;
        acc += t;
    }
    return acc % mu;
}

}  // namespace detail

/// Recomputes every claimed partial from the certificate alone.
inline VerificationReport verify_certificate(const Certificate& cert) {
    if (cert.target.nvars() != cert.nvars) throw FormatError("target variable count does not match nvars");
    if (cert.point.size() != cert.nvars) throw FormatError("point dimension does not match nvars");
    if (cert.modulus.degree() < 1) throw FormatError("modulus must have degree >= 1");
    if (cert.modulus.lead() != 1) throw FormatError("modulus must be monic");
    if (!is_squarefree(cert.modulus)) throw FormatError("modulus is not squarefree");
    for (auto j : cert.claimed_zero)
        if (j >= cert.nvars) throw FormatError("claimed partial index out of range");

    std::vector<UPoly> point;
    for (const auto& r : cert.point) point.push_back(r % cert.modulus);

    VerificationReport rep;
    if (cert.claimed_zero.empty()) rep.warnings.push_back("no partials claimed; passes vacuously");
    for (auto j : cert.claimed_zero) {
        UPoly val = detail::eval_mod(partial(cert.target, j), point, cert.modulus);
        rep.values.push_back({j, val});
        if (!val.is_zero()) rep.failing.push_back({j, std::move(val)});
    }
    rep.pass = rep.failing.empty();
    return rep;
}

// ---------------------------------------------------------------------------
// Witness pipelines

struct PipelineResult {
    std::string pipeline;
    std::optional<SigmaShift> shift;
    Endomorphism normalized;   ///< phi after the optional sigma shift
    Polynomial coordinate;     ///< p (R-linear) or q (tame)
    Endomorphism automorphism; ///< has `coordinate` as a component
    TameWord word;             ///< generator word for `automorphism`
    LemmaWitness witness;
    Polynomial image;          ///< apply_endo(normalized, coordinate)
    Certificate certificate;
};

namespace detail {

inline Certificate make_certificate(const std::string& pipeline, const LemmaWitness& w,
                                    const std::optional<SigmaShift>& shift, std::vector<std::size_t> claimed) {
    Certificate cert;
    cert.nvars = w.nvars();
    cert.modulus = w.context.modulus();
    for (const auto& x : w.point()) cert.point.push_back(x.residue());
    cert.target = w.target;
    cert.claimed_zero = std::move(claimed);
    cert.provenance.pipeline = pipeline;
    if (shift) cert.provenance.sigma_shift = SigmaRecord{shift->variable, shift->by};
    cert.provenance.permutation = w.permutation;
    cert.provenance.split_lineage = w.context.lineage();
    cert.provenance.zero_jacobian = w.zero_jacobian;
    return cert;
}

}  // namespace detail

/// R = Q[x_{n+1}]: finds an R-linear coordinate p whose image g = phi(p) has
/// vanishing gradient in x_1..x_n at P, so g is not an R-coordinate.
inline PipelineResult theorem_rlinear(const Endomorphism& phi) {
    if (phi.m() != 1) throw DimensionError("the R-linear pipeline needs exactly one parameter variable (m = 1)");
    const std::size_t n = phi.n();
    const std::size_t dvar = n;
    const Polynomial J = jacobian(phi);
    const JacobianClass cls = classify(J);
    if (cls.is_unit()) throw JacobianUnit();

    std::optional<SigmaShift> shift;
    Endomorphism target_endo = phi;
    if (cls.is_non_constant() && !J.involves(dvar)) {
        shift = sigma_shift(phi, dvar);
        target_endo = shift->shifted;
    }
    LemmaWitness w = cls.is_zero() ? lemma_zero_jacobian(target_endo.components(), dvar)
                                   : lemma_infinite(target_endo.components(), dvar);

    std::vector<Polynomial> weights(w.h.begin() + 1, w.h.end());
    auto coord = build_r_linear_coordinate(weights, n, w.permutation);
    Polynomial image = apply_endo(target_endo, coord.p);
    if (!(image == w.target)) throw std::logic_error("theorem_rlinear: phi(p) differs from the lemma target");

    std::vector<std::size_t> claimed(n);
    for (std::size_t j = 0; j < n; ++j) claimed[j] = j;
    Certificate cert = detail::make_certificate("theorem_rlinear", w, shift, std::move(claimed));
    cert.provenance.notes.push_back("parameter rings with more than one variable are unsupported");
    return {"theorem_rlinear",
            std::move(shift),
            std::move(target_endo),
            coord.p,
            std::move(coord.automorphism),
            std::move(coord.word),
            std::move(w),
            std::move(image),
            std::move(cert)};
}

/// m = 0, f_n = x_n: finds a tame coordinate q whose image u = phi(q) has
/// vanishing full gradient at P, so u is not a coordinate.
inline PipelineResult theorem_tame(const Endomorphism& phi) {
    if (phi.m() != 0) throw DimensionError("the tame pipeline takes no parameter variables (m = 0)");
    const std::size_t n = phi.n();
    const std::size_t dvar = n - 1;
    const Polynomial J = jacobian(phi);
    const JacobianClass cls = classify(J);
    if (cls.is_unit()) throw JacobianUnit();
    if (!(phi[dvar] == Polynomial::variable(n, dvar)))
        throw NotNormalized("last component must be x" + std::to_string(n) + "; compose with a normalizing automorphism first");

    std::optional<SigmaShift> shift;
    Endomorphism target_endo = phi;
    if (cls.is_non_constant() && !J.involves(dvar)) {
        shift = sigma_shift(phi, dvar);
        target_endo = shift->shifted;
    }
    std::span<const Polynomial> fs(target_endo.components().data(), n - 1);
    LemmaWitness w = add_last_weight(cls.is_zero() ? lemma_zero_jacobian(fs, dvar) : lemma_infinite(fs, dvar));

    std::vector<Polynomial> weights(w.h.begin() + 1, w.h.end());
    auto coord = build_tame_coordinate(weights, *w.h_last, n, w.permutation);
    Endomorphism automorphism = tame_to_endo(coord.word);
    Polynomial image = apply_endo(target_endo, coord.q);
    if (!(image == w.target)) throw std::logic_error("theorem_tame: phi(q) differs from the lemma target");

    std::vector<std::size_t> claimed(n);
    for (std::size_t j = 0; j < n; ++j) claimed[j] = j;
    Certificate cert = detail::make_certificate("theorem_tame", w, shift, std::move(claimed));
    return {"theorem_tame",
            std::move(shift),
            std::move(target_endo),
            std::move(coord.q),
            std::move(automorphism),
            std::move(coord.word),
            std::move(w),
            std::move(image),
            std::move(cert)};
}

}  // namespace jacwit

#endif  // JACWIT_WITNESS_HPP
