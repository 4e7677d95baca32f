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

#ifndef JACWIT_RANDOM_HPP
#define JACWIT_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "jacwit/endo.hpp"
#include "jacwit/poly.hpp"
#include "jacwit/witness.hpp"

namespace jacwit {

using Rng = std::mt19937_64;

/// Per-trial seed derivation (splitmix64 finalizer).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct RandPolyOptions {
    std::size_t max_terms = 4;
    std::optional<std::size_t> exclude;  ///< variable that must not appear
};

namespace detail {

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline long nonzero(Rng& rng, long bound) {
    long v = uniform(rng, 1, bound);
    return uniform(rng, 0, 1) ? v : -v;
}

}  // namespace detail

inline Polynomial rand_poly(Rng& rng, std::size_t nvars, unsigned deg, long coeff_bound, const RandPolyOptions& opts = {}) {
    std::vector<std::size_t> allowed;
    for (std::size_t j = 0; j < nvars; ++j)
        if (!opts.exclude || *opts.exclude != j) allowed.push_back(j);
    Polynomial p(nvars);
    const auto terms = static_cast<std::size_t>(detail::uniform(rng, 1, static_cast<long>(opts.max_terms)));
    for (std::size_t t = 0; t < terms; ++t) {
        std::vector<Exponent> e(nvars, 0);
        const long d = allowed.empty() ? 0 : detail::uniform(rng, 0, deg);
        for (long k = 0; k < d; ++k) ++e[allowed[static_cast<std::size_t>(detail::uniform(rng, 0, long(allowed.size()) - 1))]];
        p.add_term(Monomial(std::move(e)), detail::nonzero(rng, coeff_bound));
    }
    return p;
}

/// Deterministic for a fixed seed.
inline Polynomial rand_poly(std::uint64_t seed, std::size_t nvars, unsigned deg, long coeff_bound,
                            const RandPolyOptions& opts = {}) {
    Rng rng(seed);
    return rand_poly(rng, nvars, deg, coeff_bound, opts);
}

struct TameWordOptions {
    std::size_t m = 0;
    unsigned h_degree = 2;
    std::size_t h_terms = 2;
    long coeff_bound = 2;
    double linear_fraction = 0.5;
    std::size_t row_ops = 3;
};

/// Integer matrix of determinant +-1 built from elementary row operations.
inline RationalMatrix rand_unimodular(Rng& rng, std::size_t n, std::size_t ops) {
    RationalMatrix a(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) a(i, i) = 1;
    for (std::size_t k = 0; k < ops; ++k) {
        const auto i = static_cast<std::size_t>(detail::uniform(rng, 0, long(n) - 1));
        auto j = static_cast<std::size_t>(detail::uniform(rng, 0, long(n) - 2));
        if (j >= i) ++j;
        switch (detail::uniform(rng, 0, 3)) {
            case 0: a.swap_rows(i, j); break;
            case 1:
                for (std::size_t c = 0; c < n; ++c) a(i, c) = -a(i, c);
                break;
            default: {
                const Rational f = detail::nonzero(rng, 2);
                for (std::size_t c = 0; c < n; ++c) a(i, c) += f * a(j, c);
            }
        }
    }
    return a;
}

inline TameWord rand_tame_word(Rng& rng, std::size_t n, std::size_t len, const TameWordOptions& opts = {}) {
    TameWord w{n, opts.m, {}};
    std::bernoulli_distribution linear(opts.linear_fraction);
    for (std::size_t k = 0; k < len; ++k) {
        if (linear(rng)) {
            RationalMatrix a = rand_unimodular(rng, n, opts.row_ops);
            std::vector<Rational> shift;
            for (std::size_t i = 0; i < n; ++i) shift.emplace_back(detail::uniform(rng, -1, 1));
            w.generators.push_back(LinearGenerator{std::move(a), std::move(shift)});
        } else {
            const auto target = static_cast<std::size_t>(detail::uniform(rng, 0, long(n) - 1));
            Polynomial h = rand_poly(rng, n + opts.m, opts.h_degree, opts.coeff_bound, {opts.h_terms, target});
            w.generators.push_back(ElementaryGenerator{target, std::move(h)});
        }
        validate(w.generators.back(), n, opts.m);
    }
    return w;
}

inline TameWord rand_tame_word(std::uint64_t seed, std::size_t n, std::size_t len, const TameWordOptions& opts = {}) {
    Rng rng(seed);
    return rand_tame_word(rng, n, len, opts);
}

inline Endomorphism rand_endo(Rng& rng, std::size_t n, std::size_t m, unsigned deg, long coeff_bound,
                              std::size_t max_terms = 4) {
    std::vector<Polynomial> f;
    for (std::size_t i = 0; i < n; ++i) f.push_back(rand_poly(rng, n + m, deg, coeff_bound, {max_terms, std::nullopt}));
    return {n, m, std::move(f)};
}

/// Witness input: n-1 polynomials in n variables with deg_{x_n} J(f_1..f_{n-1}, x_n) > 0,
/// regenerated up to `retries` times.
inline std::optional<std::vector<Polynomial>> rand_lemma_input(Rng& rng, std::size_t n, unsigned deg, long coeff_bound,
                                                               std::size_t retries = 200, std::size_t max_terms = 4) {
    for (std::size_t attempt = 0; attempt < retries; ++attempt) {
        std::vector<Polynomial> fs;
        for (std::size_t i = 0; i + 1 < n; ++i) fs.push_back(rand_poly(rng, n, deg, coeff_bound, {max_terms, std::nullopt}));
        if (lemma_jacobian(fs, n - 1).degree_in(n - 1) > 0) return fs;
    }
    return std::nullopt;
}

}  // namespace jacwit

#endif  // JACWIT_RANDOM_HPP
