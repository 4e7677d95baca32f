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

#ifndef JACWIT_FUZZ_HPP
#define JACWIT_FUZZ_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "jacwit/certificate_json.hpp"
#include "jacwit/endo.hpp"
#include "jacwit/parse.hpp"
#include "jacwit/random.hpp"
#include "jacwit/witness.hpp"

namespace jacwit {

struct FuzzConfig {
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    std::size_t n = 2;
    unsigned deg = 3;
    long coeff_bound = 3;
    std::size_t max_word = 6;
};

struct PropertyTally {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    std::vector<std::string> failures;  ///< first few messages
};

struct FuzzSummary {
    std::vector<PropertyTally> properties;

    bool all_passed() const {
        for (const auto& p : properties)
            if (p.failed > 0) return false;
        return true;
    }
};

enum class Outcome { pass, fail, skip };

namespace detail {

inline bool gradient_vanishes(const Polynomial& f, const std::vector<std::size_t>& vars,
                              const std::vector<AlgebraicNumber>& P, const ModulusContext& ctx) {
    for (auto j : vars)
        if (!evaluate(partial(f, j), P, ctx).is_zero()) return false;
    return true;
}

inline Outcome chain_rule_trial(Rng& rng, const FuzzConfig& c) {
    const auto len = static_cast<std::size_t>(detail::uniform(rng, 1, static_cast<long>(c.max_word)));
    const Endomorphism sigma = tame_to_endo(rand_tame_word(rng, c.n, len));
    const Endomorphism phi = rand_endo(rng, c.n, 0, c.deg, c.coeff_bound);
    const Polynomial lhs = jacobian(compose(sigma, phi));
    const Polynomial rhs = substitute(jacobian(phi), sigma.images()) * jacobian(sigma);
    return lhs == rhs ? Outcome::pass : Outcome::fail;
}

inline Outcome tame_word_trial(Rng& rng, const FuzzConfig& c) {
    const auto len = static_cast<std::size_t>(detail::uniform(rng, 1, static_cast<long>(c.max_word)));
    const TameWord w = rand_tame_word(rng, c.n, len);
    const Endomorphism e = tame_to_endo(w);
    if (!jacobian_class(e).is_unit()) return Outcome::fail;
    return compose(e, tame_to_endo(invert_tame(w))) == Endomorphism::identity(c.n) ? Outcome::pass : Outcome::fail;
}

inline Outcome lemma_trial(Rng& rng, const FuzzConfig& c, bool zero_char) {
    auto fs = rand_lemma_input(rng, c.n, c.deg, c.coeff_bound);
    if (!fs) return Outcome::skip;
    const std::size_t dvar = c.n - 1;
    LemmaWitness w = zero_char ? lemma_zerochar(*fs, dvar) : lemma_infinite(*fs, dvar);
    if (!(w.h.front() == Polynomial::constant(c.n, 1))) return Outcome::fail;
    if (!gradient_vanishes(w.target, w.vanishing, w.point(), w.context)) return Outcome::fail;
    if (zero_char) {
        if (w.vanishing.size() != c.n) return Outcome::fail;
        if (!(partial(*w.h_last, dvar) + *w.v).is_zero()) return Outcome::fail;
    }
    return Outcome::pass;
}

inline Outcome pipeline_trial(Rng& rng, const FuzzConfig& c) {
    auto fs = rand_lemma_input(rng, c.n, c.deg, c.coeff_bound);
    if (!fs) return Outcome::skip;
    fs->push_back(Polynomial::variable(c.n, c.n - 1));
    const Endomorphism phi(c.n, 0, *fs);
    const PipelineResult r = theorem_tame(phi);
    if (!verify_certificate(r.certificate).pass) return Outcome::fail;
    const Certificate back = parse_certificate(certificate_text(r.certificate));
    return verify_certificate(back).pass ? Outcome::pass : Outcome::fail;
}

inline Outcome print_parse_trial(Rng& rng, const FuzzConfig& c) {
    const Polynomial f = rand_poly(rng, c.n, c.deg, c.coeff_bound, {6, std::nullopt});
    return parse_poly(print_canonical(f), c.n) == f ? Outcome::pass : Outcome::fail;
}

}  // namespace detail

/// Runs every property once per trial, each from its own derived seed.
inline FuzzSummary run_fuzz(const FuzzConfig& c) {
    using Trial = std::function<Outcome(Rng&, const FuzzConfig&)>;
    const std::vector<std::pair<std::string, Trial>> props = {
        {"chain_rule", detail::chain_rule_trial},
        {"tame_word_unit_roundtrip", detail::tame_word_trial},
        {"lemma_infinite", [](Rng& r, const FuzzConfig& k) { return detail::lemma_trial(r, k, false); }},
        {"lemma_zerochar", [](Rng& r, const FuzzConfig& k) { return detail::lemma_trial(r, k, true); }},
        {"witness_then_verify", detail::pipeline_trial},
        {"print_parse_roundtrip", detail::print_parse_trial},
    };
    FuzzSummary summary;
    for (std::size_t p = 0; p < props.size(); ++p) {
        PropertyTally tally{props[p].first, 0, 0, 0, {}};
        for (std::size_t t = 0; t < c.trials; ++t) {
            Rng rng(derive_seed(derive_seed(c.seed, p), t));
            Outcome o;
            std::string msg;
            try {
                o = props[p].second(rng, c);
                if (o == Outcome::fail) msg = "trial " + std::to_string(t) + ": property violated";
            } catch (const std::exception& e) {
                o = Outcome::fail;
                msg = "trial " + std::to_string(t) + ": " + e.what();
            }
            if (o == Outcome::pass) ++tally.passed;
            else if (o == Outcome::skip) ++tally.skipped;
            else {
                ++tally.failed;
                if (tally.failures.size() < 5) tally.failures.push_back(msg);
            }
        }
        summary.properties.push_back(std::move(tally));
    }
    return summary;
}

}  // namespace jacwit

#endif  // JACWIT_FUZZ_HPP
