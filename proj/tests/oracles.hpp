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

// Test-only oracles. Nothing here calls the code paths it is used to check:
// determinants are permutation sums, extension values are computed by
// substituting rationals and reducing a univariate polynomial mod mu.

#ifndef JACWIT_TESTS_ORACLES_HPP
#define JACWIT_TESTS_ORACLES_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "jacwit/jacwit.hpp"

namespace oracle {

using jacwit::Polynomial;
using jacwit::Rational;
using jacwit::UPoly;

/// sum over permutations of sign * prod m(i, perm(i))
template <class T>
T permutation_determinant(const jacwit::Matrix<T>& m, const T& one) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    T acc = one - one;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        T prod = one;
        for (std::size_t i = 0; i < n; ++i) prod = prod * m(i, perm[i]);
        acc = inversions % 2 == 0 ? T(acc + prod) : T(acc - prod);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

/// f(a_1, .., t, .., a_{N-1}) mod mu, with t in slot dvar.
inline UPoly eval_at(const Polynomial& f, const std::vector<Rational>& a, std::size_t dvar, const UPoly& mu) {
    const std::size_t N = f.nvars();
    std::vector<Polynomial> img;
    for (std::size_t j = 0, k = 0; j < N; ++j)
        img.push_back(j == dvar ? Polynomial::variable(N, dvar) : Polynomial::constant(N, a[k++]));
    return jacwit::to_univariate(jacwit::substitute(f, img), dvar) % mu;
}

/// f at a point whose coordinates are residues mod mu; expands with plain
/// univariate products.
inline UPoly eval_residues(const Polynomial& f, const std::vector<UPoly>& point, const UPoly& mu) {
    UPoly acc;
    for (const auto& [m, c] : f.terms()) {
        UPoly t = UPoly::constant(c);
        for (std::size_t j = 0; j < f.nvars(); ++j)
            for (jacwit::Exponent e = 0; e < m[j]; ++e) t = t * point[j];
        acc += t;
    }
    return acc % mu;
}

inline Polynomial x(std::size_t nvars, std::size_t one_based) { return Polynomial::variable(nvars, one_based - 1); }
inline Polynomial c(std::size_t nvars, long num, long den = 1) {
    return Polynomial::constant(nvars, jacwit::make_rational(num, den));
}

}  // namespace oracle

#endif  // JACWIT_TESTS_ORACLES_HPP
