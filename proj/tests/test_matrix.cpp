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

#include <gtest/gtest.h>

#include "jacwit/matrix.hpp"
#include "jacwit/random.hpp"
#include "oracles.hpp"

using namespace jacwit;
using oracle::c;
using oracle::x;

namespace {

PolyMatrix random_matrix(Rng& rng, std::size_t n, std::size_t nvars, unsigned deg) {
    std::vector<Polynomial> d;
    for (std::size_t i = 0; i < n * n; ++i) {
        // Sprinkle zeros so pivoting paths get exercised.
        if (detail::uniform(rng, 0, 4) == 0) d.emplace_back(nvars);
        else d.push_back(rand_poly(rng, nvars, deg, 3, {3, std::nullopt}));
    }
    return PolyMatrix(n, n, std::move(d));
}

}  // namespace

TEST(Determinant, Identity) {
    for (std::size_t n = 1; n <= 6; ++n) {
        PolyMatrix m(n, n, Polynomial(2));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = c(2, 1);
        EXPECT_EQ(determinant(m), c(2, 1)) << n;
    }
}

TEST(Determinant, DiagonalHandExample) {
    // [[x3+1, 0], [0, 1]] -> x3 + 1
    PolyMatrix m(2, 2, std::vector<Polynomial>{x(3, 3) + c(3, 1), Polynomial(3), Polynomial(3), c(3, 1)});
    EXPECT_EQ(determinant(m), x(3, 3) + c(3, 1));
}

TEST(Determinant, NonSquare) {
    EXPECT_THROW(determinant(PolyMatrix(2, 3, Polynomial(1))), ShapeError);
}

TEST(Determinant, RowSwapNegates) {
    Rng rng(21);
    for (int t = 0; t < 30; ++t) {
        PolyMatrix m = random_matrix(rng, 3, 2, 2);
        PolyMatrix s = m;
        s.swap_rows(0, 2);
        EXPECT_EQ(determinant(s), -determinant(m));
    }
}

TEST(Determinant, MatchesPermutationSumUpTo4) {
    Rng rng(22);
    for (std::size_t n = 1; n <= 4; ++n) {
        for (int t = 0; t < 25; ++t) {
            PolyMatrix m = random_matrix(rng, n, 2, 2);
            EXPECT_EQ(determinant(m), oracle::permutation_determinant(m, c(2, 1)));
        }
    }
}

TEST(Determinant, BareissMatchesPermutationSum) {
    // Sizes above 4 take the fraction-free route.
    Rng rng(23);
    for (std::size_t n = 5; n <= 6; ++n) {
        for (int t = 0; t < 4; ++t) {
            PolyMatrix m = random_matrix(rng, n, 2, 1);
            EXPECT_EQ(determinant(m), oracle::permutation_determinant(m, c(2, 1)));
        }
    }
    RationalMatrix r(5, 5, Rational(0));
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) r(i, j) = detail::uniform(rng, -4, 4);
    r(0, 0) = 0;
    EXPECT_EQ(determinant(r), oracle::permutation_determinant(r, Rational(1)));
}

TEST(Determinant, BareissSingular) {
    PolyMatrix m(5, 5, Polynomial(2));
    for (std::size_t i = 0; i < 5; ++i) m(i, 0) = x(2, 1);
    for (std::size_t i = 0; i < 5; ++i) m(i, i) = m(i, i) + x(2, 2);
    m.swap_rows(0, 1);
    EXPECT_EQ(determinant(m), oracle::permutation_determinant(m, c(2, 1)));
}

TEST(Inverse, RoundTrip) {
    Rng rng(24);
    for (int t = 0; t < 20; ++t) {
        RationalMatrix a = rand_unimodular(rng, 3, 5);
        RationalMatrix inv = inverse(a);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                Rational s = 0;
                for (std::size_t k = 0; k < 3; ++k) s += a(i, k) * inv(k, j);
                EXPECT_EQ(s, i == j ? 1 : 0);
            }
    }
    EXPECT_THROW(inverse(RationalMatrix(2, 2, Rational(1))), InvalidGenerator);
}
