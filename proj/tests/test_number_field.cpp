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

#include <variant>

#include "jacwit/number_field.hpp"
#include "jacwit/random.hpp"

using namespace jacwit;

TEST(UPoly, DivmodAndGcd) {
    const UPoly f{-1, 0, 1};  // t^2 - 1
    const UPoly g{1, 1};      // t + 1
    auto [q, r] = divmod(f, g);
    EXPECT_EQ(q, (UPoly{-1, 1}));
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(gcd(f, UPoly{2, 2}), g);
    EXPECT_EQ(gcd(UPoly{-2, 0, 1}, UPoly{-3, 0, 1}), UPoly::constant(1));
    EXPECT_THROW(divmod(f, UPoly{}), DivisionByZero);
}

TEST(UPoly, ExtendedGcdIdentity) {
    Rng rng(31);
    for (int t = 0; t < 30; ++t) {
        std::vector<Rational> a(4), b(3);
        for (auto& x : a) x = detail::uniform(rng, -3, 3);
        for (auto& x : b) x = detail::uniform(rng, -3, 3);
        const UPoly pa(a), pb(b);
        if (pa.is_zero() && pb.is_zero()) continue;
        const auto eg = extended_gcd(pa, pb);
        EXPECT_EQ(eg.s * pa + eg.t * pb, eg.gcd);
        EXPECT_EQ(eg.gcd, gcd(pa, pb));
    }
}

TEST(MakeContext, SquarefreePart) {
    EXPECT_EQ(make_context(UPoly{1, 2, 1}).modulus(), (UPoly{1, 1}));
    EXPECT_EQ(make_context(UPoly{1, 2}).modulus(), (UPoly{make_rational(1, 2), 1}));
    EXPECT_EQ(make_context(UPoly{-1, 0, 1}).modulus(), (UPoly{-1, 0, 1}));
    EXPECT_THROW(make_context(UPoly::constant(3)), DegenerateModulus);
    EXPECT_THROW(make_context(UPoly{}), DegenerateModulus);
}

TEST(MakeContext, AlwaysSquarefree) {
    Rng rng(32);
    for (int t = 0; t < 40; ++t) {
        // products of small linear and quadratic factors with repeats
        UPoly g = UPoly::constant(detail::nonzero(rng, 3));
        const int k = static_cast<int>(detail::uniform(rng, 1, 4));
        for (int i = 0; i < k; ++i) {
            UPoly f{detail::uniform(rng, -2, 2), detail::uniform(rng, -2, 2), 1};
            g *= f;
            if (detail::uniform(rng, 0, 1)) g *= f;
        }
        const auto ctx = make_context(g);
        EXPECT_EQ(gcd(ctx.modulus(), derivative(ctx.modulus())).degree(), 0);
        EXPECT_TRUE((g % ctx.modulus()).is_zero());
    }
}

TEST(NfInvert, Examples) {
    const auto ctx = make_context(UPoly{-2, 0, 1});  // t^2 - 2
    auto inv = nf_invert(AlgebraicNumber::generator(ctx));
    ASSERT_TRUE(std::holds_alternative<AlgebraicNumber>(inv));
    EXPECT_EQ(std::get<AlgebraicNumber>(inv).residue(), (UPoly{0, make_rational(1, 2)}));

    auto one = nf_invert(AlgebraicNumber(ctx, Rational(1)));
    ASSERT_TRUE(std::holds_alternative<AlgebraicNumber>(one));
    EXPECT_EQ(std::get<AlgebraicNumber>(one).residue(), UPoly::constant(1));

    const auto ctx2 = make_context(UPoly{-1, 0, 1});  // t^2 - 1
    auto split = nf_invert(AlgebraicNumber(ctx2, UPoly{-1, 1}));
    ASSERT_TRUE(std::holds_alternative<SplitEvent>(split));
    const auto& ev = std::get<SplitEvent>(split);
    EXPECT_EQ(ev.gcd_factor, (UPoly{-1, 1}));
    EXPECT_EQ(ev.cofactor, (UPoly{1, 1}));
    EXPECT_EQ(ev.gcd_factor * ev.cofactor, ev.original);

    EXPECT_THROW(nf_invert(AlgebraicNumber(ctx, Rational(0))), DivisionByZero);
}

TEST(NfInvert, SplitBranchesDivideOriginal) {
    const auto ctx = make_context(UPoly{-2, 0, 1} * UPoly{-3, 0, 1} * UPoly{1, 1});
    const AlgebraicNumber z(ctx, UPoly{-2, 0, 1});
    auto r = nf_invert(z);
    ASSERT_TRUE(std::holds_alternative<SplitEvent>(r));
    const SplitEvent ev = std::get<SplitEvent>(r);
    EXPECT_EQ(ev.gcd_factor * ev.cofactor, ctx.modulus());
    EXPECT_GE(ev.gcd_factor.degree(), 1);
    EXPECT_GE(ev.cofactor.degree(), 1);
    for (auto side : {SplitEvent::Branch::gcd_factor, SplitEvent::Branch::cofactor}) {
        const auto b = ctx.branch(ev, side);
        EXPECT_TRUE((ctx.modulus() % b.modulus()).is_zero());
        ASSERT_EQ(b.lineage().size(), 1u);
        EXPECT_EQ(b.lineage()[0].branch, side);
    }
    // In the cofactor branch the element is invertible.
    const auto cof = ctx.branch(ev, SplitEvent::Branch::cofactor);
    const AlgebraicNumber zz(cof, z.residue());
    const AlgebraicNumber inv = invert(zz);
    EXPECT_EQ((zz * inv).residue(), UPoly::constant(1));
}

TEST(NumberField, FieldAxiomsOnRandomElements) {
    Rng rng(33);
    const auto ctx = make_context(UPoly{-2, 0, 0, 1});  // t^3 - 2, irreducible
    auto rand_elem = [&] {
        return AlgebraicNumber(ctx, UPoly{detail::uniform(rng, -3, 3), detail::uniform(rng, -3, 3),
                                          make_rational(detail::uniform(rng, -3, 3), 2)});
    };
    for (int t = 0; t < 40; ++t) {
        const auto a = rand_elem(), b = rand_elem(), c = rand_elem();
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        if (!a.is_zero()) {
            auto inv = nf_invert(a);
            ASSERT_TRUE(std::holds_alternative<AlgebraicNumber>(inv));
            EXPECT_EQ((a * std::get<AlgebraicNumber>(inv)).residue(), UPoly::constant(1));
        }
    }
}

TEST(NumberField, ContextMismatchRejected) {
    const auto c1 = make_context(UPoly{-2, 0, 1});
    const auto c2 = make_context(UPoly{-3, 0, 1});
    EXPECT_THROW(AlgebraicNumber::generator(c1) + AlgebraicNumber::generator(c2), ContextMismatch);
}

TEST(RationalRoots, Examples) {
    EXPECT_EQ(rational_roots(UPoly{1, 2}), std::vector<Rational>{make_rational(-1, 2)});
    EXPECT_EQ(rational_roots(UPoly{-1, 0, 1}), (std::vector<Rational>{1, -1}));
    EXPECT_TRUE(rational_roots(UPoly{1, 0, 1}).empty());
    EXPECT_EQ(rational_roots(UPoly{0, 0, -3, 3}), (std::vector<Rational>{0, 1}));
    // 6t^2 - 5t + 1 = (2t - 1)(3t - 1)
    EXPECT_EQ(rational_roots(UPoly{1, -5, 6}), (std::vector<Rational>{make_rational(1, 2), make_rational(1, 3)}));
}

TEST(FindRoot, Examples) {
    auto r1 = find_root(UPoly{1, 2});
    EXPECT_EQ(r1.context.modulus(), (UPoly{make_rational(1, 2), 1}));
    EXPECT_EQ(r1.root.residue(), UPoly::constant(make_rational(-1, 2)));

    auto r2 = find_root(UPoly{0, 1});
    EXPECT_EQ(r2.context.modulus(), (UPoly{0, 1}));
    EXPECT_TRUE(r2.root.is_zero());

    auto r3 = find_root(UPoly{-2, 0, 1});
    EXPECT_EQ(r3.context.modulus(), (UPoly{-2, 0, 1}));
    EXPECT_EQ(r3.root.residue(), (UPoly{0, 1}));

    EXPECT_THROW(find_root(UPoly::constant(5)), DegenerateModulus);
}

TEST(FindRoot, RootVanishesOnFuzzCorpus) {
    Rng rng(34);
    for (int t = 0; t < 100; ++t) {
        std::vector<Rational> c(static_cast<std::size_t>(detail::uniform(rng, 2, 6)));
        for (auto& x : c) x = make_rational(detail::uniform(rng, -4, 4), detail::uniform(rng, 1, 3));
        c.back() = detail::nonzero(rng, 3);
        const UPoly u(c);
        auto r = find_root(u);
        EXPECT_TRUE((u % r.context.modulus()).is_zero());
        std::vector<AlgebraicNumber> point{r.root};
        EXPECT_TRUE(evaluate(Polynomial::from_univariate(u, 1, 0), point, r.context).is_zero());
    }
}
