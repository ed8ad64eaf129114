#include <set>

#include "doctest.h"
#include "theta/errors.hpp"
#include "theta/gamma.hpp"

using namespace theta;

namespace {

// |Γ(m̄, n̄)| = (m+1)^n: each target element picks a source or nobody.
long long power(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

TEST_SUITE("gamma") {
    TEST_CASE("construction validates subsets") {
        CHECK(GammaOperator(3, {{3, 1}, {}}).subset(1) == std::vector<int>{1, 3});
        CHECK_THROWS_AS(GammaOperator(2, {{1}, {1}}), ArgumentError);
        CHECK_THROWS_AS(GammaOperator(2, {{3}}), ArgumentError);
        CHECK_THROWS_AS(GammaOperator(2, {{0}}), ArgumentError);
    }

    TEST_CASE("composition") {
        GammaOperator f(2, {{2}, {1}});
        GammaOperator g(3, {{1}, {2, 3}});
        CHECK(compose_gamma(g, f) == GammaOperator(3, {{2, 3}, {1}}));
        CHECK(compose_gamma(GammaOperator::identity(3), g) == g);
        CHECK(compose_gamma(g, GammaOperator::from_null(2)) == GammaOperator::from_null(3));
        CHECK(compose_gamma(GammaOperator::to_null(3), g) == GammaOperator::to_null(2));
        CHECK_THROWS_AS(compose_gamma(f, g), CompositionError);
    }

    TEST_CASE("hom sets and category laws") {
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; n <= 3; ++n) {
                auto hs = hom_gamma(m, n);
                CHECK(static_cast<long long>(hs.size()) == power(m + 1, n));
                CHECK(std::set<GammaOperator>(hs.begin(), hs.end()).size() == hs.size());
            }
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b)
                for (const auto& f : hom_gamma(a, b)) {
                    CHECK(compose_gamma(GammaOperator::identity(b), f) == f);
                    CHECK(compose_gamma(f, GammaOperator::identity(a)) == f);
                    for (const auto& g : hom_gamma(b, 2))
                        for (const auto& h : hom_gamma(2, 2))
                            CHECK(compose_gamma(h, compose_gamma(g, f)) == compose_gamma(compose_gamma(h, g), f));
                }
    }

    TEST_CASE("assemble") {
        GammaOperator u(3, {{1, 3}, {2}});
        GammaWreathOperator single{GammaOperator::identity(1), {2}, {3}, {{u}}};
        CHECK(assemble(single) == u);

        auto one = GammaOperator::identity(1);
        GammaWreathOperator doubled{GammaOperator(2, {{1, 2}}), {1}, {1, 1}, {{one, one}}};
        CHECK(assemble(doubled) == GammaOperator(2, {{1, 2}}));

        GammaWreathOperator swap{GammaOperator(2, {{2}, {1}}), {1, 1}, {1, 1}, {{one}, {one}}};
        CHECK(assemble(swap) == GammaOperator(2, {{2}, {1}}));

        GammaWreathOperator bad{GammaOperator::identity(1), {2}, {3}, {{one}}};
        CHECK_THROWS_AS(check_shape(bad), ShapeError);
        CHECK_THROWS_AS(assemble(bad), ShapeError);
    }

    TEST_CASE("assemble is a functor on small wreath operators") {
        // outer 1̄ -> 1̄ with blocks of size <= 2, plus 1̄ -> 2̄ splits
        std::vector<GammaWreathOperator> ops;
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b)
                for (const auto& c : hom_gamma(a, b))
                    ops.push_back({GammaOperator::identity(1), {a}, {b}, {{c}}});
        long long pairs = 0;
        for (const auto& f : ops)
            for (const auto& g : ops) {
                if (f.target_blocks != g.source_blocks) continue;
                ++pairs;
                CHECK(assemble(compose_wreath(g, f)) == compose_gamma(assemble(g), assemble(f)));
            }
        CHECK(pairs > 0);
    }

    TEST_CASE("finite abelian groups") {
        auto z2 = FiniteAbelianGroup::parse("z2");
        CHECK(z2.order() == 2);
        CHECK(z2.add(1, 1) == 0);
        auto g = FiniteAbelianGroup::parse("z2xz4");
        CHECK(g.order() == 8);
        CHECK(g.two_rank() == 2);
        CHECK(g.name() == "z2xz4");
        CHECK(FiniteAbelianGroup::parse("z3").two_rank() == 0);
        for (GroupElement a = 0; a < g.order(); ++a) {
            CHECK(g.encode(g.decode(a)) == a);
            CHECK(g.add(a, g.neutral()) == a);
            for (GroupElement b = 0; b < g.order(); ++b) CHECK(g.add(a, b) == g.add(b, a));
        }
        CHECK_THROWS_AS(FiniteAbelianGroup::parse("q2"), ParseError);
        CHECK_THROWS_AS(FiniteAbelianGroup::parse("z"), ParseError);
        CHECK_THROWS_AS(FiniteAbelianGroup::parse("z2x"), ParseError);
        CHECK_THROWS_AS(FiniteAbelianGroup::parse("z0"), ParseError);
    }

    TEST_CASE("h_pi_act") {
        auto z5 = FiniteAbelianGroup::parse("z5");
        std::vector<GroupElement> x{2, 4};
        CHECK(h_pi_act(z5, GammaOperator(2, {{1}, {}, {2}}), x) == std::vector<GroupElement>{2, 0, 4});
        CHECK(h_pi_act(z5, GammaOperator::identity(2), x) == x);
        CHECK(h_pi_act(z5, GammaOperator(2, {{1, 2}}), x) == std::vector<GroupElement>{1});
        CHECK_THROWS_AS(h_pi_act(z5, GammaOperator::identity(3), x), ShapeError);

        // contravariant functoriality: act(g∘f) = act(f) ∘ act(g)
        auto z3 = FiniteAbelianGroup::parse("z3");
        for (const auto& f : hom_gamma(2, 2))
            for (const auto& g : hom_gamma(2, 2))
                for (GroupElement a = 0; a < 3; ++a)
                    for (GroupElement b = 0; b < 3; ++b) {
                        std::vector<GroupElement> y{a, b};
                        auto lhs = h_pi_act(z3, compose_gamma(g, f), y);
                        auto mid = h_pi_act(z3, g, y);
                        CHECK(lhs == h_pi_act(z3, f, mid));
                    }
    }
}
