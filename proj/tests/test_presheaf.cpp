#include "doctest.h"
#include "theta/errors.hpp"
#include "theta/presheaf.hpp"

using namespace theta;

namespace {

SimplicialOperator op(int target, std::vector<int> v) { return SimplicialOperator(target, std::move(v)); }

// Forwards only the required interface, so the generic algorithms run.
template <class X>
struct Plain {
    using Element = typename X::Element;
    X inner;
    int level() const { return inner.level(); }
    std::vector<Element> elements(const LevelTree& t) const { return inner.elements(t); }
    Element act(const ThetaOperator& f, const Element& x) const { return inner.act(f, x); }
    std::string describe(const Element& x) const { return inner.describe(x); }
};

std::vector<LevelTree> trees_upto(int n, int max_edges) {
    std::vector<LevelTree> out;
    for (int e = 0; e <= max_edges; ++e)
        for (auto& t : enumerate_trees(n, e)) out.push_back(std::move(t));
    return out;
}

}  // namespace

TEST_SUITE("presheaf") {
    TEST_CASE("elements and action of K(pi,n)") {
        auto z2 = FiniteAbelianGroup::parse("z2");
        auto k1 = em_set(z2, 1);
        CHECK(k1.elements(LevelTree::corolla(3)).size() == 8);
        auto k3 = em_set(z2, 3);
        for (const auto& t : trees_upto(2, 4)) CHECK(k3.elements(t).size() == 1);

        auto z5 = FiniteAbelianGroup::parse("z5");
        auto k = em_set(z5, 1);
        CHECK(k.act(from_delta(op(2, {0, 1, 1, 2})), Labels{3, 4}) == Labels{3, 0, 4});
        CHECK(k.act(from_delta(op(2, {0, 2})), Labels{3, 4}) == Labels{2});
        CHECK_THROWS_AS(em_set(z2, 0), ArgumentError);
    }

    TEST_CASE("action is functorial") {
        auto z3 = FiniteAbelianGroup::parse("z3");
        auto k = em_set(z3, 2);
        auto ts = trees_upto(2, 3);
        for (const auto& a : ts)
            for (const auto& b : ts)
                for (const auto& f : hom_theta(a, b, 2))
                    for (const auto& g : hom_theta(b, LevelTree::corolla(2), 2))
                        for (const auto& x : k.elements(g.target()))
                            CHECK(k.act(compose_theta(g, f), x) == k.act(f, k.act(g, x)));
    }

    TEST_CASE("reduce examples") {
        auto z2 = FiniteAbelianGroup::parse("z2");
        auto k1 = em_set(z2, 1);
        auto r = k1.reduce(LevelTree::corolla(2), Labels{1, 1});
        CHECK(r.tree == LevelTree::corolla(2));
        CHECK(is_identity(r.degeneracy));

        auto d = k1.reduce(LevelTree::corolla(3), Labels{1, 0, 1});
        CHECK(d.tree == LevelTree::corolla(2));
        CHECK(d.element == Labels{1, 1});
        CHECK(d.degeneracy == from_delta(op(2, {0, 1, 1, 2})));

        auto k2 = em_set(z2, 2);
        auto base = k2.reduce(parse_tree("[[[],[]],[[]]]"), Labels{0, 0, 0});
        CHECK(base.tree == LevelTree());
        CHECK(base.element.empty());
    }

    TEST_CASE("fast reduction agrees with the generic one") {
        for (const char* g : {"z2", "z3"})
            for (int n = 1; n <= 3; ++n) {
                auto k = em_set(FiniteAbelianGroup::parse(g), n);
                Plain<EmSet> plain{k};
                for (const auto& t : trees_upto(n, 4))
                    for (const auto& x : k.elements(t)) {
                        auto fast = k.reduce(t, x);
                        auto slow = reduce_generic(plain, t, x);
                        CHECK(fast.tree == slow.tree);
                        CHECK(fast.element == slow.element);
                        CHECK(fast.degeneracy == slow.degeneracy);
                        CHECK(k.act(fast.degeneracy, fast.element) == x);
                        CHECK(is_nondegenerate_generic(plain, fast.tree, fast.element));
                    }
            }
    }

    TEST_CASE("fast cell lists agree with filtering every element") {
        for (const char* g : {"z2", "z3", "z2xz2"})
            for (int n = 1; n <= 3; ++n) {
                auto k = em_set(FiniteAbelianGroup::parse(g), n);
                Plain<EmSet> plain{k};
                for (int d = 0; d <= 4; ++d) CHECK(k.nondegenerate_cells(d) == nondegenerate_cells(plain, d));
            }
    }

    TEST_CASE("cell census") {
        auto z2 = FiniteAbelianGroup::parse("z2");
        auto z3 = FiniteAbelianGroup::parse("z3");
        CHECK(cell_census(em_set(z2, 2), 7) == std::vector<long long>{1, 0, 1, 1, 2, 3, 5, 8});
        CHECK(cell_census(em_set(z3, 1), 3) == std::vector<long long>{1, 2, 4, 8});
        CHECK(cell_census(em_set(z2, 3), 3) == std::vector<long long>{1, 0, 0, 1});
        CHECK_THROWS_AS(cell_census(em_set(z2, 2), -1), ArgumentError);
    }

    TEST_CASE("representables") {
        for (const auto& t : trees_upto(2, 3)) {
            Representable rep(t, 2);
            Plain<Representable> plain{rep};
            for (const auto& s : trees_upto(2, 3))
                for (const auto& x : rep.elements(s)) {
                    auto fast = rep.reduce(s, x);
                    auto slow = reduce_generic(plain, s, x);
                    CHECK(fast.tree == slow.tree);
                    CHECK(fast.element == slow.element);
                    CHECK(is_mono(x) == is_identity(fast.degeneracy));
                    CHECK(is_mono(fast.element));
                }
            // The non-degenerate cells are the monos; the top one is the identity.
            auto top = nondegenerate_cells(rep, t.edges());
            REQUIRE(top.size() == 1);
            CHECK(is_identity(top.front().element));
            CHECK(nondegenerate_cells(rep, t.edges() + 1).empty());
        }
    }

    TEST_CASE("products of representables") {
        CHECK(product_census(LevelTree::corolla(1), LevelTree::corolla(1), 1, 2) == std::vector<long long>{4, 5, 2});
        CHECK(product_census(LevelTree::corolla(2), LevelTree::corolla(1), 1, 3).back() == 3);
        for (const auto& s : trees_upto(2, 3)) {
            auto alone = cell_census(Representable(s, 2), s.edges() + 1);
            CHECK(product_census(s, LevelTree(), 2, s.edges() + 1) == alone);
        }
        RepresentableProduct prod(LevelTree::corolla(1), LevelTree::linear(2), 2);
        Plain<RepresentableProduct> plain{prod};
        for (const auto& u : trees_upto(2, 3))
            for (const auto& x : prod.elements(u)) {
                auto fast = prod.reduce(u, x);
                auto slow = reduce_generic(plain, u, x);
                CHECK(fast.tree == slow.tree);
                CHECK(fast.element == slow.element);
            }
    }
}
