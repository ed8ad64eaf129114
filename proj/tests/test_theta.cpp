#include <set>

#include "doctest.h"
#include "theta/errors.hpp"
#include "theta/theta_operator.hpp"

using namespace theta;

namespace {

SimplicialOperator op(int target, std::vector<int> v) { return SimplicialOperator(target, std::move(v)); }

std::vector<LevelTree> trees_upto(int n, int max_edges) {
    std::vector<LevelTree> out;
    for (int e = 0; e <= max_edges; ++e)
        for (auto& t : enumerate_trees(n, e)) out.push_back(std::move(t));
    return out;
}

// Count by summing over phi and multiplying the component hom sizes.
long long count_by_blocks(const LevelTree& s, const LevelTree& t, int n) {
    if (n == 0) return 1;
    long long total = 0;
    for (const auto& phi : hom_delta(s.valence(), t.valence())) {
        long long prod = 1;
        for (int i = 1; i <= s.valence() && prod; ++i)
            for (int k = phi(i - 1) + 1; k <= phi(i); ++k) prod *= count_by_blocks(s.child(i - 1), t.child(k - 1), n - 1);
        total += prod;
    }
    return total;
}

}  // namespace

TEST_SUITE("theta") {
    TEST_CASE("identities and composition") {
        auto t = parse_tree("[[],[]]");
        auto id = identity_theta(t, 2);
        CHECK(is_identity(id));
        CHECK(compose_theta(id, id) == id);

        // The empty tree is terminal.
        auto s = parse_tree("[[[]],[]]");
        auto homs = hom_theta(s, LevelTree(), 2);
        REQUIRE(homs.size() == 1);
        for (const auto& f : hom_theta(s, t, 2)) CHECK(compose_theta(hom_theta(t, LevelTree(), 2).front(), f) == homs.front());

        CHECK_THROWS_AS(compose_theta(id, identity_theta(s, 2)), CompositionError);
        CHECK_THROWS_AS(compose_theta(identity_theta(t, 3), id), CompositionError);
    }

    TEST_CASE("identity_theta shapes") {
        CHECK(identity_theta(LevelTree(), 1).phi() == SimplicialOperator::identity(0));
        CHECK(identity_theta(LevelTree::corolla(2), 1).phi() == SimplicialOperator::identity(2));
        auto lin = identity_theta(LevelTree::linear(2), 2);
        CHECK(lin.phi() == SimplicialOperator::identity(1));
        CHECK(lin.component(1, 1) == identity_theta(LevelTree::linear(1), 1));
    }

    TEST_CASE("constructor rejects inconsistent shapes") {
        auto leaf = identity_theta(LevelTree(), 1);
        CHECK_THROWS_AS(ThetaOperator(2, LevelTree::corolla(1), LevelTree::corolla(1), SimplicialOperator::identity(1), {}),
                        ShapeError);
        CHECK_THROWS_AS(ThetaOperator(2, LevelTree::corolla(1), LevelTree::corolla(2), SimplicialOperator::identity(1),
                                      {{leaf}}),
                        ShapeError);
        CHECK_NOTHROW(ThetaOperator(2, LevelTree::corolla(1), LevelTree::corolla(2), op(2, {0, 2}), {{leaf, leaf}}));
    }

    TEST_CASE("hom sets") {
        CHECK(hom_theta(LevelTree::corolla(1), LevelTree::corolla(1), 1).size() == 3);
        for (const auto& s : trees_upto(2, 4)) CHECK(hom_theta(s, LevelTree(), 2).size() == 1);
        auto two = LevelTree::linear(2);
        CHECK(static_cast<long long>(hom_theta(two, two, 2).size()) == count_by_blocks(two, two, 2));
        for (const auto& s : trees_upto(2, 3))
            for (const auto& t : trees_upto(2, 3)) {
                auto hs = hom_theta(s, t, 2);
                CHECK(static_cast<long long>(hs.size()) == count_by_blocks(s, t, 2));
                CHECK(hom_theta_count(s, t, 2) == static_cast<long long>(hs.size()));
                CHECK(std::set<ThetaOperator>(hs.begin(), hs.end()).size() == hs.size());
            }
    }

    TEST_CASE("retractions") {
        auto leaf = identity_theta(LevelTree(), 1);
        ThetaOperator r(2, LevelTree::corolla(2), LevelTree::corolla(1), op(1, {0, 0, 1}), {{}, {leaf}});
        CHECK(is_retraction(r));
        CHECK(is_retraction(identity_theta(parse_tree("[[[]],[]]"), 2)));
        for (const auto& s : trees_upto(2, 3))
            for (const auto& t : trees_upto(2, 3))
                for (const auto& f : hom_theta(s, t, 2))
                    if (!f.phi().is_surjective()) CHECK_FALSE(is_retraction(f));

        // retractions_from lists exactly the retractions in the hom sets
        for (const auto& s : trees_upto(2, 3)) {
            std::set<ThetaOperator> direct;
            for (auto& f : retractions_from(s, 2)) direct.insert(std::move(f));
            std::set<ThetaOperator> filtered;
            for (const auto& t : trees_upto(2, 3))
                for (auto& f : hom_theta(s, t, 2))
                    if (is_retraction(f)) filtered.insert(std::move(f));
            CHECK(direct == filtered);
            for (const auto& f : direct) CHECK(is_identity(compose_theta(f, section_of(f))));
        }
        CHECK_THROWS_AS(section_of(hom_theta(LevelTree(), LevelTree::corolla(1), 1).front()), ArgumentError);
    }

    TEST_CASE("Reedy factorisation examples") {
        auto leaf = identity_theta(LevelTree(), 1);
        ThetaOperator r(2, LevelTree::corolla(2), LevelTree::corolla(1), op(1, {0, 0, 1}), {{}, {leaf}});
        CHECK(reedy_factor(r).degeneracy == r);
        CHECK(is_identity(reedy_factor(r).face));

        auto face = ThetaOperator(2, LevelTree::corolla(1), LevelTree::corolla(2), op(2, {0, 2}), {{leaf, leaf}});
        CHECK(is_identity(reedy_factor(face).degeneracy));
        CHECK(reedy_factor(face).face == face);

        auto d = from_delta(op(2, {0, 1, 1, 2}));
        CHECK(d.source() == LevelTree::corolla(3));
        CHECK(reedy_factor(d).degeneracy == d);
        CHECK(is_identity(reedy_factor(d).face));
    }

    TEST_CASE("Reedy factorisation is a factorisation everywhere on the sample") {
        for (const auto& s : trees_upto(2, 3))
            for (const auto& t : trees_upto(2, 3))
                for (const auto& f : hom_theta(s, t, 2)) {
                    auto p = reedy_factor(f);
                    CHECK(is_retraction(p.degeneracy));
                    CHECK(is_mono(p.face));
                    CHECK(compose_theta(p.face, p.degeneracy) == f);
                }
    }

    TEST_CASE("classification") {
        CHECK(classify_theta(identity_theta(LevelTree::corolla(2), 2)) == ThetaKind::identity);
        CHECK(classify_theta(from_delta(op(2, {1, 2}))) == ThetaKind::outer_face);
        CHECK(classify_theta(from_delta(op(2, {0, 2}))) == ThetaKind::inner_face);
        CHECK(classify_theta(from_delta(op(1, {0, 0, 1}))) == ThetaKind::degeneracy);
        CHECK(classify_theta(from_delta(op(2, {0, 0, 2}))) == ThetaKind::mixed);
        CHECK(to_string(ThetaKind::inner_face) == "inner-face");

        // outer root map, identity component
        ThetaOperator outer(2, LevelTree::linear(2), parse_tree("[[],[[]]]"), op(2, {1, 2}),
                            {{identity_theta(LevelTree::corolla(1), 1)}});
        CHECK(classify_theta(outer) == ThetaKind::outer_face);
        // endpoint-preserving root map, identity components
        ThetaOperator inner(2, LevelTree::linear(2), parse_tree("[[[]],[[]]]"), op(2, {0, 2}),
                            {{identity_theta(LevelTree::corolla(1), 1), identity_theta(LevelTree::corolla(1), 1)}});
        CHECK(classify_theta(inner) == ThetaKind::inner_face);
    }

    TEST_CASE("faces factor as inner after outer") {
        for (const auto& s : trees_upto(2, 3))
            for (const auto& t : trees_upto(2, 3))
                for (const auto& f : hom_theta(s, t, 2)) {
                    auto p = factor_cover_outer(f);
                    CHECK(compose_theta(p.outer, p.cover) == f);
                    CHECK(is_cover(p.cover));
                    CHECK(is_outer_face(p.outer));
                    if (is_mono(f)) CHECK(is_inner_face(p.cover));
                }
    }

    TEST_CASE("dimension is the edge count") {
        CHECK(dim_theta(LevelTree::linear(4)) == 4);
        CHECK(dim_theta(LevelTree()) == 0);
        CHECK(dim_theta(LevelTree::corolla(3)) == 3);
        for (const auto& t : trees_upto(4, 7)) CHECK(dim_theta(t) == t.edges());
    }

    TEST_CASE("assembly functor") {
        auto t = parse_tree("[[[],[]],[[]]]");
        CHECK(gamma_n(identity_theta(t, 2)) == GammaOperator::identity(3));
        for (const auto& f : hom_theta(parse_tree("[[[]]]"), LevelTree::corolla(2), 2))
            CHECK(gamma_n(f).target() == 0);
        CHECK(gamma_n(from_delta(op(2, {0, 1, 1, 2}))) == GammaOperator(2, {{1}, {}, {2}}));
        for (const auto& s : trees_upto(2, 3))
            for (const auto& m : trees_upto(2, 3))
                for (const auto& f : hom_theta(s, m, 2))
                    for (const auto& g : hom_theta(m, LevelTree::linear(2), 2))
                        CHECK(gamma_n(compose_theta(g, f)) == compose_gamma(gamma_n(g), gamma_n(f)));
    }

    TEST_CASE("suspension") {
        auto s0 = suspend(identity_theta(LevelTree(), 1));
        CHECK(s0 == identity_theta(LevelTree::linear(1), 2));
        auto d = from_delta(op(2, {0, 1, 1, 2}));
        auto sd = suspend(d);
        CHECK(sd.source() == parse_tree("[[[],[],[]]]"));
        CHECK(sd.target() == parse_tree("[[[],[]]]"));
        CHECK(sd.phi() == SimplicialOperator::identity(1));
        CHECK(sd.component(1, 1) == d);
        CHECK(suspend(suspend(identity_theta(LevelTree(), 1))) == identity_theta(LevelTree::linear(2), 3));
        for (const auto& s : trees_upto(2, 3))
            for (const auto& t : trees_upto(2, 3))
                for (const auto& f : hom_theta(s, t, 2)) CHECK(gamma_n(suspend(f)) == gamma_n(f));
    }

    TEST_CASE("embedding one level up") {
        auto id = identity_theta(LevelTree::corolla(2), 1);
        CHECK(is_identity(embed(id)));
        for (const auto& s : trees_upto(2, 4))
            for (const auto& t : trees_upto(2, 4)) {
                CHECK(hom_theta_count(s, t, 2) == hom_theta_count(s, t, 3));
                if (s.edges() + t.edges() > 5) continue;
                for (const auto& f : hom_theta(s, t, 2)) {
                    auto e = embed(f);
                    CHECK(e.level() == 3);
                    CHECK(classify_theta(e) == classify_theta(f));
                }
            }
    }

    TEST_CASE("diagonal") {
        std::vector<SimplicialOperator> ids{SimplicialOperator::identity(2), SimplicialOperator::identity(1)};
        CHECK(diagonal(ids) == identity_theta(homogeneous_tree({2, 1}), 2));
        auto f = op(3, {0, 2, 3});
        CHECK(diagonal(std::vector<SimplicialOperator>{f}) == from_delta(f));

        auto a = op(1, {1, 1});
        auto b = op(1, {0, 1});
        auto ab = diagonal(std::vector<SimplicialOperator>{a, b});
        CHECK(ab.source() == LevelTree::linear(2));
        CHECK(ab.target() == LevelTree::linear(2));
        CHECK(ab.phi() == a);
        for (const auto& row : ab.components())
            for (const auto& c : row) CHECK(c == from_delta(b));

        for (int p = 0; p <= 2; ++p)
            for (int q = 0; q <= 2; ++q)
                for (const auto& f1 : hom_delta(p, 1))
                    for (const auto& f2 : hom_delta(q, 2))
                        for (const auto& g1 : hom_delta(1, 2))
                            for (const auto& g2 : hom_delta(2, 1)) {
                                std::vector<SimplicialOperator> fs{f1, f2}, gs{g1, g2};
                                std::vector<SimplicialOperator> gf{compose_delta(g1, f1), compose_delta(g2, f2)};
                                CHECK(diagonal(gf) == compose_theta(diagonal(gs), diagonal(fs)));
                            }
    }

    TEST_CASE("codimension-one monos") {
        for (const auto& t : trees_upto(2, 4)) {
            std::size_t brute = 0;
            for (const auto& s : trees_upto(2, 3))
                if (s.edges() + 1 == t.edges())
                    for (const auto& f : hom_theta(s, t, 2)) brute += is_mono(f);
            CHECK(codim_one_monos(t, 2).size() == brute);
        }
    }
}
