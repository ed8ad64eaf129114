#include "doctest.h"
#include "theta/errors.hpp"
#include "theta/json_io.hpp"

using namespace theta;

TEST_SUITE("json") {
    TEST_CASE("simplicial and gamma operators") {
        SimplicialOperator f(2, {0, 1, 1, 2});
        auto j = to_json(f);
        CHECK(j == Json::parse(R"({"src":3,"tgt":2,"values":[0,1,1,2]})"));
        CHECK(simplicial_from_json(j) == f);

        GammaOperator u(3, {{1, 3}, {}});
        CHECK(to_json(u) == Json::parse(R"({"src":2,"tgt":3,"subsets":[[1,3],[]]})"));
        CHECK(gamma_from_json(to_json(u)) == u);

        CHECK_THROWS_AS(simplicial_from_json(Json::parse(R"({"src":1,"tgt":2,"values":[0,1,1]})")), ParseError);
        CHECK_THROWS_AS(simplicial_from_json(Json::parse(R"({"tgt":2})")), ParseError);
        CHECK_THROWS_AS(gamma_from_json(Json::parse(R"({"src":"x","tgt":2,"subsets":[]})")), ParseError);
    }

    TEST_CASE("theta operators round-trip") {
        for (int e = 0; e <= 3; ++e)
            for (const auto& s : enumerate_trees(2, e))
                for (const auto& t : enumerate_trees(2, 3 - e))
                    for (const auto& f : hom_theta(s, t, 2)) {
                        auto j = to_json(f);
                        CHECK(j.at("src") == render(s));
                        CHECK(theta_from_json(j) == f);
                        CHECK(theta_from_json(Json::parse(j.dump())) == f);
                    }
        CHECK_THROWS_AS(theta_from_json(Json::parse(R"({"level":1,"src":"[[]","tgt":"[]","phi":[0],"components":[]})")),
                        ParseError);
    }

    TEST_CASE("n-graphs") {
        auto j = to_json(star(LevelTree::corolla(2), 1));
        CHECK(j.at("cells").size() == 2);
        CHECK(j.at("cells")[0].size() == 3);
        CHECK(j.at("cells")[1].size() == 2);
        // source/target refer to cells by id
        for (std::size_t k = 1; k < j.at("cells").size(); ++k)
            for (const auto& id : j.at("source")[k]) {
                bool found = false;
                for (const auto& c : j.at("cells")[k - 1]) found = found || c == id;
                CHECK(found);
            }
    }
}
