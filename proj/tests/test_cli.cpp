#include <algorithm>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "theta/json_io.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = theta::cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("trees") {
        auto a = run({"trees", "--n", "2", "--edges", "2"});
        CHECK(a.code == 0);
        CHECK(a.out == "[[[]]]\n[[],[]]\n");
        CHECK(lines(run({"trees", "--n", "1", "--edges", "3"}).out) == 1);
        CHECK(lines(run({"trees", "--n", "2", "--edges", "4", "--pruned"}).out) == 2);
        CHECK(run({"trees", "--n", "2"}).code == 2);
        CHECK(run({"trees", "--n", "x", "--edges", "2"}).code == 2);
        CHECK(run({"trees", "--bogus"}).code == 2);
        CHECK(run({}).code == 2);
        CHECK(run({"--help"}).code == 0);
    }

    TEST_CASE("em cells") {
        auto a = run({"em", "cells", "--n", "2", "--group", "z2", "--max-dim", "7"});
        CHECK(a.code == 0);
        CHECK(a.out == "dimension,count\n0,1\n1,0\n2,1\n3,1\n4,2\n5,3\n6,5\n7,8\n");
        auto b = run({"em", "cells", "--n", "3", "--group", "z2", "--max-dim", "2"});
        CHECK(b.out == "dimension,count\n0,1\n1,0\n2,0\n");
        auto c = run({"em", "cells", "--n", "3", "--group", "z2", "--max-dim", "2", "--format", "json"});
        CHECK(theta::Json::parse(c.out) ==
              theta::Json::parse(R"([{"dimension":0,"count":1},{"dimension":1,"count":0},{"dimension":2,"count":0}])"));
        CHECK(run({"em", "cells", "--n", "2", "--group", "y2", "--max-dim", "3"}).code == 2);
        CHECK(run({"em", "cells", "--n", "2", "--group", "z2", "--max-dim", "3", "--format", "xml"}).code == 2);
        CHECK(run({"em", "cells", "--n", "0", "--group", "z2", "--max-dim", "3"}).code == 2);
    }

    TEST_CASE("em homology") {
        auto a = run({"em", "homology", "--n", "1", "--group", "z2", "--max-dim", "6", "--oracle"});
        CHECK(a.code == 0);
        CHECK(a.out == "degree,betti_f2\n0,1\n1,1\n2,1\n3,1\n4,1\n5,1\n");
        auto b = run({"em", "homology", "--n", "2", "--group", "z2", "--max-dim", "4", "--oracle"});
        CHECK(b.code == 0);
        CHECK(b.out == "degree,betti_f2\n0,1\n1,0\n2,1\n3,1\n");
        CHECK(run({"em", "homology", "--n", "3", "--group", "z2", "--max-dim", "3", "--oracle"}).code == 3);
        CHECK(run({"em", "homology", "--n", "3", "--group", "z2", "--max-dim", "3"}).code == 0);
        CHECK(run({"em", "homology", "--n", "1", "--group", "z2", "--max-dim", "0"}).code == 2);
    }

    TEST_CASE("count") {
        auto a = run({"count", "fib", "--n", "2", "--order", "2", "--terms", "6"});
        CHECK(a.code == 0);
        CHECK(a.out == "k,f\n0,1\n1,1\n2,2\n3,3\n4,5\n5,8\n");
        CHECK(run({"count", "euler", "--n", "1", "--order", "2"}).out == "1/2\n");
        CHECK(run({"count", "euler", "--n", "2", "--order", "3"}).out == "3\n");
        auto j = run({"count", "euler", "--n", "3", "--order", "5", "--format", "json"});
        CHECK(theta::Json::parse(j.out).at("euler") == "1/5");
        CHECK(run({"count", "euler", "--n", "2", "--order", "1"}).code == 2);
        CHECK(run({"count", "fib", "--n", "2", "--order", "0", "--terms", "3"}).code == 2);
    }

    TEST_CASE("verify") {
        auto a = run({"verify", "--suite", "counts"});
        CHECK(a.code == 0);
        CHECK(a.out.find("PASS") != std::string::npos);
        CHECK(run({"verify", "--suite", "bogus"}).code == 2);
        CHECK(run({"verify"}).code == 2);
    }

    TEST_CASE("output is deterministic") {
        std::vector<std::string> args{"em", "cells", "--n", "2", "--group", "z3", "--max-dim", "6"};
        CHECK(run(args).out == run(args).out);
        std::vector<std::string> v{"verify", "--suite", "gamma-functor", "--seed", "7"};
        CHECK(run(v).out == run(v).out);
    }

    TEST_CASE("star") {
        auto a = run({"star", "--tree", "[[],[]]", "--n", "1"});
        CHECK(a.code == 0);
        CHECK(theta::Json::parse(a.out).at("cells")[0].size() == 3);
        CHECK(run({"star", "--tree", "[[", "--n", "1"}).code == 2);
        CHECK(run({"star", "--tree", "[[[]]]", "--n", "1"}).code == 2);
    }
}
