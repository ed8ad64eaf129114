#include "doctest.h"
#include "theta/chain_complex.hpp"
#include "theta/errors.hpp"
#include "theta/oracle.hpp"

using namespace theta;

namespace {

boost::dynamic_bitset<> bits(const std::string& s) {
    // leftmost character is row 0
    return boost::dynamic_bitset<>(std::string(s.rbegin(), s.rend()));
}

bool all_zero(const F2ChainComplex& c, int d) {
    for (const auto& col : c.boundary[static_cast<std::size_t>(d)])
        if (col.any()) return false;
    return true;
}

}  // namespace

TEST_SUITE("chain") {
    TEST_CASE("f2 rank") {
        CHECK(f2_rank({}) == 0);
        CHECK(f2_rank({bits("110"), bits("011"), bits("101")}) == 2);
        CHECK(f2_rank({bits("100"), bits("010"), bits("001")}) == 3);
        CHECK(f2_rank({bits("000"), bits("000")}) == 0);
    }

    TEST_CASE("d squared check reports the cell") {
        F2ChainComplex c;
        c.max_dim = 2;
        c.basis = {{"p", "q"}, {"e"}, {"sigma"}};
        c.boundary = {{bits(""), bits("")}, {bits("11")}, {bits("1")}};
        try {
            check_boundary_squared(c);
            FAIL("no violation raised");
        } catch (const InvariantViolation& e) {
            CHECK(std::string(e.what()).find("sigma") != std::string::npos);
        }
        c.boundary[2][0] = bits("0");
        CHECK_NOTHROW(check_boundary_squared(c));
    }

    TEST_CASE("boundaries of K(Z/2,1) vanish") {
        auto c = chain_complex(em_set(FiniteAbelianGroup::parse("z2"), 1), 6);
        for (int d = 0; d <= 6; ++d) {
            CHECK(c.rank(d) == 1);
            CHECK(all_zero(c, d));
        }
    }

    TEST_CASE("1-cells of K(Z/3,1) are cycles") {
        auto c = chain_complex(em_set(FiniteAbelianGroup::parse("z3"), 1), 2);
        CHECK(c.rank(1) == 2);
        CHECK(all_zero(c, 1));
        CHECK(all_zero(c, 0));
        CHECK_FALSE(all_zero(c, 2));
    }

    TEST_CASE("homology of K(pi,n)") {
        auto z2 = FiniteAbelianGroup::parse("z2");
        auto z3 = FiniteAbelianGroup::parse("z3");
        CHECK(betti_numbers(chain_complex(em_set(z2, 1), 7)) == std::vector<int>{1, 1, 1, 1, 1, 1, 1});
        auto k22 = chain_complex(em_set(z2, 2), 4);
        CHECK(homology_f2(k22, 1) == 0);
        CHECK(homology_f2(k22, 2) == 1);
        auto k32 = chain_complex(em_set(z3, 2), 4);
        CHECK(homology_f2(k32, 2) == 0);
        CHECK_THROWS_AS(homology_f2(k32, 4), ArgumentError);
        CHECK_THROWS_AS(homology_f2(k32, -1), ArgumentError);
    }

    TEST_CASE("oracle values") {
        auto z2 = FiniteAbelianGroup::parse("z2");
        CHECK(oracle_multisimplicial(z2, 1, 7) == std::vector<int>{1, 1, 1, 1, 1, 1, 1});
        auto two = oracle_multisimplicial(z2, 2, 6);
        CHECK(two[0] == 1);
        CHECK(two[1] == 0);
        CHECK(two[2] == 1);
        CHECK(oracle_multisimplicial(FiniteAbelianGroup::parse("z5"), 1, 4)[0] == 1);
        CHECK_THROWS_AS(oracle_multisimplicial(z2, 3, 4), UnsupportedError);
        CHECK(oracle_diagonal(z2, 4) == oracle_multisimplicial(z2, 2, 4));
    }

    TEST_CASE("Theta chains agree with the oracle") {
        struct Case {
            const char* group;
            int n;
            int max_dim;
        };
        for (auto [g, n, d] : {Case{"z2", 1, 6}, Case{"z3", 1, 6}, Case{"z4", 1, 5}, Case{"z2", 2, 6}, Case{"z3", 2, 5},
                               Case{"z2xz2", 2, 4}}) {
            auto pi = FiniteAbelianGroup::parse(g);
            CAPTURE(g);
            CAPTURE(n);
            CHECK(betti_numbers(chain_complex(em_set(pi, n), d)) == oracle_multisimplicial(pi, n, d));
        }
    }

    TEST_CASE("representables are acyclic") {
        for (const char* t : {"[[],[]]", "[[[]],[]]", "[[[],[]]]", "[[[]]]"}) {
            auto tree = parse_tree(t);
            auto b = betti_numbers(chain_complex(Representable(tree, 2), tree.edges() + 1));
            CAPTURE(t);
            CHECK(b.front() == 1);
            for (std::size_t i = 1; i < b.size(); ++i) CHECK(b[i] == 0);
        }
    }

    TEST_CASE("Euler characteristic of the truncation") {
        // telescoping leaves only the rank of the top boundary
        auto c = chain_complex(em_set(FiniteAbelianGroup::parse("z3"), 2), 6);
        long long cells = 0, betti = 0;
        for (int d = 0; d < c.max_dim; ++d) cells += (d % 2 ? -1 : 1) * static_cast<long long>(c.rank(d));
        auto b = betti_numbers(c);
        for (std::size_t d = 0; d < b.size(); ++d) betti += (d % 2 ? -1 : 1) * b[d];
        const auto top = static_cast<long long>(f2_rank(c.boundary[static_cast<std::size_t>(c.max_dim)]));
        const long long sign = c.max_dim % 2 ? 1 : -1;  // (-1)^(max_dim-1)
        CHECK(cells == betti + sign * top);
    }
}
