#include "doctest.h"
#include "theta/verify.hpp"

using namespace theta;

namespace {

void require_clean(const SuiteReport& r) {
    INFO(r.name, ": ", r.failures.empty() ? std::string() : r.failures.front());
    CHECK(r.checks > 0);
    CHECK(r.failed == 0);
}

}  // namespace

TEST_SUITE("verify") {
    TEST_CASE("composition against the vertex-pair oracle") {
        OperatorSample sample(2, 3);
        SuiteReport r;
        r.name = "oracle";
        check_composition_oracle(sample, r);
        check_hom_counts(sample, r);
        require_clean(r);
    }

    TEST_CASE("random composites of larger trees") {
        SuiteReport r;
        r.name = "random";
        check_random_composition(3, 6, 300, 11, r);
        require_clean(r);
    }

    TEST_CASE("reductions are unique") {
        SuiteReport r;
        r.name = "reduce";
        check_reduce_uniqueness(r);
        require_clean(r);
    }

    TEST_CASE("embedding, closure and diagonal") {
        SuiteReport r;
        r.name = "misc";
        check_embedding(2, 4, r);
        check_diagonal(r);
        OperatorSample sample(2, 3);
        check_closure(sample, r);
        require_clean(r);
    }

    TEST_CASE("a seeded suite reports the same numbers twice") {
        auto a = verify_gamma_functor(5);
        auto b = verify_gamma_functor(5);
        CHECK(a.checks == b.checks);
        require_clean(a);
    }

    TEST_CASE("suite registry") {
        CHECK(suite_names().size() == 6);
        CHECK_FALSE(run_suite("nope", 0).has_value());
        auto counts = run_suite("counts", 0);
        REQUIRE(counts.has_value());
        REQUIRE(counts->size() == 1);
        require_clean(counts->front());
    }
}
