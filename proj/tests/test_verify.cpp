#include <doctest.h>

#include "orient/constructions.hpp"
#include "orient/verify.hpp"

using namespace orient;

TEST_CASE("graph classes match the known counts")
{
    const std::vector<std::size_t> counts{1, 1, 2, 4, 11, 34, 156, 1044};
    for (std::size_t n = 0; n < counts.size(); ++n)
        CHECK(graph_classes(n).size() == counts[n]);
}

TEST_CASE("cyclic search on small tournaments")
{
    CHECK(is_cyclic_by_search(cyclic_tournament(1)));
    CHECK(is_cyclic_by_search(cyclic_tournament(3)));
}

TEST_CASE("unknown suites are rejected")
{
    CHECK_THROWS_AS(run_suite("nope", {}), PreconditionError);
    CHECK(suite_names().size() == 10);
}

TEST_CASE("every suite passes a quick run")
{
    for (const auto& name : suite_names()) {
        SuiteConfig c;
        c.seed = 3;
        c.samples = 20;
        c.max_n = 7;
        c.exhaustive_n = 6;
        c.threads = 2;
        auto r = run_suite(name, c);
        INFO(name);
        CHECK(r.passed());
        CHECK(r.instances_run > 0);
    }
}

TEST_CASE("report JSON fields and thread independence")
{
    SuiteConfig c;
    c.samples = 30;
    c.threads = 1;
    auto one = run_suite("chvatal", c);
    c.threads = 3;
    auto three = run_suite("chvatal", c);
    CHECK(one.instances_run == three.instances_run);
    CHECK(one.failures == three.failures);
    CHECK(one.notes == three.notes);
    Json j = to_json(one);
    for (const char* key : {"suite", "instances_run", "passed", "budget_exceeded", "failures", "notes",
                            "runtime_seconds"})
        CHECK(j.contains(key));
    CHECK(j["suite"] == "chvatal");
}
