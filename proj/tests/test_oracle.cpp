#include <doctest.h>

#include "defcolor/errors.hpp"
#include "defcolor/oracle.hpp"
#include "test_util.hpp"

using namespace defcolor;

namespace {

Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, edges);
}

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("K5 with shared two-colour lists is unsatisfiable at defect one") {
    const auto r =
        list_colourable(complete(5), ListAssignment::uniform(5, {1, 2}), 1);
    CHECK(r.status == SearchStatus::Unsat);
}

TEST_CASE("K4 and K3 with shared two-colour lists are satisfiable at defect one") {
    const Graph k4 = complete(4);
    const auto l4 = ListAssignment::uniform(4, {1, 2});
    const auto r4 = list_colourable(k4, l4, 1);
    REQUIRE(r4.status == SearchStatus::Sat);
    const DefectReport rep = verify(k4, l4, r4.colouring);
    CHECK(rep.defect == 1);
    CHECK(rep.clustering == 2);

    const auto r3 =
        list_colourable(complete(3), ListAssignment::uniform(3, {1, 2}), 1);
    REQUIRE(r3.status == SearchStatus::Sat);
}

TEST_CASE("C5 with shared two-colour lists is satisfiable at defect one") {
    const Graph c5 = cycle(5);
    const auto l = ListAssignment::uniform(5, {1, 2});
    const auto r = list_colourable(c5, l, 1);
    REQUIRE(r.status == SearchStatus::Sat);
    CHECK(verify(c5, l, r.colouring).defect <= 1);
}

TEST_CASE("witnesses always pass verify at the requested defect") {
    testutil::Rng rng(31);
    for (int iter = 0; iter < 60; ++iter) {
        const int n = 1 + testutil::pick(rng, 7);
        const Graph g = testutil::random_graph(rng, n, 400);
        const int k = 1 + testutil::pick(rng, 3);
        const auto l = testutil::random_lists(rng, n, k, k + 3);
        const int d = testutil::pick(rng, 3);
        const auto r = list_colourable(g, l, d);
        if (r.status == SearchStatus::Sat)
            CHECK(verify(g, l, r.colouring).defect <= d);
        else
            // monotonicity: a larger bound can only help
            CHECK(list_colourable(g, l, d + 1).nodes > 0);
    }
}

TEST_CASE("satisfiability is monotone in the defect bound") {
    testutil::Rng rng(77);
    for (int iter = 0; iter < 40; ++iter) {
        const int n = 2 + testutil::pick(rng, 6);
        const Graph g = testutil::random_graph(rng, n, 500);
        const auto l = testutil::random_lists(rng, n, 2, 4);
        for (int d = 0; d < 3; ++d) {
            if (list_colourable(g, l, d).status == SearchStatus::Sat)
                CHECK(list_colourable(g, l, d + 1).status == SearchStatus::Sat);
        }
    }
}

TEST_CASE("work budget aborts oversized searches") {
    const Graph k9 = complete(9);
    const auto l = ListAssignment::uniform(9, {1, 2});
    const auto full = list_colourable(k9, l, 1);
    CHECK(full.status == SearchStatus::Unsat);
    REQUIRE(full.nodes >= 2);
    CHECK_THROWS_AS(list_colourable(k9, l, 1, full.nodes / 2), InstanceTooLarge);
}

TEST_CASE("empty lists are rejected") {
    const Graph k2 = complete(2);
    CHECK_THROWS_AS(
        list_colourable(k2, ListAssignment({{1}, {}}), 1), ListTooShort);
}

TEST_CASE("K2 is (1,1)-choosable") {
    const auto verdict = choosable(complete(2), 1, 1);
    CHECK(verdict.choosable);
    CHECK_FALSE(verdict.counterexample.has_value());
}

TEST_CASE("K4 is not (1,1)-choosable; equal lists witness it") {
    const auto verdict = choosable(complete(4), 1, 1);
    REQUIRE_FALSE(verdict.choosable);
    REQUIRE(verdict.counterexample.has_value());
    for (int v = 0; v < 4; ++v)
        CHECK(verdict.counterexample->list(v) == std::vector<int>{1});
}

TEST_CASE("C4 is 2-choosable (defect zero) over an eight-colour palette") {
    ChoosableOptions opt;
    opt.palette_size = 8;
    const auto verdict = choosable(cycle(4), 2, 0, opt);
    CHECK(verdict.choosable);
    CHECK(verdict.assignments_tested > 100);
}

TEST_CASE("canonical enumeration agrees with the full one") {
    const Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    ChoosableOptions full;
    full.canonicalize = false;
    full.palette_size = 3;
    ChoosableOptions canon;
    canon.palette_size = 3;
    for (int d = 0; d < 2; ++d) {
        const auto a = choosable(p3, 2, d, full);
        const auto b = choosable(p3, 2, d, canon);
        CHECK(a.choosable == b.choosable);
        CHECK(b.assignments_tested < a.assignments_tested);
    }
}

TEST_CASE("parallel enumeration returns the same verdict and witness") {
    const Graph k4 = complete(4);
    ChoosableOptions two;
    two.jobs = 2;
    const auto serial = choosable(k4, 1, 1);
    const auto parallel = choosable(k4, 1, 1, two);
    CHECK(serial.choosable == parallel.choosable);
    REQUIRE(parallel.counterexample.has_value());
    for (int v = 0; v < 4; ++v)
        CHECK(parallel.counterexample->list(v) == serial.counterexample->list(v));

    ChoosableOptions three;
    three.jobs = 3;
    CHECK(choosable(cycle(5), 2, 1, three).choosable);
}

} // TEST_SUITE
