#include <doctest.h>

#include "defcolor/colouring.hpp"
#include "defcolor/errors.hpp"
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

TEST_SUITE("colouring") {

TEST_CASE("verify on a monochromatic triangle") {
    const Graph k3 = complete(3);
    const auto l = ListAssignment::uniform(3, {1, 2});
    const Colouring c({1, 1, 1});
    const DefectReport rep = verify(k3, l, c);
    CHECK(rep.defect == 2);
    CHECK(rep.clustering == 3);
    REQUIRE(rep.worst_vertex.has_value());
    CHECK(*rep.worst_vertex == 0);
    CHECK(rep.worst_component == std::vector<int>{0, 1, 2});
}

TEST_CASE("verify pairs in K7: every doubled colour is an edge") {
    const Graph k7 = complete(7);
    const auto l = ListAssignment::uniform(7, {1, 2, 3, 4, 5});
    const Colouring c({1, 1, 2, 2, 3, 3, 4});
    const DefectReport rep = verify(k7, l, c);
    CHECK(rep.defect == 1);
    CHECK(rep.clustering == 2);
}

TEST_CASE("proper colourings report zero defect") {
    const Graph c5 = cycle(5);
    const auto l = ListAssignment::uniform(5, {1, 2, 3});
    const Colouring c({1, 2, 1, 2, 3});
    const DefectReport rep = verify(c5, l, c);
    CHECK(rep.defect == 0);
    CHECK(rep.clustering == 1);
    CHECK_FALSE(rep.worst_vertex.has_value());
    CHECK(rep.worst_component.empty());
}

TEST_CASE("verify rejects bad inputs") {
    const Graph k3 = complete(3);
    const auto l = ListAssignment::uniform(3, {1, 2});
    CHECK_THROWS_AS(verify(k3, l, Colouring({1, 1, 7})), NotFromList);
    Colouring partial(3);
    partial.set(0, 1);
    CHECK_THROWS_AS(verify(k3, l, partial), PartialColouring);
    CHECK_NOTHROW(verify_partial(k3, partial));
}

TEST_CASE("verify_partial counts only coloured vertices") {
    const Graph k3 = complete(3);
    Colouring c(3);
    c.set(0, 1);
    c.set(1, 1);
    const DefectReport rep = verify_partial(k3, c);
    CHECK(rep.defect == 1);
    CHECK(rep.clustering == 2);
}

TEST_CASE("greedy proper colouring") {
    const Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    const auto l2 = ListAssignment::uniform(3, {1, 2});
    const Colouring c = greedy_proper(p3, l2, {0, 1, 2});
    CHECK(c.colours() == std::vector<int>{1, 2, 1});

    const Graph k4 = complete(4);
    const auto l4 = ListAssignment::uniform(4, {1, 2, 3, 4});
    CHECK(verify(k4, l4, greedy_proper(k4, l4, {0, 1, 2, 3})).defect == 0);

    const Graph c5 = cycle(5);
    const auto l3 = ListAssignment::uniform(5, {1, 2, 3});
    CHECK(verify(c5, l3, greedy_proper(c5, l3, {0, 1, 2, 3, 4})).defect == 0);

    const auto l1 = ListAssignment::uniform(3, {1});
    CHECK_THROWS_AS(greedy_proper(complete(3), l1, {0, 1, 2}), ListExhausted);
    CHECK_THROWS_AS(greedy_proper(p3, l2, {0, 1}), InvalidGraph);
}

TEST_CASE("independence queries") {
    const Graph k4 = complete(4);
    CHECK_FALSE(is_independent(k4, {1, 3}));
    const Graph c5 = cycle(5);
    CHECK(is_independent(c5, {0, 2}));
    CHECK_FALSE(is_independent(c5, {0, 2, 4})); // edge 4-0 closes the cycle
    CHECK(is_independent(c5, {}));
    CHECK_THROWS_AS(is_independent(c5, {0, 17}), UnknownVertex);
}

TEST_CASE("defect/clustering equivalences over random colourings") {
    testutil::Rng rng(424242);
    int low_defect_seen = 0;
    for (int iter = 0; iter < 400; ++iter) {
        const int n = 1 + testutil::pick(rng, 10);
        const Graph g = testutil::random_graph(rng, n, 250);
        const int colours = 1 + testutil::pick(rng, 4);
        std::vector<int> palette(colours);
        for (int i = 0; i < colours; ++i) palette[i] = i + 1;
        const auto l = ListAssignment::uniform(n, palette);
        const Colouring c = testutil::random_colouring(rng, l);
        const DefectReport rep = verify(g, l, c);
        CHECK((rep.defect <= 1) == (rep.clustering <= 2));
        CHECK((rep.defect == 0) == (rep.clustering == 1));
        if (rep.defect <= 1) ++low_defect_seen;
    }
    CHECK(low_defect_seen > 20); // both sides of the equivalence exercised
}

} // TEST_SUITE
