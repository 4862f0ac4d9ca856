#include <doctest.h>

#include <algorithm>

#include "defcolor/discharging.hpp"
#include "defcolor/errors.hpp"
#include "defcolor/generators.hpp"
#include "test_util.hpp"

using namespace defcolor;

namespace {

// 7-bipyramid with three stacked insertions: hub 0 keeps degree 7 and ends
// up with exactly three degree-5 neighbours
RotationSystem stacked_bipyramid() {
    std::vector<std::array<int, 3>> tris;
    auto r = [](int i) { return 2 + (i % 7 + 7) % 7; };
    for (int i = 0; i < 7; ++i) tris.push_back({0, r(i), r(i + 1)});
    for (int i : {1, 2, 4, 5, 6}) tris.push_back({1, r(i + 1), r(i)});
    // vertex 9 inside the face (1, r1, r0)
    tris.push_back({9, 1, r(1)});
    tris.push_back({9, r(1), r(0)});
    tris.push_back({9, r(0), 1});
    // vertex 10 inside (1, r4, r3), then vertex 11 inside (10, 1, r4)
    tris.push_back({10, r(4), r(3)});
    tris.push_back({10, r(3), 1});
    tris.push_back({11, 10, 1});
    tris.push_back({11, 1, r(4)});
    tris.push_back({11, r(4), 10});
    return rotation_from_oriented_triangles(12, tris);
}

const PropertyCheck& property(const AuditReport& rep, const std::string& name) {
    for (const auto& p : rep.properties)
        if (p.name == name) return p;
    REQUIRE(false);
    return rep.properties.front();
}

} // namespace

TEST_SUITE("discharging") {

TEST_CASE("charge conservation on corpus embeddings") {
    testutil::Rng rng(8);
    std::vector<RotationSystem> corpus = {
        gen_k7_torus(), gen_icosahedron(), gen_toroidal_grid(4, 4),
        gen_planar_triangulation(20, 11), stacked_bipyramid()};
    for (const auto& rs : corpus) {
        for (int t : {5, 6, 7}) {
            const ChargeLedger before = initial_charges(rs.graph(), t);
            const ChargeLedger after = apply_rules(rs, t);
            CHECK(before.total() == after.total());
            CHECK(after.total() == Rational(2 * rs.graph().edge_count()));
        }
    }
}

TEST_CASE("rules do nothing without degree-t vertices") {
    const auto rs = gen_k7_torus(); // 6-regular
    const ChargeLedger after = apply_rules(rs, 5);
    for (int v = 0; v < 7; ++v) CHECK(after.charge[v] == Rational(6));
}

TEST_CASE("degree-(t+2) vertex with three tight neighbours lands on t+1") {
    const auto rs = stacked_bipyramid();
    const Graph& g = rs.graph();
    REQUIRE(g.degree(0) == 7);
    int tight = 0;
    for (int w : g.neighbours(0))
        if (g.degree(w) == 5) ++tight;
    REQUIRE(tight == 3);
    REQUIRE(euler_genus(rs) == 0);
    REQUIRE(is_triangulated(rs));

    const ChargeLedger after = apply_rules(rs, 5);
    CHECK(after.charge[0] == Rational(6)); // 7 - 3*(1/3), exactly t+1
}

TEST_CASE("apply_rules requires a triangulation") {
    const auto c4 =
        RotationSystem::from_rotations({{1, 3}, {2, 0}, {3, 1}, {0, 2}});
    CHECK_THROWS_AS(apply_rules(c4, 5), NotTriangulated);
    CHECK_THROWS_AS(audit(c4, 5), NotTriangulated);
}

TEST_CASE("per-vertex post-charge identities hold exactly for t in 5..12") {
    for (int t = 5; t <= 12; ++t) {
        const Rational base(1, t / 2 + 1);
        if (t % 2 == 1) {
            // degree-t vertex with ceil(t/2) high neighbours
            CHECK((Rational(t) + Rational((t + 1) / 2) * base == Rational(t + 1)));
        } else {
            const Rational high(2, t / 2 + 1);
            // exactly t/2 high neighbours, one of them of degree >= t+3
            CHECK((Rational(t) + Rational(t / 2 - 1) * base + high ==
                   Rational(t + 1)));
            // at least t/2 + 1 high neighbours
            CHECK((Rational(t) + Rational(t / 2 + 1) * base == Rational(t + 1)));
            // degree t+3 donor (odd degree, floor((t+3)/2) = (t+2)/2 takers)
            CHECK((Rational(t + 3) - Rational((t + 2) / 2) * high ==
                   Rational(t + 1)));
        }
        // degree-(t+2) donor with floor((t+2)/2) tight neighbours
        CHECK((Rational(t + 2) - Rational((t + 2) / 2) * base == Rational(t + 1)));
    }
}

TEST_CASE("audit of the K7 torus at t=5") {
    const AuditReport rep = audit(gen_k7_torus(), 5);
    CHECK(rep.mu == 2);
    CHECK(rep.sums_equal);
    CHECK(rep.charge_sum_minus_6n == 0);
    CHECK(rep.euler_side == 0);
    CHECK(property(rep, "min-degree >= t").holds);
    CHECK_FALSE(property(rep, "max-degree >= 2t").holds);
    CHECK_FALSE(property(rep, "vertex count >= 2t+1").holds);
    CHECK(rep.contradiction_lhs == 0);
    CHECK(rep.contradiction_rhs == 0);
    CHECK_FALSE(rep.contradiction_holds);
    CHECK_FALSE(rep.all_properties_hold);
    CHECK(rep.vertices_below_bound.empty()); // everyone keeps charge 6 = t+1
}

TEST_CASE("audit of the icosahedron at t=5") {
    const AuditReport rep = audit(gen_icosahedron(), 5);
    CHECK(rep.mu == 0);
    CHECK_FALSE(property(rep, "degree-t independence").holds);
    CHECK_FALSE(property(rep, "max-degree >= 2t").holds);
    CHECK(rep.charge_sum_minus_6n == -12);
    CHECK_FALSE(rep.all_properties_hold);
    const std::string text = audit_text(rep);
    CHECK(text.find("degree-t independence") != std::string::npos);
    CHECK(text.find("FAIL") != std::string::npos);
}

TEST_CASE("triangulated corpus satisfies the charge-sum identity exactly") {
    testutil::Rng rng(99);
    for (int iter = 0; iter < 25; ++iter) {
        const auto rs = gen_planar_triangulation(5 + testutil::pick(rng, 40), rng());
        const AuditReport rep = audit(rs, 5);
        CHECK(rep.sums_equal);
        CHECK(rep.charge_sum_minus_6n == 6LL * rep.mu - 12);
    }
    const AuditReport grid = audit(gen_toroidal_grid(5, 4), 5);
    CHECK(grid.sums_equal);
    CHECK(grid.charge_sum_minus_6n == 0);
}

TEST_CASE("an audit flags t=4 as outside the operative range") {
    const AuditReport rep = audit(gen_icosahedron(), 4);
    CHECK_FALSE(rep.t_in_range);
    CHECK(audit_text(rep).find("outside the operative range") !=
          std::string::npos);
}

TEST_CASE("tightness at t=5, genus 2") {
    constexpr long long t = 5, mu = 2;
    CHECK((2 * t + 2) * (t - 5) == 0);
    CHECK(6 * mu - 12 == 0);
}

TEST_CASE("integer square root") {
    for (unsigned long long x = 0; x < 3000; ++x) {
        const unsigned long long s = isqrt(x);
        CHECK(s * s <= x);
        CHECK((s + 1) * (s + 1) > x);
    }
    CHECK(isqrt(1ULL << 62) == (1ULL << 31));
}

TEST_CASE("bound formulas match their defining inequalities") {
    for (int mu = 0; mu <= 50; ++mu) {
        // required_list_size = 2 + ceil(sqrt(3mu+3))
        const long long s = required_list_size(mu) - 2;
        CHECK((s - 1) * (s - 1) < 3LL * mu + 3);
        CHECK(3LL * mu + 3 <= s * s);
        // heawood = floor((7+sqrt(24mu+1))/2)
        const long long h = heawood_bound(mu);
        CHECK((2 * h - 7) * (2 * h - 7) <= 24LL * mu + 1);
        CHECK((2 * h - 5) * (2 * h - 5) > 24LL * mu + 1);
        // lower bound = ceil((7+sqrt(24mu+1))/4)
        const long long c = lower_bound_choice1(mu);
        CHECK((4 * c - 7) * (4 * c - 7) >= 24LL * mu + 1);
        CHECK((4 * c - 11 < 0 || (4 * c - 11) * (4 * c - 11) < 24LL * mu + 1));
    }
    CHECK(required_list_size(0) == 4);
    CHECK(required_list_size(2) == 5);
    CHECK(required_list_size(11) == 8);
    CHECK(heawood_bound(0) == 4);
    CHECK(heawood_bound(2) == 7);
    CHECK(lower_bound_choice1(2) == 4);
    CHECK_THROWS_AS(required_list_size(-1), InvalidGraph);
}

} // TEST_SUITE
