#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "psit/enumeration.hpp"

using namespace psit;

namespace {

// Oracle: Catalan(k) = C(2k, k)/(k+1) via exact big integers.
BigCount catalan(int k) {
    BigCount binom = 1;
    for (int i = 1; i <= k; ++i) binom = binom * (k + i) / i;
    return binom / (k + 1);
}

std::set<EdgeList> edge_sets(const std::vector<Triangulation>& ts) {
    std::set<EdgeList> out;
    for (const auto& t : ts) out.insert(t.graph.edges);
    return out;
}

} // namespace

TEST_CASE("triangulation counts match the Catalan oracle on convex sets") {
    CHECK(catalan(2) == 2);  // oracle sanity
    CHECK(catalan(4) == 14);
    for (int n = 4; n <= 7; ++n) {
        auto ps = build_convex(n);
        CHECK(BigCount(enumerate_triangulations(ps).size()) == catalan(n - 2));
    }
}

TEST_CASE("triangle plus center has a single triangulation") {
    auto ps = build_triangle_plus_center();
    const auto ts = enumerate_triangulations(ps);
    REQUIRE(ts.size() == 1);
    CHECK(ts[0].graph.n_edges() == 6);
    CHECK(edge_sets(brute_force_triangulations(ps)) == edge_sets(ts));
}

TEST_CASE("flip enumeration equals the maximal-set oracle on sample sets") {
    for (const char* name : {"convex6", "random0", "random3", "triangle_center"}) {
        for (const auto& fx : fixtures::fixtures_n_le_8()) {
            if (fx.name != name) continue;
            CHECK(edge_sets(enumerate_triangulations(fx.points)) ==
                  edge_sets(brute_force_triangulations(fx.points)));
        }
    }
}

TEST_CASE("size caps refuse oversized inputs") {
    CHECK_THROWS_AS(enumerate_triangulations(build_convex(13)), TooLargeError);
    CHECK_THROWS_AS(brute_force_triangulations(build_convex(9)), TooLargeError);
    CHECK_THROWS_AS(census(build_convex(11)), TooLargeError);
}

TEST_CASE("sub-pseudo-triangulations of the fan") {
    auto ps = build_triangle_plus_center();
    const Triangulation fan = enumerate_triangulations(ps).at(0);
    CHECK(enumerate_sub_pts(fan, SubPtMode::All).size() == 4);
    CHECK(enumerate_sub_pts(fan, SubPtMode::Pointed).size() == 3);
    CHECK(enumerate_sub_pts_exact_w(fan, {}).size() == 1);
    CHECK(enumerate_sub_pts_exact_w(fan, {3}).size() == 3);
}

TEST_CASE("removed-edge count equals the pointed count for every sub-PT") {
    auto [ps, t6] = build_TN(6);
    for (const auto& sub : enumerate_sub_pts(t6, SubPtMode::All))
        CHECK(t6.graph.n_edges() - sub.graph.n_edges() ==
              static_cast<int>(sub.pointed_interior.size()));
    // A pointed one removes exactly n = 4 edges.
    const auto pointed = enumerate_sub_pts(t6, SubPtMode::Pointed);
    CHECK(!pointed.empty());
    for (const auto& sub : pointed)
        CHECK(t6.graph.n_edges() - sub.graph.n_edges() == ps->interior_size());
}

TEST_CASE("census of convex and centered sets") {
    const PTCensus c5 = census(build_convex(5));
    CHECK(c5.tri_total == 5);
    CHECK(c5.total == 5);
    CHECK(c5.pointed_total == 5);  // n = 0: every PT is a triangulation

    const PTCensus tc = census(build_triangle_plus_center());
    CHECK(tc.tri_total == 1);
    CHECK(tc.pointed_total == 3);
    CHECK(tc.total == 4);

    BigCount sum = 0;
    for (const auto& [i, cnt] : tc.by_pointed_count) sum += cnt;
    CHECK(sum == tc.total);
}

TEST_CASE("census is independent of the worker count") {
    auto ps = fixtures::random_point_set(7, 2, 1234);
    const PTCensus a = census(ps, 1);
    const PTCensus b = census(ps, 4);
    CHECK(a.total == b.total);
    CHECK(a.by_pointed_count == b.by_pointed_count);
    CHECK(a.by_exact_w == b.by_exact_w);
}

TEST_CASE("every pseudo-triangulation extends to an enumerated triangulation") {
    auto ps = fixtures::random_point_set(6, 1, 42);
    const auto tris = enumerate_triangulations(ps);
    for (const auto& pt : all_pseudo_triangulations(ps)) {
        const bool contained_somewhere =
            std::any_of(tris.begin(), tris.end(), [&](const Triangulation& t) {
                return std::includes(t.graph.edges.begin(), t.graph.edges.end(),
                                     pt.graph.edges.begin(), pt.graph.edges.end());
            });
        CHECK(contained_somewhere);
    }
}

TEST_CASE("count_pt_W boundary cases") {
    auto tc = build_triangle_plus_center();
    const PTCensus c = census(tc);
    CHECK(count_pt_W(tc, {}) == c.tri_total);
    CHECK(count_pt_W(tc, {3}) == 3);
    CHECK(count_pt_W(tc, tc->interior) == c.pointed_total);
    CHECK_THROWS_AS(count_pt_W(tc, {0}), InvalidWError);   // hull id
    CHECK_THROWS_AS(count_pt_W(tc, {9}), InvalidWError);   // unknown id
}
