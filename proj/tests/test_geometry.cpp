#include <doctest.h>

#include <random>

#include "psit/geometry.hpp"

using namespace psit;

namespace {

Point pt(std::int64_t x, std::int64_t y, int id = -1) { return Point{id, x, y}; }

// Independent oracle: long double cross product. With coordinates below
// 2^20 the products stay below 2^40, so the oracle is exact.
int orient_float_oracle(const Point& a, const Point& b, const Point& c) {
    const long double v = static_cast<long double>(b.x - a.x) * (c.y - a.y) -
                          static_cast<long double>(b.y - a.y) * (c.x - a.x);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

} // namespace

TEST_CASE("orient on the unit triangle and its degenerations") {
    CHECK(orient(pt(0, 0), pt(1, 0), pt(0, 1)) == 1);
    CHECK(orient(pt(0, 0), pt(1, 0), pt(2, 0)) == 0);
    CHECK(orient(pt(0, 0), pt(0, 1), pt(1, 0)) == -1);
}

TEST_CASE("orient is antisymmetric and cyclic") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const Point a = pt(static_cast<std::int64_t>(rng() % 1000), static_cast<std::int64_t>(rng() % 1000));
        const Point b = pt(static_cast<std::int64_t>(rng() % 1000), static_cast<std::int64_t>(rng() % 1000));
        const Point c = pt(static_cast<std::int64_t>(rng() % 1000), static_cast<std::int64_t>(rng() % 1000));
        const int o = orient(a, b, c);
        CHECK(orient(b, a, c) == -o);
        CHECK(orient(a, c, b) == -o);
        CHECK(orient(b, c, a) == o);
    }
}

TEST_CASE("orient agrees with the float oracle on 1e5 random triples") {
    std::mt19937_64 rng(13);
    auto coord = [&] { return static_cast<std::int64_t>(rng() % (1 << 20)) - (1 << 19); };
    for (int trial = 0; trial < 100000; ++trial) {
        const Point a = pt(coord(), coord());
        const Point b = pt(coord(), coord());
        const Point c = pt(coord(), coord());
        CHECK(orient(a, b, c) == orient_float_oracle(a, b, c));
    }
}

TEST_CASE("validate_point_set accepts and classifies simple sets") {
    const PointSet tri = validate_point_set({{0, 0}, {10, 0}, {0, 10}});
    CHECK(tri.hull_size() == 3);
    CHECK(tri.interior_size() == 0);

    const PointSet tc = validate_point_set({{0, 0}, {10, 0}, {0, 10}, {3, 3}});
    CHECK(tc.hull_size() == 3);
    CHECK(tc.interior == std::vector<int>{3});
}

TEST_CASE("validate_point_set rejects degeneracies") {
    CHECK_THROWS_AS(validate_point_set({{0, 0}, {1, 1}, {2, 2}, {5, 0}}), CollinearTripleError);
    CHECK_THROWS_AS(validate_point_set({{0, 0}, {0, 0}, {1, 2}}), DuplicatePointError);
    CHECK_THROWS_AS(validate_point_set({{0, 0}, {1, 0}}), TooFewPointsError);
    const std::int64_t big = (std::int64_t{1} << 30) + 1;
    CHECK_THROWS_AS(validate_point_set({{0, 0}, {big, 0}, {0, 7}}), BadParameterError);
}

TEST_CASE("hull is CCW on random sets") {
    std::mt19937_64 rng(99);
    int built = 0;
    while (built < 20) {
        std::vector<std::pair<std::int64_t, std::int64_t>> coords;
        for (int k = 0; k < 8; ++k)
            coords.emplace_back(static_cast<std::int64_t>(rng() % 50),
                                static_cast<std::int64_t>(rng() % 50));
        try {
            const PointSet ps = validate_point_set(coords);
            const int h = ps.hull_size();
            for (int i = 0; i < h; ++i)
                CHECK(orient(ps.pt(ps.hull[static_cast<std::size_t>(i)]),
                             ps.pt(ps.hull[static_cast<std::size_t>((i + 1) % h)]),
                             ps.pt(ps.hull[static_cast<std::size_t>((i + 2) % h)])) == 1);
            ++built;
        } catch (const InputError&) {
        }
    }
}

TEST_CASE("segments_cross cases") {
    CHECK(segments_cross(pt(0, 0), pt(2, 2), pt(0, 2), pt(2, 0)));        // proper X
    CHECK_FALSE(segments_cross(pt(0, 0), pt(1, 0), pt(1, 0), pt(2, 1)));  // shared endpoint
    CHECK_FALSE(segments_cross(pt(0, 0), pt(1, 0), pt(3, 0), pt(3, 1)));  // disjoint
    CHECK(segments_cross(pt(0, 0), pt(4, 0), pt(2, 0), pt(2, 3)));        // T-touch inside
    CHECK(segments_cross(pt(0, 0), pt(3, 0), pt(1, 0), pt(5, 0)));        // collinear overlap
    CHECK_FALSE(segments_cross(pt(0, 0), pt(1, 0), pt(1, 0), pt(2, 0)));  // collinear touch
}

TEST_CASE("angular_order sorts counterclockwise from the positive x axis") {
    const Point center = pt(0, 0, 0);
    CHECK(angular_order(center, {pt(1, 0, 1), pt(0, 1, 2), pt(-1, 0, 3)}) ==
          std::vector<int>{1, 2, 3});
    CHECK(angular_order(center, {pt(5, 7, 4)}) == std::vector<int>{4});
    CHECK(angular_order(center, {pt(1, 1, 1), pt(-1, 1, 2), pt(-1, -1, 3), pt(1, -1, 4)}) ==
          std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("angular_order ignores input order") {
    const Point center = pt(3, 3, 0);
    const std::vector<Point> nbs = {pt(10, 3, 1), pt(3, 9, 2), pt(0, 0, 3), pt(9, 0, 4)};
    auto shuffled = nbs;
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(angular_order(center, shuffled) == angular_order(center, nbs));
    }
}

TEST_CASE("angular_order rejects bad input") {
    CHECK_THROWS_AS(angular_order(pt(0, 0), {}), BadParameterError);
    CHECK_THROWS_AS(angular_order(pt(1, 1), {pt(1, 1)}), BadParameterError);
}
