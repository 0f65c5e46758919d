#include <doctest.h>

#include <filesystem>

#include "psit/cache.hpp"
#include "psit/constructions.hpp"
#include "psit/io.hpp"
#include "psit/svg.hpp"

using namespace psit;

namespace {

PlaneGraph fan_graph() {
    return make_plane_graph(
        build_triangle_plus_center(),
        {Edge(0, 1), Edge(0, 2), Edge(1, 2), Edge(0, 3), Edge(1, 3), Edge(2, 3)});
}

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t at = hay.find(needle); at != std::string::npos;
         at = hay.find(needle, at + needle.size()))
        ++n;
    return n;
}

} // namespace

TEST_CASE("point text parsing with comments and errors") {
    const PointSet ps = parse_points_text("# header\n0 0\n10 0\n\n0 10\n  # indented comment\n3 3\n");
    CHECK(ps.size() == 4);
    CHECK(ps.interior == std::vector<int>{3});

    CHECK_THROWS_WITH_AS(parse_points_text("0 0\nbroken\n1 0\n"),
                         doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_points_text("0 0\n1 2 3\n"),
                         doctest::Contains("line 2"), ParseError);
    // Validation failures point back at the source lines, skipping comments.
    CHECK_THROWS_WITH_AS(parse_points_text("# c\n0 0\n1 1\n# c\n2 2\n5 0\n"),
                         doctest::Contains("lines 2, 3, 5"), InputError);
    // Round trip.
    const PointSet again = parse_points_text(points_to_text(ps));
    CHECK(again == ps);
}

TEST_CASE("graph JSON round trip") {
    const PlaneGraph g = fan_graph();
    const PlaneGraph back = graph_from_json(graph_to_json(g));
    CHECK(back == g);
    CHECK_THROWS_AS(graph_from_json(Json::parse("{\"points\": []}")), ParseError);
}

TEST_CASE("census JSON shape") {
    const Json j = census_to_json(census(build_triangle_plus_center()));
    CHECK(j.at("n_points") == 4);
    CHECK(j.at("hull") == 3);
    CHECK(j.at("tri") == "1");
    CHECK(j.at("pt") == "4");
    CHECK(j.at("ppt") == "3");
    CHECK(j.at("by_pointed_count").at("0") == "1");
    CHECK(j.at("by_pointed_count").at("1") == "3");
}

TEST_CASE("svg output is deterministic and marks highlights") {
    const PlaneGraph fan = fan_graph();
    const std::string svg = emit_svg(fan);
    CHECK(svg == emit_svg(fan));
    CHECK(count_occurrences(svg, "<circle") == 4);
    CHECK(count_occurrences(svg, "<line") == 6);
    CHECK(count_occurrences(svg, "orange") == 0);

    PlaneGraph minus = make_plane_graph(
        fan.ps, {Edge(0, 1), Edge(0, 2), Edge(1, 2), Edge(1, 3), Edge(2, 3)});
    SvgOptions opts;
    opts.mark_pointed = true;
    opts.removed = {Edge(0, 3)};
    const std::string marked = emit_svg(minus, opts);
    CHECK(count_occurrences(marked, "orange") == 1);
    CHECK(count_occurrences(marked, "stroke-dasharray") == 1);
}

TEST_CASE("cache round trip and key separation") {
    const auto dir = std::filesystem::temp_directory_path() / "psit-cache-test";
    std::filesystem::remove_all(dir);
    const Cache cache(dir, true);
    const std::string key = cache_key({"op", "payload"});
    CHECK(!cache.get(key).has_value());
    cache.put(key, "{\"x\": 1}\n");
    REQUIRE(cache.get(key).has_value());
    CHECK(*cache.get(key) == "{\"x\": 1}\n");

    CHECK(cache_key({"op", "payload"}) == key);
    CHECK(cache_key({"op", "other"}) != key);
    CHECK(cache_key({"o", "ppayload"}) != key);  // boundaries are salted

    const Cache disabled(dir, false);
    CHECK(!disabled.get(key).has_value());
    std::filesystem::remove_all(dir);
}
