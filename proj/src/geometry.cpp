#include "psit/geometry.hpp"

#include <algorithm>
#include <cstdlib>

namespace psit {

namespace {

using i128 = __int128;

i128 cross(const Point& a, const Point& b, const Point& c) {
    const i128 bx = b.x - a.x, by = b.y - a.y;
    const i128 cx = c.x - a.x, cy = c.y - a.y;
    return bx * cy - by * cx;
}

int sgn(i128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Strictly inside the closed segment ab, excluding endpoints. Assumes
// a, b, p collinear.
bool strictly_between(const Point& a, const Point& b, const Point& p) {
    if (p.x == a.x && p.y == a.y) return false;
    if (p.x == b.x && p.y == b.y) return false;
    const bool in_x = (std::min(a.x, b.x) <= p.x) && (p.x <= std::max(a.x, b.x));
    const bool in_y = (std::min(a.y, b.y) <= p.y) && (p.y <= std::max(a.y, b.y));
    return in_x && in_y;
}

} // namespace

int orient(const Point& a, const Point& b, const Point& c) {
    return sgn(cross(a, b, c));
}

bool segments_cross(const Point& p, const Point& q, const Point& r, const Point& s) {
    const int d1 = orient(r, s, p);
    const int d2 = orient(r, s, q);
    const int d3 = orient(p, q, r);
    const int d4 = orient(p, q, s);
    if (d1 * d2 < 0 && d3 * d4 < 0) return true;
    if (d1 == 0 && strictly_between(r, s, p)) return true;
    if (d2 == 0 && strictly_between(r, s, q)) return true;
    if (d3 == 0 && strictly_between(p, q, r)) return true;
    if (d4 == 0 && strictly_between(p, q, s)) return true;
    return false;
}

bool PointSet::is_interior(int id) const {
    return std::binary_search(interior.begin(), interior.end(), id);
}

PointSet validate_point_set(std::vector<Point> points) {
    const int n = static_cast<int>(points.size());
    if (n < 3) throw TooFewPointsError("a point set needs at least 3 points");
    for (int i = 0; i < n; ++i) {
        points[static_cast<std::size_t>(i)].id = i;
        const auto& p = points[static_cast<std::size_t>(i)];
        if (std::llabs(p.x) > kMaxCoord || std::llabs(p.y) > kMaxCoord)
            throw BadParameterError("coordinate out of range at id " + std::to_string(i) +
                                    " (|x|,|y| must be <= 2^30)");
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (points[i].x == points[j].x && points[i].y == points[j].y)
                throw DuplicatePointError(i, j);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (orient(points[i], points[j], points[k]) == 0)
                    throw CollinearTripleError(i, j, k);

    // Andrew's monotone chain. General position means no hull collinearity
    // cases to break, and every point is either a hull vertex or interior.
    std::vector<int> order(points.size());
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& pa = points[static_cast<std::size_t>(a)];
        const auto& pb = points[static_cast<std::size_t>(b)];
        return pa.x != pb.x ? pa.x < pb.x : pa.y < pb.y;
    });
    auto build_half = [&](bool lower) {
        std::vector<int> half;
        for (int idx = 0; idx < n; ++idx) {
            const int i = order[static_cast<std::size_t>(lower ? idx : n - 1 - idx)];
            while (half.size() >= 2) {
                const int a = half[half.size() - 2];
                const int b = half[half.size() - 1];
                if (orient(points[static_cast<std::size_t>(a)], points[static_cast<std::size_t>(b)],
                           points[static_cast<std::size_t>(i)]) > 0)
                    break;
                half.pop_back();
            }
            half.push_back(i);
        }
        return half;
    };
    std::vector<int> lower = build_half(true);
    std::vector<int> upper = build_half(false);
    PointSet ps;
    ps.points = std::move(points);
    ps.hull = std::move(lower);
    ps.hull.pop_back();
    ps.hull.insert(ps.hull.end(), upper.begin(), upper.end() - 1);

    std::vector<char> on_hull(static_cast<std::size_t>(n), 0);
    for (int v : ps.hull) on_hull[static_cast<std::size_t>(v)] = 1;
    for (int i = 0; i < n; ++i)
        if (!on_hull[static_cast<std::size_t>(i)]) ps.interior.push_back(i);

    internal_check(ps.hull_size() >= 3, "hull must have at least 3 vertices");
    for (int i = 0; i < ps.hull_size(); ++i) {
        const int a = ps.hull[static_cast<std::size_t>(i)];
        const int b = ps.hull[static_cast<std::size_t>((i + 1) % ps.hull_size())];
        const int c = ps.hull[static_cast<std::size_t>((i + 2) % ps.hull_size())];
        internal_check(orient(ps.pt(a), ps.pt(b), ps.pt(c)) > 0, "hull must be CCW");
    }
    return ps;
}

PointSet validate_point_set(const std::vector<std::pair<std::int64_t, std::int64_t>>& coords) {
    std::vector<Point> pts;
    pts.reserve(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i)
        pts.push_back(Point{static_cast<int>(i), coords[i].first, coords[i].second});
    return validate_point_set(std::move(pts));
}

PointSet validate_point_set(std::initializer_list<std::pair<std::int64_t, std::int64_t>> coords) {
    return validate_point_set(std::vector<std::pair<std::int64_t, std::int64_t>>(coords));
}

std::vector<int> angular_order(const Point& center, const std::vector<Point>& neighbors) {
    if (neighbors.empty()) throw BadParameterError("angular_order: no neighbors");
    struct Dir {
        int id;
        std::int64_t dx, dy;
    };
    std::vector<Dir> dirs;
    dirs.reserve(neighbors.size());
    for (const auto& nb : neighbors) {
        if (nb.x == center.x && nb.y == center.y)
            throw BadParameterError("angular_order: neighbor equals center");
        dirs.push_back(Dir{nb.id, nb.x - center.x, nb.y - center.y});
    }
    // Half-plane class 0: angle in [0, pi), class 1: [pi, 2pi).
    auto half = [](const Dir& d) { return (d.dy > 0 || (d.dy == 0 && d.dx > 0)) ? 0 : 1; };
    std::sort(dirs.begin(), dirs.end(), [&](const Dir& a, const Dir& b) {
        const int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        const i128 cr = i128{a.dx} * b.dy - i128{a.dy} * b.dx;
        if (cr != 0) return cr > 0;
        return a.id < b.id;  // identical direction cannot happen in general position
    });
    std::vector<int> out;
    out.reserve(dirs.size());
    for (const auto& d : dirs) out.push_back(d.id);
    return out;
}

} // namespace psit
