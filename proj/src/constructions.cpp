#include "psit/constructions.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace psit {

RecurrenceSpec recurrence_spec(char kind) {
    if (kind == 'P') return RecurrenceSpec{'P', 2, 1, 1, 1};
    if (kind == 'Q') return RecurrenceSpec{'Q', 3, 1, 1, 1};
    throw BadParameterError("recurrence kind must be 'P' or 'Q'");
}

BigCount recurrence_value(const RecurrenceSpec& spec, int N) {
    if (N < 1) throw BadParameterError("recurrence index must be >= 1");
    if (N == 1) return spec.seed1;
    if (N == 2) return spec.seed2;
    BigCount a = spec.seed1, b = spec.seed2;
    for (int k = 3; k <= N; ++k) {
        BigCount c = spec.c1 * b + spec.c2 * a;
        a = std::move(b);
        b = std::move(c);
    }
    return b;
}

Real50 growth_ratio(const RecurrenceSpec& spec, int N) {
    if (N < 10) throw BadParameterError("growth ratio needs N >= 10");
    const Real50 hi(recurrence_value(spec, N + 1).str());
    const Real50 lo(recurrence_value(spec, N).str());
    return hi / lo;
}

Real50 closed_form(const RecurrenceSpec& spec, int N) {
    using boost::multiprecision::pow;
    using boost::multiprecision::sqrt;
    if (N < 1) throw BadParameterError("recurrence index must be >= 1");
    if (spec.kind == 'P') {
        const Real50 r2 = sqrt(Real50(2));
        return (r2 - 1) / 2 *
               (pow(1 + r2, N) - (3 + 2 * r2) * pow(1 - r2, N));
    }
    const Real50 r13 = sqrt(Real50(13));
    return ((13 - r13) * pow(3 + r13, N) - (91 + 25 * r13) * pow(3 - r13, N)) /
           (13 * (3 + r13) * pow(Real50(2), N));
}

std::pair<PointSetPtr, Triangulation> build_TN(int N) {
    if (N < 2) throw BadParameterError("the chain triangulation needs N >= 2");
    if (N > 2000) throw BadParameterError("the chain triangulation is capped at N = 2000");

    // Apex above, chain on a downward parabola so that the chain bulges
    // toward the apex and the hull is the triangle {p_0, p_1, p_N}.
    std::vector<std::pair<std::int64_t, std::int64_t>> coords;
    coords.emplace_back(-(N + 1), 2LL * N * N + 2);  // p_0
    for (int i = 1; i <= N; ++i) coords.emplace_back(-2 * i, -static_cast<std::int64_t>(i) * i);
    auto ps = std::make_shared<const PointSet>(validate_point_set(coords));

    std::vector<int> hull_sorted = ps->hull;
    std::sort(hull_sorted.begin(), hull_sorted.end());
    internal_check(hull_sorted == std::vector<int>({0, 1, N}),
                   "chain hull must be the apex and the chain endpoints");

    EdgeList edges;
    for (int i = 1; i < N; ++i) edges.emplace_back(i, i + 1);  // chain
    for (int i = 1; i <= N; ++i) edges.emplace_back(0, i);     // spokes
    edges.emplace_back(1, N);                                  // closing chord
    for (int j = 2; j <= N - 2; ++j) edges.emplace_back(j, N); // bottom fan

    Triangulation t = as_triangulation(make_plane_graph(ps, std::move(edges)));
    internal_check(t.graph.n_edges() == 3 * N - 3, "chain triangulation edge count");
    return {ps, std::move(t)};
}

PointSetPtr build_convex(int N) {
    if (N < 3) throw BadParameterError("convex set needs N >= 3");
    if (N > 30000) throw BadParameterError("convex set capped at N = 30000");
    std::vector<std::pair<std::int64_t, std::int64_t>> coords;
    for (int i = 0; i < N; ++i)
        coords.emplace_back(i, static_cast<std::int64_t>(i) * i);
    auto ps = std::make_shared<const PointSet>(validate_point_set(coords));
    internal_check(ps->hull_size() == N, "parabola points must all be on the hull");
    return ps;
}

PointSetPtr build_triangle_plus_center() {
    const std::vector<std::pair<std::int64_t, std::int64_t>> coords = {
        {0, 0}, {10, 0}, {0, 10}, {3, 3}};
    auto ps = std::make_shared<const PointSet>(validate_point_set(coords));
    internal_check(ps->hull_size() == 3 && ps->interior == std::vector<int>{3},
                   "triangle plus center shape");
    return ps;
}

PointSetPtr build_double_chain(int k) {
    if (k < 2) throw BadParameterError("double chain needs k >= 2");
    if (k > 3000) throw BadParameterError("double chain capped at k = 3000");
    const std::int64_t Y = 10LL * k * k + 7;
    std::vector<std::pair<std::int64_t, std::int64_t>> coords;
    for (int i = 0; i < k; ++i) {
        const std::int64_t x = 2LL * i - (k - 1);
        coords.emplace_back(x, Y + x * x);  // upper chain dips toward the middle
    }
    for (int i = 0; i < k; ++i) {
        const std::int64_t x = 2LL * i - (k - 1);
        coords.emplace_back(x, -Y - x * x);  // lower chain rises toward the middle
    }
    auto ps = std::make_shared<const PointSet>(validate_point_set(coords));
    internal_check(ps->hull_size() == 4, "double chain hull must be the four chain endpoints");
    return ps;
}

namespace {

// First point of S hit when rotating the ray from `corner` toward `toward`
// counterclockwise around `corner`. No point of S is collinear with the
// two corners, so every comparison is strict.
int first_hit_ccw(const PointSet& star, int corner, int toward, int n_original) {
    const Point& c = star.pt(corner);
    const Point& t = star.pt(toward);
    const std::int64_t dx = t.x - c.x, dy = t.y - c.y;
    auto angle_class = [&](const Point& s) {
        const __int128 cr = __int128{dx} * (s.y - c.y) - __int128{dy} * (s.x - c.x);
        internal_check(cr != 0, "point collinear with corner pair");
        return cr > 0 ? 0 : 1;  // 0: CCW angle in (0, pi), 1: in (pi, 2*pi)
    };
    int best = -1;
    for (int v = 0; v < n_original; ++v) {
        if (best < 0) {
            best = v;
            continue;
        }
        const Point& a = star.pt(v);
        const Point& b = star.pt(best);
        const int ca = angle_class(a), cb = angle_class(b);
        bool a_before;
        if (ca != cb) {
            a_before = ca < cb;
        } else {
            const __int128 cr = __int128{a.x - c.x} * (b.y - c.y) -
                                __int128{a.y - c.y} * (b.x - c.x);
            internal_check(cr != 0, "two points collinear with a corner");
            a_before = cr > 0;
        }
        if (a_before) best = v;
    }
    return best;
}

} // namespace

HullAugmentation augment_triangular_hull(const PointSet& S) {
    std::int64_t minx = S.points[0].x, maxx = minx, miny = S.points[0].y, maxy = miny;
    for (const Point& p : S.points) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    const std::int64_t span = std::max<std::int64_t>({maxx - minx, maxy - miny, 1});
    const std::int64_t cx = (minx + maxx) / 2;

    const int n = S.size();
    for (std::int64_t t = 0; t < 1000; ++t) {
        std::vector<Point> pts = S.points;
        pts.push_back(Point{n, cx + t, maxy + 3 * span + 2 * t});
        pts.push_back(Point{n + 1, minx - 3 * span - t, miny - 2 * span - 3 * t});
        pts.push_back(Point{n + 2, maxx + 3 * span + 3 * t, miny - 2 * span - t});
        PointSet star;
        try {
            star = validate_point_set(std::move(pts));
        } catch (const InputError&) {
            continue;
        }
        if (star.hull_size() != 3) continue;

        HullAugmentation aug;
        aug.augmented = std::make_shared<const PointSet>(std::move(star));
        const int p = n, q = n + 1, r = n + 2;
        aug.p_prime = first_hit_ccw(*aug.augmented, p, q, n);
        aug.q_prime = first_hit_ccw(*aug.augmented, q, r, n);
        aug.r_prime = first_hit_ccw(*aug.augmented, r, p, n);
        aug.witness_edges = {Edge(p, q), Edge(p, r),        Edge(q, r),
                             Edge(p, aug.p_prime), Edge(q, aug.q_prime), Edge(r, aug.r_prime)};
        std::sort(aug.witness_edges.begin(), aug.witness_edges.end());
        return aug;
    }
    throw InternalError("could not place an enclosing triangle in general position");
}

PlaneGraph inject_into_augmented(const HullAugmentation& aug, const PlaneGraph& g) {
    internal_check(g.n_vertices() + 3 == aug.augmented->size(),
                   "graph does not match the augmented point set");
    EdgeList edges = g.edges;
    edges.insert(edges.end(), aug.witness_edges.begin(), aug.witness_edges.end());
    return make_plane_graph(aug.augmented, std::move(edges));
}

} // namespace psit
