#pragma once

// Exact integer geometric kernel. All predicates are computed in 128-bit
// integer arithmetic on coordinates bounded by 2^30, so every sign is
// exact and no floating point enters any downstream count.

#include <cstdint>
#include <vector>

#include "psit/numeric.hpp"

namespace psit {

inline constexpr std::int64_t kMaxCoord = std::int64_t{1} << 30;

struct Point {
    int id = -1;
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const Point&, const Point&) = default;
};

// Sign of the cross product (b-a) x (c-a): +1 for a counterclockwise turn,
// -1 for clockwise, 0 for collinear.
int orient(const Point& a, const Point& b, const Point& c);

// True iff segments pq and rs cross: proper interior crossing, or an
// endpoint of one lying strictly inside the other. A shared endpoint by
// itself does not count.
bool segments_cross(const Point& p, const Point& q, const Point& r, const Point& s);

// A validated planar point set in general position. Ids are contiguous
// from 0 and index into `points`. The hull cycle is counterclockwise.
struct PointSet {
    std::vector<Point> points;
    std::vector<int> hull;      // CCW cyclic order
    std::vector<int> interior;  // sorted ids

    int size() const { return static_cast<int>(points.size()); }
    int hull_size() const { return static_cast<int>(hull.size()); }
    int interior_size() const { return static_cast<int>(interior.size()); }
    const Point& pt(int id) const { return points[static_cast<std::size_t>(id)]; }
    bool is_interior(int id) const;

    friend bool operator==(const PointSet&, const PointSet&) = default;
};

// Validates general position (distinct points, no collinear triple,
// coordinates within bounds), computes the CCW hull and the interior set.
// Degenerate inputs are rejected, never perturbed.
PointSet validate_point_set(std::vector<Point> points);

// Convenience overloads for raw coordinate pairs; ids are assigned 0..n-1.
PointSet validate_point_set(const std::vector<std::pair<std::int64_t, std::int64_t>>& coords);
PointSet validate_point_set(std::initializer_list<std::pair<std::int64_t, std::int64_t>> coords);

// Neighbor ids sorted counterclockwise by angle around `center`, starting
// from the positive x direction. Exact comparisons only (half-plane split
// plus cross products), no trigonometry.
std::vector<int> angular_order(const Point& center, const std::vector<Point>& neighbors);

} // namespace psit
