#pragma once

// Builders for the named point configurations (the T_N chain family, convex
// sets, the double chain) and exact evaluators for the two chain-counting
// recurrences and their closed forms.

#include <utility>

#include "psit/enumeration.hpp"
#include "psit/plane_graph.hpp"

namespace psit {

struct RecurrenceSpec {
    char kind = 'P';     // 'P' (pointed) or 'Q' (all)
    int c1 = 2, c2 = 1;  // value(N) = c1*value(N-1) + c2*value(N-2)
    BigCount seed1 = 1, seed2 = 1;
};

RecurrenceSpec recurrence_spec(char kind);

// Exact value by iteration with big integers; N >= 1.
BigCount recurrence_value(const RecurrenceSpec& spec, int N);

// value(N+1) / value(N) as a correctly rounded 50-digit quotient. The P
// ratio tends to 1+sqrt(2), the Q ratio to (3+sqrt(13))/2.
Real50 growth_ratio(const RecurrenceSpec& spec, int N);

// Closed forms of the recurrences, evaluated in 50-digit floats.
Real50 closed_form(const RecurrenceSpec& spec, int N);

// The chain-with-apex triangulation on N+1 points: a strictly convex chain
// p_1..p_N (right to left) bulging toward a high apex p_0, with all apex
// spokes, the chain edges, the closing chord p_1 p_N, and the bottom
// region fanned from p_N. Hull is the triangle {p_0, p_1, p_N}; the
// structure is asserted at build time.
std::pair<PointSetPtr, Triangulation> build_TN(int N);

PointSetPtr build_convex(int N);
PointSetPtr build_triangle_plus_center();
// Two opposing concave chains of k points each (N = 2k, h = 4).
PointSetPtr build_double_chain(int k);

struct HullAugmentation {
    PointSetPtr augmented;   // S plus three far corners, ids N, N+1, N+2
    EdgeList witness_edges;  // corner triangle plus one tangent edge per corner
    int p_prime = -1, q_prime = -1, r_prime = -1;
};

// Encloses S in a triangle {p,q,r} whose corners see the set tangentially:
// p' is the first point of S hit when rotating segment pq counterclockwise
// around p (q', r' symmetric). Adding the witness edges to any pointed
// pseudo-triangulation of S yields a pointed pseudo-triangulation of S*.
HullAugmentation augment_triangular_hull(const PointSet& S);

// The image of a graph over S under the augmentation: same edges plus the
// witness edges, over the augmented point set.
PlaneGraph inject_into_augmented(const HullAugmentation& aug, const PlaneGraph& g);

} // namespace psit
