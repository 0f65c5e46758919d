#pragma once

// Plane-graph data model: canonical edge sets over a validated point set,
// face extraction through the rotation system, pseudo-triangle tests and
// pointedness classification.

#include <memory>
#include <utility>
#include <vector>

#include "psit/geometry.hpp"

namespace psit {

struct Edge {
    int a = -1, b = -1;  // normalized a < b
    Edge() = default;
    Edge(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {}
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;
using PointSetPtr = std::shared_ptr<const PointSet>;

EdgeList hull_edges(const PointSet& ps);

// Crossing-free graph over a point set, holding all hull edges. Edges are
// kept sorted and duplicate-free; equality of graphs is equality of the
// canonical lists.
struct PlaneGraph {
    PointSetPtr ps;
    EdgeList edges;

    int n_vertices() const { return ps->size(); }
    int n_edges() const { return static_cast<int>(edges.size()); }
    bool has_edge(int u, int v) const;

    friend bool operator==(const PlaneGraph& x, const PlaneGraph& y) {
        return *x.ps == *y.ps && x.edges == y.edges;
    }
};

// Canonicalizes and validates: endpoints in range, no duplicates, all hull
// edges present, no two edges cross.
PlaneGraph make_plane_graph(PointSetPtr ps, EdgeList edges);

std::vector<std::vector<int>> adjacency(const PlaneGraph& g);
// Neighbor lists sorted counterclockwise around each vertex.
std::vector<std::vector<int>> ccw_rotation(const PlaneGraph& g);

struct FaceDecomposition {
    std::vector<std::vector<int>> faces;  // bounded faces, CCW vertex cycles
    std::vector<int> outer;               // outer face walk (clockwise)
};

// Extracts faces by next-edge traversal of the rotation system. Bounded
// faces come out CCW; the outer face is the unique clockwise-area walk.
// Throws DisconnectedGraphError if some vertex is unreachable.
FaceDecomposition faces(const PlaneGraph& g);

// True iff the simple CCW polygon has exactly three convex corners.
bool is_pseudo_triangle(const std::vector<int>& cycle, const PointSet& ps);

// True iff some consecutive angular gap between the edges incident to v
// exceeds pi. Hull vertices of a hull-containing graph are always pointed
// (their outer angle is reflex).
bool is_pointed(const PlaneGraph& g, int v);

enum class GraphKind { NotPT, PseudoTriangulation, Triangulation };

struct Classification {
    GraphKind kind = GraphKind::NotPT;
    std::vector<int> pointed_interior;  // W, sorted; empty unless valid
    bool pointed = false;               // W == full interior set
    FaceDecomposition decomposition;    // populated when valid
};

// NotPT if the graph is disconnected or some bounded face is not a simple
// pseudo-triangle; otherwise reports W (the pointed interior vertices) and
// upgrades to Triangulation when every bounded face is a triangle.
Classification classify(const PlaneGraph& g);

struct Triangulation {
    PlaneGraph graph;
    std::vector<int> degrees;
};

struct PseudoTriangulation {
    PlaneGraph graph;
    std::vector<int> pointed_interior;  // W
    bool pointed = false;
};

// Wraps a classified graph; throws InternalError if the classification
// does not match the requested kind.
Triangulation as_triangulation(const PlaneGraph& g);
PseudoTriangulation as_pseudo_triangulation(const PlaneGraph& g);

} // namespace psit
