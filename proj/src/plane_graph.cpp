#include "psit/plane_graph.hpp"

#include <algorithm>

namespace psit {

namespace {

using i128 = __int128;

i128 doubled_signed_area(const std::vector<int>& cycle, const PointSet& ps) {
    i128 area = 0;
    const int m = static_cast<int>(cycle.size());
    for (int i = 0; i < m; ++i) {
        const Point& p = ps.pt(cycle[static_cast<std::size_t>(i)]);
        const Point& q = ps.pt(cycle[static_cast<std::size_t>((i + 1) % m)]);
        area += i128{p.x} * q.y - i128{q.x} * p.y;
    }
    return area;
}

} // namespace

EdgeList hull_edges(const PointSet& ps) {
    EdgeList he;
    const int h = ps.hull_size();
    he.reserve(static_cast<std::size_t>(h));
    for (int i = 0; i < h; ++i)
        he.emplace_back(ps.hull[static_cast<std::size_t>(i)],
                        ps.hull[static_cast<std::size_t>((i + 1) % h)]);
    std::sort(he.begin(), he.end());
    return he;
}

bool PlaneGraph::has_edge(int u, int v) const {
    return std::binary_search(edges.begin(), edges.end(), Edge(u, v));
}

PlaneGraph make_plane_graph(PointSetPtr ps, EdgeList edges) {
    internal_check(ps != nullptr, "plane graph needs a point set");
    const int n = ps->size();
    for (const Edge& e : edges) {
        if (e.a < 0 || e.b >= n || e.a == e.b)
            throw BadParameterError("edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                                    ") out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    PlaneGraph g{std::move(ps), std::move(edges)};
    for (const Edge& e : hull_edges(*g.ps))
        if (!g.has_edge(e.a, e.b))
            throw BadParameterError("graph is missing hull edge (" + std::to_string(e.a) + "," +
                                    std::to_string(e.b) + ")");
    const int m = g.n_edges();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const Edge& e = g.edges[static_cast<std::size_t>(i)];
            const Edge& f = g.edges[static_cast<std::size_t>(j)];
            if (segments_cross(g.ps->pt(e.a), g.ps->pt(e.b), g.ps->pt(f.a), g.ps->pt(f.b)))
                throw BadParameterError("edges (" + std::to_string(e.a) + "," +
                                        std::to_string(e.b) + ") and (" + std::to_string(f.a) +
                                        "," + std::to_string(f.b) + ") cross");
        }
    return g;
}

std::vector<std::vector<int>> adjacency(const PlaneGraph& g) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n_vertices()));
    for (const Edge& e : g.edges) {
        adj[static_cast<std::size_t>(e.a)].push_back(e.b);
        adj[static_cast<std::size_t>(e.b)].push_back(e.a);
    }
    return adj;
}

std::vector<std::vector<int>> ccw_rotation(const PlaneGraph& g) {
    auto adj = adjacency(g);
    for (int v = 0; v < g.n_vertices(); ++v) {
        auto& nb = adj[static_cast<std::size_t>(v)];
        if (nb.empty()) continue;
        std::vector<Point> pts;
        pts.reserve(nb.size());
        for (int u : nb) pts.push_back(g.ps->pt(u));
        nb = angular_order(g.ps->pt(v), pts);
    }
    return adj;
}

FaceDecomposition faces(const PlaneGraph& g) {
    const int n = g.n_vertices();
    auto rot = ccw_rotation(g);

    // Connectivity, counting isolated vertices as disconnection.
    {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int u : rot[static_cast<std::size_t>(v)])
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    ++reached;
                    stack.push_back(u);
                }
        }
        if (reached != n) throw DisconnectedGraphError("graph does not reach all vertices");
    }

    // Position of u within rot[v], for O(1) next-edge lookups.
    std::vector<std::vector<int>> pos(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        pos[static_cast<std::size_t>(v)].assign(static_cast<std::size_t>(n), -1);
        const auto& nb = rot[static_cast<std::size_t>(v)];
        for (int i = 0; i < static_cast<int>(nb.size()); ++i)
            pos[static_cast<std::size_t>(v)][static_cast<std::size_t>(nb[static_cast<std::size_t>(i)])] = i;
    }

    // Directed-edge visitation: edge (v, k-th neighbor of v).
    std::vector<std::vector<char>> used(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        used[static_cast<std::size_t>(v)].assign(rot[static_cast<std::size_t>(v)].size(), 0);

    FaceDecomposition fd;
    std::vector<std::vector<int>> all_faces;
    for (int v0 = 0; v0 < n; ++v0) {
        const auto& nb0 = rot[static_cast<std::size_t>(v0)];
        for (int k0 = 0; k0 < static_cast<int>(nb0.size()); ++k0) {
            if (used[static_cast<std::size_t>(v0)][static_cast<std::size_t>(k0)]) continue;
            std::vector<int> cycle;
            int v = v0, k = k0;
            do {
                used[static_cast<std::size_t>(v)][static_cast<std::size_t>(k)] = 1;
                cycle.push_back(v);
                const int w = rot[static_cast<std::size_t>(v)][static_cast<std::size_t>(k)];
                // Next edge keeps the face on the left: take the neighbor
                // preceding v in the CCW order around w.
                const int deg_w = static_cast<int>(rot[static_cast<std::size_t>(w)].size());
                const int pv = pos[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)];
                v = w;
                k = (pv - 1 + deg_w) % deg_w;
            } while (!(v == v0 && k == k0));
            all_faces.push_back(std::move(cycle));
        }
    }

    int outer_idx = -1;
    for (int i = 0; i < static_cast<int>(all_faces.size()); ++i) {
        const i128 area = doubled_signed_area(all_faces[static_cast<std::size_t>(i)], *g.ps);
        if (area < 0) {
            internal_check(outer_idx == -1, "exactly one clockwise face expected");
            outer_idx = i;
        }
    }
    internal_check(outer_idx >= 0, "no outer face found");

    for (int i = 0; i < static_cast<int>(all_faces.size()); ++i) {
        if (i == outer_idx)
            fd.outer = std::move(all_faces[static_cast<std::size_t>(i)]);
        else
            fd.faces.push_back(std::move(all_faces[static_cast<std::size_t>(i)]));
    }

    // Euler: V - E + F = 2, with the outer face counted.
    const long long F = static_cast<long long>(fd.faces.size()) + 1;
    internal_check(n - g.n_edges() + F == 2, "Euler relation failed");
    return fd;
}

bool is_pseudo_triangle(const std::vector<int>& cycle, const PointSet& ps) {
    const int m = static_cast<int>(cycle.size());
    if (m < 3) return false;
    int corners = 0;
    for (int i = 0; i < m; ++i) {
        const int a = cycle[static_cast<std::size_t>((i + m - 1) % m)];
        const int b = cycle[static_cast<std::size_t>(i)];
        const int c = cycle[static_cast<std::size_t>((i + 1) % m)];
        if (orient(ps.pt(a), ps.pt(b), ps.pt(c)) > 0) ++corners;
    }
    return corners == 3;
}

namespace {

bool gap_exceeds_pi(const PointSet& ps, int v, const std::vector<int>& ccw_neighbors) {
    const int d = static_cast<int>(ccw_neighbors.size());
    if (d == 1) return true;  // a single edge leaves a full reflex gap
    const Point& c = ps.pt(v);
    for (int i = 0; i < d; ++i) {
        const Point& p = ps.pt(ccw_neighbors[static_cast<std::size_t>(i)]);
        const Point& q = ps.pt(ccw_neighbors[static_cast<std::size_t>((i + 1) % d)]);
        // CCW angle from (p-c) to (q-c) exceeds pi iff the cross product is
        // negative; exactly pi cannot happen in general position.
        if (orient(c, p, q) < 0) return true;
    }
    return false;
}

} // namespace

bool is_pointed(const PlaneGraph& g, int v) {
    auto rot = ccw_rotation(g);
    const auto& nb = rot[static_cast<std::size_t>(v)];
    if (nb.empty()) throw IsolatedVertexError("vertex " + std::to_string(v) + " has no edges");
    return gap_exceeds_pi(*g.ps, v, nb);
}

Classification classify(const PlaneGraph& g) {
    Classification out;
    FaceDecomposition fd;
    try {
        fd = faces(g);
    } catch (const DisconnectedGraphError&) {
        return out;
    }

    bool all_triangles = true;
    std::vector<char> on_cycle(static_cast<std::size_t>(g.n_vertices()), 0);
    for (const auto& cycle : fd.faces) {
        // Simplicity: a repeated vertex means a pinched face or a bridge.
        bool simple = true;
        for (int v : cycle) {
            if (on_cycle[static_cast<std::size_t>(v)]) simple = false;
            on_cycle[static_cast<std::size_t>(v)] = 1;
        }
        for (int v : cycle) on_cycle[static_cast<std::size_t>(v)] = 0;
        if (!simple || !is_pseudo_triangle(cycle, *g.ps)) return out;
        if (cycle.size() != 3) all_triangles = false;
    }

    auto rot = ccw_rotation(g);
    for (int v : g.ps->interior)
        if (gap_exceeds_pi(*g.ps, v, rot[static_cast<std::size_t>(v)]))
            out.pointed_interior.push_back(v);

    const int n_pts = g.n_vertices();
    const int n_int = g.ps->interior_size();
    const int expect = 2 * n_pts + n_int - 3 - static_cast<int>(out.pointed_interior.size());
    internal_check(g.n_edges() == expect, "pseudo-triangulation edge-count identity failed");

    out.kind = all_triangles ? GraphKind::Triangulation : GraphKind::PseudoTriangulation;
    out.pointed = static_cast<int>(out.pointed_interior.size()) == n_int;
    if (all_triangles)
        internal_check(out.pointed_interior.empty(), "triangulation must have empty W");
    out.decomposition = std::move(fd);
    return out;
}

Triangulation as_triangulation(const PlaneGraph& g) {
    const Classification c = classify(g);
    internal_check(c.kind == GraphKind::Triangulation, "graph is not a triangulation");
    Triangulation t{g, std::vector<int>(static_cast<std::size_t>(g.n_vertices()), 0)};
    for (const Edge& e : g.edges) {
        ++t.degrees[static_cast<std::size_t>(e.a)];
        ++t.degrees[static_cast<std::size_t>(e.b)];
    }
    return t;
}

PseudoTriangulation as_pseudo_triangulation(const PlaneGraph& g) {
    const Classification c = classify(g);
    internal_check(c.kind != GraphKind::NotPT, "graph is not a pseudo-triangulation");
    return PseudoTriangulation{g, c.pointed_interior, c.pointed};
}

} // namespace psit
