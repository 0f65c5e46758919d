#include "psit/bijection.hpp"

#include <algorithm>
#include <map>

namespace psit {

namespace {

using i128 = __int128;

std::vector<int> rotate_to_min(const std::vector<int>& cycle) {
    const auto it = std::min_element(cycle.begin(), cycle.end());
    std::vector<int> out(it, cycle.end());
    out.insert(out.end(), cycle.begin(), it);
    return out;
}

std::vector<int> reflex_vertices(const std::vector<int>& cycle, const PointSet& ps) {
    std::vector<int> out;
    const int m = static_cast<int>(cycle.size());
    for (int i = 0; i < m; ++i) {
        const int a = cycle[static_cast<std::size_t>((i + m - 1) % m)];
        const int b = cycle[static_cast<std::size_t>(i)];
        const int c = cycle[static_cast<std::size_t>((i + 1) % m)];
        if (orient(ps.pt(a), ps.pt(b), ps.pt(c)) < 0) out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Kuhn's augmenting-path maximum matching on a small bipartite graph given
// as adjacency lists from the left side.
int max_matching(const std::vector<std::vector<int>>& adj, int n_right,
                 std::vector<int>& match_left) {
    const int n_left = static_cast<int>(adj.size());
    match_left.assign(static_cast<std::size_t>(n_left), -1);
    std::vector<int> match_right(static_cast<std::size_t>(n_right), -1);
    std::vector<char> used;
    auto try_augment = [&](auto&& self, int v) -> bool {
        for (int u : adj[static_cast<std::size_t>(v)]) {
            if (used[static_cast<std::size_t>(u)]) continue;
            used[static_cast<std::size_t>(u)] = 1;
            if (match_right[static_cast<std::size_t>(u)] < 0 ||
                self(self, match_right[static_cast<std::size_t>(u)])) {
                match_left[static_cast<std::size_t>(v)] = u;
                match_right[static_cast<std::size_t>(u)] = v;
                return true;
            }
        }
        return false;
    };
    int size = 0;
    for (int v = 0; v < n_left; ++v) {
        used.assign(static_cast<std::size_t>(n_right), 0);
        if (try_augment(try_augment, v)) ++size;
    }
    return size;
}

void check_same_set_and_contained(const Triangulation& T, const PseudoTriangulation& Tsub) {
    if (!(*T.graph.ps == *Tsub.graph.ps))
        throw NotContainedError("graphs live on different point sets");
    for (const Edge& e : Tsub.graph.edges)
        if (!T.graph.has_edge(e.a, e.b))
            throw NotContainedError("edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                                    ") is not in the triangulation");
}

} // namespace

std::vector<std::vector<int>> canonical_faces(const PlaneGraph& g) {
    std::vector<std::vector<int>> out;
    for (const auto& cycle : faces(g).faces) out.push_back(rotate_to_min(cycle));
    std::sort(out.begin(), out.end());
    return out;
}

bool doubled_point_in_polygon(std::int64_t x2, std::int64_t y2, const std::vector<int>& cycle,
                              const PointSet& ps) {
    // Crossing number against a ray to +x, on coordinates scaled by 2 so
    // edge midpoints stay integral. The query point never lies on the
    // boundary for the inputs we feed here.
    int crossings = 0;
    const int m = static_cast<int>(cycle.size());
    for (int i = 0; i < m; ++i) {
        const Point& p = ps.pt(cycle[static_cast<std::size_t>(i)]);
        const Point& q = ps.pt(cycle[static_cast<std::size_t>((i + 1) % m)]);
        const std::int64_t py = 2 * p.y, qy = 2 * q.y;
        const std::int64_t px = 2 * p.x, qx = 2 * q.x;
        if ((py > y2) == (qy > y2)) continue;
        const i128 side = i128{qx - px} * (y2 - py) - i128{qy - py} * (x2 - px);
        if (qy > py ? side > 0 : side < 0) ++crossings;
    }
    return crossings % 2 == 1;
}

EdgeList removed_edges(const Triangulation& T, const PseudoTriangulation& Tsub) {
    check_same_set_and_contained(T, Tsub);
    EdgeList diff;
    std::set_difference(T.graph.edges.begin(), T.graph.edges.end(), Tsub.graph.edges.begin(),
                        Tsub.graph.edges.end(), std::back_inserter(diff));
    return diff;
}

BijectionCertificate build_certificate(const Triangulation& T, const PseudoTriangulation& Tsub) {
    const EdgeList D = removed_edges(T, Tsub);
    const PointSet& ps = *T.graph.ps;

    BijectionCertificate cert;
    cert.faces = canonical_faces(Tsub.graph);
    const int nf = static_cast<int>(cert.faces.size());
    cert.face_reflex.resize(static_cast<std::size_t>(nf));
    cert.face_diagonals.resize(static_cast<std::size_t>(nf));

    for (int f = 0; f < nf; ++f)
        cert.face_reflex[static_cast<std::size_t>(f)] =
            reflex_vertices(cert.faces[static_cast<std::size_t>(f)], ps);

    for (const Edge& e : D) {
        const std::int64_t mx = ps.pt(e.a).x + ps.pt(e.b).x;
        const std::int64_t my = ps.pt(e.a).y + ps.pt(e.b).y;
        int host = -1;
        for (int f = 0; f < nf; ++f)
            if (doubled_point_in_polygon(mx, my, cert.faces[static_cast<std::size_t>(f)], ps)) {
                host = f;
                break;
            }
        internal_check(host >= 0, "removed edge not inside any bounded face");
        cert.face_diagonals[static_cast<std::size_t>(host)].push_back(e);
    }

    for (int f = 0; f < nf; ++f) {
        const auto& reflex = cert.face_reflex[static_cast<std::size_t>(f)];
        const auto& diags = cert.face_diagonals[static_cast<std::size_t>(f)];
        internal_check(reflex.size() == diags.size(),
                       "a face must hold as many diagonals as reflex vertices");
        if (reflex.empty()) continue;
        std::vector<std::vector<int>> adj(reflex.size());
        for (std::size_t v = 0; v < reflex.size(); ++v)
            for (std::size_t u = 0; u < diags.size(); ++u)
                if (diags[u].a == reflex[v] || diags[u].b == reflex[v])
                    adj[v].push_back(static_cast<int>(u));
        std::vector<int> match_left;
        const int size = max_matching(adj, static_cast<int>(diags.size()), match_left);
        if (size != static_cast<int>(reflex.size()))
            throw NoMatchingError("no perfect matching in face " + std::to_string(f));
        for (std::size_t v = 0; v < reflex.size(); ++v)
            cert.pairs.push_back(CertPair{diags[static_cast<std::size_t>(match_left[v])],
                                          reflex[v], f});
    }
    std::sort(cert.pairs.begin(), cert.pairs.end(), [](const CertPair& x, const CertPair& y) {
        return std::tie(x.face, x.vertex) < std::tie(y.face, y.vertex);
    });
    return cert;
}

CertificateCheck verify_certificate(const BijectionCertificate& cert, const Triangulation& T,
                                    const PseudoTriangulation& Tsub) {
    auto fail = [](std::string why) { return CertificateCheck{false, std::move(why)}; };

    EdgeList D;
    try {
        D = removed_edges(T, Tsub);
    } catch (const NotContainedError& e) {
        return fail(e.what());
    }
    const PointSet& ps = *T.graph.ps;

    // Bijection on edges: every removed edge exactly once.
    EdgeList cert_edges;
    for (const CertPair& p : cert.pairs) cert_edges.push_back(p.edge);
    std::sort(cert_edges.begin(), cert_edges.end());
    if (std::adjacent_find(cert_edges.begin(), cert_edges.end()) != cert_edges.end())
        return fail("an edge appears in two pairs");
    if (cert_edges != D) return fail("certificate edges do not equal the removed set");

    // Bijection on vertices: exactly the pointed interior vertices of T'.
    std::vector<int> cert_vertices;
    for (const CertPair& p : cert.pairs) cert_vertices.push_back(p.vertex);
    std::sort(cert_vertices.begin(), cert_vertices.end());
    if (std::adjacent_find(cert_vertices.begin(), cert_vertices.end()) != cert_vertices.end())
        return fail("a vertex appears in two pairs");
    if (cert_vertices != Tsub.pointed_interior)
        return fail("certificate vertices do not equal the pointed interior set");

    // Incidence.
    for (const CertPair& p : cert.pairs)
        if (p.edge.a != p.vertex && p.edge.b != p.vertex)
            return fail("vertex " + std::to_string(p.vertex) + " is not an endpoint of its edge");

    // Locality: the pair's face is the face holding the vertex's reflex
    // angle, and the edge is a diagonal of that face.
    const auto expect_faces = canonical_faces(Tsub.graph);
    if (cert.faces != expect_faces) return fail("certificate face list is not canonical");
    for (const CertPair& p : cert.pairs) {
        if (p.face < 0 || p.face >= static_cast<int>(cert.faces.size()))
            return fail("face index out of range");
        const auto& cycle = cert.faces[static_cast<std::size_t>(p.face)];
        const auto reflex = reflex_vertices(cycle, ps);
        if (!std::binary_search(reflex.begin(), reflex.end(), p.vertex))
            return fail("vertex " + std::to_string(p.vertex) +
                        " has no reflex angle in its claimed face");
        if (std::find(cycle.begin(), cycle.end(), p.edge.a) == cycle.end() ||
            std::find(cycle.begin(), cycle.end(), p.edge.b) == cycle.end())
            return fail("edge endpoints are not on the claimed face");
        const std::int64_t mx = ps.pt(p.edge.a).x + ps.pt(p.edge.b).x;
        const std::int64_t my = ps.pt(p.edge.a).y + ps.pt(p.edge.b).y;
        if (!doubled_point_in_polygon(mx, my, cycle, ps))
            return fail("edge does not lie inside the claimed face");
    }
    return CertificateCheck{};
}

} // namespace psit
