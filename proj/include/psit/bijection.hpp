#pragma once

// Certificates pairing the edges removed from a triangulation with the
// vertices that became pointed, localized per pseudo-triangle: each
// removed edge is a diagonal of the face holding its vertex's reflex
// angle. Certificates are built by bipartite matching and re-verified
// independently of how they were produced.

#include <string>
#include <vector>

#include "psit/plane_graph.hpp"

namespace psit {

// Raised when a per-face perfect matching does not exist. For a valid
// (triangulation, contained pseudo-triangulation) pair this must never
// happen; seeing it means a bug upstream, not bad input.
struct NoMatchingError : InternalError {
    using InternalError::InternalError;
};

struct CertPair {
    Edge edge;
    int vertex = -1;
    int face = -1;  // index into BijectionCertificate::faces
    friend bool operator==(const CertPair&, const CertPair&) = default;
};

struct BijectionCertificate {
    std::vector<CertPair> pairs;              // sorted by (face, vertex)
    std::vector<std::vector<int>> faces;      // canonical bounded faces of the sub-PT
    std::vector<std::vector<int>> face_reflex;      // reflex vertices per face
    std::vector<EdgeList> face_diagonals;           // removed edges per face
};

// Edges of T missing from T'. Throws NotContainedError unless T' is an
// edge-subset of T over the same point set.
EdgeList removed_edges(const Triangulation& T, const PseudoTriangulation& Tsub);

BijectionCertificate build_certificate(const Triangulation& T, const PseudoTriangulation& Tsub);

struct CertificateCheck {
    bool ok = true;
    std::string violation;
};

// Re-checks bijection, incidence and locality from scratch.
CertificateCheck verify_certificate(const BijectionCertificate& cert, const Triangulation& T,
                                    const PseudoTriangulation& Tsub);

// Bounded faces in a canonical order: each cycle rotated to start at its
// smallest vertex, cycles sorted lexicographically.
std::vector<std::vector<int>> canonical_faces(const PlaneGraph& g);

// Exact test: is the (doubled-coordinate) point strictly inside the
// polygon given by the cycle? Used to assign removed edges to faces by
// their midpoints.
bool doubled_point_in_polygon(std::int64_t x2, std::int64_t y2, const std::vector<int>& cycle,
                              const PointSet& ps);

} // namespace psit
