#pragma once

// Exhaustive enumeration and exact counting: triangulations of a point
// set, pseudo-triangulations contained in a fixed triangulation, and the
// full census tr / pt / ppt / pt_W. Everything here is exact; counts are
// big integers and results are canonically sorted so that thread counts
// and processing order never change observable output.

#include <map>
#include <vector>

#include "psit/numeric.hpp"
#include "psit/plane_graph.hpp"

namespace psit {

inline constexpr int kFlipEnumCap = 12;     // max N for flip-graph BFS
inline constexpr int kBruteForceCap = 8;    // max N for the maximal-set oracle
inline constexpr int kCensusCap = 10;       // max N for the full census
inline constexpr int kSubPtEdgeCap = 24;    // max removable edges per triangulation

enum class SubPtMode { All, Pointed };

struct PTCensus {
    int n_points = 0;
    int hull = 0;
    BigCount total = 0;
    BigCount pointed_total = 0;
    BigCount tri_total = 0;
    std::map<int, BigCount> by_pointed_count;              // |W| -> count
    std::map<std::vector<int>, BigCount> by_exact_w;       // sorted W -> count
};

// All triangulations of S, by breadth-first traversal of the edge-flip
// graph from an incremental seed, deduplicated on canonical edge lists and
// returned in canonical order.
std::vector<Triangulation> enumerate_triangulations(PointSetPtr S, int cap = kFlipEnumCap);

// Independent oracle: enumerates the maximal crossing-free edge subsets
// over all point pairs and keeps those classifying as triangulations.
std::vector<Triangulation> brute_force_triangulations(PointSetPtr S);

// All subgraphs of T that keep the hull edges and classify as
// pseudo-triangulations, searched over removed-edge subsets D with
// |D| <= n and pointedness/degree pruning.
std::vector<PseudoTriangulation> enumerate_sub_pts(const Triangulation& T, SubPtMode mode);
std::vector<PseudoTriangulation> enumerate_sub_pts_exact_w(const Triangulation& T,
                                                           const std::vector<int>& W);

// Union of contained pseudo-triangulations over all triangulations of S,
// globally deduplicated (every pseudo-triangulation extends to at least
// one triangulation, so this is the complete list).
std::vector<PseudoTriangulation> all_pseudo_triangulations(PointSetPtr S,
                                                           SubPtMode mode = SubPtMode::All,
                                                           int threads = 1);

PTCensus census(PointSetPtr S, int threads = 1);

// Number of pseudo-triangulations of S whose pointed interior set is
// exactly W.
BigCount count_pt_W(PointSetPtr S, const std::vector<int>& W);

} // namespace psit
