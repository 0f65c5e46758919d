#include "psit/enumeration.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <future>
#include <set>

namespace psit {

namespace {

using i128 = __int128;

std::vector<std::uint16_t> edge_key(const EdgeList& edges) {
    std::vector<std::uint16_t> key;
    key.reserve(edges.size());
    for (const Edge& e : edges)
        key.push_back(static_cast<std::uint16_t>(e.a * 256 + e.b));
    return key;
}

// ---------------------------------------------------------------------
// Triangulation states for the flip BFS: kept as explicit triangle lists
// so a flip is a constant-size rewrite and no face extraction is needed.
// ---------------------------------------------------------------------

struct Tri {
    int a, b, c;  // CCW
};

EdgeList triangle_edges(const std::vector<Tri>& tris) {
    EdgeList edges;
    edges.reserve(tris.size() * 3);
    for (const Tri& t : tris) {
        edges.emplace_back(t.a, t.b);
        edges.emplace_back(t.b, t.c);
        edges.emplace_back(t.c, t.a);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

// Seed triangulation: fan the hull polygon, then split triangles by
// inserting interior points one at a time.
std::vector<Tri> seed_triangulation(const PointSet& ps) {
    std::vector<Tri> tris;
    const int h = ps.hull_size();
    for (int k = 1; k + 1 < h; ++k)
        tris.push_back(Tri{ps.hull[0], ps.hull[static_cast<std::size_t>(k)],
                           ps.hull[static_cast<std::size_t>(k + 1)]});
    for (int p : ps.interior) {
        bool placed = false;
        for (std::size_t t = 0; t < tris.size(); ++t) {
            const Tri tr = tris[t];
            if (orient(ps.pt(tr.a), ps.pt(tr.b), ps.pt(p)) > 0 &&
                orient(ps.pt(tr.b), ps.pt(tr.c), ps.pt(p)) > 0 &&
                orient(ps.pt(tr.c), ps.pt(tr.a), ps.pt(p)) > 0) {
                tris[t] = Tri{tr.a, tr.b, p};
                tris.push_back(Tri{tr.b, tr.c, p});
                tris.push_back(Tri{tr.c, tr.a, p});
                placed = true;
                break;
            }
        }
        internal_check(placed, "interior point not inside any triangle");
    }
    return tris;
}

} // namespace

std::vector<Triangulation> enumerate_triangulations(PointSetPtr S, int cap) {
    const int n = S->size();
    if (n > cap) throw TooLargeError("enumerate_triangulations", n, cap);

    std::set<std::vector<std::uint16_t>> seen;
    std::deque<std::vector<Tri>> queue;
    {
        auto seed = seed_triangulation(*S);
        seen.insert(edge_key(triangle_edges(seed)));
        queue.push_back(std::move(seed));
    }

    while (!queue.empty()) {
        const std::vector<Tri> tris = std::move(queue.front());
        queue.pop_front();

        // Map each edge to the triangles containing it.
        std::map<Edge, std::vector<int>> at;
        for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
            const Tri& tr = tris[static_cast<std::size_t>(t)];
            at[Edge(tr.a, tr.b)].push_back(t);
            at[Edge(tr.b, tr.c)].push_back(t);
            at[Edge(tr.c, tr.a)].push_back(t);
        }
        for (const auto& [e, owners] : at) {
            if (owners.size() != 2) continue;
            auto apex = [&](const Tri& tr) {
                if (tr.a != e.a && tr.a != e.b) return tr.a;
                if (tr.b != e.a && tr.b != e.b) return tr.b;
                return tr.c;
            };
            const int x = apex(tris[static_cast<std::size_t>(owners[0])]);
            const int y = apex(tris[static_cast<std::size_t>(owners[1])]);
            // Flippable iff the union quadrilateral is convex.
            if (orient(S->pt(x), S->pt(y), S->pt(e.a)) *
                    orient(S->pt(x), S->pt(y), S->pt(e.b)) >= 0)
                continue;
            std::vector<Tri> next = tris;
            auto make_ccw = [&](int p, int q, int r) {
                return orient(S->pt(p), S->pt(q), S->pt(r)) > 0 ? Tri{p, q, r} : Tri{p, r, q};
            };
            next[static_cast<std::size_t>(owners[0])] = make_ccw(x, y, e.a);
            next[static_cast<std::size_t>(owners[1])] = make_ccw(x, y, e.b);
            auto key = edge_key(triangle_edges(next));
            if (seen.insert(std::move(key)).second) queue.push_back(std::move(next));
        }
    }

    std::vector<Triangulation> out;
    out.reserve(seen.size());
    for (const auto& key : seen) {
        EdgeList edges;
        edges.reserve(key.size());
        for (std::uint16_t code : key) edges.emplace_back(code / 256, code % 256);
        out.push_back(as_triangulation(make_plane_graph(S, std::move(edges))));
    }
    return out;
}

std::vector<Triangulation> brute_force_triangulations(PointSetPtr S) {
    const int n = S->size();
    if (n > kBruteForceCap) throw TooLargeError("brute_force_triangulations", n, kBruteForceCap);

    std::vector<Edge> segs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) segs.emplace_back(i, j);
    const int m = static_cast<int>(segs.size());

    // Compatibility: segments that do not cross may coexist. Maximal
    // crossing-free sets are exactly the triangulations, enumerated as
    // maximal cliques of the compatibility graph (Bron-Kerbosch).
    std::vector<std::uint64_t> compat(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (!segments_cross(S->pt(segs[static_cast<std::size_t>(i)].a),
                                S->pt(segs[static_cast<std::size_t>(i)].b),
                                S->pt(segs[static_cast<std::size_t>(j)].a),
                                S->pt(segs[static_cast<std::size_t>(j)].b))) {
                compat[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
                compat[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
            }

    std::vector<std::uint64_t> cliques;
    auto bk = [&](auto&& self, std::uint64_t r, std::uint64_t p, std::uint64_t x) -> void {
        if (p == 0 && x == 0) {
            cliques.push_back(r);
            return;
        }
        const std::uint64_t px = p | x;
        int pivot = -1, best = -1;
        for (std::uint64_t t = px; t;) {
            const int v = std::countr_zero(t);
            t &= t - 1;
            const int cnt = std::popcount(p & compat[static_cast<std::size_t>(v)]);
            if (cnt > best) best = cnt, pivot = v;
        }
        std::uint64_t cand = p & ~compat[static_cast<std::size_t>(pivot)];
        while (cand) {
            const int v = std::countr_zero(cand);
            const std::uint64_t bit = std::uint64_t{1} << v;
            cand &= cand - 1;
            self(self, r | bit, p & compat[static_cast<std::size_t>(v)],
                 x & compat[static_cast<std::size_t>(v)]);
            p &= ~bit;
            x |= bit;
        }
    };
    bk(bk, 0, m == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1), 0);

    std::set<std::vector<std::uint16_t>> seen;
    for (std::uint64_t clique : cliques) {
        EdgeList edges;
        for (std::uint64_t t = clique; t;) {
            const int v = std::countr_zero(t);
            t &= t - 1;
            edges.push_back(segs[static_cast<std::size_t>(v)]);
        }
        std::sort(edges.begin(), edges.end());
        PlaneGraph g = make_plane_graph(S, std::move(edges));
        if (classify(g).kind == GraphKind::Triangulation) seen.insert(edge_key(g.edges));
    }
    std::vector<Triangulation> out;
    for (const auto& key : seen) {
        EdgeList edges;
        for (std::uint16_t code : key) edges.emplace_back(code / 256, code % 256);
        out.push_back(as_triangulation(make_plane_graph(S, std::move(edges))));
    }
    return out;
}

// ---------------------------------------------------------------------
// Sub-pseudo-triangulation search. Works on edge indices of the host
// triangulation with a kept-flag array; no allocation on the hot path.
// ---------------------------------------------------------------------

namespace {

struct RawSubPt {
    std::vector<std::uint16_t> key;      // canonical kept-edge key
    std::vector<int> pointed_interior;   // W, sorted
};

class SubPtSearcher {
public:
    explicit SubPtSearcher(const Triangulation& T) : ps_(*T.graph.ps), edges_(T.graph.edges) {
        n_ = ps_.size();
        m_ = static_cast<int>(edges_.size());
        const EdgeList hull = hull_edges(ps_);
        removable_.clear();
        for (int e = 0; e < m_; ++e)
            if (!std::binary_search(hull.begin(), hull.end(), edges_[static_cast<std::size_t>(e)]))
                removable_.push_back(e);

        auto rot_v = ccw_rotation(T.graph);
        rot_.assign(static_cast<std::size_t>(n_), {});
        pos_.assign(static_cast<std::size_t>(n_),
                    std::vector<int>(static_cast<std::size_t>(n_), -1));
        std::map<Edge, int> eidx;
        for (int e = 0; e < m_; ++e) eidx[edges_[static_cast<std::size_t>(e)]] = e;
        for (int v = 0; v < n_; ++v) {
            for (int u : rot_v[static_cast<std::size_t>(v)]) {
                pos_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] =
                    static_cast<int>(rot_[static_cast<std::size_t>(v)].size());
                rot_[static_cast<std::size_t>(v)].push_back({u, eidx[Edge(u, v)]});
            }
        }
        kept_.assign(static_cast<std::size_t>(m_), 1);
        degree_.assign(static_cast<std::size_t>(n_), 0);
        for (const Edge& e : edges_) {
            ++degree_[static_cast<std::size_t>(e.a)];
            ++degree_[static_cast<std::size_t>(e.b)];
        }
        interior_idx_.assign(static_cast<std::size_t>(n_), -1);
        for (int i = 0; i < ps_.interior_size(); ++i)
            interior_idx_[static_cast<std::size_t>(ps_.interior[static_cast<std::size_t>(i)])] = i;
        pointed_.assign(static_cast<std::size_t>(n_), 0);
        stamp_.assign(static_cast<std::size_t>(n_), -1);
        dir_used_.assign(static_cast<std::size_t>(2 * m_), 0);
    }

    const std::vector<int>& removable() const { return removable_; }
    int interior_count() const { return ps_.interior_size(); }

    // Enumerates all valid removed subsets. `allowed_w` limits which
    // interior vertices may become pointed (empty = no limit, mode All).
    std::vector<RawSubPt> run(bool limit_w, std::uint32_t allowed_w, bool exact, std::uint32_t target_w) {
        results_.clear();
        limit_w_ = limit_w;
        allowed_w_ = allowed_w;
        exact_ = exact;
        target_w_ = target_w;
        w_mask_ = 0;
        removed_count_ = 0;
        maybe_record();
        rec(0);
        return std::move(results_);
    }

private:
    void rec(int from) {
        if (removed_count_ == interior_count()) return;
        for (int i = from; i < static_cast<int>(removable_.size()); ++i) {
            const int e = removable_[static_cast<std::size_t>(i)];
            const Edge& ed = edges_[static_cast<std::size_t>(e)];
            if (degree_[static_cast<std::size_t>(ed.a)] <= 2 ||
                degree_[static_cast<std::size_t>(ed.b)] <= 2)
                continue;  // an interior vertex of degree <= 1 can never recover
            // Apply removal.
            kept_[static_cast<std::size_t>(e)] = 0;
            --degree_[static_cast<std::size_t>(ed.a)];
            --degree_[static_cast<std::size_t>(ed.b)];
            ++removed_count_;
            std::uint32_t newly = 0;
            for (int v : {ed.a, ed.b}) {
                const int ii = interior_idx_[static_cast<std::size_t>(v)];
                if (ii >= 0 && !pointed_[static_cast<std::size_t>(v)] && vertex_pointed(v)) {
                    pointed_[static_cast<std::size_t>(v)] = 1;
                    newly |= std::uint32_t{1} << ii;
                }
            }
            w_mask_ |= newly;
            const bool ok = !limit_w_ || (w_mask_ & ~allowed_w_) == 0;
            if (ok) {
                maybe_record();
                rec(i + 1);
            }
            // Undo.
            w_mask_ &= ~newly;
            for (int v : {ed.a, ed.b}) {
                const int ii = interior_idx_[static_cast<std::size_t>(v)];
                if (ii >= 0 && (newly & (std::uint32_t{1} << ii)))
                    pointed_[static_cast<std::size_t>(v)] = 0;
            }
            --removed_count_;
            ++degree_[static_cast<std::size_t>(ed.a)];
            ++degree_[static_cast<std::size_t>(ed.b)];
            kept_[static_cast<std::size_t>(e)] = 1;
        }
    }

    void maybe_record() {
        // A valid candidate must satisfy |D| = |W| (removing an edge must
        // point a vertex, one per edge), so anything else skips the walk.
        if (std::popcount(w_mask_) != removed_count_) return;
        if (exact_ && w_mask_ != target_w_) return;
        if (!faces_valid()) return;
        RawSubPt r;
        for (int e = 0; e < m_; ++e)
            if (kept_[static_cast<std::size_t>(e)])
                r.key.push_back(static_cast<std::uint16_t>(edges_[static_cast<std::size_t>(e)].a * 256 +
                                                           edges_[static_cast<std::size_t>(e)].b));
        for (int v = 0; v < n_; ++v)
            if (interior_idx_[static_cast<std::size_t>(v)] >= 0 &&
                (w_mask_ & (std::uint32_t{1} << interior_idx_[static_cast<std::size_t>(v)])))
                r.pointed_interior.push_back(v);
        results_.push_back(std::move(r));
    }

    bool vertex_pointed(int v) {
        scratch_.clear();
        for (const auto& [u, e] : rot_[static_cast<std::size_t>(v)])
            if (kept_[static_cast<std::size_t>(e)]) scratch_.push_back(u);
        const int d = static_cast<int>(scratch_.size());
        if (d <= 1) return true;
        for (int i = 0; i < d; ++i) {
            const int p = scratch_[static_cast<std::size_t>(i)];
            const int q = scratch_[static_cast<std::size_t>((i + 1) % d)];
            if (orient(ps_.pt(v), ps_.pt(p), ps_.pt(q)) < 0) return true;
        }
        return false;
    }

    bool faces_valid() {
        // Connectivity over kept edges.
        scratch_.clear();
        ++walk_id_;
        scratch_.push_back(0);
        stamp_[0] = walk_id_;
        int reached = 1;
        while (!scratch_.empty()) {
            const int v = scratch_.back();
            scratch_.pop_back();
            for (const auto& [u, e] : rot_[static_cast<std::size_t>(v)])
                if (kept_[static_cast<std::size_t>(e)] && stamp_[static_cast<std::size_t>(u)] != walk_id_) {
                    stamp_[static_cast<std::size_t>(u)] = walk_id_;
                    ++reached;
                    scratch_.push_back(u);
                }
        }
        if (reached != n_) return false;

        // Face walk. Directed edge (u -> v) has id 2e + (u == edge.a ? 0 : 1).
        std::fill(dir_used_.begin(), dir_used_.end(), 0);
        int outer_seen = 0;
        for (int e0 = 0; e0 < m_; ++e0) {
            if (!kept_[static_cast<std::size_t>(e0)]) continue;
            for (int side = 0; side < 2; ++side) {
                if (dir_used_[static_cast<std::size_t>(2 * e0 + side)]) continue;
                cycle_.clear();
                int u = side == 0 ? edges_[static_cast<std::size_t>(e0)].a
                                  : edges_[static_cast<std::size_t>(e0)].b;
                int v = side == 0 ? edges_[static_cast<std::size_t>(e0)].b
                                  : edges_[static_cast<std::size_t>(e0)].a;
                int e = e0;
                do {
                    dir_used_[static_cast<std::size_t>(
                        2 * e + (u == edges_[static_cast<std::size_t>(e)].a ? 0 : 1))] = 1;
                    cycle_.push_back(u);
                    // Around v, scan clockwise from u to the next kept edge.
                    const auto& rv = rot_[static_cast<std::size_t>(v)];
                    const int deg = static_cast<int>(rv.size());
                    int k = pos_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
                    for (;;) {
                        k = (k - 1 + deg) % deg;
                        if (kept_[static_cast<std::size_t>(rv[static_cast<std::size_t>(k)].second)]) break;
                    }
                    u = v;
                    v = rv[static_cast<std::size_t>(k)].first;
                    e = rv[static_cast<std::size_t>(k)].second;
                } while (!(e == e0 &&
                           ((u == edges_[static_cast<std::size_t>(e0)].a) == (side == 0))));

                // Orientation and shape of this face.
                i128 area = 0;
                const int len = static_cast<int>(cycle_.size());
                for (int i = 0; i < len; ++i) {
                    const Point& p = ps_.pt(cycle_[static_cast<std::size_t>(i)]);
                    const Point& q = ps_.pt(cycle_[static_cast<std::size_t>((i + 1) % len)]);
                    area += i128{p.x} * q.y - i128{q.x} * p.y;
                }
                if (area < 0) {
                    ++outer_seen;
                    if (outer_seen > 1) return false;
                    continue;
                }
                if (area == 0) return false;  // degenerate walk (bridge-only)
                ++walk_id_;
                for (int i = 0; i < len; ++i) {
                    const int w = cycle_[static_cast<std::size_t>(i)];
                    if (stamp_[static_cast<std::size_t>(w)] == walk_id_) return false;  // pinched
                    stamp_[static_cast<std::size_t>(w)] = walk_id_;
                }
                int corners = 0;
                for (int i = 0; i < len; ++i) {
                    const Point& a = ps_.pt(cycle_[static_cast<std::size_t>((i + len - 1) % len)]);
                    const Point& b = ps_.pt(cycle_[static_cast<std::size_t>(i)]);
                    const Point& c = ps_.pt(cycle_[static_cast<std::size_t>((i + 1) % len)]);
                    if (orient(a, b, c) > 0) ++corners;
                }
                if (corners != 3) return false;
            }
        }
        return outer_seen == 1;
    }

    const PointSet& ps_;
    EdgeList edges_;
    int n_ = 0, m_ = 0;
    std::vector<int> removable_;
    std::vector<std::vector<std::pair<int, int>>> rot_;  // (neighbor, edge index), CCW
    std::vector<std::vector<int>> pos_;
    std::vector<char> kept_;
    std::vector<int> degree_;
    std::vector<int> interior_idx_;
    std::vector<char> pointed_;
    std::uint32_t w_mask_ = 0;
    int removed_count_ = 0;
    bool limit_w_ = false, exact_ = false;
    std::uint32_t allowed_w_ = 0, target_w_ = 0;
    std::vector<RawSubPt> results_;

    // walk scratch
    std::vector<int> scratch_, cycle_;
    std::vector<int> stamp_;
    int walk_id_ = 0;
    std::vector<char> dir_used_;
};

std::vector<RawSubPt> raw_sub_pts(const Triangulation& T, SubPtMode mode) {
    SubPtSearcher s(T);
    if (static_cast<int>(s.removable().size()) > kSubPtEdgeCap)
        throw TooLargeError("enumerate_sub_pts (removable edges)",
                            static_cast<long long>(s.removable().size()), kSubPtEdgeCap);
    if (mode == SubPtMode::All) return s.run(false, 0, false, 0);
    const std::uint32_t all_w =
        T.graph.ps->interior_size() == 0
            ? 0
            : (std::uint32_t{1} << T.graph.ps->interior_size()) - 1;
    return s.run(true, all_w, true, all_w);
}

PseudoTriangulation materialize(const PointSetPtr& S, const RawSubPt& raw) {
    EdgeList edges;
    edges.reserve(raw.key.size());
    for (std::uint16_t code : raw.key) edges.emplace_back(code / 256, code % 256);
    PseudoTriangulation pt = as_pseudo_triangulation(make_plane_graph(S, std::move(edges)));
    internal_check(pt.pointed_interior == raw.pointed_interior,
                   "search and classifier disagree on W");
    return pt;
}

std::uint32_t w_to_mask(const PointSet& ps, const std::vector<int>& W) {
    std::uint32_t mask = 0;
    for (int v : W) {
        const auto it = std::lower_bound(ps.interior.begin(), ps.interior.end(), v);
        if (it == ps.interior.end() || *it != v)
            throw InvalidWError("vertex " + std::to_string(v) + " is not an interior vertex");
        mask |= std::uint32_t{1} << (it - ps.interior.begin());
    }
    return mask;
}

} // namespace

std::vector<PseudoTriangulation> enumerate_sub_pts(const Triangulation& T, SubPtMode mode) {
    std::vector<PseudoTriangulation> out;
    for (const RawSubPt& raw : raw_sub_pts(T, mode)) out.push_back(materialize(T.graph.ps, raw));
    std::sort(out.begin(), out.end(),
              [](const PseudoTriangulation& x, const PseudoTriangulation& y) {
                  return x.graph.edges < y.graph.edges;
              });
    return out;
}

std::vector<PseudoTriangulation> enumerate_sub_pts_exact_w(const Triangulation& T,
                                                           const std::vector<int>& W) {
    SubPtSearcher s(T);
    if (static_cast<int>(s.removable().size()) > kSubPtEdgeCap)
        throw TooLargeError("enumerate_sub_pts (removable edges)",
                            static_cast<long long>(s.removable().size()), kSubPtEdgeCap);
    const std::uint32_t mask = w_to_mask(*T.graph.ps, W);
    std::vector<PseudoTriangulation> out;
    for (const RawSubPt& raw : s.run(true, mask, true, mask))
        out.push_back(materialize(T.graph.ps, raw));
    std::sort(out.begin(), out.end(),
              [](const PseudoTriangulation& x, const PseudoTriangulation& y) {
                  return x.graph.edges < y.graph.edges;
              });
    return out;
}

namespace {

// Deduplicated raw enumeration across all triangulations of S.
std::map<std::vector<std::uint16_t>, std::vector<int>> all_raw_pts(const PointSetPtr& S,
                                                                   int threads) {
    auto tris = enumerate_triangulations(S, kCensusCap);
    std::map<std::vector<std::uint16_t>, std::vector<int>> unique;

    auto work = [&](std::size_t begin, std::size_t end) {
        std::vector<RawSubPt> local;
        for (std::size_t t = begin; t < end; ++t)
            for (RawSubPt& raw : raw_sub_pts(tris[t], SubPtMode::All))
                local.push_back(std::move(raw));
        return local;
    };

    if (threads <= 1 || tris.size() < 2) {
        for (RawSubPt& raw : work(0, tris.size()))
            unique.emplace(std::move(raw.key), std::move(raw.pointed_interior));
    } else {
        const std::size_t nw = std::min<std::size_t>(static_cast<std::size_t>(threads), tris.size());
        std::vector<std::future<std::vector<RawSubPt>>> futs;
        for (std::size_t w = 0; w < nw; ++w) {
            const std::size_t b = tris.size() * w / nw;
            const std::size_t e = tris.size() * (w + 1) / nw;
            futs.push_back(std::async(std::launch::async, work, b, e));
        }
        // Merge in worker order; the map makes the result order-independent.
        for (auto& f : futs)
            for (RawSubPt& raw : f.get())
                unique.emplace(std::move(raw.key), std::move(raw.pointed_interior));
    }
    return unique;
}

} // namespace

std::vector<PseudoTriangulation> all_pseudo_triangulations(PointSetPtr S, SubPtMode mode,
                                                           int threads) {
    const int n = S->size();
    if (n > kCensusCap) throw TooLargeError("all_pseudo_triangulations", n, kCensusCap);
    std::vector<PseudoTriangulation> out;
    for (const auto& [key, w] : all_raw_pts(S, threads)) {
        if (mode == SubPtMode::Pointed && static_cast<int>(w.size()) != S->interior_size())
            continue;
        RawSubPt raw{key, w};
        out.push_back(materialize(S, raw));
    }
    return out;  // map iteration order is already canonical
}

PTCensus census(PointSetPtr S, int threads) {
    const int n = S->size();
    if (n > kCensusCap) throw TooLargeError("census", n, kCensusCap);
    PTCensus c;
    c.n_points = n;
    c.hull = S->hull_size();
    for (const auto& [key, w] : all_raw_pts(S, threads)) {
        c.total += 1;
        c.by_pointed_count[static_cast<int>(w.size())] += 1;
        c.by_exact_w[w] += 1;
    }
    c.tri_total = c.by_pointed_count.count(0) ? c.by_pointed_count.at(0) : BigCount(0);
    const int ni = S->interior_size();
    c.pointed_total = c.by_pointed_count.count(ni) ? c.by_pointed_count.at(ni) : BigCount(0);
    return c;
}

BigCount count_pt_W(PointSetPtr S, const std::vector<int>& W) {
    const int n = S->size();
    if (n > kCensusCap) throw TooLargeError("count_pt_W", n, kCensusCap);
    std::vector<int> w = W;
    std::sort(w.begin(), w.end());
    w_to_mask(*S, w);  // validates W against the interior set
    const PTCensus c = census(S);
    const auto it = c.by_exact_w.find(w);
    return it == c.by_exact_w.end() ? BigCount(0) : it->second;
}

} // namespace psit
