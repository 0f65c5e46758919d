#include "psit/orientations.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_map>

namespace psit {

namespace {

std::vector<int> choosers_for(const PlaneGraph& g, OrientationScope scope) {
    if (scope == OrientationScope::InteriorVertices) return g.ps->interior;
    std::vector<int> all(static_cast<std::size_t>(g.n_vertices()));
    for (int v = 0; v < g.n_vertices(); ++v) all[static_cast<std::size_t>(v)] = v;
    return all;
}

// Incident edge indices per chooser.
std::vector<std::vector<int>> incident_edges(const PlaneGraph& g, const std::vector<int>& ch) {
    std::vector<int> chooser_slot(static_cast<std::size_t>(g.n_vertices()), -1);
    for (std::size_t i = 0; i < ch.size(); ++i)
        chooser_slot[static_cast<std::size_t>(ch[i])] = static_cast<int>(i);
    std::vector<std::vector<int>> inc(ch.size());
    for (int e = 0; e < g.n_edges(); ++e) {
        const Edge& ed = g.edges[static_cast<std::size_t>(e)];
        for (int v : {ed.a, ed.b}) {
            const int slot = chooser_slot[static_cast<std::size_t>(v)];
            if (slot >= 0) inc[static_cast<std::size_t>(slot)].push_back(e);
        }
    }
    return inc;
}

} // namespace

BigCount count_outdegree1_dfs(const PlaneGraph& g, OrientationScope scope) {
    const auto ch = choosers_for(g, scope);
    const int m = static_cast<int>(ch.size());
    if (m > kDfsChooserCap) throw TooLargeError("count_outdegree1_dfs (choosers)", m, kDfsChooserCap);
    internal_check(g.n_edges() <= 64, "edge mask limited to 64 edges");
    const auto inc = incident_edges(g, ch);

    BigCount total = 0;
    auto rec = [&](auto&& self, int v, std::uint64_t used) -> void {
        if (v == m) {
            total += 1;
            return;
        }
        for (int e : inc[static_cast<std::size_t>(v)]) {
            const std::uint64_t bit = std::uint64_t{1} << e;
            if (used & bit) continue;
            self(self, v + 1, used | bit);
        }
    };
    rec(rec, 0, 0);
    return total;
}

BigCount count_outdegree1_permanent(const PlaneGraph& g, OrientationScope scope) {
    const auto ch = choosers_for(g, scope);
    const int m = static_cast<int>(ch.size());
    if (m > kPermanentChooserCap)
        throw TooLargeError("count_outdegree1_permanent (choosers)", m, kPermanentChooserCap);

    std::vector<int> slot(static_cast<std::size_t>(g.n_vertices()), -1);
    for (int i = 0; i < m; ++i) slot[static_cast<std::size_t>(ch[static_cast<std::size_t>(i)])] = i;

    // Full degree per chooser, plus the chooser-chooser adjacency (only a
    // both-chooser edge can be picked twice).
    std::vector<BigCount> degree(static_cast<std::size_t>(m), 0);
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(m), 0);
    for (const Edge& e : g.edges) {
        const int sa = slot[static_cast<std::size_t>(e.a)];
        const int sb = slot[static_cast<std::size_t>(e.b)];
        if (sa >= 0) degree[static_cast<std::size_t>(sa)] += 1;
        if (sb >= 0) degree[static_cast<std::size_t>(sb)] += 1;
        if (sa >= 0 && sb >= 0) {
            nbr[static_cast<std::size_t>(sa)] |= std::uint32_t{1} << sb;
            nbr[static_cast<std::size_t>(sb)] |= std::uint32_t{1} << sa;
        }
    }

    // Inclusion-exclusion over the sets of edges forced to collide; such a
    // set must be a matching, each pair fixing both endpoint choices.
    std::unordered_map<std::uint32_t, BigCount> memo;
    auto rec = [&](auto&& self, std::uint32_t mask) -> BigCount {
        if (mask == 0) return 1;
        const auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        const int v = std::countr_zero(mask);
        const std::uint32_t rest = mask & (mask - 1);
        BigCount r = degree[static_cast<std::size_t>(v)] * self(self, rest);
        std::uint32_t partners = nbr[static_cast<std::size_t>(v)] & rest;
        while (partners) {
            const int u = std::countr_zero(partners);
            partners &= partners - 1;
            r -= self(self, rest & ~(std::uint32_t{1} << u));
        }
        memo.emplace(mask, r);
        return r;
    };
    const std::uint32_t full = m == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << m) - 1);
    BigCount result = rec(rec, full);
    internal_check(result >= 0, "orientation count must be nonnegative");
    return result;
}

OrientationCensus count_outdegree1(const PlaneGraph& g, OrientationScope scope) {
    const auto ch = choosers_for(g, scope);
    const int m = static_cast<int>(ch.size());
    OrientationCensus out;
    out.scope = scope;
    const auto adj = adjacency(g);
    out.raw_product = 1;
    for (int v : ch) out.raw_product *= static_cast<int>(adj[static_cast<std::size_t>(v)].size());
    out.valid_count = m <= kDfsChooserCap ? count_outdegree1_dfs(g, scope)
                                          : count_outdegree1_permanent(g, scope);
    out.p_nc = out.raw_product == 0 ? BigRational(0)
                                    : BigRational(out.valid_count, out.raw_product);
    return out;
}

DegreeProductBound degree_product_bound(const Triangulation& T) {
    DegreeProductBound out;
    const int n_pts = T.graph.n_vertices();
    for (int v = 0; v < n_pts; ++v) {
        const bool interior = T.graph.ps->is_interior(v);
        const long long d = interior ? T.degrees[static_cast<std::size_t>(v)] : 1;
        out.product *= d;
        out.degree_sum += d;
    }
    // product <= (sum/N)^N, compared exactly as product * N^N <= sum^N.
    BigCount lhs = out.product, rhs = 1, npow = 1;
    for (int i = 0; i < n_pts; ++i) {
        rhs *= out.degree_sum;
        npow *= n_pts;
    }
    lhs *= npow;
    out.product_le_amgm = lhs <= rhs;
    out.amgm_lt_6_pow_n = out.degree_sum < 6LL * n_pts;
    out.amgm_bound = std::pow(static_cast<double>(out.degree_sum) / n_pts, n_pts);
    return out;
}

PncEstimate estimate_pnc(const PlaneGraph& g, OrientationScope scope, long long samples,
                         std::uint64_t seed) {
    if (samples < 1) throw BadParameterError("estimate_pnc needs at least one sample");
    const auto ch = choosers_for(g, scope);
    const auto inc = incident_edges(g, ch);
    for (const auto& edges : inc)
        if (edges.empty()) throw IsolatedVertexError("a choosing vertex has no incident edge");

    constexpr long long kBatch = 4096;
    long long hits = 0;
    std::vector<char> used(static_cast<std::size_t>(g.n_edges()));
    for (long long batch = 0, done = 0; done < samples; ++batch) {
        std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(batch + 1));
        const long long todo = std::min(kBatch, samples - done);
        for (long long s = 0; s < todo; ++s) {
            std::fill(used.begin(), used.end(), 0);
            bool ok = true;
            for (const auto& edges : inc) {
                const std::size_t pick = static_cast<std::size_t>(
                    rng() % static_cast<std::uint64_t>(edges.size()));
                const int e = edges[pick];
                if (used[static_cast<std::size_t>(e)]) {
                    ok = false;
                    break;
                }
                used[static_cast<std::size_t>(e)] = 1;
            }
            if (ok) ++hits;
        }
        done += todo;
    }
    PncEstimate out;
    out.samples = samples;
    out.estimate = static_cast<double>(hits) / static_cast<double>(samples);
    out.std_error = std::sqrt(std::max(out.estimate * (1 - out.estimate), 0.0) /
                              static_cast<double>(samples));
    return out;
}

} // namespace psit
