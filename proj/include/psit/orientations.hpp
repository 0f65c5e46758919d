#pragma once

// Outdegree-1 orientation counting: each choosing vertex picks one
// incident edge, and a choice is valid when no edge is picked from both
// ends (an edge picked twice is exactly a 2-cycle, so injectivity on
// edges is the whole condition). Two independent exact engines are kept
// as mutual oracles, plus a seeded Monte Carlo estimator.

#include <cstdint>

#include "psit/numeric.hpp"
#include "psit/plane_graph.hpp"

namespace psit {

inline constexpr int kDfsChooserCap = 22;
inline constexpr int kPermanentChooserCap = 30;

enum class OrientationScope { AllVertices, InteriorVertices };

struct OrientationCensus {
    OrientationScope scope = OrientationScope::AllVertices;
    BigCount raw_product = 0;  // product of chooser degrees
    BigCount valid_count = 0;  // injective choice maps
    BigRational p_nc = 0;      // valid_count / raw_product
};

// Exact count via depth-first assignment with a used-edge mask. Chooser
// count capped at kDfsChooserCap.
BigCount count_outdegree1_dfs(const PlaneGraph& g, OrientationScope scope);

// Exact count via the alternating-sign expansion of the vertex-edge
// incidence structure: because an edge column has at most two ones, the
// permanent reduces to a signed sum over matchings of forced collisions.
// Chooser count capped at kPermanentChooserCap.
BigCount count_outdegree1_permanent(const PlaneGraph& g, OrientationScope scope);

// Full census; picks the DFS engine when it fits, the permanent engine
// otherwise, and refuses beyond kPermanentChooserCap.
OrientationCensus count_outdegree1(const PlaneGraph& g, OrientationScope scope);

struct DegreeProductBound {
    BigCount product = 1;      // interior degrees; hull degrees replaced by 1
    long long degree_sum = 0;  // same convention
    double amgm_bound = 0;     // (degree_sum / N)^N
    bool product_le_amgm = false;  // exact comparison product*N^N <= sum^N
    bool amgm_lt_6_pow_n = false;  // exact comparison degree_sum < 6N
};

DegreeProductBound degree_product_bound(const Triangulation& T);

struct PncEstimate {
    double estimate = 0;
    double std_error = 0;
    long long samples = 0;
};

// Monte Carlo estimate of the no-collision probability with deterministic
// per-batch seeding: results depend only on (seed, samples).
PncEstimate estimate_pnc(const PlaneGraph& g, OrientationScope scope, long long samples,
                         std::uint64_t seed);

} // namespace psit
