#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "psit/constructions.hpp"
#include "psit/lp_certifier.hpp"

using namespace psit;

TEST_CASE("p_ij hand-computed value") {
    // (3,3,{3,3},{3,3}): inner product (8/9)^4, sqrt (8/9)^2, so
    // 1 - 1/(9 * 64/81) = 1 - 9/64 = 0.859375 exactly.
    const Signature s = make_signature(3, 3, {3, 3}, {3, 3});
    CHECK(std::abs(p_ij(s) - 0.859375) <= 1e-12);
    CHECK(std::abs(p_ij(s, 50) - 0.859375) <= 1e-12);
}

TEST_CASE("p_ij stays in (0,1) on the LP domain") {
    for (const Signature& s :
         {make_signature(3, 4, {6, 4}, {5, 4, 6}), make_signature(3, 3, {3, 3}, {3, 3}),
          make_signature(9, 10, std::vector<int>(8, 5), std::vector<int>(9, 6)),
          make_signature(3, 37, {5, 5}, std::vector<int>(36, 5))}) {
        const double p = p_ij(s);
        CHECK(p > 0);
        CHECK(p < 1);
    }
}

TEST_CASE("signature validation and canonicalization") {
    CHECK_THROWS_AS(make_signature(2, 3, {3}, {3, 3}), BadParameterError);
    CHECK_THROWS_AS(make_signature(3, 3, {3}, {3, 3}), BadParameterError);
    CHECK_THROWS_AS(make_signature(3, 3, {3, 2}, {3, 3}), BadParameterError);
    const Signature s = make_signature(4, 3, {3, 4, 5}, {6, 3});
    CHECK(s.i == 3);
    CHECK(s.j == 4);
    CHECK(s.A == std::vector<int>{3, 6});
    CHECK(s.B == std::vector<int>{3, 4, 5});
}

TEST_CASE("reference candidate satisfies sampled constraints") {
    const DualCandidate lam = reference_dual_candidate();
    CHECK(constraint_value(make_signature(3, 3, {3, 3}, {3, 3}), lam) <= 1e-8);
    CHECK(constraint_value(make_signature(3, 4, {6, 4}, {5, 4, 6}), lam) <= 1e-8);

    const ConstraintReport rep = evaluate_constraint(make_signature(3, 3, {3, 3}, {3, 3}), lam);
    CHECK(rep.satisfied);
    CHECK(rep.slack == -rep.value);
    CHECK(rep.slack > 0);

    // The constraint is linear in lambda3 with coefficient -1.
    DualCandidate hi = lam;
    hi.lambda3 += 1.0;
    const Signature s = make_signature(3, 3, {5, 5}, {5, 5});
    CHECK(std::abs((constraint_value(s, lam) - constraint_value(s, hi)) - 1.0) <= 1e-12);
}

TEST_CASE("weak bound flips sign exactly at 38") {
    const DualCandidate lam = reference_dual_candidate();
    CHECK(weak_bound(37, lam) > 0);
    CHECK(weak_bound(37, lam) == doctest::Approx(8e-5).epsilon(0.5));
    CHECK(weak_bound(38, lam) < 0);
    for (int i = 3; i <= 37; ++i) CHECK(weak_bound(i, lam) > 0);
    for (int i = 38; i <= 200; ++i) CHECK(weak_bound(i, lam) < 0);
    for (int i = 3; i < 60; ++i) CHECK(weak_bound(i + 1, lam) < weak_bound(i, lam));
}

TEST_CASE("derived pair list equals the embedded list") {
    const auto derived = derive_pair_list(reference_dual_candidate());
    CHECK(derived.size() == 104);
    CHECK(embedded_pair_list().size() == 104);
    CHECK(matches_embedded_pair_list(derived));

    auto has = [&](int i, int j) {
        return std::find(derived.begin(), derived.end(), std::make_pair(i, j)) != derived.end();
    };
    CHECK(has(9, 10));
    CHECK_FALSE(has(9, 11));
    CHECK(has(8, 12));
    CHECK_FALSE(has(8, 13));
    CHECK(has(3, 37));
    CHECK_FALSE(has(3, 38));
}

TEST_CASE("root analysis reproduces the dip geometry") {
    const DualCandidate lam = reference_dual_candidate();
    const RootAnalysis first = root_analysis(3, 3, lam);
    CHECK(std::abs(first.a0 - 5.3588) <= 1e-3);
    CHECK(std::abs(first.a_dip - 8.83522) <= 1e-3);
    CHECK(first.a0 < first.a_dip);
    CHECK(first.root < first.a_dip);
    CHECK(first.a_max_bound <= 6);

    for (const auto& [i, j] : embedded_pair_list()) {
        CHECK(root_analysis(i, j, lam).a_max_bound <= 6);
        CHECK(root_analysis(j, i, lam).a_max_bound <= 6);
    }
}

TEST_CASE("full verification of the reference candidate") {
    const FeasibilityReport r30 = verify_candidate(reference_dual_candidate(), 1e-8, 30);
    CHECK(r30.feasible);
    CHECK(r30.cutoff == 38);
    CHECK(r30.pair_list_matches_embedded);
    CHECK(r30.entry_cap == 6);
    CHECK(r30.monotone_low_entries_ok);
    CHECK(std::abs(r30.objective - 1.69428387) <= 5e-9);
    CHECK(r30.growth_base >= 5.43);
    CHECK(r30.growth_base <= 5.45);
    CHECK(r30.max_value <= 1e-8);

    const FeasibilityReport r50 = verify_candidate(reference_dual_candidate(), 1e-8, 50);
    CHECK(r50.feasible);
    CHECK(std::abs(r50.min_slack - r30.min_slack) <= 1e-6);
}

TEST_CASE("perturbed candidate is reported infeasible with a witness") {
    DualCandidate lam = reference_dual_candidate();
    lam.lambda3 -= 0.05;
    const FeasibilityReport rep = verify_candidate(lam, 1e-8, 30);
    CHECK_FALSE(rep.feasible);
    CHECK(rep.max_value > 1e-8);
    CHECK(!rep.worst_signature.A.empty());
    CHECK(!rep.note.empty());
}

TEST_CASE("signature extraction on the centered fan") {
    const Triangulation fan = as_triangulation(make_plane_graph(
        build_triangle_plus_center(),
        {Edge(0, 1), Edge(0, 2), Edge(1, 2), Edge(0, 3), Edge(1, 3), Edge(2, 3)}));
    const SignatureCensus c = extract_signatures(fan);
    long long total = 0;
    bool found_spoke = false;
    for (const auto& e : c.entries) {
        total += e.count;
        if (e.signature == make_signature(3, 3, {3, 3}, {3, 3})) {
            found_spoke = true;
            CHECK(e.lp_domain);
            CHECK(e.count == 6);  // all edges of the fan share this signature
        }
    }
    CHECK(found_spoke);
    CHECK(total == fan.graph.n_edges());
}

TEST_CASE("degenerate signatures are flagged, not evaluated") {
    auto ps = std::make_shared<const PointSet>(validate_point_set({{0, 0}, {10, 0}, {0, 10}}));
    const Triangulation tri =
        as_triangulation(make_plane_graph(ps, {Edge(0, 1), Edge(1, 2), Edge(0, 2)}));
    const SignatureCensus c = extract_signatures(tri);
    REQUIRE(c.entries.size() == 1);
    CHECK(c.entries[0].signature.i == 2);
    CHECK_FALSE(c.entries[0].lp_domain);
    CHECK(c.entries[0].count == 3);
}
