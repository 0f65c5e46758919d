#pragma once

// Numerical and exhaustive audits of the counting inequalities: the
// removal-step bound pt_W <= 3 pt_{W\{v}}, the 4^N separation of pt from
// tr, the two bound curves and their crossing, the single-pointed-vertex
// bounds, and the hull-shrinking product constants.

#include <map>
#include <string>

#include "psit/enumeration.hpp"
#include "psit/numeric.hpp"

namespace psit {

struct NoInteriorError : InputError {
    using InputError::InputError;
};

struct AuditReport {
    std::string id;
    long long instances_tested = 0;
    bool all_passed = true;
    std::vector<std::string> notes;  // witnesses and informational flags
};

// For every W inside the interior set and every v in W:
// pt_W(S) <= 3 * pt_{W\{v}}(S). Exact big-integer comparisons.
AuditReport audit_removal_step_bound(PointSetPtr S);

// pt(S) < 4^N * tr(S), and the decomposition pt(S) = sum over W of pt_W.
AuditReport audit_pt_total_bound(PointSetPtr S);

// sum_k C(N,k) 3^k == 4^N, exactly.
bool binomial_identity_holds(int N);

// The two bound curves, with 0^0 := 1.
double f1_curve(double a);  // 27 / (a^a (3-a)^(3-a)) on (0,3)
double f2_curve(double a);  // 5.45 / (a^a (1-a)^(1-a)) on (0,1]

struct Crossing {
    double a_star = 0;
    double bound = 0;  // value of the curves at the crossing
};

// Bisection on f1 - f2 over (0.5, 1); the maximum of min(f1, f2) sits at
// the crossing.
Crossing solve_crossing();

// Existence of an interior vertex v with
// pt_{v}(S) < (8/3 + h/(3n)) * tr(S), plus the degree-3 census bound
// (fewer than (2n+h)/3 interior degree-3 vertices) on every triangulation.
AuditReport audit_single_pointed_bound(PointSetPtr S);

struct AverageDegree3Report {
    AuditReport report;          // informational: all_passed is always true
    bool average_bound_holds = false;    // avg deg-3 count <= (2n + h/2)/5
    bool existence_bound_holds = false;  // some v with pt_v <= (12/5 + h/(10n)) tr
};

// Informational audit of the sharper single-vertex bound; its input is an
// average-case result that can fail at tiny n, so this reports rather
// than asserts.
AverageDegree3Report audit_average_degree3_bound(PointSetPtr S);

struct HullShrinkConstants {
    std::map<int, BigRational> products;  // n -> exact product over i=0..n/6
    std::map<int, double> nth_roots;      // n -> product^(1/n)
    double limit_constant = 0;            // (5/6)^(5/6) (8/3)^(8/3) / (5/2)^(5/2)
    bool root_within_1pct_at_480 = false;
    double with_pointing_factor = 0;      // limit_constant * 3^(5/6), about 2.97
    double pt_bound_base = 0;              // 4 * 30
    double ppt_bound_base = 0;             // 2.97 * 30
};

HullShrinkConstants hull_shrink_constants();

// End-to-end: ppt(S) <= product(n) * 3^(5n/6) * tr(S), checked numerically
// (n = 0 performs zero shrink steps and the bound degenerates to tr).
AuditReport audit_hull_shrink_inequality(PointSetPtr S);

} // namespace psit
