#pragma once

// Dual-feasibility certification for the outdegree-1 orientation bound.
// Verifies the candidate multiplier triple against the full constraint
// family: a weak majorant gives a finite cutoff in i, a per-pair majorant
// gives the finite (i,j) list, a root analysis caps the degree entries,
// and the surviving finite family is evaluated exhaustively in extended
// precision (30 or 50 significant digits).

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "psit/numeric.hpp"
#include "psit/plane_graph.hpp"

namespace psit {

// The reduction's sign conditions are guaranteed for valid inputs; a
// failure falsifies the finite reduction and is reported loudly.
struct SignCheckFailedError : Error {
    using Error::Error;
};

struct Signature {
    int i = 0, j = 0;
    std::vector<int> A, B;  // sorted; |A| = i-1, |B| = j-1
    friend auto operator<=>(const Signature&, const Signature&) = default;
};

// Validates and canonicalizes (i <= j, sorted entries, A <= B on ties).
Signature make_signature(int i, int j, std::vector<int> A, std::vector<int> B);
bool in_lp_domain(const Signature& s);
std::string signature_to_string(const Signature& s);

struct DualCandidate {
    double lambda1 = 0, lambda2 = 0, lambda3 = 0;
};

// (0, .50906817, .39507190)
DualCandidate reference_dual_candidate();

// 1 - 1/(i*j*sqrt(prod(1-1/(i*a)) * prod(1-1/(j*b)))), in (0,1) on the LP
// domain.
double p_ij(const Signature& s, int digits = 30);

// Left-hand side of the dual constraint for one signature; feasibility
// means value <= 0 up to the tolerance.
double constraint_value(const Signature& s, const DualCandidate& lam, int digits = 30);

// Entry-free majorant of the constraint in i alone (worst-case entries 5,
// partner term majorized by log(3)/3). Negative means every constraint
// with this i is satisfied.
double weak_bound(int i, const DualCandidate& lam);

// Same majorant with log(3)/3 replaced by log(j)/j; nonnegative pairs
// survive the reduction.
double pair_bound(int i, int j, const DualCandidate& lam);

// All pairs 3 <= i <= j < cutoff whose pair_bound is nonnegative.
std::vector<std::pair<int, int>> derive_pair_list(const DualCandidate& lam, int cutoff = 38);

// The 104 surviving pairs for the reference candidate, embedded verbatim
// as anti-drift ground truth.
const std::vector<std::pair<int, int>>& embedded_pair_list();

// Set equality against the embedded list (order-insensitive).
bool matches_embedded_pair_list(const std::vector<std::pair<int, int>>& pairs);

struct RootAnalysis {
    int i = 0, j = 0;
    double x_min = 0;
    double a0 = 0;     // root of the rational term: exp(1 + 4*lambda2/3)
    double a_dip = 0;  // its lone dip: exp(3/2 + 4*lambda2/3)
    double root = 0;   // unique zero of the full derivative left of a_dip
    int a_max_bound = 0;  // smallest integer strictly above the root
};

// Bounds the entries of A for the pair (i, j) by locating where the
// constraint stops growing in a single entry, at the extreme X = X_min.
RootAnalysis root_analysis(int i, int j, const DualCandidate& lam);

struct ConstraintReport {
    Signature signature;
    double value = 0;
    double slack = 0;
    bool satisfied = false;
};

ConstraintReport evaluate_constraint(const Signature& s, const DualCandidate& lam,
                                     double tol = 1e-8, int digits = 30);

struct FeasibilityReport {
    bool feasible = false;
    bool cutoff_found = false;
    int cutoff = -1;
    int digits = 30;
    double tol = 1e-8;
    double objective = 0;
    double growth_base = 0;
    double max_value = 0;  // largest constraint LHS seen
    double min_slack = 0;  // -max_value
    long long n_constraints_checked = 0;
    Signature worst_signature;
    int entry_cap = 0;
    bool monotone_low_entries_ok = false;
    bool pair_list_matches_embedded = false;  // checked for the reference candidate
    std::vector<std::pair<int, int>> pair_list;
    std::string note;
};

// Runs the whole pipeline: cutoff scan over [3, 200], pair list, root
// analyses (both orientations of each pair), exhaustive evaluation over
// entry multisets up to the derived cap, and low-entry spot checks.
FeasibilityReport verify_candidate(const DualCandidate& lam, double tol = 1e-8, int digits = 30);

struct SignatureCensusEntry {
    Signature signature;
    bool lp_domain = false;
    long long count = 0;
};

struct SignatureCensus {
    int n_points = 0;
    int n_edges = 0;
    std::vector<SignatureCensusEntry> entries;  // sorted by signature
};

// Signature of every edge's 2-extension in T: (deg u, deg v, degrees of
// u's other neighbors, degrees of v's other neighbors).
SignatureCensus extract_signatures(const Triangulation& T);

} // namespace psit
