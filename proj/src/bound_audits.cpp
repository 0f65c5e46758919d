#include "psit/bound_audits.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>

namespace psit {

namespace {

BigCount big_pow(BigCount base, int exp) {
    BigCount out = 1;
    for (int k = 0; k < exp; ++k) out *= base;
    return out;
}

int degree3_interior_count(const Triangulation& T) {
    int cnt = 0;
    for (int v : T.graph.ps->interior)
        if (T.degrees[static_cast<std::size_t>(v)] == 3) ++cnt;
    return cnt;
}

BigCount pt_of_single(const PTCensus& c, int v) {
    const auto it = c.by_exact_w.find(std::vector<int>{v});
    return it == c.by_exact_w.end() ? BigCount(0) : it->second;
}

} // namespace

AuditReport audit_removal_step_bound(PointSetPtr S) {
    if (S->size() > 8) throw TooLargeError("audit_removal_step_bound", S->size(), 8);
    AuditReport rep;
    rep.id = "removal-step";
    const PTCensus c = census(S);
    const auto& interior = S->interior;
    const int n = static_cast<int>(interior.size());

    auto count_of = [&](const std::vector<int>& w) {
        const auto it = c.by_exact_w.find(w);
        return it == c.by_exact_w.end() ? BigCount(0) : it->second;
    };

    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        std::vector<int> w;
        for (int k = 0; k < n; ++k)
            if (mask & (std::uint32_t{1} << k)) w.push_back(interior[static_cast<std::size_t>(k)]);
        const BigCount with = count_of(w);
        for (int v : w) {
            std::vector<int> without = w;
            without.erase(std::find(without.begin(), without.end(), v));
            ++rep.instances_tested;
            if (with > 3 * count_of(without)) {
                rep.all_passed = false;
                rep.notes.push_back("violated at W of size " + std::to_string(w.size()) +
                                    " removing vertex " + std::to_string(v));
            }
        }
    }
    return rep;
}

AuditReport audit_pt_total_bound(PointSetPtr S) {
    if (S->size() > kCensusCap) throw TooLargeError("audit_pt_total_bound", S->size(), kCensusCap);
    AuditReport rep;
    rep.id = "pt-vs-tr";
    const PTCensus c = census(S);
    rep.instances_tested = 1;

    BigCount sum = 0;
    for (const auto& [w, cnt] : c.by_exact_w) sum += cnt;
    if (sum != c.total) {
        rep.all_passed = false;
        rep.notes.push_back("pt(S) does not decompose over exact W sets");
    }
    if (!(c.total < big_pow(4, S->size()) * c.tri_total)) {
        rep.all_passed = false;
        rep.notes.push_back("pt(S) < 4^N tr(S) failed");
    }
    return rep;
}

bool binomial_identity_holds(int N) {
    BigCount sum = 0, binom = 1, pow3 = 1;
    for (int k = 0; k <= N; ++k) {
        sum += binom * pow3;
        binom = binom * (N - k) / (k + 1);
        pow3 *= 3;
    }
    return sum == big_pow(4, N);
}

namespace {

double pow_self(double x) { return x == 0 ? 1.0 : std::pow(x, x); }

} // namespace

double f1_curve(double a) {
    if (a <= 0 || a >= 3) throw BadParameterError("f1 is defined on (0,3)");
    return 27.0 / (pow_self(a) * pow_self(3 - a));
}

double f2_curve(double a) {
    if (a <= 0 || a > 1) throw BadParameterError("f2 is defined on (0,1]");
    return 5.45 / (pow_self(a) * pow_self(1 - a));
}

Crossing solve_crossing() {
    double lo = 0.5, hi = 1.0;
    internal_check(f1_curve(lo) < f2_curve(lo) && f1_curve(hi) > f2_curve(hi),
                   "crossing bracket must straddle the curves");
    for (int it = 0; it < 200; ++it) {
        const double mid = (lo + hi) / 2;
        (f1_curve(mid) < f2_curve(mid) ? lo : hi) = mid;
    }
    Crossing out;
    out.a_star = (lo + hi) / 2;
    out.bound = f1_curve(out.a_star);
    return out;
}

AuditReport audit_single_pointed_bound(PointSetPtr S) {
    if (S->interior.empty()) throw NoInteriorError("point set has no interior vertices");
    if (S->size() > 8) throw TooLargeError("audit_single_pointed_bound", S->size(), 8);
    AuditReport rep;
    rep.id = "single-pointed";
    const PTCensus c = census(S);
    const BigCount n(S->interior_size()), h(S->hull_size());

    // Witness: pt_{v} * 3n < (8n + h) * tr for some interior v.
    int witness = -1;
    for (int v : S->interior) {
        ++rep.instances_tested;
        if (pt_of_single(c, v) * 3 * n < (8 * n + h) * c.tri_total) {
            witness = v;
            break;
        }
    }
    if (witness < 0) {
        rep.all_passed = false;
        rep.notes.push_back("no interior vertex meets the (8/3 + h/(3n)) bound");
    } else {
        rep.notes.push_back("witness vertex " + std::to_string(witness));
    }

    // Every triangulation has fewer than (2n+h)/3 interior degree-3 vertices.
    for (const Triangulation& T : enumerate_triangulations(S, 8)) {
        ++rep.instances_tested;
        if (!(3 * BigCount(degree3_interior_count(T)) < 2 * n + h)) {
            rep.all_passed = false;
            rep.notes.push_back("degree-3 census bound failed on a triangulation");
        }
    }
    return rep;
}

AverageDegree3Report audit_average_degree3_bound(PointSetPtr S) {
    if (S->interior.empty()) throw NoInteriorError("point set has no interior vertices");
    if (S->size() > 8) throw TooLargeError("audit_average_degree3_bound", S->size(), 8);
    AverageDegree3Report out;
    out.report.id = "average-degree3";
    const PTCensus c = census(S);
    const BigCount n(S->interior_size()), h(S->hull_size());

    BigCount deg3_sum = 0, tr_count = 0;
    for (const Triangulation& T : enumerate_triangulations(S, 8)) {
        deg3_sum += degree3_interior_count(T);
        tr_count += 1;
        ++out.report.instances_tested;
    }
    // avg <= (2n + h/2)/5  <=>  10 * sum <= (4n + h) * tr
    out.average_bound_holds = 10 * deg3_sum <= (4 * n + h) * tr_count;

    // some v with pt_v * 10n <= (24n + h) * tr
    for (int v : S->interior)
        if (pt_of_single(c, v) * 10 * n <= (24 * n + h) * c.tri_total) {
            out.existence_bound_holds = true;
            break;
        }

    out.report.notes.push_back(std::string("average bound ") +
                               (out.average_bound_holds ? "holds" : "does not bind at this size"));
    out.report.notes.push_back(std::string("existence bound ") +
                               (out.existence_bound_holds ? "holds" : "does not bind at this size"));
    return out;
}

namespace {

BigRational hull_shrink_product(int n) {
    // product over i = 0..floor(n/6) of (8n/3 - i + 1)/(n - i), kept exact.
    BigRational prod = 1;
    for (int i = 0; i <= n / 6; ++i) {
        internal_check(n - i > 0, "shrink product hit a zero denominator");
        prod *= BigRational(BigCount(8 * n) - 3 * i + 3, BigCount(3) * (n - i));
    }
    return prod;
}

double rational_to_double(const BigRational& q) {
    const Real50 num(boost::multiprecision::numerator(q).str());
    const Real50 den(boost::multiprecision::denominator(q).str());
    return static_cast<double>(num / den);
}

} // namespace

HullShrinkConstants hull_shrink_constants() {
    using boost::multiprecision::exp;
    using boost::multiprecision::log;
    using boost::multiprecision::pow;
    HullShrinkConstants out;
    for (int n : {60, 120, 240, 480}) {
        const BigRational prod = hull_shrink_product(n);
        const Real50 num(boost::multiprecision::numerator(prod).str());
        const Real50 den(boost::multiprecision::denominator(prod).str());
        out.products[n] = prod;
        out.nth_roots[n] = static_cast<double>(exp(log(num / den) / n));
    }
    const Real50 c = pow(Real50(5) / 6, Real50(5) / 6) * pow(Real50(8) / 3, Real50(8) / 3) /
                     pow(Real50(5) / 2, Real50(5) / 2);
    out.limit_constant = static_cast<double>(c);
    out.root_within_1pct_at_480 =
        std::abs(out.nth_roots.at(480) - out.limit_constant) <= 0.01 * out.limit_constant;
    out.with_pointing_factor = static_cast<double>(c * pow(Real50(3), Real50(5) / 6));
    out.pt_bound_base = 4.0 * 30.0;
    out.ppt_bound_base = 2.97 * 30.0;
    return out;
}

AuditReport audit_hull_shrink_inequality(PointSetPtr S) {
    if (S->size() > 8) throw TooLargeError("audit_hull_shrink_inequality", S->size(), 8);
    AuditReport rep;
    rep.id = "hull-shrink";
    rep.instances_tested = 1;
    const PTCensus c = census(S);
    const int n = S->interior_size();

    const double ppt = static_cast<double>(Real50(c.pointed_total.str()));
    const double tr = static_cast<double>(Real50(c.tri_total.str()));
    const double prod = n == 0 ? 1.0 : rational_to_double(hull_shrink_product(n));
    const double bound = prod * std::pow(3.0, 5.0 * n / 6.0) * tr;
    if (!(ppt <= bound)) {
        rep.all_passed = false;
        rep.notes.push_back("ppt exceeds the shrink-product bound");
    }
    return rep;
}

} // namespace psit
