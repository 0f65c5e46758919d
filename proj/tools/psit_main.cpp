// psit: enumeration, counting and certification for pseudo-triangulations
// of planar point sets.
//
// Exit codes: 0 success, 1 audit/feasibility failure, 2 input error,
// 3 size cap exceeded.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "psit/cache.hpp"
#include "psit/constructions.hpp"
#include "psit/io.hpp"
#include "psit/svg.hpp"

namespace {

using namespace psit;

struct GlobalOpts {
    std::string out_path;
    std::string cache_dir;
    bool no_cache = false;
    bool json = false;  // output is always machine-readable; kept for compatibility
    int threads = 1;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(g.out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write '" + g.out_path + "'");
    out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Cache make_cache(const GlobalOpts& g) {
    std::filesystem::path dir;
    if (!g.cache_dir.empty()) {
        dir = g.cache_dir;
    } else if (const char* env = std::getenv("PSIT_CACHE_DIR")) {
        dir = env;
    } else {
        dir = std::filesystem::path(".psit-cache");
    }
    return Cache(dir, !g.no_cache);
}

// Runs compute() unless the cache already holds the report for this key.
std::string cached_report(const GlobalOpts& g, const std::vector<std::string>& key_parts,
                          const std::function<std::string()>& compute) {
    const Cache cache = make_cache(g);
    const std::string key = cache_key(key_parts);
    if (auto hit = cache.get(key)) return *hit;
    std::string fresh = compute();
    cache.put(key, fresh);
    return fresh;
}

Triangulation load_triangulation(const std::string& path) {
    const PlaneGraph g = graph_from_json(Json::parse(read_file(path)));
    if (classify(g).kind != GraphKind::Triangulation)
        throw InputError("'" + path + "' does not describe a triangulation");
    return as_triangulation(g);
}

PseudoTriangulation load_sub_pt(const std::string& path) {
    const PlaneGraph g = graph_from_json(Json::parse(read_file(path)));
    if (classify(g).kind == GraphKind::NotPT)
        throw InputError("'" + path + "' does not describe a pseudo-triangulation");
    return as_pseudo_triangulation(g);
}

int run(int argc, char** argv) {
    CLI::App app{"pseudo-triangulation enumeration and certification toolkit"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--out", g.out_path, "write the report to this file instead of stdout");
    app.add_option("--cache-dir", g.cache_dir,
                   "cache directory (default: $PSIT_CACHE_DIR or ./.psit-cache)");
    app.add_flag("--no-cache", g.no_cache, "bypass the report cache");
    app.add_flag("--json", g.json, "force machine output (reports are JSON already)");
    app.add_option("--threads", g.threads, "worker bound for enumeration")
        ->check(CLI::Range(1, 64));

    int exit_code = 0;

    // ---- points validate ----
    auto* points = app.add_subcommand("points", "point-set utilities");
    auto* validate = points->add_subcommand("validate", "parse and validate a point-set file");
    std::string points_file;
    validate->add_option("file", points_file, "point-set text file")->required();
    validate->callback([&] {
        const PointSet ps = parse_points_text(read_file(points_file));
        Json j;
        j["valid"] = true;
        j["n_points"] = ps.size();
        j["hull"] = ps.hull;
        j["interior"] = ps.interior;
        emit(g, dump(j));
    });

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate named point configurations");
    gen->require_subcommand(1);
    int gen_n = 6, gen_k = 3;
    auto* gen_tn = gen->add_subcommand("tn", "chain-with-apex set on n+1 points");
    gen_tn->add_option("--n", gen_n, "chain length")->required();
    gen_tn->callback([&] { emit(g, points_to_text(*build_TN(gen_n).first)); });
    auto* gen_convex = gen->add_subcommand("convex", "convex position set");
    gen_convex->add_option("--n", gen_n, "number of points")->required();
    gen_convex->callback([&] { emit(g, points_to_text(*build_convex(gen_n))); });
    auto* gen_dc = gen->add_subcommand("doublechain", "two opposing concave chains");
    gen_dc->add_option("--k", gen_k, "points per chain")->required();
    gen_dc->callback([&] { emit(g, points_to_text(*build_double_chain(gen_k))); });
    auto* gen_tc = gen->add_subcommand("trianglecenter", "triangle with one interior point");
    gen_tc->callback([&] { emit(g, points_to_text(*build_triangle_plus_center())); });

    // ---- enumerate ----
    auto* enumerate = app.add_subcommand("enumerate", "triangulations / census of a point set");
    std::string enum_input;
    bool enum_brute = false, enum_census = false, enum_list = false;
    enumerate->add_option("--input", enum_input, "point-set text file")->required();
    enumerate->add_flag("--brute", enum_brute, "use the maximal-set oracle enumerator");
    enumerate->add_flag("--census", enum_census, "emit the full pt_W census");
    enumerate->add_flag("--list", enum_list, "include edge lists in the report");
    enumerate->callback([&] {
        const std::string text = read_file(enum_input);
        const std::string report = cached_report(
            g,
            {"enumerate", text, enum_brute ? "brute" : "flip", enum_census ? "census" : "tri",
             enum_list ? "list" : "count"},
            [&] {
                auto ps = std::make_shared<const PointSet>(parse_points_text(text));
                if (enum_census) return dump(census_to_json(census(ps, g.threads)));
                const auto tris =
                    enum_brute ? brute_force_triangulations(ps) : enumerate_triangulations(ps);
                Json j;
                j["n_points"] = ps->size();
                j["count"] = std::to_string(tris.size());
                if (enum_list) {
                    Json list = Json::array();
                    for (const auto& t : tris) {
                        Json edges = Json::array();
                        for (const Edge& e : t.graph.edges) edges.push_back({e.a, e.b});
                        list.push_back(std::move(edges));
                    }
                    j["triangulations"] = std::move(list);
                }
                return dump(j);
            });
        emit(g, report);
    });

    // ---- subpt ----
    auto* subpt = app.add_subcommand("subpt", "pseudo-triangulations contained in a triangulation");
    std::string subpt_tri, subpt_mode = "all";
    bool subpt_list = false;
    subpt->add_option("--tri", subpt_tri, "triangulation graph JSON")->required();
    subpt->add_option("--mode", subpt_mode, "all | pointed")
        ->check(CLI::IsMember({"all", "pointed"}));
    subpt->add_flag("--list", subpt_list, "include edge lists in the report");
    subpt->callback([&] {
        const std::string text = read_file(subpt_tri);
        const std::string report = cached_report(
            g, {"subpt", text, subpt_mode, subpt_list ? "list" : "count"}, [&] {
                const Triangulation t = load_triangulation(subpt_tri);
                const auto mode = subpt_mode == "all" ? SubPtMode::All : SubPtMode::Pointed;
                const auto subs = enumerate_sub_pts(t, mode);
                Json j;
                j["mode"] = subpt_mode;
                j["count"] = std::to_string(subs.size());
                if (subpt_list) {
                    Json list = Json::array();
                    for (const auto& s : subs) {
                        Json edges = Json::array();
                        for (const Edge& e : s.graph.edges) edges.push_back({e.a, e.b});
                        list.push_back(Json{{"edges", std::move(edges)},
                                            {"pointed_interior", s.pointed_interior}});
                    }
                    j["pseudo_triangulations"] = std::move(list);
                }
                return dump(j);
            });
        emit(g, report);
    });

    // ---- tn ----
    auto* tn = app.add_subcommand("tn", "build the chain triangulation; optionally verify counts");
    int tn_n = 6;
    bool tn_verify = false;
    tn->add_option("--n", tn_n, "chain length")->required();
    tn->add_flag("--verify", tn_verify, "enumerate contained pseudo-triangulations and compare");
    tn->callback([&] {
        auto [ps, t] = build_TN(tn_n);
        if (!tn_verify) {
            emit(g, dump(graph_to_json(t.graph)));
            return;
        }
        const auto pointed = enumerate_sub_pts(t, SubPtMode::Pointed);
        const auto all = enumerate_sub_pts(t, SubPtMode::All);
        const BigCount expect_p = recurrence_value(recurrence_spec('P'), tn_n);
        const BigCount expect_q = recurrence_value(recurrence_spec('Q'), tn_n);
        Json j;
        j["n"] = tn_n;
        j["pointed"] = std::to_string(pointed.size());
        j["all"] = std::to_string(all.size());
        j["recurrence_pointed"] = expect_p.str();
        j["recurrence_all"] = expect_q.str();
        const bool match = BigCount(pointed.size()) == expect_p && BigCount(all.size()) == expect_q;
        j["match"] = match;
        emit(g, dump(j));
        if (!match) exit_code = 1;
    });

    // ---- recurrence ----
    auto* rec = app.add_subcommand("recurrence", "chain-count recurrence values");
    std::string rec_kind = "P";
    int rec_n = 8;
    bool rec_ratio = false, rec_closed = false;
    rec->add_option("--kind", rec_kind, "P (pointed) or Q (all)")->check(CLI::IsMember({"P", "Q"}));
    rec->add_option("--n", rec_n, "index")->required();
    rec->add_flag("--ratio", rec_ratio, "include value(n+1)/value(n)");
    rec->add_flag("--closed", rec_closed, "include the closed-form evaluation");
    rec->callback([&] {
        const RecurrenceSpec spec = recurrence_spec(rec_kind[0]);
        Json j;
        j["kind"] = rec_kind;
        j["n"] = rec_n;
        j["value"] = recurrence_value(spec, rec_n).str();
        if (rec_ratio) j["ratio"] = static_cast<double>(growth_ratio(spec, rec_n));
        if (rec_closed) j["closed_form"] = static_cast<double>(closed_form(spec, rec_n));
        emit(g, dump(j));
    });

    // ---- lemma1 ----
    auto* lemma1 = app.add_subcommand(
        "lemma1", "removed-edge / pointed-vertex bijection certificate for T' inside T");
    std::string l1_tri, l1_sub;
    lemma1->add_option("--tri", l1_tri, "triangulation graph JSON")->required();
    lemma1->add_option("--sub", l1_sub, "contained pseudo-triangulation graph JSON")->required();
    lemma1->callback([&] {
        const Triangulation t = load_triangulation(l1_tri);
        const PseudoTriangulation s = load_sub_pt(l1_sub);
        const BijectionCertificate cert = build_certificate(t, s);
        const CertificateCheck check = verify_certificate(cert, t, s);
        Json j = certificate_to_json(cert);
        j["verified"] = check.ok;
        if (!check.ok) j["violation"] = check.violation;
        emit(g, dump(j));
        if (!check.ok) exit_code = 1;
    });

    // ---- orient ----
    auto* orient_cmd = app.add_subcommand("orient", "outdegree-1 orientation counting");
    orient_cmd->require_subcommand(1);
    std::string or_input, or_scope = "interior";
    auto* or_count = orient_cmd->add_subcommand("count", "exact census");
    or_count->add_option("--input", or_input, "graph JSON")->required();
    or_count->add_option("--scope", or_scope, "interior | all")
        ->check(CLI::IsMember({"interior", "all"}));
    or_count->callback([&] {
        const PlaneGraph gr = graph_from_json(Json::parse(read_file(or_input)));
        const auto scope =
            or_scope == "all" ? OrientationScope::AllVertices : OrientationScope::InteriorVertices;
        emit(g, dump(orientation_census_to_json(count_outdegree1(gr, scope))));
    });
    auto* or_est = orient_cmd->add_subcommand("estimate", "Monte Carlo no-collision probability");
    long long or_samples = 100000;
    std::uint64_t or_seed = 1;
    or_est->add_option("--input", or_input, "graph JSON")->required();
    or_est->add_option("--scope", or_scope, "interior | all")
        ->check(CLI::IsMember({"interior", "all"}));
    or_est->add_option("--samples", or_samples, "sample count");
    or_est->add_option("--seed", or_seed, "RNG seed");
    or_est->callback([&] {
        const PlaneGraph gr = graph_from_json(Json::parse(read_file(or_input)));
        const auto scope =
            or_scope == "all" ? OrientationScope::AllVertices : OrientationScope::InteriorVertices;
        const PncEstimate est = estimate_pnc(gr, scope, or_samples, or_seed);
        Json j;
        j["estimate"] = est.estimate;
        j["std_error"] = est.std_error;
        j["samples"] = est.samples;
        emit(g, dump(j));
    });
    auto* or_sig = orient_cmd->add_subcommand("signatures", "2-extension signature census");
    or_sig->add_option("--input", or_input, "triangulation graph JSON")->required();
    or_sig->callback([&] {
        emit(g, dump(signature_census_to_json(extract_signatures(load_triangulation(or_input)))));
    });

    // ---- lp ----
    auto* lp = app.add_subcommand("lp", "dual-feasibility certification");
    lp->require_subcommand(1);
    auto* lp_verify = lp->add_subcommand("verify", "verify a multiplier candidate");
    DualCandidate lam = reference_dual_candidate();
    double lp_tol = 1e-8;
    int lp_digits = 30;
    lp_verify->add_option("--lambda1", lam.lambda1, "first multiplier");
    lp_verify->add_option("--lambda2", lam.lambda2, "second multiplier");
    lp_verify->add_option("--lambda3", lam.lambda3, "third multiplier");
    lp_verify->add_option("--tol", lp_tol, "feasibility tolerance");
    lp_verify->add_option("--digits", lp_digits, "30 or 50 significant digits")
        ->check(CLI::IsMember({30, 50}));
    lp_verify->callback([&] {
        const FeasibilityReport rep = verify_candidate(lam, lp_tol, lp_digits);
        emit(g, dump(feasibility_to_json(rep)));
        if (!rep.feasible) exit_code = 1;
    });
    auto* lp_pairs = lp->add_subcommand("pairs", "derived surviving (i, j) pairs");
    lp_pairs->callback([&] {
        const auto pairs = derive_pair_list(reference_dual_candidate());
        Json list = Json::array();
        for (const auto& [i, j] : pairs) list.push_back({i, j});
        Json j;
        j["count"] = pairs.size();
        j["pairs"] = std::move(list);
        j["matches_embedded"] = matches_embedded_pair_list(pairs);
        emit(g, dump(j));
    });

    // ---- bounds ----
    auto* bounds = app.add_subcommand("bounds", "bound curves and product constants");
    bounds->callback([&] {
        const Crossing cross = solve_crossing();
        const HullShrinkConstants hs = hull_shrink_constants();
        Json j;
        j["f1_at_1"] = f1_curve(1.0);
        j["crossing"] = Json{{"a_star", cross.a_star}, {"bound", cross.bound}};
        Json roots = Json::object();
        for (const auto& [n, r] : hs.nth_roots) roots[std::to_string(n)] = r;
        j["shrink_nth_roots"] = std::move(roots);
        j["shrink_limit_constant"] = hs.limit_constant;
        j["shrink_with_pointing_factor"] = hs.with_pointing_factor;
        j["pt_bound_base"] = hs.pt_bound_base;
        j["ppt_bound_base"] = hs.ppt_bound_base;
        emit(g, dump(j));
    });

    // ---- audit ----
    auto* audit = app.add_subcommand("audit", "inequality audits over a point set");
    std::string audit_input, audit_which;
    audit->add_option("--input", audit_input, "point-set text file (not needed for thm8/crossing)");
    audit->add_option("--theorem", audit_which, "2 | 3 | obs1 | obs2 | thm8 | crossing")
        ->required()
        ->check(CLI::IsMember({"2", "3", "obs1", "obs2", "thm8", "crossing"}));
    audit->callback([&] {
        auto need_input = [&] {
            if (audit_input.empty()) throw InputError("--input is required for this audit");
            return std::make_shared<const PointSet>(parse_points_text(read_file(audit_input)));
        };
        if (audit_which == "2") {
            const AuditReport rep = audit_removal_step_bound(need_input());
            emit(g, dump(audit_to_json(rep)));
            if (!rep.all_passed) exit_code = 1;
        } else if (audit_which == "3") {
            const AuditReport rep = audit_pt_total_bound(need_input());
            emit(g, dump(audit_to_json(rep)));
            if (!rep.all_passed) exit_code = 1;
        } else if (audit_which == "obs1") {
            const AuditReport rep = audit_single_pointed_bound(need_input());
            emit(g, dump(audit_to_json(rep)));
            if (!rep.all_passed) exit_code = 1;
        } else if (audit_which == "obs2") {
            const AverageDegree3Report rep = audit_average_degree3_bound(need_input());
            Json j = audit_to_json(rep.report);
            j["average_bound_holds"] = rep.average_bound_holds;
            j["existence_bound_holds"] = rep.existence_bound_holds;
            j["informational"] = true;
            emit(g, dump(j));
        } else if (audit_which == "thm8") {
            const HullShrinkConstants hs = hull_shrink_constants();
            bool ok = std::abs(hs.with_pointing_factor - 2.969) <= 0.01 && hs.root_within_1pct_at_480;
            Json j;
            j["with_pointing_factor"] = hs.with_pointing_factor;
            j["root_within_1pct_at_480"] = hs.root_within_1pct_at_480;
            if (!audit_input.empty()) {
                const AuditReport rep = audit_hull_shrink_inequality(need_input());
                j["instance"] = audit_to_json(rep);
                ok = ok && rep.all_passed;
            }
            j["all_passed"] = ok;
            emit(g, dump(j));
            if (!ok) exit_code = 1;
        } else {  // crossing
            const Crossing cross = solve_crossing();
            const bool ok = std::abs(cross.a_star - 0.955) <= 0.005 &&
                            std::abs(cross.bound - 6.54) <= 0.02 && f1_curve(1.0) == 6.75;
            Json j;
            j["a_star"] = cross.a_star;
            j["bound"] = cross.bound;
            j["f1_at_1"] = f1_curve(1.0);
            j["all_passed"] = ok;
            emit(g, dump(j));
            if (!ok) exit_code = 1;
        }
    });

    // ---- svg ----
    auto* svg = app.add_subcommand("svg", "render a graph to SVG");
    std::string svg_input, svg_tri;
    bool svg_mark = false;
    svg->add_option("--input", svg_input, "graph JSON")->required();
    svg->add_option("--tri", svg_tri, "host triangulation; its missing edges are drawn dashed");
    svg->add_flag("--mark-pointed", svg_mark, "highlight pointed interior vertices");
    svg->callback([&] {
        const PlaneGraph gr = graph_from_json(Json::parse(read_file(svg_input)));
        SvgOptions opts;
        opts.mark_pointed = svg_mark;
        if (!svg_tri.empty()) {
            const Triangulation t = load_triangulation(svg_tri);
            std::set_difference(t.graph.edges.begin(), t.graph.edges.end(), gr.edges.begin(),
                                gr.edges.end(), std::back_inserter(opts.removed));
        }
        emit(g, emit_svg(gr, opts));
    });

    // Let global options appear after a subcommand name as well.
    auto enable_fallthrough = [](auto&& self, CLI::App* a) -> void {
        a->fallthrough(true);
        for (CLI::App* sub : a->get_subcommands({})) self(self, sub);
    };
    enable_fallthrough(enable_fallthrough, &app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);  // prints usage or error text
        return rc == 0 ? 0 : 2;      // bad command lines are input errors
    }
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const psit::TooLargeError& e) {
        std::cerr << "error (cap exceeded): " << e.what() << "\n";
        return 3;
    } catch (const psit::InputError& e) {
        std::cerr << "error (input): " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
