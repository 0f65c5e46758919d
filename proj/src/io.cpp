#include "psit/io.hpp"

#include <sstream>

namespace psit {

PointSet parse_points_text(const std::string& text) {
    std::vector<std::pair<std::int64_t, std::int64_t>> coords;
    std::vector<int> source_line;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::int64_t x, y;
        if (!(ls >> x >> y)) throw ParseError(line_no, "expected two integers, got '" + line + "'");
        std::string rest;
        if (ls >> rest) throw ParseError(line_no, "trailing content '" + rest + "'");
        coords.emplace_back(x, y);
        source_line.push_back(line_no);
    }
    // Validation failures are re-reported against the source lines.
    auto at = [&](int id) { return std::to_string(source_line[static_cast<std::size_t>(id)]); };
    try {
        return validate_point_set(coords);
    } catch (const CollinearTripleError& e) {
        throw InputError("collinear points on lines " + at(e.a) + ", " + at(e.b) + ", " + at(e.c));
    } catch (const DuplicatePointError& e) {
        throw InputError("duplicate points on lines " + at(e.a) + " and " + at(e.b));
    }
}

std::string points_to_text(const PointSet& ps) {
    std::ostringstream out;
    for (const Point& p : ps.points) out << p.x << ' ' << p.y << '\n';
    return out.str();
}

Json graph_to_json(const PlaneGraph& g) {
    Json j;
    j["points"] = Json::array();
    for (const Point& p : g.ps->points) j["points"].push_back({p.x, p.y});
    j["edges"] = Json::array();
    for (const Edge& e : g.edges) j["edges"].push_back({e.a, e.b});
    return j;
}

PlaneGraph graph_from_json(const Json& j) {
    if (!j.contains("points") || !j.contains("edges"))
        throw ParseError(0, "graph JSON needs 'points' and 'edges'");
    std::vector<std::pair<std::int64_t, std::int64_t>> coords;
    for (const auto& p : j.at("points")) {
        if (!p.is_array() || p.size() != 2) throw ParseError(0, "point entries must be [x, y]");
        coords.emplace_back(p[0].get<std::int64_t>(), p[1].get<std::int64_t>());
    }
    auto ps = std::make_shared<const PointSet>(validate_point_set(coords));
    EdgeList edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw ParseError(0, "edge entries must be [i, j]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return make_plane_graph(std::move(ps), std::move(edges));
}

Json pointset_to_json(const PointSet& ps) {
    Json j;
    j["n_points"] = ps.size();
    j["hull"] = ps.hull;
    j["interior"] = ps.interior;
    j["points"] = Json::array();
    for (const Point& p : ps.points) j["points"].push_back({p.x, p.y});
    return j;
}

Json census_to_json(const PTCensus& c) {
    Json j;
    j["n_points"] = c.n_points;
    j["hull"] = c.hull;
    j["tri"] = c.tri_total.str();
    j["pt"] = c.total.str();
    j["ppt"] = c.pointed_total.str();
    Json by = Json::object();
    for (const auto& [i, cnt] : c.by_pointed_count) by[std::to_string(i)] = cnt.str();
    j["by_pointed_count"] = std::move(by);
    return j;
}

Json certificate_to_json(const BijectionCertificate& cert) {
    Json pairs = Json::array();
    for (const CertPair& p : cert.pairs)
        pairs.push_back(Json{{"edge", {p.edge.a, p.edge.b}}, {"vertex", p.vertex}, {"face", p.face}});
    Json j;
    j["pairs"] = std::move(pairs);
    j["faces"] = cert.faces;
    return j;
}

Json feasibility_to_json(const FeasibilityReport& rep) {
    Json j;
    j["feasible"] = rep.feasible;
    j["objective"] = rep.objective;
    j["growth_base"] = rep.growth_base;
    j["min_slack"] = rep.min_slack;
    j["worst_signature"] = signature_to_string(rep.worst_signature);
    j["n_constraints_checked"] = rep.n_constraints_checked;
    j["cutoff"] = rep.cutoff;
    j["entry_cap"] = rep.entry_cap;
    j["digits"] = rep.digits;
    j["tol"] = rep.tol;
    j["pair_list_matches_embedded"] = rep.pair_list_matches_embedded;
    j["monotone_low_entries_ok"] = rep.monotone_low_entries_ok;
    if (!rep.note.empty()) j["note"] = rep.note;
    return j;
}

Json orientation_census_to_json(const OrientationCensus& c) {
    Json j;
    j["scope"] = c.scope == OrientationScope::AllVertices ? "all" : "interior";
    j["raw_product"] = c.raw_product.str();
    j["valid_count"] = c.valid_count.str();
    j["p_nc_numerator"] = boost::multiprecision::numerator(c.p_nc).str();
    j["p_nc_denominator"] = boost::multiprecision::denominator(c.p_nc).str();
    return j;
}

Json audit_to_json(const AuditReport& rep) {
    Json j;
    j["id"] = rep.id;
    j["instances_tested"] = rep.instances_tested;
    j["all_passed"] = rep.all_passed;
    j["notes"] = rep.notes;
    return j;
}

Json signature_census_to_json(const SignatureCensus& c) {
    Json entries = Json::array();
    for (const auto& e : c.entries)
        entries.push_back(Json{{"signature", signature_to_string(e.signature)},
                               {"lp_domain", e.lp_domain},
                               {"count", e.count},
                               {"f_s", static_cast<double>(e.count) / c.n_points}});
    Json j;
    j["n_points"] = c.n_points;
    j["n_edges"] = c.n_edges;
    j["entries"] = std::move(entries);
    return j;
}

} // namespace psit
