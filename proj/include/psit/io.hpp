#pragma once

// File formats: the point-set text format ("x y" per line, '#' comments),
// the graph JSON format, and JSON reports for censuses, certificates and
// the LP certifier. All emission is deterministic; big counts are decimal
// strings.

#include <nlohmann/json.hpp>
#include <string>

#include "psit/bijection.hpp"
#include "psit/bound_audits.hpp"
#include "psit/enumeration.hpp"
#include "psit/lp_certifier.hpp"
#include "psit/orientations.hpp"

namespace psit {

using Json = nlohmann::ordered_json;

PointSet parse_points_text(const std::string& text);
std::string points_to_text(const PointSet& ps);

Json graph_to_json(const PlaneGraph& g);
PlaneGraph graph_from_json(const Json& j);

Json pointset_to_json(const PointSet& ps);
Json census_to_json(const PTCensus& c);
Json certificate_to_json(const BijectionCertificate& cert);
Json feasibility_to_json(const FeasibilityReport& rep);
Json orientation_census_to_json(const OrientationCensus& c);
Json audit_to_json(const AuditReport& rep);
Json signature_census_to_json(const SignatureCensus& c);

} // namespace psit
