#pragma once

#include <json.hpp>

#include "wellcov/classify.hpp"
#include "wellcov/decomposition.hpp"
#include "wellcov/graph.hpp"
#include "wellcov/independence.hpp"
#include "wellcov/shelling.hpp"

namespace wellcov {

using json = nlohmann::json;

json vertex_set_json(VertexSet s);
VertexSet vertex_set_from_json(const json& j);

json graph_json(const Graph& g);

json matching_json(const Matching& m);
Matching matching_from_json(const json& j);

json shelling_order_json(const ShellingOrder& o);
ShellingOrder shelling_order_from_json(const json& j);

json decomposition_tree_json(const DecompositionTree& t);
DecompositionTree decomposition_tree_from_json(const json& j);

json konig_certificate_json(const KonigCertificate& c);
KonigCertificate konig_certificate_from_json(const json& j);

json perfect_konig_matching_json(const PerfectKonigMatching& m);
PerfectKonigMatching perfect_konig_matching_from_json(const json& j);

json facet_list_json(const FacetList& f);

json class_membership_json(const ClassMembership& c);

json cm_report_json(const CmReport& r);

}  // namespace wellcov
