#include "wellcov/serialize.hpp"

namespace wellcov {

json vertex_set_json(VertexSet s) {
    return json(s.to_vector());
}

VertexSet vertex_set_from_json(const json& j) {
    if (!j.is_array()) throw MalformedInput("vertex set must be an array");
    VertexSet s;
    for (const auto& e : j) {
        int v = e.get<int>();
        if (v < 0 || v >= Graph::kMaxVertices)
            throw MalformedInput("vertex out of range in witness: " + std::to_string(v));
        s.add(v);
    }
    return s;
}

json graph_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.vertex_count()}, {"edges", edges}};
}

json matching_json(const Matching& m) {
    json out = json::array();
    for (auto [u, v] : m.edges) out.push_back({u, v});
    return out;
}

Matching matching_from_json(const json& j) {
    if (!j.is_array()) throw MalformedInput("matching must be an array of pairs");
    Matching m;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2)
            throw MalformedInput("matching edge must be a pair");
        m.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return m;
}

json shelling_order_json(const ShellingOrder& o) {
    json out = json::array();
    for (VertexSet f : o.order) out.push_back(vertex_set_json(f));
    return out;
}

ShellingOrder shelling_order_from_json(const json& j) {
    if (!j.is_array()) throw MalformedInput("shelling order must be an array of facets");
    ShellingOrder o;
    for (const auto& f : j) o.order.push_back(vertex_set_from_json(f));
    return o;
}

json decomposition_tree_json(const DecompositionTree& t) {
    if (t.leaf) return {{"type", "leaf"}, {"vertices", vertex_set_json(t.leaf_vertices)}};
    return {{"type", "shed"},
            {"vertex", t.shed_vertex},
            {"del", decomposition_tree_json(*t.del_branch)},
            {"nbr", decomposition_tree_json(*t.nbr_branch)}};
}

DecompositionTree decomposition_tree_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type"))
        throw MalformedInput("decomposition node must carry a type");
    std::string type = j.at("type").get<std::string>();
    if (type == "leaf")
        return DecompositionTree::make_leaf(vertex_set_from_json(j.at("vertices")));
    if (type != "shed") throw MalformedInput("unknown decomposition node type: " + type);
    return DecompositionTree::make_shed(j.at("vertex").get<int>(),
                                        decomposition_tree_from_json(j.at("del")),
                                        decomposition_tree_from_json(j.at("nbr")));
}

json konig_certificate_json(const KonigCertificate& c) {
    return {{"matching", matching_json(c.matching)}, {"cover", vertex_set_json(c.cover)}};
}

KonigCertificate konig_certificate_from_json(const json& j) {
    return {matching_from_json(j.at("matching")), vertex_set_from_json(j.at("cover"))};
}

json perfect_konig_matching_json(const PerfectKonigMatching& m) {
    return {{"matching", matching_json(m.matching)}, {"cover", vertex_set_json(m.cover)}};
}

PerfectKonigMatching perfect_konig_matching_from_json(const json& j) {
    return {matching_from_json(j.at("matching")), vertex_set_from_json(j.at("cover"))};
}

json facet_list_json(const FacetList& f) {
    json out = json::array();
    for (VertexSet facet : f.facets) out.push_back(vertex_set_json(facet));
    return out;
}

json class_membership_json(const ClassMembership& c) {
    return {{"konig", c.konig},
            {"no_3_5_cycles", c.no_3_5_cycles},
            {"no_3_5_7_cycles", c.no_3_5_7_cycles},
            {"bipartite", c.bipartite},
            {"girth_ge_6", c.girth_ge_6},
            {"girth_ge_11", c.girth_ge_11},
            {"unicyclic", c.unicyclic},
            {"tree", c.tree},
            {"whisker", c.whisker},
            {"sqc", c.sqc}};
}

namespace {

json unit_verdict_json(const Verdict<Unit>& v) {
    json out = {{"status", to_string(v.status)}};
    if (v.is_unknown()) out["reason"] = v.reason;
    return out;
}

}  // namespace

json cm_report_json(const CmReport& r) {
    json cm = unit_verdict_json(r.cm);
    cm["theorem"] = r.cm_rationale;
    json seq = unit_verdict_json(r.seq_cm);
    seq["theorem"] = r.seq_cm_rationale;
    return {{"cm", cm}, {"seq_cm", seq}};
}

}  // namespace wellcov
