#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "wellcov/classify.hpp"
#include "wellcov/family.hpp"
#include "wellcov/serialize.hpp"

using namespace wellcov;

TEST_CASE("vertex set round-trip") {
    VertexSet s = VertexSet::of({0, 3, 5});
    CHECK(vertex_set_from_json(vertex_set_json(s)) == s);
    CHECK(vertex_set_json(s) == json::array({0, 3, 5}));
    CHECK_THROWS(vertex_set_from_json(json::array({-1})));
    CHECK_THROWS(vertex_set_from_json(json::array({64})));
}

TEST_CASE("graph serialization") {
    json j = graph_json(family::path(3));
    CHECK(j["n"] == 3);
    CHECK(j["edges"] == json::array({json::array({0, 1}), json::array({1, 2})}));
}

TEST_CASE("matching round-trip") {
    Matching m{{{0, 1}, {2, 3}}};
    Matching back = matching_from_json(matching_json(m));
    CHECK(back.edges == m.edges);
}

TEST_CASE("shelling order round-trip") {
    auto v = shellable(family::cycle(5));
    REQUIRE(v.is_yes());
    ShellingOrder back = shelling_order_from_json(shelling_order_json(*v.witness));
    CHECK(back.order == v.witness->order);
    CHECK(verify_shelling(maximal_stable_sets(family::cycle(5)), back));
}

TEST_CASE("decomposition tree round-trip") {
    auto v = vertex_decomposable(family::cycle(5));
    REQUIRE(v.is_yes());
    DecompositionTree back = decomposition_tree_from_json(decomposition_tree_json(*v.witness));
    CHECK(verify_decomposition_tree(family::cycle(5), back));
    CHECK(decomposition_tree_json(back) == decomposition_tree_json(*v.witness));
}

TEST_CASE("certificate round-trips") {
    auto kc = konig_certificate(family::cycle(6));
    REQUIRE(kc.is_yes());
    auto back = konig_certificate_from_json(konig_certificate_json(*kc.witness));
    CHECK(verify_konig_certificate(family::cycle(6), back));

    auto pkm = perfect_konig_matching(family::path(4));
    REQUIRE(pkm.is_yes());
    auto pback = perfect_konig_matching_from_json(perfect_konig_matching_json(*pkm.witness));
    CHECK(verify_perfect_konig_matching(family::path(4), pback));
}

TEST_CASE("report fragments") {
    json cls = class_membership_json(classify(family::cycle(7)));
    CHECK(cls["unicyclic"] == true);
    CHECK(cls["girth_ge_6"] == true);
    CHECK(cls["tree"] == false);

    json rep = cm_report_json(cm_oracle(family::cycle(7)));
    CHECK(rep["cm"]["status"] == "no");
}
