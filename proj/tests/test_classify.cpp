#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "helpers.hpp"
#include "wellcov/classify.hpp"
#include "wellcov/enumerate.hpp"
#include "wellcov/family.hpp"
#include "wellcov/structure.hpp"

using namespace wellcov;
using testutil::fig9;
using testutil::from_edges;

TEST_CASE("class membership flags") {
    auto c7 = classify(family::cycle(7));
    CHECK(c7.unicyclic);
    CHECK(c7.girth_ge_6);
    CHECK(c7.no_3_5_cycles);
    CHECK(!c7.no_3_5_7_cycles);
    CHECK(!c7.bipartite);
    CHECK(!c7.tree);

    auto f9 = classify(fig9());
    CHECK(f9.no_3_5_cycles);
    CHECK(!f9.no_3_5_7_cycles);
    CHECK(!f9.konig);
    CHECK(!f9.bipartite);  // the fixture contains 7-cycles

    auto wc5 = classify(family::whisker_of(family::cycle(5)));
    CHECK(wc5.whisker);
}

TEST_CASE("well-coveredness via the square-free exchange criterion (sparse graphs)") {
    auto p4 = theorem24(family::path(4));
    REQUIRE(p4.is_yes());
    CHECK(verify_perfect_konig_matching(family::path(4), *p4.witness));
    std::vector<std::pair<int, int>> edges = p4.witness->matching.edges;
    std::sort(edges.begin(), edges.end());
    CHECK(edges == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});

    CHECK(theorem24(family::cycle(6)).is_no());
    CHECK(theorem24(family::star(3)).is_no());
    CHECK(theorem24(family::empty(3)).is_yes());  // isolated vertices pass vacuously

    CHECK_THROWS_AS(theorem24(family::cycle(5)), PreconditionViolated);
    CHECK_THROWS_AS(theorem24(family::cycle(7)), PreconditionViolated);
}

TEST_CASE("the five equivalent conditions on Koenig graphs") {
    auto p4 = prop2_equivalences(family::path(4));
    CHECK(p4.unmixed_vd.is_yes());
    CHECK(p4.pure_shellable.is_yes());
    CHECK(p4.cohen_macaulay.is_yes());
    CHECK(p4.konig_matching_no_squares.is_yes());
    CHECK(p4.ordered_relabeling.is_yes());
    REQUIRE(p4.relabeling.has_value());
    CHECK(p4.relabeling->pairs.size() == 2);

    auto c4 = prop2_equivalences(family::cycle(4));
    CHECK(c4.unmixed_vd.is_no());
    CHECK(c4.pure_shellable.is_no());
    CHECK(c4.konig_matching_no_squares.is_no());
    CHECK(c4.ordered_relabeling.is_no());

    auto c6 = prop2_equivalences(family::cycle(6));
    CHECK(c6.unmixed_vd.is_no());
    CHECK(c6.pure_shellable.is_no());
    CHECK(c6.konig_matching_no_squares.is_no());
    CHECK(c6.ordered_relabeling.is_no());

    CHECK_THROWS_AS(prop2_equivalences(family::cycle(5)), PreconditionViolated);
}

TEST_CASE("relabeling witnesses put the cover on the x side") {
    auto r = prop2_equivalences(family::path(4));
    REQUIRE(r.relabeling.has_value());
    VertexSet xs, all;
    Graph p4 = family::path(4);
    for (auto [x, y] : r.relabeling->pairs) {
        CHECK(p4.has_edge(x, y));
        xs.add(x);
        all.add(x);
        all.add(y);
    }
    CHECK(all == p4.vertices());
    // X = {x_i} is a vertex cover, i.e. the complement is stable
    CHECK(p4.is_stable(p4.vertices() - xs));
}

TEST_CASE("Cohen-Macaulayness for graphs with no 3- or 5-cycles") {
    auto wc7 = theoremP1(family::whisker_of(family::cycle(7)));
    CHECK(wc7.cm.is_yes());

    CHECK(theoremP1(family::cycle(7)).cm.is_no());
    CHECK(theoremP1(family::cycle(4)).cm.is_no());
    CHECK(theoremP1(fig9()).cm.is_no());

    CHECK_THROWS_AS(theoremP1(family::cycle(3)), PreconditionViolated);
    CHECK_THROWS_AS(theoremP1(family::cycle(5)), PreconditionViolated);
}

TEST_CASE("girth-6 equivalences") {
    CHECK(girth6_corollary(family::cycle(7)).cm.is_no());
    CHECK(girth6_corollary(family::whisker_of(family::cycle(7))).cm.is_yes());
    CHECK(girth6_corollary(Graph(1)).cm.is_yes());
    CHECK(girth6_corollary(family::path(4)).cm.is_yes());

    CHECK_THROWS_AS(girth6_corollary(family::cycle(5)), PreconditionViolated);
    Graph two_k2 = from_edges(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(girth6_corollary(two_k2), PreconditionViolated);
}

TEST_CASE("well-covered unicyclic graphs fall into the four structural cases") {
    auto c4 = unicyclic_wellcovered(family::cycle(4));
    REQUIRE(c4.is_yes());
    CHECK(*c4.witness == 'a');

    auto wc3 = unicyclic_wellcovered(family::whisker_of(family::cycle(3)));
    REQUIRE(wc3.is_yes());
    CHECK(*wc3.witness == 'b');

    CHECK(unicyclic_wellcovered(family::cycle(6)).is_no());

    CHECK_THROWS_AS(unicyclic_wellcovered(family::path(4)), PreconditionViolated);
}

TEST_CASE("unicyclic shellability/decomposability decisions") {
    // pendant path of length two: the only leaf is at distance 2 from the cycle
    Graph far_leaf = from_edges(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6},
                                    {6, 0}, {0, 7}, {7, 8}});
    CHECK(unicyclic_ssd(far_leaf).is_no());
    CHECK(vertex_decomposable(far_leaf).is_no());

    Graph near_leaf = from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6},
                                     {6, 0}, {0, 7}});
    CHECK(unicyclic_ssd(near_leaf).is_yes());
    CHECK(vertex_decomposable(near_leaf).is_yes());

    CHECK(unicyclic_ssd(family::cycle(5)).is_yes());
    CHECK_THROWS_AS(unicyclic_ssd(family::path(3)), PreconditionViolated);
}

TEST_CASE("unicyclic Cohen-Macaulayness") {
    CHECK(unicyclic_cm(family::cycle(4)).cm.is_no());
    CHECK(unicyclic_cm(family::cycle(7)).cm.is_no());
    CHECK(unicyclic_cm(family::cycle(5)).cm.is_yes());
    CHECK(unicyclic_cm(family::cycle(3)).cm.is_yes());
    CHECK(unicyclic_cm(family::whisker_of(family::cycle(3))).cm.is_yes());
}

TEST_CASE("Cohen-Macaulay oracle") {
    // trees: CM exactly when the pendant edges form a perfect matching
    CHECK(cm_oracle(family::path(4)).cm.is_yes());
    CHECK(cm_oracle(family::path(3)).cm.is_no());
    CHECK(cm_oracle(family::star(3)).cm.is_no());
    CHECK(cm_oracle(family::whisker_of(family::path(3))).cm.is_yes());

    CHECK(cm_oracle(family::cycle(7)).cm.is_no());
    CHECK(cm_oracle(family::cycle(5)).cm.is_yes());
    CHECK(cm_oracle(fig9()).cm.is_no());

    // sequential CM follows from shellability
    auto p4 = cm_oracle(family::path(4));
    CHECK(p4.seq_cm.is_yes());
    auto c4 = cm_oracle(family::cycle(4));
    CHECK(c4.seq_cm.is_no());
}

TEST_CASE("Cohen-Macaulay oracle reports an honest unknown") {
    // three disjoint pentagons: well-covered, 125 facets (over any practical
    // cap), not Koenig, girth 5, not unicyclic — no characterization applies
    Graph g(15);
    for (int b = 0; b < 15; b += 5)
        for (int i = 0; i < 5; ++i) g.add_edge(b + i, b + (i + 1) % 5);
    auto rep = cm_oracle(g);
    CHECK(rep.cm.is_unknown());
    CHECK(rep.cm.reason == "no covered class");
}

TEST_CASE("oracle verdicts respect the implication chain") {
    for (int n = 1; n <= 5; ++n)
        for_each_labeled_graph(n, [&](const Graph& g) {
            auto rep = cm_oracle(g);
            if (rep.cm.is_yes()) CHECK(is_well_covered_within(g, g.vertices()));
            if (shellable(g).is_yes()) CHECK(rep.seq_cm.is_yes());
        });
}

TEST_CASE("pendant-edge structure near any vertex of a CM sparse graph") {
    Graph p4 = family::path(4);
    auto m = perfect_konig_matching(p4);
    REQUIRE(m.is_yes());
    auto w = lemma6_structure(p4, *m.witness, 1);
    REQUIRE(w.path.size() == 2);
    CHECK(p4.has_edge(1, w.path[0]));
    CHECK(p4.has_edge(w.path[0], w.path[1]));
    CHECK(p4.degree(w.path[1]) == 1);

    Graph wp3 = family::whisker_of(family::path(3));
    auto m3 = perfect_konig_matching(wp3);
    REQUIRE(m3.is_yes());
    auto w3 = lemma6_structure(wp3, *m3.witness, 1);
    REQUIRE(w3.path.size() == 2);
    CHECK(wp3.degree(w3.path[1]) == 1);

    // from a pendant vertex the path has three steps
    auto wl = lemma6_structure(p4, *m.witness, 0);
    REQUIRE(wl.path.size() == 3);
    CHECK(p4.degree(wl.path[2]) == 1);

    Graph k2 = family::complete(2);
    auto mk = perfect_konig_matching(k2);
    REQUIRE(mk.is_yes());
    CHECK_THROWS_AS(lemma6_structure(k2, *mk.witness, 0), PreconditionViolated);
}

TEST_CASE("free vertex with whiskered contraction off-cycle forces a whisker graph") {
    // needs G unmixed: the pendant-pair argument behind this implication
    // fails on e.g. the 6-vertex path, which satisfies every other premise
    for (int n = 2; n <= 6; ++n)
        for_each_labeled_graph(n, [&](const Graph& g) {
            if (!is_well_covered_within(g, g.vertices())) return;
            for (int x = 0; x < n; ++x) {
                if (g.degree(x) != 1) continue;
                int z = g.neighbors(x).lowest();
                VertexSet rest = g.vertices() - g.closed_neighbors(x);
                auto sub = induced_subgraph(g, rest);
                if (!is_whisker(sub.graph)) continue;
                if (!is_well_covered_within(g, rest)) continue;
                // z on no cycle: removing z from its component must split it
                bool on_cycle = false;
                for (auto b : blocks(g).blocks)
                    if (b.contains(z) && b.count() >= 3) on_cycle = true;
                if (on_cycle) continue;
                CHECK(is_whisker(g));
            }
        });
}

TEST_CASE("connected Cohen-Macaulay Koenig graphs have a pendant vertex") {
    for (int n = 1; n <= 6; ++n)
        for_each_labeled_graph(n, [&](const Graph& g) {
            if (!is_connected(g) || !is_konig(g)) return;
            auto rep = cm_oracle(g);
            if (!rep.cm.is_yes()) return;
            if (n == 1) return;  // the one-vertex graph is the allowed exception
            bool pendant = false;
            for (int v = 0; v < n; ++v)
                if (g.degree(v) == 1) pendant = true;
            CHECK(pendant);
        });
    // spot checks at seven vertices
    sample_labeled_graphs(7, 8000, 99u, [&](const Graph& g) {
        if (!is_connected(g) || !is_konig(g)) return;
        if (!cm_oracle(g).cm.is_yes()) return;
        bool pendant = false;
        for (int v = 0; v < 7; ++v)
            if (g.degree(v) == 1) pendant = true;
        CHECK(pendant);
    });
}

TEST_CASE("CM graphs without 3- or 5-cycles have an extendable vertex next to a leaf") {
    for (int n = 2; n <= 7; ++n)
        for_each_labeled_graph(
            n,
            [&](const Graph& g) {
                if (g.edge_count() == 0) return;
                if (!cm_oracle(g).cm.is_yes()) return;
                bool found = false;
                for (int v = 0; v < n && !found; ++v) {
                    if (!is_extendable_vertex(g, v)) continue;
                    for (int y : g.neighbors(v))
                        if (g.degree(y) == 1) found = true;
                }
                CHECK(found);
            },
            [](const Graph& g) {
                auto ci = girth_and_cycles(g);
                return !ci.has_k_cycle.at(3) && !ci.has_k_cycle.at(5);
            });
}

TEST_CASE("nine-vertex fixture: every claimed property verified by brute force") {
    Graph g = fig9();
    CHECK(g.vertex_count() == 9);
    CHECK(testutil::brute_well_covered(g));
    auto ci = girth_and_cycles(g);
    CHECK(ci.girth == 4);
    CHECK(!ci.has_k_cycle.at(3));
    CHECK(!ci.has_k_cycle.at(5));
    int tau = 9 - testutil::brute_beta(g, g.vertices());
    int nu = testutil::brute_nu(g, g.vertices());
    CHECK(tau > nu);  // not Koenig
    CHECK(cm_oracle(g).cm.is_no());
}
