#include "wellcov/classify.hpp"

#include <algorithm>
#include <queue>

#include "wellcov/decomposition.hpp"
#include "wellcov/shelling.hpp"
#include "wellcov/structure.hpp"

namespace wellcov {

namespace {

bool is_cycle_graph(const Graph& g, int k) {
    if (g.vertex_count() != k) return false;
    for (int v = 0; v < k; ++v)
        if (g.degree(v) != 2) return false;
    return is_connected(g);
}

// G[mask] has a perfect matching of König type with no 4-cycle carrying
// two matching edges as opposite sides
bool konig_matching_without_squares(const Graph& g, VertexSet mask,
                                    Matching* out = nullptr) {
    int n = mask.count();
    if (n % 2 != 0) return false;
    if (n - beta_within(g, mask) != n / 2) return false;
    bool found = false;
    for_each_perfect_matching(g, mask, [&](const Matching& m) {
        for (int i = 0; i < m.size() && !found; ++i) {
            auto [a, b] = m.edges[i];
            for (int j = i + 1; j < m.size(); ++j) {
                auto [c, d] = m.edges[j];
                if ((g.has_edge(a, c) && g.has_edge(b, d)) ||
                    (g.has_edge(a, d) && g.has_edge(b, c)))
                    return true;  // square: try the next matching
            }
        }
        found = true;
        if (out) *out = m;
        return false;
    });
    return found;
}

}  // namespace

ClassMembership classify(const Graph& g) {
    ClassMembership out;
    out.konig = is_konig(g);
    CycleInfo ci = girth_and_cycles(g);
    out.no_3_5_cycles = !ci.has_k_cycle.at(3) && !ci.has_k_cycle.at(5);
    out.no_3_5_7_cycles = out.no_3_5_cycles && !ci.has_k_cycle.at(7);
    out.bipartite = is_bipartite(g);
    out.girth_ge_6 = ci.girth == kInfiniteGirth || ci.girth >= 6;
    out.girth_ge_11 = ci.girth == kInfiniteGirth || ci.girth >= 11;
    out.unicyclic = is_unicyclic(g);
    out.tree = is_tree(g);
    out.whisker = is_whisker(g);
    out.sqc = structure_tags(g).sqc_partition.has_value();
    return out;
}

Verdict<PerfectKonigMatching> theorem24(const Graph& g) {
    CycleInfo ci = girth_and_cycles(g);
    if (ci.has_k_cycle.at(3) || ci.has_k_cycle.at(5) || ci.has_k_cycle.at(7))
        throw PreconditionViolated("graph contains a 3-, 5- or 7-cycle");
    VertexSet rest = g.vertices() - isolated_vertices(g);
    if (rest.empty())
        return Verdict<PerfectKonigMatching>::yes(PerfectKonigMatching{});
    auto sub = induced_subgraph(g, rest);
    const Graph& h = sub.graph;
    int n = h.vertex_count();
    if (n % 2 != 0) return Verdict<PerfectKonigMatching>::no();
    if (n - beta_within(h, h.vertices()) != n / 2)
        return Verdict<PerfectKonigMatching>::no();
    VertexSet sub_cover = h.vertices() - max_stable_set(h, h.vertices());
    std::optional<PerfectKonigMatching> hit;
    for_each_perfect_matching(h, h.vertices(), [&](const Matching& m) {
        PerfectKonigMatching pkm{m, sub_cover};
        if (exchange_condition(h, pkm).is_yes()) {
            hit = pkm;
            return false;
        }
        return true;
    });
    if (!hit) return Verdict<PerfectKonigMatching>::no();
    // lift the witness back to the labels of g
    PerfectKonigMatching out;
    for (auto [u, v] : hit->matching.edges)
        out.matching.edges.emplace_back(sub.vertex_map[u], sub.vertex_map[v]);
    for (int v : hit->cover) out.cover.add(sub.vertex_map[v]);
    return Verdict<PerfectKonigMatching>::yes(std::move(out));
}

namespace {

// conditions (a) and (b) of the ordered-relabeling criterion, for a fixed
// matching and a fixed choice of x-side endpoints
bool relabeling_works(const Graph& h, const std::vector<int>& xs,
                      const std::vector<int>& ys, std::vector<int>& order_out) {
    int hsz = static_cast<int>(xs.size());
    VertexSet x_side;
    for (int x : xs) x_side.add(x);
    // X must be a vertex cover, i.e. Y stable
    if (!h.is_stable(h.vertices() - x_side)) return false;
    // an x-to-y edge across pairs excludes the x-to-x edge between them;
    // without this, (a) below misses exchanges where two pair indices
    // coincide and non-unmixed graphs slip through
    for (int i = 0; i < hsz; ++i)
        for (int j = 0; j < hsz; ++j)
            if (i != j && h.has_edge(xs[i], ys[j]) && h.has_edge(xs[i], xs[j]))
                return false;
    for (int i = 0; i < hsz; ++i) {
        for (int j = 0; j < hsz; ++j) {
            if (j == i) continue;
            for (int k = 0; k < hsz; ++k) {
                if (k == i || k == j) continue;
                if (!h.has_edge(ys[j], xs[k])) continue;
                for (int ai : {xs[i], ys[i]}) {
                    if (h.has_edge(ai, xs[j]) && !h.has_edge(ai, xs[k]))
                        return false;
                }
            }
        }
    }
    // an index order with {x_i, y_j} in E implying i <= j exists iff the
    // constraint digraph is acyclic; Kahn with smallest index first
    std::vector<std::vector<int>> succ(hsz);
    std::vector<int> indeg(hsz, 0);
    for (int i = 0; i < hsz; ++i) {
        for (int j = 0; j < hsz; ++j) {
            if (i == j) continue;
            if (h.has_edge(xs[i], ys[j])) {
                succ[i].push_back(j);
                ++indeg[j];
            }
        }
    }
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int i = 0; i < hsz; ++i)
        if (indeg[i] == 0) ready.push(i);
    order_out.clear();
    while (!ready.empty()) {
        int i = ready.top();
        ready.pop();
        order_out.push_back(i);
        for (int j : succ[i])
            if (--indeg[j] == 0) ready.push(j);
    }
    return static_cast<int>(order_out.size()) == hsz;
}

std::optional<Relabeling> find_relabeling(const Graph& g, const InducedSubgraph& sub) {
    const Graph& h = sub.graph;
    std::optional<Relabeling> hit;
    for_each_perfect_matching(h, h.vertices(), [&](const Matching& m) {
        int hsz = m.size();
        std::vector<int> xs(hsz), ys(hsz), order;
        for (std::uint64_t bits = 0; bits < (1ULL << hsz); ++bits) {
            for (int i = 0; i < hsz; ++i) {
                xs[i] = (bits >> i) & 1 ? m.edges[i].second : m.edges[i].first;
                ys[i] = (bits >> i) & 1 ? m.edges[i].first : m.edges[i].second;
            }
            if (!relabeling_works(h, xs, ys, order)) continue;
            Relabeling r;
            for (int i : order)
                r.pairs.emplace_back(sub.vertex_map[xs[i]], sub.vertex_map[ys[i]]);
            hit = std::move(r);
            return false;
        }
        return true;
    });
    return hit;
}

}  // namespace

Prop2Result prop2_equivalences(const Graph& g) {
    if (!is_konig(g)) throw PreconditionViolated("tau and nu differ");
    Prop2Result out;
    bool unmixed = is_well_covered_within(g, g.vertices());

    out.unmixed_vd = unmixed && vertex_decomposable_within(g, g.vertices())
                         ? Verdict<Unit>::yes({})
                         : Verdict<Unit>::no();

    FacetList facets = maximal_stable_sets(g);
    if (!facets.pure()) {
        out.pure_shellable = Verdict<Unit>::no();
    } else {
        auto sh = shellable(g);
        if (sh.is_unknown())
            out.pure_shellable = Verdict<Unit>::unknown(sh.reason);
        else
            out.pure_shellable = sh.is_yes() ? Verdict<Unit>::yes({}) : Verdict<Unit>::no();
    }
    out.cohen_macaulay = out.pure_shellable;

    VertexSet rest = g.vertices() - isolated_vertices(g);
    if (rest.empty()) {
        out.konig_matching_no_squares = Verdict<Unit>::yes({});
        out.ordered_relabeling = Verdict<Unit>::yes({});
        out.relabeling = Relabeling{};
        return out;
    }

    bool iv = is_well_covered_within(g, rest) && konig_matching_without_squares(g, rest);
    out.konig_matching_no_squares = iv ? Verdict<Unit>::yes({}) : Verdict<Unit>::no();

    auto sub = induced_subgraph(g, rest);
    out.relabeling = find_relabeling(g, sub);
    out.ordered_relabeling =
        out.relabeling ? Verdict<Unit>::yes({}) : Verdict<Unit>::no();
    return out;
}

namespace {

std::pair<Verdict<Unit>, std::string> seq_cm_decision(const Graph& g) {
    if (is_unicyclic(g)) {
        return {unicyclic_ssd(g).is_yes() ? Verdict<Unit>::yes({}) : Verdict<Unit>::no(),
                "unicyclic pendant-at-cycle criterion"};
    }
    if (girth_within(g, g.vertices()) == kInfiniteGirth)
        return {Verdict<Unit>::yes({}), "forests are chordal"};
    auto sh = shellable(g);
    if (sh.is_yes()) return {Verdict<Unit>::yes({}), "shellable"};
    return {Verdict<Unit>::unknown("not shellable or cap exceeded; no converse applies"),
            "undecided"};
}

}  // namespace

CmReport theoremP1(const Graph& g) {
    CycleInfo ci = girth_and_cycles(g);
    if (ci.has_k_cycle.at(3) || ci.has_k_cycle.at(5))
        throw PreconditionViolated("graph contains a 3- or 5-cycle");
    CmReport rep;
    std::tie(rep.seq_cm, rep.seq_cm_rationale) = seq_cm_decision(g);
    if (!is_well_covered_within(g, g.vertices())) {
        rep.cm = Verdict<Unit>::no();
        rep.cm_rationale = "not unmixed";
        return rep;
    }
    for (VertexSet comp : components(g, g.vertices())) {
        if (comp.count() == 1) continue;
        if (!konig_matching_without_squares(g, comp)) {
            rep.cm = Verdict<Unit>::no();
            rep.cm_rationale = "a component lacks a square-free perfect matching of König type";
            return rep;
        }
    }
    rep.cm = Verdict<Unit>::yes({});
    rep.cm_rationale = "unmixed with square-free perfect König matchings per component";
    return rep;
}

CmReport girth6_corollary(const Graph& g) {
    if (!is_connected(g)) throw PreconditionViolated("graph is not connected");
    int girth = girth_within(g, g.vertices());
    if (girth != kInfiniteGirth && girth < 6)
        throw PreconditionViolated("girth below 6");

    bool isolated = g.vertex_count() == 1;
    bool unmixed = is_well_covered_within(g, g.vertices());

    std::vector<int> decided;  // 0/1 per decidable condition
    decided.push_back(unmixed && vertex_decomposable_within(g, g.vertices()));
    std::optional<bool> pure_shellable;
    if (!maximal_stable_sets(g).pure()) {
        pure_shellable = false;
    } else {
        auto sh = shellable(g);
        if (!sh.is_unknown()) pure_shellable = sh.is_yes();
    }
    if (pure_shellable) decided.push_back(*pure_shellable);
    decided.push_back(unmixed && is_konig(g));
    decided.push_back(isolated || is_very_well_covered(g).is_yes());
    decided.push_back(unmixed && !is_cycle_graph(g, 7));
    decided.push_back(isolated || (unmixed && is_whisker(g)));
    for (int b : decided)
        if (b != decided.front())
            throw InternalInconsistency("the girth-6 equivalences disagree");

    CmReport rep;
    rep.cm = decided.front() ? Verdict<Unit>::yes({}) : Verdict<Unit>::no();
    rep.cm_rationale = "girth-6 equivalences (unmixed König, very well covered, whisker)";
    std::tie(rep.seq_cm, rep.seq_cm_rationale) = seq_cm_decision(g);
    return rep;
}

namespace {

// D_1(C): vertices adjacent to the cycle but not on it
VertexSet first_layer(const Graph& g, VertexSet c) {
    return g.neighbors(c) - c;
}

// G[sub] splits into pendant edges {x,y} whose leaf end y has degree 1 in
// the whole graph, not merely in G[sub]. Leaves of G[sub] that re-attach to
// the rest of G break the partition into simplexes that the structural
// cases of the unicyclic classification rely on, and such graphs acquire
// short maximal stable sets through the re-attachment.
bool whisker_with_global_pendants(const Graph& g, VertexSet sub) {
    VertexSet left = sub;
    while (!left.empty()) {
        int y = -1;
        for (int v : left)
            if (g.degree(v) == 1) {
                y = v;
                break;
            }
        if (y < 0) return false;
        VertexSet nb = g.neighbors(y) & left;
        if (nb.count() != 1) return false;
        left.remove(y);
        for (int x : nb) left.remove(x);
    }
    return true;
}

}  // namespace

Verdict<char> unicyclic_wellcovered(const Graph& g) {
    if (!is_unicyclic(g)) throw PreconditionViolated("graph is not unicyclic");
    for (int k : {3, 4, 5, 7})
        if (is_cycle_graph(g, k)) return Verdict<char>::yes('a');
    if (is_whisker(g)) return Verdict<char>::yes('b');

    VertexSet c = unicyclic_cycle(g);
    StructureTags tags = structure_tags(g);
    int len = c.count();
    bool cycle_qualifies = false;
    if (len == 3) {
        for (const auto& s : tags.simplexes)
            if (s == c) cycle_qualifies = true;
    } else if (len == 5) {
        for (const auto& cyc : tags.basic5cycles) {
            VertexSet cs;
            for (int v : cyc) cs.add(v);
            if (cs == c) cycle_qualifies = true;
        }
    }
    if (cycle_qualifies && whisker_with_global_pendants(g, g.vertices() - c))
        return Verdict<char>::yes('c');

    if (len == 4) {
        auto in_simplex_or_basic5 = [&](int v) {
            for (const auto& s : tags.simplexes)
                if (s.contains(v)) return true;
            for (const auto& cyc : tags.basic5cycles)
                for (int u : cyc)
                    if (u == v) return true;
            return false;
        };
        std::vector<int> cv = c.to_vector();
        // walk the 4-cycle in adjacency order
        std::array<int, 4> ring{cv[0], -1, -1, -1};
        VertexSet left = c;
        left.remove(cv[0]);
        for (int i = 1; i < 4; ++i) {
            for (int w : g.neighbors(ring[i - 1]) & left) {
                ring[i] = w;
                break;
            }
            left.remove(ring[i]);
        }
        for (int i = 0; i < 4; ++i) {
            int a = ring[i], b = ring[(i + 1) % 4];
            int x = ring[(i + 2) % 4], y = ring[(i + 3) % 4];
            if (g.degree(a) != 2 || g.degree(b) != 2) continue;
            if (!in_simplex_or_basic5(x) || !in_simplex_or_basic5(y)) continue;
            if (whisker_with_global_pendants(g, g.vertices() - VertexSet::of({a, b})))
                return Verdict<char>::yes('d');
        }
    }
    return Verdict<char>::no();
}

Verdict<Unit> unicyclic_ssd(const Graph& g) {
    if (!is_unicyclic(g)) throw PreconditionViolated("graph is not unicyclic");
    VertexSet c = unicyclic_cycle(g);
    if (c.count() == 3 || c.count() == 5) return Verdict<Unit>::yes({});
    for (int v : first_layer(g, c))
        if (g.degree(v) == 1) return Verdict<Unit>::yes({});
    return Verdict<Unit>::no();
}

CmReport unicyclic_cm(const Graph& g) {
    if (!is_unicyclic(g)) throw PreconditionViolated("graph is not unicyclic");
    CmReport rep;
    bool cm = is_well_covered_within(g, g.vertices()) && !is_cycle_graph(g, 4) &&
              !is_cycle_graph(g, 7);
    rep.cm = cm ? Verdict<Unit>::yes({}) : Verdict<Unit>::no();
    rep.cm_rationale = "unmixed unicyclic other than the 4- and 7-cycle";
    std::tie(rep.seq_cm, rep.seq_cm_rationale) = seq_cm_decision(g);
    return rep;
}

CmReport cm_oracle(const Graph& g) {
    CmReport rep;
    std::tie(rep.seq_cm, rep.seq_cm_rationale) = seq_cm_decision(g);

    if (!is_well_covered_within(g, g.vertices())) {
        rep.cm = Verdict<Unit>::no();
        rep.cm_rationale = "not well-covered";
        return rep;
    }
    auto sh = shellable(g);
    if (sh.is_yes()) {
        // well-covered, so the complex is pure
        rep.cm = Verdict<Unit>::yes({});
        rep.cm_rationale = "pure shellable";
        return rep;
    }

    CycleInfo ci = girth_and_cycles(g);
    if (is_konig(g)) {
        VertexSet rest = g.vertices() - isolated_vertices(g);
        bool cm = rest.empty() || konig_matching_without_squares(g, rest);
        rep.cm = cm ? Verdict<Unit>::yes({}) : Verdict<Unit>::no();
        rep.cm_rationale = "König characterization (square-free perfect matching)";
        return rep;
    }
    if (!ci.has_k_cycle.at(3) && !ci.has_k_cycle.at(5)) {
        CmReport p1 = theoremP1(g);
        rep.cm = p1.cm;
        rep.cm_rationale = p1.cm_rationale;
        return rep;
    }
    if (is_unicyclic(g)) {
        CmReport uc = unicyclic_cm(g);
        rep.cm = uc.cm;
        rep.cm_rationale = uc.cm_rationale;
        return rep;
    }
    if (is_connected(g) && (ci.girth == kInfiniteGirth || ci.girth >= 6)) {
        CmReport g6 = girth6_corollary(g);
        rep.cm = g6.cm;
        rep.cm_rationale = g6.cm_rationale;
        return rep;
    }
    if (is_tree(g)) {
        rep.cm = is_whisker(g) ? Verdict<Unit>::yes({}) : Verdict<Unit>::no();
        rep.cm_rationale = "tree characterization (whisker)";
        return rep;
    }
    rep.cm = Verdict<Unit>::unknown("no covered class");
    rep.cm_rationale = "undecided";
    return rep;
}

Lemma6Witness lemma6_structure(const Graph& g, const PerfectKonigMatching& m, int z) {
    g.check_vertex(z);
    if (!is_connected(g)) throw PreconditionViolated("graph is not connected");
    if (!verify_perfect_konig_matching(g, m))
        throw PreconditionViolated("not a perfect matching of König type");
    if (m.matching.size() < 2) throw PreconditionViolated("fewer than two matching edges");
    if (square_with_two_matching_edges(g, m.matching).is_yes())
        throw PreconditionViolated("a square carries two matching edges");

    auto in_matching = [&](int u, int v) {
        for (auto e : m.matching.edges)
            if ((e.first == u && e.second == v) || (e.first == v && e.second == u))
                return true;
        return false;
    };

    if (g.degree(z) >= 2) {
        for (int w1 : g.neighbors(z)) {
            for (int w2 : g.neighbors(w1)) {
                if (w2 == z) continue;
                if (g.degree(w2) == 1 && in_matching(w1, w2)) return {{w1, w2}};
            }
        }
        throw StructureNotFound("no pendant matching edge at distance two");
    }
    // z is free: its matching partner is its unique neighbor
    int w1 = g.neighbors(z).lowest();
    if (!in_matching(z, w1))
        throw StructureNotFound("free vertex not matched to its support");
    for (int w2 : g.neighbors(w1)) {
        if (w2 == z) continue;
        for (int w3 : g.neighbors(w2)) {
            if (w3 == w1) continue;
            if (g.degree(w3) == 1 && in_matching(w2, w3)) return {{w1, w2, w3}};
        }
    }
    throw StructureNotFound("no pendant matching edge at distance three");
}

}  // namespace wellcov
