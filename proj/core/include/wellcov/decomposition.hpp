#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "wellcov/graph.hpp"
#include "wellcov/verdict.hpp"

namespace wellcov {

/// Witness for vertex decomposability: a Leaf is a totally disconnected
/// vertex set; a Shed node removes a shedding vertex v and branches into
/// G\v and G\N[v].
struct DecompositionTree {
    bool leaf = true;
    VertexSet leaf_vertices;  // leaf nodes only
    int shed_vertex = -1;
    std::unique_ptr<DecompositionTree> del_branch;  // G \ v
    std::unique_ptr<DecompositionTree> nbr_branch;  // G \ N[v]

    static DecompositionTree make_leaf(VertexSet vs) {
        DecompositionTree t;
        t.leaf_vertices = vs;
        return t;
    }
    static DecompositionTree make_shed(int v, DecompositionTree del, DecompositionTree nbr) {
        DecompositionTree t;
        t.leaf = false;
        t.shed_vertex = v;
        t.del_branch = std::make_unique<DecompositionTree>(std::move(del));
        t.nbr_branch = std::make_unique<DecompositionTree>(std::move(nbr));
        return t;
    }
};

struct StructureTags {
    VertexSet simplicial;
    VertexSet free_vertices;                    // degree 1
    std::vector<VertexSet> simplexes;           // maximal cliques with a simplicial vertex
    std::vector<std::array<int, 5>> basic5cycles;
    std::vector<std::array<int, 4>> basic4cycles;  // [0],[1] are the adjacent deg-2 pair
    bool is_whisker = false;
    std::optional<std::array<VertexSet, 3>> sqc_partition;  // (S, Q, C)
};

/// Shedding test: every stable set S of G[mask]\N[v] leaves some neighbor
/// of v untouched (|N(v) \ N(S)| >= 1).
bool is_shedding_in(const Graph& g, VertexSet mask, int v);
bool is_shedding(const Graph& g, int v);

/// Definitional form, used as an independent oracle in tests: no maximal
/// stable set of G[mask]\v is contained in G[mask]\N[v].
bool is_shedding_definitional(const Graph& g, VertexSet mask, int v);

/// Necessary-condition filter for shedding vertices: a dominated neighbor
/// (N[y] within N[v]) or membership in a 5-cycle.
bool shedding_candidate_in(const Graph& g, VertexSet mask, int v);
VertexSet shedding_candidates(const Graph& g);

bool is_simplicial(const Graph& g, int v);
void for_each_maximal_clique(const Graph& g, VertexSet mask,
                             const std::function<bool(VertexSet)>& visit);
std::vector<std::array<int, 5>> five_cycles(const Graph& g);
std::vector<std::array<int, 4>> four_cycles(const Graph& g);

/// Pendant edges must partition V(G); the empty graph counts vacuously,
/// a single isolated vertex does not.
bool is_whisker(const Graph& g);

StructureTags structure_tags(const Graph& g);

bool vertex_decomposable_within(const Graph& g, VertexSet mask);
Verdict<DecompositionTree> vertex_decomposable(const Graph& g);

/// Re-checks every Shed node and Leaf against the graph.
bool verify_decomposition_tree(const Graph& g, const DecompositionTree& t);
bool verify_decomposition_tree(const Graph& g, VertexSet mask, const DecompositionTree& t);

/// For triangle- and pentagon-free G with free vertex x, N(x) = {y}:
/// VD(G) iff VD(G\N[x]) and VD(G\N[y]).
Verdict<DecompositionTree> free_vertex_vd_step(const Graph& g, int x);

}  // namespace wellcov
