#pragma once

#include <map>
#include <optional>
#include <vector>

#include "wellcov/graph.hpp"

namespace wellcov {

struct DistanceLayers {
    std::vector<VertexSet> layers;  // layers[i] = vertices at distance i
    VertexSet unreachable;
};

/// BFS layering from a nonempty source set W: layers[0] = W,
/// layers[i] = neighbors of layers[i-1] not seen earlier.
DistanceLayers distance_layers(const Graph& g, VertexSet w);

struct BlockDecomposition {
    std::vector<VertexSet> blocks;  // vertex sets of biconnected components
    VertexSet cut_vertices;
};

/// Biconnected-component decomposition. Isolated vertices form their own
/// single-vertex blocks so that blocks cover V(G).
BlockDecomposition blocks(const Graph& g);

constexpr int kInfiniteGirth = -1;  // forests

struct CycleInfo {
    int girth = kInfiniteGirth;
    std::map<int, bool> has_k_cycle;  // k in {3,4,5,7}, subgraph cycles
};

/// Girth (kInfiniteGirth for forests) plus presence of k-cycles for
/// k in {3,4,5,7}. With induced=true the k-cycle flags count only
/// chordless cycles.
CycleInfo girth_and_cycles(const Graph& g, bool induced = false);

/// True iff G[mask] contains a cycle of length exactly k (as a subgraph,
/// or chordless when induced is set).
bool has_cycle_of_length(const Graph& g, VertexSet mask, int k, bool induced = false);

/// True iff v lies on some 5-cycle of G[mask].
bool on_five_cycle(const Graph& g, VertexSet mask, int v);

/// Girth restricted to G[mask].
int girth_within(const Graph& g, VertexSet mask);

/// Connected components of G[mask].
std::vector<VertexSet> components(const Graph& g, VertexSet mask);

bool is_connected(const Graph& g);

bool is_bipartite(const Graph& g);

/// Connected with exactly one cycle, i.e. |E| = |V|.
bool is_unicyclic(const Graph& g);

/// The unique cycle of a unicyclic graph.
VertexSet unicyclic_cycle(const Graph& g);

bool is_tree(const Graph& g);

}  // namespace wellcov
