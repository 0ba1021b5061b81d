#pragma once

#include <cstdint>
#include <functional>

#include "wellcov/graph.hpp"

namespace wellcov {

inline constexpr int kMaxExhaustiveN = 8;

/// Number of labeled simple graphs on n vertices: 2^(n(n-1)/2).
std::uint64_t labeled_graph_count(int n);

/// Decode a graph from its edge-indicator code (bit e of `code` is edge e
/// in lexicographic order of pairs (i, j), i < j).
Graph graph_from_code(int n, std::uint64_t code);
std::uint64_t graph_code(const Graph& g);

using GraphVisitor = std::function<void(const Graph&)>;
using GraphPredicate = std::function<bool(const Graph&)>;

/// Visit every labeled simple graph on n vertices passing `filter`, in
/// ascending code order. Throws TooLarge for n > 8.
void for_each_labeled_graph(int n, const GraphVisitor& visit,
                            const GraphPredicate& filter = nullptr);

/// Visit `count` graphs drawn with edge probability 1/2 from a seeded
/// generator; reproducible for a fixed (n, count, seed).
void sample_labeled_graphs(int n, std::uint64_t count, std::uint64_t seed,
                           const GraphVisitor& visit,
                           const GraphPredicate& filter = nullptr);

/// Visit every connected unicyclic graph built as a c-cycle plus attached
/// trees: vertices c..n-1 attach to an arbitrary earlier vertex. Covers
/// every unicyclic isomorphism type with cycle length c on n vertices.
void for_each_unicyclic(int cycle_len, int n, const GraphVisitor& visit);

}  // namespace wellcov
