#pragma once

#include <string>

#include "wellcov/graph.hpp"

namespace wellcov {

enum class GraphFormat { Graph6, EdgeList };

/// Parse a graph from its textual encoding. Throws MalformedInput on bad
/// header bytes, out-of-range vertex indices or loop edges.
Graph parse_graph(const std::string& text, GraphFormat format);

/// Canonical textual encoding; emit(parse(x)) == canonical form of x.
std::string emit_graph(const Graph& g, GraphFormat format);

/// Guess the format from content: a leading decimal line means edge list.
Graph parse_graph_auto(const std::string& text);

}  // namespace wellcov
