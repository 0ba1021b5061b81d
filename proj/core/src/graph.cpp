#include "wellcov/graph.hpp"

namespace wellcov {

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
    if (!s.subset_of(g.vertices()))
        throw VertexOutOfRange("subset contains a vertex outside the graph");
    InducedSubgraph out;
    out.vertex_map = s.to_vector();
    out.graph = Graph(static_cast<int>(out.vertex_map.size()));
    std::array<int, Graph::kMaxVertices> new_label{};
    for (int i = 0; i < static_cast<int>(out.vertex_map.size()); ++i)
        new_label[out.vertex_map[i]] = i;
    for (int u : s)
        for (int v : g.neighbors(u) & s)
            if (u < v) out.graph.add_edge(new_label[u], new_label[v]);
    return out;
}

Neighborhoods neighborhoods(const Graph& g, int v) {
    g.check_vertex(v);
    return {g.neighbors(v), g.closed_neighbors(v)};
}

VertexSet c_minor_mask(const Graph& g, VertexSet s) {
    if (!s.subset_of(g.vertices()))
        throw VertexOutOfRange("stable set contains a vertex outside the graph");
    if (!g.is_stable(s)) throw NotStable("set is not stable");
    return g.vertices() - g.closed_neighbors(s);
}

InducedSubgraph c_minor(const Graph& g, VertexSet s) {
    return induced_subgraph(g, c_minor_mask(g, s));
}

}  // namespace wellcov
