#pragma once

#include <array>
#include <utility>
#include <vector>

#include "wellcov/errors.hpp"
#include "wellcov/vertex_set.hpp"

namespace wellcov {

/// Simple undirected graph on vertices 0..n-1, n <= 64, with bitset
/// adjacency rows. Symmetric and loop-free by construction.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;
    explicit Graph(int n) : n_(n) {
        if (n < 0 || n > kMaxVertices)
            throw BadParams("vertex count out of range: " + std::to_string(n));
        adj_.fill(VertexSet{});
    }

    int vertex_count() const { return n_; }
    VertexSet vertices() const { return VertexSet::full(n_); }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw MalformedInput("loop edge at vertex " + std::to_string(u));
        adj_[u].add(v);
        adj_[v].add(u);
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        adj_[u].remove(v);
        adj_[v].remove(u);
    }

    bool has_edge(int u, int v) const { return u != v && adj_[u].contains(v); }

    VertexSet neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }
    VertexSet closed_neighbors(int v) const {
        VertexSet s = neighbors(v);
        s.add(v);
        return s;
    }
    /// Union of open neighborhoods over S (may intersect S).
    VertexSet neighbors(VertexSet s) const {
        VertexSet out;
        for (int v : s) out |= adj_[v];
        return out;
    }
    VertexSet closed_neighbors(VertexSet s) const { return neighbors(s) | s; }

    int degree(int v) const { return neighbors(v).count(); }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += adj_[v].count();
        return twice / 2;
    }

    /// Edges as (u, v) pairs with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool is_stable(VertexSet s) const {
        for (int v : s)
            if (adj_[v].intersects(s)) return false;
        return true;
    }

    /// Edge set restricted to `mask` is empty.
    bool edgeless_within(VertexSet mask) const {
        for (int v : mask)
            if ((adj_[v] & mask).intersects(mask)) return false;
        return true;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range [0," +
                                   std::to_string(n_) + ")");
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        if (a.n_ != b.n_) return false;
        for (int v = 0; v < a.n_; ++v)
            if (!(a.adj_[v] == b.adj_[v])) return false;
        return true;
    }

private:
    int n_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
};

/// Induced subgraph together with the map from new labels back to old ones.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_map;  // vertex_map[new] = old
};

/// G[S], vertices re-indexed ascending by original label.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

struct Neighborhoods {
    VertexSet open;
    VertexSet closed;
};
Neighborhoods neighborhoods(const Graph& g, int v);

/// G \ N[S] for a stable set S (the c-minor of G at S); throws NotStable
/// if S contains an edge.
InducedSubgraph c_minor(const Graph& g, VertexSet s);

/// The vertex set surviving in G \ N[S]; same stability check.
VertexSet c_minor_mask(const Graph& g, VertexSet s);

}  // namespace wellcov
