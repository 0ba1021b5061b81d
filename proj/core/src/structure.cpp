#include "wellcov/structure.hpp"

#include <algorithm>
#include <array>

namespace wellcov {

DistanceLayers distance_layers(const Graph& g, VertexSet w) {
    if (w.empty()) throw EmptySource("distance_layers: empty source set");
    if (!w.subset_of(g.vertices()))
        throw VertexOutOfRange("distance_layers: source outside graph");
    DistanceLayers out;
    VertexSet seen = w;
    VertexSet frontier = w;
    while (!frontier.empty()) {
        out.layers.push_back(frontier);
        frontier = g.neighbors(frontier) - seen;
        seen |= frontier;
    }
    out.unreachable = g.vertices() - seen;
    return out;
}

namespace {

struct BlockDfs {
    const Graph& g;
    std::array<int, Graph::kMaxVertices> disc{}, low{};
    std::vector<std::pair<int, int>> edge_stack;
    BlockDecomposition out;
    int timer = 0;

    explicit BlockDfs(const Graph& graph) : g(graph) { disc.fill(-1); }

    void pop_block(std::pair<int, int> until) {
        VertexSet block;
        while (true) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            block.add(e.first);
            block.add(e.second);
            if (e == until) break;
        }
        out.blocks.push_back(block);
    }

    void dfs(int u, int parent) {
        disc[u] = low[u] = timer++;
        int children = 0;
        for (int v : g.neighbors(u)) {
            if (disc[v] == -1) {
                ++children;
                edge_stack.emplace_back(u, v);
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    if (parent != -1 || children > 1) out.cut_vertices.add(u);
                    pop_block({u, v});
                }
            } else if (v != parent && disc[v] < disc[u]) {
                edge_stack.emplace_back(u, v);
                low[u] = std::min(low[u], disc[v]);
            }
        }
    }
};

}  // namespace

BlockDecomposition blocks(const Graph& g) {
    BlockDfs dfs(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (dfs.disc[v] != -1) continue;
        dfs.dfs(v, -1);
        if (g.degree(v) == 0) dfs.out.blocks.push_back(VertexSet::of({v}));
    }
    std::sort(dfs.out.blocks.begin(), dfs.out.blocks.end());
    return dfs.out;
}

namespace {

bool chordless(const Graph& g, const std::vector<int>& cycle) {
    int k = static_cast<int>(cycle.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 2; j < k; ++j) {
            if (i == 0 && j == k - 1) continue;
            if (g.has_edge(cycle[i], cycle[j])) return false;
        }
    return true;
}

bool extend_cycle(const Graph& g, VertexSet mask, int k, bool induced,
                  std::vector<int>& path, VertexSet used) {
    int last = path.back();
    if (static_cast<int>(path.size()) == k)
        return g.has_edge(last, path.front()) && (!induced || chordless(g, path));
    VertexSet cand = g.neighbors(last) & mask;
    cand -= used;
    for (int w : cand) {
        if (w <= path.front()) continue;  // anchor on the smallest cycle vertex
        path.push_back(w);
        used.add(w);
        if (extend_cycle(g, mask, k, induced, path, used)) return true;
        used.remove(w);
        path.pop_back();
    }
    return false;
}

}  // namespace

bool has_cycle_of_length(const Graph& g, VertexSet mask, int k, bool induced) {
    if (k < 3) return false;
    for (int s : mask) {
        std::vector<int> path{s};
        if (extend_cycle(g, mask, k, induced, path, VertexSet::of({s}))) return true;
    }
    return false;
}

bool on_five_cycle(const Graph& g, VertexSet mask, int v) {
    if (!mask.contains(v)) return false;
    std::vector<int> path{v};
    // same DFS but without the anchor restriction; fix the start at v
    struct Rec {
        const Graph& g;
        VertexSet mask;
        bool go(std::vector<int>& path, VertexSet used) {
            int last = path.back();
            if (path.size() == 5) return g.has_edge(last, path.front());
            VertexSet cand = (g.neighbors(last) & mask) - used;
            for (int w : cand) {
                path.push_back(w);
                used.add(w);
                if (go(path, used)) return true;
                used.remove(w);
                path.pop_back();
            }
            return false;
        }
    } rec{g, mask};
    return rec.go(path, VertexSet::of({v}));
}

int girth_within(const Graph& g, VertexSet mask) {
    int best = kInfiniteGirth;
    for (int s : mask) {
        std::array<int, Graph::kMaxVertices> dist{}, parent{};
        dist.fill(-1);
        parent.fill(-1);
        dist[s] = 0;
        std::vector<int> queue{s};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int x = queue[qi];
            for (int y : g.neighbors(x) & mask) {
                if (dist[y] == -1) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if (y != parent[x]) {
                    int len = dist[x] + dist[y] + 1;
                    if (best == kInfiniteGirth || len < best) best = len;
                }
            }
        }
    }
    return best;
}

CycleInfo girth_and_cycles(const Graph& g, bool induced) {
    CycleInfo info;
    info.girth = girth_within(g, g.vertices());
    for (int k : {3, 4, 5, 7})
        info.has_k_cycle[k] = has_cycle_of_length(g, g.vertices(), k, induced);
    return info;
}

std::vector<VertexSet> components(const Graph& g, VertexSet mask) {
    std::vector<VertexSet> out;
    VertexSet rest = mask;
    while (!rest.empty()) {
        VertexSet comp, frontier;
        frontier.add(rest.lowest());
        while (!frontier.empty()) {
            comp |= frontier;
            frontier = (g.neighbors(frontier) & mask) - comp;
        }
        out.push_back(comp);
        rest -= comp;
    }
    return out;
}

bool is_connected(const Graph& g) {
    return components(g, g.vertices()).size() <= 1;
}

bool is_bipartite(const Graph& g) {
    VertexSet color[2];
    for (VertexSet comp : components(g, g.vertices())) {
        VertexSet frontier = VertexSet::of({comp.lowest()});
        VertexSet seen;
        int side = 0;
        while (!frontier.empty()) {
            color[side] |= frontier;
            seen |= frontier;
            frontier = (g.neighbors(frontier) & comp) - seen;
            side ^= 1;
        }
    }
    for (int side = 0; side < 2; ++side)
        for (int v : color[side])
            if (g.neighbors(v).intersects(color[side])) return false;
    return true;
}

bool is_unicyclic(const Graph& g) {
    return g.vertex_count() >= 3 && is_connected(g) && g.edge_count() == g.vertex_count();
}

VertexSet unicyclic_cycle(const Graph& g) {
    if (!is_unicyclic(g)) throw PreconditionViolated("graph is not unicyclic");
    VertexSet alive = g.vertices();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : alive) {
            if ((g.neighbors(v) & alive).count() <= 1) {
                alive.remove(v);
                changed = true;
            }
        }
    }
    return alive;
}

bool is_tree(const Graph& g) {
    return is_connected(g) && g.edge_count() == g.vertex_count() - 1;
}

}  // namespace wellcov
