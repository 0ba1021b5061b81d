#include "wellcov/decomposition.hpp"

#include <algorithm>
#include <unordered_map>

#include "wellcov/independence.hpp"
#include "wellcov/structure.hpp"

namespace wellcov {

namespace {

// Search for a stable set S of G[mask]\N[v] with N(v) subset of N(S),
// i.e. an S that isolates v. Such an S exists iff v is not shedding.
bool isolating_set_exists(const Graph& g, VertexSet avail, VertexSet uncovered) {
    if (uncovered.empty()) return true;
    int y = uncovered.lowest();
    for (int w : g.neighbors(y) & avail) {
        if (isolating_set_exists(g, avail - g.closed_neighbors(w),
                                 uncovered - g.neighbors(w)))
            return true;
    }
    return false;
}

}  // namespace

bool is_shedding_in(const Graph& g, VertexSet mask, int v) {
    g.check_vertex(v);
    VertexSet nbrs = g.neighbors(v) & mask;
    VertexSet avail = mask - g.closed_neighbors(v);
    return !isolating_set_exists(g, avail, nbrs);
}

bool is_shedding(const Graph& g, int v) {
    return is_shedding_in(g, g.vertices(), v);
}

bool is_shedding_definitional(const Graph& g, VertexSet mask, int v) {
    g.check_vertex(v);
    VertexSet del = mask;
    del.remove(v);
    VertexSet nbrs = g.neighbors(v) & mask;
    bool shedding = true;
    for_each_maximal_stable_set(g, del, [&](VertexSet m) {
        if (!m.intersects(nbrs)) {
            // m avoids N(v): a stable set of G\N[v] maximal in G\v
            shedding = false;
            return false;
        }
        return true;
    });
    return shedding;
}

bool shedding_candidate_in(const Graph& g, VertexSet mask, int v) {
    for (int y : g.neighbors(v) & mask) {
        if ((g.closed_neighbors(y) & mask).subset_of(g.closed_neighbors(v) & mask))
            return true;
    }
    return on_five_cycle(g, mask, v);
}

VertexSet shedding_candidates(const Graph& g) {
    VertexSet out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (shedding_candidate_in(g, g.vertices(), v)) out.add(v);
    return out;
}

bool is_simplicial(const Graph& g, int v) {
    VertexSet nb = g.neighbors(v);
    for (int a : nb)
        if (!(nb - g.closed_neighbors(a)).empty()) return false;
    return true;
}

namespace {

bool bk_clique(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
               const std::function<bool(VertexSet)>& visit) {
    if (p.empty() && x.empty()) return visit(r);
    int pivot = -1, best = -1;
    for (int u : p | x) {
        int gain = (p & g.neighbors(u)).count();
        if (gain > best) {
            best = gain;
            pivot = u;
        }
    }
    for (int v : p - g.neighbors(pivot)) {
        VertexSet rv = r;
        rv.add(v);
        if (!bk_clique(g, rv, p & g.neighbors(v), x & g.neighbors(v), visit)) return false;
        p.remove(v);
        x.add(v);
    }
    return true;
}

std::vector<std::vector<int>> simple_cycles_of_length(const Graph& g, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    VertexSet used;
    std::function<void()> extend = [&] {
        int last = path.back();
        if (static_cast<int>(path.size()) == k) {
            if (g.has_edge(last, path.front()) && path[1] < path.back())
                out.push_back(path);
            return;
        }
        for (int w : g.neighbors(last) - used) {
            if (w <= path.front()) continue;
            path.push_back(w);
            used.add(w);
            extend();
            used.remove(w);
            path.pop_back();
        }
    };
    for (int s = 0; s < g.vertex_count(); ++s) {
        path = {s};
        used = VertexSet::of({s});
        extend();
    }
    return out;
}

}  // namespace

void for_each_maximal_clique(const Graph& g, VertexSet mask,
                             const std::function<bool(VertexSet)>& visit) {
    if (mask.empty()) {
        visit(VertexSet{});
        return;
    }
    bk_clique(g, VertexSet{}, mask, VertexSet{}, visit);
}

std::vector<std::array<int, 5>> five_cycles(const Graph& g) {
    std::vector<std::array<int, 5>> out;
    for (const auto& c : simple_cycles_of_length(g, 5))
        out.push_back({c[0], c[1], c[2], c[3], c[4]});
    return out;
}

std::vector<std::array<int, 4>> four_cycles(const Graph& g) {
    std::vector<std::array<int, 4>> out;
    for (const auto& c : simple_cycles_of_length(g, 4))
        out.push_back({c[0], c[1], c[2], c[3]});
    return out;
}

bool is_whisker(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return true;  // vacuous perfect matching
    VertexSet covered;
    VertexSet supports;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != 1) continue;
        int s = g.neighbors(v).lowest();
        if (g.degree(s) == 1) {
            // K2 component: the edge is its own whisker
            covered.add(v);
            covered.add(s);
            continue;
        }
        if (supports.contains(s)) return false;  // two leaves on one support
        supports.add(s);
        covered.add(v);
        covered.add(s);
    }
    return covered == g.vertices();
}

StructureTags structure_tags(const Graph& g) {
    StructureTags tags;
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        if (is_simplicial(g, v)) tags.simplicial.add(v);
        if (g.degree(v) == 1) tags.free_vertices.add(v);
    }

    for_each_maximal_clique(g, g.vertices(), [&](VertexSet clique) {
        if (clique.intersects(tags.simplicial)) tags.simplexes.push_back(clique);
        return true;
    });
    std::sort(tags.simplexes.begin(), tags.simplexes.end());

    for (const auto& c : five_cycles(g)) {
        bool basic = true;
        for (int i = 0; i < 5; ++i) {
            if (g.degree(c[i]) >= 3 && g.degree(c[(i + 1) % 5]) >= 3) {
                basic = false;
                break;
            }
        }
        if (basic) tags.basic5cycles.push_back(c);
    }

    auto in_simplex_or_basic5 = [&](int v) {
        for (const auto& s : tags.simplexes)
            if (s.contains(v)) return true;
        for (const auto& c : tags.basic5cycles)
            for (int u : c)
                if (u == v) return true;
        return false;
    };
    for (const auto& c : four_cycles(g)) {
        for (int i = 0; i < 4; ++i) {
            int a = c[i], b = c[(i + 1) % 4];
            int x = c[(i + 2) % 4], y = c[(i + 3) % 4];
            if (g.degree(a) == 2 && g.degree(b) == 2 && in_simplex_or_basic5(x) &&
                in_simplex_or_basic5(y)) {
                tags.basic4cycles.push_back({a, b, x, y});
                break;
            }
        }
    }

    tags.is_whisker = is_whisker(g);

    // SQC: the three parts are forced by the definition; only the
    // disjointness and coverage conditions can fail.
    VertexSet s_part, c_part, q_part;
    bool ok = true;
    for (const auto& sx : tags.simplexes) {
        if (sx.intersects(s_part)) ok = false;
        s_part |= sx;
    }
    for (const auto& cyc : tags.basic5cycles) {
        VertexSet cs;
        for (int v : cyc) cs.add(v);
        if (cs.intersects(c_part)) ok = false;
        c_part |= cs;
    }
    for (const auto& cyc : tags.basic4cycles) {
        q_part.add(cyc[0]);
        q_part.add(cyc[1]);
    }
    if (ok && !s_part.intersects(c_part) && !s_part.intersects(q_part) &&
        !c_part.intersects(q_part) && (s_part | c_part | q_part) == g.vertices()) {
        tags.sqc_partition = std::array<VertexSet, 3>{s_part, q_part, c_part};
    }
    return tags;
}

namespace {

using VdMemo = std::unordered_map<std::uint64_t, bool>;

bool vd(const Graph& g, VertexSet mask, VdMemo& memo);

bool vd_connected(const Graph& g, VertexSet mask, VdMemo& memo) {
    for (int v : mask) {
        if (!shedding_candidate_in(g, mask, v)) continue;
        if (!is_shedding_in(g, mask, v)) continue;
        VertexSet del = mask;
        del.remove(v);
        if (vd(g, del, memo) && vd(g, mask - g.closed_neighbors(v), memo)) return true;
    }
    return false;
}

bool vd(const Graph& g, VertexSet mask, VdMemo& memo) {
    if (g.edgeless_within(mask)) return true;
    auto it = memo.find(mask.bits);
    if (it != memo.end()) return it->second;
    bool result = true;
    auto comps = components(g, mask);
    if (comps.size() > 1) {
        // the independence complex of a disjoint union is the join
        for (VertexSet comp : comps)
            if (!vd(g, comp, memo)) {
                result = false;
                break;
            }
    } else {
        result = vd_connected(g, mask, memo);
    }
    memo.emplace(mask.bits, result);
    return result;
}

DecompositionTree build_tree(const Graph& g, VertexSet mask, VdMemo& memo) {
    if (g.edgeless_within(mask)) return DecompositionTree::make_leaf(mask);
    for (int v : mask) {
        if (!shedding_candidate_in(g, mask, v)) continue;
        if (!is_shedding_in(g, mask, v)) continue;
        VertexSet del = mask;
        del.remove(v);
        VertexSet nbr = mask - g.closed_neighbors(v);
        if (vd(g, del, memo) && vd(g, nbr, memo))
            return DecompositionTree::make_shed(v, build_tree(g, del, memo),
                                                build_tree(g, nbr, memo));
    }
    throw InternalInconsistency("decomposition tree requested for a non-VD graph");
}

}  // namespace

bool vertex_decomposable_within(const Graph& g, VertexSet mask) {
    VdMemo memo;
    return vd(g, mask, memo);
}

Verdict<DecompositionTree> vertex_decomposable(const Graph& g) {
    VdMemo memo;
    if (!vd(g, g.vertices(), memo)) return Verdict<DecompositionTree>::no();
    return Verdict<DecompositionTree>::yes(build_tree(g, g.vertices(), memo));
}

bool verify_decomposition_tree(const Graph& g, VertexSet mask, const DecompositionTree& t) {
    if (t.leaf) return t.leaf_vertices == mask && g.edgeless_within(mask);
    int v = t.shed_vertex;
    if (!mask.contains(v)) return false;
    if (!t.del_branch || !t.nbr_branch) return false;
    if (!is_shedding_in(g, mask, v)) return false;
    VertexSet del = mask;
    del.remove(v);
    return verify_decomposition_tree(g, del, *t.del_branch) &&
           verify_decomposition_tree(g, mask - g.closed_neighbors(v), *t.nbr_branch);
}

bool verify_decomposition_tree(const Graph& g, const DecompositionTree& t) {
    return verify_decomposition_tree(g, g.vertices(), t);
}

Verdict<DecompositionTree> free_vertex_vd_step(const Graph& g, int x) {
    g.check_vertex(x);
    VertexSet all = g.vertices();
    if (has_cycle_of_length(g, all, 3) || has_cycle_of_length(g, all, 5))
        throw PreconditionViolated("graph contains a 3-cycle or 5-cycle");
    if (g.degree(x) != 1) throw PreconditionViolated("vertex is not free");
    int y = g.neighbors(x).lowest();
    bool ok = vertex_decomposable_within(g, all - g.closed_neighbors(x)) &&
              vertex_decomposable_within(g, all - g.closed_neighbors(y));
    if (!ok) return Verdict<DecompositionTree>::no();
    auto full = vertex_decomposable(g);
    if (!full.is_yes())
        throw InternalInconsistency("free-vertex criterion disagrees with the direct search");
    return full;
}

}  // namespace wellcov
