#include "wellcov/independence.hpp"

#include <algorithm>

namespace wellcov {

namespace {

// vertices of mask neither equal nor adjacent to v
VertexSet nonadjacent(const Graph& g, VertexSet mask, int v) {
    return mask - g.closed_neighbors(v);
}

// Bron-Kerbosch with pivoting on the complement graph: maximal cliques of
// the non-adjacency relation are maximal stable sets.
bool bk(const Graph& g, VertexSet mask, VertexSet r, VertexSet p, VertexSet x,
        const std::function<bool(VertexSet)>& visit) {
    if (p.empty() && x.empty()) return visit(r);
    int pivot = -1, best = -1;
    for (int u : p | x) {
        int gain = (p & nonadjacent(g, mask, u)).count();
        if (gain > best) {
            best = gain;
            pivot = u;
        }
    }
    VertexSet cand = p - nonadjacent(g, mask, pivot);
    for (int v : cand) {
        VertexSet nv = nonadjacent(g, mask, v);
        VertexSet rv = r;
        rv.add(v);
        if (!bk(g, mask, rv, p & nv, x & nv, visit)) return false;
        p.remove(v);
        x.add(v);
    }
    return true;
}

}  // namespace

void for_each_maximal_stable_set(const Graph& g, VertexSet mask,
                                 const std::function<bool(VertexSet)>& visit) {
    if (mask.empty()) {
        visit(VertexSet{});
        return;
    }
    bk(g, mask, VertexSet{}, mask, VertexSet{}, visit);
}

void for_each_stable_set(const Graph& g, VertexSet mask,
                         const std::function<bool(VertexSet)>& visit) {
    // subset DFS: branch on the lowest remaining vertex
    std::function<bool(VertexSet, VertexSet)> rec = [&](VertexSet chosen, VertexSet avail) {
        if (!visit(chosen)) return false;
        while (!avail.empty()) {
            int v = avail.lowest();
            avail.remove(v);
            VertexSet cv = chosen;
            cv.add(v);
            if (!rec(cv, avail - g.neighbors(v))) return false;
        }
        return true;
    };
    rec(VertexSet{}, mask);
}

void for_each_perfect_matching(const Graph& g, VertexSet mask,
                               const std::function<bool(const Matching&)>& visit) {
    Matching m;
    std::function<bool(VertexSet)> rec = [&](VertexSet rest) {
        if (rest.empty()) return visit(m);
        int u = rest.lowest();
        for (int w : g.neighbors(u) & rest) {
            m.edges.emplace_back(u, w);
            VertexSet next = rest;
            next.remove(u);
            next.remove(w);
            bool keep = rec(next);
            m.edges.pop_back();
            if (!keep) return false;
        }
        return true;
    };
    rec(mask);
}

FacetList maximal_stable_sets_within(const Graph& g, VertexSet mask) {
    FacetList out;
    for_each_maximal_stable_set(g, mask, [&](VertexSet f) {
        out.facets.push_back(f);
        return true;
    });
    std::sort(out.facets.begin(), out.facets.end());
    return out;
}

FacetList maximal_stable_sets(const Graph& g) {
    return maximal_stable_sets_within(g, g.vertices());
}

namespace {

void mss_search(const Graph& g, VertexSet mask, VertexSet current, VertexSet& best) {
    if (current.count() + mask.count() <= best.count()) return;
    if (mask.empty()) {
        best = current;
        return;
    }
    // force vertices isolated within the mask
    for (int v : mask) {
        if (!g.neighbors(v).intersects(mask)) {
            current.add(v);
            mask.remove(v);
        }
    }
    if (current.count() + mask.count() <= best.count()) return;
    if (mask.empty()) {
        best = current;
        return;
    }
    int pick = -1, deg = -1;
    for (int v : mask) {
        int d = (g.neighbors(v) & mask).count();
        if (d > deg) {
            deg = d;
            pick = v;
        }
    }
    VertexSet with = current;
    with.add(pick);
    mss_search(g, mask - g.closed_neighbors(pick), with, best);
    VertexSet without = mask;
    without.remove(pick);
    mss_search(g, without, current, best);
}

void matching_search(const Graph& g, VertexSet mask, Matching& current, Matching& best) {
    for (int v : mask)
        if (!g.neighbors(v).intersects(mask)) mask.remove(v);
    if (current.size() + mask.count() / 2 <= best.size()) return;
    if (mask.empty()) {
        best = current;
        return;
    }
    int u = mask.lowest();
    for (int w : g.neighbors(u) & mask) {
        current.edges.emplace_back(u, w);
        VertexSet next = mask;
        next.remove(u);
        next.remove(w);
        matching_search(g, next, current, best);
        current.edges.pop_back();
    }
    VertexSet skip = mask;
    skip.remove(u);
    matching_search(g, skip, current, best);
}

}  // namespace

VertexSet max_stable_set(const Graph& g, VertexSet mask) {
    VertexSet best;
    // greedy seed by ascending index
    VertexSet avail = mask;
    while (!avail.empty()) {
        int v = avail.lowest();
        best.add(v);
        avail -= g.closed_neighbors(v);
    }
    VertexSet result = best;
    mss_search(g, mask, VertexSet{}, result);
    return result;
}

int beta_within(const Graph& g, VertexSet mask) {
    return max_stable_set(g, mask).count();
}

Matching maximum_matching(const Graph& g, VertexSet mask) {
    Matching best;
    // greedy seed
    VertexSet avail = mask;
    while (!avail.empty()) {
        int u = avail.lowest();
        avail.remove(u);
        VertexSet nb = g.neighbors(u) & avail;
        if (!nb.empty()) {
            int w = nb.lowest();
            best.edges.emplace_back(u, w);
            avail.remove(w);
        }
    }
    Matching current;
    matching_search(g, mask, current, best);
    std::sort(best.edges.begin(), best.edges.end());
    return best;
}

CoreNumbers core_numbers(const Graph& g) {
    int beta = beta_within(g, g.vertices());
    int nu = maximum_matching(g, g.vertices()).size();
    return {beta, g.vertex_count() - beta, nu};
}

VertexSet isolated_vertices(const Graph& g) {
    VertexSet z;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) z.add(v);
    return z;
}

bool is_well_covered_within(const Graph& g, VertexSet mask) {
    int size = -1;
    bool ok = true;
    for_each_maximal_stable_set(g, mask, [&](VertexSet f) {
        if (size == -1) {
            size = f.count();
            return true;
        }
        if (f.count() != size) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

Verdict<FacetList, FacetSizeMismatch> is_well_covered(const Graph& g) {
    FacetList facets = maximal_stable_sets(g);
    for (const auto& f : facets.facets)
        if (f.count() != facets.facets.front().count())
            return Verdict<FacetList, FacetSizeMismatch>::no({facets.facets.front(), f});
    return Verdict<FacetList, FacetSizeMismatch>::yes(std::move(facets));
}

Verdict<Unit> is_very_well_covered(const Graph& g) {
    if (!isolated_vertices(g).empty())
        return Verdict<Unit>::no();
    if (!is_well_covered_within(g, g.vertices())) return Verdict<Unit>::no();
    CoreNumbers c = core_numbers(g);
    if (2 * c.tau != g.vertex_count()) return Verdict<Unit>::no();
    return Verdict<Unit>::yes({});
}

Verdict<KonigCertificate, std::pair<int, int>> konig_certificate(const Graph& g) {
    CoreNumbers c = core_numbers(g);
    if (c.tau != c.nu)
        return Verdict<KonigCertificate, std::pair<int, int>>::no({c.tau, c.nu});
    KonigCertificate cert;
    cert.matching = maximum_matching(g, g.vertices());
    cert.cover = g.vertices() - max_stable_set(g, g.vertices());
    return Verdict<KonigCertificate, std::pair<int, int>>::yes(std::move(cert));
}

bool is_konig(const Graph& g) {
    CoreNumbers c = core_numbers(g);
    return c.tau == c.nu;
}

Verdict<PerfectKonigMatching> perfect_konig_matching(const Graph& g) {
    int n = g.vertex_count();
    if (n % 2 != 0) return Verdict<PerfectKonigMatching>::no();
    CoreNumbers c = core_numbers(g);
    if (c.tau != n / 2) return Verdict<PerfectKonigMatching>::no();
    PerfectKonigMatching out;
    bool found = false;
    for_each_perfect_matching(g, g.vertices(), [&](const Matching& m) {
        out.matching = m;
        found = true;
        return false;
    });
    if (!found) return Verdict<PerfectKonigMatching>::no();
    // any minimum cover meets each matching edge in exactly one endpoint
    out.cover = g.vertices() - max_stable_set(g, g.vertices());
    return Verdict<PerfectKonigMatching>::yes(std::move(out));
}

Verdict<Unit, ExchangeViolation> exchange_condition(const Graph& g,
                                                    const PerfectKonigMatching& m) {
    if (!verify_perfect_konig_matching(g, m))
        throw InvalidMatching("not a perfect matching of König type for this graph");
    auto all_edges = g.edges();
    for (const auto& f1 : all_edges) {
        for (const auto& f2 : all_edges) {
            if (f1 == f2) continue;
            for (int x : {f1.first, f1.second}) {
                for (int y : {f2.first, f2.second}) {
                    if (x == y) continue;
                    bool is_matching_edge = false;
                    for (auto e : m.matching.edges)
                        if ((e.first == x && e.second == y) ||
                            (e.first == y && e.second == x))
                            is_matching_edge = true;
                    if (!is_matching_edge) continue;
                    int a = f1.first == x ? f1.second : f1.first;
                    int b = f2.first == y ? f2.second : f2.first;
                    if (a == b || !g.has_edge(a, b))
                        return Verdict<Unit, ExchangeViolation>::no(
                            {f1, f2, {std::min(x, y), std::max(x, y)}});
                }
            }
        }
    }
    return Verdict<Unit, ExchangeViolation>::yes({});
}

Verdict<std::pair<int, int>> square_with_two_matching_edges(const Graph& g,
                                                            const Matching& m) {
    if (!verify_matching(g, m)) throw InvalidMatching("not a matching of this graph");
    for (int i = 0; i < m.size(); ++i) {
        auto [a, b] = m.edges[i];
        for (int j = i + 1; j < m.size(); ++j) {
            auto [c, d] = m.edges[j];
            if ((g.has_edge(a, c) && g.has_edge(b, d)) ||
                (g.has_edge(a, d) && g.has_edge(b, c)))
                return Verdict<std::pair<int, int>>::yes({i + 1, j + 1});
        }
    }
    return Verdict<std::pair<int, int>>::no();
}

bool is_critical_vertex(const Graph& g, int v) {
    g.check_vertex(v);
    VertexSet rest = g.vertices();
    rest.remove(v);
    int beta_full = beta_within(g, g.vertices());
    int beta_del = beta_within(g, rest);
    // tau drops by one exactly when beta is preserved
    return beta_full == beta_del;
}

bool is_extendable_vertex(const Graph& g, int v) {
    g.check_vertex(v);
    VertexSet rest = g.vertices();
    rest.remove(v);
    if (!is_well_covered_within(g, g.vertices())) return false;
    if (!is_well_covered_within(g, rest)) return false;
    return beta_within(g, g.vertices()) == beta_within(g, rest);
}

bool verify_matching(const Graph& g, const Matching& m) {
    VertexSet seen;
    for (auto [u, v] : m.edges) {
        if (!g.has_edge(u, v)) return false;
        if (seen.contains(u) || seen.contains(v)) return false;
        seen.add(u);
        seen.add(v);
    }
    return true;
}

bool verify_vertex_cover(const Graph& g, VertexSet cover) {
    for (auto [u, v] : g.edges())
        if (!cover.contains(u) && !cover.contains(v)) return false;
    return true;
}

bool verify_konig_certificate(const Graph& g, const KonigCertificate& c) {
    if (!verify_matching(g, c.matching)) return false;
    if (!verify_vertex_cover(g, c.cover)) return false;
    // equal sizes pin both at the optimum: nu <= tau always
    return c.matching.size() == c.cover.count();
}

bool verify_perfect_konig_matching(const Graph& g, const PerfectKonigMatching& m) {
    if (!verify_matching(g, m.matching)) return false;
    if (!(m.matching.covered() == g.vertices())) return false;
    if (!verify_vertex_cover(g, m.cover)) return false;
    if (m.cover.count() != m.matching.size()) return false;
    for (auto [u, v] : m.matching.edges)
        if (m.cover.contains(u) == m.cover.contains(v)) return false;
    return true;
}

}  // namespace wellcov
