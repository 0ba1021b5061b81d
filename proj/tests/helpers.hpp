#pragma once

// Shared fixtures and independent brute-force oracles for the test suite.
// Oracles here deliberately avoid the library's optimized search paths:
// they enumerate subsets or permutations directly from the definitions.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "wellcov/decomposition.hpp"
#include "wellcov/graph.hpp"
#include "wellcov/independence.hpp"
#include "wellcov/shelling.hpp"

namespace testutil {

using namespace wellcov;

/// The 9-vertex fixture: an unmixed, non-König graph with girth 4 and no
/// 3- or 5-cycles. Vertices a..i map to 0..8.
inline Graph fig9() {
    Graph g(9);
    const int a = 0, b = 1, c = 2, d = 3, e = 4, f = 5, gg = 6, h = 7, i = 8;
    for (auto [u, v] : std::vector<std::pair<int, int>>{
             {a, b}, {b, c}, {b, h}, {c, d}, {c, i}, {d, e}, {e, f}, {f, gg}, {gg, h}, {h, i}})
        g.add_edge(u, v);
    return g;
}

inline Graph from_edges(int n, std::vector<std::pair<int, int>> es) {
    Graph g(n);
    for (auto [u, v] : es) g.add_edge(u, v);
    return g;
}

/// All maximal stable sets of G[mask] by direct subset enumeration.
inline std::vector<VertexSet> brute_facets(const Graph& g, VertexSet mask) {
    std::vector<VertexSet> stable;
    for (std::uint64_t s = 0;; s = (s - mask.bits) & mask.bits) {
        VertexSet vs(s);
        if (g.is_stable(vs)) stable.push_back(vs);
        if (s == mask.bits) break;
    }
    std::vector<VertexSet> out;
    for (VertexSet f : stable) {
        bool maximal = true;
        for (int v : mask - f)
            if (maximal && g.is_stable(VertexSet(f.bits | (1ULL << v)))) maximal = false;
        if (maximal) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<VertexSet> brute_facets(const Graph& g) {
    return brute_facets(g, g.vertices());
}

inline bool brute_well_covered(const Graph& g, VertexSet mask) {
    auto fs = brute_facets(g, mask);
    for (const auto& f : fs)
        if (f.count() != fs.front().count()) return false;
    return true;
}

inline bool brute_well_covered(const Graph& g) { return brute_well_covered(g, g.vertices()); }

inline int brute_beta(const Graph& g, VertexSet mask) {
    int best = 0;
    for (VertexSet f : brute_facets(g, mask)) best = std::max(best, f.count());
    return best;
}

inline int brute_nu(const Graph& g, VertexSet mask) {
    auto es = g.edges();
    std::vector<std::pair<int, int>> inside;
    for (auto [u, v] : es)
        if (mask.contains(u) && mask.contains(v)) inside.emplace_back(u, v);
    int m = static_cast<int>(inside.size());
    int best = 0;
    for (std::uint64_t pick = 0; pick < (1ULL << m); ++pick) {
        VertexSet used;
        bool ok = true;
        int sz = 0;
        for (int e = 0; e < m && ok; ++e)
            if ((pick >> e) & 1) {
                auto [u, v] = inside[e];
                if (used.contains(u) || used.contains(v)) ok = false;
                used.add(u);
                used.add(v);
                ++sz;
            }
        if (ok) best = std::max(best, sz);
    }
    return best;
}

/// Vertex decomposability straight from the definition: edgeless, or some
/// vertex is shedding (definitional test) with both branches decomposable.
inline bool brute_vd(const Graph& g, VertexSet mask, std::map<std::uint64_t, bool>& memo) {
    if (g.edgeless_within(mask)) return true;
    auto it = memo.find(mask.bits);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (int v : mask) {
        if (!is_shedding_definitional(g, mask, v)) continue;
        VertexSet del = mask;
        del.remove(v);
        VertexSet nbr = mask - g.closed_neighbors(v);
        if (brute_vd(g, del, memo) && brute_vd(g, nbr, memo)) {
            ok = true;
            break;
        }
    }
    memo[mask.bits] = ok;
    return ok;
}

inline bool brute_vd(const Graph& g) {
    std::map<std::uint64_t, bool> memo;
    return brute_vd(g, g.vertices(), memo);
}

/// Shellability by trying every permutation of the facets (oracle for
/// small facet counts only).
inline bool brute_shellable(const Graph& g, VertexSet mask) {
    FacetList facets;
    facets.facets = brute_facets(g, mask);
    int k = static_cast<int>(facets.facets.size());
    if (k <= 1) return true;
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        ShellingOrder order;
        for (int idx : perm) order.order.push_back(facets.facets[idx]);
        if (verify_shelling(facets, order)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline bool brute_shellable(const Graph& g) { return brute_shellable(g, g.vertices()); }

}  // namespace testutil
