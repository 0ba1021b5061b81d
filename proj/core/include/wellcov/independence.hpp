#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "wellcov/graph.hpp"
#include "wellcov/verdict.hpp"

namespace wellcov {

/// The maximal stable sets of G: facets of the independence complex.
struct FacetList {
    std::vector<VertexSet> facets;

    bool pure() const {
        for (const auto& f : facets)
            if (f.count() != facets.front().count()) return false;
        return true;
    }
};

struct Matching {
    std::vector<std::pair<int, int>> edges;
    int size() const { return static_cast<int>(edges.size()); }
    VertexSet covered() const {
        VertexSet s;
        for (auto [u, v] : edges) {
            s.add(u);
            s.add(v);
        }
        return s;
    }
};

struct KonigCertificate {
    Matching matching;
    VertexSet cover;
};

/// Perfect matching e_1..e_g whose edges partition V(G) with g = tau(G),
/// plus a minimum cover picking one endpoint per edge.
struct PerfectKonigMatching {
    Matching matching;
    VertexSet cover;
};

struct CoreNumbers {
    int beta;  // max stable-set size
    int tau;   // min vertex-cover size = n - beta
    int nu;    // max matching size
};

/// ---- enumeration primitives (mask-restricted for internal reuse) ----

/// Visit every maximal stable set of G[mask]; callback returns false to stop.
/// Deterministic: pivoting is index-ordered.
void for_each_maximal_stable_set(const Graph& g, VertexSet mask,
                                 const std::function<bool(VertexSet)>& visit);

/// Visit every stable set (including the empty set) of G[mask].
void for_each_stable_set(const Graph& g, VertexSet mask,
                         const std::function<bool(VertexSet)>& visit);

/// Visit every perfect matching of G[mask]; callback returns false to stop.
void for_each_perfect_matching(const Graph& g, VertexSet mask,
                               const std::function<bool(const Matching&)>& visit);

FacetList maximal_stable_sets(const Graph& g);
FacetList maximal_stable_sets_within(const Graph& g, VertexSet mask);

VertexSet max_stable_set(const Graph& g, VertexSet mask);
Matching maximum_matching(const Graph& g, VertexSet mask);

int beta_within(const Graph& g, VertexSet mask);
CoreNumbers core_numbers(const Graph& g);

VertexSet isolated_vertices(const Graph& g);

/// All maximal stable sets of G[mask] share one cardinality.
bool is_well_covered_within(const Graph& g, VertexSet mask);

struct FacetSizeMismatch {
    VertexSet f1, f2;
};
Verdict<FacetList, FacetSizeMismatch> is_well_covered(const Graph& g);

/// Well-covered, no isolated vertices, 2*tau = n.
Verdict<Unit> is_very_well_covered(const Graph& g);

/// Yes iff tau = nu; No carries the (tau, nu) gap.
Verdict<KonigCertificate, std::pair<int, int>> konig_certificate(const Graph& g);
bool is_konig(const Graph& g);

Verdict<PerfectKonigMatching> perfect_konig_matching(const Graph& g);

struct ExchangeViolation {
    std::pair<int, int> f1, f2;
    std::pair<int, int> matching_edge;
};

/// Condition (b) of the unmixed-König exchange criterion: for edges
/// f1 != f2 with distinct x in f1, y in f2 such that {x,y} is a matching
/// edge, (f1\x) u (f2\y) must be an edge.
Verdict<Unit, ExchangeViolation> exchange_condition(const Graph& g,
                                                    const PerfectKonigMatching& m);

/// Yes(i, j) iff some 4-cycle uses matching edges e_i and e_j as opposite
/// edges (1-based indices into m.edges).
Verdict<std::pair<int, int>> square_with_two_matching_edges(const Graph& g,
                                                            const Matching& m);

bool is_critical_vertex(const Graph& g, int v);
bool is_extendable_vertex(const Graph& g, int v);

/// ---- witness verification ----
bool verify_matching(const Graph& g, const Matching& m);
bool verify_vertex_cover(const Graph& g, VertexSet cover);
bool verify_konig_certificate(const Graph& g, const KonigCertificate& c);
bool verify_perfect_konig_matching(const Graph& g, const PerfectKonigMatching& m);

}  // namespace wellcov
