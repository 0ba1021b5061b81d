#pragma once

#include <vector>

#include "wellcov/graph.hpp"
#include "wellcov/independence.hpp"
#include "wellcov/verdict.hpp"

namespace wellcov {

/// An ordering of the facets of the independence complex claimed to be a
/// shelling.
struct ShellingOrder {
    std::vector<VertexSet> order;
};

/// Default cap on the facet count for the backtracking search; override
/// via the WELLCOVERED_FACET_CAP environment variable or the explicit
/// parameter.
int default_facet_cap();

/// True iff `order` is a permutation of `facets` satisfying the shelling
/// condition: for all i < j there are v in F_j\F_i and l < j with
/// F_j\F_l = {v}. Throws NotAPermutation.
bool verify_shelling(const FacetList& facets, const ShellingOrder& order);

/// Backtracking decision with prefix-set memoization. Unknown when the
/// facet count exceeds the cap.
Verdict<ShellingOrder> shellable(const Graph& g, int facet_cap = -1);
Verdict<ShellingOrder> shellable_within(const Graph& g, VertexSet mask, int facet_cap = -1);

bool is_pure(const FacetList& facets);

/// Fast path for connected graphs with a basic 5-cycle: recurse on G\x
/// and G\N[x] for shedding cycle vertices x and assemble the shelling by
/// concatenation.
Verdict<ShellingOrder> shellable_via_basic5(const Graph& g);

/// Fast path for girth >= 11 (forests included): leaf recursion on
/// G\N[x], G\N[y] for free x with N(x) = {y}.
Verdict<ShellingOrder> shellable_girth11(const Graph& g);

}  // namespace wellcov
