#pragma once

#include "wellcov/graph.hpp"

namespace wellcov {
namespace family {

Graph cycle(int n);
Graph path(int n);
Graph complete(int n);
Graph empty(int n);
Graph star(int leaves);  // K_{1,leaves}, center 0

/// Adds one pendant vertex n+i attached to each x_i of h (the corona H∘K1).
Graph whisker_of(const Graph& h);
inline Graph corona(const Graph& h) { return whisker_of(h); }

/// Cycles C_a and C_b glued along a shared k-clique (k = 1 vertex, k = 2 edge).
Graph clique_sum_of_cycles(int a, int b, int k);

}  // namespace family
}  // namespace wellcov
