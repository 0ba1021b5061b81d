#include "wellcov/family.hpp"

namespace wellcov {
namespace family {

Graph cycle(int n) {
    if (n < 3) throw BadParams("cycle needs at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path(int n) {
    if (n < 1) throw BadParams("path needs at least 1 vertex");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph complete(int n) {
    if (n < 1) throw BadParams("complete graph needs at least 1 vertex");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph empty(int n) {
    if (n < 0) throw BadParams("negative vertex count");
    return Graph(n);
}

Graph star(int leaves) {
    if (leaves < 0) throw BadParams("negative leaf count");
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph whisker_of(const Graph& h) {
    int n = h.vertex_count();
    if (2 * n > Graph::kMaxVertices) throw BadParams("whisker graph exceeds the vertex cap");
    if (n == 0) throw BadParams("whisker of the empty graph");
    Graph g(2 * n);
    for (auto [u, v] : h.edges()) g.add_edge(u, v);
    for (int i = 0; i < n; ++i) g.add_edge(i, n + i);
    return g;
}

Graph clique_sum_of_cycles(int a, int b, int k) {
    if (a < 3 || b < 3) throw BadParams("cycles need at least 3 vertices");
    if (k != 1 && k != 2) throw BadParams("clique-sum of cycles supports k = 1 or 2");
    int n = a + b - k;
    if (n > Graph::kMaxVertices) throw BadParams("clique-sum exceeds the vertex cap");
    Graph g(n);
    for (int i = 0; i < a; ++i) g.add_edge(i, (i + 1) % a);
    // second cycle reuses vertices 0..k-1 and continues at a..n-1
    std::vector<int> ring;
    for (int i = 0; i < k; ++i) ring.push_back(i);
    for (int i = a; i < n; ++i) ring.push_back(i);
    for (std::size_t i = 0; i < ring.size(); ++i)
        g.add_edge(ring[i], ring[(i + 1) % ring.size()]);
    return g;
}

}  // namespace family
}  // namespace wellcov
