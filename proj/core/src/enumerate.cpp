#include "wellcov/enumerate.hpp"

#include <random>

namespace wellcov {

std::uint64_t labeled_graph_count(int n) {
    return 1ULL << (n * (n - 1) / 2);
}

Graph graph_from_code(int n, std::uint64_t code) {
    Graph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((code >> bit) & 1ULL) g.add_edge(i, j);
    return g;
}

std::uint64_t graph_code(const Graph& g) {
    std::uint64_t code = 0;
    int bit = 0;
    int n = g.vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (g.has_edge(i, j)) code |= 1ULL << bit;
    return code;
}

void for_each_labeled_graph(int n, const GraphVisitor& visit, const GraphPredicate& filter) {
    if (n < 0) throw BadParams("negative vertex count");
    if (n > kMaxExhaustiveN)
        throw TooLarge("exhaustive enumeration capped at n = " + std::to_string(kMaxExhaustiveN));
    std::uint64_t total = labeled_graph_count(n);
    for (std::uint64_t code = 0; code < total; ++code) {
        Graph g = graph_from_code(n, code);
        if (!filter || filter(g)) visit(g);
    }
}

void sample_labeled_graphs(int n, std::uint64_t count, std::uint64_t seed,
                           const GraphVisitor& visit, const GraphPredicate& filter) {
    if (n < 0 || n > 11) throw BadParams("sampled enumeration capped at n = 11");
    std::mt19937_64 rng(seed);
    int bits = n * (n - 1) / 2;
    for (std::uint64_t i = 0; i < count; ++i) {
        std::uint64_t code = 0;
        for (int b = 0; b < bits; b += 32)
            code |= static_cast<std::uint64_t>(rng() & 0xffffffffULL) << b;
        if (bits < 64) code &= (1ULL << bits) - 1;
        Graph g = graph_from_code(n, code);
        if (!filter || filter(g)) visit(g);
    }
}

void for_each_unicyclic(int cycle_len, int n, const GraphVisitor& visit) {
    if (cycle_len < 3 || n < cycle_len) throw BadParams("bad unicyclic parameters");
    std::vector<int> attach(n - cycle_len, 0);
    while (true) {
        Graph g(n);
        for (int i = 0; i < cycle_len; ++i) g.add_edge(i, (i + 1) % cycle_len);
        for (int i = 0; i < n - cycle_len; ++i) g.add_edge(cycle_len + i, attach[i]);
        visit(g);
        int pos = n - cycle_len - 1;
        while (pos >= 0 && attach[pos] == cycle_len + pos - 1) attach[pos--] = 0;
        if (pos < 0) break;
        ++attach[pos];
    }
}

}  // namespace wellcov
