#include "wellcov/shelling.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>

#include "wellcov/decomposition.hpp"
#include "wellcov/structure.hpp"

namespace wellcov {

int default_facet_cap() {
    if (const char* env = std::getenv("WELLCOVERED_FACET_CAP")) {
        int cap = std::atoi(env);
        if (cap >= 1) return std::min(cap, 63);
    }
    return 20;
}

bool verify_shelling(const FacetList& facets, const ShellingOrder& order) {
    std::vector<VertexSet> sorted_facets = facets.facets;
    std::vector<VertexSet> sorted_order = order.order;
    std::sort(sorted_facets.begin(), sorted_facets.end());
    std::sort(sorted_order.begin(), sorted_order.end());
    if (sorted_facets != sorted_order)
        throw NotAPermutation("order is not a permutation of the facet list");

    const auto& f = order.order;
    for (std::size_t j = 1; j < f.size(); ++j) {
        VertexSet good;  // v with F_j \ F_l = {v} for some l < j
        for (std::size_t l = 0; l < j; ++l) {
            VertexSet diff = f[j] - f[l];
            if (diff.count() == 1) good |= diff;
        }
        for (std::size_t i = 0; i < j; ++i)
            if (!(f[j] - f[i]).intersects(good)) return false;
    }
    return true;
}

bool is_pure(const FacetList& facets) {
    return facets.pure();
}

namespace {

struct ShellingSearch {
    std::vector<VertexSet> facets;
    std::unordered_map<std::uint64_t, bool> memo;
    std::uint64_t full;

    bool appendable(std::uint64_t chosen, int j) const {
        if (chosen == 0) return true;
        VertexSet good;
        for (int l = 0; l < static_cast<int>(facets.size()); ++l) {
            if (!((chosen >> l) & 1ULL)) continue;
            VertexSet diff = facets[j] - facets[l];
            if (diff.count() == 1) good |= diff;
        }
        for (int i = 0; i < static_cast<int>(facets.size()); ++i) {
            if (!((chosen >> i) & 1ULL)) continue;
            if (!(facets[j] - facets[i]).intersects(good)) return false;
        }
        return true;
    }

    bool can_complete(std::uint64_t chosen) {
        if (chosen == full) return true;
        auto it = memo.find(chosen);
        if (it != memo.end()) return it->second;
        bool ok = false;
        for (int j = 0; j < static_cast<int>(facets.size()) && !ok; ++j) {
            if ((chosen >> j) & 1ULL) continue;
            if (appendable(chosen, j)) ok = can_complete(chosen | (1ULL << j));
        }
        memo.emplace(chosen, ok);
        return ok;
    }

    ShellingOrder extract_order() {
        ShellingOrder order;
        std::uint64_t chosen = 0;
        while (chosen != full) {
            for (int j = 0; j < static_cast<int>(facets.size()); ++j) {
                if ((chosen >> j) & 1ULL) continue;
                if (appendable(chosen, j) && can_complete(chosen | (1ULL << j))) {
                    order.order.push_back(facets[j]);
                    chosen |= 1ULL << j;
                    break;
                }
            }
        }
        return order;
    }
};

}  // namespace

Verdict<ShellingOrder> shellable_within(const Graph& g, VertexSet mask, int facet_cap) {
    if (facet_cap < 0) facet_cap = default_facet_cap();
    FacetList facets = maximal_stable_sets_within(g, mask);
    int k = static_cast<int>(facets.facets.size());
    if (k > facet_cap)
        return Verdict<ShellingOrder>::unknown("facet count " + std::to_string(k) +
                                               " exceeds cap " + std::to_string(facet_cap));
    if (k <= 1) return Verdict<ShellingOrder>::yes(ShellingOrder{facets.facets});
    ShellingSearch search{facets.facets, {}, (1ULL << k) - 1};
    if (!search.can_complete(0)) return Verdict<ShellingOrder>::no();
    return Verdict<ShellingOrder>::yes(search.extract_order());
}

Verdict<ShellingOrder> shellable(const Graph& g, int facet_cap) {
    return shellable_within(g, g.vertices(), facet_cap);
}

namespace {

// first basic 5-cycle of G[mask] in enumeration order, if any
std::optional<std::array<int, 5>> find_basic5(const Graph& g, VertexSet mask) {
    auto sub = induced_subgraph(g, mask);
    auto tags = structure_tags(sub.graph);
    if (tags.basic5cycles.empty()) return std::nullopt;
    std::array<int, 5> c{};
    for (int i = 0; i < 5; ++i) c[i] = sub.vertex_map[tags.basic5cycles.front()[i]];
    return c;
}

Verdict<ShellingOrder> shellable_basic5_rec(const Graph& g, VertexSet mask) {
    auto comps = components(g, mask);
    auto cycle = comps.size() == 1 ? find_basic5(g, mask) : std::nullopt;
    if (!cycle) return shellable_within(g, mask);

    std::array<int, 5> c = *cycle;
    std::sort(c.begin(), c.end());
    for (int x : c) {
        if (!is_shedding_in(g, mask, x)) continue;
        VertexSet del = mask;
        del.remove(x);
        auto left = shellable_basic5_rec(g, del);
        if (!left.is_yes()) {
            if (left.is_unknown()) return left;
            continue;
        }
        auto right = shellable_basic5_rec(g, mask - g.closed_neighbors(x));
        if (!right.is_yes()) {
            if (right.is_unknown()) return right;
            continue;
        }
        // concatenation: F_1..F_k, G_1 u {x}, .., G_q u {x}
        ShellingOrder order = *left.witness;
        for (VertexSet f : right.witness->order) {
            f.add(x);
            order.order.push_back(f);
        }
        return Verdict<ShellingOrder>::yes(std::move(order));
    }
    return Verdict<ShellingOrder>::no();
}

}  // namespace

Verdict<ShellingOrder> shellable_via_basic5(const Graph& g) {
    if (!is_connected(g)) throw PreconditionViolated("graph is not connected");
    if (!find_basic5(g, g.vertices()))
        throw PreconditionViolated("graph has no basic 5-cycle");
    auto verdict = shellable_basic5_rec(g, g.vertices());
    if (verdict.is_yes() && !verify_shelling(maximal_stable_sets(g), *verdict.witness))
        throw InternalInconsistency("assembled order failed shelling verification");
    return verdict;
}

namespace {

Verdict<ShellingOrder> shellable_girth11_rec(const Graph& g, VertexSet mask) {
    if (g.edgeless_within(mask))
        return Verdict<ShellingOrder>::yes(ShellingOrder{{mask}});
    for (int x : mask) {
        if ((g.neighbors(x) & mask).count() != 1) continue;
        int y = (g.neighbors(x) & mask).lowest();
        auto a = shellable_girth11_rec(g, mask - g.closed_neighbors(x));
        if (!a.is_yes()) continue;
        auto b = shellable_girth11_rec(g, mask - g.closed_neighbors(y));
        if (!b.is_yes()) continue;
        // shelling of G\y is the order of G\N[x] with x added to every
        // facet; then append the G\N[y] facets extended by y
        ShellingOrder order;
        for (VertexSet f : a.witness->order) {
            f.add(x);
            order.order.push_back(f);
        }
        for (VertexSet f : b.witness->order) {
            f.add(y);
            order.order.push_back(f);
        }
        return Verdict<ShellingOrder>::yes(std::move(order));
    }
    // no leaf recursion applies: some component has minimum degree >= 2,
    // hence a 2-connected block of girth >= 11, which is never shellable
    return Verdict<ShellingOrder>::no();
}

}  // namespace

Verdict<ShellingOrder> shellable_girth11(const Graph& g) {
    int girth = girth_within(g, g.vertices());
    if (girth != kInfiniteGirth && girth < 11)
        throw PreconditionViolated("girth below 11");
    auto verdict = shellable_girth11_rec(g, g.vertices());
    if (verdict.is_yes() && !verify_shelling(maximal_stable_sets(g), *verdict.witness))
        throw InternalInconsistency("assembled order failed shelling verification");
    return verdict;
}

}  // namespace wellcov
