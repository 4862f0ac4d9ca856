#ifndef DEFCOLOR_TEST_UTIL_HPP
#define DEFCOLOR_TEST_UTIL_HPP

#include <random>
#include <set>
#include <utility>
#include <vector>

#include "defcolor/colouring.hpp"
#include "defcolor/embedding.hpp"
#include "defcolor/graph.hpp"

namespace testutil {

using defcolor::Colouring;
using defcolor::Graph;
using defcolor::ListAssignment;
using defcolor::RotationSystem;

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int n) {
    return static_cast<int>(rng() % static_cast<unsigned long long>(n));
}

template <typename T>
void shuffle(Rng& rng, std::vector<T>& xs) {
    for (int i = static_cast<int>(xs.size()) - 1; i > 0; --i)
        std::swap(xs[i], xs[pick(rng, i + 1)]);
}

inline Graph random_graph(Rng& rng, int n, int edge_permille) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (pick(rng, 1000) < edge_permille) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

inline Graph random_connected_graph(Rng& rng, int n, int extra_edges) {
    std::set<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        const int parent = pick(rng, v);
        edges.insert({parent, v});
    }
    for (int i = 0; i < extra_edges && n >= 2; ++i) {
        const int u = pick(rng, n);
        const int v = pick(rng, n);
        if (u != v) edges.insert({std::min(u, v), std::max(u, v)});
    }
    return Graph::from_edges(
        n, std::vector<std::pair<int, int>>(edges.begin(), edges.end()));
}

inline RotationSystem random_rotation_system(Rng& rng, int n, int extra_edges,
                                             bool with_signs) {
    const Graph g = random_connected_graph(rng, n, extra_edges);
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        rot[v] = g.neighbours(v);
        shuffle(rng, rot[v]);
    }
    std::set<std::pair<int, int>> negatives;
    if (with_signs) {
        for (int u = 0; u < n; ++u)
            for (int v : g.neighbours(u))
                if (u < v && pick(rng, 4) == 0) negatives.insert({u, v});
    }
    return RotationSystem::from_rotations(std::move(rot), std::move(negatives));
}

inline ListAssignment random_lists(Rng& rng, int n, int k, int palette) {
    std::vector<std::vector<int>> lists(n);
    std::vector<int> pool(palette);
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < palette; ++i) pool[i] = i + 1;
        for (int i = 0; i < k; ++i)
            std::swap(pool[i], pool[i + pick(rng, palette - i)]);
        lists[v] = std::vector<int>(pool.begin(), pool.begin() + k);
    }
    return ListAssignment(std::move(lists));
}

inline Colouring random_colouring(Rng& rng, const ListAssignment& l) {
    Colouring c(l.size());
    for (int v = 0; v < l.size(); ++v)
        c.set(v, l.list(v)[pick(rng, static_cast<int>(l.list(v).size()))]);
    return c;
}

} // namespace testutil

#endif
