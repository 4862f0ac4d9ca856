#include "defcolor/graph.hpp"

#include <algorithm>
#include <string>

#include "defcolor/errors.hpp"

namespace defcolor {

namespace {

void check_vertex_set(const Graph& g, const std::vector<int>& s) {
    for (int v : s) {
        if (!g.has_vertex(v)) throw UnknownVertex(v);
    }
}

} // namespace

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n) throw UnknownVertex(u);
        if (v < 0 || v >= n) throw UnknownVertex(v);
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return from_adjacency(adj);
}

Graph Graph::from_adjacency(const std::vector<std::vector<int>>& adjacency) {
    Graph g;
    const int n = static_cast<int>(adjacency.size());
    g.adj_.assign(n, {});
    for (int v = 0; v < n; ++v) {
        auto nbrs = adjacency[v];
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        for (int w : nbrs) {
            if (w < 0 || w >= n) throw UnknownVertex(w);
            if (w == v)
                throw InvalidGraph("self-loop at vertex " + std::to_string(v));
        }
        g.adj_[v] = std::move(nbrs);
    }
    long long degree_sum = 0;
    for (int v = 0; v < n; ++v) {
        degree_sum += static_cast<long long>(g.adj_[v].size());
        for (int w : g.adj_[v]) {
            if (!std::binary_search(g.adj_[w].begin(), g.adj_[w].end(), v))
                throw InvalidGraph("adjacency is not symmetric: " +
                                   std::to_string(v) + "-" + std::to_string(w));
        }
    }
    g.edge_count_ = static_cast<int>(degree_sum / 2);
    return g;
}

const std::vector<int>& Graph::neighbours(int v) const {
    if (!has_vertex(v)) throw UnknownVertex(v);
    return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = neighbours(u);
    if (!has_vertex(v)) throw UnknownVertex(v);
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::min_degree() const {
    int d = 0;
    for (int v = 0; v < vertex_count(); ++v)
        d = (v == 0) ? degree(v) : std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < vertex_count(); ++v) d = std::max(d, degree(v));
    return d;
}

SubgraphResult induced_subgraph(const Graph& g, const std::vector<int>& s) {
    check_vertex_set(g, s);
    std::vector<int> keep = s;
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

    std::vector<int> local(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) local[keep[i]] = i;

    std::vector<std::vector<int>> adj(keep.size());
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
        for (int w : g.neighbours(keep[i])) {
            if (local[w] >= 0) adj[i].push_back(local[w]);
        }
    }
    return {Graph::from_adjacency(adj), std::move(keep)};
}

Graph delete_vertices(const Graph& g, const std::vector<int>& s) {
    check_vertex_set(g, s);
    std::vector<bool> drop(g.vertex_count(), false);
    for (int v : s) drop[v] = true;
    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!drop[v]) keep.push_back(v);
    return induced_subgraph(g, keep).graph;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(n, false);
    for (int v = 0; v < n; ++v) {
        if (seen[v]) continue;
        std::vector<int> comp;
        std::vector<int> stack = {v};
        seen[v] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.neighbours(u)) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return g.vertex_count() > 0 && connected_components(g).size() == 1;
}

} // namespace defcolor
