#ifndef DEFCOLOR_GRAPH_HPP
#define DEFCOLOR_GRAPH_HPP

#include <utility>
#include <vector>

namespace defcolor {

/// Simple undirected graph over dense vertex ids 0..n-1. Immutable after
/// construction; all derived graphs are fresh values.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    /// Builds from adjacency lists, validating simplicity and symmetry.
    /// Neighbour order is not preserved; lists are stored sorted.
    static Graph from_adjacency(const std::vector<std::vector<int>>& adjacency);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    const std::vector<int>& neighbours(int v) const;
    int degree(int v) const { return static_cast<int>(neighbours(v).size()); }
    bool has_edge(int u, int v) const;
    bool has_vertex(int v) const { return v >= 0 && v < vertex_count(); }

    int min_degree() const;
    int max_degree() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<int>> adj_; // sorted neighbour lists
    int edge_count_ = 0;
};

struct SubgraphResult {
    Graph graph;
    std::vector<int> to_parent; // bijection: new id -> id in the parent graph
};

/// Subgraph induced by `s`, plus the id map back to the input graph.
/// New ids follow the sorted order of `s`.
SubgraphResult induced_subgraph(const Graph& g, const std::vector<int>& s);

/// Subgraph obtained by removing `s`; equals the induced subgraph on the
/// complement.
Graph delete_vertices(const Graph& g, const std::vector<int>& s);

/// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

} // namespace defcolor

#endif
