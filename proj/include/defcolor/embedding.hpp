#ifndef DEFCOLOR_EMBEDDING_HPP
#define DEFCOLOR_EMBEDDING_HPP

#include <array>
#include <set>
#include <utility>
#include <vector>

#include "defcolor/graph.hpp"

namespace defcolor {

struct Dart {
    int from = -1;
    int to = -1;
    bool operator==(const Dart&) const = default;
};

/// Faces of an embedding as closed dart walks. Walk lengths sum to 2m; for
/// all-positive signs every dart appears in exactly one walk.
struct FaceSet {
    std::vector<std::vector<Dart>> faces;
    int face_count() const { return static_cast<int>(faces.size()); }
};

/// Combinatorial map: a cyclic neighbour order per vertex plus optional edge
/// signs (-1 marks an orientation-reversing edge). Encodes a 2-cell embedding
/// of the graph on a surface whose Euler genus the map determines.
class RotationSystem {
public:
    RotationSystem() = default;

    static RotationSystem from_rotations(
        std::vector<std::vector<int>> rotations,
        std::set<std::pair<int, int>> negative_edges = {});

    const Graph& graph() const { return graph_; }
    int vertex_count() const { return graph_.vertex_count(); }

    const std::vector<int>& rotation(int v) const;
    int sign(int u, int v) const;
    const std::set<std::pair<int, int>>& negative_edges() const { return negative_; }

    bool operator==(const RotationSystem&) const = default;

private:
    Graph graph_;
    std::vector<std::vector<int>> rotation_;
    std::set<std::pair<int, int>> negative_; // normalized u < v

    friend RotationSystem triangulate(const RotationSystem&);
};

/// Traces all facial walks. Requires a connected graph.
FaceSet trace_faces(const RotationSystem& rs);

/// Euler genus of the embedding: m - n + 2 - f.
int euler_genus(const RotationSystem& rs);

/// Adds chords inside faces (corner fans) until every face is a triangle.
/// Preserves the vertex set and the Euler genus. Throws UntriangulatableFace
/// when some face admits no simple corner fan.
RotationSystem triangulate(const RotationSystem& rs);

bool is_triangulated(const RotationSystem& rs);

RotationSystem delete_vertex_embedded(const RotationSystem& rs, int v);

struct EmbeddedSubgraph {
    RotationSystem rs;
    std::vector<int> to_parent;
};

/// Removes a vertex set, renumbering survivors in order; rotations keep the
/// relative order of the remaining neighbours.
EmbeddedSubgraph delete_vertices_embedded(const RotationSystem& rs,
                                          const std::vector<int>& s);

const std::vector<int>& cyclic_neighbours(const RotationSystem& rs, int v);

/// Builds the rotation system whose faces are exactly the given oriented
/// triangles (each dart must occur in exactly one triangle).
RotationSystem rotation_from_oriented_triangles(
    int n, const std::vector<std::array<int, 3>>& triangles);

} // namespace defcolor

#endif
