#include "defcolor/embedding.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "defcolor/errors.hpp"

namespace defcolor {

namespace {

std::pair<int, int> norm_edge(int u, int v) {
    return {std::min(u, v), std::max(u, v)};
}

int position_of(const std::vector<int>& rotation, int w) {
    for (int i = 0; i < static_cast<int>(rotation.size()); ++i)
        if (rotation[i] == w) return i;
    throw InvalidGraph("neighbour " + std::to_string(w) + " missing from rotation");
}

// A flag is a dart together with the orientation bit carried at its tail.
// Crossing a negative edge flips the bit; the bit selects successor vs
// predecessor in the rotation at the head.
struct Flag {
    Dart dart;
    int bit = 1;
    bool operator==(const Flag&) const = default;
};

struct Tracer {
    const RotationSystem& rs;
    // dart index: offset[v] + position of the neighbour in rotation(v)
    std::vector<int> offset;
    int dart_count = 0;

    explicit Tracer(const RotationSystem& r) : rs(r) {
        offset.resize(rs.vertex_count() + 1, 0);
        for (int v = 0; v < rs.vertex_count(); ++v)
            offset[v + 1] = offset[v] + static_cast<int>(rs.rotation(v).size());
        dart_count = offset[rs.vertex_count()];
    }

    int dart_index(const Dart& d) const {
        return offset[d.from] + position_of(rs.rotation(d.from), d.to);
    }
    int flag_index(const Flag& f) const {
        return dart_index(f.dart) + (f.bit == 1 ? 0 : dart_count);
    }

    Flag step(const Flag& f) const {
        const auto [u, v] = f.dart;
        const int bit = f.bit * rs.sign(u, v);
        const auto& rot = rs.rotation(v);
        const int deg = static_cast<int>(rot.size());
        const int i = position_of(rot, u);
        const int w = rot[((i + (bit == 1 ? 1 : -1)) % deg + deg) % deg];
        return {{v, w}, bit};
    }

    Flag mirror(const Flag& f) const {
        const auto [u, v] = f.dart;
        return {{v, u}, -f.bit * rs.sign(u, v)};
    }

    std::vector<std::vector<Flag>> trace() const {
        std::vector<bool> visited(2 * dart_count, false);
        std::vector<std::vector<Flag>> walks;
        for (int start = 0; start < 2 * dart_count; ++start) {
            if (visited[start]) continue;
            Flag f0 = flag_at(start);
            std::vector<Flag> walk;
            Flag f = f0;
            do {
                visited[flag_index(f)] = true;
                visited[flag_index(mirror(f))] = true;
                walk.push_back(f);
                f = step(f);
            } while (!(f == f0));
            walks.push_back(std::move(walk));
        }
        return walks;
    }

    Flag flag_at(int index) const {
        const int bit = index < dart_count ? 1 : -1;
        const int di = index % dart_count;
        const int v = static_cast<int>(
                          std::upper_bound(offset.begin(), offset.end(), di) -
                          offset.begin()) -
                      1;
        return {{v, rs.rotation(v)[di - offset[v]]}, bit};
    }
};

std::vector<std::vector<Flag>> trace_flag_walks(const RotationSystem& rs) {
    if (!is_connected(rs.graph())) throw DisconnectedGraph();
    if (rs.graph().edge_count() == 0) return {};
    return Tracer(rs).trace();
}

} // namespace

RotationSystem RotationSystem::from_rotations(
    std::vector<std::vector<int>> rotations,
    std::set<std::pair<int, int>> negative_edges) {
    RotationSystem rs;
    rs.graph_ = Graph::from_adjacency(rotations);
    for (int v = 0; v < rs.graph_.vertex_count(); ++v) {
        if (static_cast<int>(rotations[v].size()) != rs.graph_.degree(v))
            throw InvalidGraph("rotation at vertex " + std::to_string(v) +
                               " is not a permutation of its neighbourhood");
    }
    for (auto [u, v] : negative_edges) {
        if (norm_edge(u, v) != std::make_pair(u, v))
            throw InvalidGraph("edge sign key not normalized");
        if (!rs.graph_.has_edge(u, v))
            throw InvalidGraph("sign given for non-edge " + std::to_string(u) +
                               "-" + std::to_string(v));
    }
    rs.rotation_ = std::move(rotations);
    rs.negative_ = std::move(negative_edges);
    return rs;
}

const std::vector<int>& RotationSystem::rotation(int v) const {
    if (!graph_.has_vertex(v)) throw UnknownVertex(v);
    return rotation_[v];
}

int RotationSystem::sign(int u, int v) const {
    return negative_.count(norm_edge(u, v)) ? -1 : 1;
}

FaceSet trace_faces(const RotationSystem& rs) {
    FaceSet out;
    for (const auto& walk : trace_flag_walks(rs)) {
        std::vector<Dart> face;
        face.reserve(walk.size());
        for (const Flag& f : walk) face.push_back(f.dart);
        out.faces.push_back(std::move(face));
    }
    return out;
}

int euler_genus(const RotationSystem& rs) {
    if (!is_connected(rs.graph())) throw DisconnectedGraph();
    const int n = rs.vertex_count();
    const int m = rs.graph().edge_count();
    if (m == 0) return 0; // single vertex, one face
    const int f = trace_faces(rs).face_count();
    const int mu = m - n + 2 - f;
    if (mu < 0)
        throw InvalidGraph("negative Euler genus: corrupt rotation data");
    return mu;
}

bool is_triangulated(const RotationSystem& rs) {
    for (const auto& face : trace_faces(rs).faces)
        if (face.size() != 3) return false;
    return true;
}

RotationSystem triangulate(const RotationSystem& rs) {
    if (rs.vertex_count() < 3)
        throw InvalidGraph("triangulate requires at least 3 vertices");
    if (!is_connected(rs.graph())) throw DisconnectedGraph();

    RotationSystem work = rs;
    for (;;) {
        const auto walks = trace_flag_walks(work);
        const std::vector<Flag>* long_face = nullptr;
        for (const auto& w : walks) {
            if (w.size() > 3) {
                long_face = &w;
                break;
            }
        }
        if (long_face == nullptr) break;

        const int k = static_cast<int>(long_face->size());
        bool inserted = false;
        for (int corner = 0; corner < k && !inserted; ++corner) {
            // walk rotated so the fan corner sits at position 0
            std::vector<int> u(k);
            std::vector<int> bit(k);
            for (int i = 0; i < k; ++i) {
                const Flag& f = (*long_face)[(corner + i) % k];
                u[i] = f.dart.from;
                bit[i] = f.bit;
            }
            bool ok = true;
            for (int j = 2; j <= k - 2 && ok; ++j) {
                if (u[j] == u[0] || work.graph_.has_edge(u[0], u[j])) ok = false;
                for (int j2 = 2; j2 < j && ok; ++j2)
                    if (u[j2] == u[j]) ok = false;
            }
            if (!ok) continue;

            auto insert_after = [](std::vector<int>& rot, int anchor, int who,
                                   int dir) {
                const int p = position_of(rot, anchor);
                rot.insert(rot.begin() + p + (dir == 1 ? 1 : 0), who);
            };
            for (int j = 2; j <= k - 2; ++j) {
                insert_after(work.rotation_[u[0]], u[k - 1], u[j], bit[0]);
                insert_after(work.rotation_[u[j]], u[j - 1], u[0], bit[j]);
                if (bit[0] * bit[j] == -1)
                    work.negative_.insert(norm_edge(u[0], u[j]));
            }
            work.graph_ = Graph::from_adjacency(work.rotation_);
            inserted = true;
        }
        if (!inserted) {
            std::vector<int> face_vertices;
            for (const Flag& f : *long_face) face_vertices.push_back(f.dart.from);
            throw UntriangulatableFace(std::move(face_vertices));
        }
    }
    return work;
}

EmbeddedSubgraph delete_vertices_embedded(const RotationSystem& rs,
                                          const std::vector<int>& s) {
    std::vector<bool> drop(rs.vertex_count(), false);
    for (int v : s) {
        if (!rs.graph().has_vertex(v)) throw UnknownVertex(v);
        drop[v] = true;
    }
    std::vector<int> to_parent;
    std::vector<int> local(rs.vertex_count(), -1);
    for (int v = 0; v < rs.vertex_count(); ++v) {
        if (!drop[v]) {
            local[v] = static_cast<int>(to_parent.size());
            to_parent.push_back(v);
        }
    }
    std::vector<std::vector<int>> rotations(to_parent.size());
    for (int i = 0; i < static_cast<int>(to_parent.size()); ++i) {
        for (int w : rs.rotation(to_parent[i]))
            if (local[w] >= 0) rotations[i].push_back(local[w]);
    }
    std::set<std::pair<int, int>> negatives;
    for (auto [a, b] : rs.negative_edges())
        if (local[a] >= 0 && local[b] >= 0)
            negatives.insert(norm_edge(local[a], local[b]));
    return {RotationSystem::from_rotations(std::move(rotations), std::move(negatives)),
            std::move(to_parent)};
}

RotationSystem delete_vertex_embedded(const RotationSystem& rs, int v) {
    return delete_vertices_embedded(rs, {v}).rs;
}

const std::vector<int>& cyclic_neighbours(const RotationSystem& rs, int v) {
    return rs.rotation(v);
}

RotationSystem rotation_from_oriented_triangles(
    int n, const std::vector<std::array<int, 3>>& triangles) {
    std::vector<std::map<int, int>> succ(n);
    for (const auto& tri : triangles) {
        for (int r = 0; r < 3; ++r) {
            const int x = tri[r], y = tri[(r + 1) % 3], z = tri[(r + 2) % 3];
            if (x < 0 || x >= n) throw UnknownVertex(x);
            if (succ[y].count(x))
                throw InvalidGraph("dart " + std::to_string(x) + "->" +
                                   std::to_string(y) + " occurs in two triangles");
            succ[y][x] = z;
        }
    }
    std::vector<std::vector<int>> rotations(n);
    for (int v = 0; v < n; ++v) {
        if (succ[v].empty())
            throw InvalidGraph("vertex " + std::to_string(v) + " in no triangle");
        const int start = succ[v].begin()->first;
        int cur = start;
        do {
            rotations[v].push_back(cur);
            const auto it = succ[v].find(cur);
            if (it == succ[v].end())
                throw InvalidGraph("triangle orientation around vertex " +
                                   std::to_string(v) + " is inconsistent");
            cur = it->second;
        } while (cur != start &&
                 rotations[v].size() <= succ[v].size());
        if (rotations[v].size() != succ[v].size() || cur != start)
            throw InvalidGraph("faces around vertex " + std::to_string(v) +
                               " do not close into one cycle");
    }
    return RotationSystem::from_rotations(std::move(rotations));
}

} // namespace defcolor
