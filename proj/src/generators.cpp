#include "defcolor/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "defcolor/errors.hpp"

namespace defcolor {

RotationSystem gen_complete(int n) {
    if (n < 1) throw InvalidGraph("complete graph needs at least one vertex");
    if (n == 4)
        return rotation_from_oriented_triangles(
            4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
    std::vector<std::vector<int>> rot(n);
    for (int i = 0; i < n; ++i)
        for (int k = 1; k < n; ++k) rot[i].push_back((i + k) % n);
    return RotationSystem::from_rotations(std::move(rot));
}

RotationSystem gen_k7_torus() {
    std::vector<std::vector<int>> rot(7);
    for (int i = 0; i < 7; ++i)
        for (int k : {1, 3, 2, 6, 4, 5}) rot[i].push_back((i + k) % 7);
    return RotationSystem::from_rotations(std::move(rot));
}

RotationSystem gen_planar_triangulation(int n, unsigned long long seed) {
    if (n < 3) throw InvalidGraph("planar triangulation needs n >= 3");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> rot = {{1, 2}, {2, 0}, {0, 1}};

    auto insert_after = [](std::vector<int>& r, int anchor, int who) {
        const auto it = std::find(r.begin(), r.end(), anchor);
        r.insert(it + 1, who);
    };

    for (int x = 3; x < n; ++x) {
        RotationSystem rs = RotationSystem::from_rotations(rot);
        const FaceSet faces = trace_faces(rs);
        const auto& face =
            faces.faces[static_cast<size_t>(rng() % faces.faces.size())];
        const int a = face[0].from, b = face[1].from, c = face[2].from;
        rot.push_back({a, c, b});
        insert_after(rot[a], c, x);
        insert_after(rot[b], a, x);
        insert_after(rot[c], b, x);
    }
    return RotationSystem::from_rotations(std::move(rot));
}

RotationSystem gen_toroidal_grid(int w, int h) {
    if (w < 3 || h < 3) throw InvalidGraph("toroidal grid needs both sides >= 3");
    auto vid = [&](int i, int j) {
        return ((i % h + h) % h) * w + ((j % w + w) % w);
    };
    std::vector<std::vector<int>> rot;
    rot.reserve(static_cast<size_t>(w) * h);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < w; ++j)
            rot.push_back({vid(i, j + 1), vid(i + 1, j + 1), vid(i + 1, j),
                           vid(i, j - 1), vid(i - 1, j - 1), vid(i - 1, j)});
    return RotationSystem::from_rotations(std::move(rot));
}

RotationSystem gen_icosahedron() {
    return rotation_from_oriented_triangles(
        12, {{0, 1, 2},   {0, 2, 3},  {0, 3, 4},  {0, 4, 5},  {0, 5, 1},
             {11, 7, 6},  {11, 8, 7}, {11, 9, 8}, {11, 10, 9}, {11, 6, 10},
             {1, 6, 7},   {1, 7, 2},  {2, 7, 8},  {2, 8, 3},  {3, 8, 9},
             {3, 9, 4},   {4, 9, 10}, {4, 10, 5}, {5, 10, 6}, {5, 6, 1}});
}

ListAssignment gen_random_lists(int n, int k, int palette,
                                unsigned long long seed) {
    if (n < 0 || k < 1) throw InvalidGraph("invalid list generation sizes");
    if (palette < k) throw InvalidGraph("palette smaller than the list size");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> lists(n);
    std::vector<int> pool(palette);
    for (int v = 0; v < n; ++v) {
        std::iota(pool.begin(), pool.end(), 1);
        for (int i = 0; i < k; ++i) {
            const int j =
                i + static_cast<int>(rng() % static_cast<unsigned long long>(
                                                 palette - i));
            std::swap(pool[i], pool[j]);
        }
        lists[v] = std::vector<int>(pool.begin(), pool.begin() + k);
        std::sort(lists[v].begin(), lists[v].end());
    }
    return ListAssignment(std::move(lists));
}

} // namespace defcolor
