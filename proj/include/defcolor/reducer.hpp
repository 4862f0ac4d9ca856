#ifndef DEFCOLOR_REDUCER_HPP
#define DEFCOLOR_REDUCER_HPP

#include <optional>
#include <variant>
#include <vector>

#include "defcolor/colouring.hpp"
#include "defcolor/embedding.hpp"

namespace defcolor {

// Reducible configurations, in the order the solver searches for them.

struct LowDegree {
    int v; // deg(v) < t
};

struct LowMaxDegree {}; // max degree < 2t: local search finishes in one shot

struct AdjacentTightPair {
    int v, w; // adjacent, both of degree t
};

struct TightTriangle {
    int v, w, u; // 3-cycle with deg(v)=t, deg(w)=deg(u)=t+1
};

/// Even t only: a degree-t vertex whose neighbour cycle alternates between
/// degree t+2 and degree t+1, anchored at the first degree-(t+2) neighbour
/// in rotation order.
struct BigEvenWheel {
    int v;
    std::vector<int> cycle;   // rotation at v, rotated to start at the anchor
    std::vector<int> degrees; // degrees along the cycle
};

using ReducibleConfig = std::variant<LowDegree, LowMaxDegree, AdjacentTightPair,
                                     TightTriangle, BigEvenWheel>;

/// Searches the fixed configuration order on a triangulated connected
/// rotation system. Returns nullopt only when nothing is found, which the
/// counting argument rules out for t >= ceil(2+sqrt(3*mu+3)).
std::optional<ReducibleConfig> find_config(const RotationSystem& rs, int t);

/// The per-vertex classifier behind the BigEvenWheel case.
std::optional<BigEvenWheel> detect_big_even(const RotationSystem& rs, int v,
                                            int t);

/// Working context for the big-wheel extension. The last four fields are
/// filled in by extend_big and are exposed for inspection in tests.
struct BigEvenContext {
    int v = -1;
    std::vector<int> cycle;    // neighbour cycle in anchored rotation order
    std::vector<int> deferred; // even-position cycle vertices (independent)

    std::vector<std::vector<int>> reduced_lists; // per cycle position
    std::vector<int> reduced_list_v;
    std::vector<int> properly_coloured; // deferred vertices given free colours
    std::vector<int> copy_coloured;     // deferred vertices copying their
                                        // cycle predecessor
};

BigEvenContext make_big_context(const BigEvenWheel& config);

// Extension steps. Each takes a colouring that is total outside the named
// vertices and has defect <= 1, and completes it with defect <= 1.

Colouring extend_low_degree(const Graph& g, const ListAssignment& l,
                            Colouring partial, int v);

Colouring extend_adjacent_tt(const Graph& g, const ListAssignment& l,
                             Colouring partial, int v, int w);

Colouring extend_triangle(const Graph& g, const ListAssignment& l,
                          Colouring partial, int v, int w, int u);

Colouring extend_big(const Graph& g, const ListAssignment& l, Colouring partial,
                     BigEvenContext& ctx);

struct SolveStats {
    long low_degree = 0;
    long low_max_degree = 0;
    long adjacent_pair = 0;
    long tight_triangle = 0;
    long big_even = 0;
    long lovasz_iterations = 0;
    long dispatches() const {
        return low_degree + low_max_degree + adjacent_pair + tight_triangle +
               big_even;
    }
};

struct SolveResult {
    Colouring colouring;
    SolveStats stats;
};

/// Defect-1 list colouring of an embedded graph: triangulate, find a
/// reducible configuration, delete it, recurse, extend. Requires t >= 5,
/// t >= required_list_size(euler_genus(rs)), and t-lists everywhere.
SolveResult solve_detailed(const RotationSystem& rs, const ListAssignment& l,
                           int t);

Colouring solve(const RotationSystem& rs, const ListAssignment& l, int t);

} // namespace defcolor

#endif
