#include "defcolor/local_search.hpp"

#include <cassert>
#include <limits>

#include "defcolor/errors.hpp"

namespace defcolor {

namespace {

long mono_edges(const Graph& g, const Colouring& c) {
    long twice = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int w : g.neighbours(v))
            if (c.colour(v) == c.colour(w)) ++twice;
    return twice / 2;
}

} // namespace

LovaszResult lovasz_colour_detailed(const Graph& g, const ListAssignment& l,
                                    int k) {
    const int n = g.vertex_count();
    if (k <= 0) throw InvalidGraph("list-size parameter must be positive");
    if (l.size() != n)
        throw InvalidGraph("list assignment size does not match the graph");
    for (int v = 0; v < n; ++v)
        if (static_cast<int>(l.list(v).size()) < k) throw ListTooShort(v, k);

    LovaszResult res;
    res.colouring = Colouring(n);
    for (int v = 0; v < n; ++v) res.colouring.set(v, l.list(v)[0]);

    auto same_count = [&](int v, int col) {
        int cnt = 0;
        for (int w : g.neighbours(v))
            if (res.colouring.colour(w) == col) ++cnt;
        return cnt;
    };

    res.initial_monochromatic_edges = mono_edges(g, res.colouring);
    long mono = res.initial_monochromatic_edges;
    for (;;) {
        int violator = -1;
        for (int v = 0; v < n && violator < 0; ++v)
            if (same_count(v, res.colouring.colour(v)) > g.degree(v) / k)
                violator = v;
        if (violator < 0) break;

        const int old_count = same_count(violator, res.colouring.colour(violator));
        int best_colour = -1;
        int best_count = std::numeric_limits<int>::max();
        for (int col : l.list(violator)) {
            const int cnt = same_count(violator, col);
            if (cnt < best_count) {
                best_count = cnt;
                best_colour = col;
            }
        }
        // a colour meeting floor(deg/k) always exists among k list colours
        assert(best_count < old_count);
        res.colouring.set(violator, best_colour);
        mono -= old_count - best_count;
        ++res.iterations;
        assert(res.iterations <= g.edge_count());
    }
    res.final_monochromatic_edges = mono;
    assert(mono == mono_edges(g, res.colouring));
    return res;
}

Colouring lovasz_colour(const Graph& g, const ListAssignment& l, int k) {
    return lovasz_colour_detailed(g, l, k).colouring;
}

} // namespace defcolor
