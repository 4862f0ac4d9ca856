#include "defcolor/reducer.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "defcolor/discharging.hpp"
#include "defcolor/errors.hpp"
#include "defcolor/local_search.hpp"

namespace defcolor {

namespace {

// Smallest list colour of v not used by any coloured vertex in `blockers`.
std::optional<int> free_colour(const ListAssignment& l, const Colouring& c,
                               int v, const std::vector<int>& blockers) {
    for (int col : l.list(v)) {
        bool used = false;
        for (int w : blockers) {
            if (c.is_coloured(w) && c.colour(w) == col) {
                used = true;
                break;
            }
        }
        if (!used) return col;
    }
    return std::nullopt;
}

std::vector<int> neighbours_except(const Graph& g, int v,
                                   const std::vector<int>& except) {
    std::vector<int> out;
    for (int w : g.neighbours(v))
        if (std::find(except.begin(), except.end(), w) == except.end())
            out.push_back(w);
    return out;
}

void expect_uncoloured_exactly(const Graph& g, const Colouring& c,
                               const std::vector<int>& uncoloured) {
    if (c.size() != g.vertex_count())
        throw InvalidGraph("partial colouring size does not match the graph");
    for (int v = 0; v < g.vertex_count(); ++v) {
        const bool should =
            std::find(uncoloured.begin(), uncoloured.end(), v) == uncoloured.end();
        if (should && !c.is_coloured(v)) throw PartialColouring(v);
        if (!should && c.is_coloured(v))
            throw InvalidGraph("vertex " + std::to_string(v) +
                               " must be uncoloured before extension");
    }
}

} // namespace

Colouring extend_low_degree(const Graph& g, const ListAssignment& l,
                            Colouring partial, int v) {
    if (!g.has_vertex(v)) throw UnknownVertex(v);
    expect_uncoloured_exactly(g, partial, {v});
    const auto c = free_colour(l, partial, v, g.neighbours(v));
    if (!c) throw NoFreeColour(v);
    partial.set(v, *c);
    return partial;
}

Colouring extend_adjacent_tt(const Graph& g, const ListAssignment& l,
                             Colouring partial, int v, int w) {
    if (!g.has_edge(v, w)) throw InvalidGraph("extension pair is not an edge");
    expect_uncoloured_exactly(g, partial, {v, w});
    const auto c1 = free_colour(l, partial, v, neighbours_except(g, v, {w}));
    if (!c1) throw NoFreeColour(v);
    const auto c2 = free_colour(l, partial, w, neighbours_except(g, w, {v}));
    if (!c2) throw NoFreeColour(w);
    // c1 == c2 is fine: the v-w edge becomes the only monochromatic edge at
    // either endpoint
    partial.set(v, *c1);
    partial.set(w, *c2);
    return partial;
}

Colouring extend_triangle(const Graph& g, const ListAssignment& l,
                          Colouring partial, int v, int w, int u) {
    if (!g.has_edge(v, w) || !g.has_edge(v, u) || !g.has_edge(w, u))
        throw InvalidGraph("extension triple is not a triangle");
    expect_uncoloured_exactly(g, partial, {v, w, u});

    const auto c1 = free_colour(l, partial, w, neighbours_except(g, w, {v, u}));
    if (!c1) throw NoFreeColour(w);
    const auto c2 = free_colour(l, partial, u, neighbours_except(g, u, {v, w}));
    if (!c2) throw NoFreeColour(u);
    partial.set(w, *c1);
    partial.set(u, *c2);

    if (const auto c = free_colour(l, partial, v, g.neighbours(v))) {
        partial.set(v, *c);
        return partial;
    }
    // Every list colour of v appears on its t neighbours, hence exactly once
    // each; in particular c1 and c2 are distinct members of L(v). Giving v
    // the colour of w leaves both with a single monochromatic edge.
    if (*c1 == *c2 || !l.contains(v, *c1) || !l.contains(v, *c2))
        throw BranchInvariantViolated(
            "exhausted-list triangle branch reached with an invalid colour pair");
    partial.set(v, *c1);
    return partial;
}

std::optional<BigEvenWheel> detect_big_even(const RotationSystem& rs, int v,
                                            int t) {
    const Graph& g = rs.graph();
    if (t % 2 != 0 || g.degree(v) != t) return std::nullopt;

    const auto& rot = rs.rotation(v);
    int high = 0;
    for (int w : rot) {
        const int d = g.degree(w);
        if (d != t + 1 && d != t + 2) return std::nullopt;
        if (d == t + 2) ++high;
    }
    if (high != t / 2) return std::nullopt;

    int anchor = -1;
    for (int i = 0; i < t && anchor < 0; ++i)
        if (g.degree(rot[i]) == t + 2) anchor = i;

    BigEvenWheel cfg;
    cfg.v = v;
    for (int i = 0; i < t; ++i) {
        const int w = rot[(anchor + i) % t];
        cfg.cycle.push_back(w);
        cfg.degrees.push_back(g.degree(w));
        const int want = (i % 2 == 0) ? t + 2 : t + 1;
        if (g.degree(w) != want) return std::nullopt;
    }
    return cfg;
}

std::optional<ReducibleConfig> find_config(const RotationSystem& rs, int t) {
    if (t < 5) throw PreconditionTooSmallT("configuration search requires t >= 5");
    if (!is_triangulated(rs)) throw NotTriangulated();
    const Graph& g = rs.graph();
    const int n = g.vertex_count();

    for (int v = 0; v < n; ++v)
        if (g.degree(v) < t) return LowDegree{v};

    if (g.max_degree() < 2 * t) return LowMaxDegree{};

    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != t) continue;
        for (int w : g.neighbours(v))
            if (w > v && g.degree(w) == t) return AdjacentTightPair{v, w};
    }

    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != t) continue;
        const auto& nb = g.neighbours(v);
        for (size_t i = 0; i < nb.size(); ++i) {
            if (g.degree(nb[i]) != t + 1) continue;
            for (size_t j = i + 1; j < nb.size(); ++j) {
                if (g.degree(nb[j]) != t + 1) continue;
                if (g.has_edge(nb[i], nb[j]))
                    return TightTriangle{v, nb[i], nb[j]};
            }
        }
    }

    if (t % 2 == 0) {
        for (int v = 0; v < n; ++v)
            if (auto cfg = detect_big_even(rs, v, t)) return *cfg;
    }
    return std::nullopt;
}

BigEvenContext make_big_context(const BigEvenWheel& config) {
    BigEvenContext ctx;
    ctx.v = config.v;
    ctx.cycle = config.cycle;
    for (size_t i = 1; i < ctx.cycle.size(); i += 2)
        ctx.deferred.push_back(ctx.cycle[i]);
    return ctx;
}

namespace {

void validate_big_context(const Graph& g, const BigEvenContext& ctx) {
    const int t = static_cast<int>(ctx.cycle.size());
    if (t < 4 || t % 2 != 0)
        throw ContextInvalid("neighbour cycle length must be even and >= 4");
    if (!g.has_vertex(ctx.v)) throw UnknownVertex(ctx.v);
    if (g.degree(ctx.v) != t)
        throw ContextInvalid("centre degree does not match the cycle length");

    std::vector<int> sorted_cycle = ctx.cycle;
    std::sort(sorted_cycle.begin(), sorted_cycle.end());
    if (g.neighbours(ctx.v) != sorted_cycle)
        throw ContextInvalid("cycle is not the neighbourhood of the centre");

    for (int i = 0; i < t; ++i) {
        if (!g.has_edge(ctx.cycle[i], ctx.cycle[(i + 1) % t]))
            throw ContextInvalid("consecutive cycle vertices are not adjacent");
        const int want = (i % 2 == 0) ? t + 2 : t + 1;
        if (g.degree(ctx.cycle[i]) != want)
            throw ContextInvalid("cycle degrees do not alternate t+2, t+1");
    }
    if (!is_independent(g, ctx.deferred))
        throw ContextInvalid("deferred set is not independent");
    std::vector<int> expect;
    for (int i = 1; i < t; i += 2) expect.push_back(ctx.cycle[i]);
    if (ctx.deferred != expect)
        throw ContextInvalid("deferred set is not the even cycle positions");
}

} // namespace

Colouring extend_big(const Graph& g, const ListAssignment& l, Colouring partial,
                     BigEvenContext& ctx) {
    validate_big_context(g, ctx);
    const int t = static_cast<int>(ctx.cycle.size());
    std::vector<int> wheel = ctx.cycle;
    wheel.push_back(ctx.v);
    expect_uncoloured_exactly(g, partial, wheel);

    std::vector<bool> in_wheel(g.vertex_count(), false);
    for (int x : wheel) in_wheel[x] = true;

    // reduced lists: remove the colours already used around each wheel vertex
    auto reduce = [&](int x) {
        std::vector<int> out;
        for (int col : l.list(x)) {
            bool used = false;
            for (int w : g.neighbours(x))
                if (!in_wheel[w] && partial.colour(w) == col) {
                    used = true;
                    break;
                }
            if (!used) out.push_back(col);
        }
        return out;
    };
    ctx.reduced_lists.assign(t, {});
    for (int i = 0; i < t; ++i) ctx.reduced_lists[i] = reduce(ctx.cycle[i]);
    ctx.reduced_list_v = reduce(ctx.v);
    ctx.properly_coloured.clear();
    ctx.copy_coloured.clear();

    // closed-wheel degree of a cycle vertex: its neighbours among the wheel
    auto wheel_degree = [&](int x) {
        int d = 0;
        for (int w : g.neighbours(x))
            if (in_wheel[w]) ++d;
        return d;
    };
    for (int i = 0; i < t; ++i) {
        const int slack = (i % 2 == 0) ? 2 : 1;
        if (static_cast<int>(ctx.reduced_lists[i].size()) <
            wheel_degree(ctx.cycle[i]) - slack)
            throw ContextInvalid("reduced list at cycle position " +
                                 std::to_string(i) + " is too small");
    }

    auto cycle_free_colour = [&](int i) -> std::optional<int> {
        const int x = ctx.cycle[i];
        for (int col : ctx.reduced_lists[i]) {
            bool used = false;
            for (int w : g.neighbours(x))
                if (in_wheel[w] && w != ctx.v && partial.is_coloured(w) &&
                    partial.colour(w) == col) {
                    used = true;
                    break;
                }
            if (!used) return col;
        }
        return std::nullopt;
    };

    // greedy proper colouring of the odd-position ring vertices
    for (int i = 0; i < t; i += 2) {
        const auto col = cycle_free_colour(i);
        if (!col)
            throw ContextInvalid("greedy ring colouring ran out of colours at "
                                 "cycle position " +
                                 std::to_string(i));
        partial.set(ctx.cycle[i], *col);
    }

    // deferred vertices: a free reduced colour when one exists, otherwise the
    // colour of the cycle predecessor (each of its distinctly-coloured
    // neighbours then carries exactly one reduced colour)
    for (int i = 1; i < t; i += 2) {
        const int x = ctx.cycle[i];
        if (const auto col = cycle_free_colour(i)) {
            partial.set(x, *col);
            ctx.properly_coloured.push_back(x);
        } else {
            const int copied = partial.colour(ctx.cycle[i - 1]);
            const auto& reduced = ctx.reduced_lists[i];
            if (std::find(reduced.begin(), reduced.end(), copied) == reduced.end())
                throw ContextInvalid(
                    "predecessor colour missing from the reduced deferred list");
            partial.set(x, copied);
            ctx.copy_coloured.push_back(x);
        }
    }

    // the centre: a free colour if the cycle left one, else any list colour
    // (the cycle is then rainbow and one monochromatic edge at the centre is
    // the worst case)
    if (const auto col = free_colour(l, partial, ctx.v, g.neighbours(ctx.v))) {
        partial.set(ctx.v, *col);
    } else {
        if (ctx.reduced_list_v.empty()) throw NoFreeColour(ctx.v);
        std::vector<int> seen;
        for (int w : g.neighbours(ctx.v)) seen.push_back(partial.colour(w));
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw BranchInvariantViolated(
                "exhausted centre list with a non-rainbow neighbour cycle");
        partial.set(ctx.v, ctx.reduced_list_v.front());
    }
    return partial;
}

namespace {

ListAssignment restrict_lists(const ListAssignment& l,
                              const std::vector<int>& to_parent) {
    std::vector<std::vector<int>> lists;
    lists.reserve(to_parent.size());
    for (int parent : to_parent) lists.push_back(l.list(parent));
    return ListAssignment(std::move(lists));
}

class Solver {
public:
    Solver(int t, SolveStats& stats) : t_(t), stats_(stats) {}

    Colouring run(const RotationSystem& rs, const ListAssignment& l) {
        const Graph& g = rs.graph();
        const int n = g.vertex_count();
        if (n == 0) return Colouring(0);

        const auto comps = connected_components(g);
        if (comps.size() > 1) {
            Colouring full(n);
            for (const auto& comp : comps) {
                auto split = split_to(rs, comp);
                const Colouring sub = run(split.rs, restrict_lists(l, split.to_parent));
                for (int i = 0; i < sub.size(); ++i)
                    full.set(split.to_parent[i], sub.colour(i));
            }
            return full;
        }

        if (n <= 2) {
            int v = 0;
            for (int x = 1; x < n; ++x)
                if (g.degree(x) < g.degree(v)) v = x;
            ++stats_.low_degree;
            return recurse_and_extend(rs, l, LowDegree{v});
        }

        const RotationSystem tri = triangulate(rs);
        const auto cfg = find_config(tri, t_);
        if (!cfg) throw InternalContradiction(audit_text(audit(tri, t_)));

        if (std::holds_alternative<LowMaxDegree>(*cfg)) {
            ++stats_.low_max_degree;
            LovaszResult r = lovasz_colour_detailed(tri.graph(), l, t_);
            stats_.lovasz_iterations += r.iterations;
            return r.colouring;
        }
        if (const auto* c = std::get_if<LowDegree>(&*cfg)) {
            ++stats_.low_degree;
            return recurse_and_extend(tri, l, *c);
        }
        if (const auto* c = std::get_if<AdjacentTightPair>(&*cfg)) {
            ++stats_.adjacent_pair;
            return recurse_and_extend(tri, l, *c);
        }
        if (const auto* c = std::get_if<TightTriangle>(&*cfg)) {
            ++stats_.tight_triangle;
            return recurse_and_extend(tri, l, *c);
        }
        ++stats_.big_even;
        return recurse_and_extend(tri, l, std::get<BigEvenWheel>(*cfg));
    }

private:
    int t_;
    SolveStats& stats_;

    static EmbeddedSubgraph split_to(const RotationSystem& rs,
                                     const std::vector<int>& keep) {
        std::vector<bool> in(rs.vertex_count(), false);
        for (int v : keep) in[v] = true;
        std::vector<int> drop;
        for (int v = 0; v < rs.vertex_count(); ++v)
            if (!in[v]) drop.push_back(v);
        return delete_vertices_embedded(rs, drop);
    }

    Colouring lift(const RotationSystem& rs, const ListAssignment& l,
                   const std::vector<int>& deleted) {
        auto sub = delete_vertices_embedded(rs, deleted);
        const Colouring inner = run(sub.rs, restrict_lists(l, sub.to_parent));
        Colouring partial(rs.vertex_count());
        for (int i = 0; i < inner.size(); ++i)
            partial.set(sub.to_parent[i], inner.colour(i));
        return partial;
    }

    template <typename Config>
    Colouring recurse_and_extend(const RotationSystem& rs, const ListAssignment& l,
                                 const Config& cfg) {
        const Graph& g = rs.graph();
        if constexpr (std::is_same_v<Config, LowDegree>) {
            return extend_low_degree(g, l, lift(rs, l, {cfg.v}), cfg.v);
        } else if constexpr (std::is_same_v<Config, AdjacentTightPair>) {
            return extend_adjacent_tt(g, l, lift(rs, l, {cfg.v, cfg.w}), cfg.v,
                                      cfg.w);
        } else if constexpr (std::is_same_v<Config, TightTriangle>) {
            return extend_triangle(g, l, lift(rs, l, {cfg.v, cfg.w, cfg.u}),
                                   cfg.v, cfg.w, cfg.u);
        } else {
            static_assert(std::is_same_v<Config, BigEvenWheel>);
            BigEvenContext ctx = make_big_context(cfg);
            std::vector<int> wheel = cfg.cycle;
            wheel.push_back(cfg.v);
            return extend_big(g, l, lift(rs, l, wheel), ctx);
        }
    }
};

} // namespace

SolveResult solve_detailed(const RotationSystem& rs, const ListAssignment& l,
                           int t) {
    const Graph& g = rs.graph();
    if (l.size() != g.vertex_count())
        throw InvalidGraph("list assignment size does not match the graph");

    if (t < 5) {
        std::string msg = "the reduction requires t >= 5";
        if (t == 4 && g.vertex_count() > 0 && is_connected(g) &&
            euler_genus(rs) == 0)
            msg += "; planar (4,1)-list-colouring is delegated to the "
                   "Cushing-Kierstead algorithm and is out of scope here";
        throw PreconditionTooSmallT(msg);
    }
    if (g.vertex_count() > 0) {
        const int mu = euler_genus(rs); // rejects disconnected input
        const int need = required_list_size(mu);
        if (t < need)
            throw PreconditionTooSmallT(
                "t=" + std::to_string(t) + " is below the required list size " +
                std::to_string(need) + " for Euler genus " + std::to_string(mu));
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (static_cast<int>(l.list(v).size()) < t) throw ListTooShort(v, t);

    SolveResult result;
    Solver solver(t, result.stats);
    result.colouring = solver.run(rs, l);
    assert(verify_partial(g, result.colouring).defect <= 1);
    return result;
}

Colouring solve(const RotationSystem& rs, const ListAssignment& l, int t) {
    return solve_detailed(rs, l, t).colouring;
}

} // namespace defcolor
