#include "defcolor/colouring.hpp"

#include <algorithm>

#include "defcolor/errors.hpp"

namespace defcolor {

ListAssignment::ListAssignment(std::vector<std::vector<int>> lists)
    : lists_(std::move(lists)) {
    for (auto& l : lists_) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
}

ListAssignment ListAssignment::uniform(int n, std::vector<int> colours) {
    return ListAssignment(std::vector<std::vector<int>>(n, std::move(colours)));
}

const std::vector<int>& ListAssignment::list(int v) const {
    if (v < 0 || v >= size()) throw UnknownVertex(v);
    return lists_[v];
}

bool ListAssignment::contains(int v, int colour) const {
    const auto& l = list(v);
    return std::binary_search(l.begin(), l.end(), colour);
}

int ListAssignment::min_list_size() const {
    int t = 0;
    for (int v = 0; v < size(); ++v) {
        const int s = static_cast<int>(lists_[v].size());
        t = (v == 0) ? s : std::min(t, s);
    }
    return t;
}

int Colouring::colour(int v) const {
    if (v < 0 || v >= size()) throw UnknownVertex(v);
    return colour_[v];
}

void Colouring::set(int v, int c) {
    if (v < 0 || v >= size()) throw UnknownVertex(v);
    colour_[v] = c;
}

bool Colouring::total() const {
    return std::none_of(colour_.begin(), colour_.end(),
                        [](int c) { return c == kUncoloured; });
}

namespace {

DefectReport report_over(const Graph& g, const Colouring& c,
                         const std::vector<bool>& active) {
    const int n = g.vertex_count();
    DefectReport rep;
    for (int v = 0; v < n; ++v) {
        if (!active[v]) continue;
        int same = 0;
        for (int w : g.neighbours(v))
            if (active[w] && c.colour(w) == c.colour(v)) ++same;
        if (same > rep.defect) {
            rep.defect = same;
            rep.worst_vertex = v;
        }
    }
    std::vector<bool> seen(n, false);
    for (int v = 0; v < n; ++v) {
        if (!active[v] || seen[v]) continue;
        std::vector<int> comp;
        std::vector<int> stack = {v};
        seen[v] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.neighbours(u)) {
                if (active[w] && !seen[w] && c.colour(w) == c.colour(u)) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        if (static_cast<int>(comp.size()) > rep.clustering) {
            rep.clustering = static_cast<int>(comp.size());
            std::sort(comp.begin(), comp.end());
            rep.worst_component = std::move(comp);
        }
    }
    if (rep.clustering <= 1) rep.worst_component.clear();
    return rep;
}

void check_sizes(const Graph& g, const Colouring& c) {
    if (c.size() != g.vertex_count())
        throw InvalidGraph("colouring size does not match the graph");
}

} // namespace

DefectReport verify(const Graph& g, const ListAssignment& l, const Colouring& c) {
    check_sizes(g, c);
    if (l.size() != g.vertex_count())
        throw InvalidGraph("list assignment size does not match the graph");
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!c.is_coloured(v)) throw PartialColouring(v);
        if (!l.contains(v, c.colour(v))) throw NotFromList(v);
    }
    return report_over(g, c, std::vector<bool>(g.vertex_count(), true));
}

DefectReport verify(const Graph& g, const Colouring& c) {
    check_sizes(g, c);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!c.is_coloured(v)) throw PartialColouring(v);
    return report_over(g, c, std::vector<bool>(g.vertex_count(), true));
}

DefectReport verify_partial(const Graph& g, const Colouring& c) {
    check_sizes(g, c);
    std::vector<bool> active(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) active[v] = c.is_coloured(v);
    return report_over(g, c, active);
}

Colouring greedy_proper(const Graph& g, const ListAssignment& l,
                        const std::vector<int>& order) {
    const int n = g.vertex_count();
    std::vector<bool> seen(n, false);
    for (int v : order) {
        if (!g.has_vertex(v)) throw UnknownVertex(v);
        if (seen[v]) throw InvalidGraph("vertex repeated in greedy order");
        seen[v] = true;
    }
    if (static_cast<int>(order.size()) != n)
        throw InvalidGraph("greedy order does not cover the graph");

    Colouring c(n);
    for (int v : order) {
        int chosen = kUncoloured;
        for (int col : l.list(v)) {
            bool used = false;
            for (int w : g.neighbours(v))
                if (c.is_coloured(w) && c.colour(w) == col) {
                    used = true;
                    break;
                }
            if (!used) {
                chosen = col;
                break;
            }
        }
        if (chosen == kUncoloured) throw ListExhausted(v);
        c.set(v, chosen);
    }
    return c;
}

bool is_independent(const Graph& g, const std::vector<int>& s) {
    for (int v : s)
        if (!g.has_vertex(v)) throw UnknownVertex(v);
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (s[i] != s[j] && g.has_edge(s[i], s[j])) return false;
    return true;
}

} // namespace defcolor
