#ifndef DEFCOLOR_COLOURING_HPP
#define DEFCOLOR_COLOURING_HPP

#include <optional>
#include <vector>

#include "defcolor/graph.hpp"

namespace defcolor {

constexpr int kUncoloured = -1;

/// Per-vertex finite colour lists; colours are opaque nonnegative integers.
class ListAssignment {
public:
    ListAssignment() = default;
    explicit ListAssignment(std::vector<std::vector<int>> lists);

    static ListAssignment uniform(int n, std::vector<int> colours);

    int size() const { return static_cast<int>(lists_.size()); }
    const std::vector<int>& list(int v) const;
    bool contains(int v, int colour) const;
    int min_list_size() const;

    bool operator==(const ListAssignment&) const = default;

private:
    std::vector<std::vector<int>> lists_; // sorted, deduplicated
};

/// Partial or total vertex -> colour map; kUncoloured marks unassigned
/// vertices. Partial colourings appear inside the reducer's extension steps.
class Colouring {
public:
    Colouring() = default;
    explicit Colouring(int n) : colour_(n, kUncoloured) {}
    explicit Colouring(std::vector<int> colours) : colour_(std::move(colours)) {}

    int size() const { return static_cast<int>(colour_.size()); }
    int colour(int v) const;
    bool is_coloured(int v) const { return colour(v) != kUncoloured; }
    void set(int v, int c);
    bool total() const;
    const std::vector<int>& colours() const { return colour_; }

    bool operator==(const Colouring&) const = default;

private:
    std::vector<int> colour_;
};

struct DefectReport {
    int defect = 0;     // max same-coloured-neighbour count over vertices
    int clustering = 0; // max monochromatic component size
    std::optional<int> worst_vertex;  // set when defect > 0
    std::vector<int> worst_component; // set when clustering > 1
};

/// Checks totality and list membership, then reports defect and clustering.
DefectReport verify(const Graph& g, const ListAssignment& l, const Colouring& c);

/// Same without the list-membership check.
DefectReport verify(const Graph& g, const Colouring& c);

/// Defect/clustering over the coloured vertices only.
DefectReport verify_partial(const Graph& g, const Colouring& c);

/// Colours vertices in the given order with the smallest list colour not on
/// an already-coloured neighbour. Succeeds whenever every vertex has more
/// list colours than processed neighbours.
Colouring greedy_proper(const Graph& g, const ListAssignment& l,
                        const std::vector<int>& order);

bool is_independent(const Graph& g, const std::vector<int>& s);

} // namespace defcolor

#endif
