#ifndef DEFCOLOR_LOCAL_SEARCH_HPP
#define DEFCOLOR_LOCAL_SEARCH_HPP

#include "defcolor/colouring.hpp"
#include "defcolor/graph.hpp"

namespace defcolor {

struct LovaszResult {
    Colouring colouring;
    long iterations = 0;
    long initial_monochromatic_edges = 0;
    long final_monochromatic_edges = 0;
};

/// Monochromatic-edge-minimizing recolouring: starts from the first list
/// colour everywhere and repeatedly recolours a vertex that exceeds its
/// floor(deg/k) same-colour bound with a strictly improving list colour.
/// Terminates within m iterations with every vertex meeting the bound.
LovaszResult lovasz_colour_detailed(const Graph& g, const ListAssignment& l, int k);

Colouring lovasz_colour(const Graph& g, const ListAssignment& l, int k);

} // namespace defcolor

#endif
