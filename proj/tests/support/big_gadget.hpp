#ifndef DEFCOLOR_TESTS_BIG_GADGET_HPP
#define DEFCOLOR_TESTS_BIG_GADGET_HPP

#include <stdexcept>
#include <vector>

#include "defcolor/reducer.hpp"

namespace testsupport {

// Wheel gadget for the even-t extension: centre 0, neighbour cycle 1..6 in
// rotation order, and enough pendant leaves to push the ring degrees to the
// exact alternating 8,7 pattern for t=6. Leaves are pre-coloured with
// distinctive colours so the reduced list of ring vertex i becomes exactly
// the prescribed core list.
struct BigGadget {
    defcolor::RotationSystem rs;
    defcolor::ListAssignment lists;
    defcolor::Colouring partial;
    defcolor::BigEvenWheel config;
};

inline BigGadget make_big_gadget(const std::vector<std::vector<int>>& core_list,
                                 const std::vector<int>& centre_list) {
    using namespace defcolor;
    if (core_list.size() != 6)
        throw std::logic_error("gadget needs six core lists");
    std::vector<std::vector<int>> adjacency(7);
    for (int i = 1; i <= 6; ++i) {
        adjacency[0].push_back(i);
        adjacency[i] = {0, i == 6 ? 1 : i + 1, i == 1 ? 6 : i - 1};
    }
    std::vector<std::vector<int>> lists(7);
    lists[0] = centre_list;
    std::vector<int> leaf_colour;
    int next = 7;
    for (int i = 1; i <= 6; ++i) {
        lists[i] = core_list[i - 1];
        const int want = (i % 2 == 1) ? 8 : 7; // odd cycle positions are high
        while (static_cast<int>(adjacency[i].size()) < want) {
            const int leaf = next++;
            adjacency[i].push_back(leaf);
            adjacency.push_back({i});
            const int colour = 200 + leaf;
            lists[i].push_back(colour);
            lists.push_back({colour});
            leaf_colour.push_back(colour);
        }
    }
    const int n = static_cast<int>(adjacency.size());
    BigGadget out;
    out.rs = RotationSystem::from_rotations(adjacency);
    out.lists = ListAssignment(lists);
    out.partial = Colouring(n);
    for (int leaf = 7; leaf < n; ++leaf)
        out.partial.set(leaf, leaf_colour[leaf - 7]);
    const auto cfg = detect_big_even(out.rs, 0, 6);
    if (!cfg) throw std::logic_error("gadget does not classify as a big wheel");
    out.config = *cfg;
    return out;
}

} // namespace testsupport

#endif
