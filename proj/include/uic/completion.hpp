#ifndef UIC_COMPLETION_HPP
#define UIC_COMPLETION_HPP

#include <vector>

#include "uic/core.hpp"

namespace uic {

// A k-colorable run of intervals in sequence order.
struct Window {
    std::vector<UnitInterval> intervals;
    int k = 1;

    std::size_t size() const { return intervals.size(); }
};

// Prescribed colors on the first k and last k intervals of a window.
// For the two-sided completion both sides must be bijections onto 1..k.
struct BoundaryColoring {
    Coloring left;
    Coloring right;
};

// Begin coordinates of k^2-1 pairwise-disjoint dummy unit intervals lying
// strictly between the k-th and the (n-k+1)-th window interval.
struct SlackPlacement {
    std::vector<Coord> positions;
};

// Extends `prefix` (a proper coloring of the first l >= k window intervals,
// bijective on the last k of them) to the whole window by copying colors with
// period k. The result is proper and agrees with the prefix.
Coloring modulo_completion(const Window& w, const Coloring& prefix);

// Extends any proper prefix coloring to the whole window: colors greedily up
// to k intervals, repairs the next k to a bijection, then completes modulo.
Coloring greedy_completion(const Window& w, const Coloring& prefix);

// Given 2k intervals with the first k properly colored, colors the last k so
// the result is proper, agrees with `first_k`, and is a bijection onto 1..k
// on the last k. Unused colors are assigned in ascending order.
Coloring make_bijection(const std::vector<UnitInterval>& seq, const Coloring& first_k, int k);

// Two-sided completion: extends both boundary bijections to a proper
// k-coloring of the whole window, using the slack intervals to realign the
// color permutation one insertion-sort step at a time. Dummies never appear
// in the output. Disconnected windows are completed per component from their
// constrained side.
Coloring unit_color_completion(const Window& w, const BoundaryColoring& b,
                               const SlackPlacement& slack);

}  // namespace uic

#endif
