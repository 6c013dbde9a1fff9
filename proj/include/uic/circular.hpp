#ifndef UIC_CIRCULAR_HPP
#define UIC_CIRCULAR_HPP

#include <optional>
#include <vector>

#include "uic/core.hpp"

namespace uic::circular {

// Unit circular arcs [b, b+1) on a circle of circumference lambda >= 2.
// Begins are normalized into [0, lambda).
struct ArcInstance {
    Coord lambda;
    std::vector<Coord> arcs;

    static ArcInstance make(const Coord& lambda, std::vector<Coord> begins);
};

struct LoadProfile {
    int max_load = 0;
    Coord witness;  // smallest point achieving the maximum
};

Coord mod_lambda(const Coord& x, const Coord& lambda);
bool arcs_intersect(const Coord& a, const Coord& b, const Coord& lambda);

// Maximum number of arcs covering one point, with a witness point.
LoadProfile max_load(const ArcInstance& inst);

// Greedily packs r pairwise-disjoint unit arcs whose addition keeps the
// maximum load unchanged. Candidate begins are arc endpoints plus integer
// offsets. Sound but not complete: a failure does not prove non-existence.
std::optional<std::vector<Coord>> find_slack_extension(const ArcInstance& inst, int r);

// Colors the arcs with exactly max_load colors by cutting the circle at a
// maximum-load witness, duplicating the cut clique at distance lambda, and
// running the two-sided completion with the packed slack arcs. Returns
// nullopt ("insufficient slack") when the packer finds no extension.
// The coloring is keyed by arc index.
std::optional<Coloring> color_arcs(const ArcInstance& inst);

}  // namespace uic::circular

#endif
