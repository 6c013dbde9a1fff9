#ifndef UIC_ADVERSARY_HPP
#define UIC_ADVERSARY_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "uic/core.hpp"

namespace uic::adversary {

// A fully-dynamic recoloring algorithm under test: insertions and deletions,
// proper coloring with at most k colors after every update.
class DynamicColorer {
public:
    virtual ~DynamicColorer() = default;
    virtual std::int64_t insert(const Coord& x) = 0;  // returns the arrival id
    virtual void erase(std::int64_t arrival) = 0;
    virtual const Coloring& coloring() const = 0;
    virtual int k() const = 0;
};

// Baseline that recolors the affected component from scratch on each update.
std::unique_ptr<DynamicColorer> naive_colorer(int k);

// Four interleaved chains of n disjoint intervals each: two path-shaped
// halves with a sub-unit gap between the facing endpoints K_1 and I_1.
// 2-colorable; every chain is forced monochromatic.
struct GadgetInstance {
    int n = 0;
    std::vector<Coord> coords;        // insertion coordinates, left to right
    std::size_t k1_index = 0;         // K_1, rightmost interval of the left half
    std::size_t i1_index = 0;         // I_1, leftmost interval of the right half
    Coord probe_pair_first;           // probes for the equal-color case
    Coord probe_pair_second;
    Coord probe_single;               // probe for the distinct-color case
};

GadgetInstance build_gadget(int n);

// The gadget as held by a colorer, with the arrival ids it assigned.
struct InstalledGadget {
    GadgetInstance gadget;
    std::vector<std::int64_t> arrivals;
};

InstalledGadget install_gadget(DynamicColorer& colorer, const GadgetInstance& gadget);

// Reads the colors of K_1 and I_1, inserts the probe interval(s) that force
// the opposite relation, counts how many gadget intervals changed color, then
// removes the probes. Any proper 2-coloring must flip one half, so the count
// is at least 2n. Throws if the colorer ever leaves a proper coloring.
int probe(DynamicColorer& colorer, const InstalledGadget& installed);

}  // namespace uic::adversary

#endif
