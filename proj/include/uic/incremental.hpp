#ifndef UIC_INCREMENTAL_HPP
#define UIC_INCREMENTAL_HPP

#include <cstdint>
#include <vector>

#include "uic/core.hpp"

namespace uic {

enum class ScanReason { disconnect, slack };

// A maximal region between clique spans where dummy unit intervals fit:
// `capacity` disjoint units at pos, pos+1, ...
struct Gap {
    Coord pos;
    long long capacity = 0;
};

// Result of scanning away from the inserted interval.
struct ScanResult {
    UnitInterval boundary;              // J at the far end of the window
    std::vector<UnitInterval> window;   // contiguous run, ascending, includes both ends
    ScanReason reason = ScanReason::disconnect;
    std::vector<Gap> gaps;              // ascending by pos, real coordinates
    char side = 'R';                    // 'L' or 'R'
    long long slack_found = 0;          // sum of gap capacities
    bool has_region = false;            // true when gap accounting ran
    Coord region_lo;                    // gap begins lie in [region_lo, region_hi - 1]
    Coord region_hi;
};

// Scans the successors (predecessors) of `start` for the nearest window
// boundary: either the run disconnects, or enough slack for k^2-1 disjoint
// dummy intervals has accumulated and k more intervals were skipped.
ScanResult find_right(const SequencedSet& set, int k, const UnitInterval& start);
ScanResult find_left(const SequencedSet& set, int k, const UnitInterval& start);

// The scan whose window holds fewer intervals; ties go right.
const ScanResult& choose_side(const ScanResult& left, const ScanResult& right);

// New colors for the window intervals only; everything else keeps its color.
// `current` must properly color the set minus the window's newest interval.
Coloring recolor_window(const SequencedSet& set, const Coloring& current, int k,
                        const ScanResult& scan);

struct RecourseStats {
    std::vector<int> per_update;
    long long total = 0;
    std::int64_t insertions = 0;
};

struct UpdateRecord {
    std::int64_t step = 0;
    int recolored = 0;
    std::size_t window_size = 0;
    char side = 'R';
    ScanReason reason = ScanReason::disconnect;
};

// Insert-only recoloring engine for a fixed k. The coloring is a proper
// k-coloring after every insert; an insert that would push the clique number
// past k is rejected and leaves the state unchanged.
class Engine {
public:
    explicit Engine(int k);

    UpdateRecord insert(const Coord& x);

    int k() const { return k_; }
    const SequencedSet& intervals() const { return set_; }
    const Coloring& coloring() const { return coloring_; }
    const RecourseStats& stats() const { return stats_; }

private:
    int k_;
    SequencedSet set_;
    Coloring coloring_;
    RecourseStats stats_;
    std::int64_t next_arrival_ = 0;
};

}  // namespace uic

#endif
