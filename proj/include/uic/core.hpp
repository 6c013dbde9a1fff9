#ifndef UIC_CORE_HPP
#define UIC_CORE_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "uic/coord.hpp"

namespace uic {

// Half-open unit interval [x, x+1). The arrival index is the insertion step;
// it is the interval's identity and the tie-breaker of the sequence order.
struct UnitInterval {
    Coord x;
    std::int64_t arrival = 0;

    Coord y() const { return x + 1; }
};

// Sequence order: begin coordinate, ties broken by smaller arrival.
// A strict total order on any multiset with distinct arrivals.
struct SeqLess {
    bool operator()(const UnitInterval& a, const UnitInterval& b) const {
        if (a.x != b.x) return a.x < b.x;
        return a.arrival < b.arrival;
    }
};

inline bool seq_less(const UnitInterval& a, const UnitInterval& b) { return SeqLess{}(a, b); }

// a and b overlap iff their begin coordinates are less than 1 apart.
inline bool intersects(const UnitInterval& a, const UnitInterval& b) {
    if (a.x < b.x) return b.x < a.x + 1;
    return a.x < b.x + 1;
}

// Common intersection [lo, hi) of a clique of intervals.
struct CliqueSpan {
    Coord lo;
    Coord hi;
};

// [max x, min y) of the inputs, or nullopt when they are not a clique.
// The input must be nonempty.
std::optional<CliqueSpan> span_of(const std::vector<UnitInterval>& intervals);

// Total map arrival -> color, colors in 1..k.
using Coloring = std::unordered_map<std::int64_t, int>;

// Ordered multiset of unit intervals in sequence order. Backed by a balanced
// tree; insert/erase/predecessor/successor are O(log n).
class SequencedSet {
public:
    using container = std::set<UnitInterval, SeqLess>;
    using iterator = container::const_iterator;

    iterator insert(const UnitInterval& iv);
    bool erase(const UnitInterval& iv);
    iterator find(const UnitInterval& iv) const { return items_.find(iv); }
    iterator lower_bound(const UnitInterval& iv) const { return items_.lower_bound(iv); }

    iterator begin() const { return items_.begin(); }
    iterator end() const { return items_.end(); }
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }

    const UnitInterval& first() const;
    const UnitInterval& last() const;

    // Contiguous run [from, to] inclusive, in sequence order.
    std::vector<UnitInterval> slice(iterator from, iterator to) const;
    std::vector<UnitInterval> to_vector() const;

private:
    container items_;
};

// Clique number by a left-to-right sweep. Equals the chromatic number.
int max_clique(const std::vector<UnitInterval>& intervals);
int max_clique(const SequencedSet& set);

// True iff c uses colors in 1..k and no two intersecting intervals share a
// color. Sweeps with a window of the k preceding intervals; an intersecting
// equal-color pair further apart implies a (k+1)-clique, which forces a
// nearer violation, so the window is sufficient.
bool verify_proper(const std::vector<UnitInterval>& sorted_run, const Coloring& c, int k,
                   std::string* diagnostic = nullptr);
bool verify_proper(const SequencedSet& set, const Coloring& c, int k,
                   std::string* diagnostic = nullptr);

}  // namespace uic

#endif
