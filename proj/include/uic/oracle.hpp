#ifndef UIC_ORACLE_HPP
#define UIC_ORACLE_HPP

#include <optional>
#include <vector>

#include "uic/core.hpp"

namespace uic::oracle {

// Hard cap on instance size; the searches below are exponential.
inline constexpr std::size_t kSizeGuard = 30;

// Exhaustive search for a proper k-coloring. Returns nullopt when none exists.
std::optional<Coloring> chromatic_backtracking(const std::vector<UnitInterval>& intervals, int k);

// Exhaustive search for a proper k-coloring of `window` that agrees with
// `fixed` exactly on every arrival `fixed` mentions.
std::optional<Coloring> complete_with_boundaries(const std::vector<UnitInterval>& window,
                                                 const Coloring& fixed, int k);

// Maximum number of pairwise-disjoint unit intervals placeable with begins in
// [a, b-1] while keeping the clique number of set+dummies at most k.
// Candidate begins are existing endpoints (and a) plus integer offsets, which
// is exhaustive for unit intervals by a left-shift exchange argument.
long long slack_capacity(const std::vector<UnitInterval>& set, const Coord& a, const Coord& b,
                         int k);

}  // namespace uic::oracle

#endif
