#include "uic/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace uic::oracle {

namespace {

struct Search {
    std::vector<UnitInterval> order;  // sequence order
    std::vector<int> fixed_color;     // 0 = free
    std::vector<std::vector<int>> conflicts;  // indices of earlier intersecting intervals
    int k = 0;
    bool symmetry_prune = false;  // only valid with no fixed colors
    std::vector<int> assigned;

    bool run(std::size_t pos, int max_used) {
        if (pos == order.size()) return true;
        if (fixed_color[pos] != 0) {
            int col = fixed_color[pos];
            for (int q : conflicts[pos])
                if (assigned[q] == col) return false;
            assigned[pos] = col;
            if (run(pos + 1, std::max(max_used, col))) return true;
            assigned[pos] = 0;
            return false;
        }
        int limit = symmetry_prune ? std::min(k, max_used + 1) : k;
        for (int col = 1; col <= limit; ++col) {
            bool ok = true;
            for (int q : conflicts[pos]) {
                if (assigned[q] == col) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            assigned[pos] = col;
            if (run(pos + 1, std::max(max_used, col))) return true;
            assigned[pos] = 0;
        }
        return false;
    }
};

std::optional<Coloring> solve(const std::vector<UnitInterval>& intervals, const Coloring& fixed,
                              int k, bool allow_symmetry) {
    if (intervals.size() > kSizeGuard)
        throw std::invalid_argument("oracle: instance exceeds the size guard");
    if (k < 0) throw std::invalid_argument("oracle: k must be non-negative");
    if (intervals.empty()) return Coloring{};
    if (k == 0) return std::nullopt;

    Search s;
    s.order = intervals;
    std::sort(s.order.begin(), s.order.end(), SeqLess{});
    s.k = k;
    s.fixed_color.assign(s.order.size(), 0);
    for (std::size_t i = 0; i < s.order.size(); ++i) {
        auto it = fixed.find(s.order[i].arrival);
        if (it != fixed.end()) {
            if (it->second < 1 || it->second > k) return std::nullopt;
            s.fixed_color[i] = it->second;
        }
    }
    s.symmetry_prune = allow_symmetry && fixed.empty();
    s.conflicts.resize(s.order.size());
    for (std::size_t i = 0; i < s.order.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (intersects(s.order[j], s.order[i])) s.conflicts[i].push_back(static_cast<int>(j));
    s.assigned.assign(s.order.size(), 0);
    if (!s.run(0, 0)) return std::nullopt;

    Coloring out;
    for (std::size_t i = 0; i < s.order.size(); ++i) out[s.order[i].arrival] = s.assigned[i];
    return out;
}

}  // namespace

std::optional<Coloring> chromatic_backtracking(const std::vector<UnitInterval>& intervals, int k) {
    return solve(intervals, Coloring{}, k, true);
}

std::optional<Coloring> complete_with_boundaries(const std::vector<UnitInterval>& window,
                                                 const Coloring& fixed, int k) {
    return solve(window, fixed, k, false);
}

long long slack_capacity(const std::vector<UnitInterval>& set, const Coord& a, const Coord& b,
                         int k) {
    if (!(a < b)) throw std::invalid_argument("slack_capacity: requires a < b");

    // Only intervals overlapping [a, b] can block a dummy or contribute a
    // useful anchor; everything else is disjoint from every candidate.
    std::vector<UnitInterval> local_set;
    for (const auto& iv : set)
        if (iv.y() > a && iv.x < b) local_set.push_back(iv);

    // Candidate begins: {a, local endpoints} shifted by integers, clipped to [a, b-1].
    std::vector<Coord> anchors;
    anchors.push_back(a);
    for (const auto& iv : local_set) {
        anchors.push_back(iv.x);
        anchors.push_back(iv.y());
    }
    std::vector<Coord> cand;
    const Coord hi = b - 1;
    for (const auto& e : anchors) {
        // e + t in [a, hi]  =>  t in [ceil(a - e), floor(hi - e)]
        Coord lo_t = (a - e).floor();
        if (lo_t + e < a) lo_t += 1;
        for (Coord t = lo_t; e + t <= hi; t += 1) cand.push_back(e + t);
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    // A dummy is feasible iff every point it covers lies under fewer than k
    // set intervals. Dummies are pairwise disjoint, so feasibility is
    // independent per dummy and earliest-fit greedy is optimal.
    auto feasible = [&](const Coord& p) {
        std::vector<UnitInterval> near;
        for (const auto& iv : local_set)
            if (iv.x + 1 > p && iv.x < p + 1) near.push_back(iv);
        near.push_back(UnitInterval{p, -1});
        return max_clique(near) <= k;
    };

    long long placed = 0;
    Coord cursor = a;
    for (const auto& p : cand) {
        if (p < cursor) continue;
        if (!feasible(p)) continue;
        ++placed;
        cursor = p + 1;
    }
    return placed;
}

}  // namespace uic::oracle
