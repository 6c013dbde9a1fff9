#include "uic/core.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace uic {

std::optional<CliqueSpan> span_of(const std::vector<UnitInterval>& intervals) {
    if (intervals.empty()) throw std::invalid_argument("span_of: empty input");
    Coord lo = intervals[0].x;
    Coord hi = intervals[0].y();
    for (std::size_t i = 1; i < intervals.size(); ++i) {
        if (intervals[i].x > lo) lo = intervals[i].x;
        if (intervals[i].y() < hi) hi = intervals[i].y();
    }
    if (!(lo < hi)) return std::nullopt;
    return CliqueSpan{lo, hi};
}

SequencedSet::iterator SequencedSet::insert(const UnitInterval& iv) {
    auto [it, fresh] = items_.insert(iv);
    if (!fresh) throw std::invalid_argument("SequencedSet: duplicate (x, arrival)");
    return it;
}

bool SequencedSet::erase(const UnitInterval& iv) {
    return items_.erase(iv) > 0;
}

const UnitInterval& SequencedSet::first() const {
    if (items_.empty()) throw std::out_of_range("SequencedSet: empty");
    return *items_.begin();
}

const UnitInterval& SequencedSet::last() const {
    if (items_.empty()) throw std::out_of_range("SequencedSet: empty");
    return *items_.rbegin();
}

std::vector<UnitInterval> SequencedSet::slice(iterator from, iterator to) const {
    std::vector<UnitInterval> out;
    for (auto it = from;; ++it) {
        out.push_back(*it);
        if (it == to) break;
    }
    return out;
}

std::vector<UnitInterval> SequencedSet::to_vector() const {
    return std::vector<UnitInterval>(items_.begin(), items_.end());
}

int max_clique(const std::vector<UnitInterval>& intervals) {
    if (intervals.empty()) return 0;
    std::vector<UnitInterval> v = intervals;
    std::sort(v.begin(), v.end(), SeqLess{});
    // All intervals are unit, so the clique through v[i] is exactly the run of
    // begins within (x(v[i]) - 1, x(v[i])].
    int best = 0;
    std::size_t left = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        while (v[left].x + 1 <= v[i].x) ++left;
        best = std::max(best, static_cast<int>(i - left + 1));
    }
    return best;
}

int max_clique(const SequencedSet& set) {
    if (set.empty()) return 0;
    int best = 0;
    auto left = set.begin();
    std::size_t width = 0;
    for (auto it = set.begin(); it != set.end(); ++it) {
        ++width;
        while (left->x + 1 <= it->x) {
            ++left;
            --width;
        }
        best = std::max(best, static_cast<int>(width));
    }
    return best;
}

namespace {

template <typename Iter>
bool verify_proper_impl(Iter begin, Iter end, const Coloring& c, int k, std::string* diagnostic) {
    auto fail = [&](const std::string& msg) {
        if (diagnostic) *diagnostic = msg;
        return false;
    };
    if (k < 1) return fail("k must be >= 1");
    std::deque<const UnitInterval*> window;  // last k intervals in sequence order
    for (Iter it = begin; it != end; ++it) {
        const UnitInterval& cur = *it;
        auto ci = c.find(cur.arrival);
        if (ci == c.end()) {
            std::ostringstream os;
            os << "missing color for interval x=" << cur.x << " arrival=" << cur.arrival;
            return fail(os.str());
        }
        int col = ci->second;
        if (col < 1 || col > k) {
            std::ostringstream os;
            os << "color " << col << " out of range for arrival=" << cur.arrival;
            return fail(os.str());
        }
        for (const UnitInterval* prev : window) {
            if (!intersects(*prev, cur)) continue;
            if (c.at(prev->arrival) == col) {
                std::ostringstream os;
                os << "intervals arrival=" << prev->arrival << " (x=" << prev->x
                   << ") and arrival=" << cur.arrival << " (x=" << cur.x
                   << ") intersect and share color " << col;
                return fail(os.str());
            }
        }
        window.push_back(&cur);
        if (window.size() > static_cast<std::size_t>(k)) window.pop_front();
    }
    return true;
}

}  // namespace

bool verify_proper(const std::vector<UnitInterval>& sorted_run, const Coloring& c, int k,
                   std::string* diagnostic) {
    return verify_proper_impl(sorted_run.begin(), sorted_run.end(), c, k, diagnostic);
}

bool verify_proper(const SequencedSet& set, const Coloring& c, int k, std::string* diagnostic) {
    return verify_proper_impl(set.begin(), set.end(), c, k, diagnostic);
}

}  // namespace uic
