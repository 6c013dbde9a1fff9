#include "uic/incremental.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "uic/completion.hpp"
#include "uic/oracle.hpp"

namespace uic {

namespace {

void internal_check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("incremental: broken invariant: ") + what);
}

// Direction-generic view of the sequence: the left scan sees the reflected
// line x -> -(x+1), under which it is a plain rightward scan.
struct Cursor {
    const SequencedSet& set;
    bool rightward;

    std::optional<SequencedSet::iterator> next(SequencedSet::iterator it) const {
        if (rightward) {
            ++it;
            if (it == set.end()) return std::nullopt;
            return it;
        }
        if (it == set.begin()) return std::nullopt;
        --it;
        return it;
    }
    Coord begin_of(const UnitInterval& iv) const { return rightward ? iv.x : -(iv.x + 1); }
    Coord end_of(const UnitInterval& iv) const { return rightward ? iv.x + 1 : -iv.x; }
};

struct ScanAccounting {
    std::vector<Gap> gaps;  // scan coordinates
    long long total = 0;
    bool active = false;
    Coord lo;
    Coord hi;
};

ScanResult finish_scan(const SequencedSet& set, SequencedSet::iterator start,
                       SequencedSet::iterator bound, bool rightward, ScanReason reason,
                       const ScanAccounting& acc) {
    ScanResult r;
    r.boundary = *bound;
    r.reason = reason;
    r.side = rightward ? 'R' : 'L';
    r.window = rightward ? set.slice(start, bound) : set.slice(bound, start);
    r.slack_found = acc.total;
    r.has_region = acc.active;
    if (acc.active) {
        if (rightward) {
            r.gaps = acc.gaps;
            r.region_lo = acc.lo;
            r.region_hi = acc.hi;
        } else {
            for (auto it = acc.gaps.rbegin(); it != acc.gaps.rend(); ++it)
                r.gaps.push_back(Gap{-(it->pos) - Coord(it->capacity), it->capacity});
            r.region_lo = -acc.hi;
            r.region_hi = -acc.lo;
        }
    }
    return r;
}

ScanResult scan(const SequencedSet& set, int k, const UnitInterval& start, bool rightward) {
    if (k < 1) throw std::invalid_argument("scan: k must be >= 1");
    auto it0 = set.find(start);
    if (it0 == set.end()) throw std::invalid_argument("scan: start interval not in the set");
    Cursor cur{set, rightward};
    const long long budget = static_cast<long long>(k) * k + 1;

    std::deque<UnitInterval> q;  // the last k scanned intervals
    ScanAccounting acc;

    auto it = it0;
    for (int i = 0; i < k; ++i) {
        q.push_back(*it);
        auto nx = cur.next(it);
        if (!nx || !intersects(*it, **nx))
            return finish_scan(set, it0, it, rightward, ScanReason::disconnect, acc);
        it = *nx;
    }

    Coord esp = cur.end_of(*it);
    acc.active = true;
    acc.lo = esp;
    acc.hi = esp;

    while (true) {
        long long ahead = (cur.begin_of(*it) - esp).floor_i64();
        if (acc.total + ahead >= budget) {
            if (ahead > 0) {
                acc.gaps.push_back(Gap{esp, ahead});
                acc.total += ahead;
                if (esp < acc.lo) acc.lo = esp;
            }
            acc.hi = cur.begin_of(*it);
            auto jt = it;
            for (int i = 0; i < k; ++i) {
                auto nx = cur.next(jt);
                if (!nx || !intersects(*jt, **nx))
                    return finish_scan(set, it0, jt, rightward, ScanReason::disconnect, acc);
                jt = *nx;
            }
            return finish_scan(set, it0, jt, rightward, ScanReason::slack, acc);
        }
        q.pop_front();
        q.push_back(*it);
        auto nx = cur.next(it);
        if (!nx || !intersects(*it, **nx))
            return finish_scan(set, it0, it, rightward, ScanReason::disconnect, acc);
        it = *nx;

        Coord span_lo = cur.begin_of(q.front());
        Coord span_hi = cur.end_of(q.front());
        for (const auto& member : q) {
            Coord b = cur.begin_of(member);
            Coord e = cur.end_of(member);
            if (b > span_lo) span_lo = b;
            if (e < span_hi) span_hi = e;
        }
        if (span_lo < span_hi) {
            long long g = (span_lo - esp).floor_i64();
            if (g > 0) {
                acc.gaps.push_back(Gap{esp, g});
                acc.total += g;
                if (esp < acc.lo) acc.lo = esp;
            }
            esp = span_hi;
            if (acc.hi < esp) acc.hi = esp;
        }
    }
}

UnitInterval reflected(const UnitInterval& iv) { return UnitInterval{-(iv.x + 1), iv.arrival}; }

std::vector<UnitInterval> reflect_run(const std::vector<UnitInterval>& run) {
    std::vector<UnitInterval> out;
    out.reserve(run.size());
    for (auto it = run.rbegin(); it != run.rend(); ++it) out.push_back(reflected(*it));
    return out;
}

std::vector<UnitInterval> preds_of(const SequencedSet& set, const UnitInterval& iv, int count) {
    auto it = set.find(iv);
    internal_check(it != set.end(), "window interval missing from the set");
    std::vector<UnitInterval> out;
    while (static_cast<int>(out.size()) < count && it != set.begin()) {
        --it;
        out.push_back(*it);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<UnitInterval> succs_of(const SequencedSet& set, const UnitInterval& iv, int count) {
    auto it = set.find(iv);
    internal_check(it != set.end(), "window interval missing from the set");
    std::vector<UnitInterval> out;
    ++it;
    while (static_cast<int>(out.size()) < count && it != set.end()) {
        out.push_back(*it);
        ++it;
    }
    return out;
}

// Bijection onto 1..k over `targets`, proper against the colored `context`
// that precedes them. With a full k-context this is exactly the bijection
// repair; with a shorter one a bijection-constrained greedy always succeeds.
Coloring boundary_bijection(const std::vector<UnitInterval>& context, const Coloring& ctx_colors,
                            const std::vector<UnitInterval>& targets, int k) {
    internal_check(targets.size() == static_cast<std::size_t>(k), "boundary needs k targets");
    if (context.size() == static_cast<std::size_t>(k)) {
        std::vector<UnitInterval> seq = context;
        seq.insert(seq.end(), targets.begin(), targets.end());
        Coloring head;
        for (const auto& iv : context) head[iv.arrival] = ctx_colors.at(iv.arrival);
        Coloring full = make_bijection(seq, head, k);
        Coloring out;
        for (const auto& iv : targets) out[iv.arrival] = full.at(iv.arrival);
        return out;
    }
    Coloring out;
    std::vector<bool> taken(static_cast<std::size_t>(k) + 1, false);
    for (std::size_t i = 0; i < targets.size(); ++i) {
        std::vector<bool> used = taken;
        for (const auto& c : context)
            if (intersects(c, targets[i])) used[ctx_colors.at(c.arrival)] = true;
        int chosen = 0;
        for (int col = 1; col <= k; ++col)
            if (!used[col]) {
                chosen = col;
                break;
            }
        internal_check(chosen != 0, "boundary bijection ran out of colors");
        out[targets[i].arrival] = chosen;
        taken[chosen] = true;
    }
    return out;
}

Coloring restrict_to(const Coloring& colors, const std::vector<UnitInterval>& run) {
    Coloring out;
    for (const auto& iv : run) {
        auto it = colors.find(iv.arrival);
        if (it != colors.end()) out[iv.arrival] = it->second;
    }
    return out;
}

}  // namespace

ScanResult find_right(const SequencedSet& set, int k, const UnitInterval& start) {
    return scan(set, k, start, true);
}

ScanResult find_left(const SequencedSet& set, int k, const UnitInterval& start) {
    return scan(set, k, start, false);
}

const ScanResult& choose_side(const ScanResult& left, const ScanResult& right) {
    return right.window.size() <= left.window.size() ? right : left;
}

Coloring recolor_window(const SequencedSet& set, const Coloring& current, int k,
                        const ScanResult& scan) {
    const auto& w = scan.window;
    internal_check(!w.empty(), "empty window");
    const std::size_t n = w.size();
    const std::size_t kk = static_cast<std::size_t>(k);

    if (scan.reason == ScanReason::disconnect) {
        // The window is disjoint from everything beyond the boundary; only
        // the side facing the rest of the set constrains the recoloring, so
        // a greedy completion anchored there suffices.
        if (scan.side == 'R') {
            std::vector<UnitInterval> run = preds_of(set, w.front(), k);
            Coloring anchor = restrict_to(current, run);
            run.insert(run.end(), w.begin(), w.end());
            Coloring got = greedy_completion(Window{run, k}, anchor);
            return restrict_to(got, w);
        }
        std::vector<UnitInterval> run = w;
        auto ctx = succs_of(set, w.back(), k);
        run.insert(run.end(), ctx.begin(), ctx.end());
        Coloring got = greedy_completion(Window{reflect_run(run), k}, restrict_to(current, ctx));
        return restrict_to(got, w);
    }

    // Slack case. Windows produced by the scans always hold at least 2k+2
    // intervals; the oracle backstop covers synthetic shorter ones.
    if (n < 2 * kk) {
        std::vector<UnitInterval> run = preds_of(set, w.front(), k);
        std::vector<UnitInterval> tail = succs_of(set, w.back(), k);
        Coloring fixed = restrict_to(current, run);
        for (const auto& iv : tail) fixed[iv.arrival] = current.at(iv.arrival);
        run.insert(run.end(), w.begin(), w.end());
        run.insert(run.end(), tail.begin(), tail.end());
        auto sol = oracle::complete_with_boundaries(run, fixed, k);
        internal_check(sol.has_value(), "backstop window admits no completion");
        return restrict_to(*sol, w);
    }

    auto left_ctx = preds_of(set, w.front(), k);
    auto right_ctx = succs_of(set, w.back(), k);

    BoundaryColoring b;
    {
        std::vector<UnitInterval> first_k(w.begin(), w.begin() + kk);
        b.left = boundary_bijection(left_ctx, current, first_k, k);
    }
    {
        std::vector<UnitInterval> last_k(w.end() - kk, w.end());
        b.right = boundary_bijection(reflect_run(right_ctx), restrict_to(current, right_ctx),
                                     reflect_run(last_k), k);
    }

    SlackPlacement placement;
    const std::size_t want = kk * kk - 1;
    for (const auto& gap : scan.gaps) {
        for (long long t = 0; t < gap.capacity && placement.positions.size() < want; ++t)
            placement.positions.push_back(gap.pos + Coord(t));
        if (placement.positions.size() >= want) break;
    }
    internal_check(placement.positions.size() == want, "scan reported too little slack");

    return unit_color_completion(Window{w, k}, b, placement);
}

Engine::Engine(int k) : k_(k) {
    if (k < 1) throw std::invalid_argument("Engine: k must be >= 1");
}

UpdateRecord Engine::insert(const Coord& x) {
    UnitInterval iv{x, next_arrival_};

    // Adding [x, x+1) keeps the clique number at most k iff every point it
    // covers lies under at most k-1 existing intervals.
    std::vector<UnitInterval> local;
    {
        // First interval with begin strictly greater than x-1.
        auto it = set_.lower_bound(UnitInterval{x - 1, std::numeric_limits<std::int64_t>::max()});
        for (; it != set_.end() && it->x < x + 1; ++it) local.push_back(*it);
    }
    local.push_back(iv);
    if (max_clique(local) > k_) {
        std::sort(local.begin(), local.end(), SeqLess{});
        std::size_t left = 0, bad_left = 0, bad_right = 0;
        int best = 0;
        for (std::size_t i = 0; i < local.size(); ++i) {
            while (local[left].x + 1 <= local[i].x) ++left;
            if (static_cast<int>(i - left + 1) > best) {
                best = static_cast<int>(i - left + 1);
                bad_left = left;
                bad_right = i;
            }
        }
        std::ostringstream os;
        os << "insert x=" << x.str() << " would create a " << best << "-clique with k=" << k_
           << "; begins:";
        for (std::size_t i = bad_left; i <= bad_right; ++i) os << " " << local[i].x.str();
        throw std::invalid_argument(os.str());
    }

    set_.insert(iv);
    ScanResult right = find_right(set_, k_, iv);
    ScanResult left = find_left(set_, k_, iv);
    const ScanResult& chosen = choose_side(left, right);

    Coloring fresh = recolor_window(set_, coloring_, k_, chosen);
    int recolored = 0;
    for (const auto& [arrival, color] : fresh) {
        if (arrival == iv.arrival) continue;
        if (coloring_.at(arrival) != color) ++recolored;
    }
    for (const auto& [arrival, color] : fresh) coloring_[arrival] = color;

    stats_.per_update.push_back(recolored);
    stats_.total += recolored;
    ++stats_.insertions;
    ++next_arrival_;

    return UpdateRecord{iv.arrival, recolored, chosen.window.size(), chosen.side, chosen.reason};
}

}  // namespace uic
