#include "uic/completion.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace uic {

namespace {

[[noreturn]] void reject(const std::string& msg) {
    throw std::invalid_argument(msg);
}

void internal_check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("completion: broken invariant: ") + what);
}

// Begins must be non-decreasing; equal begins may come in any consistent tie
// order, so the run's own order stands in for the sequence order.
void require_sorted(const std::vector<UnitInterval>& v, const char* who) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i].x < v[i - 1].x)
            reject(std::string(who) + ": intervals not in sequence order");
}

void require_clique_bound(const std::vector<UnitInterval>& v, int k, const char* who) {
    int w = max_clique(v);
    if (w > k) {
        std::ostringstream os;
        os << who << ": clique number " << w << " exceeds k=" << k;
        reject(os.str());
    }
}

// Length of the colored prefix; every colored interval must come before every
// uncolored one.
std::size_t prefix_length(const std::vector<UnitInterval>& v, const Coloring& c, const char* who) {
    std::size_t l = 0;
    while (l < v.size() && c.count(v[l].arrival)) ++l;
    for (std::size_t i = l; i < v.size(); ++i)
        if (c.count(v[i].arrival)) {
            std::ostringstream os;
            os << who << ": colored interval arrival=" << v[i].arrival
               << " follows an uncolored one; prefix is not contiguous";
            reject(os.str());
        }
    return l;
}

void require_proper_prefix(const std::vector<UnitInterval>& v, std::size_t l, const Coloring& c,
                           int k, const char* who) {
    std::vector<UnitInterval> pre(v.begin(), v.begin() + l);
    std::string diag;
    if (!verify_proper(pre, c, k, &diag)) reject(std::string(who) + ": prefix not proper: " + diag);
}

bool bijective_on(const std::vector<UnitInterval>& v, std::size_t from, std::size_t count,
                  const Coloring& c, int k) {
    std::set<int> seen;
    for (std::size_t i = from; i < from + count; ++i) {
        auto it = c.find(v[i].arrival);
        if (it == c.end() || it->second < 1 || it->second > k) return false;
        if (!seen.insert(it->second).second) return false;
    }
    return seen.size() == static_cast<std::size_t>(k);
}

// Smallest color in 1..k unused among colored intervals of `run` that
// intersect run[pos]. A free color exists whenever the clique number is <= k.
int smallest_free_color(const std::vector<UnitInterval>& run, const Coloring& c, std::size_t pos,
                        int k) {
    std::vector<bool> used(static_cast<std::size_t>(k) + 1, false);
    for (std::size_t i = 0; i < run.size(); ++i) {
        if (i == pos) continue;
        if (!intersects(run[i], run[pos])) continue;
        auto it = c.find(run[i].arrival);
        if (it != c.end() && it->second >= 1 && it->second <= k) used[it->second] = true;
    }
    for (int col = 1; col <= k; ++col)
        if (!used[col]) return col;
    std::ostringstream os;
    os << "no free color for interval x=" << run[pos].x << " arrival=" << run[pos].arrival;
    reject(os.str());
}

UnitInterval reflected(const UnitInterval& iv) {
    return UnitInterval{-(iv.x + 1), iv.arrival};
}

std::vector<UnitInterval> reflect_run(const std::vector<UnitInterval>& run) {
    std::vector<UnitInterval> out;
    out.reserve(run.size());
    for (auto it = run.rbegin(); it != run.rend(); ++it) out.push_back(reflected(*it));
    return out;
}

bool run_connected(const std::vector<UnitInterval>& run) {
    for (std::size_t i = 1; i < run.size(); ++i)
        if (!intersects(run[i - 1], run[i])) return false;
    return true;
}

Coloring complete_connected(const Window& w, const BoundaryColoring& b, const SlackPlacement& slack);
Coloring complete_disconnected(const Window& w, const BoundaryColoring& b);

}  // namespace

Coloring modulo_completion(const Window& w, const Coloring& prefix) {
    const auto& v = w.intervals;
    const int k = w.k;
    if (k < 1) reject("modulo_completion: k must be >= 1");
    require_sorted(v, "modulo_completion");
    require_clique_bound(v, k, "modulo_completion");
    std::size_t l = prefix_length(v, prefix, "modulo_completion");
    if (l < static_cast<std::size_t>(k)) reject("modulo_completion: prefix shorter than k");
    require_proper_prefix(v, l, prefix, k, "modulo_completion");
    if (!bijective_on(v, l - k, k, prefix, k)) {
        std::ostringstream os;
        os << "modulo_completion: prefix is not a bijection on its last " << k
           << " intervals (ending at arrival=" << v[l - 1].arrival << ")";
        reject(os.str());
    }

    Coloring c = prefix;
    for (std::size_t i = l; i < v.size(); ++i) c[v[i].arrival] = c.at(v[i - k].arrival);
    return c;
}

Coloring make_bijection(const std::vector<UnitInterval>& seq, const Coloring& first_k, int k) {
    if (k < 1) reject("make_bijection: k must be >= 1");
    if (seq.size() != 2 * static_cast<std::size_t>(k))
        reject("make_bijection: expected exactly 2k intervals");
    require_sorted(seq, "make_bijection");
    require_clique_bound(seq, k, "make_bijection");
    std::size_t l = prefix_length(seq, first_k, "make_bijection");
    if (l != static_cast<std::size_t>(k)) reject("make_bijection: first_k must color the first k");
    require_proper_prefix(seq, l, first_k, k, "make_bijection");

    Coloring c = first_k;
    const std::size_t kk = static_cast<std::size_t>(k);

    // The prefix intervals intersecting seq[k-1] form a clique; the colors
    // they miss go to the first suffix intervals, then copying with period k
    // closes the permutation.
    std::size_t l0 = kk - 1;
    while (l0 > 0 && intersects(seq[l0 - 1], seq[kk - 1])) --l0;
    std::vector<bool> used(kk + 1, false);
    for (std::size_t i = l0; i < kk; ++i) used[c.at(seq[i].arrival)] = true;
    std::size_t at = kk;
    for (int col = 1; col <= k; ++col)
        if (!used[col]) c[seq[at++].arrival] = col;
    internal_check(at == kk + l0, "make_bijection: unused color count mismatch");
    for (std::size_t i = kk + l0; i < 2 * kk; ++i) c[seq[i].arrival] = c.at(seq[i - kk].arrival);
    internal_check(bijective_on(seq, kk, kk, c, k), "make_bijection: suffix not bijective");
    return c;
}

Coloring greedy_completion(const Window& w, const Coloring& prefix) {
    const auto& v = w.intervals;
    const int k = w.k;
    if (k < 1) reject("greedy_completion: k must be >= 1");
    require_sorted(v, "greedy_completion");
    require_clique_bound(v, k, "greedy_completion");
    std::size_t l = prefix_length(v, prefix, "greedy_completion");
    require_proper_prefix(v, l, prefix, k, "greedy_completion");

    Coloring c = prefix;
    const std::size_t n = v.size();
    const std::size_t kk = static_cast<std::size_t>(k);

    while (l < n && l < kk) {
        c[v[l].arrival] = smallest_free_color(v, c, l, k);
        ++l;
    }
    if (l == n) return c;

    if (l + kk <= n) {
        // Repair the next k intervals to a bijection, then copy modulo.
        std::vector<UnitInterval> seq(v.begin() + (l - kk), v.begin() + (l + kk));
        Coloring head;
        for (std::size_t i = l - kk; i < l; ++i) head[v[i].arrival] = c.at(v[i].arrival);
        Coloring repaired = make_bijection(seq, head, k);
        for (std::size_t i = l; i < l + kk; ++i) c[v[i].arrival] = repaired.at(v[i].arrival);
        l += kk;
        if (l < n) return modulo_completion(w, c);
        return c;
    }

    while (l < n) {
        c[v[l].arrival] = smallest_free_color(v, c, l, k);
        ++l;
    }
    return c;
}

namespace {

Coloring complete_connected(const Window& w, const BoundaryColoring& b,
                            const SlackPlacement& slack) {
    const auto& v = w.intervals;
    const int k = w.k;
    const std::size_t kk = static_cast<std::size_t>(k);
    const std::size_t n = v.size();

    // Dummy intervals; negative arrivals keep them distinguishable and make
    // them sort before a real interval with the same begin coordinate.
    std::vector<UnitInterval> dummies;
    dummies.reserve(slack.positions.size());
    for (std::size_t i = 0; i < slack.positions.size(); ++i)
        dummies.push_back(UnitInterval{slack.positions[i], -static_cast<std::int64_t>(i) - 1});

    // Separators M_i and the padding pools between them. Pool i holds the
    // k-1 dummies preceding separator i; the last pool has no separator.
    std::vector<UnitInterval> separators;
    std::vector<std::vector<UnitInterval>> pools(kk);
    for (std::size_t i = 0; i < kk; ++i) {
        for (std::size_t j = 0; j + 1 < kk; ++j) pools[i].push_back(dummies[i * kk + j]);
        if (i + 1 < kk) separators.push_back(dummies[i * kk + kk - 1]);
    }

    // Partition the window around the separators.
    std::vector<std::vector<UnitInterval>> parts(kk);
    for (const auto& iv : v) {
        std::size_t p = 0;
        while (p < separators.size() && !seq_less(iv, separators[p])) ++p;
        parts[p].push_back(iv);
    }
    for (std::size_t i = 0; i < kk; ++i)
        internal_check(!parts[i].empty(), "empty part in a connected window");
    internal_check(parts[0].size() >= kk, "first part misses the window prefix");
    internal_check(parts[kk - 1].size() >= kk, "last part misses the window suffix");

    // Pad each part with its smallest pool dummies to a multiple of k. The
    // merge keeps the window's own order among reals and puts a dummy before
    // a real with the same begin.
    auto before = [](const UnitInterval& a, const UnitInterval& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.arrival < 0 && b.arrival >= 0;
    };
    std::vector<std::vector<UnitInterval>> blocks(kk);
    for (std::size_t i = 0; i < kk; ++i) {
        std::size_t need = (kk - parts[i].size() % kk) % kk;
        internal_check(need <= pools[i].size(), "padding pool exhausted");
        blocks[i].resize(parts[i].size() + need);
        std::merge(parts[i].begin(), parts[i].end(), pools[i].begin(), pools[i].begin() + need,
                   blocks[i].begin(), before);
    }

    std::unordered_map<std::int64_t, int> col;

    // Block 1: copy the left boundary with period k.
    {
        const auto& blk = blocks[0];
        for (std::size_t i = 0; i < kk; ++i) {
            internal_check(blk[i].arrival == v[i].arrival, "block 1 does not start at the prefix");
            col[blk[i].arrival] = b.left.at(blk[i].arrival);
        }
        for (std::size_t i = kk; i < blk.size(); ++i) col[blk[i].arrival] = col.at(blk[i - kk].arrival);
    }

    auto block_bijective = [&](const std::vector<UnitInterval>& blk) {
        std::set<int> seen;
        for (std::size_t i = blk.size() - kk; i < blk.size(); ++i)
            seen.insert(col.at(blk[i].arrival));
        return seen.size() == kk;
    };
    internal_check(block_bijective(blocks[0]), "block 1 suffix not bijective");

    // Blocks 2..k: one insertion-sort step each, then copy with period k.
    for (std::size_t j = 2; j <= kk; ++j) {
        const auto& prev = blocks[j - 2];
        const auto& cur = blocks[j - 1];
        const std::size_t sp = prev.size();

        // Color the right boundary wants at the j-th position from the end.
        const int gamma = b.right.at(v[n - j + 1].arrival);
        std::size_t pivot = kk;
        for (std::size_t i = 0; i < kk; ++i)
            if (col.at(prev[sp - kk + i].arrival) == gamma) {
                pivot = i;
                break;
            }
        internal_check(pivot < kk, "pivot color missing from previous block");
        internal_check(pivot <= kk - j + 1, "pivot beyond its admissible range");

        for (std::size_t i = 0; i < kk; ++i) {
            int value;
            if (i < pivot)
                value = col.at(prev[sp - kk + i].arrival);
            else if (i < kk - j + 1)
                value = col.at(prev[sp - kk + i + 1].arrival);
            else if (i == kk - j + 1)
                value = gamma;
            else
                value = col.at(prev[sp - kk + i].arrival);
            col[cur[i].arrival] = value;
        }
        for (std::size_t i = kk; i < cur.size(); ++i)
            col[cur[i].arrival] = col.at(cur[i - kk].arrival);

        internal_check(block_bijective(cur), "block suffix not bijective");
        for (std::size_t i = 2; i <= j; ++i)
            internal_check(col.at(cur[cur.size() - i + 1].arrival) == b.right.at(v[n - i + 1].arrival),
                           "block suffix drifted from the right boundary");
    }

    Coloring out;
    for (const auto& iv : v) out[iv.arrival] = col.at(iv.arrival);
    for (std::size_t i = 0; i < kk; ++i)
        internal_check(out.at(v[i].arrival) == b.left.at(v[i].arrival), "left boundary mismatch");
    for (std::size_t i = n - kk; i < n; ++i)
        internal_check(out.at(v[i].arrival) == b.right.at(v[i].arrival), "right boundary mismatch");
    return out;
}

// Disconnected windows: each component is colored independently from its
// constrained side; slack is not needed.
Coloring complete_disconnected(const Window& w, const BoundaryColoring& b) {
    const auto& v = w.intervals;
    const int k = w.k;
    const std::size_t kk = static_cast<std::size_t>(k);
    const std::size_t n = v.size();

    Coloring out;
    std::size_t lo = 0;
    while (lo < n) {
        std::size_t hi = lo;
        while (hi + 1 < n && intersects(v[hi], v[hi + 1])) ++hi;

        const bool has_left = lo < kk;                // touches the prescribed prefix
        const bool has_right = hi >= n - kk;          // touches the prescribed suffix
        std::vector<UnitInterval> comp(v.begin() + lo, v.begin() + hi + 1);

        if (has_left && has_right) {
            internal_check(false, "disconnected window with a component touching both boundaries");
        } else if (has_left) {
            Coloring pre;
            for (std::size_t i = lo; i < std::min(kk, hi + 1); ++i)
                pre[v[i].arrival] = b.left.at(v[i].arrival);
            Coloring got = greedy_completion(Window{comp, k}, pre);
            out.insert(got.begin(), got.end());
        } else if (has_right) {
            std::vector<UnitInterval> rcomp = reflect_run(comp);
            Coloring pre;
            for (std::size_t i = std::max(lo, n - kk); i <= hi; ++i)
                pre[v[i].arrival] = b.right.at(v[i].arrival);
            Coloring got = greedy_completion(Window{rcomp, k}, pre);
            out.insert(got.begin(), got.end());
        } else {
            Coloring got = greedy_completion(Window{comp, k}, Coloring{});
            out.insert(got.begin(), got.end());
        }
        lo = hi + 1;
    }
    return out;
}

}  // namespace

Coloring unit_color_completion(const Window& w, const BoundaryColoring& b,
                               const SlackPlacement& slack) {
    const auto& v = w.intervals;
    const int k = w.k;
    const std::size_t kk = static_cast<std::size_t>(k);
    const std::size_t n = v.size();

    if (k < 1) reject("unit_color_completion: k must be >= 1");
    if (n < 2 * kk) reject("unit_color_completion: window shorter than 2k");
    require_sorted(v, "unit_color_completion");
    require_clique_bound(v, k, "unit_color_completion");
    if (!bijective_on(v, 0, kk, b.left, k))
        reject("unit_color_completion: left boundary is not a bijection onto 1..k");
    if (!bijective_on(v, n - kk, kk, b.right, k))
        reject("unit_color_completion: right boundary is not a bijection onto 1..k");

    if (slack.positions.size() != kk * kk - 1)
        reject("unit_color_completion: expected exactly k^2-1 slack positions");
    for (std::size_t i = 1; i < slack.positions.size(); ++i)
        if (slack.positions[i] - slack.positions[i - 1] < 1)
            reject("unit_color_completion: slack intervals are not pairwise disjoint");
    if (!slack.positions.empty()) {
        if (!(v[kk - 1].x < slack.positions.front()))
            reject("unit_color_completion: slack begins before the k-th interval");
        if (!(slack.positions.back() < v[n - kk].x))
            reject("unit_color_completion: slack ends after the (n-k+1)-th interval");
        std::vector<UnitInterval> merged = v;
        for (std::size_t i = 0; i < slack.positions.size(); ++i)
            merged.push_back(UnitInterval{slack.positions[i], -static_cast<std::int64_t>(i) - 1});
        require_clique_bound(merged, k, "unit_color_completion (window plus slack)");
    }

    if (!run_connected(v)) return complete_disconnected(w, b);
    return complete_connected(w, b, slack);
}

}  // namespace uic
