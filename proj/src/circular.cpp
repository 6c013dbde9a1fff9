#include "uic/circular.hpp"

#include <algorithm>
#include <stdexcept>

#include "uic/completion.hpp"

namespace uic::circular {

namespace {

void internal_check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("circular: broken invariant: ") + what);
}

// Maximum load of `inst` restricted to the candidate arc [c, c+1).
int load_on_arc(const ArcInstance& inst, const Coord& c) {
    // Work on the line segment [c, c+1); each arc contributes the pieces of
    // its (possibly wrapped) extent that fall inside.
    std::vector<std::pair<Coord, int>> events;
    for (const auto& b : inst.arcs) {
        for (int shift = -1; shift <= 1; ++shift) {
            Coord lo = b + inst.lambda * Coord(shift);
            Coord hi = lo + 1;
            if (hi <= c || lo >= c + 1) continue;
            events.emplace_back(std::max(lo, c), 1);
            events.emplace_back(std::min(hi, c + 1), -1);
        }
    }
    std::sort(events.begin(), events.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    int load = 0, best = 0;
    for (const auto& [pos, delta] : events) {
        load += delta;
        best = std::max(best, load);
    }
    return best;
}

}  // namespace

Coord mod_lambda(const Coord& x, const Coord& lambda) {
    Coord q = (x / lambda).floor();
    return x - lambda * q;
}

bool arcs_intersect(const Coord& a, const Coord& b, const Coord& lambda) {
    Coord d1 = mod_lambda(b - a, lambda);
    Coord d2 = mod_lambda(a - b, lambda);
    return d1 < 1 || d2 < 1;
}

ArcInstance ArcInstance::make(const Coord& lambda, std::vector<Coord> begins) {
    if (lambda < 2) throw std::invalid_argument("ArcInstance: circumference must be >= 2");
    ArcInstance inst;
    inst.lambda = lambda;
    inst.arcs.reserve(begins.size());
    for (const auto& b : begins) inst.arcs.push_back(mod_lambda(b, lambda));
    return inst;
}

LoadProfile max_load(const ArcInstance& inst) {
    LoadProfile prof;
    prof.witness = Coord(0);
    if (inst.arcs.empty()) return prof;

    // Split wrapped arcs at lambda and sweep [0, lambda); ends before begins
    // at equal coordinates (half-open arcs).
    std::vector<std::pair<Coord, int>> events;
    for (const auto& b : inst.arcs) {
        Coord e = b + 1;
        if (e <= inst.lambda) {
            events.emplace_back(b, 1);
            events.emplace_back(e, -1);
        } else {
            events.emplace_back(b, 1);
            events.emplace_back(inst.lambda, -1);
            events.emplace_back(Coord(0), 1);
            events.emplace_back(e - inst.lambda, -1);
        }
    }
    std::sort(events.begin(), events.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    int load = 0;
    for (const auto& [pos, delta] : events) {
        load += delta;
        if (load > prof.max_load) {
            prof.max_load = load;
            prof.witness = pos;
        }
    }
    return prof;
}

std::optional<std::vector<Coord>> find_slack_extension(const ArcInstance& inst, int r) {
    if (r < 0) throw std::invalid_argument("find_slack_extension: r must be >= 0");
    if (r == 0) return std::vector<Coord>{};
    const int load_cap = max_load(inst).max_load - 1;
    if (load_cap < 0) {
        // Empty instance: pack on the bare circle.
        std::vector<Coord> placed;
        Coord at(0);
        while (static_cast<int>(placed.size()) < r && at + 1 <= inst.lambda) {
            placed.push_back(at);
            at += 1;
        }
        if (static_cast<int>(placed.size()) < r) return std::nullopt;
        return placed;
    }

    // Candidate begins: endpoints plus integer offsets, normalized.
    std::vector<Coord> cand;
    std::vector<Coord> anchors{Coord(0)};
    for (const auto& b : inst.arcs) {
        anchors.push_back(b);
        anchors.push_back(mod_lambda(b + 1, inst.lambda));
    }
    long long steps = inst.lambda.floor_i64() + 1;
    for (const auto& e : anchors)
        for (long long t = 0; t < steps; ++t) cand.push_back(mod_lambda(e + Coord(t), inst.lambda));
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    // Dummies are pairwise disjoint, so each one is feasible independently:
    // every point it covers must lie under at most max_load-1 arcs.
    std::vector<Coord> placed;
    bool have_first = false;
    Coord first(0), prev_end(0);
    for (const auto& c : cand) {
        if (static_cast<int>(placed.size()) >= r) break;
        if (have_first) {
            if (c < prev_end) continue;
            if (c + 1 > first + inst.lambda) continue;  // wrap overlap with the first
        }
        if (load_on_arc(inst, c) > load_cap) continue;
        placed.push_back(c);
        prev_end = c + 1;
        if (!have_first) {
            first = c;
            have_first = true;
        }
    }
    if (static_cast<int>(placed.size()) < r) return std::nullopt;
    return placed;
}

std::optional<Coloring> color_arcs(const ArcInstance& inst) {
    const std::size_t n = inst.arcs.size();
    if (n == 0) return Coloring{};

    LoadProfile prof = max_load(inst);
    const int L = prof.max_load;
    auto slack = find_slack_extension(inst, L * L - 1);
    if (!slack) return std::nullopt;

    // Cut the circle at the witness: representatives in (-1, lambda-1], so
    // the arcs containing the witness are exactly those with rep <= 0.
    auto representative = [&](const Coord& b) {
        Coord s = mod_lambda(b - prof.witness, inst.lambda);
        if (s > inst.lambda - 1) return s - inst.lambda;
        return s;
    };

    std::vector<UnitInterval> line;
    line.reserve(n + static_cast<std::size_t>(L));
    for (std::size_t i = 0; i < n; ++i)
        line.push_back(UnitInterval{representative(inst.arcs[i]), static_cast<std::int64_t>(i)});
    std::sort(line.begin(), line.end(), SeqLess{});

    std::size_t clique = 0;
    while (clique < n && line[clique].x <= 0) ++clique;
    internal_check(clique == static_cast<std::size_t>(L), "witness clique size is not the load");

    BoundaryColoring b;
    for (std::size_t i = 0; i < clique; ++i) {
        b.left[line[i].arrival] = static_cast<int>(i) + 1;
        // Shifted copy of the cut clique, one full turn later.
        line.push_back(UnitInterval{line[i].x + inst.lambda,
                                    static_cast<std::int64_t>(n + i)});
        b.right[static_cast<std::int64_t>(n + i)] = static_cast<int>(i) + 1;
    }

    SlackPlacement placement;
    for (const auto& s : *slack) {
        Coord rep = representative(s);
        internal_check(rep > 0, "slack arc covers the witness point");
        placement.positions.push_back(rep);
    }
    std::sort(placement.positions.begin(), placement.positions.end());

    Window w{line, L};
    internal_check(max_clique(line) <= L, "unwrapped instance exceeds the load");
    Coloring full = unit_color_completion(w, b, placement);

    Coloring out;
    for (std::size_t i = 0; i < n; ++i) out[static_cast<std::int64_t>(i)] = full.at(static_cast<std::int64_t>(i));
    for (std::size_t i = 0; i < clique; ++i)
        internal_check(out.at(line[i].arrival) == full.at(static_cast<std::int64_t>(n + i)),
                       "cut clique colors drifted between the two copies");
    return out;
}

}  // namespace uic::circular
