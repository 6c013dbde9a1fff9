// Acceptance suite: every criterion prints one PASS/FAIL line; the process
// exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "testing_util.hpp"
#include "uic/adversary.hpp"
#include "uic/circular.hpp"
#include "uic/completion.hpp"
#include "uic/frogs.hpp"
#include "uic/generators.hpp"
#include "uic/incremental.hpp"
#include "uic/oracle.hpp"

using namespace uic;

namespace {

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
    std::printf("%s  criterion %d (%s): %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. Safety: seeded tracks sessions, proper after every insertion.
void criterion_safety() {
    auto t0 = std::chrono::steady_clock::now();
    const int sessions = 1000;
    long long checks = 0;
    for (int s = 0; s < sessions; ++s) {
        int k = 1 + s % 6;
        std::size_t n = 20 + (static_cast<std::size_t>(s) * 37) % 481;  // up to 500
        SessionConfig cfg{k, static_cast<std::uint64_t>(s) + 1, n, GeneratorKind::tracks};
        auto events = generate_events(cfg);
        Engine engine(k);
        for (const auto& x : events) {
            engine.insert(x);
            std::string diag;
            if (!verify_proper(engine.intervals(), engine.coloring(), k, &diag)) {
                std::ostringstream os;
                os << "session " << s << ": " << diag;
                report(1, "safety", false, os.str());
                return;
            }
            ++checks;
        }
    }
    std::ostringstream os;
    os << sessions << " sessions, " << checks << " per-insert proper checks, 0 failures, "
       << seconds_since(t0) << "s";
    report(1, "safety", true, os.str());
}

// 2. Sweep clique number equals the backtracking feasibility threshold.
void criterion_oracle_equivalence() {
    std::mt19937_64 rng(20240817);
    int mismatches = 0;
    for (int round = 0; round < 500; ++round) {
        auto set = testing::random_multiset(rng, 1 + rng() % 12, 5);
        int w = max_clique(set);
        bool feasible = oracle::chromatic_backtracking(set, w).has_value();
        bool below = w > 1 && oracle::chromatic_backtracking(set, w - 1).has_value();
        if (!feasible || below) ++mismatches;
    }
    std::ostringstream os;
    os << "500 multisets (size <= 12), " << mismatches << " mismatches";
    report(2, "oracle equivalence", mismatches == 0, os.str());
}

// 3. Two-sided completion always succeeds and matches both boundaries.
void criterion_two_sided_completion() {
    std::mt19937_64 rng(333);
    int bad = 0;
    std::ostringstream first_err;
    for (int round = 0; round < 300; ++round) {
        int k = 1 + round % 4;
        auto li = testing::two_sided_instance(rng, k);
        const auto& v = li.window.intervals;
        try {
            if (v.size() > 30) throw std::logic_error("window exceeds 30 intervals");
            auto c = unit_color_completion(li.window, li.boundary, li.slack);
            std::string diag;
            if (!verify_proper(v, c, k, &diag)) throw std::logic_error("improper: " + diag);
            for (const auto& [a, col] : li.boundary.left)
                if (c.at(a) != col) throw std::logic_error("left boundary mismatch");
            for (const auto& [a, col] : li.boundary.right)
                if (c.at(a) != col) throw std::logic_error("right boundary mismatch");
            Coloring fixed = li.boundary.left;
            for (const auto& [a, col] : li.boundary.right) fixed[a] = col;
            if (!oracle::complete_with_boundaries(v, fixed, k))
                throw std::logic_error("oracle found the instance infeasible");
        } catch (const std::exception& e) {
            if (bad == 0) first_err << " (round " << round << ": " << e.what() << ")";
            ++bad;
        }
    }
    std::ostringstream os;
    os << "300 windows (k <= 4, size <= 30), " << bad << " failures" << first_err.str();
    report(3, "two-sided completion", bad == 0, os.str());
}

// 4. Frogs total cost under the closed-form bound, certificate at every step.
void criterion_frogs_bound() {
    std::mt19937_64 rng(444);
    int violations = 0;
    for (int round = 0; round < 200; ++round) {
        std::size_t n = 2 + rng() % 255;
        int kappa_choices[] = {1, 2, 4};
        int kappa = kappa_choices[round % 3];
        if (static_cast<std::size_t>(kappa) > n) kappa = 1;
        long long delta = (round % 2 == 0) ? 1 : 3;
        auto strat = (round % 4 == 0) ? frogs::JumpStrategy::greedy : frogs::JumpStrategy::random;

        auto s = frogs::FrogsState::initial(n, kappa, delta);
        bool ok = true;
        while (s.ranks.size() > 1) {
            auto before = s;
            std::size_t pos = frogs::pick_jump(s, strat, rng);
            long long cost = frogs::jump(s, pos);
            if (!frogs::check_potential_step(before, s, cost)) ok = false;
        }
        if (static_cast<double>(s.total_cost) > frogs::bound(n, kappa, delta)) ok = false;
        if (!ok) ++violations;
    }
    std::ostringstream os;
    os << "200 games (n <= 256, kappa in {1,2,4}, delta in {1,3}), " << violations
       << " violations";
    report(4, "frogs bound and certificate", violations == 0, os.str());
}

// 5. Empirical recourse growth for k = 4 tracks workloads.
void criterion_recourse_growth() {
    auto t0 = std::chrono::steady_clock::now();
    const int k = 4;
    const std::size_t sizes[] = {1000, 4000, 16000};
    double amortized[3] = {0, 0, 0};
    bool bound_ok = true;
    for (int si = 0; si < 3; ++si) {
        double total = 0;
        for (int seed = 1; seed <= 3; ++seed) {
            SessionConfig cfg{k, static_cast<std::uint64_t>(seed) * 101, sizes[si],
                              GeneratorKind::tracks};
            auto events = generate_events(cfg);
            Engine engine(k);
            for (const auto& x : events) engine.insert(x);
            double budget = std::pow(4.0, 7) * static_cast<double>(sizes[si]) *
                            std::log2(static_cast<double>(sizes[si]) + 2.0);
            if (static_cast<double>(engine.stats().total) > budget) bound_ok = false;
            total += static_cast<double>(engine.stats().total);
        }
        amortized[si] = total / 3.0 / static_cast<double>(sizes[si]);
    }
    const double log_ratio = std::log2(16000.0 + 2.0) / std::log2(1000.0 + 2.0);
    const bool growth_ok = amortized[2] <= 4.0 * amortized[0] * log_ratio;
    std::ostringstream os;
    os << "amortized recolorings per insert: n=1000: " << amortized[0]
       << ", n=4000: " << amortized[1] << ", n=16000: " << amortized[2]
       << "; budget check " << (bound_ok ? "ok" : "violated") << "; growth factor limit "
       << 4.0 * log_ratio << "; " << seconds_since(t0) << "s";
    report(5, "recourse growth", bound_ok && growth_ok, os.str());
}

// 6. Fully-dynamic lower bound against the naive baseline.
void criterion_lower_bound() {
    bool per_probe_ok = true;
    {
        auto colorer = adversary::naive_colorer(2);
        auto installed = adversary::install_gadget(*colorer, adversary::build_gadget(100));
        for (int p = 0; p < 50; ++p)
            if (adversary::probe(*colorer, installed) < 200) per_probe_ok = false;
    }

    auto ratio_for = [](int m) {
        int n = m / 8;
        auto colorer = adversary::naive_colorer(2);
        auto gadget = adversary::build_gadget(n);
        long long recolored = 0;
        Coloring snapshot;
        auto count = [&](const Coloring& now) {
            for (const auto& [a, col] : snapshot) {
                auto it = now.find(a);
                if (it != now.end() && it->second != col) ++recolored;
            }
        };
        adversary::InstalledGadget installed;
        installed.gadget = gadget;
        int updates = 0;
        for (const auto& c : gadget.coords) {
            snapshot = colorer->coloring();
            installed.arrivals.push_back(colorer->insert(c));
            count(colorer->coloring());
            ++updates;
        }
        while (updates < m) {
            snapshot = colorer->coloring();
            int ck1 = snapshot.at(installed.arrivals[gadget.k1_index]);
            int ci1 = snapshot.at(installed.arrivals[gadget.i1_index]);
            std::vector<std::int64_t> probes;
            if (ck1 == ci1) {
                probes.push_back(colorer->insert(gadget.probe_pair_first));
                probes.push_back(colorer->insert(gadget.probe_pair_second));
                updates += 2;
            } else {
                probes.push_back(colorer->insert(gadget.probe_single));
                ++updates;
            }
            count(colorer->coloring());
            for (auto a : probes) {
                snapshot = colorer->coloring();
                colorer->erase(a);
                count(colorer->coloring());
                ++updates;
            }
        }
        return static_cast<double>(recolored) / (static_cast<double>(m) * m);
    };

    double worst = 1e9;
    for (int m : {40, 80, 160}) worst = std::min(worst, ratio_for(m));
    std::ostringstream os;
    os << "50 probes at n=100 all forced >= 200: " << (per_probe_ok ? "yes" : "no")
       << "; min total/m^2 over m in {40,80,160}: " << worst;
    report(6, "fully-dynamic lower bound", per_probe_ok && worst >= 0.1, os.str());
}

// 7. Circular-arc coloring with exactly max-load colors.
void criterion_circular() {
    std::mt19937_64 rng(777);
    int bad = 0;
    std::ostringstream first_err;
    int done = 0;
    while (done < 50) {
        int target = 2 + static_cast<int>(rng() % 3);  // clique planted, load may reach 4
        std::vector<Coord> begins;
        for (int i = 0; i < target; ++i)
            begins.push_back(Coord(static_cast<long long>(rng() % (2 * target)),
                                   2 * static_cast<long long>(target)));
        int extras = static_cast<int>(rng() % 4);
        for (int i = 0; i < extras; ++i)
            begins.push_back(Coord(static_cast<long long>(rng() % 24), 8));
        auto trial = circular::ArcInstance::make(Coord(30), begins);
        int load = circular::max_load(trial).max_load;
        if (load > 4) continue;  // criterion speaks for L <= 4
        auto inst = circular::ArcInstance::make(Coord(load * load + 2 + static_cast<int>(rng() % 5)),
                                                begins);
        if (circular::max_load(inst).max_load != load) continue;
        ++done;
        auto colors = circular::color_arcs(inst);
        if (!colors) {
            if (bad == 0) first_err << " (packer found no extension)";
            ++bad;
            continue;
        }
        std::set<int> used;
        bool proper = true;
        for (std::size_t i = 0; i < inst.arcs.size(); ++i) {
            used.insert(colors->at(static_cast<std::int64_t>(i)));
            for (std::size_t j = i + 1; j < inst.arcs.size(); ++j)
                if (circular::arcs_intersect(inst.arcs[i], inst.arcs[j], inst.lambda) &&
                    colors->at(static_cast<std::int64_t>(i)) ==
                        colors->at(static_cast<std::int64_t>(j)))
                    proper = false;
        }
        if (!proper || static_cast<int>(used.size()) != load) {
            if (bad == 0) first_err << " (improper or wrong color count)";
            ++bad;
        }
    }

    // The five-cycle: load 2, chromatic number 3, must be refused.
    auto c5 = circular::ArcInstance::make(
        Coord(5, 2), {Coord(0), Coord(1, 2), Coord(1), Coord(3, 2), Coord(2)});
    bool c5_refused = !circular::color_arcs(c5).has_value();
    bool c5_chromatic = true;
    {
        // Exhaustive: no proper 2-coloring, some proper 3-coloring.
        auto feasible = [&](int k) {
            std::vector<int> assign(5, 0);
            auto rec = [&](auto&& self, std::size_t i) -> bool {
                if (i == 5) return true;
                for (int col = 1; col <= k; ++col) {
                    bool ok = true;
                    for (std::size_t j = 0; j < i; ++j)
                        if (assign[j] == col &&
                            circular::arcs_intersect(c5.arcs[i], c5.arcs[j], c5.lambda))
                            ok = false;
                    if (!ok) continue;
                    assign[i] = col;
                    if (self(self, i + 1)) return true;
                    assign[i] = 0;
                }
                return false;
            };
            return rec(rec, 0);
        };
        c5_chromatic = !feasible(2) && feasible(3) && circular::max_load(c5).max_load == 2;
    }

    std::ostringstream os;
    os << "50 slack instances, " << bad << " failures" << first_err.str()
       << "; C5 refused: " << (c5_refused ? "yes" : "no")
       << ", C5 chromatic check: " << (c5_chromatic ? "ok" : "broken");
    report(7, "circular arcs", bad == 0 && c5_refused && c5_chromatic, os.str());
}

// 8. The scan never claims more slack than the oracle finds in its region.
void criterion_scan_conservative() {
    std::mt19937_64 rng(888);
    int states = 0, compared = 0, violations = 0, slack_returns = 0;
    while (states < 200) {
        int k = 3 + static_cast<int>(rng() % 4);
        SessionConfig cfg{k, rng(), 60 + rng() % 200, GeneratorKind::tracks};
        auto events = generate_events(cfg);
        SequencedSet set;
        std::int64_t a = 0;
        for (const auto& x : events) set.insert(UnitInterval{x, a++});
        if (max_clique(set) > k) continue;
        ++states;

        auto everything = set.to_vector();
        std::uniform_int_distribution<std::size_t> pick(0, everything.size() - 1);
        for (int probe = 0; probe < 3; ++probe) {
            const auto& start = everything[pick(rng)];
            for (const auto& scan :
                 {find_right(set, k, start), find_left(set, k, start)}) {
                if (!scan.has_region || scan.slack_found == 0) continue;
                ++compared;
                if (scan.reason == ScanReason::slack) ++slack_returns;
                long long cap =
                    oracle::slack_capacity(everything, scan.region_lo, scan.region_hi, k);
                if (scan.slack_found > cap) ++violations;
            }
        }
    }
    std::ostringstream os;
    os << "200 states, " << compared << " scans compared (" << slack_returns
       << " slack returns), " << violations << " overclaims";
    report(8, "scan conservativeness", compared > 0 && slack_returns > 0 && violations == 0,
           os.str());
}

}  // namespace

int main() {
    criterion_safety();
    criterion_oracle_equivalence();
    criterion_two_sided_completion();
    criterion_frogs_bound();
    criterion_recourse_growth();
    criterion_lower_bound();
    criterion_circular();
    criterion_scan_conservative();
    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
}
