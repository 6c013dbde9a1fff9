#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "testing_util.hpp"
#include "uic/generators.hpp"
#include "uic/incremental.hpp"
#include "uic/oracle.hpp"

using namespace uic;

namespace {

SequencedSet set_of(std::initializer_list<const char*> begins) {
    SequencedSet s;
    std::int64_t a = 0;
    for (const char* b : begins) s.insert(UnitInterval{Coord::parse(b), a++});
    return s;
}

}  // namespace

TEST_CASE("first insertions") {
    Engine e(2);
    auto r0 = e.insert(Coord(0));
    CHECK(r0.recolored == 0);
    CHECK(e.coloring().at(0) == 1);

    auto r1 = e.insert(Coord::parse("0.5"));
    CHECK(r1.recolored == 0);
    CHECK(e.coloring().at(1) == 2);
    CHECK(verify_proper(e.intervals(), e.coloring(), 2));
}

TEST_CASE("bridging two paths forces a recoloring") {
    // A-B and C-D are separate paths colored 1,2,1,2; the bridge interval
    // meets both B and C without forming a 3-clique.
    Engine e(2);
    for (const char* x : {"0", "0.9", "2.0", "2.9"}) e.insert(Coord::parse(x));
    CHECK(e.coloring().at(0) == 1);
    CHECK(e.coloring().at(1) == 2);
    CHECK(e.coloring().at(2) == 1);
    CHECK(e.coloring().at(3) == 2);

    std::vector<UnitInterval> all = e.intervals().to_vector();
    all.push_back(UnitInterval{Coord::parse("1.35"), 4});
    REQUIRE(oracle::chromatic_backtracking(all, 2).has_value());

    auto rec = e.insert(Coord::parse("1.35"));
    CHECK(verify_proper(e.intervals(), e.coloring(), 2));
    CHECK(rec.recolored >= 1);
    CHECK(rec.recolored <= static_cast<int>(rec.window_size) - 1);
    // Regression: the chosen window is the right side {bridge, C, D} and the
    // completion flips C and D.
    CHECK(rec.recolored == 2);
}

TEST_CASE("a clique-violating insert is rejected and names the clique") {
    // With begins 0, 0.9, 1.8, 2.7 the bridge at 1.35 would join B and C,
    // which already intersect, into a 3-clique; the oracle agrees that no
    // 2-coloring exists.
    Engine e(2);
    for (const char* x : {"0", "0.9", "1.8", "2.7"}) e.insert(Coord::parse(x));
    std::vector<UnitInterval> all = e.intervals().to_vector();
    all.push_back(UnitInterval{Coord::parse("1.35"), 4});
    REQUIRE_FALSE(oracle::chromatic_backtracking(all, 2).has_value());

    auto before = e.coloring();
    CHECK_THROWS_WITH_AS(e.insert(Coord::parse("1.35")),
                         doctest::Contains("3-clique"), std::invalid_argument);
    CHECK(e.intervals().size() == 4);
    CHECK(e.coloring() == before);
    CHECK(e.stats().insertions == 4);
}

TEST_CASE("find_right at the end of the sequence") {
    auto s = set_of({"0", "0.5"});
    auto r = find_right(s, 2, UnitInterval{Coord::parse("0.5"), 1});
    CHECK(r.reason == ScanReason::disconnect);
    CHECK(r.boundary.arrival == 1);
    CHECK(r.window.size() == 1);
}

TEST_CASE("find_left at the start of the sequence") {
    auto s = set_of({"0", "0.5"});
    auto r = find_left(s, 2, UnitInterval{Coord(0), 0});
    CHECK(r.reason == ScanReason::disconnect);
    CHECK(r.boundary.arrival == 0);
    CHECK(r.window.size() == 1);
}

TEST_CASE("k=1 scans disconnect immediately") {
    std::mt19937_64 rng(17);
    auto v = testing::random_k_colorable(rng, 1, 12, false);
    SequencedSet s;
    for (const auto& iv : v) s.insert(iv);
    for (const auto& iv : v) {
        auto r = find_right(s, 1, iv);
        CHECK(r.reason == ScanReason::disconnect);
        CHECK(r.boundary.arrival == iv.arrival);
        CHECK(r.window.size() == 1);
    }
}

TEST_CASE("find_right hand-simulated slack case, k=3") {
    // 3-clique at the origin, then a single chain stepping by 7/8. Chain
    // windows are never 3-cliques, so after the mixed window {0.1, 0.2, 1.05}
    // moves esp to 1.1, slack grows with the frozen esp until the guard
    // 10 <= floor(b - esp) fails the loop at b = 1.05 + 12*(7/8) = 11.55.
    SequencedSet s;
    std::int64_t a = 0;
    s.insert(UnitInterval{Coord(0), a++});
    s.insert(UnitInterval{Coord(1, 10), a++});
    s.insert(UnitInterval{Coord(2, 10), a++});
    const Coord start(21, 20);  // 1.05
    const int chain_len = 40;
    for (int t = 0; t < chain_len; ++t)
        s.insert(UnitInterval{start + Coord(7, 8) * Coord(t), a++});

    auto r = find_right(s, 3, UnitInterval{Coord(0), 0});
    REQUIRE(r.reason == ScanReason::slack);
    // Guard fails at chain index 12 (window position 15); three more skips
    // land the boundary at chain index 15, window position 18.
    CHECK(r.boundary.arrival == 3 + 15);
    CHECK(r.window.size() == 19);
    CHECK(r.slack_found >= 10);

    // The scan never overstates capacity (conservative against the oracle).
    auto everything = s.to_vector();
    CHECK(r.slack_found <=
          oracle::slack_capacity(everything, r.region_lo, r.region_hi, 3));
}

TEST_CASE("find_left mirrors find_right on reflected instances") {
    std::mt19937_64 rng(4242);
    for (int round = 0; round < 40; ++round) {
        int k = 1 + round % 4;
        auto v = testing::random_k_colorable(rng, k, 10 + round % 30, false);
        // distinct coordinates keep the reflection exact
        SequencedSet fwd, rev;
        bool distinct = true;
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i - 1].x == v[i].x) distinct = false;
        if (!distinct) continue;
        for (const auto& iv : v) fwd.insert(iv);
        for (const auto& iv : v) rev.insert(UnitInterval{-(iv.x + 1), iv.arrival});

        std::uniform_int_distribution<std::size_t> pick(0, v.size() - 1);
        const auto& probe = v[pick(rng)];
        auto l = find_left(fwd, k, probe);
        auto rr = find_right(rev, k, UnitInterval{-(probe.x + 1), probe.arrival});
        CHECK(l.reason == rr.reason);
        CHECK(l.boundary.arrival == rr.boundary.arrival);
        CHECK(l.window.size() == rr.window.size());
        CHECK(l.slack_found == rr.slack_found);
    }
}

TEST_CASE("choose_side prefers the smaller window, ties to the right") {
    ScanResult small, big;
    small.side = 'L';
    small.window.resize(3);
    big.side = 'R';
    big.window.resize(7);
    CHECK(choose_side(small, big).side == 'L');

    big.window.resize(3);
    CHECK(choose_side(small, big).side == 'R');

    small.reason = ScanReason::disconnect;
    small.window.resize(2);
    big.reason = ScanReason::slack;
    big.window.resize(50);
    CHECK(choose_side(small, big).side == 'L');
}

TEST_CASE("recolor leaves intervals outside the window untouched") {
    std::mt19937_64 rng(31337);
    for (int round = 0; round < 30; ++round) {
        int k = 3 + round % 3;
        SessionConfig cfg{k, 1000 + static_cast<std::uint64_t>(round), 120,
                          GeneratorKind::tracks};
        auto events = generate_events(cfg);
        Engine e(k);
        for (std::size_t i = 0; i + 1 < events.size(); ++i) e.insert(events[i]);

        auto before = e.coloring();
        auto snapshot = e.intervals().to_vector();
        auto rec = e.insert(events.back());
        REQUIRE(verify_proper(e.intervals(), e.coloring(), k));
        CHECK(rec.recolored <= static_cast<int>(rec.window_size) - 1);

        int changed = 0;
        for (const auto& iv : snapshot)
            if (before.at(iv.arrival) != e.coloring().at(iv.arrival)) ++changed;
        CHECK(changed == rec.recolored);
        CHECK(changed <= static_cast<int>(rec.window_size) - 1);
    }
}

TEST_CASE("safety across generated sessions, all reasons exercised") {
    std::mt19937_64 rng(5);
    int slack_seen = 0, disconnect_seen = 0;
    for (int round = 0; round < 12; ++round) {
        int k = 1 + round % 6;
        SessionConfig cfg{k, static_cast<std::uint64_t>(round) * 31 + 7, 150,
                          GeneratorKind::tracks};
        auto events = generate_events(cfg);
        Engine e(k);
        for (const auto& x : events) {
            auto rec = e.insert(x);
            (rec.reason == ScanReason::slack ? slack_seen : disconnect_seen)++;
            std::string diag;
            REQUIRE_MESSAGE(verify_proper(e.intervals(), e.coloring(), k, &diag), diag);
        }
    }
    CHECK(disconnect_seen > 0);
    CHECK(slack_seen > 0);  // k >= 3 rounds must hit the slack path
}

TEST_CASE("replaying a multiset in any arrival order stays proper") {
    std::mt19937_64 rng(808);
    SessionConfig cfg{4, 99, 80, GeneratorKind::tracks};
    auto events = generate_events(cfg);
    for (int round = 0; round < 5; ++round) {
        std::shuffle(events.begin(), events.end(), rng);
        Engine e(4);
        for (const auto& x : events) e.insert(x);
        CHECK(verify_proper(e.intervals(), e.coloring(), 4));
    }
}

TEST_CASE("adversarial-order generator stays k-colorable and proper") {
    SessionConfig cfg{3, 12, 200, GeneratorKind::adversarial_order};
    auto events = generate_events(cfg);
    Engine e(3);
    for (const auto& x : events) e.insert(x);
    CHECK(verify_proper(e.intervals(), e.coloring(), 3));
    CHECK(max_clique(e.intervals()) <= 3);
}

TEST_CASE("slack-case recolults validated against the oracle backstop path") {
    // Synthetic short slack window exercises the bounded-search fallback.
    SequencedSet s;
    std::int64_t a = 0;
    for (const char* x : {"0", "0.4", "1.3", "1.7"}) s.insert(UnitInterval{Coord::parse(x), a++});
    Coloring current{{0, 1}, {1, 2}, {2, 1}, {3, 2}};
    ScanResult fake;
    fake.reason = ScanReason::slack;
    fake.side = 'R';
    fake.window = s.to_vector();
    fake.boundary = fake.window.back();
    auto got = recolor_window(s, current, 3, fake);
    for (const auto& iv : fake.window) CHECK(got.count(iv.arrival) == 1);
    CHECK(verify_proper(fake.window, got, 3));
}

TEST_CASE("scans on a mirror-symmetric instance have equal windows") {
    SequencedSet s;
    std::int64_t a = 0;
    // Intervals mirror-symmetric about the center of [0, 1).
    for (const char* x : {"0", "3/5", "-3/5", "7/5", "-7/5", "2", "-2", "16/5", "-16/5"})
        s.insert(UnitInterval{Coord::parse(x), a++});
    const UnitInterval center{Coord(0), 0};
    auto l = find_left(s, 2, center);
    auto r = find_right(s, 2, center);
    CHECK(l.window.size() == r.window.size());
    CHECK(l.reason == r.reason);
}

TEST_CASE("generated streams keep the clique number at k") {
    for (int k : {1, 3, 6}) {
        SessionConfig cfg{k, 2024, 100, GeneratorKind::tracks};
        auto events = generate_events(cfg);
        std::vector<UnitInterval> ivs;
        for (std::size_t i = 0; i < events.size(); ++i)
            ivs.push_back(UnitInterval{events[i], static_cast<std::int64_t>(i)});
        CHECK(max_clique(ivs) <= k);
    }
}

TEST_CASE("duplicate coordinates follow multiset semantics") {
    Engine e(3);
    for (int i = 0; i < 3; ++i) e.insert(Coord(5));
    REQUIRE(verify_proper(e.intervals(), e.coloring(), 3));
    std::set<int> used{e.coloring().at(0), e.coloring().at(1), e.coloring().at(2)};
    CHECK(used.size() == 3);  // three copies force three colors
    CHECK_THROWS_AS(e.insert(Coord(5)), std::invalid_argument);
    CHECK(e.intervals().size() == 3);
}

TEST_CASE("clustered workloads with large k stay proper through long windows") {
    for (int k : {5, 6}) {
        SessionConfig cfg{k, static_cast<std::uint64_t>(k) * 77, 400, GeneratorKind::clustered};
        auto events = generate_events(cfg);
        Engine e(k);
        std::size_t max_window = 0;
        for (const auto& x : events) {
            auto rec = e.insert(x);
            max_window = std::max(max_window, rec.window_size);
        }
        std::string diag;
        REQUIRE_MESSAGE(verify_proper(e.intervals(), e.coloring(), k, &diag), diag);
        CHECK(max_window >= 2);
    }
}

TEST_CASE("duplicate-heavy random sessions stay proper in any arrival order") {
    std::mt19937_64 rng(616);
    for (int round = 0; round < 10; ++round) {
        int k = 2 + round % 4;
        auto set = testing::random_k_colorable(rng, k, 60);
        std::vector<Coord> events;
        for (const auto& iv : set) events.push_back(iv.x);
        std::shuffle(events.begin(), events.end(), rng);
        Engine e(k);
        for (const auto& x : events) e.insert(x);
        std::string diag;
        REQUIRE_MESSAGE(verify_proper(e.intervals(), e.coloring(), k, &diag), diag);
    }
}

TEST_CASE("the insert rejection boundary matches oracle feasibility exactly") {
    std::mt19937_64 rng(717);
    for (int round = 0; round < 40; ++round) {
        int k = 1 + round % 3;
        Engine e(k);
        std::vector<UnitInterval> held;
        for (int step = 0; step < 12; ++step) {
            Coord x = testing::random_coord(rng, 4);  // dense region, collisions likely
            std::vector<UnitInterval> trial = held;
            trial.push_back(UnitInterval{x, static_cast<std::int64_t>(held.size())});
            bool feasible = oracle::chromatic_backtracking(trial, k).has_value();
            bool accepted = true;
            try {
                e.insert(x);
            } catch (const std::invalid_argument&) {
                accepted = false;
            }
            CHECK(accepted == feasible);
            if (accepted) {
                held = trial;
                REQUIRE(verify_proper(e.intervals(), e.coloring(), k));
            }
        }
    }
}
