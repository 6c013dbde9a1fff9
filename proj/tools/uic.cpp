#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "uic/adversary.hpp"
#include "uic/circular.hpp"
#include "uic/core.hpp"
#include "uic/frogs.hpp"
#include "uic/generators.hpp"
#include "uic/incremental.hpp"
#include "uic/oracle.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitInput = 2;

std::vector<uic::Coord> read_events(std::istream& in) {
    std::vector<uic::Coord> events;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            json j = json::parse(line);
            if (j.value("op", "") != "insert") throw std::invalid_argument("unsupported op");
            events.push_back(uic::Coord::parse(j.at("x").get<std::string>()));
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception& e) {
            std::ostringstream os;
            os << "line " << lineno << ": " << e.what();
            throw std::invalid_argument(os.str());
        }
    }
    return events;
}

std::vector<uic::Coord> read_events_path(const std::string& path) {
    if (path.empty() || path == "-") return read_events(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input '" + path + "'");
    return read_events(in);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output '" + path + "'");
    return out;
}

const char* reason_name(uic::ScanReason r) {
    return r == uic::ScanReason::slack ? "slack" : "disconnect";
}

int cmd_gen(int k, std::uint64_t seed, std::size_t n, const std::string& generator,
            const std::string& out_path) {
    uic::SessionConfig config{k, seed, n, uic::parse_generator(generator)};
    auto events = uic::generate_events(config);
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file = open_out(out_path);
        out = &file;
    }
    for (const auto& x : events) {
        json j{{"op", "insert"}, {"x", x.str()}};
        *out << j.dump() << "\n";
    }
    return kExitOk;
}

int cmd_run(int k, const std::string& in_path, const std::string& out_path,
            const std::string& csv_path, const std::string& dump_path) {
    auto events = read_events_path(in_path);
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file = open_out(out_path);
        out = &file;
    }

    uic::Engine engine(k);
    std::size_t max_window = 0;
    for (std::size_t i = 0; i < events.size(); ++i) {
        uic::UpdateRecord rec;
        try {
            rec = engine.insert(events[i]);
        } catch (const std::invalid_argument& e) {
            std::cerr << "abort at event " << i << ": " << e.what() << "\n";
            return kExitInput;
        }
        max_window = std::max(max_window, rec.window_size);
        json j{{"j", rec.step},
               {"recolored", rec.recolored},
               {"window", rec.window_size},
               {"side", std::string(1, rec.side)},
               {"reason", reason_name(rec.reason)}};
        *out << j.dump() << "\n";
    }

    const auto n = engine.stats().insertions;
    const double budget =
        std::pow(static_cast<double>(k), 7) * static_cast<double>(n) * std::log2(static_cast<double>(n) + 2.0);
    const bool bound_ok = n == 0 || static_cast<double>(engine.stats().total) <= budget;
    json summary{{"n", n},
                 {"total_recolored", engine.stats().total},
                 {"max_window", max_window},
                 {"bound_check", bound_ok}};
    *out << summary.dump() << "\n";
    if (!csv_path.empty()) {
        auto csv = open_out(csv_path);
        csv << "n,total_recolored,max_window,bound,bound_check\n";
        csv << n << "," << engine.stats().total << "," << max_window << "," << budget << ","
            << (bound_ok ? 1 : 0) << "\n";
    }
    if (!dump_path.empty()) {
        auto dump = open_out(dump_path);
        for (const auto& iv : engine.intervals()) {
            json j{{"x", iv.x.str()},
                   {"arrival", iv.arrival},
                   {"color", engine.coloring().at(iv.arrival)}};
            dump << j.dump() << "\n";
        }
    }
    return bound_ok ? kExitOk : kExitInvariant;
}

int cmd_verify(int k, const std::string& in_path, bool with_oracle, std::int64_t corrupt_at) {
    auto events = read_events_path(in_path);
    uic::Engine engine(k);
    uic::Coloring shadow;  // engine coloring plus injected corruption

    for (std::size_t i = 0; i < events.size(); ++i) {
        try {
            engine.insert(events[i]);
        } catch (const std::invalid_argument& e) {
            std::cerr << "input error at event " << i << ": " << e.what() << "\n";
            return kExitInput;
        }
        shadow = engine.coloring();
        if (corrupt_at >= 0 && static_cast<std::size_t>(corrupt_at) == i) {
            // Copy an intersecting neighbor's color; an isolated interval
            // gets an out-of-range color instead. Either way the shadow
            // coloring is broken and verification must notice.
            const std::int64_t victim = static_cast<std::int64_t>(i);
            auto it = engine.intervals().find(uic::UnitInterval{events[i], victim});
            int bad = k + 1;
            if (it != engine.intervals().begin()) {
                auto prev = std::prev(it);
                if (uic::intersects(*prev, *it)) bad = shadow.at(prev->arrival);
            }
            if (bad == k + 1 && std::next(it) != engine.intervals().end()) {
                auto nxt = std::next(it);
                if (uic::intersects(*it, *nxt)) bad = shadow.at(nxt->arrival);
            }
            shadow[victim] = bad;
        }
        std::string diag;
        if (!uic::verify_proper(engine.intervals(), shadow, k, &diag)) {
            std::cerr << "invariant violation after event " << i << ": " << diag << "\n";
            return kExitInvariant;
        }
        if (with_oracle) {
            // Independent desk check: around the new interval, sweep clique
            // number and backtracking feasibility must agree.
            const uic::UnitInterval probe{events[i], static_cast<std::int64_t>(i)};
            auto it = engine.intervals().find(probe);
            std::vector<uic::UnitInterval> hood;
            auto lo = it;
            for (int b = 0; b < 8 && lo != engine.intervals().begin(); ++b) --lo;
            auto hi = it;
            for (int b = 0; b < 8 && std::next(hi) != engine.intervals().end(); ++b) ++hi;
            hood = engine.intervals().slice(lo, hi);
            int omega = uic::max_clique(hood);
            bool feasible_at_omega = uic::oracle::chromatic_backtracking(hood, omega).has_value();
            bool infeasible_below =
                omega <= 1 || !uic::oracle::chromatic_backtracking(hood, omega - 1).has_value();
            if (!feasible_at_omega || !infeasible_below) {
                std::cerr << "oracle mismatch after event " << i << "\n";
                return kExitInvariant;
            }
        }
    }
    std::cout << "ok: " << events.size() << " events verified\n";
    return kExitOk;
}

int cmd_frogs(std::size_t n, int kappa, long long delta, const std::string& strategy,
              std::uint64_t seed, const std::string& out_path) {
    uic::frogs::JumpStrategy strat;
    if (strategy == "random")
        strat = uic::frogs::JumpStrategy::random;
    else if (strategy == "greedy")
        strat = uic::frogs::JumpStrategy::greedy;
    else if (strategy == "balanced")
        strat = uic::frogs::JumpStrategy::balanced;
    else
        throw std::invalid_argument("unknown strategy '" + strategy + "'");

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file = open_out(out_path);
        out = &file;
    }

    std::mt19937_64 rng(seed);
    auto state = uic::frogs::FrogsState::initial(n, kappa, delta);
    *out << "tau,pos,cost,phi_delta\n";
    bool potential_ok = true;
    while (state.ranks.size() > 1) {
        auto before = state;
        std::size_t pos = uic::frogs::pick_jump(state, strat, rng);
        long long cost = uic::frogs::jump(state, pos);
        double dphi = uic::frogs::potential(state.ranks, kappa, delta) -
                      uic::frogs::potential(before.ranks, kappa, delta);
        potential_ok = potential_ok && uic::frogs::check_potential_step(before, state, cost);
        *out << before.tau << "," << pos << "," << cost << "," << dphi << "\n";
    }
    const double limit = uic::frogs::bound(n, kappa, delta);
    *out << "total," << state.total_cost << ",bound," << limit << ",potential_ok,"
         << (potential_ok ? 1 : 0) << "\n";
    if (!potential_ok || static_cast<double>(state.total_cost) > limit) return kExitInvariant;
    return kExitOk;
}

int cmd_arcs(const std::string& in_path, const std::string& out_path) {
    uic::circular::ArcInstance inst;
    try {
        json input;
        if (in_path.empty() || in_path == "-") {
            std::cin >> input;
        } else {
            std::ifstream in(in_path);
            if (!in) throw std::invalid_argument("cannot open input '" + in_path + "'");
            in >> input;
        }
        uic::Coord lambda = uic::Coord::parse(input.at("lambda").get<std::string>());
        std::vector<uic::Coord> begins;
        for (const auto& a : input.at("arcs"))
            begins.push_back(uic::Coord::parse(a.get<std::string>()));
        inst = uic::circular::ArcInstance::make(lambda, std::move(begins));
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("bad arcs instance: ") + e.what());
    }

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file = open_out(out_path);
        out = &file;
    }

    auto colors = uic::circular::color_arcs(inst);
    if (!colors) {
        *out << json{{"error", "insufficient slack"}}.dump() << "\n";
        return kExitInvariant;
    }
    json arr = json::array();
    for (std::size_t i = 0; i < inst.arcs.size(); ++i) arr.push_back(colors->at(static_cast<std::int64_t>(i)));
    json result{{"load", uic::circular::max_load(inst).max_load}, {"colors", arr}};
    *out << result.dump() << "\n";
    return kExitOk;
}

int cmd_adversary(int n, int probes, const std::string& target, const std::string& out_path) {
    if (target != "naive") throw std::invalid_argument("unknown target '" + target + "'");
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file = open_out(out_path);
        out = &file;
    }
    auto colorer = uic::adversary::naive_colorer(2);
    auto gadget = uic::adversary::build_gadget(n);
    auto installed = uic::adversary::install_gadget(*colorer, gadget);
    *out << "probe,forced_recolorings\n";
    for (int p = 0; p < probes; ++p) {
        int forced = uic::adversary::probe(*colorer, installed);
        *out << p << "," << forced << "\n";
        if (forced < 2 * n) {
            std::cerr << "probe " << p << " forced only " << forced << " < " << 2 * n
                      << " recolorings\n";
            return kExitInvariant;
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"unit-interval recoloring toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // --k/--seed/--out may follow the subcommand

    int k = 2;
    std::uint64_t seed = 0;
    std::string out_path;
    app.add_option("--k", k, "number of colors")->capture_default_str();
    app.add_option("--seed", seed, "rng seed")->capture_default_str();
    app.add_option("--out", out_path, "output path (default stdout)");

    auto* gen = app.add_subcommand("gen", "generate a k-colorable insertion stream");
    std::size_t gen_n = 100;
    std::string gen_kind = "tracks";
    gen->add_option("--n", gen_n, "number of insertions")->capture_default_str();
    gen->add_option("--generator", gen_kind, "tracks|clustered|adversarial-order")
        ->capture_default_str();

    auto* run = app.add_subcommand("run", "replay a stream through the engine");
    std::string run_in, run_csv, run_dump;
    run->add_option("--in", run_in, "event stream path (default stdin)");
    run->add_option("--csv", run_csv, "write a one-row CSV summary here");
    run->add_option("--dump", run_dump, "write the final colored intervals here (JSONL)");

    auto* verify = app.add_subcommand("verify", "replay and check every invariant");
    std::string verify_in;
    bool with_oracle = false;
    std::int64_t corrupt_at = -1;
    verify->add_option("--in", verify_in, "event stream path (default stdin)");
    verify->add_flag("--oracle", with_oracle, "cross-check windows against the brute-force oracle");
    verify->add_option("--corrupt-at", corrupt_at,
                       "testing aid: corrupt the coloring after this event index");

    auto* frogs = app.add_subcommand("frogs", "simulate the merge game");
    std::size_t frogs_n = 64;
    int kappa = 1;
    long long delta = 1;
    std::string strategy = "random";
    frogs->add_option("--n", frogs_n, "initial sequence length")->capture_default_str();
    frogs->add_option("--kappa", kappa, "cost window width parameter")->capture_default_str();
    frogs->add_option("--delta", delta, "initial rank value")->capture_default_str();
    frogs->add_option("--strategy", strategy, "random|greedy|balanced")->capture_default_str();

    auto* arcs = app.add_subcommand("arcs", "color unit circular arcs with exactly max-load colors");
    std::string arcs_in;
    arcs->add_option("--in", arcs_in, "instance JSON path (default stdin)");

    auto* adversary = app.add_subcommand("adversary", "run the fully-dynamic lower-bound gadget");
    int adv_n = 10;
    int adv_probes = 10;
    std::string adv_target = "naive";
    adversary->add_option("--n", adv_n, "chain length of the gadget")->capture_default_str();
    adversary->add_option("--probes", adv_probes, "number of probes")->capture_default_str();
    adversary->add_option("--target", adv_target, "colorer under attack")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(k, seed, gen_n, gen_kind, out_path);
        if (run->parsed()) return cmd_run(k, run_in, out_path, run_csv, run_dump);
        if (verify->parsed()) return cmd_verify(k, verify_in, with_oracle, corrupt_at);
        if (frogs->parsed()) return cmd_frogs(frogs_n, kappa, delta, strategy, seed, out_path);
        if (arcs->parsed()) return cmd_arcs(arcs_in, out_path);
        if (adversary->parsed()) return cmd_adversary(adv_n, adv_probes, adv_target, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    }
    return kExitInput;
}
