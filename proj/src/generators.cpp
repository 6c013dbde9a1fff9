#include "uic/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace uic {

GeneratorKind parse_generator(const std::string& name) {
    if (name == "tracks") return GeneratorKind::tracks;
    if (name == "clustered") return GeneratorKind::clustered;
    if (name == "adversarial-order") return GeneratorKind::adversarial_order;
    throw std::invalid_argument("unknown generator '" + name + "'");
}

std::string generator_name(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::tracks: return "tracks";
        case GeneratorKind::clustered: return "clustered";
        case GeneratorKind::adversarial_order: return "adversarial-order";
    }
    return "?";
}

namespace {

// Layout machine shared by all generators. Intervals are emitted left to
// right, assigned to k tracks; a track never holds two intervals less than
// one unit apart, so the stream stays k-colorable by construction.
struct Layout {
    int k;
    std::mt19937_64 rng;
    Coord cursor{0};
    std::vector<Coord> track_last;  // last begin per track, cursor-relative sentinel
    std::vector<Coord> out;

    Layout(int k_, std::uint64_t seed) : k(k_), rng(seed) {
        track_last.assign(static_cast<std::size_t>(k), Coord(-1000000));
    }

    bool track_free(int t, const Coord& x) const {
        return x - track_last[static_cast<std::size_t>(t)] >= 1;
    }

    void emit(int t, const Coord& x) {
        track_last[static_cast<std::size_t>(t)] = x;
        out.push_back(x);
    }

    // Full column: one interval per track, staggered by 1/(2k).
    void column(std::size_t want) {
        const Coord s(1, 2 * static_cast<long long>(k));
        for (int t = 0; t < k && out.size() < want; ++t) {
            Coord x = cursor + s * Coord(t);
            if (!track_free(t, x)) continue;
            emit(t, x);
        }
    }

    int pick(int lo, int hi) {  // inclusive
        std::uniform_int_distribution<int> d(lo, hi);
        return d(rng);
    }
};

// Dense clique columns separated by steps of ~1, with occasional two-track
// bridges and hard breaks. Bridges carry load below k, so the right scans
// collect slack across them once k >= 3.
std::vector<Coord> layout_stream(const SessionConfig& config, bool clustered) {
    Layout lay(config.k, config.seed * 0x9e3779b97f4a7c15ULL + 1);
    const std::size_t n = config.n;
    const int k = config.k;

    while (lay.out.size() < n) {
        int mode = lay.pick(0, 9);
        if (k >= 2 && ((clustered && mode == 9) || (!clustered && mode >= 7))) {
            // Bridge: alternate two tracks at steps of 7/8.
            int len = lay.pick(2, clustered ? 6 : 2 * k * k + 4);
            for (int i = 0; i < len && lay.out.size() < n; ++i) {
                int t = i % 2;
                if (!lay.track_free(t, lay.cursor)) break;
                lay.emit(t, lay.cursor);
                lay.cursor += Coord(7, 8);
            }
            lay.cursor += Coord(1, 8);  // realign before the next column
        } else if (!clustered && mode == 6) {
            // Hard break: the run disconnects here.
            lay.column(n);
            lay.cursor += Coord(lay.pick(2, 4));
        } else {
            // Dense run of full columns.
            int len = lay.pick(clustered ? 8 : 2, clustered ? 40 : 12);
            for (int i = 0; i < len && lay.out.size() < n; ++i) {
                lay.column(n);
                lay.cursor += (lay.pick(0, 1) == 0) ? Coord(1) : Coord(9, 8);
            }
        }
    }
    lay.out.resize(n);
    return lay.out;
}

}  // namespace

std::vector<Coord> generate_events(const SessionConfig& config) {
    if (config.k < 1) throw std::invalid_argument("generate_events: k must be >= 1");
    std::vector<Coord> coords = layout_stream(config, config.generator == GeneratorKind::clustered);

    std::mt19937_64 order_rng(config.seed * 0xda942042e4dd58b5ULL + 7);
    std::vector<std::size_t> order(coords.size());
    std::iota(order.begin(), order.end(), 0);

    if (config.generator == GeneratorKind::adversarial_order) {
        // Bit-reversed rank order: far-apart intervals first, then the
        // bridging midpoints, so components keep merging late.
        std::size_t bits = 0;
        while ((std::size_t{1} << bits) < coords.size()) ++bits;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            std::size_t ra = 0, rb = 0;
            for (std::size_t i = 0; i < bits; ++i) {
                ra = (ra << 1) | ((a >> i) & 1);
                rb = (rb << 1) | ((b >> i) & 1);
            }
            return ra < rb;
        });
    } else {
        std::shuffle(order.begin(), order.end(), order_rng);
    }

    std::vector<Coord> events;
    events.reserve(coords.size());
    for (std::size_t idx : order) events.push_back(coords[idx]);
    return events;
}

}  // namespace uic
