#include "uic/frogs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace uic::frogs {

namespace {

double entropy_term(long long x) {
    if (x <= 0) return 0.0;
    double v = static_cast<double>(x);
    return v * std::log2(v);
}

// Rank at 1-based virtual index i; positions outside the sequence read delta.
long long rank_at(const std::vector<long long>& ranks, long long i, long long delta) {
    if (i < 1 || i > static_cast<long long>(ranks.size())) return delta;
    return ranks[static_cast<std::size_t>(i - 1)];
}

long long jump_cost(const FrogsState& s, std::size_t pos) {
    const long long p = static_cast<long long>(pos);
    long long left = 0, right = 0;
    for (long long i = p - s.kappa + 1; i <= p; ++i) left += rank_at(s.ranks, i, s.delta);
    for (long long i = p + 1; i <= p + s.kappa; ++i) right += rank_at(s.ranks, i, s.delta);
    return std::min(left, right);
}

}  // namespace

FrogsState FrogsState::initial(std::size_t n, int kappa, long long delta) {
    if (n < 1) throw std::invalid_argument("frogs: n must be >= 1");
    if (kappa < 1 || static_cast<std::size_t>(kappa) > n)
        throw std::invalid_argument("frogs: kappa must satisfy 1 <= kappa <= n");
    if (delta < 0) throw std::invalid_argument("frogs: delta must be >= 0");
    FrogsState s;
    s.ranks.assign(n, delta);
    s.kappa = kappa;
    s.delta = delta;
    s.initial_n = n;
    return s;
}

long long jump(FrogsState& state, std::size_t pos) {
    if (pos < 1 || pos >= state.ranks.size())
        throw std::invalid_argument("frogs: jump position out of range");
    long long cost = jump_cost(state, pos);
    state.ranks[pos - 1] += state.ranks[pos];
    state.ranks.erase(state.ranks.begin() + static_cast<std::ptrdiff_t>(pos));
    state.total_cost += cost;
    ++state.tau;
    return cost;
}

double bound(std::size_t n, int kappa, long long delta) {
    const double w = 2.0 * kappa - 1.0;
    const double m = static_cast<double>(n) + 2.0 * kappa - 2.0;
    return static_cast<double>(delta) * w * m * std::log2(m / w);
}

double potential(const std::vector<long long>& ranks, int kappa, long long delta) {
    const long long len = static_cast<long long>(ranks.size());
    const long long width = 2LL * kappa - 1;
    // First window starts at -2k+3 and the last at len; maintain the window
    // sum incrementally.
    long long lo = -2LL * kappa + 3;
    long long sum = 0;
    for (long long i = lo; i < lo + width; ++i) sum += rank_at(ranks, i, delta);
    double phi = entropy_term(sum);
    for (long long j = lo + 1; j <= len; ++j) {
        sum -= rank_at(ranks, j - 1, delta);
        sum += rank_at(ranks, j + width - 1, delta);
        phi += entropy_term(sum);
    }
    return phi;
}

bool check_potential_step(const FrogsState& before, const FrogsState& after, long long cost) {
    if (after.ranks.size() + 1 != before.ranks.size())
        throw std::invalid_argument("frogs: states are not one jump apart");
    double pb = potential(before.ranks, before.kappa, before.delta);
    double pa = potential(after.ranks, after.kappa, after.delta);
    double eps = 1e-6 * std::max({1.0, std::fabs(pa), std::fabs(pb)});
    return static_cast<double>(cost) <= pa - pb + eps;
}

std::size_t pick_jump(const FrogsState& state, JumpStrategy strategy, std::mt19937_64& rng) {
    const std::size_t moves = state.ranks.size() - 1;
    if (moves == 0) throw std::invalid_argument("frogs: no jump available");
    switch (strategy) {
        case JumpStrategy::random: {
            std::uniform_int_distribution<std::size_t> d(1, moves);
            return d(rng);
        }
        case JumpStrategy::greedy: {
            std::size_t best = 1;
            long long best_cost = jump_cost(state, 1);
            for (std::size_t p = 2; p <= moves; ++p) {
                long long c = jump_cost(state, p);
                if (c > best_cost) {
                    best_cost = c;
                    best = p;
                }
            }
            return best;
        }
        case JumpStrategy::balanced: {
            std::size_t best = 1;
            long long best_sum = state.ranks[0] + state.ranks[1];
            for (std::size_t p = 2; p <= moves; ++p) {
                long long s = state.ranks[p - 1] + state.ranks[p];
                if (s < best_sum) {
                    best_sum = s;
                    best = p;
                }
            }
            return best;
        }
    }
    throw std::logic_error("frogs: unknown strategy");
}

}  // namespace uic::frogs
