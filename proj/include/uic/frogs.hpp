#ifndef UIC_FROGS_HPP
#define UIC_FROGS_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace uic::frogs {

// Merge game on a rank sequence. A jump at position p replaces ranks p and
// p+1 by their sum and costs the cheaper of the two adjacent kappa-window
// sums, with out-of-range ranks read as delta.
struct FrogsState {
    std::vector<long long> ranks;
    int kappa = 1;
    long long delta = 0;
    std::int64_t tau = 1;  // current turn, 1-based
    long long total_cost = 0;
    std::size_t initial_n = 0;

    static FrogsState initial(std::size_t n, int kappa, long long delta);
};

// Applies a jump at 1-based position pos; returns its cost.
long long jump(FrogsState& state, std::size_t pos);

// Closed-form cost bound: delta*(2k-1)*(n+2k-2)*log2((n+2k-2)/(2k-1)).
double bound(std::size_t n, int kappa, long long delta);

// Potential of a rank sequence: sum of H(window sum) over all (2k-1)-windows
// that touch the sequence, H(x) = x*log2(x), out-of-range ranks read as delta.
double potential(const std::vector<long long>& ranks, int kappa, long long delta);

// cost <= potential(after) - potential(before), up to 1e-6 relative slack.
bool check_potential_step(const FrogsState& before, const FrogsState& after, long long cost);

enum class JumpStrategy { random, greedy, balanced };

// Picks the next jump position: uniformly at random, the costliest jump, or
// the jump merging the two smallest neighbors.
std::size_t pick_jump(const FrogsState& state, JumpStrategy strategy, std::mt19937_64& rng);

}  // namespace uic::frogs

#endif
