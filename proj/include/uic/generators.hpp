#ifndef UIC_GENERATORS_HPP
#define UIC_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "uic/coord.hpp"

namespace uic {

enum class GeneratorKind { tracks, clustered, adversarial_order };

GeneratorKind parse_generator(const std::string& name);
std::string generator_name(GeneratorKind kind);

struct SessionConfig {
    int k = 1;
    std::uint64_t seed = 0;
    std::size_t n = 0;
    GeneratorKind generator = GeneratorKind::tracks;
};

// Insertion coordinates in arrival order. Every stream is k-colorable by
// construction: the intervals split into k chains that are each pairwise
// disjoint. Deterministic per (config, version).
std::vector<Coord> generate_events(const SessionConfig& config);

}  // namespace uic

#endif
