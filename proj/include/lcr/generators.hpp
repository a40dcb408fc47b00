#pragma once

#include "lcr/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace lcr {

enum class Family { Random, Cograph, Split, Reduction };
std::optional<Family> parse_family(const std::string& name);

/// Reachable: the target is a random walk away from the initial coloring.
/// Independent: both colorings are drawn separately, so the pair may be unreachable.
enum class PairMode { Reachable, Independent };
std::optional<PairMode> parse_pair_mode(const std::string& name);

struct GeneratorConfig {
    Family family = Family::Random;
    int n = 6;
    int k = 3;
    std::uint64_t seed = 1;
    PairMode mode = PairMode::Reachable;
    int max_weight = 1;
    double edge_probability = 0.4;
    /// Number of false-twin copies (same neighborhood and assignment) appended afterwards.
    int twins = 0;
    /// Independent-set target size for the reduction family.
    int reduction_s = 2;
};

/// Deterministic in the configuration. Graphs are connected; throws InvalidInput when
/// no proper list coloring pair can be drawn (for example k smaller than a forced clique).
Instance generate_instance(const GeneratorConfig& config);

/// Renames colors so that the used ones come first in sorted order, matching the parser.
Instance canonicalize_colors(const Instance& instance);

}  // namespace lcr
