#pragma once

#include "lcr/graph.hpp"
#include "lcr/kernel_mw.hpp"
#include "lcr/kernel_vc.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace lcr {

/// f_0 .. f_l, consecutive colorings differing at exactly one vertex.
struct ReconfigurationSequence {
    std::vector<Coloring> colorings;

    std::size_t steps() const { return colorings.empty() ? 0 : colorings.size() - 1; }
    friend bool operator==(const ReconfigurationSequence&, const ReconfigurationSequence&) = default;
};

enum class Verdict { Yes, No, TooLarge };
const char* to_string(Verdict verdict);

inline constexpr std::int64_t kInfiniteLength = std::numeric_limits<std::int64_t>::max();

struct SolveStats {
    std::uint64_t states_explored = 0;
    int vertices_before = 0;
    int vertices_after = 0;
    int components = 0;
    double seconds = 0.0;
};

struct SolveReport {
    Verdict verdict = Verdict::No;
    std::optional<ReconfigurationSequence> sequence;
    /// Set by shortest-length queries; kInfiniteLength when unreachable.
    std::optional<std::int64_t> length;
    SolveStats stats;
};

struct SolveOptions {
    std::uint64_t state_cap = 10'000'000;
    /// OpenMP threads for frontier expansion; 0 keeps the runtime default.
    int threads = 0;
};

/// Default cap, overridden by the LCR_STATE_CAP environment variable when set.
std::uint64_t default_state_cap();

bool validate_sequence(const Instance& instance, const ReconfigurationSequence& sequence);

/// Sum of the weights of the recolored vertices.
std::int64_t weighted_length(const Instance& instance, const ReconfigurationSequence& sequence);

/// Level-synchronous breadth-first search over proper list colorings with the frontier
/// expanded in parallel. The returned sequence is a shortest unweighted one and does
/// not depend on the thread count.
SolveReport brute_force_reachable(const Instance& instance, const SolveOptions& options = {});

/// Single-threaded FIFO breadth-first search. Reference for brute_force_reachable.
/// `visit` is called on every discovered coloring.
SolveReport brute_force_reachable_serial(
    const Instance& instance, const SolveOptions& options = {},
    const std::function<void(const Coloring&)>& visit = nullptr);

/// Dijkstra over the coloring graph where recoloring v costs w(v).
SolveReport shortest_weighted(const Instance& instance, const SolveOptions& options = {});

/// Exact reachability by search over colorings of a vertex cover only. Vertices outside
/// the cover move freely among the colors their neighbors leave available, so a cover
/// coloring stands for every compatible coloring of the rest.
SolveReport cover_reachable(const Instance& instance, const VertexCover& cover,
                            const SolveOptions& options = {});

/// Replays reductions backwards: copies colors onto removed vertices and splits each
/// recoloring of a source vertex into two steps (source first, then its image).
/// `kernel_sequence` is over kernel indices; kept[i] is the original index of kernel vertex i.
ReconfigurationSequence lift_sequence(const ReconfigurationSequence& kernel_sequence,
                                      const VertexSet& kept, int original_size,
                                      const ReplayLog& log);

enum class Strategy { Auto, Brute, KernelMw, KernelVc, Cover };
enum class Objective { Reachability, Shortest };

const char* to_string(Strategy strategy);
std::optional<Strategy> parse_strategy(const std::string& name);

/// Splits into connected components (except for Brute), solves each and combines:
/// verdicts by conjunction, lengths by sum. Sequences refer to the input instance.
SolveReport solve(const Instance& instance, Strategy strategy,
                  Objective objective = Objective::Reachability, const SolveOptions& options = {});

}  // namespace lcr
