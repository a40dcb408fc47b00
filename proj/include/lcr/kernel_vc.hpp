#pragma once

#include "lcr/graph.hpp"
#include "lcr/kernel_mw.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace lcr {

/// Vertex subset touching every edge, ascending.
using VertexCover = VertexSet;

bool is_vertex_cover(const Graph& graph, const VertexSet& cover);

/// A cover of size at most `bound` found by branching on uncovered edges, or nullopt.
std::optional<VertexCover> min_vertex_cover(const Graph& graph, int bound);

/// Clique/independent-set partition when the graph is split (degree-sequence test). A clique
/// vertex with no neighbor on the independent side is placed on that side.
struct SplitPartition {
    VertexSet clique;
    VertexSet independent;
};
std::optional<SplitPartition> split_partition(const Graph& graph);

/// Cover used by the vertex-cover kernel when none is supplied: the clique side of a
/// split graph, else the smallest cover up to `search_limit`, else a matching-based cover.
VertexCover choose_vertex_cover(const Graph& graph, int search_limit = 16);

struct MergeRecord {
    Vertex into;
    Vertex absorbed;
    std::int64_t weight;  // weight of `absorbed` before the merge
};
using MergeLog = std::vector<MergeRecord>;

struct VcKernel {
    Instance instance;
    VertexSet kept;
    MergeLog log;
    /// Cover in kernel vertex indices.
    VertexCover cover;
};

/// Merges independent-set vertices with equal neighborhoods and assignments into the
/// smallest-label member of their class, summing weights.
VcKernel kernelize_vc(const Instance& instance, const VertexCover& cover);

/// 2^tau * 2^k * k^2; throws std::overflow_error when it does not fit in 63 bits.
std::uint64_t vc_kernel_bound(int tau, int k);

/// The replay form of a merge log, for lifting sequences.
ReplayLog as_replay_log(const MergeLog& log);

}  // namespace lcr
