#pragma once

#include "lcr/graph.hpp"
#include "lcr/modular_decomposition.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lcr {

/// Removal of an identical copy H2 of H1. `image[i]` is phi(source[i]).
struct ReductionRecord {
    VertexSet source;
    VertexSet image;
    bool weight_merge = false;
};

/// Ordered reduction steps over the vertex indices of the original instance.
using ReplayLog = std::vector<ReductionRecord>;

/// True iff H1 and H2 are identical under phi: isomorphic, same outside
/// neighborhoods and same vertex assignments. `phi[i]` is the image of h1[i].
/// Throws InvalidInput if phi is not a bijection h1 -> h2 or the sets overlap.
bool identical_check(const Instance& instance, const VertexSet& h1, const VertexSet& h2,
                     const VertexSet& phi);

/// (m+1) x m signature of a tree node: padded adjacency of G(x) with vertices in
/// label order, followed by a row of vertex assignments.
struct IdMatrix {
    int width = 0;
    std::vector<std::uint8_t> adjacency;
    std::vector<std::optional<VertexAssignment>> assignments;

    std::uint8_t at(int row, int col) const { return adjacency[row * width + col]; }

    /// Canonical byte form; equal iff the matrices are equal.
    std::string serialize() const;

    friend bool operator==(const IdMatrix&, const IdMatrix&) = default;
};

/// Vertices of `vertices` sorted into the label order.
VertexSet in_label_order(const Graph& graph, VertexSet vertices);

IdMatrix id_matrix(const Instance& instance, const VertexSet& node_vertices, int width);
IdMatrix id_matrix(const Instance& instance, const SubstitutionTree& tree, int node, int width);

struct MwKernel {
    Instance instance;
    /// kept[i] is the original index of kernel vertex i.
    VertexSet kept;
    ReplayLog log;
    int pseudo_modular_width = 2;
};

/// Removes identical children of parallel nodes of the PMD-tree in post-order
/// until no two siblings share an ID-matrix. Requires a connected graph.
MwKernel kernelize_mw(const Instance& instance);

/// Applies kernelize_mw to each connected component separately.
MwKernel kernelize_mw_components(const Instance& instance);

/// log2 of the kernel-size bound g(i) for color count k and pseudo modular-width bound W.
double kernel_bound_log2(int i, int k, int width_bound);
double kernel_bound(int i, int k, int width_bound);

}  // namespace lcr
