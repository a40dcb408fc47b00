#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lcr {

/// Thrown when a graph or instance violates a structural invariant.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Vertex = int;
using Color = int;
using VertexSet = std::vector<Vertex>;
using Coloring = std::vector<Color>;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph over vertices 0..n-1, each carrying a unique external label.
/// The vertex total order used by canonical constructions is ascending label order.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(std::vector<std::string> labels, const std::vector<Edge>& edges);

    int size() const { return static_cast<int>(labels_.size()); }
    std::size_t edge_count() const { return edge_count_; }
    const std::string& label(Vertex v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Sorted neighbor list.
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
    bool has_edge(Vertex u, Vertex v) const;
    std::vector<Edge> edges() const;

    /// Index of the vertex with the given label, or -1.
    Vertex find(const std::string& label) const;

    /// True iff label(u) precedes label(v) in the vertex order.
    bool precedes(Vertex u, Vertex v) const { return labels_[u] < labels_[v]; }

    /// Induced subgraph; vertex i of the result is subset[i].
    Graph induced(const VertexSet& subset) const;

    std::vector<VertexSet> connected_components() const;
    bool is_connected() const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Colors are dense indices 0..k-1; names give the external string of each color.
struct ColorSet {
    std::vector<std::string> names;

    int size() const { return static_cast<int>(names.size()); }
    Color find(const std::string& name) const;
    friend bool operator==(const ColorSet&, const ColorSet&) = default;
};

/// A vertex's list together with its initial and target colors.
struct VertexAssignment {
    std::vector<Color> list;
    Color initial = 0;
    Color target = 0;

    friend bool operator==(const VertexAssignment&, const VertexAssignment&) = default;
    friend auto operator<=>(const VertexAssignment&, const VertexAssignment&) = default;
};

using ListAssignment = std::vector<std::vector<Color>>;

/// (G, L, f_ini, f_tar) with per-vertex positive weights. Both colorings are
/// checked to be proper list colorings at construction.
class Instance {
public:
    Instance(Graph graph, ColorSet colors, ListAssignment lists, Coloring initial,
             Coloring target, std::vector<std::int64_t> weights = {});

    const Graph& graph() const { return graph_; }
    const ColorSet& colors() const { return colors_; }
    int color_count() const { return colors_.size(); }
    int size() const { return graph_.size(); }
    const ListAssignment& lists() const { return lists_; }
    const std::vector<Color>& list(Vertex v) const { return lists_[v]; }
    const Coloring& initial() const { return initial_; }
    const Coloring& target() const { return target_; }
    const std::vector<std::int64_t>& weights() const { return weights_; }
    std::int64_t weight(Vertex v) const { return weights_[v]; }
    VertexAssignment assignment(Vertex v) const { return {lists_[v], initial_[v], target_[v]}; }

    Instance with_weights(std::vector<std::int64_t> weights) const;

    friend bool operator==(const Instance& a, const Instance& b);

private:
    Graph graph_;
    ColorSet colors_;
    ListAssignment lists_;
    Coloring initial_;
    Coloring target_;
    std::vector<std::int64_t> weights_;
};

bool is_proper_list_coloring(const Graph& graph, const ListAssignment& lists, const Coloring& f);

/// Vertices where the two colorings differ, ascending. Throws on size mismatch.
VertexSet coloring_difference(const Coloring& f, const Coloring& g);

bool are_adjacent(const Coloring& f, const Coloring& g);

/// Restriction of the instance to `subset`; vertex i of the result is the i-th
/// smallest index of `subset`.
Instance restrict(const Instance& instance, VertexSet subset);

int max_clique_size(const Graph& graph);

}  // namespace lcr
