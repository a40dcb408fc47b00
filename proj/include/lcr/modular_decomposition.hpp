#pragma once

#include "lcr/graph.hpp"

#include <string>
#include <vector>

namespace lcr {

enum class NodeKind { Leaf, Series, Parallel, Prime, TwoJoin };

const char* to_string(NodeKind kind);

/// Rooted tree of quotient graphs. Leaves carry one vertex of the represented
/// graph; node i of a quotient corresponds to children[i].
struct SubstitutionTree {
    struct Node {
        NodeKind kind = NodeKind::Leaf;
        Vertex vertex = -1;
        std::vector<int> children;
        std::vector<std::vector<bool>> quotient;
    };

    std::vector<Node> nodes;
    int root = -1;

    const Node& node(int x) const { return nodes[x]; }

    /// Vertices of G(x), ascending by index.
    VertexSet vertices_of(int x) const;
    /// Nodes reachable from the root in post-order (children before parents).
    std::vector<int> post_order() const;
    int parent_of(int x) const;
};

/// True iff every vertex of `module` has the same neighborhood outside it.
bool is_module(const Graph& graph, const VertexSet& module);

/// True iff the graph has only trivial modules.
bool is_prime_graph(const Graph& graph);

/// Q-substitution: union of `parts` plus every edge between parts i and j with ij in E(Q).
/// Labels of the parts must be pairwise disjoint.
Graph substitute(const Graph& quotient, const std::vector<Graph>& parts);

/// Graph represented by the tree; vertex labels come from `labels[leaf vertex]`.
Graph evaluate(const SubstitutionTree& tree, const std::vector<std::string>& labels);

/// The unique modular decomposition tree. Children are ordered by the smallest
/// vertex label in their subtree.
SubstitutionTree compute_md_tree(const Graph& graph);

/// Binarizes series nodes into right-leaning chains of 2-join nodes.
SubstitutionTree md_to_pmd(const SubstitutionTree& md_tree);

int modular_width(const SubstitutionTree& tree);

/// Largest child count of a non-parallel node, and never less than 2.
int pseudo_modular_width(const SubstitutionTree& tree);

/// Checks the MD-tree shape constraints (kinds, quotient shapes, no series-series or
/// parallel-parallel parent/child pairs).
bool is_md_tree(const SubstitutionTree& tree);

/// Checks the PMD-tree shape constraints.
bool is_pmd_tree(const SubstitutionTree& tree);

/// Indented text dump for debugging; not a stable format.
std::string dump_tree(const SubstitutionTree& tree, const Graph& graph);

}  // namespace lcr
