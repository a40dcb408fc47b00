#pragma once

#include "lcr/graph.hpp"
#include "lcr/solver.hpp"

#include <istream>
#include <string>
#include <vector>

namespace lcr {

/// Independent Set input: graph H on u_1..u_n (vertex p-1 is u_p) and target size s.
struct IsInstance {
    Graph graph;
    int s = 0;
};

/// Reads "n" followed by one "p q" edge per line (1-based); '#' starts a comment.
Graph read_edge_list(std::istream& in);

/// Layout of the generated instance in terms of its gadgets.
struct GadgetPlan {
    struct Forbidding {
        int i, j, p, q;  // 1-based, i < j
        Vertex vertex;
    };
    VertexSet selection;  // v_1..v_s
    std::vector<Forbidding> forbidding;
    Vertex w1 = -1;
    Vertex w2 = -1;
};

struct Reduction {
    Instance instance;
    GadgetPlan plan;
};

/// Color name of c_i^p.
std::string selection_color(int i, int p);

/// Builds the list-coloring reconfiguration instance that is reconfigurable iff H has an
/// independent set of size s. Forbidding vertices start at the first color of their list
/// and end at the second.
Reduction reduce_is_to_lcr(const IsInstance& input);

/// Does H contain an independent set of at least s vertices (exhaustive).
bool has_independent_set(const Graph& graph, int s);

struct ReductionCheck {
    bool independent_set = false;
    Verdict reconfigurable = Verdict::No;
    bool agree = false;
};

/// Compares the Independent Set answer with the reconfiguration verdict on the reduction.
ReductionCheck verify_reduction(const IsInstance& input, const SolveOptions& options = {});

/// s + 1, after checking that {w2} together with the selection vertices covers every edge.
int cover_bound_of_reduction(const IsInstance& input);

/// {w2} plus the selection vertices.
VertexCover reduction_cover(const GadgetPlan& plan);

}  // namespace lcr
