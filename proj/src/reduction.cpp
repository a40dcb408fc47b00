#include "lcr/reduction.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lcr {

Graph read_edge_list(std::istream& in)
{
    std::string line;
    int line_number = 0;
    int n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_number;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::vector<long long> values;
        long long value;
        while (fields >> value)
            values.push_back(value);
        if (!fields.eof())
            throw InvalidInput("line " + std::to_string(line_number) + ": expected integers");
        if (values.empty())
            continue;
        if (n < 0) {
            if (values.size() != 1 || values[0] < 0)
                throw InvalidInput("line " + std::to_string(line_number) +
                                   ": expected the vertex count");
            n = static_cast<int>(values[0]);
            continue;
        }
        if (values.size() != 2 || values[0] < 1 || values[1] < 1 || values[0] > n || values[1] > n)
            throw InvalidInput("line " + std::to_string(line_number) +
                               ": expected an edge 'p q' with 1 <= p, q <= n");
        edges.emplace_back(static_cast<int>(values[0] - 1), static_cast<int>(values[1] - 1));
    }
    if (n < 0)
        throw InvalidInput("edge list is empty");
    std::vector<std::string> labels;
    for (int p = 1; p <= n; ++p)
        labels.push_back("u" + std::to_string(p));
    return Graph(std::move(labels), edges);
}

std::string selection_color(int i, int p)
{
    return "c" + std::to_string(i) + "_" + std::to_string(p);
}

Reduction reduce_is_to_lcr(const IsInstance& input)
{
    const Graph& h = input.graph;
    const int n = h.size();
    const int s = input.s;
    if (s < 0)
        throw InvalidInput("reduce_is_to_lcr: s must be non-negative");

    std::vector<std::string> names{"key", "a", "b"};
    for (int i = 1; i <= s; ++i)
        for (int p = 1; p <= n; ++p)
            names.push_back(selection_color(i, p));
    std::sort(names.begin(), names.end());
    ColorSet colors{names};
    auto color = [&](const std::string& name) { return colors.find(name); };

    std::vector<std::string> labels;
    std::vector<Edge> edges;
    ListAssignment lists;
    Coloring initial, target;
    GadgetPlan plan;
    auto add_vertex = [&](std::string label, std::vector<Color> list, Color from, Color to) {
        labels.push_back(std::move(label));
        std::sort(list.begin(), list.end());
        lists.push_back(std::move(list));
        initial.push_back(from);
        target.push_back(to);
        return static_cast<Vertex>(labels.size()) - 1;
    };

    const Color key = color("key");
    for (int i = 1; i <= s; ++i) {
        std::vector<Color> list{key};
        for (int p = 1; p <= n; ++p)
            list.push_back(color(selection_color(i, p)));
        plan.selection.push_back(add_vertex("v" + std::to_string(i), std::move(list), key, key));
    }

    std::vector<std::pair<int, int>> pairs;
    for (int p = 1; p <= n; ++p)
        pairs.emplace_back(p, p);
    for (auto [a, b] : h.edges()) {
        pairs.emplace_back(a + 1, b + 1);
        pairs.emplace_back(b + 1, a + 1);
    }
    for (int i = 1; i <= s; ++i)
        for (int j = i + 1; j <= s; ++j)
            for (auto [p, q] : pairs) {
                // L(x) = {c_i^q, c_j^p}: x blocks v_i = c_i^q together with v_j = c_j^p.
                std::vector<Color> list{color(selection_color(i, q)), color(selection_color(j, p))};
                std::sort(list.begin(), list.end());
                const std::string label = "x" + std::to_string(i) + "_" + std::to_string(j) + "_" +
                                          std::to_string(p) + "_" + std::to_string(q);
                const Vertex x = add_vertex(label, list, list.front(), list.back());
                edges.emplace_back(x, plan.selection[i - 1]);
                edges.emplace_back(x, plan.selection[j - 1]);
                plan.forbidding.push_back({i, j, p, q, x});
            }

    const Color a = color("a"), b = color("b");
    plan.w1 = add_vertex("w1", {a, b}, a, b);
    plan.w2 = add_vertex("w2", {a, b, key}, b, a);
    edges.emplace_back(plan.w1, plan.w2);
    for (Vertex v : plan.selection)
        edges.emplace_back(v, plan.w2);

    Instance instance(Graph(std::move(labels), edges), std::move(colors), std::move(lists),
                      std::move(initial), std::move(target));
    return {std::move(instance), std::move(plan)};
}

bool has_independent_set(const Graph& graph, int s)
{
    const int n = graph.size();
    if (s <= 0)
        return true;
    if (s > n)
        return false;
    if (n > 30)
        throw std::invalid_argument("has_independent_set: graph too large for exhaustive search");
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        if (__builtin_popcount(mask) < s)
            continue;
        bool independent = true;
        for (auto [u, v] : graph.edges())
            if ((mask >> u & 1) && (mask >> v & 1)) {
                independent = false;
                break;
            }
        if (independent)
            return true;
    }
    return false;
}

VertexCover reduction_cover(const GadgetPlan& plan)
{
    VertexCover cover = plan.selection;
    cover.push_back(plan.w2);
    std::sort(cover.begin(), cover.end());
    return cover;
}

ReductionCheck verify_reduction(const IsInstance& input, const SolveOptions& options)
{
    const Reduction reduction = reduce_is_to_lcr(input);
    ReductionCheck check;
    check.independent_set = has_independent_set(input.graph, input.s);
    check.reconfigurable =
        cover_reachable(reduction.instance, reduction_cover(reduction.plan), options).verdict;
    if (check.reconfigurable == Verdict::TooLarge)
        throw std::runtime_error("verify_reduction: state cap exceeded");
    check.agree = check.independent_set == (check.reconfigurable == Verdict::Yes);
    return check;
}

int cover_bound_of_reduction(const IsInstance& input)
{
    const Reduction reduction = reduce_is_to_lcr(input);
    const VertexCover cover = reduction_cover(reduction.plan);
    if (!is_vertex_cover(reduction.instance.graph(), cover))
        throw std::logic_error("reduction: {w2} and the selection vertices do not cover G");
    return input.s + 1;
}

}  // namespace lcr
