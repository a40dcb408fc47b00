#include "lcr/kernel_vc.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace lcr {

bool is_vertex_cover(const Graph& graph, const VertexSet& cover)
{
    std::vector<bool> in(graph.size(), false);
    for (Vertex v : cover) {
        if (v < 0 || v >= graph.size())
            return false;
        in[v] = true;
    }
    for (auto [u, v] : graph.edges())
        if (!in[u] && !in[v])
            return false;
    return true;
}

namespace {

bool branch_cover(const Graph& g, std::vector<bool>& in, int budget, VertexSet& chosen)
{
    Edge open{-1, -1};
    for (Vertex u = 0; u < g.size() && open.first < 0; ++u)
        if (!in[u])
            for (Vertex v : g.neighbors(u))
                if (!in[v]) {
                    open = {u, v};
                    break;
                }
    if (open.first < 0)
        return true;
    if (budget == 0)
        return false;
    for (Vertex pick : {open.first, open.second}) {
        in[pick] = true;
        chosen.push_back(pick);
        if (branch_cover(g, in, budget - 1, chosen))
            return true;
        chosen.pop_back();
        in[pick] = false;
    }
    return false;
}

}  // namespace

std::optional<VertexCover> min_vertex_cover(const Graph& graph, int bound)
{
    if (bound < 0)
        return std::nullopt;
    std::vector<bool> in(graph.size(), false);
    VertexSet chosen;
    if (!branch_cover(graph, in, bound, chosen))
        return std::nullopt;
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

std::optional<SplitPartition> split_partition(const Graph& graph)
{
    const int n = graph.size();
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return graph.degree(a) > graph.degree(b); });

    int m = 0;
    for (int i = 1; i <= n; ++i)
        if (graph.degree(order[i - 1]) >= i - 1)
            m = i;
    long long head = 0, tail = 0;
    for (int i = 0; i < n; ++i)
        (i < m ? head : tail) += graph.degree(order[i]);
    if (head != static_cast<long long>(m) * (m - 1) + tail)
        return std::nullopt;

    SplitPartition part;
    part.clique.assign(order.begin(), order.begin() + m);
    part.independent.assign(order.begin() + m, order.end());
    // A clique vertex without independent-side neighbors can switch sides; the cover shrinks.
    std::vector<bool> independent(n, false);
    for (Vertex v : part.independent)
        independent[v] = true;
    for (auto it = part.clique.begin(); it != part.clique.end(); ++it) {
        const auto& nb = graph.neighbors(*it);
        if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return independent[w]; })) {
            part.independent.push_back(*it);
            part.clique.erase(it);
            break;
        }
    }
    std::sort(part.clique.begin(), part.clique.end());
    std::sort(part.independent.begin(), part.independent.end());
    return part;
}

VertexCover choose_vertex_cover(const Graph& graph, int search_limit)
{
    if (auto split = split_partition(graph))
        return split->clique;
    for (int bound = 0; bound <= search_limit; ++bound)
        if (auto cover = min_vertex_cover(graph, bound))
            return *cover;

    std::vector<bool> in(graph.size(), false);
    for (auto [u, v] : graph.edges())
        if (!in[u] && !in[v])
            in[u] = in[v] = true;
    VertexCover cover;
    for (Vertex v = 0; v < graph.size(); ++v)
        if (in[v])
            cover.push_back(v);
    return cover;
}

VcKernel kernelize_vc(const Instance& instance, const VertexCover& cover)
{
    const Graph& g = instance.graph();
    if (!is_vertex_cover(g, cover))
        throw InvalidInput("kernelize_vc: the given set is not a vertex cover");

    std::vector<bool> in_cover(g.size(), false);
    for (Vertex v : cover)
        in_cover[v] = true;

    using Key = std::tuple<VertexSet, VertexAssignment>;
    std::map<Key, VertexSet> classes;
    for (Vertex v = 0; v < g.size(); ++v)
        if (!in_cover[v])
            classes[{g.neighbors(v), instance.assignment(v)}].push_back(v);

    std::vector<std::int64_t> weights = instance.weights();
    std::vector<bool> removed(g.size(), false);
    MergeLog log;
    for (auto& [_, members] : classes) {
        if (members.size() < 2)
            continue;
        const VertexSet ordered = in_label_order(g, members);
        const Vertex survivor = ordered.front();
        for (std::size_t i = 1; i < ordered.size(); ++i) {
            log.push_back({survivor, ordered[i], weights[ordered[i]]});
            weights[survivor] += weights[ordered[i]];
            removed[ordered[i]] = true;
        }
    }
    std::sort(log.begin(), log.end(), [&](const MergeRecord& a, const MergeRecord& b) {
        return std::tie(g.label(a.into), g.label(a.absorbed)) <
               std::tie(g.label(b.into), g.label(b.absorbed));
    });

    VertexSet kept;
    std::vector<int> position(g.size(), -1);
    for (Vertex v = 0; v < g.size(); ++v)
        if (!removed[v]) {
            position[v] = static_cast<int>(kept.size());
            kept.push_back(v);
        }
    VertexCover kernel_cover;
    for (Vertex v : cover)
        kernel_cover.push_back(position[v]);
    std::sort(kernel_cover.begin(), kernel_cover.end());

    Instance kernel = restrict(instance.with_weights(weights), kept);
    return {std::move(kernel), std::move(kept), std::move(log), std::move(kernel_cover)};
}

std::uint64_t vc_kernel_bound(int tau, int k)
{
    if (tau < 0 || k < 0)
        throw std::invalid_argument("vc_kernel_bound: negative parameter");
    const auto k2 = static_cast<unsigned __int128>(k) * k;
    if (tau + k >= 63)
        throw std::overflow_error("vc_kernel_bound: value exceeds 63 bits");
    const unsigned __int128 value = (static_cast<unsigned __int128>(1) << (tau + k)) * k2;
    if (value >> 63)
        throw std::overflow_error("vc_kernel_bound: value exceeds 63 bits");
    return static_cast<std::uint64_t>(value);
}

ReplayLog as_replay_log(const MergeLog& log)
{
    ReplayLog out;
    for (const auto& merge : log)
        out.push_back({{merge.into}, {merge.absorbed}, true});
    return out;
}

}  // namespace lcr
