#pragma once

// Instance builders and brute-force oracles shared by the test executables. The oracles
// enumerate every coloring explicitly and share no code with the library's search.

#include "lcr/generators.hpp"
#include "lcr/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace testing {

using lcr::Color;
using lcr::Coloring;
using lcr::Edge;
using lcr::Graph;
using lcr::Instance;
using lcr::Vertex;

/// Colors named "0".."k-1" (k <= 10 keeps the name order equal to the index order).
inline lcr::ColorSet digit_colors(int k)
{
    lcr::ColorSet colors;
    for (int c = 0; c < k; ++c)
        colors.names.push_back(std::to_string(c));
    return colors;
}

/// Labels "v0".."v{n-1}" zero-padded so that label order equals index order.
inline std::vector<std::string> ordered_labels(int n, const std::string& prefix = "v")
{
    std::vector<std::string> labels;
    const std::size_t width = std::to_string(std::max(n - 1, 0)).size();
    for (int v = 0; v < n; ++v) {
        std::string digits = std::to_string(v);
        labels.push_back(prefix + std::string(width - digits.size(), '0') + digits);
    }
    return labels;
}

inline Instance make_instance(int n, const std::vector<Edge>& edges, lcr::ListAssignment lists,
                              Coloring initial, Coloring target,
                              std::vector<std::int64_t> weights = {}, int k = 0)
{
    if (k == 0)
        for (const auto& list : lists)
            for (Color c : list)
                k = std::max(k, c + 1);
    return Instance(Graph(ordered_labels(n), edges), digit_colors(std::max(k, 1)), std::move(lists),
                    std::move(initial), std::move(target), std::move(weights));
}

/// The two-vertex swap: an edge with lists {0,1} on both ends, colors exchanged.
inline Instance swap_instance()
{
    return make_instance(2, {{0, 1}}, {{0, 1}, {0, 1}}, {0, 1}, {1, 0});
}

/// Disjoint union; labels of `b` get a prefix so they stay unique.
inline Instance disjoint_union(const Instance& a, const Instance& b)
{
    if (!(a.colors() == b.colors()))
        throw std::invalid_argument("disjoint_union: color sets differ");
    std::vector<std::string> labels = a.graph().labels();
    for (const auto& label : b.graph().labels())
        labels.push_back("z" + label);
    std::vector<Edge> edges = a.graph().edges();
    for (auto [u, v] : b.graph().edges())
        edges.emplace_back(u + a.size(), v + a.size());
    auto lists = a.lists();
    lists.insert(lists.end(), b.lists().begin(), b.lists().end());
    auto initial = a.initial();
    initial.insert(initial.end(), b.initial().begin(), b.initial().end());
    auto target = a.target();
    target.insert(target.end(), b.target().begin(), b.target().end());
    auto weights = a.weights();
    weights.insert(weights.end(), b.weights().begin(), b.weights().end());
    return Instance(Graph(std::move(labels), edges), a.colors(), std::move(lists), std::move(initial),
                    std::move(target), std::move(weights));
}

/// Generated instance; on generator failure the seed is advanced.
inline Instance generated(lcr::GeneratorConfig config)
{
    for (int attempt = 0;; ++attempt) {
        try {
            return lcr::generate_instance(config);
        } catch (const lcr::InvalidInput&) {
            if (attempt > 50)
                throw;
            config.seed = config.seed * 6364136223846793005ULL + 1442695040888963407ULL;
        }
    }
}

/// Random connected graph: random tree plus independent extra edges.
inline Graph random_connected_graph(std::mt19937_64& rng, int n, double p)
{
    std::vector<Edge> edges;
    std::set<Edge> present;
    for (int v = 1; v < n; ++v) {
        const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
        edges.emplace_back(u, v);
        present.emplace(u, v);
    }
    std::bernoulli_distribution extra(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!present.count({u, v}) && extra(rng))
                edges.emplace_back(u, v);
    return Graph(ordered_labels(n), edges);
}

namespace oracle {

/// Every proper list coloring, by odometer over the lists.
inline std::vector<Coloring> proper_colorings(const Graph& g, const lcr::ListAssignment& lists)
{
    std::vector<Coloring> out;
    const int n = g.size();
    for (const auto& list : lists)
        if (list.empty())
            return out;
    std::vector<std::size_t> pos(n, 0);
    while (true) {
        Coloring f(n);
        for (int v = 0; v < n; ++v)
            f[v] = lists[v][pos[v]];
        bool proper = true;
        for (int u = 0; u < n && proper; ++u)
            for (int v = u + 1; v < n && proper; ++v)
                if (g.has_edge(u, v) && f[u] == f[v])
                    proper = false;
        if (proper)
            out.push_back(f);
        int v = 0;
        while (v < n && ++pos[v] == lists[v].size())
            pos[v++] = 0;
        if (v == n)
            break;
    }
    return out;
}

/// Index of each proper coloring and the undirected recoloring edges between them.
struct ColoringGraph {
    std::vector<Coloring> states;
    std::map<Coloring, int> index;
    std::vector<std::vector<std::pair<int, Vertex>>> moves;  // (neighbor state, recolored vertex)
};

inline ColoringGraph coloring_graph(const Instance& instance)
{
    ColoringGraph cg;
    cg.states = proper_colorings(instance.graph(), instance.lists());
    for (std::size_t i = 0; i < cg.states.size(); ++i)
        cg.index.emplace(cg.states[i], static_cast<int>(i));
    cg.moves.resize(cg.states.size());
    for (std::size_t i = 0; i < cg.states.size(); ++i)
        for (Vertex v = 0; v < instance.size(); ++v)
            for (Color c : instance.list(v)) {
                if (c == cg.states[i][v])
                    continue;
                Coloring g = cg.states[i];
                g[v] = c;
                if (auto it = cg.index.find(g); it != cg.index.end())
                    cg.moves[i].emplace_back(it->second, v);
            }
    return cg;
}

/// Reachability by union-find over the coloring graph.
inline bool reachable(const Instance& instance)
{
    const ColoringGraph cg = coloring_graph(instance);
    std::vector<int> root(cg.states.size());
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
        while (root[x] != x)
            x = root[x] = root[root[x]];
        return x;
    };
    for (std::size_t i = 0; i < cg.states.size(); ++i)
        for (auto [j, v] : cg.moves[i])
            root[find(static_cast<int>(i))] = find(j);
    return find(cg.index.at(instance.initial())) == find(cg.index.at(instance.target()));
}

inline constexpr std::int64_t kUnreachable = -1;

/// Minimum weighted length by label-correcting relaxation (Bellman-Ford with a queue).
inline std::int64_t opt(const Instance& instance)
{
    const ColoringGraph cg = coloring_graph(instance);
    const std::int64_t inf = INT64_MAX;
    std::vector<std::int64_t> dist(cg.states.size(), inf);
    std::vector<bool> queued(cg.states.size(), false);
    const int start = cg.index.at(instance.initial());
    dist[start] = 0;
    std::deque<int> queue{start};
    queued[start] = true;
    while (!queue.empty()) {
        const int i = queue.front();
        queue.pop_front();
        queued[i] = false;
        for (auto [j, v] : cg.moves[i]) {
            const std::int64_t d = dist[i] + instance.weight(v);
            if (d < dist[j]) {
                dist[j] = d;
                if (!queued[j]) {
                    queued[j] = true;
                    queue.push_back(j);
                }
            }
        }
    }
    const std::int64_t d = dist[cg.index.at(instance.target())];
    return d == inf ? kUnreachable : d;
}

/// Largest clique by checking every vertex subset.
inline int max_clique(const Graph& g)
{
    const int n = g.size();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool clique = true;
        for (int u = 0; u < n && clique; ++u)
            for (int v = u + 1; v < n && clique; ++v)
                if ((mask >> u & 1) && (mask >> v & 1) && !g.has_edge(u, v))
                    clique = false;
        if (clique)
            best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

/// Largest independent set, by recursion on the lowest remaining vertex.
inline int max_independent(const Graph& g, std::uint32_t remaining)
{
    if (remaining == 0)
        return 0;
    const int v = __builtin_ctz(remaining);
    const std::uint32_t without = remaining & ~(1u << v);
    std::uint32_t closed = without;
    for (Vertex w : g.neighbors(v))
        closed &= ~(1u << w);
    return std::max(max_independent(g, without), 1 + max_independent(g, closed));
}

inline bool has_module_property(const Graph& g, const std::vector<Vertex>& module)
{
    std::set<Vertex> inside(module.begin(), module.end());
    for (Vertex outside = 0; outside < g.size(); ++outside) {
        if (inside.count(outside))
            continue;
        int adjacent = 0;
        for (Vertex v : module)
            adjacent += g.has_edge(v, outside);
        if (adjacent != 0 && adjacent != static_cast<int>(module.size()))
            return false;
    }
    return true;
}

}  // namespace oracle

/// Labeled edge set, for comparing graphs whose vertex indices differ.
inline std::set<std::pair<std::string, std::string>> labeled_edges(const Graph& g)
{
    std::set<std::pair<std::string, std::string>> out;
    for (auto [u, v] : g.edges()) {
        auto a = g.label(u), b = g.label(v);
        if (b < a)
            std::swap(a, b);
        out.emplace(a, b);
    }
    return out;
}

inline std::set<std::string> label_set(const Graph& g)
{
    return {g.labels().begin(), g.labels().end()};
}

/// One graph per isomorphism class on n vertices (n <= 5), by minimum adjacency code.
inline std::vector<Graph> nonisomorphic_graphs(int n)
{
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            slots.emplace_back(u, v);
    std::vector<int> perm(n);
    std::set<std::uint32_t> seen;
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
        std::uint32_t canonical = UINT32_MAX;
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::uint32_t code = 0;
            for (std::size_t e = 0; e < slots.size(); ++e) {
                if (!(mask >> e & 1))
                    continue;
                int a = perm[slots[e].first], b = perm[slots[e].second];
                if (a > b)
                    std::swap(a, b);
                const auto slot = std::find(slots.begin(), slots.end(), Edge{a, b}) - slots.begin();
                code |= 1u << slot;
            }
            canonical = std::min(canonical, code);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!seen.insert(canonical).second)
            continue;
        std::vector<Edge> edges;
        for (std::size_t e = 0; e < slots.size(); ++e)
            if (mask >> e & 1)
                edges.push_back(slots[e]);
        std::vector<std::string> labels;
        for (int p = 1; p <= n; ++p)
            labels.push_back("u" + std::to_string(p));
        out.emplace_back(std::move(labels), edges);
    }
    return out;
}

}  // namespace testing
