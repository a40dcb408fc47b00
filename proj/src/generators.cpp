#include "lcr/generators.hpp"

#include "lcr/io.hpp"
#include "lcr/reduction.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace lcr {

std::optional<Family> parse_family(const std::string& name)
{
    if (name == "random") return Family::Random;
    if (name == "cograph") return Family::Cograph;
    if (name == "split") return Family::Split;
    if (name == "reduction") return Family::Reduction;
    return std::nullopt;
}

std::optional<PairMode> parse_pair_mode(const std::string& name)
{
    if (name == "reachable") return PairMode::Reachable;
    if (name == "independent") return PairMode::Independent;
    return std::nullopt;
}

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool coin(Rng& rng, double p)
{
    return std::bernoulli_distribution(p)(rng);
}

std::string padded(char prefix, int value, int count)
{
    const int width = static_cast<int>(std::to_string(std::max(count - 1, 0)).size());
    std::string digits = std::to_string(value);
    return prefix + std::string(width - digits.size(), '0') + digits;
}

std::vector<Edge> random_connected_edges(Rng& rng, int n, double p)
{
    std::vector<Edge> edges;
    std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
    for (int v = 1; v < n; ++v) {
        const int u = uniform(rng, 0, v - 1);
        edges.emplace_back(u, v);
        present[u][v] = present[v][u] = true;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!present[u][v] && coin(rng, p))
                edges.emplace_back(u, v);
    return edges;
}

// Random cotree with a series root; series nodes join their parts completely.
void cograph_edges(Rng& rng, std::vector<int> vertices, bool series, std::vector<Edge>& edges)
{
    if (vertices.size() <= 1)
        return;
    std::shuffle(vertices.begin(), vertices.end(), rng);
    const int parts = uniform(rng, 2, std::min<int>(3, static_cast<int>(vertices.size())));
    std::vector<int> cuts(vertices.size() - 1);
    std::iota(cuts.begin(), cuts.end(), 1);
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(parts - 1);
    std::sort(cuts.begin(), cuts.end());
    cuts.insert(cuts.begin(), 0);
    cuts.push_back(static_cast<int>(vertices.size()));

    std::vector<std::vector<int>> groups;
    for (int i = 0; i < parts; ++i)
        groups.emplace_back(vertices.begin() + cuts[i], vertices.begin() + cuts[i + 1]);
    if (series)
        for (int a = 0; a < parts; ++a)
            for (int b = a + 1; b < parts; ++b)
                for (int u : groups[a])
                    for (int v : groups[b])
                        edges.emplace_back(std::min(u, v), std::max(u, v));
    for (auto& group : groups)
        cograph_edges(rng, group, !series, edges);
}

std::vector<Edge> split_edges(Rng& rng, int n, int k)
{
    const int clique = uniform(rng, 1, std::max(1, std::min(k, n)));
    std::vector<Edge> edges;
    for (int u = 0; u < clique; ++u)
        for (int v = u + 1; v < clique; ++v)
            edges.emplace_back(u, v);
    for (int v = clique; v < n; ++v) {
        std::vector<int> picked;
        for (int u = 0; u < clique; ++u)
            if (coin(rng, 0.5))
                picked.push_back(u);
        if (picked.empty())
            picked.push_back(uniform(rng, 0, clique - 1));
        for (int u : picked)
            edges.emplace_back(u, v);
    }
    return edges;
}

std::optional<Coloring> greedy_coloring(Rng& rng, const Graph& g, int k)
{
    std::vector<int> order(g.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    Coloring f(g.size(), -1);
    for (Vertex v : order) {
        std::vector<Color> free;
        for (Color c = 0; c < k; ++c)
            if (std::none_of(g.neighbors(v).begin(), g.neighbors(v).end(),
                             [&](Vertex w) { return f[w] == c; }))
                free.push_back(c);
        if (free.empty())
            return std::nullopt;
        f[v] = free[uniform(rng, 0, static_cast<int>(free.size()) - 1)];
    }
    return f;
}

Instance random_instance(Rng& rng, const GeneratorConfig& config)
{
    const int n = config.n, k = config.k;
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<Edge> edges;
        switch (config.family) {
        case Family::Random: edges = random_connected_edges(rng, n, config.edge_probability); break;
        case Family::Cograph: {
            std::vector<int> all(n);
            std::iota(all.begin(), all.end(), 0);
            cograph_edges(rng, all, true, edges);
            break;
        }
        case Family::Split: edges = split_edges(rng, n, k); break;
        case Family::Reduction: break;
        }
        std::vector<std::string> labels;
        for (int v = 0; v < n; ++v)
            labels.push_back(padded('v', v, n + config.twins));
        const Graph g(std::move(labels), edges);

        std::optional<Coloring> initial;
        for (int tries = 0; tries < 20 && !initial; ++tries)
            initial = greedy_coloring(rng, g, k);
        if (!initial)
            continue;
        std::optional<Coloring> independent;
        if (config.mode == PairMode::Independent) {
            for (int tries = 0; tries < 20 && !independent; ++tries)
                independent = greedy_coloring(rng, g, k);
            if (!independent)
                continue;
        }

        ListAssignment lists(n);
        for (Vertex v = 0; v < n; ++v) {
            for (Color c = 0; c < k; ++c)
                if (c == (*initial)[v] || (independent && c == (*independent)[v]) || coin(rng, 0.5))
                    lists[v].push_back(c);
        }

        Coloring target = independent ? *independent : *initial;
        if (!independent) {
            for (int step = 0; step < 3 * n; ++step) {
                const Vertex v = uniform(rng, 0, n - 1);
                const Color c = lists[v][uniform(rng, 0, static_cast<int>(lists[v].size()) - 1)];
                if (std::none_of(g.neighbors(v).begin(), g.neighbors(v).end(),
                                 [&](Vertex w) { return target[w] == c; }))
                    target[v] = c;
            }
        }

        std::vector<std::string> names;
        for (Color c = 0; c < k; ++c)
            names.push_back(padded('c', c, k));
        return Instance(g, ColorSet{names}, std::move(lists), std::move(*initial), std::move(target));
    }
    throw InvalidInput("generator: could not draw proper colorings; increase k");
}

Instance add_twins(Rng& rng, const Instance& base, int twins)
{
    if (twins <= 0 || base.size() == 0)
        return base;
    const Graph& g = base.graph();
    const int n = g.size();
    std::vector<std::string> labels = g.labels();
    std::vector<Edge> edges = g.edges();
    std::vector<std::vector<Vertex>> adjacency(n);
    for (Vertex v = 0; v < n; ++v)
        adjacency[v] = g.neighbors(v);
    ListAssignment lists = base.lists();
    Coloring initial = base.initial(), target = base.target();
    std::vector<std::int64_t> weights = base.weights();
    for (int t = 0; t < twins; ++t) {
        const Vertex copy_of = uniform(rng, 0, static_cast<int>(labels.size()) - 1);
        const Vertex twin = static_cast<Vertex>(labels.size());
        labels.push_back(padded('v', twin, n + twins));
        adjacency.push_back(adjacency[copy_of]);
        for (Vertex w : adjacency[copy_of]) {
            edges.emplace_back(w, twin);
            adjacency[w].push_back(twin);
        }
        lists.push_back(lists[copy_of]);
        initial.push_back(initial[copy_of]);
        target.push_back(target[copy_of]);
        weights.push_back(weights[copy_of]);
    }
    return Instance(Graph(std::move(labels), edges), base.colors(), std::move(lists),
                    std::move(initial), std::move(target), std::move(weights));
}

}  // namespace

Instance canonicalize_colors(const Instance& instance)
{
    std::vector<std::string> used;
    for (Vertex v = 0; v < instance.size(); ++v)
        for (Color c : instance.list(v))
            used.push_back(instance.colors().names[c]);
    const ColorSet colors = canonical_color_set(used, instance.color_count());
    std::map<std::string, Color> index;
    for (Color c = 0; c < colors.size(); ++c)
        index.emplace(colors.names[c], c);
    auto rename = [&](Color c) { return index.at(instance.colors().names[c]); };

    ListAssignment lists = instance.lists();
    Coloring initial = instance.initial(), target = instance.target();
    for (Vertex v = 0; v < instance.size(); ++v) {
        for (Color& c : lists[v])
            c = rename(c);
        initial[v] = rename(initial[v]);
        target[v] = rename(target[v]);
    }
    return Instance(instance.graph(), colors, std::move(lists), std::move(initial),
                    std::move(target), instance.weights());
}

Instance generate_instance(const GeneratorConfig& config)
{
    if (config.n < 1 || config.k < 1 || config.max_weight < 1)
        throw InvalidInput("generator: need n >= 1, k >= 1 and max weight >= 1");
    Rng rng(config.seed);

    if (config.family == Family::Reduction) {
        std::vector<std::string> labels;
        for (int p = 1; p <= config.n; ++p)
            labels.push_back("u" + std::to_string(p));
        std::vector<Edge> edges;
        for (int u = 0; u < config.n; ++u)
            for (int v = u + 1; v < config.n; ++v)
                if (coin(rng, config.edge_probability))
                    edges.emplace_back(u, v);
        return reduce_is_to_lcr({Graph(std::move(labels), edges), config.reduction_s}).instance;
    }

    Instance instance = add_twins(rng, random_instance(rng, config), config.twins);
    if (config.max_weight > 1) {
        std::vector<std::int64_t> weights(instance.size());
        for (auto& w : weights)
            w = uniform(rng, 1, config.max_weight);
        instance = instance.with_weights(std::move(weights));
    }
    return canonicalize_colors(instance);
}

}  // namespace lcr
