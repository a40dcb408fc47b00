#include "lcr/graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace lcr {

Graph::Graph(int n) : labels_(n), adjacency_(n)
{
    for (int v = 0; v < n; ++v)
        labels_[v] = std::to_string(v);
}

Graph::Graph(std::vector<std::string> labels, const std::vector<Edge>& edges)
    : labels_(std::move(labels)), adjacency_(labels_.size())
{
    const int n = size();
    {
        std::vector<std::string> sorted = labels_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InvalidInput("duplicate vertex label");
    }
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InvalidInput("edge endpoint out of range");
        if (u == v)
            throw InvalidInput("self-loop at vertex " + labels_[u]);
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            throw InvalidInput("parallel edge");
    }
    edge_count_ = edges.size();
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    const auto& a = adjacency_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < size(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Vertex Graph::find(const std::string& label) const
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    return it == labels_.end() ? -1 : static_cast<Vertex>(it - labels_.begin());
}

Graph Graph::induced(const VertexSet& subset) const
{
    std::vector<int> position(size(), -1);
    std::vector<std::string> labels;
    labels.reserve(subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i) {
        Vertex v = subset[i];
        if (v < 0 || v >= size() || position[v] != -1)
            throw InvalidInput("induced: subset is not a set of vertices of the graph");
        position[v] = static_cast<int>(i);
        labels.push_back(labels_[v]);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (Vertex w : adjacency_[subset[i]])
            if (position[w] > static_cast<int>(i))
                edges.emplace_back(static_cast<int>(i), position[w]);
    return Graph(std::move(labels), edges);
}

std::vector<VertexSet> Graph::connected_components() const
{
    std::vector<int> component(size(), -1);
    std::vector<VertexSet> out;
    for (Vertex s = 0; s < size(); ++s) {
        if (component[s] != -1)
            continue;
        VertexSet members{s};
        component[s] = static_cast<int>(out.size());
        for (std::size_t head = 0; head < members.size(); ++head)
            for (Vertex w : adjacency_[members[head]])
                if (component[w] == -1) {
                    component[w] = component[s];
                    members.push_back(w);
                }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

bool Graph::is_connected() const
{
    return size() <= 1 || connected_components().size() == 1;
}

Color ColorSet::find(const std::string& name) const
{
    auto it = std::find(names.begin(), names.end(), name);
    return it == names.end() ? -1 : static_cast<Color>(it - names.begin());
}

Instance::Instance(Graph graph, ColorSet colors, ListAssignment lists, Coloring initial,
                   Coloring target, std::vector<std::int64_t> weights)
    : graph_(std::move(graph)),
      colors_(std::move(colors)),
      lists_(std::move(lists)),
      initial_(std::move(initial)),
      target_(std::move(target)),
      weights_(std::move(weights))
{
    const auto n = static_cast<std::size_t>(graph_.size());
    if (colors_.size() < 1)
        throw InvalidInput("color set must contain at least one color");
    if (weights_.empty())
        weights_.assign(n, 1);
    if (lists_.size() != n || initial_.size() != n || target_.size() != n || weights_.size() != n)
        throw InvalidInput("instance fields do not cover every vertex");
    for (std::size_t v = 0; v < n; ++v) {
        auto& list = lists_[v];
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        if (!list.empty() && (list.front() < 0 || list.back() >= colors_.size()))
            throw InvalidInput("list of vertex " + graph_.label(static_cast<Vertex>(v)) +
                               " contains a color outside the color set");
        if (weights_[v] < 1)
            throw InvalidInput("weight of vertex " + graph_.label(static_cast<Vertex>(v)) +
                               " must be a positive integer");
    }
    if (!is_proper_list_coloring(graph_, lists_, initial_))
        throw InvalidInput("initial coloring is not a proper list coloring");
    if (!is_proper_list_coloring(graph_, lists_, target_))
        throw InvalidInput("target coloring is not a proper list coloring");
}

Instance Instance::with_weights(std::vector<std::int64_t> weights) const
{
    return Instance(graph_, colors_, lists_, initial_, target_, std::move(weights));
}

bool operator==(const Instance& a, const Instance& b)
{
    return a.graph_.labels() == b.graph_.labels() && a.graph_.edges() == b.graph_.edges() &&
           a.colors_ == b.colors_ && a.lists_ == b.lists_ && a.initial_ == b.initial_ &&
           a.target_ == b.target_ && a.weights_ == b.weights_;
}

bool is_proper_list_coloring(const Graph& graph, const ListAssignment& lists, const Coloring& f)
{
    const int n = graph.size();
    if (static_cast<int>(f.size()) != n || static_cast<int>(lists.size()) != n)
        return false;
    for (Vertex v = 0; v < n; ++v) {
        if (!std::binary_search(lists[v].begin(), lists[v].end(), f[v]))
            return false;
        for (Vertex w : graph.neighbors(v))
            if (f[v] == f[w])
                return false;
    }
    return true;
}

VertexSet coloring_difference(const Coloring& f, const Coloring& g)
{
    if (f.size() != g.size())
        throw std::invalid_argument("coloring_difference: colorings have different domains");
    VertexSet out;
    for (std::size_t v = 0; v < f.size(); ++v)
        if (f[v] != g[v])
            out.push_back(static_cast<Vertex>(v));
    return out;
}

bool are_adjacent(const Coloring& f, const Coloring& g)
{
    if (f.size() != g.size())
        return false;
    int differences = 0;
    for (std::size_t v = 0; v < f.size() && differences < 2; ++v)
        differences += f[v] != g[v];
    return differences == 1;
}

Instance restrict(const Instance& instance, VertexSet subset)
{
    std::sort(subset.begin(), subset.end());
    if (std::adjacent_find(subset.begin(), subset.end()) != subset.end() ||
        (!subset.empty() && (subset.front() < 0 || subset.back() >= instance.size())))
        throw InvalidInput("restrict: subset is not a subset of the vertex set");

    ListAssignment lists;
    Coloring initial, target;
    std::vector<std::int64_t> weights;
    for (Vertex v : subset) {
        lists.push_back(instance.list(v));
        initial.push_back(instance.initial()[v]);
        target.push_back(instance.target()[v]);
        weights.push_back(instance.weight(v));
    }
    return Instance(instance.graph().induced(subset), instance.colors(), std::move(lists),
                    std::move(initial), std::move(target), std::move(weights));
}

namespace {

// Bron-Kerbosch with pivoting; returns the size of the largest clique found.
void extend_clique(const Graph& g, int size, std::vector<Vertex> candidates,
                   std::vector<Vertex> excluded, int& best)
{
    if (candidates.empty()) {
        if (excluded.empty())
            best = std::max(best, size);
        return;
    }
    if (size + static_cast<int>(candidates.size()) <= best)
        return;

    Vertex pivot = candidates.front();
    std::size_t pivot_hits = 0;
    for (const auto* pool : {&candidates, &excluded})
        for (Vertex u : *pool) {
            std::size_t hits = 0;
            for (Vertex c : candidates)
                hits += g.has_edge(u, c);
            if (hits >= pivot_hits) {
                pivot_hits = hits;
                pivot = u;
            }
        }

    std::vector<Vertex> branch;
    for (Vertex c : candidates)
        if (!g.has_edge(pivot, c))
            branch.push_back(c);

    for (Vertex v : branch) {
        std::vector<Vertex> next_candidates, next_excluded;
        for (Vertex c : candidates)
            if (g.has_edge(v, c))
                next_candidates.push_back(c);
        for (Vertex x : excluded)
            if (g.has_edge(v, x))
                next_excluded.push_back(x);
        extend_clique(g, size + 1, std::move(next_candidates), std::move(next_excluded), best);
        candidates.erase(std::find(candidates.begin(), candidates.end(), v));
        excluded.push_back(v);
    }
}

}  // namespace

int max_clique_size(const Graph& graph)
{
    if (graph.size() == 0)
        return 0;
    std::vector<Vertex> all(graph.size());
    std::iota(all.begin(), all.end(), 0);
    int best = 0;
    extend_clique(graph, 0, std::move(all), {}, best);
    return best;
}

}  // namespace lcr
