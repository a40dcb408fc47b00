#include "lcr/modular_decomposition.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>

namespace lcr {

const char* to_string(NodeKind kind)
{
    switch (kind) {
    case NodeKind::Leaf: return "leaf";
    case NodeKind::Series: return "series";
    case NodeKind::Parallel: return "parallel";
    case NodeKind::Prime: return "prime";
    case NodeKind::TwoJoin: return "2-join";
    }
    return "?";
}

VertexSet SubstitutionTree::vertices_of(int x) const
{
    VertexSet out;
    std::vector<int> stack{x};
    while (!stack.empty()) {
        int y = stack.back();
        stack.pop_back();
        if (nodes[y].kind == NodeKind::Leaf)
            out.push_back(nodes[y].vertex);
        else
            stack.insert(stack.end(), nodes[y].children.begin(), nodes[y].children.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> SubstitutionTree::post_order() const
{
    std::vector<int> order;
    if (root < 0)
        return order;
    // (node, next child index)
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    while (!stack.empty()) {
        auto& [x, next] = stack.back();
        if (next < nodes[x].children.size()) {
            int child = nodes[x].children[next++];
            stack.emplace_back(child, 0);
        } else {
            order.push_back(x);
            stack.pop_back();
        }
    }
    return order;
}

int SubstitutionTree::parent_of(int x) const
{
    for (int y = 0; y < static_cast<int>(nodes.size()); ++y)
        for (int c : nodes[y].children)
            if (c == x)
                return y;
    return -1;
}

bool is_module(const Graph& graph, const VertexSet& module)
{
    if (module.size() <= 1)
        return true;
    std::vector<bool> inside(graph.size(), false);
    for (Vertex v : module)
        inside[v] = true;
    auto outside = [&](Vertex v) {
        VertexSet out;
        for (Vertex w : graph.neighbors(v))
            if (!inside[w])
                out.push_back(w);
        return out;
    };
    const VertexSet reference = outside(module.front());
    return std::all_of(module.begin() + 1, module.end(),
                       [&](Vertex v) { return outside(v) == reference; });
}

namespace {

// Smallest module of `g` containing both a and b, as a membership mask.
std::vector<bool> module_closure(const Graph& g, Vertex a, Vertex b)
{
    const int n = g.size();
    std::vector<bool> in(n, false);
    std::vector<int> hits(n, 0);
    int members = 0;
    auto add = [&](Vertex v) {
        in[v] = true;
        ++members;
        for (Vertex w : g.neighbors(v))
            ++hits[w];
    };
    add(a);
    add(b);
    for (bool grew = true; grew;) {
        grew = false;
        for (Vertex z = 0; z < n; ++z)
            if (!in[z] && hits[z] > 0 && hits[z] < members) {
                add(z);
                grew = true;
            }
    }
    return in;
}

std::vector<VertexSet> complement_components(const Graph& g)
{
    const int n = g.size();
    std::vector<int> component(n, -1);
    std::vector<VertexSet> out;
    for (Vertex s = 0; s < n; ++s) {
        if (component[s] != -1)
            continue;
        VertexSet members{s};
        component[s] = static_cast<int>(out.size());
        for (std::size_t head = 0; head < members.size(); ++head) {
            Vertex u = members[head];
            for (Vertex w = 0; w < n; ++w)
                if (w != u && component[w] == -1 && !g.has_edge(u, w)) {
                    component[w] = component[s];
                    members.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

// Maximal proper modules of a graph that is connected and co-connected.
std::vector<VertexSet> maximal_modules_of_prime_part(const Graph& g)
{
    const int n = g.size();
    std::vector<bool> assigned(n, false);
    std::vector<VertexSet> parts;
    for (Vertex v = 0; v < n; ++v) {
        if (assigned[v])
            continue;
        VertexSet part{v};
        assigned[v] = true;
        for (Vertex u = v + 1; u < n; ++u) {
            if (assigned[u])
                continue;
            auto closure = module_closure(g, v, u);
            if (std::count(closure.begin(), closure.end(), true) < n) {
                part.push_back(u);
                assigned[u] = true;
            }
        }
        parts.push_back(std::move(part));
    }
    return parts;
}

Graph quotient_as_graph(const std::vector<std::vector<bool>>& quotient)
{
    std::vector<Edge> edges;
    const int p = static_cast<int>(quotient.size());
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            if (quotient[i][j])
                edges.emplace_back(i, j);
    return Graph(Graph(p).labels(), edges);
}

class MdBuilder {
public:
    explicit MdBuilder(const Graph& graph) : graph_(graph) {}

    SubstitutionTree build()
    {
        SubstitutionTree tree;
        if (graph_.size() == 0)
            return tree;
        VertexSet all(graph_.size());
        for (Vertex v = 0; v < graph_.size(); ++v)
            all[v] = v;
        tree_ = &tree;
        tree.root = decompose(all);
        return tree;
    }

private:
    int decompose(const VertexSet& set)
    {
        if (set.size() == 1) {
            tree_->nodes.push_back({NodeKind::Leaf, set.front(), {}, {}});
            return static_cast<int>(tree_->nodes.size()) - 1;
        }

        const Graph sub = graph_.induced(set);
        NodeKind kind = NodeKind::Parallel;
        std::vector<VertexSet> parts = sub.connected_components();
        if (parts.size() == 1) {
            kind = NodeKind::Series;
            parts = complement_components(sub);
            if (parts.size() == 1) {
                kind = NodeKind::Prime;
                parts = maximal_modules_of_prime_part(sub);
            }
        }
        for (auto& part : parts)
            for (auto& v : part)
                v = set[v];

        std::vector<std::pair<std::string, VertexSet>> keyed;
        for (auto& part : parts) {
            std::string smallest = graph_.label(part.front());
            for (Vertex v : part)
                smallest = std::min(smallest, graph_.label(v));
            keyed.emplace_back(std::move(smallest), std::move(part));
        }
        std::sort(keyed.begin(), keyed.end());

        const std::size_t p = keyed.size();
        SubstitutionTree::Node node;
        node.kind = kind;
        node.quotient.assign(p, std::vector<bool>(p, false));
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < p; ++j)
                if (i != j)
                    node.quotient[i][j] =
                        graph_.has_edge(keyed[i].second.front(), keyed[j].second.front());

        if (kind == NodeKind::Prime) {
            // Over maximal strong modules a 2- or 3-node quotient is always complete or edgeless.
            assert(p >= 4);
            assert(is_prime_graph(quotient_as_graph(node.quotient)));
        }

        for (auto& [_, part] : keyed)
            node.children.push_back(decompose(part));
        tree_->nodes.push_back(std::move(node));
        return static_cast<int>(tree_->nodes.size()) - 1;
    }

    const Graph& graph_;
    SubstitutionTree* tree_ = nullptr;
};

bool is_complete(const std::vector<std::vector<bool>>& q)
{
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j)
            if (i != j && !q[i][j])
                return false;
    return true;
}

bool is_edgeless(const std::vector<std::vector<bool>>& q)
{
    for (const auto& row : q)
        if (std::find(row.begin(), row.end(), true) != row.end())
            return false;
    return true;
}

bool node_shape_ok(const SubstitutionTree::Node& node)
{
    const std::size_t p = node.quotient.size();
    switch (node.kind) {
    case NodeKind::Leaf: return node.children.empty() && node.vertex >= 0;
    case NodeKind::Series: return p >= 2 && node.children.size() == p && is_complete(node.quotient);
    case NodeKind::TwoJoin: return p == 2 && node.children.size() == p && is_complete(node.quotient);
    case NodeKind::Parallel: return p >= 2 && node.children.size() == p && is_edgeless(node.quotient);
    case NodeKind::Prime:
        return p >= 4 && node.children.size() == p && is_prime_graph(quotient_as_graph(node.quotient));
    }
    return false;
}

}  // namespace

bool is_prime_graph(const Graph& graph)
{
    const int n = graph.size();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
            auto closure = module_closure(graph, a, b);
            if (std::count(closure.begin(), closure.end(), true) < n)
                return false;
        }
    return true;
}

Graph substitute(const Graph& quotient, const std::vector<Graph>& parts)
{
    const int p = quotient.size();
    if (p < 2 || static_cast<int>(parts.size()) != p)
        throw InvalidInput("substitute: need one part per quotient node and at least two nodes");

    std::vector<std::string> labels;
    std::vector<int> offset(p + 1, 0);
    for (int i = 0; i < p; ++i) {
        offset[i + 1] = offset[i] + parts[i].size();
        labels.insert(labels.end(), parts[i].labels().begin(), parts[i].labels().end());
    }
    std::vector<Edge> edges;
    for (int i = 0; i < p; ++i)
        for (auto [u, v] : parts[i].edges())
            edges.emplace_back(offset[i] + u, offset[i] + v);
    for (auto [i, j] : quotient.edges())
        for (int u = offset[i]; u < offset[i + 1]; ++u)
            for (int v = offset[j]; v < offset[j + 1]; ++v)
                edges.emplace_back(u, v);
    return Graph(std::move(labels), edges);
}

Graph evaluate(const SubstitutionTree& tree, const std::vector<std::string>& labels)
{
    if (tree.root < 0)
        return Graph();
    std::function<Graph(int)> eval = [&](int x) -> Graph {
        const auto& node = tree.node(x);
        if (node.kind == NodeKind::Leaf)
            return Graph({labels.at(node.vertex)}, {});
        std::vector<Graph> parts;
        for (int c : node.children)
            parts.push_back(eval(c));
        return substitute(quotient_as_graph(node.quotient), parts);
    };
    return eval(tree.root);
}

SubstitutionTree compute_md_tree(const Graph& graph)
{
    return MdBuilder(graph).build();
}

SubstitutionTree md_to_pmd(const SubstitutionTree& md_tree)
{
    if (!is_md_tree(md_tree))
        throw InvalidInput("md_to_pmd: input is not an MD-tree");

    SubstitutionTree out;
    const std::vector<std::vector<bool>> join{{false, true}, {true, false}};
    std::function<int(int)> copy = [&](int x) -> int {
        const auto& node = md_tree.node(x);
        if (node.kind == NodeKind::Leaf) {
            out.nodes.push_back(node);
            return static_cast<int>(out.nodes.size()) - 1;
        }
        std::vector<int> children;
        for (int c : node.children)
            children.push_back(copy(c));
        if (node.kind != NodeKind::Series) {
            SubstitutionTree::Node copied = node;
            copied.children = std::move(children);
            out.nodes.push_back(std::move(copied));
            return static_cast<int>(out.nodes.size()) - 1;
        }
        // x_i has children y_i and x_{i+1}; the last chain node takes y_{m-1} and y_m.
        const std::size_t m = children.size();
        int tail = children[m - 1];
        for (std::size_t i = m - 1; i-- > 0;) {
            out.nodes.push_back({NodeKind::TwoJoin, -1, {children[i], tail}, join});
            tail = static_cast<int>(out.nodes.size()) - 1;
        }
        return tail;
    };
    if (md_tree.root >= 0)
        out.root = copy(md_tree.root);
    return out;
}

int modular_width(const SubstitutionTree& tree)
{
    int width = 0;
    for (int x : tree.post_order())
        if (tree.node(x).kind == NodeKind::Prime)
            width = std::max(width, static_cast<int>(tree.node(x).children.size()));
    return width;
}

int pseudo_modular_width(const SubstitutionTree& tree)
{
    int width = 2;
    for (int x : tree.post_order()) {
        const auto& node = tree.node(x);
        if (node.kind != NodeKind::Parallel && node.kind != NodeKind::Leaf)
            width = std::max(width, static_cast<int>(node.children.size()));
    }
    return width;
}

bool is_md_tree(const SubstitutionTree& tree)
{
    for (int x : tree.post_order()) {
        const auto& node = tree.node(x);
        if (node.kind == NodeKind::TwoJoin || !node_shape_ok(node))
            return false;
        for (int c : node.children) {
            NodeKind ck = tree.node(c).kind;
            if ((node.kind == NodeKind::Series || node.kind == NodeKind::Parallel) && ck == node.kind)
                return false;
        }
    }
    return true;
}

bool is_pmd_tree(const SubstitutionTree& tree)
{
    for (int x : tree.post_order()) {
        const auto& node = tree.node(x);
        if (node.kind == NodeKind::Series || !node_shape_ok(node))
            return false;
        if (node.kind == NodeKind::Parallel)
            for (int c : node.children)
                if (tree.node(c).kind == NodeKind::Parallel)
                    return false;
    }
    return true;
}

std::string dump_tree(const SubstitutionTree& tree, const Graph& graph)
{
    std::ostringstream out;
    std::function<void(int, int)> dump = [&](int x, int depth) {
        const auto& node = tree.node(x);
        out << std::string(2 * depth, ' ') << to_string(node.kind);
        if (node.kind == NodeKind::Leaf) {
            out << ' ' << graph.label(node.vertex) << '\n';
            return;
        }
        out << " children=" << node.children.size() << " quotient=[";
        bool first = true;
        for (std::size_t i = 0; i < node.quotient.size(); ++i)
            for (std::size_t j = i + 1; j < node.quotient.size(); ++j)
                if (node.quotient[i][j]) {
                    out << (first ? "" : " ") << i << '-' << j;
                    first = false;
                }
        out << "]\n";
        for (int c : node.children)
            dump(c, depth + 1);
    };
    if (tree.root >= 0)
        dump(tree.root, 0);
    return out.str();
}

}  // namespace lcr
