#include "lcr/kernel_mw.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace lcr {

bool identical_check(const Instance& instance, const VertexSet& h1, const VertexSet& h2,
                     const VertexSet& phi)
{
    const Graph& g = instance.graph();
    const int n = g.size();
    if (h1.size() != h2.size() || phi.size() != h1.size())
        throw InvalidInput("identical_check: H1, H2 and phi must have equal sizes");

    std::vector<int> in_h1(n, 0), in_h2(n, 0);
    for (Vertex v : h1) {
        if (v < 0 || v >= n || in_h1[v]++)
            throw InvalidInput("identical_check: malformed H1");
    }
    for (Vertex v : h2) {
        if (v < 0 || v >= n || in_h2[v]++ || in_h1[v])
            throw InvalidInput("identical_check: H2 malformed or not disjoint from H1");
    }
    {
        VertexSet image = phi, expected = h2;
        std::sort(image.begin(), image.end());
        std::sort(expected.begin(), expected.end());
        if (image != expected)
            throw InvalidInput("identical_check: phi is not a bijection onto H2");
    }

    for (std::size_t i = 0; i < h1.size(); ++i) {
        for (std::size_t j = i + 1; j < h1.size(); ++j)
            if (g.has_edge(h1[i], h1[j]) != g.has_edge(phi[i], phi[j]))
                return false;

        VertexSet out1, out2;
        for (Vertex w : g.neighbors(h1[i]))
            if (!in_h1[w])
                out1.push_back(w);
        for (Vertex w : g.neighbors(phi[i]))
            if (!in_h2[w])
                out2.push_back(w);
        if (out1 != out2)
            return false;

        if (instance.assignment(h1[i]) != instance.assignment(phi[i]))
            return false;
    }
    return true;
}

std::string IdMatrix::serialize() const
{
    std::string out;
    auto put = [&](std::int32_t value) {
        out.append(reinterpret_cast<const char*>(&value), sizeof value);
    };
    put(width);
    out.append(adjacency.begin(), adjacency.end());
    for (const auto& entry : assignments) {
        if (!entry) {
            out.push_back('\0');
            continue;
        }
        out.push_back('\1');
        put(static_cast<std::int32_t>(entry->list.size()));
        for (Color c : entry->list)
            put(c);
        put(entry->initial);
        put(entry->target);
    }
    return out;
}

VertexSet in_label_order(const Graph& graph, VertexSet vertices)
{
    std::sort(vertices.begin(), vertices.end(),
              [&](Vertex a, Vertex b) { return graph.precedes(a, b); });
    return vertices;
}

IdMatrix id_matrix(const Instance& instance, const VertexSet& node_vertices, int width)
{
    const Graph& g = instance.graph();
    const VertexSet ordered = in_label_order(g, node_vertices);
    const int p = static_cast<int>(ordered.size());
    if (width < p)
        throw InvalidInput("id_matrix: width smaller than the node's vertex count");

    IdMatrix m;
    m.width = width;
    m.adjacency.assign(static_cast<std::size_t>(width) * width, 0);
    m.assignments.resize(width);
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j)
            if (i != j && g.has_edge(ordered[i], ordered[j]))
                m.adjacency[i * width + j] = 1;
        m.assignments[i] = instance.assignment(ordered[i]);
    }
    return m;
}

IdMatrix id_matrix(const Instance& instance, const SubstitutionTree& tree, int node, int width)
{
    return id_matrix(instance, tree.vertices_of(node), width);
}

namespace {

class MwKernelizer {
public:
    explicit MwKernelizer(const Instance& instance)
        : instance_(instance),
          tree_(md_to_pmd(compute_md_tree(instance.graph()))),
          parent_(tree_.nodes.size(), -1)
    {
        for (int x = 0; x < static_cast<int>(tree_.nodes.size()); ++x)
            for (int c : tree_.nodes[x].children)
                parent_[c] = x;
    }

    MwKernel run()
    {
        const int width = pseudo_modular_width(tree_);
        for (int x : tree_.post_order())
            if (tree_.nodes[x].kind == NodeKind::Parallel)
                reduce_parallel_node(x);

        std::vector<bool> removed(instance_.size(), false);
        for (const auto& record : log_)
            for (Vertex v : record.image)
                removed[v] = true;
        VertexSet kept;
        for (Vertex v = 0; v < instance_.size(); ++v)
            if (!removed[v])
                kept.push_back(v);
        return {restrict(instance_, kept), kept, std::move(log_), width};
    }

private:
    void reduce_parallel_node(int x)
    {
        while (remove_one_duplicate(x)) {
        }
        auto& node = tree_.nodes[x];
        if (node.children.size() == 1)
            contract_into_child(x);
    }

    bool remove_one_duplicate(int x)
    {
        auto& node = tree_.nodes[x];
        std::vector<VertexSet> child_vertices;
        int width = 0;
        for (int c : node.children) {
            child_vertices.push_back(tree_.vertices_of(c));
            width = std::max(width, static_cast<int>(child_vertices.back().size()));
        }

        std::unordered_map<std::string, std::size_t> first_with_signature;
        for (std::size_t i = 0; i < node.children.size(); ++i) {
            auto signature = id_matrix(instance_, child_vertices[i], width).serialize();
            auto [it, inserted] = first_with_signature.emplace(std::move(signature), i);
            if (inserted)
                continue;

            const std::size_t keeper = it->second;
            ReductionRecord record;
            record.source = in_label_order(instance_.graph(), child_vertices[keeper]);
            record.image = in_label_order(instance_.graph(), child_vertices[i]);
            log_.push_back(std::move(record));

            node.children.erase(node.children.begin() + static_cast<std::ptrdiff_t>(i));
            node.quotient.pop_back();
            for (auto& row : node.quotient)
                row.pop_back();
            return true;
        }
        return false;
    }

    // x keeps the structure of its only child y.
    void contract_into_child(int x)
    {
        const int y = tree_.nodes[x].children.front();
        const int p = parent_[x];
        parent_[y] = p;
        if (p < 0) {
            tree_.root = y;
            return;
        }
        for (int& c : tree_.nodes[p].children)
            if (c == x)
                c = y;
    }

    const Instance& instance_;
    SubstitutionTree tree_;
    std::vector<int> parent_;
    ReplayLog log_;
};

}  // namespace

MwKernel kernelize_mw(const Instance& instance)
{
    if (!instance.graph().is_connected())
        throw InvalidInput("kernelize_mw: graph must be connected");
    if (instance.size() == 0)
        return {instance, {}, {}, 2};
    return MwKernelizer(instance).run();
}

MwKernel kernelize_mw_components(const Instance& instance)
{
    VertexSet kept;
    ReplayLog log;
    int width = 2;
    for (const VertexSet& component : instance.graph().connected_components()) {
        MwKernel part = kernelize_mw(restrict(instance, component));
        width = std::max(width, part.pseudo_modular_width);
        for (Vertex v : part.kept)
            kept.push_back(component[v]);
        for (auto& record : part.log) {
            for (Vertex& v : record.source)
                v = component[v];
            for (Vertex& v : record.image)
                v = component[v];
            log.push_back(std::move(record));
        }
    }
    std::sort(kept.begin(), kept.end());
    Instance kernel = restrict(instance, kept);
    return {std::move(kernel), std::move(kept), std::move(log), width};
}

double kernel_bound_log2(int i, int k, int width_bound)
{
    if (i < 1)
        throw std::invalid_argument("kernel_bound: i must be at least 1");
    if (k < 1 || width_bound < 2)
        throw std::invalid_argument("kernel_bound: need k >= 1 and W >= 2");

    // log2 g(i) = log2 W + log2 g + g^2 / 2 + g (k + 2 log2 k), with g = g(i-1)
    const double per_vertex = k + 2.0 * std::log2(static_cast<double>(k));
    double log_g = 0.0;
    for (int step = 2; step <= i; ++step) {
        const double g = std::exp2(log_g);
        log_g = std::log2(static_cast<double>(width_bound)) + log_g + g * g / 2.0 + g * per_vertex;
    }
    return log_g;
}

double kernel_bound(int i, int k, int width_bound)
{
    return std::exp2(kernel_bound_log2(i, k, width_bound));
}

}  // namespace lcr
