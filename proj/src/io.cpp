#include "lcr/io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

using nlohmann::json;

namespace lcr {

ColorSet canonical_color_set(std::vector<std::string> used, int k)
{
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    if (static_cast<int>(used.size()) > k)
        throw ParseError("k = " + std::to_string(k) + " but " + std::to_string(used.size()) +
                         " distinct colors are used");
    const std::set<std::string> taken(used.begin(), used.end());
    for (int i = static_cast<int>(used.size()); i < k; ++i) {
        std::string name = "#" + std::to_string(i);
        while (taken.count(name))
            name.insert(name.begin(), '#');
        used.push_back(std::move(name));
    }
    return ColorSet{std::move(used)};
}

namespace {

const json& field(const json& object, const char* name, const std::string& where)
{
    if (!object.is_object())
        throw ParseError(where + ": expected an object");
    auto it = object.find(name);
    if (it == object.end())
        throw ParseError(where + ": missing field \"" + name + "\"");
    return *it;
}

std::string string_field(const json& value, const std::string& where)
{
    if (!value.is_string())
        throw ParseError(where + ": expected a string");
    return value.get<std::string>();
}

}  // namespace

Instance instance_from_json(const json& doc)
{
    const json& k_field = field(doc, "k", "instance");
    if (!k_field.is_number_integer() || k_field.get<long long>() < 1)
        throw ParseError("k: expected a positive integer");
    const int k = k_field.get<int>();

    const json& vertices = field(doc, "vertices", "instance");
    if (!vertices.is_array())
        throw ParseError("vertices: expected an array");

    std::vector<std::string> ids;
    std::vector<std::vector<std::string>> list_names;
    std::vector<std::string> initial_names, target_names;
    std::vector<std::int64_t> weights;
    std::vector<std::string> used;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const std::string where = "vertices[" + std::to_string(i) + "]";
        const json& vertex = vertices[i];
        ids.push_back(string_field(field(vertex, "id", where), where + ".id"));
        const json& list = field(vertex, "list", where);
        if (!list.is_array())
            throw ParseError(where + ".list: expected an array");
        list_names.emplace_back();
        for (std::size_t j = 0; j < list.size(); ++j)
            list_names.back().push_back(
                string_field(list[j], where + ".list[" + std::to_string(j) + "]"));
        initial_names.push_back(string_field(field(vertex, "initial", where), where + ".initial"));
        target_names.push_back(string_field(field(vertex, "target", where), where + ".target"));
        std::int64_t weight = 1;
        if (auto w = vertex.find("weight"); w != vertex.end()) {
            if (!w->is_number_integer() || w->get<long long>() < 1)
                throw ParseError(where + ".weight: expected a positive integer");
            weight = w->get<std::int64_t>();
        }
        weights.push_back(weight);
        used.insert(used.end(), list_names.back().begin(), list_names.back().end());
        used.push_back(initial_names.back());
        used.push_back(target_names.back());
    }

    ColorSet colors = canonical_color_set(used, k);
    std::map<std::string, Color> color_index;
    for (Color c = 0; c < colors.size(); ++c)
        color_index.emplace(colors.names[c], c);
    std::map<std::string, Vertex> vertex_index;
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (!vertex_index.emplace(ids[i], static_cast<Vertex>(i)).second)
            throw ParseError("vertices[" + std::to_string(i) + "].id: duplicate id \"" + ids[i] + "\"");

    ListAssignment lists;
    Coloring initial, target;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        lists.emplace_back();
        for (const auto& name : list_names[i])
            lists.back().push_back(color_index.at(name));
        initial.push_back(color_index.at(initial_names[i]));
        target.push_back(color_index.at(target_names[i]));
    }

    const json& edge_array = field(doc, "edges", "instance");
    if (!edge_array.is_array())
        throw ParseError("edges: expected an array");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < edge_array.size(); ++i) {
        const std::string where = "edges[" + std::to_string(i) + "]";
        const json& e = edge_array[i];
        if (!e.is_array() || e.size() != 2)
            throw ParseError(where + ": expected a pair of vertex ids");
        Vertex ends[2];
        for (int side = 0; side < 2; ++side) {
            const std::string id = string_field(e[side], where);
            auto it = vertex_index.find(id);
            if (it == vertex_index.end())
                throw ParseError(where + ": unknown vertex \"" + id + "\"");
            ends[side] = it->second;
        }
        edges.emplace_back(ends[0], ends[1]);
    }

    try {
        return Instance(Graph(std::move(ids), edges), std::move(colors), std::move(lists),
                        std::move(initial), std::move(target), std::move(weights));
    } catch (const InvalidInput& e) {
        throw ParseError(std::string("instance: ") + e.what());
    }
}

Instance read_instance(std::istream& in)
{
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return instance_from_json(doc);
}

Instance parse_instance(const std::string& text)
{
    std::istringstream in(text);
    return read_instance(in);
}

json instance_to_json(const Instance& instance)
{
    const Graph& g = instance.graph();
    const auto& names = instance.colors().names;
    json vertices = json::array();
    for (Vertex v = 0; v < g.size(); ++v) {
        json list = json::array();
        for (Color c : instance.list(v))
            list.push_back(names[c]);
        json vertex = {{"id", g.label(v)},
                       {"list", std::move(list)},
                       {"initial", names[instance.initial()[v]]},
                       {"target", names[instance.target()[v]]}};
        if (instance.weight(v) != 1)
            vertex["weight"] = instance.weight(v);
        vertices.push_back(std::move(vertex));
    }
    json edges = json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({g.label(u), g.label(v)});
    return {{"k", instance.color_count()}, {"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

ReconfigurationSequence sequence_from_json(const Instance& instance, const json& doc)
{
    const json* steps = nullptr;
    if (doc.is_object() && doc.contains("steps"))
        steps = &doc["steps"];
    else if (doc.is_object() && doc.contains("sequence"))
        steps = &doc["sequence"];
    else if (doc.is_array())
        steps = &doc;
    if (!steps || !steps->is_array())
        throw ParseError("sequence: expected {\"steps\": [...]}");

    ReconfigurationSequence sequence;
    Coloring f = instance.initial();
    sequence.colorings.push_back(f);
    for (std::size_t i = 0; i < steps->size(); ++i) {
        const std::string where = "steps[" + std::to_string(i) + "]";
        const json& step = (*steps)[i];
        const std::string id = string_field(field(step, "vertex", where), where + ".vertex");
        const std::string to = string_field(field(step, "to", where), where + ".to");
        const Vertex v = instance.graph().find(id);
        if (v < 0)
            throw ParseError(where + ".vertex: unknown vertex \"" + id + "\"");
        const Color c = instance.colors().find(to);
        if (c < 0)
            throw ParseError(where + ".to: unknown color \"" + to + "\"");
        f[v] = c;
        sequence.colorings.push_back(f);
    }
    return sequence;
}

json sequence_steps_to_json(const Instance& instance, const ReconfigurationSequence& sequence)
{
    json steps = json::array();
    const auto& fs = sequence.colorings;
    for (std::size_t i = 1; i < fs.size(); ++i)
        for (Vertex v : coloring_difference(fs[i - 1], fs[i]))
            steps.push_back({{"vertex", instance.graph().label(v)},
                             {"to", instance.colors().names[fs[i][v]]}});
    return steps;
}

json replay_log_to_json(const Graph& graph, const ReplayLog& log)
{
    json out = json::array();
    for (const auto& record : log) {
        json removed = json::array();
        json phi = json::object();
        for (std::size_t i = 0; i < record.image.size(); ++i) {
            removed.push_back(graph.label(record.image[i]));
            phi[graph.label(record.source[i])] = graph.label(record.image[i]);
        }
        out.push_back({{"removed", std::move(removed)}, {"phi", std::move(phi)}});
    }
    return out;
}

json merge_log_to_json(const Graph& graph, const MergeLog& log)
{
    json out = json::array();
    for (const auto& merge : log)
        out.push_back({{"into", graph.label(merge.into)},
                       {"absorbed", graph.label(merge.absorbed)},
                       {"weight", merge.weight}});
    return out;
}

json report_to_json(const Instance& instance, const SolveReport& report)
{
    json out;
    out["verdict"] = to_string(report.verdict);
    if (!report.length)
        out["length"] = nullptr;
    else if (*report.length == kInfiniteLength)
        out["length"] = "inf";
    else
        out["length"] = *report.length;
    out["sequence"] = report.sequence ? sequence_steps_to_json(instance, *report.sequence) : json::array();
    out["stats"] = {{"states_explored", report.stats.states_explored},
                    {"vertices_before", report.stats.vertices_before},
                    {"vertices_after", report.stats.vertices_after},
                    {"components", report.stats.components},
                    {"seconds", report.stats.seconds}};
    return out;
}

}  // namespace lcr
