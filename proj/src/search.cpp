#include "lcr/solver.hpp"
#include "state_search.hpp"

#include <chrono>
#include <cstdlib>
#include <queue>
#include <unordered_map>

namespace lcr {

using detail::StateCode;
using detail::StateSpace;

namespace {

VertexSet all_vertices(const Instance& instance)
{
    VertexSet out(instance.size());
    for (Vertex v = 0; v < instance.size(); ++v)
        out[v] = v;
    return out;
}

// Children of a full coloring: every single-vertex recoloring that stays proper.
detail::Expander recolor_moves(const Instance& instance, const StateSpace& space)
{
    return [&instance, &space](StateCode code, Coloring& f, std::vector<StateCode>& out) {
        space.decode(code, f);
        const Graph& g = instance.graph();
        for (Vertex v = 0; v < g.size(); ++v)
            for (Color c : instance.list(v)) {
                if (c == f[v])
                    continue;
                bool free = true;
                for (Vertex w : g.neighbors(v))
                    if (f[w] == c) {
                        free = false;
                        break;
                    }
                if (free)
                    out.push_back(space.with_color(code, static_cast<std::size_t>(v), f[v], c));
            }
    };
}

ReconfigurationSequence decode_path(const StateSpace& space, const std::vector<StateCode>& path,
                                    int size)
{
    ReconfigurationSequence sequence;
    Coloring f(size, 0);
    for (StateCode code : path) {
        space.decode(code, f);
        sequence.colorings.push_back(f);
    }
    return sequence;
}

SolveReport too_large(const Instance& instance, std::uint64_t explored)
{
    SolveReport report;
    report.verdict = Verdict::TooLarge;
    report.stats.states_explored = explored;
    report.stats.vertices_before = report.stats.vertices_after = instance.size();
    report.stats.components = 1;
    return report;
}

SolveReport from_search(const Instance& instance, const StateSpace& space,
                        const detail::SearchResult& result)
{
    if (result.capped)
        return too_large(instance, result.explored);
    SolveReport report;
    report.verdict = result.found ? Verdict::Yes : Verdict::No;
    if (result.found)
        report.sequence = decode_path(space, result.path, instance.size());
    report.stats.states_explored = result.explored;
    report.stats.vertices_before = report.stats.vertices_after = instance.size();
    report.stats.components = 1;
    return report;
}

}  // namespace

const char* to_string(Verdict verdict)
{
    switch (verdict) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::TooLarge: return "too-large";
    }
    return "?";
}

std::uint64_t default_state_cap()
{
    if (const char* env = std::getenv("LCR_STATE_CAP")) {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && value >= 1)
            return value;
    }
    return SolveOptions{}.state_cap;
}

SolveReport brute_force_reachable(const Instance& instance, const SolveOptions& options)
{
    const StateSpace space(instance, all_vertices(instance));
    if (!space.encodable())
        return too_large(instance, 0);
    const auto result =
        detail::bfs_levels(space.encode(instance.initial()), space.encode(instance.target()),
                           recolor_moves(instance, space), instance.size(), options.state_cap,
                           options.threads);
    return from_search(instance, space, result);
}

SolveReport brute_force_reachable_serial(const Instance& instance, const SolveOptions& options,
                                         const std::function<void(const Coloring&)>& visit)
{
    const StateSpace space(instance, all_vertices(instance));
    if (!space.encodable())
        return too_large(instance, 0);
    std::function<void(StateCode)> on_state;
    Coloring seen(instance.size(), 0);
    if (visit)
        on_state = [&](StateCode code) {
            space.decode(code, seen);
            visit(seen);
        };
    const auto result =
        detail::bfs_serial(space.encode(instance.initial()), space.encode(instance.target()),
                           recolor_moves(instance, space), instance.size(), options.state_cap,
                           on_state);
    return from_search(instance, space, result);
}

SolveReport shortest_weighted(const Instance& instance, const SolveOptions& options)
{
    const StateSpace space(instance, all_vertices(instance));
    if (!space.encodable())
        return too_large(instance, 0);

    const StateCode start = space.encode(instance.initial());
    const StateCode target = space.encode(instance.target());
    const auto moves = recolor_moves(instance, space);

    struct Label {
        std::int64_t distance;
        StateCode parent;
        bool settled;
    };
    std::unordered_map<StateCode, Label> labels{{start, {0, start, false}}};
    using Entry = std::pair<std::int64_t, StateCode>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    queue.emplace(0, start);

    Coloring f(instance.size(), 0), g(instance.size(), 0);
    std::vector<StateCode> children;
    bool found = false;
    while (!queue.empty()) {
        const auto [distance, code] = queue.top();
        queue.pop();
        Label& label = labels[code];
        if (label.settled || distance > label.distance)
            continue;
        label.settled = true;
        if (code == target) {
            found = true;
            break;
        }
        children.clear();
        moves(code, f, children);
        for (StateCode child : children) {
            space.decode(child, g);
            Vertex moved = 0;
            while (f[moved] == g[moved])
                ++moved;
            const std::int64_t next = distance + instance.weight(moved);
            auto [it, inserted] = labels.try_emplace(child, Label{next, code, false});
            if (!inserted) {
                if (it->second.settled || next >= it->second.distance)
                    continue;
                it->second = {next, code, false};
            }
            queue.emplace(next, child);
        }
        if (labels.size() > options.state_cap)
            return too_large(instance, labels.size());
    }

    SolveReport report;
    report.stats.states_explored = labels.size();
    report.stats.vertices_before = report.stats.vertices_after = instance.size();
    report.stats.components = 1;
    if (!found) {
        report.verdict = Verdict::No;
        report.length = kInfiniteLength;
        return report;
    }
    std::vector<StateCode> path{target};
    while (path.back() != start)
        path.push_back(labels.at(path.back()).parent);
    std::reverse(path.begin(), path.end());
    report.verdict = Verdict::Yes;
    report.length = labels.at(target).distance;
    report.sequence = decode_path(space, path, instance.size());
    return report;
}

namespace {

// Searches cover colorings; vertices outside the cover are implicit.
class CoverSearch {
public:
    CoverSearch(const Instance& instance, const VertexCover& cover)
        : instance_(instance), space_(instance, cover), in_cover_(instance.size(), false)
    {
        for (Vertex v : cover)
            in_cover_[v] = true;
    }

    const StateSpace& space() const { return space_; }

    // Some color of L(x) avoids the neighbors' colors in f and, if given, `also`.
    bool has_free_color(Vertex x, const Coloring& f, Color also) const
    {
        for (Color c : instance_.list(x)) {
            if (c == also)
                continue;
            bool used = false;
            for (Vertex w : instance_.graph().neighbors(x))
                if (f[w] == c) {
                    used = true;
                    break;
                }
            if (!used)
                return true;
        }
        return false;
    }

    Color free_color(Vertex x, const Coloring& f, Color also) const
    {
        for (Color c : instance_.list(x)) {
            if (c == also)
                continue;
            bool used = false;
            for (Vertex w : instance_.graph().neighbors(x))
                if (f[w] == c)
                    used = true;
            if (!used)
                return c;
        }
        return -1;
    }

    detail::Expander moves() const
    {
        return [this](StateCode code, Coloring& f, std::vector<StateCode>& out) {
            space_.decode(code, f);
            const Graph& g = instance_.graph();
            const VertexSet& cover = space_.vertices();
            for (std::size_t i = 0; i < cover.size(); ++i) {
                const Vertex u = cover[i];
                for (Color c : instance_.list(u)) {
                    if (c == f[u])
                        continue;
                    bool ok = true;
                    for (Vertex w : g.neighbors(u)) {
                        ok = in_cover_[w] ? f[w] != c : has_free_color(w, f, c);
                        if (!ok)
                            break;
                    }
                    if (ok)
                        out.push_back(space_.with_color(code, i, f[u], c));
                }
            }
        };
    }

    // Expands a path of cover colorings into a full recoloring sequence.
    ReconfigurationSequence expand_path(const std::vector<StateCode>& path) const
    {
        const Graph& g = instance_.graph();
        ReconfigurationSequence sequence;
        Coloring f = instance_.initial();
        sequence.colorings.push_back(f);
        Coloring next(instance_.size(), 0);
        for (std::size_t step = 1; step < path.size(); ++step) {
            next = f;
            space_.decode(path[step], next);
            const VertexSet moved = coloring_difference(f, next);
            const Vertex u = moved.front();
            for (Vertex x : g.neighbors(u))
                if (!in_cover_[x] && f[x] == next[u]) {
                    f[x] = free_color(x, f, next[u]);
                    sequence.colorings.push_back(f);
                }
            f[u] = next[u];
            sequence.colorings.push_back(f);
        }
        for (Vertex x = 0; x < instance_.size(); ++x)
            if (!in_cover_[x] && f[x] != instance_.target()[x]) {
                f[x] = instance_.target()[x];
                sequence.colorings.push_back(f);
            }
        return sequence;
    }

private:
    const Instance& instance_;
    StateSpace space_;
    std::vector<bool> in_cover_;
};

}  // namespace

SolveReport cover_reachable(const Instance& instance, const VertexCover& cover,
                            const SolveOptions& options)
{
    if (!is_vertex_cover(instance.graph(), cover))
        throw InvalidInput("cover_reachable: the given set is not a vertex cover");
    const CoverSearch search(instance, cover);
    const StateSpace& space = search.space();
    if (!space.encodable())
        return too_large(instance, 0);

    const auto result =
        detail::bfs_levels(space.encode(instance.initial()), space.encode(instance.target()),
                           search.moves(), instance.size(), options.state_cap, options.threads);
    if (result.capped)
        return too_large(instance, result.explored);

    SolveReport report;
    report.verdict = result.found ? Verdict::Yes : Verdict::No;
    if (result.found)
        report.sequence = search.expand_path(result.path);
    report.stats.states_explored = result.explored;
    report.stats.vertices_before = report.stats.vertices_after = instance.size();
    report.stats.components = 1;
    return report;
}

}  // namespace lcr
