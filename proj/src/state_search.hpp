#pragma once

// Encoding of colorings as mixed-radix integers and the two breadth-first drivers
// (OpenMP level-synchronous and serial FIFO) shared by the exact solvers.

#include "lcr/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <unordered_map>
#include <utility>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace lcr::detail {

using StateCode = std::uint64_t;

/// Mixed-radix code over the list positions of a fixed vertex subset.
class StateSpace {
public:
    StateSpace(const Instance& instance, VertexSet vertices)
        : instance_(&instance), vertices_(std::move(vertices)), position_(instance.size())
    {
        unsigned __int128 product = 1;
        for (Vertex v : vertices_) {
            radix_.push_back(static_cast<StateCode>(product));
            const auto& list = instance.list(v);
            position_[v].assign(instance.color_count(), -1);
            for (std::size_t i = 0; i < list.size(); ++i)
                position_[v][list[i]] = static_cast<int>(i);
            product *= std::max<std::size_t>(list.size(), 1);
            if (product >> 63)
                encodable_ = false;
        }
        size_ = encodable_ ? static_cast<StateCode>(product) : 0;
    }

    bool encodable() const { return encodable_; }
    /// Number of codes; 0 when not encodable.
    StateCode size() const { return size_; }
    const VertexSet& vertices() const { return vertices_; }

    StateCode encode(const Coloring& f) const
    {
        StateCode code = 0;
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            code += radix_[i] * static_cast<StateCode>(position_[vertices_[i]][f[vertices_[i]]]);
        return code;
    }

    /// Writes the colors of the encoded vertices into `f`.
    void decode(StateCode code, Coloring& f) const
    {
        for (std::size_t i = vertices_.size(); i-- > 0;) {
            const Vertex v = vertices_[i];
            const StateCode digit = code / radix_[i];
            code -= digit * radix_[i];
            f[v] = instance_->list(v)[digit];
        }
    }

    /// Code change when vertex number `i` (in vertices()) moves from color `from` to `to`.
    StateCode with_color(StateCode code, std::size_t i, Color from, Color to) const
    {
        const Vertex v = vertices_[i];
        return code - radix_[i] * static_cast<StateCode>(position_[v][from]) +
               radix_[i] * static_cast<StateCode>(position_[v][to]);
    }

private:
    const Instance* instance_;
    VertexSet vertices_;
    std::vector<std::vector<int>> position_;
    std::vector<StateCode> radix_;
    bool encodable_ = true;
    StateCode size_ = 0;
};

struct SearchResult {
    bool found = false;
    bool capped = false;
    std::uint64_t explored = 0;
    std::vector<StateCode> path;
};

/// Expand(code, scratch coloring, out children).
using Expander = std::function<void(StateCode, Coloring&, std::vector<StateCode>&)>;

inline std::vector<StateCode> trace_path(const std::unordered_map<StateCode, StateCode>& parent,
                                         StateCode start, StateCode target)
{
    std::vector<StateCode> path{target};
    while (path.back() != start)
        path.push_back(parent.at(path.back()));
    std::reverse(path.begin(), path.end());
    return path;
}

/// Level-synchronous search. Each level is expanded in parallel; a newly discovered
/// state keeps the smallest parent code, so results do not depend on scheduling.
inline SearchResult bfs_levels(StateCode start, StateCode target, const Expander& expand,
                               int scratch_size, std::uint64_t cap, int threads)
{
    SearchResult result;
    std::unordered_map<StateCode, StateCode> parent{{start, start}};
    std::vector<StateCode> frontier{start};
    bool found = start == target;

    while (!found && !frontier.empty()) {
        std::vector<std::pair<StateCode, StateCode>> discovered;
        const auto count = static_cast<std::int64_t>(frontier.size());
#if defined(_OPENMP)
        const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(team)
#endif
        {
            std::vector<std::pair<StateCode, StateCode>> local;
            std::vector<StateCode> children;
            Coloring scratch(scratch_size, 0);
#if defined(_OPENMP)
#pragma omp for schedule(dynamic, 64) nowait
#endif
            for (std::int64_t i = 0; i < count; ++i) {
                children.clear();
                expand(frontier[i], scratch, children);
                for (StateCode child : children)
                    if (parent.find(child) == parent.end())
                        local.emplace_back(child, frontier[i]);
            }
#if defined(_OPENMP)
#pragma omp critical(lcr_bfs_merge)
#endif
            discovered.insert(discovered.end(), local.begin(), local.end());
        }

        std::sort(discovered.begin(), discovered.end());
        frontier.clear();
        for (std::size_t i = 0; i < discovered.size(); ++i) {
            if (i > 0 && discovered[i].first == discovered[i - 1].first)
                continue;
            parent.emplace(discovered[i].first, discovered[i].second);
            frontier.push_back(discovered[i].first);
            found = found || discovered[i].first == target;
        }
        if (parent.size() > cap) {
            result.capped = true;
            result.explored = parent.size();
            return result;
        }
    }

    result.explored = parent.size();
    result.found = found;
    if (found)
        result.path = trace_path(parent, start, target);
    return result;
}

/// Plain FIFO search; `visit` sees every discovered state once.
inline SearchResult bfs_serial(StateCode start, StateCode target, const Expander& expand,
                               int scratch_size, std::uint64_t cap,
                               const std::function<void(StateCode)>& visit = nullptr)
{
    SearchResult result;
    std::unordered_map<StateCode, StateCode> parent{{start, start}};
    std::deque<StateCode> queue{start};
    std::vector<StateCode> children;
    Coloring scratch(scratch_size, 0);
    if (visit)
        visit(start);
    bool found = start == target;

    while (!found && !queue.empty()) {
        const StateCode code = queue.front();
        queue.pop_front();
        children.clear();
        expand(code, scratch, children);
        for (StateCode child : children) {
            if (!parent.emplace(child, code).second)
                continue;
            if (visit)
                visit(child);
            if (parent.size() > cap) {
                result.capped = true;
                result.explored = parent.size();
                return result;
            }
            if (child == target) {
                found = true;
                break;
            }
            queue.push_back(child);
        }
    }

    result.explored = parent.size();
    result.found = found;
    if (found)
        result.path = trace_path(parent, start, target);
    return result;
}

}  // namespace lcr::detail
