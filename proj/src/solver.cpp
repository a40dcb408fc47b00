#include "lcr/solver.hpp"
#include "state_search.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace lcr {

bool validate_sequence(const Instance& instance, const ReconfigurationSequence& sequence)
{
    const auto& fs = sequence.colorings;
    if (fs.empty() || fs.front() != instance.initial() || fs.back() != instance.target())
        return false;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (!is_proper_list_coloring(instance.graph(), instance.lists(), fs[i]))
            return false;
        if (i > 0 && !are_adjacent(fs[i - 1], fs[i]))
            return false;
    }
    return true;
}

std::int64_t weighted_length(const Instance& instance, const ReconfigurationSequence& sequence)
{
    std::int64_t total = 0;
    for (std::size_t i = 1; i < sequence.colorings.size(); ++i)
        for (Vertex v : coloring_difference(sequence.colorings[i - 1], sequence.colorings[i]))
            total += instance.weight(v);
    return total;
}

ReconfigurationSequence lift_sequence(const ReconfigurationSequence& kernel_sequence,
                                      const VertexSet& kept, int original_size,
                                      const ReplayLog& log)
{
    std::vector<Coloring> current;
    for (const Coloring& g : kernel_sequence.colorings) {
        if (g.size() != kept.size())
            throw InvalidInput("lift_sequence: coloring does not match the kernel vertex set");
        Coloring f(original_size, -1);
        for (std::size_t i = 0; i < kept.size(); ++i)
            f.at(kept[i]) = g[i];
        current.push_back(std::move(f));
    }

    for (auto record = log.rbegin(); record != log.rend(); ++record) {
        const VertexSet& source = record->source;
        const VertexSet& image = record->image;
        if (source.size() != image.size())
            throw InvalidInput("lift_sequence: malformed reduction record");
        for (Coloring& f : current)
            for (std::size_t j = 0; j < source.size(); ++j) {
                if (f.at(source[j]) < 0 || f.at(image[j]) >= 0)
                    throw InvalidInput("lift_sequence: log is inconsistent with the sequence");
                f[image[j]] = f[source[j]];
            }

        std::vector<Coloring> lifted;
        for (std::size_t i = 0; i < current.size(); ++i) {
            if (i > 0) {
                const VertexSet moved = coloring_difference(current[i - 1], current[i]);
                if (moved.size() == 2) {
                    // moved = {w, phi(w)}: recolor w first, then its copy.
                    auto at = std::find(source.begin(), source.end(), moved[0]);
                    Vertex w = at != source.end() ? moved[0] : moved[1];
                    Coloring between = current[i - 1];
                    between[w] = current[i][w];
                    lifted.push_back(std::move(between));
                }
            }
            lifted.push_back(current[i]);
        }
        current = std::move(lifted);
    }

    for (const Coloring& f : current)
        if (std::find(f.begin(), f.end(), -1) != f.end())
            throw InvalidInput("lift_sequence: log does not account for every removed vertex");
    return {std::move(current)};
}

const char* to_string(Strategy strategy)
{
    switch (strategy) {
    case Strategy::Auto: return "auto";
    case Strategy::Brute: return "brute";
    case Strategy::KernelMw: return "kernel-mw";
    case Strategy::KernelVc: return "kernel-vc";
    case Strategy::Cover: return "cover";
    }
    return "?";
}

std::optional<Strategy> parse_strategy(const std::string& name)
{
    for (Strategy s : {Strategy::Auto, Strategy::Brute, Strategy::KernelMw, Strategy::KernelVc,
                       Strategy::Cover})
        if (name == to_string(s))
            return s;
    return std::nullopt;
}

namespace {

struct ComponentResult {
    SolveReport report;
    int kernel_size = 0;
};

// Lifts a kernel-level report back to the component and records the kernel size.
ComponentResult lifted(SolveReport report, const Instance& component, const VertexSet& kept,
                       const ReplayLog& log)
{
    if (report.sequence)
        report.sequence = lift_sequence(*report.sequence, kept, component.size(), log);
    return {std::move(report), static_cast<int>(kept.size())};
}

ComponentResult solve_component(const Instance& component, Strategy strategy,
                                 Objective objective, const SolveOptions& options)
{
    if (objective == Objective::Shortest) {
        if (strategy == Strategy::Brute)
            return {shortest_weighted(component, options), component.size()};
        VcKernel kernel = kernelize_vc(component, choose_vertex_cover(component.graph()));
        return lifted(shortest_weighted(kernel.instance, options), component, kernel.kept,
                      as_replay_log(kernel.log));
    }

    switch (strategy) {
    case Strategy::Brute:
        return {brute_force_reachable(component, options), component.size()};
    case Strategy::Cover:
        return {cover_reachable(component, choose_vertex_cover(component.graph()), options),
                component.size()};
    case Strategy::KernelVc: {
        VcKernel kernel = kernelize_vc(component, choose_vertex_cover(component.graph()));
        SolveReport report = shortest_weighted(kernel.instance, options);
        report.length.reset();
        return lifted(std::move(report), component, kernel.kept, as_replay_log(kernel.log));
    }
    case Strategy::KernelMw: {
        MwKernel kernel = kernelize_mw(component);
        return lifted(brute_force_reachable(kernel.instance, options), component, kernel.kept,
                      kernel.log);
    }
    case Strategy::Auto: {
        MwKernel kernel = kernelize_mw(component);
        const Instance& reduced = kernel.instance;
        VertexSet everything(reduced.size());
        for (Vertex v = 0; v < reduced.size(); ++v)
            everything[v] = v;
        const detail::StateSpace full(reduced, everything);
        SolveReport report;
        if (full.encodable() && full.size() <= options.state_cap) {
            report = brute_force_reachable(reduced, options);
        } else {
            const VertexCover cover = choose_vertex_cover(reduced.graph());
            const detail::StateSpace projected(reduced, cover);
            report = projected.encodable() && projected.size() <= options.state_cap
                         ? cover_reachable(reduced, cover, options)
                         : brute_force_reachable(reduced, options);
        }
        return lifted(std::move(report), component, kernel.kept, kernel.log);
    }
    }
    throw std::logic_error("unhandled strategy");
}

}  // namespace

SolveReport solve(const Instance& instance, Strategy strategy, Objective objective,
                  const SolveOptions& options)
{
    if (objective == Objective::Shortest &&
        (strategy == Strategy::KernelMw || strategy == Strategy::Cover))
        throw std::invalid_argument(std::string("strategy '") + to_string(strategy) +
                                    "' does not compute shortest lengths");

    const auto started = std::chrono::steady_clock::now();
    std::vector<VertexSet> components;
    if (strategy == Strategy::Brute || instance.size() == 0) {
        VertexSet all(instance.size());
        for (Vertex v = 0; v < instance.size(); ++v)
            all[v] = v;
        components.push_back(std::move(all));
    } else {
        components = instance.graph().connected_components();
    }

    std::vector<ComponentResult> parts(components.size(), {SolveReport{}, 0});
    const auto count = static_cast<std::int64_t>(components.size());
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic) num_threads(options.threads > 0 ? options.threads : 1) if (count > 1)
#endif
    for (std::int64_t i = 0; i < count; ++i) {
        const Instance component = components.size() == 1 ? instance : restrict(instance, components[i]);
        parts[i] = solve_component(component, strategy, objective, options);
    }

    SolveReport report;
    report.stats.vertices_before = instance.size();
    report.stats.components = static_cast<int>(components.size());
    bool any_no = false, any_too_large = false;
    for (const auto& part : parts) {
        report.stats.states_explored += part.report.stats.states_explored;
        report.stats.vertices_after += part.kernel_size;
        any_no = any_no || part.report.verdict == Verdict::No;
        any_too_large = any_too_large || part.report.verdict == Verdict::TooLarge;
    }
    report.verdict = any_no ? Verdict::No : any_too_large ? Verdict::TooLarge : Verdict::Yes;

    if (objective == Objective::Shortest && report.verdict != Verdict::TooLarge) {
        std::int64_t total = 0;
        for (const auto& part : parts)
            if (part.report.verdict == Verdict::Yes)
                total += *part.report.length;
        report.length = any_no ? kInfiniteLength : total;
    }

    if (report.verdict == Verdict::Yes) {
        ReconfigurationSequence combined;
        Coloring f = instance.initial();
        combined.colorings.push_back(f);
        for (std::size_t i = 0; i < components.size(); ++i) {
            const auto& steps = parts[i].report.sequence->colorings;
            for (std::size_t s = 1; s < steps.size(); ++s) {
                for (std::size_t j = 0; j < components[i].size(); ++j)
                    f[components[i][j]] = steps[s][j];
                combined.colorings.push_back(f);
            }
        }
        report.sequence = std::move(combined);
    }

    report.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

}  // namespace lcr
