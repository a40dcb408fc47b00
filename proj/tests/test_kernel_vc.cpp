#include "support.hpp"

#include "lcr/kernel_vc.hpp"

#include <doctest.h>

using namespace lcr;
using namespace testing;

namespace {

int oracle_min_cover(const Graph& g)
{
    int best = g.size();
    for (std::uint32_t mask = 0; mask < (1u << g.size()); ++mask) {
        bool covers = true;
        for (auto [u, v] : g.edges())
            covers = covers && ((mask >> u & 1) || (mask >> v & 1));
        if (covers)
            best = std::min(best, __builtin_popcount(mask));
    }
    return best;
}

std::vector<Instance> weighted_corpus(int count, std::uint64_t seed0)
{
    std::vector<Instance> out;
    const lcr::Family families[] = {lcr::Family::Split, lcr::Family::Random, lcr::Family::Cograph};
    for (int i = 0; i < count; ++i) {
        lcr::GeneratorConfig config;
        config.family = families[i % 3];
        config.n = 2 + i % 4;
        config.twins = i % 4;
        config.k = 2 + (i / 3) % 2;
        config.max_weight = 3;
        config.seed = seed0 + i;
        config.mode = i % 2 ? lcr::PairMode::Independent : lcr::PairMode::Reachable;
        config.edge_probability = 0.25;
        out.push_back(generated(config));
    }
    return out;
}

}  // namespace

TEST_CASE("min_vertex_cover examples")
{
    CHECK(min_vertex_cover(Graph(4), 0) == VertexCover{});
    const Graph p3(ordered_labels(3), {{0, 1}, {1, 2}});
    CHECK(min_vertex_cover(p3, 1) == VertexCover{1});
    const Graph k3(ordered_labels(3), {{0, 1}, {1, 2}, {0, 2}});
    CHECK_FALSE(min_vertex_cover(k3, 1).has_value());
    const auto two = min_vertex_cover(k3, 2);
    REQUIRE(two.has_value());
    CHECK(two->size() == 2);
    CHECK(is_vertex_cover(k3, *two));
}

TEST_CASE("min_vertex_cover finds a cover exactly when one within the bound exists")
{
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 9);
        const Graph g = random_connected_graph(rng, n, 0.3);
        const int tau = oracle_min_cover(g);
        for (int bound = std::max(0, tau - 1); bound <= tau + 1; ++bound) {
            const auto cover = min_vertex_cover(g, bound);
            REQUIRE(cover.has_value() == (bound >= tau));
            if (cover) {
                CHECK(static_cast<int>(cover->size()) <= bound);
                CHECK(is_vertex_cover(g, *cover));
            }
        }
        const VertexCover chosen = choose_vertex_cover(g);
        CHECK(is_vertex_cover(g, chosen));
    }
}

TEST_CASE("split graph recognition")
{
    const Graph c4(ordered_labels(4), {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK_FALSE(split_partition(c4).has_value());
    const Graph two_k2(ordered_labels(4), {{0, 1}, {2, 3}});
    CHECK_FALSE(split_partition(two_k2).has_value());
    const Graph star(ordered_labels(4), {{0, 1}, {0, 2}, {0, 3}});
    const auto star_split = split_partition(star);
    REQUIRE(star_split.has_value());
    CHECK(star_split->clique == VertexSet{0});
    CHECK(star_split->independent == VertexSet{1, 2, 3});
    CHECK(split_partition(Graph(1))->clique.empty());

    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        lcr::GeneratorConfig config;
        config.family = lcr::Family::Split;
        config.n = 2 + static_cast<int>(seed % 8);
        config.k = 2 + static_cast<int>(seed % 3);
        config.seed = seed;
        const Instance inst = generated(config);
        const auto split = split_partition(inst.graph());
        REQUIRE(split.has_value());
        const Graph& g = inst.graph();
        for (Vertex u : split->clique)
            for (Vertex v : split->clique)
                if (u != v)
                    CHECK(g.has_edge(u, v));
        for (Vertex u : split->independent)
            for (Vertex v : split->independent)
                CHECK_FALSE(g.has_edge(u, v));
        const VertexCover cover = choose_vertex_cover(g);
        CHECK(is_vertex_cover(g, cover));
        CHECK(static_cast<int>(cover.size()) <= inst.color_count());
    }
}

TEST_CASE("kernelize_vc examples")
{
    // Path 0-1-2-3 with cover {1, 2}: independent vertices 0 and 3 have different neighbors.
    const Instance path = make_instance(4, {{0, 1}, {1, 2}, {2, 3}}, {{0, 1}, {1}, {0}, {0, 1}},
                                        {0, 1, 0, 1}, {0, 1, 0, 1});
    const VcKernel unchanged = kernelize_vc(path, {1, 2});
    CHECK(unchanged.instance == path);
    CHECK(unchanged.log.empty());
    CHECK(unchanged.cover == VertexCover{1, 2});

    // Star with three identical leaves.
    const Instance star = make_instance(4, {{0, 1}, {0, 2}, {0, 3}}, {{0}, {1, 2}, {1, 2}, {1, 2}},
                                        {0, 1, 1, 1}, {0, 2, 2, 2});
    const VcKernel merged = kernelize_vc(star, {0});
    CHECK(merged.instance.size() == 2);
    CHECK(merged.kept == VertexSet{0, 1});
    CHECK(merged.instance.weight(1) == 3);
    REQUIRE(merged.log.size() == 2);
    CHECK(merged.log[0].into == 1);
    CHECK(merged.log[0].absorbed == 2);
    CHECK(merged.log[0].weight == 1);
    CHECK(merged.log[1].absorbed == 3);
    CHECK(oracle::opt(star) == 3);
    CHECK(oracle::opt(merged.instance) == 3);

    CHECK_THROWS_AS(kernelize_vc(star, {1}), InvalidInput);
}

TEST_CASE("two identical weighted vertices merge and keep the optimum")
{
    // Cover vertex 0 must move away from color 1 before 1 and 2 can take it.
    const Instance inst = make_instance(3, {{0, 1}, {0, 2}}, {{1, 2}, {0, 1}, {0, 1}}, {1, 0, 0},
                                        {2, 1, 1}, {4, 2, 5});
    const VcKernel kernel = kernelize_vc(inst, {0});
    REQUIRE(kernel.instance.size() == 2);
    CHECK(kernel.instance.weight(1) == 7);
    CHECK(oracle::opt(inst) == 11);
    CHECK(oracle::opt(kernel.instance) == 11);

    const ReplayLog replay = as_replay_log(kernel.log);
    REQUIRE(replay.size() == 1);
    CHECK(replay[0].source == VertexSet{1});
    CHECK(replay[0].image == VertexSet{2});
    CHECK(replay[0].weight_merge);
}

TEST_CASE("kernel bound values")
{
    CHECK(vc_kernel_bound(2, 2) == 64);
    CHECK(vc_kernel_bound(0, 1) == 2);
    CHECK(vc_kernel_bound(3, 3) == 8 * 8 * 9);
    CHECK_THROWS_AS(vc_kernel_bound(60, 3), std::overflow_error);
}

TEST_CASE("kernelize_vc preserves the optimum, the cover, and the size bound")
{
    int merges = 0;
    for (const Instance& inst : weighted_corpus(180, 31000)) {
        const VertexCover cover = choose_vertex_cover(inst.graph());
        const VcKernel kernel = kernelize_vc(inst, cover);
        merges += static_cast<int>(kernel.log.size());
        REQUIRE(oracle::opt(inst) == oracle::opt(kernel.instance));
        REQUIRE(oracle::reachable(inst.with_weights({})) ==
                oracle::reachable(kernel.instance.with_weights({})));
        CHECK(is_vertex_cover(kernel.instance.graph(), kernel.cover));
        CHECK(kernel.cover.size() == cover.size());
        for (std::size_t i = 0; i < cover.size(); ++i)
            CHECK(kernel.kept[kernel.cover[i]] == cover[i]);
        for (const auto& merge : kernel.log) {
            CHECK_FALSE(std::binary_search(cover.begin(), cover.end(), merge.into));
            CHECK_FALSE(std::binary_search(cover.begin(), cover.end(), merge.absorbed));
        }
        std::int64_t before = 0, after = 0;
        for (auto w : inst.weights())
            before += w;
        for (auto w : kernel.instance.weights())
            after += w;
        CHECK(before == after);
        const int independent = kernel.instance.size() - static_cast<int>(kernel.cover.size());
        CHECK(static_cast<std::uint64_t>(independent) <=
              vc_kernel_bound(static_cast<int>(cover.size()), inst.color_count()));
        CHECK(kernelize_vc(kernel.instance, kernel.cover).log.empty());
    }
    CHECK(merges > 50);
}

TEST_CASE("independent side stays within the bound for small covers")
{
    int checked = 0;
    for (std::uint64_t seed = 1; checked < 300; ++seed) {
        lcr::GeneratorConfig config;
        config.family = lcr::Family::Split;
        config.n = 2 + static_cast<int>(seed % 5);
        config.twins = static_cast<int>(seed % 8);
        config.k = 2 + static_cast<int>(seed % 2);
        config.seed = 44000 + seed;
        const Instance inst = generated(config);
        const VertexCover cover = choose_vertex_cover(inst.graph());
        if (cover.size() > 3)
            continue;
        ++checked;
        const VcKernel kernel = kernelize_vc(inst, cover);
        const int independent = kernel.instance.size() - static_cast<int>(cover.size());
        REQUIRE(static_cast<std::uint64_t>(independent) <=
                vc_kernel_bound(static_cast<int>(cover.size()), inst.color_count()));
    }
}
