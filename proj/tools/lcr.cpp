// lcr: list coloring reconfiguration solver, kernelizer and instance generator.
//
// Exit codes: solve/shortest 0 = yes, 1 = no, 2 = error or state cap exceeded;
// verify 0 = valid, 1 = invalid, 2 = unreadable input or domain mismatch.

#include "lcr/generators.hpp"
#include "lcr/io.hpp"
#include "lcr/kernel_mw.hpp"
#include "lcr/kernel_vc.hpp"
#include "lcr/modular_decomposition.hpp"
#include "lcr/reduction.hpp"
#include "lcr/solver.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>

#if defined(_OPENMP)
#include <omp.h>
#endif

using nlohmann::json;

namespace {

constexpr int kExitError = 2;

struct CliConfig {
    std::string input;
    std::string second_input;
    std::string strategy = "auto";
    std::string param = "mw";
    std::string out;
    std::string instance_out;
    std::uint64_t cap = 0;
    int jobs = 1;
    bool stats = false;

    std::string family = "random";
    std::string mode = "reachable";
    int n = 6;
    int k = 3;
    int s = 2;
    std::uint64_t seed = 1;
    int max_weight = 1;
    double edge_probability = 0.4;
    int twins = 0;
};

lcr::Instance load_instance(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw lcr::InvalidInput("cannot open " + path);
    return lcr::read_instance(in);
}

void emit(const json& doc, const std::string& path)
{
    if (path.empty() || path == "-") {
        std::cout << doc.dump(2) << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw lcr::InvalidInput("cannot write " + path);
    out << doc.dump(2) << '\n';
}

lcr::SolveOptions solve_options(const CliConfig& config)
{
    lcr::SolveOptions options;
    options.state_cap = config.cap > 0 ? config.cap : lcr::default_state_cap();
    options.threads = config.jobs;
    return options;
}

int run_solve(const CliConfig& config, lcr::Objective objective)
{
    const lcr::Instance instance = load_instance(config.input);
    const auto strategy = lcr::parse_strategy(config.strategy);
    if (!strategy)
        throw lcr::InvalidInput("unknown strategy " + config.strategy);
    const lcr::SolveReport report = lcr::solve(instance, *strategy, objective, solve_options(config));
    emit(lcr::report_to_json(instance, report), config.out);
    if (config.stats)
        std::cerr << "states=" << report.stats.states_explored
                  << " vertices=" << report.stats.vertices_before << "->" << report.stats.vertices_after
                  << " components=" << report.stats.components << " seconds=" << report.stats.seconds
                  << '\n';
    switch (report.verdict) {
    case lcr::Verdict::Yes: return 0;
    case lcr::Verdict::No: return 1;
    case lcr::Verdict::TooLarge: return kExitError;
    }
    return kExitError;
}

int run_kernelize(const CliConfig& config)
{
    const lcr::Instance instance = load_instance(config.input);
    json doc;
    doc["vertices_before"] = instance.size();
    if (config.param == "mw") {
        const lcr::MwKernel kernel = lcr::kernelize_mw_components(instance);
        const int clique = lcr::max_clique_size(kernel.instance.graph());
        doc["instance"] = lcr::instance_to_json(kernel.instance);
        doc["log"] = lcr::replay_log_to_json(instance.graph(), kernel.log);
        doc["vertices_after"] = kernel.instance.size();
        doc["bound"] = {{"kind", "g"},
                        {"clique", clique},
                        {"k", instance.color_count()},
                        {"pmw", kernel.pseudo_modular_width},
                        {"log2", clique >= 1 ? lcr::kernel_bound_log2(clique, instance.color_count(),
                                                                     kernel.pseudo_modular_width)
                                             : 0.0}};
        if (!config.instance_out.empty())
            emit(doc["instance"], config.instance_out);
    } else if (config.param == "vc") {
        const lcr::VertexCover cover = lcr::choose_vertex_cover(instance.graph());
        const lcr::VcKernel kernel = lcr::kernelize_vc(instance, cover);
        json cover_ids = json::array();
        for (lcr::Vertex v : cover)
            cover_ids.push_back(instance.graph().label(v));
        doc["instance"] = lcr::instance_to_json(kernel.instance);
        doc["log"] = lcr::merge_log_to_json(instance.graph(), kernel.log);
        doc["cover"] = cover_ids;
        doc["vertices_after"] = kernel.instance.size();
        json bound = {{"kind", "2^tau*2^k*k^2"},
                      {"tau", cover.size()},
                      {"k", instance.color_count()},
                      {"independent_after", kernel.instance.size() - static_cast<int>(cover.size())}};
        try {
            bound["value"] = lcr::vc_kernel_bound(static_cast<int>(cover.size()), instance.color_count());
        } catch (const std::overflow_error&) {
            bound["value"] = nullptr;
        }
        doc["bound"] = bound;
        if (!config.instance_out.empty())
            emit(doc["instance"], config.instance_out);
    } else {
        throw lcr::InvalidInput("--param must be mw or vc");
    }
    emit(doc, config.out);
    return 0;
}

int run_reduce(const CliConfig& config)
{
    std::ifstream in(config.input);
    if (!in)
        throw lcr::InvalidInput("cannot open " + config.input);
    const lcr::Graph h = lcr::read_edge_list(in);
    emit(lcr::instance_to_json(lcr::reduce_is_to_lcr({h, config.s}).instance), config.out);
    return 0;
}

int run_verify(const CliConfig& config)
{
    const lcr::Instance instance = load_instance(config.input);
    std::ifstream in(config.second_input);
    if (!in)
        throw lcr::InvalidInput("cannot open " + config.second_input);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw lcr::ParseError(std::string("malformed JSON: ") + e.what());
    }
    const auto sequence = lcr::sequence_from_json(instance, doc);
    const bool valid = lcr::validate_sequence(instance, sequence);
    std::cout << (valid ? "valid" : "invalid") << '\n';
    return valid ? 0 : 1;
}

int run_gen(const CliConfig& config)
{
    lcr::GeneratorConfig gen;
    const auto family = lcr::parse_family(config.family);
    const auto mode = lcr::parse_pair_mode(config.mode);
    if (!family)
        throw lcr::InvalidInput("unknown family " + config.family);
    if (!mode)
        throw lcr::InvalidInput("unknown mode " + config.mode);
    gen.family = *family;
    gen.mode = *mode;
    gen.n = config.n;
    gen.k = config.k;
    gen.seed = config.seed;
    gen.max_weight = config.max_weight;
    gen.edge_probability = config.edge_probability;
    gen.twins = config.twins;
    gen.reduction_s = config.s;
    emit(lcr::instance_to_json(lcr::generate_instance(gen)), config.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"List coloring reconfiguration: exact solving, kernelization and instance generation"};
    app.require_subcommand(1);
    CliConfig config;

    auto add_search_options = [&](CLI::App* cmd) {
        cmd->add_option("--out,-o", config.out, "Write the report here instead of stdout");
        cmd->add_option("--cap", config.cap, "State cap (default 10^7 or $LCR_STATE_CAP)");
        cmd->add_option("--jobs,-j", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
        cmd->add_flag("--stats", config.stats, "Print search statistics to stderr");
    };

    auto* solve = app.add_subcommand("solve", "Decide reachability");
    solve->add_option("file", config.input, "Instance JSON")->required();
    solve->add_option("--strategy", config.strategy, "Solving pipeline")
        ->check(CLI::IsMember({"auto", "brute", "kernel-mw", "kernel-vc", "cover"}));
    add_search_options(solve);

    auto* shortest = app.add_subcommand("shortest", "Weighted shortest reconfiguration length");
    shortest->add_option("file", config.input, "Instance JSON")->required();
    shortest->add_option("--strategy", config.strategy, "Solving pipeline")
        ->check(CLI::IsMember({"auto", "brute", "kernel-vc"}));
    add_search_options(shortest);

    auto* kernelize = app.add_subcommand("kernelize", "Compute a kernel and its reduction log");
    kernelize->add_option("file", config.input, "Instance JSON")->required();
    kernelize->add_option("--param", config.param, "Parameter: mw or vc")
        ->check(CLI::IsMember({"mw", "vc"}));
    kernelize->add_option("--out,-o", config.out, "Output file for kernel, log and bound");
    kernelize->add_option("--instance-out", config.instance_out, "Also write the bare kernel instance");

    auto* reduce = app.add_subcommand("reduce-is", "Build the instance encoding Independent Set");
    reduce->add_option("graphfile", config.input, "Edge list: n, then one 'p q' per line")->required();
    reduce->add_option("--s", config.s, "Independent set size")->required()->check(CLI::NonNegativeNumber);
    reduce->add_option("--out,-o", config.out, "Output file");

    auto* verify = app.add_subcommand("verify", "Check a reconfiguration sequence");
    verify->add_option("file", config.input, "Instance JSON")->required();
    verify->add_option("seqfile", config.second_input, "Sequence JSON or solve report")->required();

    auto* gen = app.add_subcommand("gen", "Generate a random instance");
    gen->add_option("--family", config.family, "random, cograph, split or reduction")
        ->check(CLI::IsMember({"random", "cograph", "split", "reduction"}));
    gen->add_option("--n", config.n, "Vertex count (graph H for the reduction family)");
    gen->add_option("--k", config.k, "Color count");
    gen->add_option("--seed", config.seed, "64-bit seed");
    gen->add_option("--mode", config.mode, "reachable or independent colorings")
        ->check(CLI::IsMember({"reachable", "independent"}));
    gen->add_option("--max-weight", config.max_weight, "Weights drawn from 1..W");
    gen->add_option("--p", config.edge_probability, "Edge probability");
    gen->add_option("--twins", config.twins, "False twins appended to the graph");
    gen->add_option("--s", config.s, "Independent set size for the reduction family");
    gen->add_option("--out,-o", config.out, "Output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

#if defined(_OPENMP)
    omp_set_num_threads(config.jobs);
#endif

    try {
        if (*solve)
            return run_solve(config, lcr::Objective::Reachability);
        if (*shortest)
            return run_solve(config, lcr::Objective::Shortest);
        if (*kernelize)
            return run_kernelize(config);
        if (*reduce)
            return run_reduce(config);
        if (*verify)
            return run_verify(config);
        if (*gen)
            return run_gen(config);
    } catch (const std::exception& e) {
        std::cerr << "lcr: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
