// Runs the lcr binary end to end: exit codes, report files and round trips.

#include "support.hpp"

#include "lcr/io.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>
#include <unistd.h>

using namespace lcr;
using namespace testing;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "")
{
    const std::string command = env + " " + LCR_CLI_PATH + " " + args + " 2>/dev/null";
    Run result;
    FILE* pipe = ::popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    while (std::size_t n = std::fread(buffer.data(), 1, buffer.size(), pipe))
        result.out.append(buffer.data(), n);
    const int status = ::pclose(pipe);
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

class Workspace {
public:
    Workspace() : dir_(fs::temp_directory_path() / ("lcr_cli_" + std::to_string(::getpid())))
    {
        fs::create_directories(dir_);
    }
    ~Workspace() { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) const
    {
        std::ofstream(dir_ / name) << text;
        return path(name);
    }
    std::string write(const std::string& name, const json& doc) const { return write(name, doc.dump()); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    json read(const std::string& name) const
    {
        std::ifstream in(dir_ / name);
        return json::parse(in);
    }

private:
    fs::path dir_;
};

json instance_doc(const Instance& inst)
{
    return instance_to_json(inst);
}

}  // namespace

TEST_CASE("solve exit codes")
{
    Workspace ws;
    const auto flip = ws.write("flip.json", instance_doc(make_instance(1, {}, {{0, 1}}, {0}, {1})));
    const auto swap = ws.write("swap.json", instance_doc(swap_instance()));
    const auto broken = ws.write("broken.json", std::string("{\"k\": 2, \"vertices\": ["));

    for (const char* strategy : {"auto", "brute", "kernel-mw", "kernel-vc", "cover"}) {
        CHECK(run("solve " + flip + " --strategy " + strategy).code == 0);
        CHECK(run("solve " + swap + " --strategy " + strategy).code == 1);
    }
    CHECK(run("solve " + broken).code == 2);
    CHECK(run("solve " + ws.path("missing.json")).code == 2);
    CHECK(run("solve " + flip + " --strategy fastest").code == 2);
    CHECK(run("").code == 2);

    const Run report = run("solve " + swap);
    const json doc = json::parse(report.out);
    CHECK(doc["verdict"] == "no");
    CHECK(doc["length"].is_null());
}

TEST_CASE("state cap from the environment")
{
    Workspace ws;
    lcr::ListAssignment lists(12, {0, 1, 2});
    std::vector<Edge> path;
    for (int v = 0; v + 1 < 12; ++v)
        path.emplace_back(v, v + 1);
    Coloring initial(12), target(12);
    for (int v = 0; v < 12; ++v) {
        initial[v] = v % 2;
        target[v] = 2 - v % 2;
    }
    const auto big = ws.write("big.json", instance_doc(make_instance(12, path, lists, initial, target)));
    const Run capped = run("solve " + big + " --strategy brute", "LCR_STATE_CAP=50");
    CHECK(capped.code == 2);
    CHECK(json::parse(capped.out)["verdict"] == "too-large");
    CHECK(run("solve " + big + " --strategy brute --cap 1000000").code == 0);
}

TEST_CASE("shortest reports lengths")
{
    Workspace ws;
    const auto five = ws.write("five.json", instance_doc(make_instance(1, {}, {{0, 1}}, {0}, {1}, {5})));
    const Run r = run("shortest " + five);
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["length"] == 5);

    const auto swap = ws.write("swap.json", instance_doc(swap_instance()));
    const Run none = run("shortest " + swap + " --strategy kernel-vc");
    CHECK(none.code == 1);
    CHECK(json::parse(none.out)["length"] == "inf");

    lcr::GeneratorConfig config;
    config.n = 6;
    config.seed = 9;
    const auto unit = ws.write("unit.json", instance_doc(generated(config)));
    const json doc = json::parse(run("shortest " + unit).out);
    CHECK(doc["length"] == doc["sequence"].size());
    CHECK(run("shortest " + unit + " --strategy kernel-mw").code == 2);
}

TEST_CASE("verify accepts emitted sequences and rejects bad ones")
{
    Workspace ws;
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        lcr::GeneratorConfig config;
        config.family = seed % 2 ? lcr::Family::Cograph : lcr::Family::Random;
        config.n = 5;
        config.twins = 2;
        config.seed = seed;
        const auto inst = ws.write("g.json", instance_doc(generated(config)));
        REQUIRE(run("solve " + inst + " --strategy kernel-mw --out " + ws.path("r.json")).code == 0);
        CHECK(run("verify " + inst + " " + ws.path("r.json")).out == "valid\n");
        CHECK(run("verify " + inst + " " + ws.path("r.json")).code == 0);
        REQUIRE(run("shortest " + inst + " --strategy kernel-vc --out " + ws.path("s.json")).code == 0);
        CHECK(run("verify " + inst + " " + ws.path("s.json")).code == 0);
    }

    const Instance edge = make_instance(2, {{0, 1}}, {{0, 1, 2}, {0, 1, 2}}, {0, 1}, {2, 1});
    const auto inst = ws.write("edge.json", instance_doc(edge));
    const auto good = ws.write("good.json", json::parse(R"({"steps": [{"vertex": "v0", "to": "2"}]})"));
    const auto improper = ws.write("bad.json", json::parse(R"({"steps": [{"vertex": "v0", "to": "1"},
                                                                         {"vertex": "v0", "to": "2"}]})"));
    const auto unknown = ws.write("unknown.json", json::parse(R"({"steps": [{"vertex": "v9", "to": "2"}]})"));
    CHECK(run("verify " + inst + " " + good).code == 0);
    const Run bad = run("verify " + inst + " " + improper);
    CHECK(bad.code == 1);
    CHECK(bad.out == "invalid\n");
    CHECK(run("verify " + inst + " " + unknown).code == 2);
}

TEST_CASE("kernelize output")
{
    Workspace ws;
    const Instance p4 = make_instance(4, {{0, 1}, {1, 2}, {2, 3}}, {{0, 1}, {0, 1}, {0, 1}, {0, 1}},
                                      {0, 1, 0, 1}, {0, 1, 0, 1});
    const auto prime = ws.write("p4.json", instance_doc(p4));
    const json mw = json::parse(run("kernelize " + prime + " --param mw").out);
    CHECK(instance_from_json(mw["instance"]) == p4);
    CHECK(mw["log"].empty());
    CHECK(mw["vertices_before"] == 4);
    CHECK(mw["vertices_after"] == 4);
    CHECK(mw["bound"]["pmw"] == 4);
    CHECK(mw["bound"]["log2"].get<double>() >= 2.0);

    const Instance star = make_instance(4, {{0, 1}, {0, 2}, {0, 3}}, {{0}, {1, 2}, {1, 2}, {1, 2}},
                                        {0, 1, 1, 1}, {0, 2, 2, 2});
    const auto star_file = ws.write("star.json", instance_doc(star));
    REQUIRE(run("kernelize " + star_file + " --param vc --out " + ws.path("k.json") + " --instance-out " +
                ws.path("ki.json"))
                .code == 0);
    const json vc = ws.read("k.json");
    CHECK(vc["vertices_after"] == 2);
    CHECK(vc["cover"] == json::array({"v0"}));
    CHECK(vc["bound"]["value"] == 2 * 8 * 9);
    CHECK(vc["log"].size() == 2);
    const Instance kernel = instance_from_json(ws.read("ki.json"));
    CHECK(kernel.weight(1) == 3);
    CHECK(run("kernelize " + star_file + " --param tw").code == 2);
}

TEST_CASE("reduce-is writes the construction")
{
    Workspace ws;
    const auto five = ws.write("h.txt", std::string("5\n1 2\n1 3\n1 4\n2 5\n"));
    const Run r = run("reduce-is " + five + " --s 3");
    REQUIRE(r.code == 0);
    const Instance inst = parse_instance(r.out);
    CHECK(inst.size() == 44);

    const auto single = ws.write("one.txt", std::string("1\n"));
    CHECK(parse_instance(run("reduce-is " + single + " --s 1").out).size() == 3);

    const auto k2 = ws.write("k2.txt", std::string("2\n1 2\n"));
    REQUIRE(run("reduce-is " + k2 + " --s 2 --out " + ws.path("k2.json")).code == 0);
    CHECK(run("solve " + ws.path("k2.json")).code == 1);
    const auto apart = ws.write("apart.txt", std::string("2\n"));
    REQUIRE(run("reduce-is " + apart + " --s 2 --out " + ws.path("apart.json")).code == 0);
    CHECK(run("solve " + ws.path("apart.json")).code == 0);

    const auto bad = ws.write("bad.txt", std::string("2\n1 3\n"));
    CHECK(run("reduce-is " + bad + " --s 1").code == 2);
    CHECK(run("reduce-is " + five).code == 2);
}

TEST_CASE("gen is deterministic and round-trips")
{
    Workspace ws;
    for (const char* family : {"random", "cograph", "split", "reduction"}) {
        const std::string args = std::string("gen --family ") + family + " --n 4 --k 3 --seed 17 --twins 1";
        const Run a = run(args), b = run(args);
        REQUIRE(a.code == 0);
        CHECK(a.out == b.out);
        const Instance inst = parse_instance(a.out);
        CHECK(instance_to_json(inst).dump(2) + "\n" == a.out);
        const auto file = ws.write("gen.json", a.out);
        const int code = run("solve " + file).code;
        if (std::string(family) == "reduction")
            CHECK((code == 0 || code == 1));
        else
            CHECK(code == 0);
    }
    CHECK(run("gen --n 4 --seed 1").out != run("gen --n 4 --seed 2").out);
    CHECK(run("gen --family planar").code == 2);
    CHECK(run("gen --n 3 --k 1").code == 2);
}
