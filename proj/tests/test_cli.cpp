#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "icl/cli.hpp"
#include "icl/construct.hpp"
#include "icl/lifting.hpp"
#include "icl/serialize.hpp"

using namespace icl;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// Scratch directory removed on scope exit.
struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("icl_cli_test_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

} // namespace

TEST_CASE("cli capacity") {
    const auto r = run_cli({"capacity", "--k", "21", "--u", "0", "--d", "17"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out == "1/4\n");

    const auto j = run_cli({"--json", "capacity", "--k", "10", "--u", "2", "--d", "3"});
    CHECK(j.code == 0);
    CHECK(nlohmann::json::parse(j.out)["capacity"] == "1/3");

    CHECK(run_cli({"capacity", "--k", "5", "--u", "3", "--d", "3"}).code == cli::kExitValidation);
}

TEST_CASE("cli usage errors exit 2") {
    const auto r = run_cli({"capacity", "--bogus", "1"});
    CHECK(r.code == cli::kExitUsage);
    CHECK(r.err.find("capacity") != std::string::npos);
    CHECK(run_cli({}).code == cli::kExitUsage);
    CHECK(run_cli({"nonsense"}).code == cli::kExitUsage);
    CHECK(run_cli({"capacity", "--k", "5"}).code == cli::kExitUsage);
}

TEST_CASE("cli construct") {
    const auto r = run_cli({"construct", "--family", "case1", "--k", "20", "--d", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("code: 16 symbols") != std::string::npos);
    CHECK(r.out.find("x16+x20") != std::string::npos);

    const auto j = run_cli({"--json", "construct", "--family", "case10", "--k", "28", "--d", "18", "--lambda", "2"});
    REQUIRE(j.code == 0);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["code"]["length"] == 10);
    CHECK(doc["certificate"]["status"] == "optimal");
    CHECK(doc["descriptor"]["derived"]["r"] == 10);

    const auto bad = run_cli({"construct", "--family", "case1", "--k", "20", "--d", "3"});
    CHECK(bad.code == cli::kExitValidation);
    CHECK(bad.err.find("∤") != std::string::npos);
    CHECK(run_cli({"construct", "--family", "nope", "--k", "20", "--d", "4"}).code == cli::kExitValidation);
}

TEST_CASE("cli lift, verify, minrank, classify, export-dot round trip") {
    TempDir tmp;
    const auto p = tmp.file("p.json"), c = tmp.file("c.json");
    const auto lp = tmp.file("lp.json"), lc = tmp.file("lc.json");
    REQUIRE(run_cli({"construct", "--family", "case1", "--k", "20", "--d", "4", "--out", p, "--code-out", c}).code == 0);
    CHECK(parse_problem(slurp(p)) == IndexCodingProblem::uniform(20, {4}));

    REQUIRE(run_cli({"lift", "--m", "2", "--problem", p, "--code", c, "--out", lp, "--code-out", lc}).code == 0);
    const auto base = construct(ClassDescriptor::make(Family::case1, 20, 4));
    CHECK(parse_problem(slurp(lp)) == lift_problem(base.problem, 2));
    CHECK(parse_code(slurp(lc)) == lift_code(base.problem, base.code, 2));

    const auto v = run_cli({"verify", "--problem", lp, "--code", lc});
    CHECK(v.code == 0);
    CHECK(v.out == "all 40 receivers decodable\n");

    spit(tmp.file("short.json"), R"({"version":1,"k":20,"length":1,"symbols":[[1,5]]})");
    const auto bad = run_cli({"verify", "--problem", p, "--code", tmp.file("short.json")});
    CHECK(bad.code == cli::kExitValidation);
    CHECK(bad.out.find("receiver 2: NOT decodable") != std::string::npos);

    spit(tmp.file("small.json"), R"({"version":1,"k":3,"antidotes":[[1],[1],[1]]})");
    const auto mr = run_cli({"--json", "minrank", "--problem", tmp.file("small.json")});
    CHECK(mr.code == 0);
    CHECK(nlohmann::json::parse(mr.out)["value"] == 2);
    const auto over = run_cli({"minrank", "--problem", p, "--max-free-bits", "5"});
    CHECK(over.code == 0);
    CHECK(over.out.find("budget exceeded") != std::string::npos);

    const auto cls = run_cli({"classify", "--problem", lp});
    CHECK(cls.out.find("case-b(K=40, D=24, m=1)") != std::string::npos);

    const auto dot = run_cli({"export-dot", "--problem", tmp.file("small.json")});
    CHECK(dot.out == "digraph side_information {\n  1;\n  2;\n  3;\n  1 -> 2;\n  2 -> 3;\n  3 -> 1;\n}\n");

    CHECK(run_cli({"verify", "--problem", tmp.file("missing.json"), "--code", c}).code == cli::kExitValidation);
    spit(tmp.file("junk.json"), "{");
    CHECK(run_cli({"export-dot", "--problem", tmp.file("junk.json")}).code == cli::kExitValidation);
}

TEST_CASE("cli closure and demo") {
    const auto c = run_cli({"closure", "--family", "case1", "--k", "10", "--d", "2", "--m", "2"});
    CHECK(c.code == 0);
    CHECK(c.out.find("case-b(K=20, D=12, m=1)") != std::string::npos);
    CHECK(run_cli({"closure", "--family", "case6", "--k", "21", "--d", "17", "--lambda", "1", "--m", "2"}).code == 1);

    const auto d = run_cli({"demo", "--example", "1"});
    CHECK(d.code == 0);
    CHECK(d.out.find("example 1, m=3: PASS") != std::string::npos);
    CHECK(run_cli({"demo", "--example", "8"}).code == cli::kExitValidation);
    CHECK(run_cli({"demo", "--example", "2", "--m", "3"}).code == cli::kExitValidation);
}
