#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "forceps/cli.hpp"
#include "oracles.hpp"

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& input = {})
{
    args.insert(args.begin(), "forceps");
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = forceps::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("number")
{
    const Outcome o = run({"number", "--family", "path:5", "--ell", "1"});
    CHECK(o.code == 0);
    CHECK(o.out == "2 witness=[0,4]\n");
    const Outcome j = run({"number", "--graph6", "Bw", "--format", "jsonl"});
    const auto row = nlohmann::json::parse(j.out);
    CHECK(row["value"] == 2);
    CHECK(row["witness"] == std::vector<int>{0, 1});
    CHECK(run({"number", "--family", "fig3_spider", "--ell", "1", "--rule", "standard"}).code == 0);
}

TEST_CASE("check")
{
    CHECK(run({"check", "--graph6", "A_", "--blue", "0,1", "--ell", "5"}).out == "true\n");
    CHECK(run({"check", "--family", "path:3", "--blue", "0,1", "--ell", "1"}).out == "false leaks=[1]\n");
}

TEST_CASE("closure")
{
    const Outcome o = run({"closure", "--family", "path:5", "--blue", "0"});
    CHECK(o.out == "1 0->1\n2 1->2\n3 2->3\n4 3->4\nclosure=[0,1,2,3,4]\n");
    const Outcome leaky = run({"closure", "--family", "path:3", "--blue", "0,1", "--leaks", "1"});
    CHECK(leaky.out == "closure=[0,1]\n");
}

TEST_CASE("forces and forts")
{
    CHECK(run({"forces", "--family", "path:3", "--blue", "0,2"}).out == "0->1\n2->1\n");
    CHECK(run({"forts", "--family", "path:3", "--ell", "1"}).out == "[0] connected=true\n[2] connected=true\n");
    const Outcome j = run({"forts", "--family", "complete:3", "--format", "jsonl"});
    CHECK(j.out == "{\"connected\":true,\"ell\":0,\"vertices\":[0,1]}\n"
                   "{\"connected\":true,\"ell\":0,\"vertices\":[0,2]}\n"
                   "{\"connected\":true,\"ell\":0,\"vertices\":[1,2]}\n");
}

TEST_CASE("hitting")
{
    const Outcome o = run({"hitting", "--family", "path:3", "--ell", "1"});
    CHECK(o.code == 0);
    CHECK(o.out == "2 witness=[0,2] number=2 match=true\n");
}

TEST_CASE("audit")
{
    const Outcome o = run({"audit", "--family", "cycle:5", "--max-ell", "2"});
    CHECK(o.code == 0);
    CHECK(o.out.starts_with("ell psd standard\n0 2 "));
    CHECK(o.out.find("\n2 5 5\n") != std::string::npos);
}

TEST_CASE("scan reads standard input")
{
    const Outcome o = run({"scan-edges"}, "Bw\nbad\nBW\n");
    CHECK(o.code == 0);
    CHECK(o.out == "Bw 0-1 2 2 0\nBw 0-2 2 2 0\nBw 1-2 2 2 0\nBW 0-2 2 3 -1\nBW 1-2 2 3 -1\n");
    CHECK(o.err.find("line 2") != std::string::npos);
    CHECK(o.err.find("min diff: -1") != std::string::npos);
}

TEST_CASE("families")
{
    const Outcome o = run({"families", "--family", "complete:5", "--ells", "3,4"});
    CHECK(o.code == 0);
    CHECK(o.out.find("complete:5") != std::string::npos);
    const Outcome j = run({"families", "--family", "wheel:6", "--ells", "4", "--format", "jsonl"});
    const auto row = nlohmann::json::parse(j.out);
    CHECK(row["computed"] == 6);
    CHECK(row["expected"] == 6);
    CHECK(row["match"] == true);
}

TEST_CASE("usage errors exit 1")
{
    CHECK(run({}).code == 1);
    CHECK(run({"number"}).code == 1);
    CHECK(run({"number", "--family", "path:3", "--graph6", "Bw"}).code == 1);
    CHECK(run({"number", "--graph6", "D?"}).code == 1);
    CHECK(run({"number", "--family", "nope:3"}).code == 1);
    CHECK(run({"check", "--family", "path:3", "--blue", "2,1"}).code == 1);
    CHECK(run({"check", "--family", "path:3", "--blue", "7"}).code == 1);
    CHECK(run({"number", "--family", "path:3", "--rule", "skew"}).code == 1);
    CHECK(run({"forts", "--family", "path:21"}).code == 1);
    CHECK(run({"forts", "--family", "path:21", "--max-n", "21"}).code == 0);
    CHECK(run({"scan-edges", "/nonexistent/file.g6"}).code == 1);
}

TEST_CASE("graph6 file source reads the first graph")
{
    const std::string path = "cli_test_input.g6";
    std::ofstream(path) << "\nC~\nBw\n";
    CHECK(run({"number", "--graph6-file", path}).out == "3 witness=[0,1,2]\n");
    std::remove(path.c_str());
}

TEST_CASE("output does not depend on the worker count")
{
    const std::string corpus = [] {
        std::string s;
        for (const std::string& line : oracle::atlas_lines()) {
            if (line[0] <= 'D') s += line + "\n";
        }
        return s;
    }();
    const Outcome a = run({"scan-edges", "--workers", "1"}, corpus);
    const Outcome b = run({"scan-edges", "--workers", "4"}, corpus);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);

    const Outcome c = run({"families", "--paper-suite", "--workers", "1", "--format", "jsonl"});
    const Outcome d = run({"families", "--paper-suite", "--workers", "4", "--format", "jsonl"});
    CHECK(c.code == 0);
    CHECK(c.out == d.out);

    const Outcome e = run({"number", "--family", "grid:4:4", "--ell", "1", "--workers", "1"});
    const Outcome f = run({"number", "--family", "grid:4:4", "--ell", "1", "--workers", "3"});
    CHECK(e.out == f.out);
}

} // TEST_SUITE
