#include <doctest.h>

#include <gpos/cli.hh>
#include <gpos/families.hh>
#include <gpos/io.hh>
#include <gpos/report.hh>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace gpos;
namespace fs = std::filesystem;

namespace
{
    struct Outcome
    {
        int code;
        std::string out;
        std::string err;
    };

    auto call(std::vector<std::string> args, const std::string & input = "") -> Outcome
    {
        std::ostringstream out, err;
        std::istringstream in(input);
        int code = run(args, out, err, in);
        return { code, out.str(), err.str() };
    }

    auto scratch() -> fs::path
    {
        auto dir = fs::temp_directory_path() / ("gpos-cli-" + std::to_string(::getpid()));
        fs::create_directories(dir);
        return dir;
    }

    auto slurp(const fs::path & p) -> std::string
    {
        std::ifstream f(p);
        std::stringstream s;
        s << f.rdbuf();
        return s.str();
    }
}

TEST_CASE("solve on a generated Petersen graph")
{
    auto dir = scratch();
    auto file = (dir / "petersen.txt").string();
    auto gen = call({ "generate", "--family", "petersen", "--out", file });
    REQUIRE(gen.code == 0);
    auto family = parse_report(gen.out);
    CHECK(family.family->predicted_gp == 6);
    CHECK(recheck_report(family).empty());

    auto res = call({ "solve", "--input", file, "--deterministic" });
    REQUIRE(res.code == 0);
    auto r = parse_report(res.out);
    REQUIRE(r.solve);
    CHECK(r.solve->optimum == 6);
    CHECK(r.solve->status == SolveStatus::Exact);
    CHECK(r.input.n == 10);
    CHECK(r.input.m == 15);
    CHECK(r.timing_ms.empty());
    CHECK(recheck_report(r).empty());
}

TEST_CASE("deterministic reports are byte-identical")
{
    auto text = serialize_edge_list(make_glued_binary_tree(3).graph);
    auto a = call({ "solve", "--deterministic" }, text);
    auto b = call({ "solve", "--deterministic", "--threads", "3" }, text);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    auto c = call({ "bounds", "--deterministic" }, text);
    auto d = call({ "bounds", "--deterministic" }, text);
    CHECK(c.out == d.out);

    auto timed = parse_report(call({ "solve" }, text).out);
    CHECK(timed.timing_ms.count("solve") == 1);
}

TEST_CASE("verify the theta witness")
{
    auto text = serialize_edge_list(make_theta(4, 5).graph);
    auto res = call({ "verify", "--set", "0,5,9,13,17" }, text);
    REQUIRE(res.code == 0);
    auto r = parse_report(res.out);
    CHECK(r.verify->result.certified);

    auto bad = parse_report(call({ "verify", "--set", "0,2,3" }, text).out);
    CHECK(! bad.verify->result.certified);
    CHECK(bad.verify->result.witness);
    CHECK(recheck_report(bad).empty());
}

TEST_CASE("reduce with check on P_3")
{
    auto dir = scratch();
    auto lifted = (dir / "lift.txt").string();
    auto res = call({ "reduce", "--check", "--out", lifted }, "3 2\n0 1\n1 2\n");
    REQUIRE(res.code == 0);
    auto r = parse_report(res.out);
    REQUIRE(r.reduction);
    CHECK(r.reduction->holds == true);
    CHECK(r.reduction->lifted_gp == 5);
    CHECK(r.reduction->alpha == 2);
    CHECK(recheck_report(r).empty());

    auto g = parse_edge_list(slurp(lifted));
    CHECK(g.size() == 9);
    CHECK(slurp(lifted + ".layers.json").find("\"layers\"") != std::string::npos);
}

TEST_CASE("bounds with a cover file")
{
    auto dir = scratch();
    auto cover = (dir / "cover.txt").string();
    std::ofstream(cover) << "cycle:0,1,2,3,4\ncycle:5,6,7,8,9\n";
    auto res = call({ "bounds", "--cover", cover }, serialize_edge_list(make_petersen().graph));
    REQUIRE(res.code == 0);
    auto r = parse_report(res.out);
    CHECK(r.bounds->upper.at("cover").value == 6);
    CHECK(r.bounds->lower.at("distant_edges").value == 6);
    CHECK(r.bounds->exact == 6);
    CHECK(recheck_report(r).empty());
}

TEST_CASE("graph6 input and batches")
{
    auto res = call({ "solve", "--format", "graph6", "--deterministic" }, "Dhc\n");
    REQUIRE(res.code == 0);
    CHECK(parse_report(res.out).solve->optimum == 3);

    auto batch = call({ "solve", "--format", "graph6" }, "Dhc\n" + serialize_graph6(make_path(5).graph) + "\n");
    REQUIRE(batch.code == 0);
    auto reports = parse_reports(batch.out);
    REQUIRE(reports.size() == 2);
    CHECK(reports[1].solve->optimum == 2);

    auto dir = scratch();
    auto file = (dir / "k4.g6").string();
    REQUIRE(call({ "generate", "--family", "complete", "--n", "4", "--format", "graph6", "--out", file }).code == 0);
    CHECK(parse_report(call({ "solve", "--input", file }).out).solve->optimum == 4);
}

TEST_CASE("generate writes to stdout without a report")
{
    auto res = call({ "generate", "--family", "theta", "--k", "3", "--ell", "4" });
    REQUIRE(res.code == 0);
    CHECK(parse_edge_list(res.out) == make_theta(3, 4).graph);

    auto missing = call({ "generate", "--family", "theta", "--k", "3" });
    CHECK(missing.code == 1);
    CHECK(missing.err.find("--ell") != std::string::npos);
}

TEST_CASE("timeouts exit with 2 and a certified partial result")
{
    auto text = serialize_edge_list(make_glued_binary_tree(7).graph);
    auto res = call({ "solve", "--time-limit", "0.001", "--deterministic" }, text);
    auto r = parse_report(res.out);
    REQUIRE(r.solve);
    if (r.solve->status == SolveStatus::TimedOut)
        CHECK(res.code == 2);
    else
        CHECK(res.code == 0);
    CHECK(r.solve->witness.certified);
    CHECK(recheck_report(r).empty());
}

TEST_CASE("input errors exit with 1")
{
    auto unknown = call({ "solve", "--bogus" }, "2 1\n0 1\n");
    CHECK(unknown.code == 1);
    CHECK(unknown.err.find("UnknownFlag") != std::string::npos);

    auto range = call({ "solve" }, "3 1\n0 3\n");
    CHECK(range.code == 1);
    CHECK(range.err.find("VertexOutOfRange") != std::string::npos);
    CHECK(range.err.find("line 2") != std::string::npos);

    CHECK(call({}).code == 1);
    CHECK(call({ "frobnicate" }).code == 1);
    CHECK(call({ "solve", "--input", "/nonexistent/file" }).code == 1);
    CHECK(call({ "solve", "--format", "dot" }, "2 1\n0 1\n").code == 1);
    CHECK(call({ "verify", "--set", "0,9" }, "2 1\n0 1\n").code == 1);
    CHECK(call({ "reduce" }, "1 0\n").code == 1);
    CHECK(call({ "solve", "--threads", "0" }, "2 1\n0 1\n").code == 1);
    CHECK(call({ "bounds", "--cover", "/nonexistent" }, "2 1\n0 1\n").code == 1);
}

TEST_CASE("help and version")
{
    auto help = call({ "--help" });
    CHECK(help.code == 0);
    CHECK(help.out.find("solve") != std::string::npos);
    auto version = call({ "--version" });
    CHECK(version.code == 0);
    CHECK(version.out.find(std::string(tool_version)) != std::string::npos);
}

TEST_CASE("GP_THREADS sets the default worker count")
{
    auto text = serialize_edge_list(make_petersen().graph);
    ::setenv("GP_THREADS", "2", 1);
    auto ok = call({ "solve" }, text);
    ::setenv("GP_THREADS", "zero", 1);
    auto bad = call({ "solve" }, text);
    ::unsetenv("GP_THREADS");
    CHECK(ok.code == 0);
    CHECK(parse_report(ok.out).solve->optimum == 6);
    CHECK(bad.code == 1);
}
