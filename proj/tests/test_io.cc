#include <doctest.h>

#include "oracles.hh"

#include <gpos/error.hh>
#include <gpos/families.hh>
#include <gpos/io.hh>

#include <random>
#include <string>

using namespace gpos;

namespace
{
    auto kind_of(auto && f) -> ErrorKind
    {
        try {
            f();
        }
        catch (const Error & e) {
            return e.kind();
        }
        FAIL("no error raised");
        return ErrorKind::MalformedReport;
    }

    auto message_of(auto && f) -> std::string
    {
        try {
            f();
        }
        catch (const Error & e) {
            return e.what();
        }
        return {};
    }
}

TEST_CASE("edge list examples")
{
    CHECK(parse_edge_list("3 2\n0 1\n1 2") == make_path(3).graph);
    CHECK(parse_edge_list("2 1\n0 1\n") == make_complete(2).graph);
    CHECK(parse_edge_list("# a comment\n\n3 2\n# another\n0 1\r\n  1 2  \n\n") == make_path(3).graph);
    CHECK(parse_edge_list("1 0\n").size() == 1);

    CHECK(kind_of([] { parse_edge_list("3 1\n0 3"); }) == ErrorKind::VertexOutOfRange);
    CHECK(message_of([] { parse_edge_list("3 1\n0 3"); }).find("line 2") != std::string::npos);
}

TEST_CASE("edge list errors")
{
    CHECK(kind_of([] { parse_edge_list(""); }) == ErrorKind::MalformedHeader);
    CHECK(kind_of([] { parse_edge_list("3\n0 1\n"); }) == ErrorKind::MalformedHeader);
    CHECK(kind_of([] { parse_edge_list("x y\n"); }) == ErrorKind::MalformedHeader);
    CHECK(kind_of([] { parse_edge_list("3 2\n0 1\n1\n"); }) == ErrorKind::MalformedEdge);
    CHECK(kind_of([] { parse_edge_list("3 2\n0 1\n1 2\n0 2\n"); }) == ErrorKind::MalformedEdge);
    CHECK(kind_of([] { parse_edge_list("3 3\n0 1\n1 2\n"); }) == ErrorKind::MalformedEdge);
    CHECK(kind_of([] { parse_edge_list("2 1\n1 1\n"); }) == ErrorKind::SelfLoop);
    CHECK(kind_of([] { parse_edge_list("4 2\n0 1\n2 3\n"); }) == ErrorKind::Disconnected);
    CHECK(message_of([] { parse_edge_list("3 2\n0 1\n1 x\n"); }).find("line 3") != std::string::npos);
}

TEST_CASE("edge list round trip")
{
    auto g = make_petersen().graph;
    CHECK(parse_edge_list(serialize_edge_list(g)) == g);
}

TEST_CASE("graph6 examples")
{
    auto c5 = make_cycle(5).graph;
    CHECK(serialize_graph6(c5) == "Dhc");
    CHECK(parse_graph6("Dhc") == c5);
    CHECK(parse_graph6(">>graph6<<Dhc") == c5);
    CHECK(parse_graph6("Dhc\n") == c5);
    CHECK(parse_graph6("@") == make_path(1).graph);
    CHECK(parse_graph6(serialize_graph6(make_petersen().graph)) == make_petersen().graph);

    CHECK(kind_of([] { parse_graph6("D h"); }) == ErrorKind::BadChecksumChar);
    CHECK(kind_of([] { parse_graph6("D\x7f" "c"); }) == ErrorKind::BadChecksumChar);
    CHECK(kind_of([] { parse_graph6("C?"); }) == ErrorKind::Disconnected);
    CHECK(kind_of([] { parse_graph6("Dh"); }) == ErrorKind::MalformedHeader);
    CHECK(kind_of([] { parse_graph6(""); }) == ErrorKind::MalformedHeader);
}

TEST_CASE("graph6 batch")
{
    auto graphs = parse_graph6_batch("Dhc\n\n" + serialize_graph6(make_path(4).graph) + "\n");
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0] == make_cycle(5).graph);
    CHECK(graphs[1] == make_path(4).graph);
}

TEST_CASE("graph6 long orders use the extended header")
{
    for (int n : { 62, 63, 100, 300 }) {
        auto g = make_path(n).graph;
        auto text = serialize_graph6(g);
        CHECK((n <= 62) == (text[0] != '~'));
        CHECK(parse_graph6(text) == g);
    }
}

TEST_CASE("graph6 round trip on 1000 random graphs")
{
    std::mt19937_64 rng(61);
    for (int i = 0; i < 1000; ++i) {
        int n = std::uniform_int_distribution<int>(1, 30)(rng);
        double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        auto g = Graph::build(n, oracle::random_connected(rng, n, p));
        auto text = serialize_graph6(g);
        for (auto c : text)
            REQUIRE((c >= 63 && c <= 126));
        REQUIRE(parse_graph6(text) == g);
    }
}

TEST_CASE("vertex lists and covers")
{
    CHECK(parse_vertex_list("0, 5,9") == std::vector<Vertex>{ 0, 5, 9 });
    CHECK(parse_vertex_list("").empty());
    CHECK_THROWS_AS(parse_vertex_list("1,,2"), Error);
    CHECK_THROWS_AS(parse_vertex_list("1,a"), Error);

    auto cover = parse_cover("# petersen\ncycle:0,1,2,3,4\ncycle: 5,6,7,8,9\n");
    CHECK(cover == *make_petersen().cover);
    CHECK(parse_cover(serialize_cover(cover)) == cover);

    auto mixed = parse_cover("path:0,1,2\n3,4\n");
    CHECK(mixed.kinds == std::vector<PartKind>{ PartKind::Path, PartKind::General });
    CHECK(kind_of([] { parse_cover("cycle:\n"); }) == ErrorKind::InvalidCover);
    CHECK(kind_of([] { parse_cover("0,x\n"); }) == ErrorKind::InvalidCover);
}
