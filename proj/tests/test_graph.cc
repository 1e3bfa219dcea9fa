#include <doctest.h>

#include "oracles.hh"

#include <gpos/error.hh>
#include <gpos/families.hh>
#include <gpos/graph.hh>

#include <algorithm>
#include <random>

using namespace gpos;

namespace
{
    auto graph(int n, std::vector<Edge> edges) -> Graph
    {
        return Graph::build(n, edges);
    }

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

    auto random_graphs(std::uint64_t seed, int count, int max_n) -> std::vector<Graph>
    {
        std::mt19937_64 rng(seed);
        std::vector<Graph> out;
        for (int i = 0; i < count; ++i) {
            int n = std::uniform_int_distribution<int>(1, max_n)(rng);
            double p = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
            out.push_back(Graph::build(n, oracle::random_connected(rng, n, p)));
        }
        return out;
    }
}

TEST_CASE("build canonicalises edges")
{
    auto p3 = graph(3, { { 0, 1 }, { 1, 2 } });
    CHECK(p3.size() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.degree(1) == 2);

    auto k2 = graph(2, { { 0, 1 }, { 1, 0 } });
    CHECK(k2.edge_count() == 1);
    CHECK(k2.edges() == std::vector<Edge>{ { 0, 1 } });

    auto shuffled = graph(4, { { 3, 2 }, { 1, 0 }, { 2, 1 }, { 1, 2 } });
    CHECK(shuffled == graph(4, { { 0, 1 }, { 1, 2 }, { 2, 3 } }));
    CHECK(shuffled.adjacent(2, 3));
    CHECK(! shuffled.adjacent(0, 3));
}

TEST_CASE("build rejects bad input")
{
    CHECK(kind_of([] { graph(4, { { 0, 1 }, { 2, 3 } }); }) == ErrorKind::Disconnected);
    CHECK(kind_of([] { graph(2, { { 0, 0 }, { 0, 1 } }); }) == ErrorKind::SelfLoop);
    CHECK(kind_of([] { graph(2, { { 0, 2 } }); }) == ErrorKind::VertexOutOfRange);
    CHECK(kind_of([] { graph(0, {}); }) == ErrorKind::ParameterOutOfRange);
    CHECK(graph(1, {}).size() == 1);
}

TEST_CASE("distances on small graphs")
{
    auto c5 = make_cycle(5).graph;
    auto d = all_pairs_distances(c5);
    for (int u = 0; u < 5; ++u)
        for (int v = 0; v < 5; ++v)
            if (u != v)
                CHECK((d(u, v) == 1 || d(u, v) == 2));
    CHECK(diameter(d) == 2);

    auto p4 = make_path(4).graph;
    CHECK(all_pairs_distances(p4)(0, 3) == 3);

    auto petersen = make_petersen().graph;
    auto dp = all_pairs_distances(petersen);
    auto fw = oracle::floyd_warshall(petersen);
    for (int u = 0; u < 10; ++u)
        for (int v = 0; v < 10; ++v) {
            CHECK(dp(u, v) == fw[u][v]);
            if (u != v)
                CHECK((dp(u, v) == 1 || dp(u, v) == 2));
        }
    CHECK(diameter(dp) == 2);

    for (int n = 2; n <= 6; ++n)
        CHECK(diameter(all_pairs_distances(make_complete(n).graph)) == 1);
}

TEST_CASE("distance matrix matches Floyd-Warshall and satisfies the metric axioms")
{
    for (const auto & g : random_graphs(11, 120, 14)) {
        auto d = all_pairs_distances(g);
        auto fw = oracle::floyd_warshall(g);
        int n = g.size();
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                REQUIRE(d(u, v) == fw[u][v]);
                CHECK(d(u, v) == d(v, u));
                CHECK((d(u, v) == 0) == (u == v));
                CHECK((d(u, v) == 1) == g.adjacent(u, v));
                for (int w = 0; w < n; ++w)
                    CHECK(d(u, w) <= d(u, v) + d(v, w));
            }
    }
}

TEST_CASE("threaded distances are identical to sequential")
{
    for (const auto & g : random_graphs(12, 20, 40))
        CHECK(all_pairs_distances(g, 1) == all_pairs_distances(g, 4));
}

TEST_CASE("edge distance")
{
    auto petersen = make_petersen();
    auto d = all_pairs_distances(petersen.graph);
    const auto & f = *petersen.edge_certificate;
    for (std::size_t i = 0; i < f.size(); ++i) {
        CHECK(edge_distance(d, f[i], f[i]) == 0);
        for (std::size_t j = i + 1; j < f.size(); ++j)
            CHECK(edge_distance(d, f[i], f[j]) == 2);
    }
    CHECK(edge_distance(d, { 0, 1 }, { 1, 2 }) == 0);
    CHECK(kind_of([&] { edge_distance(d, { 0, 2 }, { 0, 1 }); }) == ErrorKind::NotAnEdge);
}

TEST_CASE("simplicial vertices")
{
    CHECK(simplicial_vertices(make_complete(5).graph) == std::vector<Vertex>{ 0, 1, 2, 3, 4 });
    CHECK(simplicial_vertices(make_path(4).graph) == std::vector<Vertex>{ 0, 3 });
    CHECK(simplicial_vertices(make_cycle(5).graph).empty());
}

TEST_CASE("block decomposition examples")
{
    auto tree = make_random_tree(5, 9).graph;
    auto bt = block_decomposition(tree);
    CHECK(static_cast<int>(bt.blocks.size()) == tree.edge_count());
    for (const auto & b : bt.blocks)
        CHECK(b.size() == 2);
    CHECK(is_block_graph(tree));

    auto c5 = block_decomposition(make_cycle(5).graph);
    REQUIRE(c5.blocks.size() == 1);
    CHECK(c5.blocks[0].size() == 5);
    CHECK(c5.cut_vertices.empty());

    auto bowtie = graph(5, { { 0, 1 }, { 1, 2 }, { 0, 2 }, { 2, 3 }, { 3, 4 }, { 2, 4 } });
    auto bb = block_decomposition(bowtie);
    CHECK(bb.blocks.size() == 2);
    CHECK(bb.cut_vertices == std::vector<Vertex>{ 2 });
    CHECK(is_block_graph(bowtie));
    CHECK(! is_block_graph(make_cycle(4).graph));
}

TEST_CASE("blocks partition the edge set")
{
    for (const auto & g : random_graphs(13, 150, 12)) {
        auto bd = block_decomposition(g);
        std::vector<Edge> recombined;
        std::vector<int> containing(g.size(), 0);
        for (const auto & block : bd.blocks) {
            for (auto v : block)
                ++containing[v];
            for (auto u : block)
                for (auto v : block)
                    if (u < v && g.adjacent(u, v))
                        recombined.push_back({ u, v });
        }
        std::sort(recombined.begin(), recombined.end());
        CHECK(recombined == g.edges());
        for (int v = 0; v < g.size(); ++v) {
            bool cut = std::binary_search(bd.cut_vertices.begin(), bd.cut_vertices.end(), v);
            CHECK(cut == (containing[v] >= 2));
        }
    }
}

TEST_CASE("simplicial and cut vertices are disjoint in block graphs")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto g = make_random_block_graph(seed, 6, 4).graph;
        REQUIRE(is_block_graph(g));
        auto s = simplicial_vertices(g);
        auto cuts = block_decomposition(g).cut_vertices;
        for (auto v : s)
            CHECK(! std::binary_search(cuts.begin(), cuts.end(), v));
    }
}

TEST_CASE("BFS leaf counts")
{
    for (int n = 2; n <= 8; ++n)
        CHECK(bfs_leaf_count(make_path(n).graph, 0) == 1);
    for (int n = 3; n <= 9; ++n)
        for (int v = 0; v < n; ++v)
            CHECK(bfs_leaf_count(make_cycle(n).graph, v) == 2);
    for (int n = 2; n <= 5; ++n)
        CHECK(bfs_leaf_count(make_gn_counterexample(n).graph, 3 * n) == n);
    CHECK(kind_of([] { bfs_leaf_count(make_path(3).graph, 3); }) == ErrorKind::VertexOutOfRange);
}

TEST_CASE("BFS tree paths are geodesics under both parent rules")
{
    for (const auto & g : random_graphs(14, 80, 14)) {
        auto d = all_pairs_distances(g);
        for (auto rule : { BfsParentRule::SmallestIndex, BfsParentRule::LeafMinimizing })
            for (int root = 0; root < g.size(); ++root) {
                auto parent = bfs_tree(g, root, rule);
                for (int v = 0; v < g.size(); ++v) {
                    if (v == root)
                        continue;
                    CHECK(g.adjacent(v, parent[v]));
                    CHECK(d(root, v) == d(root, parent[v]) + 1);
                }
                CHECK(bfs_leaf_count(g, root, BfsParentRule::LeafMinimizing) >= 0);
            }
    }
}

TEST_CASE("induced subgraph relabels in the given order")
{
    auto c5 = make_cycle(5).graph;
    std::vector<Vertex> part{ 4, 0, 1 };
    auto sub = induced_subgraph(c5, part);
    CHECK(sub.n == 3);
    auto edges = sub.edges;
    std::sort(edges.begin(), edges.end());
    CHECK(edges == std::vector<Edge>{ { 0, 1 }, { 1, 2 } });
}
