#include <doctest.h>

#include "oracles.hh"

#include <gpos/bounds.hh>
#include <gpos/error.hh>
#include <gpos/families.hh>

using namespace gpos;

namespace
{
    auto solve(const Graph & g) -> SolveResult
    {
        return gp_exact(g, collinear_triples(all_pairs_distances(g)));
    }

    auto brute(const Graph & g) -> int
    {
        return oracle::gp_number(oracle::floyd_warshall(g));
    }

    auto check_instance(const FamilyInstance & f) -> void
    {
        INFO(f.name);
        auto d = all_pairs_distances(f.graph);
        if (f.predicted_witness) {
            auto v = verify_general_position(d, *f.predicted_witness);
            CHECK(v.certified);
            CHECK(v.vertices.size() == f.predicted_witness->size());
            if (f.predicted_gp)
                CHECK(static_cast<int>(f.predicted_witness->size()) == *f.predicted_gp);
        }
        if (f.predicted_gp)
            CHECK(solve(f.graph).optimum == *f.predicted_gp);
        if (f.cover)
            validate_cover(f.graph, d, *f.cover);
    }
}

TEST_CASE("basic family predictions")
{
    CHECK(make_cycle(4).predicted_gp == 2);
    CHECK(make_cycle(3).predicted_gp == 3);
    CHECK(make_complete(9).predicted_gp == 9);
    CHECK(make_path(2).predicted_gp == 2);
    CHECK(make_path(1).predicted_gp == 1);
    CHECK(make_star(5).predicted_gp == 5);
    for (int n = 1; n <= 12; ++n) {
        check_instance(make_path(n));
        check_instance(make_complete(std::min(n, 10)));
        if (n >= 3)
            check_instance(make_cycle(n));
    }
    for (int m = 1; m <= 6; ++m)
        check_instance(make_star(m));
}

TEST_CASE("canonical labelling")
{
    auto star = make_star(4).graph;
    CHECK(star.degree(0) == 4);
    auto cycle = make_cycle(6).graph;
    for (int i = 0; i < 6; ++i)
        CHECK(cycle.adjacent(i, (i + 1) % 6));
}

TEST_CASE("theta graphs")
{
    auto t45 = make_theta(4, 5);
    CHECK(t45.predicted_gp == 5);
    REQUIRE(t45.predicted_witness);
    CHECK(t45.predicted_witness->front() == 0);
    for (auto v : *t45.predicted_witness)
        if (v != 0)
            CHECK(t45.graph.adjacent(v, 1));

    CHECK(make_theta(2, 3).predicted_gp == 3);

    auto t32 = make_theta(3, 2);
    CHECK(! t32.predicted_gp);
    CHECK(t32.graph.size() == 5);
    CHECK(solve(t32.graph).optimum == brute(t32.graph));

    for (int k = 2; k <= 5; ++k)
        for (int ell = 2; ell <= 6; ++ell) {
            auto f = make_theta(k, ell);
            CHECK(f.graph.size() == 2 + k * (ell - 1));
            CHECK(f.graph.edge_count() == k * ell);
            check_instance(f);
        }
    CHECK_THROWS_AS(make_theta(1, 3), Error);
}

TEST_CASE("binary trees")
{
    auto gt2 = make_glued_binary_tree(2);
    CHECK(gt2.graph.size() == 10);
    CHECK(gt2.predicted_gp == 4);
    auto gt3 = make_glued_binary_tree(3);
    CHECK(gt3.graph.size() == 22);
    CHECK(gt3.predicted_gp == 8);
    for (int r = 2; r <= 5; ++r) {
        auto f = make_glued_binary_tree(r);
        CHECK(f.graph.size() == 3 * (1 << r) - 2);
        CHECK(verify_general_position(all_pairs_distances(f.graph), *f.predicted_witness).certified);
    }
    check_instance(gt2);
    check_instance(gt3);
    CHECK_THROWS_AS(make_glued_binary_tree(1), Error);

    auto cbt2 = make_complete_binary_tree(2);
    CHECK(cbt2.graph.size() == 7);
    CHECK(cbt2.predicted_gp == 4);
    auto cbt1 = make_complete_binary_tree(1);
    CHECK(cbt1.graph.edges() == std::vector<Edge>{ { 0, 1 }, { 0, 2 } });
    for (int r = 1; r <= 4; ++r)
        check_instance(make_complete_binary_tree(r));
}

TEST_CASE("Petersen fixture")
{
    auto p = make_petersen();
    auto d = all_pairs_distances(p.graph);
    CHECK(p.graph.size() == 10);
    CHECK(p.graph.edge_count() == 15);
    for (int v = 0; v < 10; ++v)
        CHECK(p.graph.degree(v) == 3);
    CHECK(diameter(d) == 2);
    auto t = collinear_triples(d);
    CHECK(cover_lemma_bound(p.graph, t, *p.cover).value == 6);
    CHECK(2 * static_cast<int>(p.edge_certificate->size()) == 6);
    check_instance(p);
}

TEST_CASE("G_n counterexample")
{
    auto g3 = make_gn_counterexample(3);
    CHECK(g3.graph.size() == 10);
    CHECK(bfs_leaf_count(g3.graph, 9) == 3);
    CHECK(! g3.predicted_gp);
    auto d = all_pairs_distances(g3.graph);
    for (auto u : *g3.predicted_witness)
        for (auto v : *g3.predicted_witness)
            if (u != v)
                CHECK((d(u, v) == 2 || d(u, v) == 3));
    CHECK(verify_general_position(d, *g3.predicted_witness).certified);
    auto exact = solve(g3.graph).optimum;
    CHECK(exact == brute(g3.graph));
    CHECK(exact >= 6);
}

TEST_CASE("spider with triangles")
{
    for (int n = 2; n <= 4; ++n)
        for (int s = 1; s <= 3; ++s) {
            auto f = make_spider_triangles(n, s);
            CHECK(f.graph.size() == 1 + n * (s + 3));
            auto d = all_pairs_distances(f.graph);
            auto diam = diameter(d);
            const auto & tips = *f.edge_certificate;
            CHECK(static_cast<int>(tips.size()) == n);
            for (std::size_t i = 0; i < tips.size(); ++i) {
                CHECK(f.graph.degree(tips[i].first) == 2);
                CHECK(f.graph.degree(tips[i].second) == 2);
                for (std::size_t j = i + 1; j < tips.size(); ++j)
                    CHECK(edge_distance(d, tips[i], tips[j]) == diam);
            }
            CHECK(solve(f.graph).optimum >= 2 * n);
        }
    auto s31 = make_spider_triangles(3, 1);
    CHECK(s31.graph.size() == 13);
    CHECK(solve(s31.graph).optimum == brute(s31.graph));
}

TEST_CASE("random block graphs and trees")
{
    auto single = make_random_block_graph(7, 1, 5);
    CHECK(single.predicted_gp == single.graph.size());

    auto tree = make_random_block_graph(3, 8, 2);
    CHECK(tree.graph.edge_count() == tree.graph.size() - 1);
    CHECK(tree.predicted_gp == oracle::leaf_count(tree.graph));

    auto five = make_random_block_graph(2024, 5, 4);
    CHECK(solve(five.graph).optimum == five.predicted_gp);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto b = make_random_block_graph(seed, 5, 4);
        CHECK(is_block_graph(b.graph));
        check_instance(b);
        auto t = make_random_tree(seed, 12);
        CHECK(t.predicted_gp == oracle::leaf_count(t.graph));
        check_instance(t);
    }
}

TEST_CASE("generators are deterministic")
{
    CHECK(make_random_block_graph(5, 6, 4).graph == make_random_block_graph(5, 6, 4).graph);
    CHECK(make_random_tree(5, 15).graph == make_random_tree(5, 15).graph);
    CHECK(make_theta(3, 4).graph == make_theta(3, 4).graph);
    CHECK(make_spider_triangles(3, 2).graph == make_spider_triangles(3, 2).graph);
}

TEST_CASE("parameter checks")
{
    CHECK_THROWS_AS(make_path(0), Error);
    CHECK_THROWS_AS(make_cycle(2), Error);
    CHECK_THROWS_AS(make_star(0), Error);
    CHECK_THROWS_AS(make_complete_binary_tree(0), Error);
    CHECK_THROWS_AS(make_gn_counterexample(1), Error);
    CHECK_THROWS_AS(make_spider_triangles(1, 1), Error);
    CHECK_THROWS_AS(make_random_block_graph(1, 0, 3), Error);
    CHECK_THROWS_AS(make_random_tree(1, 0), Error);
}
