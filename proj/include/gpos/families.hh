#ifndef GPOS_FAMILIES_HH
#define GPOS_FAMILIES_HH

#include <gpos/bounds.hh>
#include <gpos/graph.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gpos
{
    /// A generated graph together with what is known about it in closed form.
    struct FamilyInstance
    {
        Graph graph;
        std::string name;
        std::optional<int> predicted_gp;
        std::optional<std::vector<Vertex>> predicted_witness;
        std::optional<IsometricCover> cover;
        std::optional<std::vector<Edge>> edge_certificate;
    };

    /// Path 0-1-...-(n-1); n >= 1.
    auto make_path(int n) -> FamilyInstance;

    /// Cycle 0-1-...-(n-1)-0; n >= 3.
    auto make_cycle(int n) -> FamilyInstance;

    auto make_complete(int n) -> FamilyInstance;

    /// K_{1,m}, centre 0, leaves 1..m; m >= 1.
    auto make_star(int m) -> FamilyInstance;

    /// Hubs A = 0 and B = 1; path i (0-based) has internal vertices
    /// 2 + i(l-1) .. 2 + i(l-1) + l-2 listed from the A side. k >= 2, l >= 2.
    /// The prediction k + 1 is only made for l >= 3.
    auto make_theta(int k, int ell) -> FamilyInstance;

    /// Heap labelled complete binary tree of depth r (root 0, children of i
    /// are 2i+1 and 2i+2); r >= 1.
    auto make_complete_binary_tree(int r) -> FamilyInstance;

    /// First tree heap labelled as in make_complete_binary_tree; the internal
    /// vertices of the second tree follow at offset 2^(r+1) - 1 with the same
    /// heap shape, sharing the leaves (the quasi-leaves). r >= 2.
    auto make_glued_binary_tree(int r) -> FamilyInstance;

    /// Outer cycle 0..4, inner pentagram 5..9 (5+i ~ 5+(i+2) mod 5), spokes
    /// i ~ i+5. Carries the two 5-cycles as a cover and three edges pairwise
    /// at distance 2.
    auto make_petersen() -> FamilyInstance;

    /// x_i = i, y_i = n + i, z_i = 2n + i, w = 3n; n >= 2. X is a clique,
    /// x_i ~ y_i, x_i ~ z_i, w ~ every z_i. Witness Y u Z, no prediction.
    auto make_gn_counterexample(int n) -> FamilyInstance;

    /// Centre 0; arm i is the path through s subdivision vertices to its leaf,
    /// then a triangle on the leaf and two tips. n >= 2, s >= 1. The edge
    /// certificate is the n tip-tip edges.
    auto make_spider_triangles(int n, int s) -> FamilyInstance;

    /// A tree of cliques: each new block (order 2..max_block_size) is glued at
    /// a random existing vertex. Prediction is the simplicial vertex count.
    auto make_random_block_graph(std::uint64_t seed, int blocks, int max_block_size) -> FamilyInstance;

    /// Random labelled tree on n vertices (random attachment); n >= 1.
    auto make_random_tree(std::uint64_t seed, int n) -> FamilyInstance;
}

#endif
