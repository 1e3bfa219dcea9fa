#ifndef GPOS_GRAPH_HH
#define GPOS_GRAPH_HH

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace gpos
{
    using Vertex = int;
    using Edge = std::pair<Vertex, Vertex>;

    /// Simple, undirected, connected graph on vertices 0..n-1. Immutable once
    /// built; construct through Graph::build, which canonicalises and
    /// validates the input.
    class Graph
    {
        public:
            /// Deduplicates and sorts the edge list. Throws Error with kind
            /// SelfLoop, VertexOutOfRange or Disconnected; n must be >= 1.
            static auto build(int n, std::span<const Edge> edges) -> Graph;

            auto size() const noexcept -> int
            {
                return static_cast<int>(_adjacency.size());
            }

            auto edge_count() const noexcept -> int
            {
                return static_cast<int>(_edges.size());
            }

            auto neighbours(Vertex v) const -> std::span<const Vertex>
            {
                return _adjacency[v];
            }

            auto degree(Vertex v) const -> int
            {
                return static_cast<int>(_adjacency[v].size());
            }

            auto adjacent(Vertex u, Vertex v) const -> bool;

            /// Edges as (u, v) with u < v, sorted lexicographically.
            auto edges() const noexcept -> const std::vector<Edge> &
            {
                return _edges;
            }

            auto operator==(const Graph &) const -> bool = default;

        private:
            Graph() = default;

            std::vector<std::vector<Vertex>> _adjacency;
            std::vector<Edge> _edges;
    };

    /// Dense table of hop distances. Only produced by all_pairs_distances, so
    /// every entry is finite.
    class DistanceMatrix
    {
        public:
            auto size() const noexcept -> int
            {
                return _n;
            }

            auto operator()(Vertex u, Vertex v) const -> int
            {
                return _dist[static_cast<std::size_t>(u) * _n + v];
            }

            auto row(Vertex u) const -> std::span<const std::uint16_t>
            {
                return { _dist.data() + static_cast<std::size_t>(u) * _n, static_cast<std::size_t>(_n) };
            }

            auto operator==(const DistanceMatrix &) const -> bool = default;

        private:
            friend auto all_pairs_distances(const Graph &, int) -> DistanceMatrix;

            int _n = 0;
            std::vector<std::uint16_t> _dist;
    };

    /// One BFS per source. With threads > 1 the sources are split across
    /// workers; the result is identical to the sequential one.
    auto all_pairs_distances(const Graph & g, int threads = 1) -> DistanceMatrix;

    auto diameter(const DistanceMatrix & d) -> int;

    /// min of the four endpoint distances. Throws NotAnEdge if e or f is not
    /// an edge (adjacency is read off the matrix: distance exactly 1).
    auto edge_distance(const DistanceMatrix & d, Edge e, Edge f) -> int;

    /// Vertices whose open neighbourhood is a clique, ascending.
    auto simplicial_vertices(const Graph & g) -> std::vector<Vertex>;

    struct BlockDecomposition
    {
        std::vector<std::vector<Vertex>> blocks;  // each sorted; blocks sorted
        std::vector<Vertex> cut_vertices;         // sorted
    };

    auto block_decomposition(const Graph & g) -> BlockDecomposition;

    auto is_block_graph(const Graph & g) -> bool;

    enum class BfsParentRule
    {
        SmallestIndex,   // canonical tree
        LeafMinimizing   // prefer a candidate parent that has no child yet
    };

    /// Parent of each vertex in the BFS tree rooted at root (-1 for the root).
    /// Vertices of each level are attached in ascending index order.
    auto bfs_tree(const Graph & g, Vertex root, BfsParentRule rule = BfsParentRule::SmallestIndex)
        -> std::vector<Vertex>;

    /// Leaves of the BFS tree: non-root vertices without children. A single
    /// vertex graph has no leaves.
    auto bfs_leaf_count(const Graph & g, Vertex root, BfsParentRule rule = BfsParentRule::SmallestIndex) -> int;

    /// Subgraph induced by the given vertices, relabelled by their position
    /// in the span. May be disconnected, so it is returned as raw parts.
    struct InducedSubgraph
    {
        int n = 0;
        std::vector<Edge> edges;
    };

    /// vertices[i] becomes vertex i; edges come out with u < v.
    auto induced_subgraph(const Graph & g, std::span<const Vertex> vertices) -> InducedSubgraph;
}

#endif
