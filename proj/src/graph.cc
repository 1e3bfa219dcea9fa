#include <gpos/graph.hh>
#include <gpos/error.hh>

#include <algorithm>
#include <limits>
#include <string>
#include <thread>

using std::string;
using std::to_string;
using std::vector;

namespace gpos
{
    namespace
    {
        auto pair_name(const Edge & e) -> string
        {
            return "(" + to_string(e.first) + "," + to_string(e.second) + ")";
        }

        auto bfs_into(const Graph & g, Vertex source, std::span<std::uint16_t> out, vector<Vertex> & queue) -> void
        {
            constexpr auto unseen = std::numeric_limits<std::uint16_t>::max();
            std::fill(out.begin(), out.end(), unseen);
            queue.clear();
            queue.push_back(source);
            out[source] = 0;
            for (std::size_t head = 0; head < queue.size(); ++head) {
                auto u = queue[head];
                for (auto w : g.neighbours(u))
                    if (out[w] == unseen) {
                        out[w] = out[u] + 1;
                        queue.push_back(w);
                    }
            }
        }
    }

    auto Graph::build(int n, std::span<const Edge> edges) -> Graph
    {
        if (n < 1)
            throw Error(ErrorKind::ParameterOutOfRange, "graph needs at least one vertex, got n=" + to_string(n));
        if (n > std::numeric_limits<std::uint16_t>::max() - 1)
            throw Error(ErrorKind::TooLarge, "graph order " + to_string(n) + " exceeds the distance table range");

        Graph g;
        g._adjacency.resize(n);
        g._edges.reserve(edges.size());
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw Error(ErrorKind::VertexOutOfRange, "edge " + pair_name({ u, v }) + " with n=" + to_string(n));
            if (u == v)
                throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + to_string(u));
            g._edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(g._edges.begin(), g._edges.end());
        g._edges.erase(std::unique(g._edges.begin(), g._edges.end()), g._edges.end());

        for (auto [u, v] : g._edges) {
            g._adjacency[u].push_back(v);
            g._adjacency[v].push_back(u);
        }
        for (auto & nbrs : g._adjacency)
            std::sort(nbrs.begin(), nbrs.end());

        vector<char> seen(n, 0);
        vector<Vertex> stack{ 0 };
        seen[0] = 1;
        int reached = 1;
        while (! stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (auto w : g._adjacency[u])
                if (! seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != n) {
            auto first = static_cast<Vertex>(std::find(seen.begin(), seen.end(), 0) - seen.begin());
            throw Error(ErrorKind::Disconnected, "vertex " + to_string(first) + " is not reachable from vertex 0");
        }

        return g;
    }

    auto Graph::adjacent(Vertex u, Vertex v) const -> bool
    {
        const auto & nbrs = _adjacency[u];
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }

    auto all_pairs_distances(const Graph & g, int threads) -> DistanceMatrix
    {
        DistanceMatrix d;
        auto n = g.size();
        d._n = n;
        d._dist.resize(static_cast<std::size_t>(n) * n);

        auto run = [&](Vertex from, Vertex to) {
            vector<Vertex> queue;
            queue.reserve(n);
            for (Vertex s = from; s < to; ++s)
                bfs_into(g, s, { d._dist.data() + static_cast<std::size_t>(s) * n, static_cast<std::size_t>(n) }, queue);
        };

        threads = std::clamp(threads, 1, std::max(1, n / 64));
        if (threads == 1)
            run(0, n);
        else {
            vector<std::jthread> workers;
            auto chunk = (n + threads - 1) / threads;
            for (int t = 0; t < threads; ++t)
                workers.emplace_back(run, std::min(n, t * chunk), std::min(n, (t + 1) * chunk));
        }
        return d;
    }

    auto diameter(const DistanceMatrix & d) -> int
    {
        int best = 0;
        for (Vertex u = 0; u < d.size(); ++u)
            for (auto x : d.row(u))
                best = std::max<int>(best, x);
        return best;
    }

    auto edge_distance(const DistanceMatrix & d, Edge e, Edge f) -> int
    {
        for (auto [u, v] : { e, f }) {
            if (u < 0 || v < 0 || u >= d.size() || v >= d.size())
                throw Error(ErrorKind::VertexOutOfRange, "edge " + pair_name({ u, v }));
            if (d(u, v) != 1)
                throw Error(ErrorKind::NotAnEdge, pair_name({ u, v }) + " is not an edge");
        }
        return std::min({ d(e.first, f.first), d(e.first, f.second), d(e.second, f.first), d(e.second, f.second) });
    }

    auto simplicial_vertices(const Graph & g) -> vector<Vertex>
    {
        vector<Vertex> result;
        for (Vertex v = 0; v < g.size(); ++v) {
            auto nbrs = g.neighbours(v);
            bool clique = true;
            for (std::size_t i = 0; clique && i < nbrs.size(); ++i)
                for (std::size_t j = i + 1; clique && j < nbrs.size(); ++j)
                    clique = g.adjacent(nbrs[i], nbrs[j]);
            if (clique)
                result.push_back(v);
        }
        return result;
    }

    auto block_decomposition(const Graph & g) -> BlockDecomposition
    {
        // Iterative Hopcroft-Tarjan with an edge stack.
        auto n = g.size();
        BlockDecomposition result;
        if (n == 1) {
            result.blocks.push_back({ 0 });
            return result;
        }

        vector<int> disc(n, -1), low(n, 0);
        vector<std::size_t> next_child(n, 0);
        vector<Vertex> parent(n, -1);
        vector<Edge> edge_stack;
        vector<Vertex> call_stack;
        vector<int> block_count(n, 0);
        int time = 0;

        auto pop_block = [&](Vertex u, Vertex w) {
            vector<Vertex> block;
            while (true) {
                auto e = edge_stack.back();
                edge_stack.pop_back();
                block.push_back(e.first);
                block.push_back(e.second);
                if (e == Edge{ u, w })
                    break;
            }
            std::sort(block.begin(), block.end());
            block.erase(std::unique(block.begin(), block.end()), block.end());
            for (auto x : block)
                ++block_count[x];
            result.blocks.push_back(std::move(block));
        };

        disc[0] = low[0] = time++;
        call_stack.push_back(0);
        while (! call_stack.empty()) {
            auto u = call_stack.back();
            auto nbrs = g.neighbours(u);
            if (next_child[u] < nbrs.size()) {
                auto w = nbrs[next_child[u]++];
                if (disc[w] == -1) {
                    parent[w] = u;
                    disc[w] = low[w] = time++;
                    edge_stack.emplace_back(u, w);
                    call_stack.push_back(w);
                }
                else if (w != parent[u] && disc[w] < disc[u]) {
                    edge_stack.emplace_back(u, w);
                    low[u] = std::min(low[u], disc[w]);
                }
            }
            else {
                call_stack.pop_back();
                auto p = parent[u];
                if (p != -1) {
                    low[p] = std::min(low[p], low[u]);
                    if (low[u] >= disc[p])
                        pop_block(p, u);
                }
            }
        }

        for (Vertex v = 0; v < n; ++v)
            if (block_count[v] >= 2)
                result.cut_vertices.push_back(v);
        std::sort(result.blocks.begin(), result.blocks.end());
        return result;
    }

    auto is_block_graph(const Graph & g) -> bool
    {
        for (const auto & block : block_decomposition(g).blocks)
            for (std::size_t i = 0; i < block.size(); ++i)
                for (std::size_t j = i + 1; j < block.size(); ++j)
                    if (! g.adjacent(block[i], block[j]))
                        return false;
        return true;
    }

    auto bfs_tree(const Graph & g, Vertex root, BfsParentRule rule) -> vector<Vertex>
    {
        auto n = g.size();
        if (root < 0 || root >= n)
            throw Error(ErrorKind::VertexOutOfRange, "BFS root " + to_string(root) + " with n=" + to_string(n));

        vector<int> level(n, -1);
        vector<Vertex> parent(n, -1);
        vector<int> children(n, 0);
        vector<Vertex> frontier{ root }, next;
        level[root] = 0;
        for (int depth = 1; ! frontier.empty(); ++depth) {
            next.clear();
            for (auto u : frontier)
                for (auto w : g.neighbours(u))
                    if (level[w] == -1) {
                        level[w] = depth;
                        next.push_back(w);
                    }
            std::sort(next.begin(), next.end());
            for (auto w : next) {
                Vertex chosen = -1;
                for (auto c : g.neighbours(w)) {
                    if (level[c] != depth - 1)
                        continue;
                    if (chosen == -1)
                        chosen = c;
                    if (rule == BfsParentRule::SmallestIndex)
                        break;
                    if (children[c] == 0) {
                        chosen = c;
                        break;
                    }
                }
                parent[w] = chosen;
                ++children[chosen];
            }
            std::swap(frontier, next);
        }
        return parent;
    }

    auto bfs_leaf_count(const Graph & g, Vertex root, BfsParentRule rule) -> int
    {
        auto parent = bfs_tree(g, root, rule);
        vector<char> has_child(g.size(), 0);
        for (auto p : parent)
            if (p != -1)
                has_child[p] = 1;
        int leaves = 0;
        for (Vertex v = 0; v < g.size(); ++v)
            if (v != root && ! has_child[v])
                ++leaves;
        return leaves;
    }

    auto induced_subgraph(const Graph & g, std::span<const Vertex> vertices) -> InducedSubgraph
    {
        InducedSubgraph h;
        h.n = static_cast<int>(vertices.size());
        vector<int> position(g.size(), -1);
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            auto v = vertices[i];
            if (v < 0 || v >= g.size())
                throw Error(ErrorKind::VertexOutOfRange, "vertex " + to_string(v));
            position[v] = static_cast<int>(i);
        }
        for (auto [u, v] : g.edges())
            if (position[u] != -1 && position[v] != -1)
                h.edges.emplace_back(std::min(position[u], position[v]), std::max(position[u], position[v]));
        return h;
    }
}
