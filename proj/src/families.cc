#include <gpos/families.hh>
#include <gpos/error.hh>

#include <random>
#include <string>

using std::string;
using std::to_string;
using std::vector;

namespace gpos
{
    namespace
    {
        auto require(bool ok, const string & what) -> void
        {
            if (! ok)
                throw Error(ErrorKind::ParameterOutOfRange, what);
        }

        auto instance(int n, const vector<Edge> & edges, string name) -> FamilyInstance
        {
            return FamilyInstance{ Graph::build(n, edges), std::move(name), {}, {}, {}, {} };
        }

        auto binary_tree_edges(int r, vector<Edge> & edges) -> void
        {
            int internal = (1 << r) - 1;
            for (int i = 0; i < internal; ++i) {
                edges.emplace_back(i, 2 * i + 1);
                edges.emplace_back(i, 2 * i + 2);
            }
        }
    }

    auto make_path(int n) -> FamilyInstance
    {
        require(n >= 1, "path needs n >= 1, got " + to_string(n));
        vector<Edge> edges;
        for (int i = 0; i + 1 < n; ++i)
            edges.emplace_back(i, i + 1);
        auto inst = instance(n, edges, "path(" + to_string(n) + ")");
        inst.predicted_gp = std::min(n, 2);
        inst.predicted_witness = n == 1 ? vector<Vertex>{ 0 } : vector<Vertex>{ 0, n - 1 };
        inst.cover = IsometricCover{ { vector<Vertex>(static_cast<std::size_t>(n)) }, { PartKind::Path } };
        for (int i = 0; i < n; ++i)
            inst.cover->parts[0][i] = i;
        return inst;
    }

    auto make_cycle(int n) -> FamilyInstance
    {
        require(n >= 3, "cycle needs n >= 3, got " + to_string(n));
        vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            edges.emplace_back(i, (i + 1) % n);
        auto inst = instance(n, edges, "cycle(" + to_string(n) + ")");
        inst.predicted_gp = n == 4 ? 2 : 3;
        inst.predicted_witness = n == 4 ? vector<Vertex>{ 0, 1 } : vector<Vertex>{ 0, n / 3, 2 * n / 3 };
        return inst;
    }

    auto make_complete(int n) -> FamilyInstance
    {
        require(n >= 1, "complete graph needs n >= 1, got " + to_string(n));
        vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                edges.emplace_back(i, j);
        auto inst = instance(n, edges, "complete(" + to_string(n) + ")");
        inst.predicted_gp = n;
        inst.predicted_witness = vector<Vertex>(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            (*inst.predicted_witness)[i] = i;
        return inst;
    }

    auto make_star(int m) -> FamilyInstance
    {
        require(m >= 1, "star needs m >= 1, got " + to_string(m));
        vector<Edge> edges;
        vector<Vertex> leaves;
        for (int i = 1; i <= m; ++i) {
            edges.emplace_back(0, i);
            leaves.push_back(i);
        }
        auto inst = instance(m + 1, edges, "star(" + to_string(m) + ")");
        if (m == 1)
            leaves = { 0, 1 };
        inst.predicted_gp = static_cast<int>(leaves.size());
        inst.predicted_witness = leaves;
        return inst;
    }

    auto make_theta(int k, int ell) -> FamilyInstance
    {
        require(k >= 2 && ell >= 2, "theta needs k >= 2 and l >= 2, got k=" + to_string(k) + " l=" + to_string(ell));
        int n = 2 + k * (ell - 1);
        vector<Edge> edges;
        vector<Vertex> witness{ 0 };
        for (int i = 0; i < k; ++i) {
            int first = 2 + i * (ell - 1);
            int last = first + ell - 2;
            edges.emplace_back(0, first);
            for (int v = first; v < last; ++v)
                edges.emplace_back(v, v + 1);
            edges.emplace_back(last, 1);
            witness.push_back(last);
        }
        auto inst = instance(n, edges, "theta(" + to_string(k) + "," + to_string(ell) + ")");
        if (ell >= 3) {
            inst.predicted_gp = k + 1;
            inst.predicted_witness = witness;
        }
        return inst;
    }

    auto make_complete_binary_tree(int r) -> FamilyInstance
    {
        require(r >= 1, "complete binary tree needs r >= 1, got " + to_string(r));
        int n = (1 << (r + 1)) - 1;
        vector<Edge> edges;
        binary_tree_edges(r, edges);
        auto inst = instance(n, edges, "cbt(" + to_string(r) + ")");
        vector<Vertex> leaves;
        for (int v = (1 << r) - 1; v < n; ++v)
            leaves.push_back(v);
        inst.predicted_gp = 1 << r;
        inst.predicted_witness = leaves;
        return inst;
    }

    auto make_glued_binary_tree(int r) -> FamilyInstance
    {
        require(r >= 2, "glued binary tree needs r >= 2, got " + to_string(r));
        int full = (1 << (r + 1)) - 1;
        int internal = (1 << r) - 1;
        vector<Edge> edges;
        binary_tree_edges(r, edges);
        auto second = [&](int heap) { return heap < internal ? full + heap : heap; };
        for (int i = 0; i < internal; ++i) {
            edges.emplace_back(second(i), second(2 * i + 1));
            edges.emplace_back(second(i), second(2 * i + 2));
        }
        int n = full + internal;
        if (n != 3 * (1 << r) - 2)
            throw Error(ErrorKind::ParameterOutOfRange, "glued binary tree order mismatch");

        auto inst = instance(n, edges, "gt(" + to_string(r) + ")");
        vector<Vertex> quasi_leaves;
        for (int v = internal; v < full; ++v)
            quasi_leaves.push_back(v);
        inst.predicted_gp = 1 << r;
        inst.predicted_witness = quasi_leaves;
        return inst;
    }

    auto make_petersen() -> FamilyInstance
    {
        vector<Edge> edges;
        for (int i = 0; i < 5; ++i) {
            edges.emplace_back(i, (i + 1) % 5);
            edges.emplace_back(5 + i, 5 + (i + 2) % 5);
            edges.emplace_back(i, i + 5);
        }
        auto inst = instance(10, edges, "petersen");
        inst.predicted_gp = 6;
        inst.cover = IsometricCover{ { { 0, 1, 2, 3, 4 }, { 5, 6, 7, 8, 9 } }, { PartKind::Cycle, PartKind::Cycle } };
        inst.edge_certificate = vector<Edge>{ { 0, 1 }, { 3, 8 }, { 7, 9 } };
        inst.predicted_witness = vector<Vertex>{ 0, 1, 3, 7, 8, 9 };
        return inst;
    }

    auto make_gn_counterexample(int n) -> FamilyInstance
    {
        require(n >= 2, "G_n needs n >= 2, got " + to_string(n));
        vector<Edge> edges;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j)
                edges.emplace_back(i, j);
            edges.emplace_back(i, n + i);
            edges.emplace_back(i, 2 * n + i);
            edges.emplace_back(3 * n, 2 * n + i);
        }
        auto inst = instance(3 * n + 1, edges, "gn(" + to_string(n) + ")");
        vector<Vertex> witness;
        for (int v = n; v < 3 * n; ++v)
            witness.push_back(v);
        inst.predicted_witness = witness;
        return inst;
    }

    auto make_spider_triangles(int n, int s) -> FamilyInstance
    {
        require(n >= 2 && s >= 1, "spider needs n >= 2 and s >= 1, got n=" + to_string(n) + " s=" + to_string(s));
        vector<Edge> edges;
        vector<Edge> tips;
        int next = 1;
        for (int arm = 0; arm < n; ++arm) {
            int previous = 0;
            for (int step = 0; step <= s; ++step) {
                edges.emplace_back(previous, next);
                previous = next++;
            }
            int leaf = previous;
            int a = next++, b = next++;
            edges.emplace_back(leaf, a);
            edges.emplace_back(leaf, b);
            edges.emplace_back(a, b);
            tips.emplace_back(a, b);
        }
        auto inst = instance(next, edges, "spider(" + to_string(n) + "," + to_string(s) + ")");
        inst.edge_certificate = tips;
        return inst;
    }

    auto make_random_block_graph(std::uint64_t seed, int blocks, int max_block_size) -> FamilyInstance
    {
        require(blocks >= 1 && max_block_size >= 2, "block graph needs blocks >= 1 and max_block_size >= 2, got "
                + to_string(blocks) + ", " + to_string(max_block_size));
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> block_size(2, max_block_size);

        vector<Edge> edges;
        int n = 0;
        for (int b = 0; b < blocks; ++b) {
            vector<Vertex> members;
            if (n > 0)
                members.push_back(std::uniform_int_distribution<int>(0, n - 1)(rng));
            int size = block_size(rng);
            while (static_cast<int>(members.size()) < size)
                members.push_back(n++);
            for (std::size_t i = 0; i < members.size(); ++i)
                for (std::size_t j = i + 1; j < members.size(); ++j)
                    edges.emplace_back(members[i], members[j]);
        }
        auto inst = instance(n, edges, "block-random(" + to_string(seed) + "," + to_string(blocks) + ","
                + to_string(max_block_size) + ")");
        auto simplicial = simplicial_vertices(inst.graph);
        inst.predicted_gp = static_cast<int>(simplicial.size());
        inst.predicted_witness = simplicial;
        return inst;
    }

    auto make_random_tree(std::uint64_t seed, int n) -> FamilyInstance
    {
        require(n >= 1, "tree needs n >= 1, got " + to_string(n));
        std::mt19937_64 rng(seed);
        vector<Edge> edges;
        for (int v = 1; v < n; ++v)
            edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
        auto inst = instance(n, edges, "tree-random(" + to_string(seed) + "," + to_string(n) + ")");
        auto simplicial = simplicial_vertices(inst.graph);
        inst.predicted_gp = static_cast<int>(simplicial.size());
        inst.predicted_witness = simplicial;
        return inst;
    }
}
