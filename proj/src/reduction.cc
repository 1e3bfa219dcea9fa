#include <gpos/reduction.hh>
#include <gpos/error.hh>
#include <gpos/geodesic.hh>

#include <algorithm>
#include <string>

using std::to_string;
using std::vector;

namespace gpos
{
    auto ReductionInstance::outer_layer() const -> vector<Vertex>
    {
        vector<Vertex> outer;
        for (const auto & layers : layer_map)
            outer.push_back(layers[2]);
        return outer;
    }

    auto build_reduction(const Graph & g) -> ReductionInstance
    {
        auto n = g.size();
        if (n < 2)
            throw Error(ErrorKind::TooSmall, "reduction needs a base with at least 2 vertices, got " + to_string(n));

        vector<Edge> edges(g.edges().begin(), g.edges().end());
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j)
                edges.emplace_back(n + i, n + j);
            edges.emplace_back(i, n + i);
            edges.emplace_back(n + i, 2 * n + i);
        }

        ReductionInstance r{ g, Graph::build(3 * n, edges), {} };
        for (int i = 0; i < n; ++i)
            r.layer_map.push_back({ i, n + i, 2 * n + i });
        return r;
    }

    auto verify_membership_claim(const ReductionInstance & r, std::span<const Vertex> x) -> bool
    {
        auto n = r.base_size();
        vector<Vertex> members(x.begin(), x.end());
        for (auto v : members)
            if (v < 0 || v >= n)
                throw Error(ErrorKind::VertexOutOfRange, "base vertex " + to_string(v) + " with n=" + to_string(n));
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());

        bool independent = true;
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (r.base.adjacent(members[i], members[j]))
                    independent = false;

        vector<Vertex> lifted_set;
        for (auto v : members)
            lifted_set.push_back(r.layer_map[v][0]);
        auto outer = r.outer_layer();
        lifted_set.insert(lifted_set.end(), outer.begin(), outer.end());

        auto d = all_pairs_distances(r.lifted);
        auto in_position = verify_general_position(d, lifted_set).certified;
        return independent == in_position;
    }

    auto verify_value_claim(const ReductionInstance & r, const SolveOptions & options) -> ValueClaim
    {
        auto n = r.base_size();
        if (n < 3)
            throw Error(ErrorKind::TooSmall, "value claim needs a base with at least 3 vertices, got " + to_string(n));

        auto alpha = independence_number_exact(r.base, options);
        if (alpha.status != SolveStatus::Exact)
            throw Error(ErrorKind::TimedOut, "independence number of the base did not finish");

        auto t = collinear_triples(all_pairs_distances(r.lifted));
        auto gp = gp_exact(r.lifted, t, options);
        if (gp.status != SolveStatus::Exact)
            throw Error(ErrorKind::TimedOut, "gp of the lifted graph did not finish");

        return ValueClaim{ alpha.optimum, gp.optimum, gp.optimum == alpha.optimum + n, alpha.witness.vertices,
            gp.witness.vertices };
    }
}
