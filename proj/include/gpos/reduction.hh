#ifndef GPOS_REDUCTION_HH
#define GPOS_REDUCTION_HH

#include <gpos/graph.hh>
#include <gpos/solver.hh>

#include <array>
#include <span>
#include <vector>

namespace gpos
{
    /// The independent-set to general-position gadget. For base vertex i the
    /// lifted graph holds v = i, v' = n + i, v'' = 2n + i; V' is a clique and
    /// the two layers are joined by the matchings v-v' and v'-v''.
    struct ReductionInstance
    {
        Graph base;
        Graph lifted;
        std::vector<std::array<Vertex, 3>> layer_map;

        auto base_size() const -> int
        {
            return base.size();
        }

        /// V'' in ascending order.
        auto outer_layer() const -> std::vector<Vertex>;
    };

    /// Throws TooSmall for a base with fewer than two vertices.
    auto build_reduction(const Graph & g) -> ReductionInstance;

    /// Evaluates [x independent in the base] == [x u V'' in general position
    /// in the lift] and returns whether the two sides agree. Throws
    /// VertexOutOfRange for x outside the base.
    auto verify_membership_claim(const ReductionInstance & r, std::span<const Vertex> x) -> bool;

    struct ValueClaim
    {
        int alpha = 0;
        int lifted_gp = 0;
        bool holds = false;  // lifted_gp == alpha + n
        std::vector<Vertex> alpha_witness;
        std::vector<Vertex> gp_witness;
    };

    /// Solves both sides exactly. Throws TooSmall for a base with fewer than
    /// three vertices and TimedOut if either solve runs out of budget.
    auto verify_value_claim(const ReductionInstance & r, const SolveOptions & options = {}) -> ValueClaim;
}

#endif
