#ifndef GPOS_SOLVER_HH
#define GPOS_SOLVER_HH

#include <gpos/geodesic.hh>
#include <gpos/graph.hh>

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>

namespace gpos
{
    enum class SolveStatus
    {
        Exact,
        TimedOut  // optimum and witness are the best found, not proven
    };

    struct SolveOptions
    {
        std::optional<std::chrono::milliseconds> time_limit;
        /// Sequential search and lexicographically smallest optimal witness.
        /// When false, threads workers share the incumbent and any optimal
        /// witness may be returned.
        bool deterministic = true;
        int threads = 1;
    };

    struct SolveResult
    {
        int optimum = 0;
        /// For gp problems: a certified general position set. For the
        /// independent-set solvers: certified means pairwise non-conflicting.
        GeneralPositionSet witness;
        std::uint64_t nodes_explored = 0;
        SolveStatus status = SolveStatus::Exact;

        auto operator==(const SolveResult &) const -> bool = default;
    };

    /// Exact gp(G) by branch and bound over the collinearity hypergraph.
    /// Vertices are branched in descending triple-degree order; the bound
    /// is a clique cover of the pair conflicts induced by the chosen set.
    auto gp_exact(const Graph & g, const TripleSet & t, const SolveOptions & options = {}) -> SolveResult;

    inline constexpr int brute_force_limit = 20;

    /// Plain enumeration of all 2^n subsets. Throws TooLarge for n > 20.
    auto gp_brute_force(const Graph & g, const TripleSet & t) -> int;

    /// Randomised greedy insertion followed by single-swap improvement.
    /// Deterministic for a given seed.
    auto gp_greedy(const Graph & g, const TripleSet & t, std::uint64_t seed) -> GeneralPositionSet;

    auto independence_number_exact(const Graph & g, const SolveOptions & options = {}) -> SolveResult;

    /// Maximum independent set of an arbitrary (possibly disconnected)
    /// conflict graph on 0..n-1.
    auto maximum_independent_set(int n, std::span<const Edge> conflicts, const SolveOptions & options = {})
        -> SolveResult;
}

#endif
