#ifndef GPOS_SRC_SEARCH_HH
#define GPOS_SRC_SEARCH_HH

#include <gpos/graph.hh>

#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace gpos::detail
{
    /// A family of forbidden pairs and forbidden triples over 0..n-1. The
    /// search looks for a largest subset containing none of them.
    struct ConflictSystem
    {
        int n = 0;
        std::vector<std::vector<Vertex>> pairs;                          // symmetric
        std::vector<std::vector<std::pair<Vertex, Vertex>>> triples;    // partners of each vertex
    };

    struct SearchLimits
    {
        std::optional<std::chrono::steady_clock::time_point> deadline;
        int threads = 1;
        /// Branching order; empty means by index.
        std::vector<Vertex> order;
        /// When set, stop at the first set of this size instead of maximising.
        std::optional<int> target;
    };

    struct SearchOutcome
    {
        std::vector<Vertex> best;  // sorted
        bool complete = false;
        std::uint64_t nodes = 0;
    };

    /// Include-first branch and bound. The bound is |chosen| plus a greedy
    /// clique cover of the pair conflicts that the chosen set induces among
    /// the remaining candidates. The incumbent must itself be conflict-free.
    auto maximum_conflict_free_set(const ConflictSystem & system, const SearchLimits & limits,
            std::vector<Vertex> incumbent) -> SearchOutcome;

    /// Branching order: descending conflict degree (pairs plus triples), ties by index.
    auto degree_order(const ConflictSystem & system) -> std::vector<Vertex>;
}

#endif
