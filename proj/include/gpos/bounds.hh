#ifndef GPOS_BOUNDS_HH
#define GPOS_BOUNDS_HH

#include <gpos/geodesic.hh>
#include <gpos/graph.hh>
#include <gpos/solver.hh>

#include <chrono>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gpos
{
    enum class PartKind
    {
        Path,
        Cycle,
        General
    };

    /// Vertex sets each claimed to induce an isometric subgraph, jointly
    /// covering the graph. kinds is parallel to parts.
    struct IsometricCover
    {
        std::vector<std::vector<Vertex>> parts;
        std::vector<PartKind> kinds;

        auto operator==(const IsometricCover &) const -> bool = default;
    };

    /// Induced subgraph on h is connected and distance-preserving. Throws
    /// EmptySet for an empty h.
    auto is_isometric_subgraph(const Graph & g, const DistanceMatrix & d, std::span<const Vertex> h) -> bool;

    /// Throws InvalidCover naming the first offending part (not isometric,
    /// tag does not match the induced shape) or the first uncovered vertex.
    auto validate_cover(const Graph & g, const DistanceMatrix & d, const IsometricCover & cover) -> void;

    struct CoverBound
    {
        int value = 0;
        std::vector<int> part_values;
    };

    /// Sum of gp over the parts: paths score min(2, order), cycles 3 except
    /// C_4 which scores 2, general parts are solved exactly (or score their
    /// order if the solve runs out of time).
    auto cover_lemma_bound(const Graph & g, const TripleSet & t, const IsometricCover & cover,
            const SolveOptions & options = {}) -> CoverBound;

    enum class BoundMode
    {
        Exact,
        Greedy
    };

    inline constexpr int ip_exact_limit = 30;
    inline constexpr int packing_exact_limit = 40;
    inline constexpr int distant_edge_exact_limit = 40;

    /// Fewest geodesics starting at v whose union is V(G). Exact mode
    /// (n <= 30, else TooLargeForExact) returns the true minimum; greedy mode
    /// returns the smallest feasible cover it finds. A one-vertex graph needs
    /// no path and returns 0.
    auto ip_from_vertex(const Graph & g, const DistanceMatrix & d, Vertex v, BoundMode mode) -> int;

    /// |R| <= ip(v, G) + 1 for every v in R (exact ip). R must be certified.
    auto vertex_path_bound_check(const Graph & g, const GeneralPositionSet & r) -> bool;

    /// |R| <= 1 + min over v in R of the BFS leaf count (either parent rule).
    auto bfs_leaf_bound_check(const Graph & g, const GeneralPositionSet & r) -> bool;

    struct Packing
    {
        int k = 1;
        std::vector<Vertex> vertices;
        bool exact = false;

        auto size() const -> int
        {
            return static_cast<int>(vertices.size());
        }
    };

    /// Largest set with pairwise distance > k. Exact mode: n <= 40.
    auto k_packing_number(const DistanceMatrix & d, int k, BoundMode mode) -> Packing;

    /// alpha_k for the least k >= 1 with diam <= 2k + 1; exact when n <= 40,
    /// otherwise greedy (flagged in the packing).
    auto packing_lower_bound(const Graph & g, const DistanceMatrix & d) -> Packing;

    struct DistantEdges
    {
        int diameter = 0;
        std::vector<Edge> edges;
        bool exact = false;

        auto bound() const -> int
        {
            return 2 * static_cast<int>(edges.size());
        }
    };

    /// Largest edge set pairwise at edge distance exactly diam(G). Exact mode
    /// needs n <= 40. Throws DiameterTooSmall when diam(G) < 2.
    auto distant_edge_bound(const Graph & g, const DistanceMatrix & d, BoundMode mode) -> DistantEdges;

    /// Greedy cover of V(G) by geodesics, each picked to cover the most
    /// uncovered vertices.
    auto greedy_path_cover(const Graph & g, const DistanceMatrix & d) -> IsometricCover;

    enum class CertificateKind
    {
        None,
        GeneralPosition,
        Packing,
        EdgeSet,
        Cover
    };

    struct Certificate
    {
        CertificateKind kind = CertificateKind::None;
        std::vector<Vertex> vertices;
        std::vector<Edge> edges;
        IsometricCover cover;
        std::vector<int> part_values;
        int k = 0;

        auto operator==(const Certificate &) const -> bool = default;
    };

    /// A bound that was either computed (value set) or skipped (note says why).
    struct BoundEntry
    {
        std::optional<int> value;
        std::string method;
        Certificate certificate;
        std::string note;

        auto operator==(const BoundEntry &) const -> bool = default;
    };

    struct BoundsReport
    {
        std::map<std::string, BoundEntry> lower;
        std::map<std::string, BoundEntry> upper;
        std::optional<int> exact;
        std::optional<SolveResult> solve;
        std::map<std::string, std::optional<bool>> checks;

        auto operator==(const BoundsReport &) const -> bool = default;

        auto best_lower() const -> int;
        auto best_upper() const -> int;
        /// max lower <= min upper, and exact (if any) inside that range.
        auto consistent() const -> bool;
    };

    struct BoundsOptions
    {
        std::optional<std::chrono::milliseconds> budget;
        std::optional<IsometricCover> cover;
        bool deterministic = true;
        int threads = 1;
        int greedy_seeds = 8;
    };

    auto bounds_report(const Graph & g, const BoundsOptions & options = {}) -> BoundsReport;

    /// Re-derives a lower or upper bound entry from its certificate alone.
    /// Skipped entries recheck trivially.
    auto recheck_bound(const Graph & g, const DistanceMatrix & d, const TripleSet & t, const BoundEntry & entry,
            bool is_lower) -> bool;
}

#endif
