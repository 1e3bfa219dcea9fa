#ifndef GPOS_GEODESIC_HH
#define GPOS_GEODESIC_HH

#include <gpos/graph.hh>

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace gpos
{
    /// y lies strictly between x and z on some geodesic; stored with x < z.
    struct Triple
    {
        Vertex x, y, z;

        auto operator<=>(const Triple &) const = default;
    };

    /// Above this order the collinearity hypergraph is not materialised.
    inline constexpr int default_triple_materialize_limit = 1500;

    /// The collinearity hypergraph of a graph: every triple (x, y, z), x < z,
    /// with d(x, z) = d(x, y) + d(y, z). Triples are sorted lexicographically.
    class TripleSet
    {
        public:
            auto size() const noexcept -> int
            {
                return _n;
            }

            auto triples() const noexcept -> std::span<const Triple>
            {
                return _triples;
            }

            /// Indices into triples() of the triples that contain v in any role.
            auto incident(Vertex v) const -> std::span<const std::uint32_t>
            {
                return _incident[v];
            }

            auto degree(Vertex v) const -> int
            {
                return static_cast<int>(_incident[v].size());
            }

        private:
            friend auto collinear_triples(const DistanceMatrix &, int) -> TripleSet;

            int _n = 0;
            std::vector<Triple> _triples;
            std::vector<std::vector<std::uint32_t>> _incident;
    };

    /// Throws VertexOutOfRange.
    auto is_between(const DistanceMatrix & d, Vertex x, Vertex y, Vertex z) -> bool;

    /// O(n^3) scan. Throws TooLarge above materialize_limit.
    auto collinear_triples(const DistanceMatrix & d, int materialize_limit = default_triple_materialize_limit)
        -> TripleSet;

    struct GeneralPositionSet
    {
        std::vector<Vertex> vertices;  // sorted, distinct
        bool certified = false;
        std::optional<Triple> witness;

        auto operator==(const GeneralPositionSet &) const -> bool = default;
    };

    /// Certifies s, or reports the lexicographically smallest contained triple.
    /// Duplicates in s are ignored. Throws VertexOutOfRange.
    auto verify_general_position(const TripleSet & t, std::span<const Vertex> s) -> GeneralPositionSet;

    /// Same contract, evaluated straight from the distance table; usable for
    /// graphs too large to materialise a TripleSet.
    auto verify_general_position(const DistanceMatrix & d, std::span<const Vertex> s) -> GeneralPositionSet;
}

#endif
