#include <gpos/geodesic.hh>
#include <gpos/error.hh>

#include <algorithm>
#include <string>

using std::string;
using std::to_string;
using std::vector;

namespace gpos
{
    namespace
    {
        auto normalise(std::span<const Vertex> s, int n) -> vector<Vertex>
        {
            vector<Vertex> sorted(s.begin(), s.end());
            for (auto v : sorted)
                if (v < 0 || v >= n)
                    throw Error(ErrorKind::VertexOutOfRange, "vertex " + to_string(v) + " with n=" + to_string(n));
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            return sorted;
        }
    }

    auto is_between(const DistanceMatrix & d, Vertex x, Vertex y, Vertex z) -> bool
    {
        auto n = d.size();
        for (auto v : { x, y, z })
            if (v < 0 || v >= n)
                throw Error(ErrorKind::VertexOutOfRange, "vertex " + to_string(v) + " with n=" + to_string(n));
        if (x == y || y == z || x == z)
            return false;
        return d(x, z) == d(x, y) + d(y, z);
    }

    auto collinear_triples(const DistanceMatrix & d, int materialize_limit) -> TripleSet
    {
        auto n = d.size();
        if (n > materialize_limit)
            throw Error(ErrorKind::TooLarge, "n=" + to_string(n) + " exceeds the triple materialisation limit "
                    + to_string(materialize_limit));

        TripleSet t;
        t._n = n;
        t._incident.resize(n);
        for (Vertex x = 0; x < n; ++x) {
            auto from_x = d.row(x);
            for (Vertex y = 0; y < n; ++y) {
                if (y == x)
                    continue;
                auto from_y = d.row(y);
                for (Vertex z = x + 1; z < n; ++z)
                    if (z != y && from_x[z] == from_x[y] + from_y[z])
                        t._triples.push_back({ x, y, z });
            }
        }

        for (std::uint32_t i = 0; i < t._triples.size(); ++i) {
            auto [x, y, z] = t._triples[i];
            t._incident[x].push_back(i);
            t._incident[y].push_back(i);
            t._incident[z].push_back(i);
        }
        return t;
    }

    auto verify_general_position(const TripleSet & t, std::span<const Vertex> s) -> GeneralPositionSet
    {
        GeneralPositionSet result;
        result.vertices = normalise(s, t.size());

        vector<char> member(t.size(), 0);
        for (auto v : result.vertices)
            member[v] = 1;

        // triples() is sorted, so the first hit is the smallest violation
        if (result.vertices.size() >= 3)
            for (const auto & tr : t.triples())
                if (member[tr.x] && member[tr.y] && member[tr.z]) {
                    result.witness = tr;
                    break;
                }

        result.certified = ! result.witness;
        return result;
    }

    auto verify_general_position(const DistanceMatrix & d, std::span<const Vertex> s) -> GeneralPositionSet
    {
        GeneralPositionSet result;
        result.vertices = normalise(s, d.size());
        const auto & v = result.vertices;

        for (std::size_t i = 0; i < v.size() && ! result.witness; ++i)
            for (std::size_t j = 0; j < v.size() && ! result.witness; ++j) {
                if (j == i)
                    continue;
                for (std::size_t k = i + 1; k < v.size(); ++k)
                    if (k != j && d(v[i], v[k]) == d(v[i], v[j]) + d(v[j], v[k])) {
                        result.witness = Triple{ v[i], v[j], v[k] };
                        break;
                    }
            }

        result.certified = ! result.witness;
        return result;
    }
}
