#ifndef GPOS_IO_HH
#define GPOS_IO_HH

#include <gpos/bounds.hh>
#include <gpos/graph.hh>

#include <string>
#include <string_view>
#include <vector>

namespace gpos
{
    /// "n m" header, then m lines "u v" (0-based). Blank lines and lines
    /// starting with '#' are skipped. Errors carry the 1-based line number.
    auto parse_edge_list(std::string_view text) -> Graph;

    auto serialize_edge_list(const Graph & g) -> std::string;

    /// One graph6 line (an optional ">>graph6<<" prefix is stripped).
    auto parse_graph6(std::string_view line) -> Graph;

    /// One graph per non-empty line.
    auto parse_graph6_batch(std::string_view text) -> std::vector<Graph>;

    /// Without trailing newline.
    auto serialize_graph6(const Graph & g) -> std::string;

    /// One part per line: comma-separated vertices, optionally prefixed by
    /// "path:", "cycle:" or "general:" (untagged parts are general).
    auto parse_cover(std::string_view text) -> IsometricCover;

    auto serialize_cover(const IsometricCover & cover) -> std::string;

    /// "3,5,7" (whitespace tolerated, empty string gives an empty list).
    auto parse_vertex_list(std::string_view text) -> std::vector<Vertex>;
}

#endif
