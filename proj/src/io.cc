#include <gpos/io.hh>
#include <gpos/error.hh>

#include <charconv>
#include <cstdint>
#include <sstream>

using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace gpos
{
    namespace
    {
        auto trim(string_view s) -> string_view
        {
            auto first = s.find_first_not_of(" \t\r\n");
            if (first == string_view::npos)
                return {};
            auto last = s.find_last_not_of(" \t\r\n");
            return s.substr(first, last - first + 1);
        }

        auto split_lines(string_view text) -> vector<string_view>
        {
            vector<string_view> lines;
            while (! text.empty()) {
                auto end = text.find('\n');
                lines.push_back(text.substr(0, end));
                if (end == string_view::npos)
                    break;
                text.remove_prefix(end + 1);
            }
            return lines;
        }

        /// Whitespace separated integers; false on anything else.
        auto parse_ints(string_view line, vector<long long> & out) -> bool
        {
            out.clear();
            std::size_t pos = 0;
            while (true) {
                while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t'))
                    ++pos;
                if (pos >= line.size())
                    return true;
                long long value = 0;
                auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
                if (ec != std::errc())
                    return false;
                pos = static_cast<std::size_t>(ptr - line.data());
                if (pos < line.size() && line[pos] != ' ' && line[pos] != '\t')
                    return false;
                out.push_back(value);
            }
        }

        constexpr int graph6_offset = 63;
        constexpr int graph6_max = 126;
    }

    auto parse_edge_list(string_view text) -> Graph
    {
        auto lines = split_lines(text);
        std::optional<std::pair<long long, long long>> header;
        vector<Edge> edges;
        vector<long long> ints;
        int header_line = 0;

        for (std::size_t i = 0; i < lines.size(); ++i) {
            auto line = trim(lines[i]);
            auto number = to_string(i + 1);
            if (line.empty() || line.front() == '#')
                continue;
            if (! header) {
                if (! parse_ints(line, ints) || ints.size() != 2 || ints[0] < 1 || ints[1] < 0)
                    throw Error(ErrorKind::MalformedHeader, "line " + number + ": expected \"n m\" with n >= 1");
                header.emplace(ints[0], ints[1]);
                header_line = static_cast<int>(i + 1);
                continue;
            }
            if (! parse_ints(line, ints) || ints.size() != 2)
                throw Error(ErrorKind::MalformedEdge, "line " + number + ": expected \"u v\"");
            auto [n, m] = *header;
            if (static_cast<long long>(edges.size()) == m)
                throw Error(ErrorKind::MalformedEdge, "line " + number + ": more edges than the " + to_string(m)
                        + " declared");
            auto u = ints[0], v = ints[1];
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw Error(ErrorKind::VertexOutOfRange, "line " + number + ": edge (" + to_string(u) + ","
                        + to_string(v) + ") with n=" + to_string(n));
            if (u == v)
                throw Error(ErrorKind::SelfLoop, "line " + number + ": self-loop at vertex " + to_string(u));
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }

        if (! header)
            throw Error(ErrorKind::MalformedHeader, "missing \"n m\" header");
        if (static_cast<long long>(edges.size()) != header->second)
            throw Error(ErrorKind::MalformedEdge, "header on line " + to_string(header_line) + " declares "
                    + to_string(header->second) + " edges, found " + to_string(edges.size()));
        if (header->first > std::numeric_limits<int>::max())
            throw Error(ErrorKind::TooLarge, "vertex count " + to_string(header->first));
        return Graph::build(static_cast<int>(header->first), edges);
    }

    auto serialize_edge_list(const Graph & g) -> string
    {
        string out = to_string(g.size()) + " " + to_string(g.edge_count()) + "\n";
        for (auto [u, v] : g.edges())
            out += to_string(u) + " " + to_string(v) + "\n";
        return out;
    }

    auto parse_graph6(string_view line) -> Graph
    {
        line = trim(line);
        if (line.starts_with(">>graph6<<"))
            line.remove_prefix(10);
        for (std::size_t i = 0; i < line.size(); ++i) {
            auto c = static_cast<unsigned char>(line[i]);
            if (c < graph6_offset || c > graph6_max)
                throw Error(ErrorKind::BadChecksumChar, "character " + to_string(int(c)) + " at position "
                        + to_string(i) + " is outside the graph6 range 63..126");
        }
        if (line.empty())
            throw Error(ErrorKind::MalformedHeader, "empty graph6 string");

        auto value = [&](std::size_t i) { return static_cast<std::uint64_t>(line[i] - graph6_offset); };
        std::uint64_t n = 0;
        std::size_t pos = 0;
        if (value(0) != graph6_max - graph6_offset) {
            n = value(0);
            pos = 1;
        }
        else if (line.size() >= 2 && value(1) == graph6_max - graph6_offset) {
            if (line.size() < 8)
                throw Error(ErrorKind::MalformedHeader, "truncated 8-byte graph6 order");
            for (std::size_t i = 2; i < 8; ++i)
                n = (n << 6) | value(i);
            pos = 8;
        }
        else {
            if (line.size() < 4)
                throw Error(ErrorKind::MalformedHeader, "truncated 4-byte graph6 order");
            for (std::size_t i = 1; i < 4; ++i)
                n = (n << 6) | value(i);
            pos = 4;
        }
        if (n > static_cast<std::uint64_t>(std::numeric_limits<std::uint16_t>::max()))
            throw Error(ErrorKind::TooLarge, "graph6 order " + to_string(n));

        auto bits = n * (n - (n > 0 ? 1 : 0)) / 2;
        auto expected = (bits + 5) / 6;
        if (line.size() - pos != expected)
            throw Error(ErrorKind::MalformedHeader, "graph6 body has " + to_string(line.size() - pos)
                    + " characters, order " + to_string(n) + " needs " + to_string(expected));

        vector<Edge> edges;
        std::uint64_t k = 0;
        for (Vertex j = 1; j < static_cast<Vertex>(n); ++j)
            for (Vertex i = 0; i < j; ++i, ++k) {
                auto c = value(pos + k / 6);
                if ((c >> (5 - k % 6)) & 1)
                    edges.emplace_back(i, j);
            }
        return Graph::build(static_cast<int>(n), edges);
    }

    auto parse_graph6_batch(string_view text) -> vector<Graph>
    {
        vector<Graph> graphs;
        for (auto line : split_lines(text))
            if (! trim(line).empty())
                graphs.push_back(parse_graph6(line));
        return graphs;
    }

    auto serialize_graph6(const Graph & g) -> string
    {
        auto n = static_cast<std::uint64_t>(g.size());
        string out;
        auto put = [&](std::uint64_t six) { out.push_back(static_cast<char>(six + graph6_offset)); };
        if (n <= 62)
            put(n);
        else if (n <= 258047) {
            out.push_back(static_cast<char>(graph6_max));
            for (int shift = 12; shift >= 0; shift -= 6)
                put((n >> shift) & 63);
        }
        else {
            out.push_back(static_cast<char>(graph6_max));
            out.push_back(static_cast<char>(graph6_max));
            for (int shift = 30; shift >= 0; shift -= 6)
                put((n >> shift) & 63);
        }

        std::uint64_t six = 0;
        int filled = 0;
        for (Vertex j = 1; j < g.size(); ++j)
            for (Vertex i = 0; i < j; ++i) {
                six = (six << 1) | (g.adjacent(i, j) ? 1 : 0);
                if (++filled == 6) {
                    put(six);
                    six = 0;
                    filled = 0;
                }
            }
        if (filled > 0)
            put(six << (6 - filled));
        return out;
    }

    auto parse_vertex_list(string_view text) -> vector<Vertex>
    {
        vector<Vertex> result;
        text = trim(text);
        if (text.empty())
            return result;
        while (true) {
            auto comma = text.find(',');
            auto item = trim(text.substr(0, comma));
            int value = 0;
            auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
            if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
                throw Error(ErrorKind::MalformedEdge, "bad vertex \"" + string(item) + "\" in list");
            result.push_back(value);
            if (comma == string_view::npos)
                break;
            text.remove_prefix(comma + 1);
        }
        return result;
    }

    auto parse_cover(string_view text) -> IsometricCover
    {
        IsometricCover cover;
        auto lines = split_lines(text);
        for (std::size_t i = 0; i < lines.size(); ++i) {
            auto line = trim(lines[i]);
            if (line.empty() || line.front() == '#')
                continue;
            auto kind = PartKind::General;
            for (auto [prefix, tag] : { std::pair{ string_view("path:"), PartKind::Path },
                         std::pair{ string_view("cycle:"), PartKind::Cycle },
                         std::pair{ string_view("general:"), PartKind::General } })
                if (line.starts_with(prefix)) {
                    kind = tag;
                    line.remove_prefix(prefix.size());
                    break;
                }
            try {
                cover.parts.push_back(parse_vertex_list(line));
            }
            catch (const Error & e) {
                throw Error(ErrorKind::InvalidCover, "line " + to_string(i + 1) + ": " + e.what());
            }
            if (cover.parts.back().empty())
                throw Error(ErrorKind::InvalidCover, "line " + to_string(i + 1) + ": empty part");
            cover.kinds.push_back(kind);
        }
        return cover;
    }

    auto serialize_cover(const IsometricCover & cover) -> string
    {
        std::ostringstream out;
        for (std::size_t i = 0; i < cover.parts.size(); ++i) {
            switch (cover.kinds[i]) {
                case PartKind::Path:    out << "path:"; break;
                case PartKind::Cycle:   out << "cycle:"; break;
                case PartKind::General: out << "general:"; break;
            }
            for (std::size_t j = 0; j < cover.parts[i].size(); ++j)
                out << (j ? "," : "") << cover.parts[i][j];
            out << '\n';
        }
        return out.str();
    }
}
