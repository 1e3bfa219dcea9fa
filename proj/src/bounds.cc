#include <gpos/bounds.hh>
#include <gpos/error.hh>

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

using std::string;
using std::to_string;
using std::vector;

namespace gpos
{
    namespace
    {
        auto distinct_checked(std::span<const Vertex> h, int n) -> vector<Vertex>
        {
            vector<Vertex> s(h.begin(), h.end());
            for (auto v : s)
                if (v < 0 || v >= n)
                    throw Error(ErrorKind::VertexOutOfRange, "vertex " + to_string(v) + " with n=" + to_string(n));
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            return s;
        }

        auto shape_matches(const InducedSubgraph & h, PartKind kind) -> bool
        {
            vector<int> degree(h.n, 0);
            for (auto [u, v] : h.edges) {
                ++degree[u];
                ++degree[v];
            }
            auto max_degree = h.n ? *std::max_element(degree.begin(), degree.end()) : 0;
            auto m = static_cast<int>(h.edges.size());
            switch (kind) {
                case PartKind::Path:
                    return m == h.n - 1 && max_degree <= 2;
                case PartKind::Cycle:
                    return h.n >= 3 && m == h.n
                        && std::all_of(degree.begin(), degree.end(), [](int x) { return x == 2; });
                case PartKind::General:
                    return true;
            }
            return false;
        }

        auto kind_name(PartKind kind) -> string
        {
            switch (kind) {
                case PartKind::Path:    return "path";
                case PartKind::Cycle:   return "cycle";
                case PartKind::General: return "general";
            }
            return "?";
        }

        /// Geodesic from source that covers the most uncovered vertices,
        /// by dynamic programming over the BFS levels of source.
        auto best_geodesic_from(const Graph & g, const DistanceMatrix & d, Vertex source,
                const vector<char> & covered) -> std::pair<int, vector<Vertex>>
        {
            auto n = g.size();
            auto from = d.row(source);
            vector<Vertex> by_level(n);
            std::iota(by_level.begin(), by_level.end(), 0);
            std::stable_sort(by_level.begin(), by_level.end(), [&](Vertex a, Vertex b) { return from[a] < from[b]; });

            vector<int> gain(n, 0);
            vector<Vertex> prev(n, -1);
            for (auto u : by_level) {
                int best = 0;
                for (auto p : g.neighbours(u))
                    if (from[p] + 1 == from[u] && (prev[u] == -1 || gain[p] > best)) {
                        best = gain[p];
                        prev[u] = p;
                    }
                gain[u] = best + (covered[u] ? 0 : 1);
            }
            auto end = static_cast<Vertex>(std::max_element(gain.begin(), gain.end()) - gain.begin());
            vector<Vertex> path;
            for (auto x = end; x != -1; x = prev[x])
                path.push_back(x);
            std::reverse(path.begin(), path.end());
            return { gain[end], std::move(path) };
        }

        /// Kuhn's augmenting paths; sizes here are tiny.
        auto maximum_matching(const vector<vector<int>> & adj, int right_size) -> int
        {
            vector<int> match_right(right_size, -1);
            vector<char> seen;
            auto augment = [&](auto & self, int u) -> bool {
                for (auto w : adj[u]) {
                    if (seen[w])
                        continue;
                    seen[w] = 1;
                    if (match_right[w] == -1 || self(self, match_right[w])) {
                        match_right[w] = u;
                        return true;
                    }
                }
                return false;
            };
            int size = 0;
            for (int u = 0; u < static_cast<int>(adj.size()); ++u) {
                seen.assign(right_size, 0);
                if (augment(augment, u))
                    ++size;
            }
            return size;
        }

        /// gp of one cover part, given that its shape was validated.
        auto part_value(const Graph & g, const vector<Vertex> & vertices, PartKind kind, const SolveOptions & options)
            -> int
        {
            auto order = static_cast<int>(vertices.size());
            switch (kind) {
                case PartKind::Path:
                    return std::min(2, order);
                case PartKind::Cycle:
                    return order == 4 ? 2 : 3;
                case PartKind::General:
                    break;
            }
            auto sub = induced_subgraph(g, vertices);
            auto h = Graph::build(sub.n, sub.edges);
            auto solved = gp_exact(h, collinear_triples(all_pairs_distances(h)), options);
            return solved.status == SolveStatus::Exact ? solved.optimum : order;
        }
    }

    auto is_isometric_subgraph(const Graph & g, const DistanceMatrix & d, std::span<const Vertex> h) -> bool
    {
        if (h.empty())
            throw Error(ErrorKind::EmptySet, "isometry check on an empty vertex set");
        auto vertices = distinct_checked(h, g.size());
        auto sub = induced_subgraph(g, vertices);

        vector<vector<int>> adj(sub.n);
        for (auto [u, v] : sub.edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        vector<int> dist(sub.n);
        vector<int> queue;
        for (int s = 0; s < sub.n; ++s) {
            std::fill(dist.begin(), dist.end(), -1);
            dist[s] = 0;
            queue.assign(1, s);
            for (std::size_t head = 0; head < queue.size(); ++head)
                for (auto w : adj[queue[head]])
                    if (dist[w] == -1) {
                        dist[w] = dist[queue[head]] + 1;
                        queue.push_back(w);
                    }
            for (int x = 0; x < sub.n; ++x)
                if (dist[x] != d(vertices[s], vertices[x]))
                    return false;
        }
        return true;
    }

    auto validate_cover(const Graph & g, const DistanceMatrix & d, const IsometricCover & cover) -> void
    {
        if (cover.kinds.size() != cover.parts.size())
            throw Error(ErrorKind::InvalidCover, "cover has " + to_string(cover.parts.size()) + " parts but "
                    + to_string(cover.kinds.size()) + " kind tags");

        vector<char> covered(g.size(), 0);
        for (std::size_t i = 0; i < cover.parts.size(); ++i) {
            const auto & part = cover.parts[i];
            if (part.empty())
                throw Error(ErrorKind::InvalidCover, "part " + to_string(i) + " is empty");
            auto vertices = distinct_checked(part, g.size());
            if (! is_isometric_subgraph(g, d, vertices))
                throw Error(ErrorKind::InvalidCover, "part " + to_string(i) + " is not isometric");
            if (! shape_matches(induced_subgraph(g, vertices), cover.kinds[i]))
                throw Error(ErrorKind::InvalidCover, "part " + to_string(i) + " does not induce a "
                        + kind_name(cover.kinds[i]));
            for (auto v : vertices)
                covered[v] = 1;
        }
        for (Vertex v = 0; v < g.size(); ++v)
            if (! covered[v])
                throw Error(ErrorKind::InvalidCover, "vertex " + to_string(v) + " is not covered");
    }

    auto cover_lemma_bound(const Graph & g, const TripleSet &, const IsometricCover & cover,
            const SolveOptions & options) -> CoverBound
    {
        auto d = all_pairs_distances(g);
        validate_cover(g, d, cover);

        CoverBound result;
        for (std::size_t i = 0; i < cover.parts.size(); ++i) {
            auto value = part_value(g, distinct_checked(cover.parts[i], g.size()), cover.kinds[i], options);
            result.part_values.push_back(value);
            result.value += value;
        }
        return result;
    }

    auto ip_from_vertex(const Graph & g, const DistanceMatrix & d, Vertex v, BoundMode mode) -> int
    {
        auto n = g.size();
        if (v < 0 || v >= n)
            throw Error(ErrorKind::VertexOutOfRange, "vertex " + to_string(v) + " with n=" + to_string(n));
        if (n == 1)
            return 0;

        if (mode == BoundMode::Exact) {
            if (n > ip_exact_limit)
                throw Error(ErrorKind::TooLargeForExact, "exact ip(v,G) needs n <= " + to_string(ip_exact_limit)
                        + ", got " + to_string(n));
            // u precedes w when u lies on a v,w-geodesic. This is a partial
            // order whose chains are exactly vertex sets of geodesics from v,
            // so the minimum is its width: (n - 1) minus a maximum matching
            // of the strict comparabilities among V - v.
            auto from = d.row(v);
            vector<Vertex> others;
            for (Vertex u = 0; u < n; ++u)
                if (u != v)
                    others.push_back(u);
            auto k = static_cast<int>(others.size());
            vector<vector<int>> adj(k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    if (i != j && from[others[i]] + d(others[i], others[j]) == from[others[j]])
                        adj[i].push_back(j);
            return k - maximum_matching(adj, k);
        }

        vector<char> covered(n, 0);
        covered[v] = 1;
        int paths = 0;
        for (int remaining = n - 1; remaining > 0; ++paths) {
            auto [gain, path] = best_geodesic_from(g, d, v, covered);
            for (auto x : path)
                covered[x] = 1;
            remaining -= gain;
        }
        // Root-to-leaf paths of any BFS tree are a feasible cover as well.
        return std::min({ paths, bfs_leaf_count(g, v, BfsParentRule::SmallestIndex),
                bfs_leaf_count(g, v, BfsParentRule::LeafMinimizing) });
    }

    auto vertex_path_bound_check(const Graph & g, const GeneralPositionSet & r) -> bool
    {
        if (! r.certified)
            throw Error(ErrorKind::ParameterOutOfRange, "vertex path bound applies to certified sets only");
        auto d = all_pairs_distances(g);
        auto size = static_cast<int>(r.vertices.size());
        for (auto v : r.vertices)
            if (size > ip_from_vertex(g, d, v, BoundMode::Exact) + 1)
                return false;
        return true;
    }

    auto bfs_leaf_bound_check(const Graph & g, const GeneralPositionSet & r) -> bool
    {
        if (r.vertices.empty())
            return true;
        int fewest = std::numeric_limits<int>::max();
        for (auto v : r.vertices)
            fewest = std::min({ fewest, bfs_leaf_count(g, v, BfsParentRule::SmallestIndex),
                    bfs_leaf_count(g, v, BfsParentRule::LeafMinimizing) });
        return static_cast<int>(r.vertices.size()) <= 1 + fewest;
    }

    auto k_packing_number(const DistanceMatrix & d, int k, BoundMode mode) -> Packing
    {
        if (k < 1)
            throw Error(ErrorKind::ParameterOutOfRange, "packing needs k >= 1, got " + to_string(k));
        auto n = d.size();
        if (mode == BoundMode::Exact && n > packing_exact_limit)
            throw Error(ErrorKind::TooLargeForExact, "exact packing needs n <= " + to_string(packing_exact_limit)
                    + ", got " + to_string(n));

        vector<Edge> close;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (d(u, v) <= k)
                    close.emplace_back(u, v);

        Packing result;
        result.k = k;
        if (mode == BoundMode::Exact) {
            result.vertices = maximum_independent_set(n, close).witness.vertices;
            result.exact = true;
            return result;
        }

        vector<int> degree(n, 0);
        for (auto [u, v] : close) {
            ++degree[u];
            ++degree[v];
        }
        vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return degree[a] < degree[b]; });
        for (auto v : order)
            if (std::all_of(result.vertices.begin(), result.vertices.end(), [&](Vertex u) { return d(u, v) > k; }))
                result.vertices.push_back(v);
        std::sort(result.vertices.begin(), result.vertices.end());
        return result;
    }

    auto packing_lower_bound(const Graph & g, const DistanceMatrix & d) -> Packing
    {
        auto diam = diameter(d);
        // least k >= 1 with diam <= 2k + 1, i.e. ceil((diam - 1) / 2)
        auto k = std::max(1, diam / 2);
        auto mode = g.size() <= packing_exact_limit ? BoundMode::Exact : BoundMode::Greedy;
        return k_packing_number(d, k, mode);
    }

    auto distant_edge_bound(const Graph & g, const DistanceMatrix & d, BoundMode mode) -> DistantEdges
    {
        DistantEdges result;
        result.diameter = diameter(d);
        if (result.diameter < 2)
            throw Error(ErrorKind::DiameterTooSmall, "distant edge bound needs diameter >= 2, got "
                    + to_string(result.diameter));
        if (mode == BoundMode::Exact && g.size() > distant_edge_exact_limit)
            throw Error(ErrorKind::TooLargeForExact, "exact distant edge search needs n <= "
                    + to_string(distant_edge_exact_limit) + ", got " + to_string(g.size()));

        const auto & edges = g.edges();
        auto m = static_cast<int>(edges.size());
        auto far = [&](int i, int j) { return edge_distance(d, edges[i], edges[j]) == result.diameter; };

        if (mode == BoundMode::Exact) {
            // Maximum clique of "far" = maximum independent set of its complement.
            vector<Edge> near;
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j)
                    if (! far(i, j))
                        near.emplace_back(i, j);
            for (auto i : maximum_independent_set(m, near).witness.vertices)
                result.edges.push_back(edges[i]);
            result.exact = true;
            return result;
        }

        vector<int> chosen;
        for (int i = 0; i < m; ++i)
            if (std::all_of(chosen.begin(), chosen.end(), [&](int j) { return far(i, j); }))
                chosen.push_back(i);
        for (auto i : chosen)
            result.edges.push_back(edges[i]);
        return result;
    }

    auto greedy_path_cover(const Graph & g, const DistanceMatrix & d) -> IsometricCover
    {
        auto n = g.size();
        IsometricCover cover;
        vector<char> covered(n, 0);
        for (int remaining = n; remaining > 0;) {
            std::pair<int, vector<Vertex>> best{ 0, {} };
            for (Vertex s = 0; s < n; ++s) {
                auto candidate = best_geodesic_from(g, d, s, covered);
                if (candidate.first > best.first)
                    best = std::move(candidate);
            }
            for (auto x : best.second)
                covered[x] = 1;
            remaining -= best.first;
            std::sort(best.second.begin(), best.second.end());
            cover.parts.push_back(std::move(best.second));
            cover.kinds.push_back(PartKind::Path);
        }
        return cover;
    }
}

namespace gpos
{
    auto BoundsReport::best_lower() const -> int
    {
        int best = 0;
        for (const auto & [name, entry] : lower)
            if (entry.value)
                best = std::max(best, *entry.value);
        return best;
    }

    auto BoundsReport::best_upper() const -> int
    {
        int best = std::numeric_limits<int>::max();
        for (const auto & [name, entry] : upper)
            if (entry.value)
                best = std::min(best, *entry.value);
        return best;
    }

    auto BoundsReport::consistent() const -> bool
    {
        auto lo = best_lower(), hi = best_upper();
        if (lo > hi)
            return false;
        return ! exact || (lo <= *exact && *exact <= hi);
    }

    namespace
    {
        auto gp_certificate(const GeneralPositionSet & s, const string & method) -> BoundEntry
        {
            BoundEntry entry;
            entry.value = static_cast<int>(s.vertices.size());
            entry.method = method;
            entry.certificate.kind = CertificateKind::GeneralPosition;
            entry.certificate.vertices = s.vertices;
            return entry;
        }

        auto cover_certificate(const IsometricCover & cover, const CoverBound & bound, const string & method)
            -> BoundEntry
        {
            BoundEntry entry;
            entry.value = bound.value;
            entry.method = method;
            entry.certificate.kind = CertificateKind::Cover;
            entry.certificate.cover = cover;
            entry.certificate.part_values = bound.part_values;
            return entry;
        }

        auto skipped(const string & reason) -> BoundEntry
        {
            BoundEntry entry;
            entry.method = "skipped";
            entry.note = reason;
            return entry;
        }
    }

    auto bounds_report(const Graph & g, const BoundsOptions & options) -> BoundsReport
    {
        auto n = g.size();
        auto d = all_pairs_distances(g, options.threads);
        auto t = collinear_triples(d);
        auto diam = diameter(d);
        BoundsReport report;

        auto simplicial = verify_general_position(t, simplicial_vertices(g));
        if (simplicial.certified)
            report.lower["simplicial"] = gp_certificate(simplicial, "simplicial vertices");

        GeneralPositionSet greedy;
        for (int seed = 0; seed < std::max(1, options.greedy_seeds); ++seed) {
            auto candidate = gp_greedy(g, t, static_cast<std::uint64_t>(seed));
            if (candidate.vertices.size() > greedy.vertices.size())
                greedy = std::move(candidate);
        }
        report.lower["greedy"] = gp_certificate(greedy, "randomised greedy");

        auto packing = packing_lower_bound(g, d);
        BoundEntry packing_entry;
        packing_entry.value = packing.size();
        packing_entry.method = packing.exact ? "exact" : "greedy";
        packing_entry.certificate.kind = CertificateKind::Packing;
        packing_entry.certificate.vertices = packing.vertices;
        packing_entry.certificate.k = packing.k;
        report.lower["packing"] = std::move(packing_entry);

        if (diam >= 2) {
            auto mode = n <= distant_edge_exact_limit ? BoundMode::Exact : BoundMode::Greedy;
            auto far = distant_edge_bound(g, d, mode);
            BoundEntry entry;
            entry.value = far.bound();
            entry.method = far.exact ? "exact" : "greedy";
            entry.certificate.kind = CertificateKind::EdgeSet;
            entry.certificate.edges = far.edges;
            report.lower["distant_edges"] = std::move(entry);
        }
        else
            report.lower["distant_edges"] = skipped("diameter below 2");

        BoundEntry order;
        order.value = n;
        order.method = "order";
        report.upper["order"] = std::move(order);

        SolveOptions solve_options;
        solve_options.time_limit = options.budget;
        solve_options.deterministic = options.deterministic;
        solve_options.threads = options.threads;

        auto path_cover = greedy_path_cover(g, d);
        report.upper["path_cover"] = cover_certificate(path_cover, cover_lemma_bound(g, t, path_cover, solve_options),
                "greedy isometric path cover");

        if (options.cover) {
            try {
                report.upper["cover"] = cover_certificate(*options.cover,
                        cover_lemma_bound(g, t, *options.cover, solve_options), "supplied isometric cover");
            }
            catch (const Error & e) {
                report.upper["cover"] = skipped(e.what());
            }
        }

        auto solved = gp_exact(g, t, solve_options);
        if (solved.status == SolveStatus::Exact) {
            report.exact = solved.optimum;
            report.checks["bfs_leaf"] = bfs_leaf_bound_check(g, solved.witness);
            if (n <= ip_exact_limit)
                report.checks["vertex_path"] = vertex_path_bound_check(g, solved.witness);
            else
                report.checks["vertex_path"] = std::nullopt;
        }
        else {
            report.lower["solver_best"] = gp_certificate(solved.witness, "branch and bound, timed out");
            report.checks["bfs_leaf"] = std::nullopt;
            report.checks["vertex_path"] = std::nullopt;
        }
        report.solve = std::move(solved);
        return report;
    }

    auto recheck_bound(const Graph & g, const DistanceMatrix & d, const TripleSet & t, const BoundEntry & entry,
            bool is_lower) -> bool
    {
        if (! entry.value)
            return true;
        auto value = *entry.value;
        const auto & cert = entry.certificate;
        auto n = g.size();

        switch (cert.kind) {
            case CertificateKind::None:
                return ! is_lower && value >= n;

            case CertificateKind::GeneralPosition: {
                if (! is_lower)
                    return false;
                auto checked = verify_general_position(t, cert.vertices);
                return checked.certified && static_cast<int>(checked.vertices.size()) == value
                    && checked.vertices.size() == cert.vertices.size();
            }

            case CertificateKind::Packing: {
                if (! is_lower || cert.k < 1 || diameter(d) > 2 * cert.k + 1)
                    return false;
                auto vertices = distinct_checked(cert.vertices, n);
                if (vertices.size() != cert.vertices.size() || static_cast<int>(vertices.size()) != value)
                    return false;
                for (std::size_t i = 0; i < vertices.size(); ++i)
                    for (std::size_t j = i + 1; j < vertices.size(); ++j)
                        if (d(vertices[i], vertices[j]) <= cert.k)
                            return false;
                return true;
            }

            case CertificateKind::EdgeSet: {
                auto diam = diameter(d);
                if (! is_lower || diam < 2 || cert.edges.empty() || value != 2 * static_cast<int>(cert.edges.size()))
                    return false;
                try {
                    for (std::size_t i = 0; i < cert.edges.size(); ++i)
                        for (std::size_t j = i + 1; j < cert.edges.size(); ++j)
                            if (edge_distance(d, cert.edges[i], cert.edges[j]) != diam)
                                return false;
                    for (auto e : cert.edges)
                        edge_distance(d, e, e);
                }
                catch (const Error &) {
                    return false;
                }
                return true;
            }

            case CertificateKind::Cover: {
                if (is_lower || cert.part_values.size() != cert.cover.parts.size())
                    return false;
                try {
                    validate_cover(g, d, cert.cover);
                }
                catch (const Error &) {
                    return false;
                }
                int total = 0;
                for (std::size_t i = 0; i < cert.cover.parts.size(); ++i) {
                    auto actual = part_value(g, distinct_checked(cert.cover.parts[i], n), cert.cover.kinds[i], {});
                    if (cert.part_values[i] < actual)
                        return false;
                    total += cert.part_values[i];
                }
                return total == value;
            }
        }
        return false;
    }
}
