#include <gpos/solver.hh>
#include <gpos/error.hh>

#include "search.hh"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <string>

using std::vector;

namespace gpos
{
    namespace
    {
        using Clock = std::chrono::steady_clock;

        struct RawResult
        {
            vector<Vertex> best;
            std::uint64_t nodes = 0;
            SolveStatus status = SolveStatus::Exact;
        };

        auto solve_system(const detail::ConflictSystem & system, const SolveOptions & options,
                vector<Vertex> incumbent) -> RawResult
        {
            std::optional<Clock::time_point> deadline;
            if (options.time_limit)
                deadline = Clock::now() + *options.time_limit;

            detail::SearchLimits limits;
            limits.deadline = deadline;
            limits.threads = options.deterministic ? 1 : std::max(1, options.threads);
            limits.order = detail::degree_order(system);
            auto outcome = detail::maximum_conflict_free_set(system, limits, std::move(incumbent));

            RawResult result;
            result.nodes = outcome.nodes;
            result.best = std::move(outcome.best);
            result.status = outcome.complete ? SolveStatus::Exact : SolveStatus::TimedOut;

            // Second pass in index order with the optimum as target: the first
            // set reached by include-first search is the lexicographically
            // smallest optimum. Keeps the first witness if the budget runs out.
            if (outcome.complete && options.deterministic && ! result.best.empty()) {
                detail::SearchLimits lex;
                lex.deadline = deadline;
                lex.target = static_cast<int>(result.best.size());
                auto smallest = detail::maximum_conflict_free_set(system, lex, {});
                result.nodes += smallest.nodes;
                if (smallest.best.size() == result.best.size())
                    result.best = std::move(smallest.best);
            }
            return result;
        }

        auto triple_system(const TripleSet & t) -> detail::ConflictSystem
        {
            detail::ConflictSystem system;
            system.n = t.size();
            system.pairs.resize(system.n);
            system.triples.resize(system.n);
            for (const auto & [x, y, z] : t.triples()) {
                system.triples[x].emplace_back(y, z);
                system.triples[y].emplace_back(x, z);
                system.triples[z].emplace_back(x, y);
            }
            return system;
        }

        /// u can join the set iff no incident triple has both partners in it.
        auto can_join(const TripleSet & t, const vector<char> & member, Vertex u) -> bool
        {
            for (auto i : t.incident(u)) {
                const auto & [x, y, z] = t.triples()[i];
                int inside = member[x] + member[y] + member[z] - member[u];
                if (inside == 2)
                    return false;
            }
            return true;
        }

        auto sorted_members(const vector<char> & member) -> vector<Vertex>
        {
            vector<Vertex> s;
            for (Vertex v = 0; v < static_cast<Vertex>(member.size()); ++v)
                if (member[v])
                    s.push_back(v);
            return s;
        }
    }

    auto gp_greedy(const Graph & g, const TripleSet & t, std::uint64_t seed) -> GeneralPositionSet
    {
        auto n = g.size();
        vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::mt19937_64 rng(seed);
        std::shuffle(order.begin(), order.end(), rng);

        vector<char> member(n, 0);
        for (auto v : order)
            if (can_join(t, member, v))
                member[v] = 1;

        // Swap one member out for one outsider whenever that frees room
        // for a second outsider; each accepted step grows the set by one.
        bool improved = true;
        while (improved) {
            improved = false;
            for (auto u : order) {
                if (member[u])
                    continue;
                for (auto w : order) {
                    if (! member[w])
                        continue;
                    member[w] = 0;
                    if (can_join(t, member, u)) {
                        member[u] = 1;
                        for (auto x : order)
                            if (! member[x] && x != w && can_join(t, member, x)) {
                                member[x] = 1;
                                improved = true;
                                break;
                            }
                        if (improved)
                            break;
                        member[u] = 0;
                    }
                    member[w] = 1;
                }
                if (improved)
                    break;
            }
        }

        auto result = verify_general_position(t, sorted_members(member));
        return result;
    }

    auto gp_exact(const Graph & g, const TripleSet & t, const SolveOptions & options) -> SolveResult
    {
        auto n = g.size();

        // Incumbent: best of a few greedy runs and the simplicial set.
        vector<Vertex> incumbent{ 0 };
        if (n >= 2)
            incumbent = { 0, g.neighbours(0).front() };
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            auto greedy = gp_greedy(g, t, seed);
            if (greedy.vertices.size() > incumbent.size())
                incumbent = greedy.vertices;
        }
        auto simplicial = simplicial_vertices(g);
        if (simplicial.size() > incumbent.size() && verify_general_position(t, simplicial).certified)
            incumbent = simplicial;

        auto raw = solve_system(triple_system(t), options, std::move(incumbent));

        SolveResult result;
        result.optimum = static_cast<int>(raw.best.size());
        result.witness = verify_general_position(t, raw.best);
        result.nodes_explored = raw.nodes;
        result.status = raw.status;
        return result;
    }

    auto gp_brute_force(const Graph & g, const TripleSet & t) -> int
    {
        auto n = g.size();
        if (n > brute_force_limit)
            throw Error(ErrorKind::TooLarge, "brute force needs n <= " + std::to_string(brute_force_limit)
                    + ", got " + std::to_string(n));

        // valid[mask] = valid[mask without its top vertex h] and no triple with
        // top vertex h has its other two members in the rest of the mask.
        vector<vector<std::uint32_t>> others_by_top(n);
        for (const auto & [x, y, z] : t.triples()) {
            auto top = std::max({ x, y, z });
            std::uint32_t others = ((1u << x) | (1u << y) | (1u << z)) & ~(1u << top);
            others_by_top[top].push_back(others);
        }

        std::uint32_t subsets = 1u << n;
        vector<char> valid(subsets, 0);
        valid[0] = 1;
        int best = 0;
        for (std::uint32_t mask = 1; mask < subsets; ++mask) {
            auto top = 31 - std::countl_zero(mask);
            auto rest = mask & ~(1u << top);
            bool ok = valid[rest];
            for (std::size_t i = 0; ok && i < others_by_top[top].size(); ++i)
                ok = (rest & others_by_top[top][i]) != others_by_top[top][i];
            valid[mask] = ok;
            if (ok)
                best = std::max(best, std::popcount(mask));
        }
        return best;
    }

    auto maximum_independent_set(int n, std::span<const Edge> conflicts, const SolveOptions & options) -> SolveResult
    {
        detail::ConflictSystem system;
        system.n = n;
        system.pairs.resize(n);
        system.triples.resize(n);
        for (auto [u, v] : conflicts) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw Error(ErrorKind::VertexOutOfRange, "conflict (" + std::to_string(u) + "," + std::to_string(v) + ")");
            if (u == v)
                continue;
            system.pairs[u].push_back(v);
            system.pairs[v].push_back(u);
        }
        for (auto & p : system.pairs) {
            std::sort(p.begin(), p.end());
            p.erase(std::unique(p.begin(), p.end()), p.end());
        }

        // Min-degree greedy incumbent.
        vector<Vertex> by_degree(n);
        std::iota(by_degree.begin(), by_degree.end(), 0);
        std::stable_sort(by_degree.begin(), by_degree.end(),
                [&](Vertex a, Vertex b) { return system.pairs[a].size() < system.pairs[b].size(); });
        vector<char> blocked(n, 0);
        vector<Vertex> incumbent;
        for (auto v : by_degree)
            if (! blocked[v]) {
                incumbent.push_back(v);
                for (auto w : system.pairs[v])
                    blocked[w] = 1;
            }

        auto raw = solve_system(system, options, std::move(incumbent));

        SolveResult result;
        result.optimum = static_cast<int>(raw.best.size());
        result.witness.vertices = raw.best;
        result.witness.certified = true;
        for (std::size_t i = 0; i < raw.best.size(); ++i)
            for (auto w : system.pairs[raw.best[i]])
                if (std::binary_search(raw.best.begin(), raw.best.end(), w))
                    result.witness.certified = false;
        result.nodes_explored = raw.nodes;
        result.status = raw.status;
        return result;
    }

    auto independence_number_exact(const Graph & g, const SolveOptions & options) -> SolveResult
    {
        return maximum_independent_set(g.size(), g.edges(), options);
    }
}
