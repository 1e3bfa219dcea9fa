#include "search.hh"
#include "bits.hh"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

using std::vector;

namespace gpos::detail
{
    namespace
    {
        using bits::Word;
        using Clock = std::chrono::steady_clock;

        /// The system relabelled so that position p is the p-th vertex of the
        /// branching order. Triple partners are stored flat (CSR).
        struct Problem
        {
            int n = 0;
            int words = 0;
            vector<Vertex> vertex_at;
            vector<Word> pair_rows;
            vector<std::uint32_t> partner_start;
            vector<std::pair<int, int>> partners;
        };

        auto relabel(const ConflictSystem & system, const vector<Vertex> & order) -> Problem
        {
            Problem p;
            p.n = system.n;
            p.words = bits::words_for(p.n);
            p.vertex_at = order;
            vector<int> position(p.n);
            for (int i = 0; i < p.n; ++i)
                position[order[i]] = i;

            p.pair_rows.assign(static_cast<std::size_t>(p.n) * p.words, 0);
            for (Vertex v = 0; v < p.n; ++v)
                for (auto w : system.pairs[v]) {
                    bits::set(&p.pair_rows[static_cast<std::size_t>(position[v]) * p.words], position[w]);
                    bits::set(&p.pair_rows[static_cast<std::size_t>(position[w]) * p.words], position[v]);
                }

            p.partner_start.assign(p.n + 1, 0);
            for (int i = 0; i < p.n; ++i)
                p.partner_start[i + 1] = p.partner_start[i]
                    + static_cast<std::uint32_t>(system.triples[order[i]].size());
            p.partners.reserve(p.partner_start[p.n]);
            for (int i = 0; i < p.n; ++i)
                for (auto [a, b] : system.triples[order[i]])
                    p.partners.emplace_back(position[a], position[b]);
            return p;
        }

        struct Shared
        {
            std::atomic<int> threshold{ 0 };
            std::atomic<bool> stop{ false };
            std::atomic<bool> timed_out{ false };
            std::atomic<std::uint64_t> nodes{ 0 };
            std::mutex mutex;
            vector<Vertex> best;
            std::optional<Clock::time_point> deadline;
            bool target_mode = false;
        };

        struct Frame
        {
            vector<Word> chosen, candidates, conflicts;
            int size = 0;
        };

        class Searcher
        {
            public:
                Searcher(const Problem & problem, Shared & shared) :
                    _p(problem),
                    _shared(shared),
                    _frames(problem.n + 2),
                    _scratch_u(problem.words),
                    _scratch_q(problem.words)
                {
                }

                ~Searcher()
                {
                    _shared.nodes += _nodes;
                }

                auto frame(int depth) -> Frame &
                {
                    return _frames[depth];
                }

                auto init_root() -> void
                {
                    // deeper frames are sized on first use by include()
                    auto & root = _frames[0];
                    root.chosen.assign(_p.words, 0);
                    root.candidates.assign(_p.words, 0);
                    for (int i = 0; i < _p.n; ++i)
                        bits::set(root.candidates.data(), i);
                    root.conflicts = _p.pair_rows;
                    root.size = 0;
                }

                /// Fills frames[depth + 1] with the state after choosing v.
                auto include(int depth, int v) -> void
                {
                    const auto & f = _frames[depth];
                    auto & c = _frames[depth + 1];
                    auto W = _p.words;
                    c.chosen = f.chosen;
                    c.candidates = f.candidates;
                    c.conflicts = f.conflicts;
                    c.size = f.size + 1;
                    bits::set(c.chosen.data(), v);
                    bits::reset(c.candidates.data(), v);
                    bits::subtract(c.candidates.data(), &f.conflicts[static_cast<std::size_t>(v) * W], W);

                    auto * cand = c.candidates.data();
                    auto * chosen = c.chosen.data();
                    for (auto i = _p.partner_start[v]; i < _p.partner_start[v + 1]; ++i) {
                        auto [a, b] = _p.partners[i];
                        if (bits::test(chosen, a)) {
                            if (bits::test(cand, b))
                                bits::reset(cand, b);
                        }
                        else if (bits::test(chosen, b)) {
                            if (bits::test(cand, a))
                                bits::reset(cand, a);
                        }
                        else if (bits::test(cand, a) && bits::test(cand, b)) {
                            bits::set(&c.conflicts[static_cast<std::size_t>(a) * W], b);
                            bits::set(&c.conflicts[static_cast<std::size_t>(b) * W], a);
                        }
                    }
                }

                auto expand(int depth) -> void
                {
                    auto & f = _frames[depth];
                    auto W = _p.words;
                    while (true) {
                        if (_shared.stop.load(std::memory_order_relaxed))
                            return;
                        if ((++_nodes & 1023) == 0 && _shared.deadline && Clock::now() >= *_shared.deadline) {
                            _shared.timed_out = true;
                            _shared.stop = true;
                            return;
                        }

                        auto threshold = _shared.threshold.load(std::memory_order_relaxed);
                        if (f.size > threshold) {
                            record(f);
                            if (_shared.stop.load(std::memory_order_relaxed))
                                return;
                            threshold = _shared.threshold.load(std::memory_order_relaxed);
                        }

                        auto remaining = bits::count(f.candidates.data(), W);
                        if (remaining == 0 || f.size + remaining <= threshold)
                            return;
                        if (! cover_exceeds(f, threshold - f.size))
                            return;

                        auto v = bits::first(f.candidates.data(), W);
                        include(depth, v);
                        expand(depth + 1);
                        bits::reset(f.candidates.data(), v);
                    }
                }

            private:
                /// True iff a greedy clique cover of the candidates under the
                /// current pair conflicts needs more than budget cliques.
                auto cover_exceeds(const Frame & f, int budget) -> bool
                {
                    auto W = _p.words;
                    auto * u = _scratch_u.data();
                    auto * q = _scratch_q.data();
                    std::copy(f.candidates.begin(), f.candidates.end(), u);
                    int cliques = 0;
                    for (auto v = bits::first(u, W); v != -1; v = bits::first(u, W)) {
                        if (++cliques > budget)
                            return true;
                        std::copy(u, u + W, q);
                        for (auto x = v; x != -1; x = bits::first(q, W)) {
                            bits::reset(u, x);
                            bits::reset(q, x);
                            bits::intersect(q, &f.conflicts[static_cast<std::size_t>(x) * W], W);
                        }
                    }
                    return false;
                }

                auto record(const Frame & f) -> void
                {
                    std::lock_guard lock(_shared.mutex);
                    if (f.size <= _shared.threshold.load())
                        return;
                    _shared.best.clear();
                    bits::for_each(f.chosen.data(), _p.words, [&](int pos) { _shared.best.push_back(_p.vertex_at[pos]); });
                    std::sort(_shared.best.begin(), _shared.best.end());
                    _shared.threshold = f.size;
                    if (_shared.target_mode)
                        _shared.stop = true;
                }

                const Problem & _p;
                Shared & _shared;
                vector<Frame> _frames;
                vector<Word> _scratch_u, _scratch_q;
                std::uint64_t _nodes = 0;
        };
    }

    auto degree_order(const ConflictSystem & system) -> vector<Vertex>
    {
        vector<Vertex> order(system.n);
        std::iota(order.begin(), order.end(), 0);
        auto degree = [&](Vertex v) { return system.pairs[v].size() + system.triples[v].size(); };
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return degree(a) > degree(b); });
        return order;
    }

    auto maximum_conflict_free_set(const ConflictSystem & system, const SearchLimits & limits,
            vector<Vertex> incumbent) -> SearchOutcome
    {
        auto order = limits.order;
        if (order.empty()) {
            order.resize(system.n);
            std::iota(order.begin(), order.end(), 0);
        }
        auto problem = relabel(system, order);

        Shared shared;
        shared.deadline = limits.deadline;
        if (limits.target) {
            shared.target_mode = true;
            shared.threshold = *limits.target - 1;
        }
        else {
            std::sort(incumbent.begin(), incumbent.end());
            shared.threshold = static_cast<int>(incumbent.size());
            shared.best = std::move(incumbent);
        }

        if (system.n > 0) {
            auto threads = std::max(1, limits.threads);
            if (threads == 1) {
                Searcher searcher(problem, shared);
                searcher.init_root();
                searcher.expand(0);
            }
            else {
                // One task per root branch: include the i-th vertex of the
                // order having excluded all earlier ones.
                std::atomic<int> next_task{ 0 };
                auto worker = [&] {
                    Searcher searcher(problem, shared);
                    searcher.init_root();
                    int excluded = 0;
                    for (int task = next_task++; task < problem.n; task = next_task++) {
                        auto & root = searcher.frame(0);
                        for (; excluded < task; ++excluded)
                            bits::reset(root.candidates.data(), excluded);
                        auto threshold = shared.threshold.load();
                        if (problem.n - task <= threshold || shared.stop)
                            continue;
                        searcher.include(0, task);
                        searcher.expand(1);
                    }
                };
                vector<std::jthread> workers;
                for (int t = 0; t < threads; ++t)
                    workers.emplace_back(worker);
            }
        }

        SearchOutcome outcome;
        outcome.best = std::move(shared.best);
        outcome.complete = ! shared.timed_out;
        outcome.nodes = shared.nodes;
        return outcome;
    }
}
