#include <gpos/cli.hh>
#include <gpos/bounds.hh>
#include <gpos/error.hh>
#include <gpos/families.hh>
#include <gpos/io.hh>
#include <gpos/reduction.hh>
#include <gpos/report.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using std::string;
using std::vector;

namespace gpos
{
    namespace
    {
        using Clock = std::chrono::steady_clock;

        struct Common
        {
            string input = "-";
            string format;
            string out;
            double time_limit = 0;
            bool deterministic = false;
            int threads = 1;
        };

        struct Stopwatch
        {
            Clock::time_point start = Clock::now();

            auto lap() -> double
            {
                auto now = Clock::now();
                auto ms = std::chrono::duration<double, std::milli>(now - start).count();
                start = now;
                return ms;
            }
        };

        auto read_text(const string & path, std::istream & in) -> string
        {
            std::ostringstream buffer;
            if (path.empty() || path == "-")
                buffer << in.rdbuf();
            else {
                std::ifstream file(path, std::ios::binary);
                if (! file)
                    throw Error(ErrorKind::MalformedHeader, "cannot open \"" + path + "\"");
                buffer << file.rdbuf();
            }
            return buffer.str();
        }

        auto write_text(const string & path, const string & text, std::ostream & out) -> void
        {
            if (path.empty() || path == "-") {
                out << text;
                return;
            }
            std::ofstream file(path, std::ios::binary);
            if (! file || ! (file << text))
                throw Error(ErrorKind::ParameterOutOfRange, "cannot write \"" + path + "\"");
        }

        auto resolve_format(const Common & c) -> string
        {
            if (! c.format.empty())
                return c.format;
            for (auto suffix : { ".g6", ".graph6" })
                if (c.input.ends_with(suffix))
                    return "graph6";
            return "edgelist";
        }

        auto read_graphs(const Common & c, std::istream & in) -> vector<Graph>
        {
            auto text = read_text(c.input, in);
            if (resolve_format(c) == "graph6") {
                auto graphs = parse_graph6_batch(text);
                if (graphs.empty())
                    throw Error(ErrorKind::MalformedHeader, "no graph6 lines in input");
                return graphs;
            }
            return { parse_edge_list(text) };
        }

        auto base_report(const string & command, const Common & c, const Graph & g) -> RunReport
        {
            RunReport r;
            r.command = command;
            r.input = InputDescriptor{ c.input, resolve_format(c), g.size(), g.edge_count() };
            r.graph_edges.assign(g.edges().begin(), g.edges().end());
            return r;
        }

        auto time_limit(const Common & c) -> std::optional<std::chrono::milliseconds>
        {
            if (c.time_limit <= 0)
                return std::nullopt;
            return std::chrono::milliseconds(std::max<long long>(1, static_cast<long long>(c.time_limit * 1000.0)));
        }

        auto solve_options(const Common & c) -> SolveOptions
        {
            return SolveOptions{ time_limit(c), c.deterministic, c.threads };
        }

        auto emit(const Common & c, vector<RunReport> & reports, std::ostream & out) -> void
        {
            if (c.deterministic)
                for (auto & r : reports)
                    r.timing_ms.clear();
            write_text(c.out, reports.size() == 1 ? serialize_report(reports[0]) : serialize_reports(reports), out);
        }

        auto env_threads() -> int
        {
            const char * value = std::getenv("GP_THREADS");
            if (! value || ! *value)
                return 1;
            int threads = 0;
            std::string_view text(value);
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), threads);
            if (ec != std::errc() || ptr != text.data() + text.size() || threads < 1)
                throw Error(ErrorKind::ParameterOutOfRange, "GP_THREADS must be a positive integer, got \""
                        + string(text) + "\"");
            return threads;
        }

        auto add_common(CLI::App * sub, Common & c, bool solver_flags) -> void
        {
            sub->add_option("--input", c.input, "Graph file, '-' for stdin");
            sub->add_option("--format", c.format, "Input format (default from extension)")
                ->check(CLI::IsMember({ "edgelist", "graph6" }));
            sub->add_option("--out", c.out, "Report file (default stdout)");
            if (solver_flags) {
                sub->add_option("--time-limit", c.time_limit, "Solver budget in seconds")
                    ->check(CLI::PositiveNumber);
                sub->add_flag("--deterministic", c.deterministic,
                        "Sequential search, smallest optimal witness, no timing in the report");
                sub->add_option("--threads", c.threads, "Solver workers (default GP_THREADS or 1)")
                    ->check(CLI::Range(1, 1024));
            }
        }

        auto cmd_solve(const Common & c, std::istream & in, std::ostream & out) -> int
        {
            int code = exit_ok;
            vector<RunReport> reports;
            for (const auto & g : read_graphs(c, in)) {
                Stopwatch clock;
                auto r = base_report("solve", c, g);
                auto d = all_pairs_distances(g, c.threads);
                auto t = collinear_triples(d);
                r.timing_ms["triples"] = clock.lap();
                r.solve = gp_exact(g, t, solve_options(c));
                r.timing_ms["solve"] = clock.lap();
                if (r.solve->status == SolveStatus::TimedOut)
                    code = exit_timed_out;
                reports.push_back(std::move(r));
            }
            emit(c, reports, out);
            return code;
        }

        auto cmd_bounds(const Common & c, const string & cover_path, std::istream & in, std::ostream & out) -> int
        {
            std::optional<IsometricCover> cover;
            if (! cover_path.empty())
                cover = parse_cover(read_text(cover_path, in));

            int code = exit_ok;
            vector<RunReport> reports;
            for (const auto & g : read_graphs(c, in)) {
                Stopwatch clock;
                auto r = base_report("bounds", c, g);
                BoundsOptions options{ time_limit(c), cover, c.deterministic, c.threads };
                r.bounds = bounds_report(g, options);
                r.timing_ms["bounds"] = clock.lap();
                if (r.bounds->solve && r.bounds->solve->status == SolveStatus::TimedOut)
                    code = exit_timed_out;
                reports.push_back(std::move(r));
            }
            emit(c, reports, out);
            return code;
        }

        auto cmd_verify(const Common & c, const string & set, std::istream & in, std::ostream & out) -> int
        {
            auto requested = parse_vertex_list(set);
            if (requested.empty())
                throw Error(ErrorKind::EmptySet, "--set lists no vertices");
            vector<RunReport> reports;
            for (const auto & g : read_graphs(c, in)) {
                Stopwatch clock;
                auto r = base_report("verify", c, g);
                auto d = all_pairs_distances(g);
                r.verify = VerifyVerdict{ requested, verify_general_position(d, requested) };
                r.timing_ms["verify"] = clock.lap();
                reports.push_back(std::move(r));
            }
            emit(c, reports, out);
            return exit_ok;
        }

        struct FamilyArgs
        {
            string family;
            std::optional<int> n, m, k, ell, r, s, blocks;
            int max_block = 4;
            std::uint64_t seed = 1;
        };

        auto need(const std::optional<int> & value, const string & family, const string & flag) -> int
        {
            if (! value)
                throw Error(ErrorKind::ParameterOutOfRange, "family " + family + " needs " + flag);
            return *value;
        }

        auto generate_family(const FamilyArgs & a) -> FamilyInstance
        {
            const auto & f = a.family;
            if (f == "path")
                return make_path(need(a.n, f, "--n"));
            if (f == "cycle")
                return make_cycle(need(a.n, f, "--n"));
            if (f == "complete")
                return make_complete(need(a.n, f, "--n"));
            if (f == "star")
                return make_star(need(a.m ? a.m : a.n, f, "--m"));
            if (f == "theta")
                return make_theta(need(a.k, f, "--k"), need(a.ell, f, "--ell"));
            if (f == "gt")
                return make_glued_binary_tree(need(a.r, f, "--r"));
            if (f == "cbt")
                return make_complete_binary_tree(need(a.r, f, "--r"));
            if (f == "petersen")
                return make_petersen();
            if (f == "gn")
                return make_gn_counterexample(need(a.n, f, "--n"));
            if (f == "spider")
                return make_spider_triangles(need(a.n, f, "--n"), need(a.s, f, "--s"));
            if (f == "block-random")
                return make_random_block_graph(a.seed, need(a.blocks, f, "--blocks"), a.max_block);
            if (f == "tree-random")
                return make_random_tree(a.seed, need(a.n, f, "--n"));
            throw Error(ErrorKind::ParameterOutOfRange, "unknown family " + f);
        }

        auto cmd_generate(const FamilyArgs & a, const string & out_path, const string & format,
                const string & report_path, std::ostream & out) -> int
        {
            auto inst = generate_family(a);
            auto text = format == "graph6" ? serialize_graph6(inst.graph) + "\n" : serialize_edge_list(inst.graph);
            write_text(out_path, text, out);

            if (! report_path.empty() || (! out_path.empty() && out_path != "-")) {
                RunReport r;
                r.command = "generate";
                r.input = InputDescriptor{ out_path.empty() ? "-" : out_path, format, inst.graph.size(),
                    inst.graph.edge_count() };
                r.graph_edges.assign(inst.graph.edges().begin(), inst.graph.edges().end());
                r.family = FamilySummary{ inst.name, inst.predicted_gp, inst.predicted_witness, inst.cover,
                    inst.edge_certificate };
                write_text(report_path, serialize_report(r), out);
            }
            return exit_ok;
        }

        auto cmd_reduce(const Common & c, bool check, const string & lifted_path, const string & lifted_format,
                std::istream & in, std::ostream & out) -> int
        {
            auto graphs = read_graphs(c, in);
            if (graphs.size() != 1)
                throw Error(ErrorKind::ParameterOutOfRange, "reduce takes a single graph, got "
                        + std::to_string(graphs.size()));
            const auto & g = graphs[0];

            Stopwatch clock;
            auto r = base_report("reduce", c, g);
            auto inst = build_reduction(g);
            ReductionSummary summary;
            summary.lifted_n = inst.lifted.size();
            summary.lifted_edges.assign(inst.lifted.edges().begin(), inst.lifted.edges().end());
            summary.layer_map = inst.layer_map;
            r.timing_ms["build"] = clock.lap();

            if (! lifted_path.empty()) {
                auto text = lifted_format == "graph6" ? serialize_graph6(inst.lifted) + "\n"
                                                      : serialize_edge_list(inst.lifted);
                write_text(lifted_path, text, out);
                nlohmann::json layers{ { "base_n", g.size() }, { "layers", inst.layer_map } };
                write_text(lifted_path + ".layers.json", layers.dump(2) + "\n", out);
            }

            int code = exit_ok;
            if (check) {
                try {
                    auto claim = verify_value_claim(inst, solve_options(c));
                    summary.alpha = claim.alpha;
                    summary.alpha_witness = claim.alpha_witness;
                    summary.lifted_gp = claim.lifted_gp;
                    summary.gp_witness = claim.gp_witness;
                    summary.holds = claim.holds;
                }
                catch (const Error & e) {
                    if (e.kind() != ErrorKind::TimedOut)
                        throw;
                    summary.note = e.what();
                    code = exit_timed_out;
                }
                r.timing_ms["check"] = clock.lap();
            }
            r.reduction = std::move(summary);

            vector<RunReport> reports{ std::move(r) };
            emit(c, reports, out);
            return code;
        }
    }

    auto run(const vector<string> & args, std::ostream & out, std::ostream & err, std::istream & in) -> int
    {
        CLI::App app{ "General position sets in graphs: exact solver, bounds, families and reduction" };
        app.name("gpos");
        app.require_subcommand(1);
        app.set_version_flag("--version", string(tool_version));

        Common c;
        string cover_path, set, report_path, lifted_path, lifted_format = "edgelist", gen_format = "edgelist";
        bool check = false;
        FamilyArgs fam;

        try {
            c.threads = env_threads();
        }
        catch (const Error & e) {
            err << e.what() << '\n';
            return exit_input_error;
        }

        auto * solve = app.add_subcommand("solve", "Exact gp-number with a certified witness");
        add_common(solve, c, true);

        auto * bounds = app.add_subcommand("bounds", "Lower and upper bound portfolio");
        add_common(bounds, c, true);
        bounds->add_option("--cover", cover_path, "Isometric cover file, one part per line");

        auto * verify = app.add_subcommand("verify", "Check whether a vertex set is in general position");
        add_common(verify, c, false);
        verify->add_option("--set", set, "Comma-separated vertices, e.g. \"0,3,7\"")->required();

        auto * generate = app.add_subcommand("generate", "Write a graph from a named family");
        generate->add_option("--family", fam.family, "Family name")
            ->required()
            ->check(CLI::IsMember({ "path", "cycle", "complete", "star", "theta", "gt", "petersen", "gn", "spider",
                "block-random", "cbt", "tree-random" }));
        generate->add_option("--n", fam.n, "Order, arm count (spider) or index (gn)");
        generate->add_option("--m", fam.m, "Leaves of the star");
        generate->add_option("--k", fam.k, "Theta path count");
        generate->add_option("--ell", fam.ell, "Theta path length");
        generate->add_option("--r", fam.r, "Binary tree depth");
        generate->add_option("--s", fam.s, "Spider subdivision count");
        generate->add_option("--blocks", fam.blocks, "Block count (block-random)");
        generate->add_option("--max-block-size", fam.max_block, "Largest block (block-random)");
        generate->add_option("--seed", fam.seed, "Seed for random families");
        generate->add_option("--out", c.out, "Graph file (default stdout)");
        generate->add_option("--format", gen_format, "Output format")->check(CLI::IsMember({ "edgelist", "graph6" }));
        generate->add_option("--report", report_path, "Family report file ('-' for stdout)");

        auto * reduce = app.add_subcommand("reduce", "Build the independent-set to gp reduction");
        reduce->add_option("--input", c.input, "Base graph file, '-' for stdin");
        reduce->add_option("--format", c.format, "Input format")->check(CLI::IsMember({ "edgelist", "graph6" }));
        reduce->add_option("--out", lifted_path, "Lifted graph file; the layer map goes to FILE.layers.json");
        reduce->add_option("--out-format", lifted_format, "Lifted graph format")
            ->check(CLI::IsMember({ "edgelist", "graph6" }));
        reduce->add_flag("--check", check, "Solve both sides and test gp(lift) = alpha(base) + n");
        reduce->add_option("--time-limit", c.time_limit, "Budget per solve in seconds")->check(CLI::PositiveNumber);
        reduce->add_flag("--deterministic", c.deterministic, "No timing in the report");
        reduce->add_option("--threads", c.threads, "Solver workers")->check(CLI::Range(1, 1024));

        try {
            vector<string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp &) {
            out << app.help();
            return exit_ok;
        }
        catch (const CLI::CallForAllHelp &) {
            out << app.help("", CLI::AppFormatMode::All);
            return exit_ok;
        }
        catch (const CLI::CallForVersion &) {
            out << tool_version << '\n';
            return exit_ok;
        }
        catch (const CLI::ExtrasError & e) {
            err << name_of(ErrorKind::UnknownFlag) << ": " << e.what() << '\n';
            return exit_input_error;
        }
        catch (const CLI::ParseError & e) {
            err << name_of(ErrorKind::ParameterOutOfRange) << ": " << e.what() << '\n';
            return exit_input_error;
        }

        try {
            if (solve->parsed())
                return cmd_solve(c, in, out);
            if (bounds->parsed())
                return cmd_bounds(c, cover_path, in, out);
            if (verify->parsed())
                return cmd_verify(c, set, in, out);
            if (generate->parsed())
                return cmd_generate(fam, c.out, gen_format, report_path, out);
            return cmd_reduce(c, check, lifted_path, lifted_format, in, out);
        }
        catch (const Error & e) {
            err << e.what() << '\n';
            return exit_input_error;
        }
        catch (const std::exception & e) {
            err << "error: " << e.what() << '\n';
            return exit_input_error;
        }
    }
}
