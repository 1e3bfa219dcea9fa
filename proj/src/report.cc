#include <gpos/report.hh>
#include <gpos/error.hh>
#include <gpos/reduction.hh>

#include <json.hpp>

#include <algorithm>
#include <set>

using nlohmann::json;
using std::string;
using std::to_string;
using std::vector;

NLOHMANN_JSON_NAMESPACE_BEGIN
template <typename T>
struct adl_serializer<std::optional<T>>
{
    static void to_json(json & j, const std::optional<T> & o)
    {
        if (o)
            j = *o;
        else
            j = nullptr;
    }

    static void from_json(const json & j, std::optional<T> & o)
    {
        if (j.is_null())
            o.reset();
        else
            o = j.get<T>();
    }
};
NLOHMANN_JSON_NAMESPACE_END

namespace gpos
{
    namespace
    {
        template <typename E, std::size_t N>
        auto enum_from(const json & j, const std::array<std::pair<E, const char *>, N> & names) -> E
        {
            auto s = j.get<string>();
            for (auto [e, name] : names)
                if (s == name)
                    return e;
            throw Error(ErrorKind::MalformedReport, "unknown enum value \"" + s + "\"");
        }

        template <typename E, std::size_t N>
        auto enum_to(E e, const std::array<std::pair<E, const char *>, N> & names) -> string
        {
            for (auto [value, name] : names)
                if (value == e)
                    return name;
            return "?";
        }

        constexpr std::array status_names{ std::pair{ SolveStatus::Exact, "exact" },
            std::pair{ SolveStatus::TimedOut, "timed_out" } };

        constexpr std::array part_names{ std::pair{ PartKind::Path, "path" }, std::pair{ PartKind::Cycle, "cycle" },
            std::pair{ PartKind::General, "general" } };

        constexpr std::array certificate_names{ std::pair{ CertificateKind::None, "none" },
            std::pair{ CertificateKind::GeneralPosition, "general_position" },
            std::pair{ CertificateKind::Packing, "packing" }, std::pair{ CertificateKind::EdgeSet, "edge_set" },
            std::pair{ CertificateKind::Cover, "cover" } };
    }

    void to_json(json & j, const Triple & t)
    {
        j = json::array({ t.x, t.y, t.z });
    }

    void from_json(const json & j, Triple & t)
    {
        if (! j.is_array() || j.size() != 3)
            throw Error(ErrorKind::MalformedReport, "triple must be a 3-element array");
        t = Triple{ j[0].get<Vertex>(), j[1].get<Vertex>(), j[2].get<Vertex>() };
    }

    void to_json(json & j, const GeneralPositionSet & s)
    {
        j = json{ { "vertices", s.vertices }, { "certified", s.certified }, { "violation", s.witness } };
    }

    void from_json(const json & j, GeneralPositionSet & s)
    {
        j.at("vertices").get_to(s.vertices);
        j.at("certified").get_to(s.certified);
        j.at("violation").get_to(s.witness);
    }

    void to_json(json & j, const SolveResult & r)
    {
        j = json{ { "status", enum_to(r.status, status_names) }, { "optimum", r.optimum }, { "witness", r.witness },
            { "nodes_explored", r.nodes_explored } };
    }

    void from_json(const json & j, SolveResult & r)
    {
        r.status = enum_from(j.at("status"), status_names);
        j.at("optimum").get_to(r.optimum);
        j.at("witness").get_to(r.witness);
        j.at("nodes_explored").get_to(r.nodes_explored);
    }

    void to_json(json & j, const IsometricCover & c)
    {
        vector<string> kinds;
        for (auto k : c.kinds)
            kinds.push_back(enum_to(k, part_names));
        j = json{ { "parts", c.parts }, { "kinds", kinds } };
    }

    void from_json(const json & j, IsometricCover & c)
    {
        j.at("parts").get_to(c.parts);
        c.kinds.clear();
        for (const auto & k : j.at("kinds"))
            c.kinds.push_back(enum_from(k, part_names));
        if (c.kinds.size() != c.parts.size())
            throw Error(ErrorKind::MalformedReport, "cover has " + to_string(c.parts.size()) + " parts but "
                    + to_string(c.kinds.size()) + " kinds");
    }

    void to_json(json & j, const Certificate & c)
    {
        j = json{ { "kind", enum_to(c.kind, certificate_names) } };
        switch (c.kind) {
            case CertificateKind::None: break;
            case CertificateKind::GeneralPosition: j["vertices"] = c.vertices; break;
            case CertificateKind::Packing:
                j["vertices"] = c.vertices;
                j["k"] = c.k;
                break;
            case CertificateKind::EdgeSet: j["edges"] = c.edges; break;
            case CertificateKind::Cover:
                j["cover"] = c.cover;
                j["part_values"] = c.part_values;
                break;
        }
    }

    void from_json(const json & j, Certificate & c)
    {
        c = Certificate{};
        c.kind = enum_from(j.at("kind"), certificate_names);
        switch (c.kind) {
            case CertificateKind::None: break;
            case CertificateKind::GeneralPosition: j.at("vertices").get_to(c.vertices); break;
            case CertificateKind::Packing:
                j.at("vertices").get_to(c.vertices);
                j.at("k").get_to(c.k);
                break;
            case CertificateKind::EdgeSet: j.at("edges").get_to(c.edges); break;
            case CertificateKind::Cover:
                j.at("cover").get_to(c.cover);
                j.at("part_values").get_to(c.part_values);
                break;
        }
    }

    void to_json(json & j, const BoundEntry & e)
    {
        j = json{ { "value", e.value }, { "method", e.method }, { "certificate", e.certificate }, { "note", e.note } };
    }

    void from_json(const json & j, BoundEntry & e)
    {
        j.at("value").get_to(e.value);
        j.at("method").get_to(e.method);
        j.at("certificate").get_to(e.certificate);
        j.at("note").get_to(e.note);
    }

    void to_json(json & j, const BoundsReport & b)
    {
        j = json{ { "lower", b.lower }, { "upper", b.upper }, { "exact", b.exact }, { "solve", b.solve },
            { "checks", b.checks } };
    }

    void from_json(const json & j, BoundsReport & b)
    {
        j.at("lower").get_to(b.lower);
        j.at("upper").get_to(b.upper);
        j.at("exact").get_to(b.exact);
        j.at("solve").get_to(b.solve);
        j.at("checks").get_to(b.checks);
    }

    void to_json(json & j, const InputDescriptor & i)
    {
        j = json{ { "path", i.path }, { "format", i.format }, { "n", i.n }, { "m", i.m } };
    }

    void from_json(const json & j, InputDescriptor & i)
    {
        j.at("path").get_to(i.path);
        j.at("format").get_to(i.format);
        j.at("n").get_to(i.n);
        j.at("m").get_to(i.m);
    }

    void to_json(json & j, const VerifyVerdict & v)
    {
        j = json{ { "requested", v.requested }, { "result", v.result } };
    }

    void from_json(const json & j, VerifyVerdict & v)
    {
        j.at("requested").get_to(v.requested);
        j.at("result").get_to(v.result);
    }

    void to_json(json & j, const ReductionSummary & r)
    {
        j = json{ { "lifted_n", r.lifted_n }, { "lifted_edges", r.lifted_edges }, { "layer_map", r.layer_map },
            { "alpha", r.alpha }, { "alpha_witness", r.alpha_witness }, { "lifted_gp", r.lifted_gp },
            { "gp_witness", r.gp_witness }, { "holds", r.holds }, { "note", r.note } };
    }

    void from_json(const json & j, ReductionSummary & r)
    {
        j.at("lifted_n").get_to(r.lifted_n);
        j.at("lifted_edges").get_to(r.lifted_edges);
        j.at("layer_map").get_to(r.layer_map);
        j.at("alpha").get_to(r.alpha);
        j.at("alpha_witness").get_to(r.alpha_witness);
        j.at("lifted_gp").get_to(r.lifted_gp);
        j.at("gp_witness").get_to(r.gp_witness);
        j.at("holds").get_to(r.holds);
        j.at("note").get_to(r.note);
    }

    void to_json(json & j, const FamilySummary & f)
    {
        j = json{ { "name", f.name }, { "predicted_gp", f.predicted_gp }, { "predicted_witness", f.predicted_witness },
            { "cover", f.cover }, { "edge_certificate", f.edge_certificate } };
    }

    void from_json(const json & j, FamilySummary & f)
    {
        j.at("name").get_to(f.name);
        j.at("predicted_gp").get_to(f.predicted_gp);
        j.at("predicted_witness").get_to(f.predicted_witness);
        j.at("cover").get_to(f.cover);
        j.at("edge_certificate").get_to(f.edge_certificate);
    }

    void to_json(json & j, const RunReport & r)
    {
        j = json{ { "tool", "gpos" }, { "version", r.version }, { "command", r.command }, { "input", r.input },
            { "graph_edges", r.graph_edges } };
        if (r.solve)
            j["solve"] = *r.solve;
        if (r.bounds)
            j["bounds"] = *r.bounds;
        if (r.verify)
            j["verify"] = *r.verify;
        if (r.reduction)
            j["reduction"] = *r.reduction;
        if (r.family)
            j["family"] = *r.family;
        if (! r.timing_ms.empty())
            j["timing_ms"] = r.timing_ms;
    }

    void from_json(const json & j, RunReport & r)
    {
        r = RunReport{};
        if (j.at("tool").get<string>() != "gpos")
            throw Error(ErrorKind::MalformedReport, "not a gpos report");
        j.at("version").get_to(r.version);
        j.at("command").get_to(r.command);
        j.at("input").get_to(r.input);
        j.at("graph_edges").get_to(r.graph_edges);
        if (j.contains("solve"))
            r.solve = j["solve"].get<SolveResult>();
        if (j.contains("bounds"))
            r.bounds = j["bounds"].get<BoundsReport>();
        if (j.contains("verify"))
            r.verify = j["verify"].get<VerifyVerdict>();
        if (j.contains("reduction"))
            r.reduction = j["reduction"].get<ReductionSummary>();
        if (j.contains("family"))
            r.family = j["family"].get<FamilySummary>();
        if (j.contains("timing_ms"))
            j["timing_ms"].get_to(r.timing_ms);
    }

    namespace
    {
        template <typename T>
        auto parse_as(std::string_view text) -> T
        {
            try {
                return json::parse(text).get<T>();
            }
            catch (const json::exception & e) {
                throw Error(ErrorKind::MalformedReport, e.what());
            }
        }
    }

    auto serialize_report(const RunReport & r) -> string
    {
        return json(r).dump(2) + "\n";
    }

    auto parse_report(std::string_view text) -> RunReport
    {
        return parse_as<RunReport>(text);
    }

    auto serialize_reports(const vector<RunReport> & rs) -> string
    {
        return json(rs).dump(2) + "\n";
    }

    auto parse_reports(std::string_view text) -> vector<RunReport>
    {
        return parse_as<vector<RunReport>>(text);
    }

    namespace
    {
        auto check_solve(const string & where, const DistanceMatrix & d, const SolveResult & s, vector<string> & failures)
            -> void
        {
            auto again = verify_general_position(d, s.witness.vertices);
            if (! again.certified || ! s.witness.certified)
                failures.push_back(where + ": witness is not in general position");
            if (again.vertices != s.witness.vertices)
                failures.push_back(where + ": witness is not a sorted set of distinct vertices");
            if (static_cast<int>(s.witness.vertices.size()) != s.optimum)
                failures.push_back(where + ": optimum " + to_string(s.optimum) + " but witness has "
                        + to_string(s.witness.vertices.size()) + " vertices");
        }

        auto independent(const Graph & g, const vector<Vertex> & s) -> bool
        {
            std::set<Vertex> seen;
            for (auto v : s)
                if (v < 0 || v >= g.size() || ! seen.insert(v).second)
                    return false;
            for (std::size_t i = 0; i < s.size(); ++i)
                for (std::size_t j = i + 1; j < s.size(); ++j)
                    if (g.adjacent(s[i], s[j]))
                        return false;
            return true;
        }

        auto recheck(const RunReport & r, vector<string> & failures) -> void
        {
            auto g = Graph::build(r.input.n, r.graph_edges);
            if (g.edge_count() != r.input.m || static_cast<int>(r.graph_edges.size()) != r.input.m)
                failures.push_back("input: edge count does not match the stored graph");
            auto d = all_pairs_distances(g);

            if (r.solve)
                check_solve("solve", d, *r.solve, failures);

            if (r.bounds) {
                const auto & b = *r.bounds;
                auto t = collinear_triples(d, std::max(default_triple_materialize_limit, g.size()));
                for (const auto & [name, entry] : b.lower)
                    if (! recheck_bound(g, d, t, entry, true))
                        failures.push_back("bounds.lower." + name + ": certificate does not re-verify");
                for (const auto & [name, entry] : b.upper)
                    if (! recheck_bound(g, d, t, entry, false))
                        failures.push_back("bounds.upper." + name + ": certificate does not re-verify");
                if (b.solve) {
                    check_solve("bounds.solve", d, *b.solve, failures);
                    if (b.exact && (b.solve->status != SolveStatus::Exact || b.solve->optimum != *b.exact))
                        failures.push_back("bounds.exact: does not match the solve section");
                }
                else if (b.exact)
                    failures.push_back("bounds.exact: no solve result backs it");
                if (! b.consistent())
                    failures.push_back("bounds: lower and upper bounds are inconsistent");
            }

            if (r.verify) {
                auto again = verify_general_position(d, r.verify->requested);
                if (again != r.verify->result)
                    failures.push_back("verify: stored verdict differs from recomputation");
            }

            if (r.reduction) {
                const auto & red = *r.reduction;
                auto built = build_reduction(g);
                if (red.lifted_n != built.lifted.size()
                        || red.lifted_edges != vector<Edge>(built.lifted.edges().begin(), built.lifted.edges().end())
                        || red.layer_map != built.layer_map)
                    failures.push_back("reduction: lifted graph or layer map differs from the construction");
                if (red.alpha) {
                    if (! independent(g, red.alpha_witness) || static_cast<int>(red.alpha_witness.size()) != *red.alpha)
                        failures.push_back("reduction.alpha: witness is not an independent set of that size");
                }
                if (red.lifted_gp) {
                    auto lifted_d = all_pairs_distances(built.lifted);
                    auto again = verify_general_position(lifted_d, red.gp_witness);
                    if (! again.certified || static_cast<int>(again.vertices.size()) != *red.lifted_gp
                            || again.vertices.size() != red.gp_witness.size())
                        failures.push_back("reduction.lifted_gp: witness is not a general position set of that size");
                }
                if (red.holds) {
                    if (! red.alpha || ! red.lifted_gp || *red.holds != (*red.lifted_gp == *red.alpha + g.size()))
                        failures.push_back("reduction.holds: verdict does not follow from the stored values");
                }
            }

            if (r.family) {
                const auto & f = *r.family;
                if (f.predicted_witness) {
                    auto again = verify_general_position(d, *f.predicted_witness);
                    if (! again.certified || again.vertices.size() != f.predicted_witness->size())
                        failures.push_back("family.predicted_witness: not in general position");
                    if (f.predicted_gp && static_cast<int>(f.predicted_witness->size()) != *f.predicted_gp)
                        failures.push_back("family.predicted_witness: size differs from the prediction");
                }
                if (f.cover) {
                    try {
                        validate_cover(g, d, *f.cover);
                    }
                    catch (const Error & e) {
                        failures.push_back(string("family.cover: ") + e.what());
                    }
                }
                if (f.edge_certificate) {
                    Certificate cert;
                    cert.kind = CertificateKind::EdgeSet;
                    cert.edges = *f.edge_certificate;
                    BoundEntry entry{ 2 * static_cast<int>(cert.edges.size()), "family", cert, "" };
                    TripleSet none;
                    if (! recheck_bound(g, d, none, entry, true))
                        failures.push_back("family.edge_certificate: edges are not pairwise at distance diam");
                }
            }
        }
    }

    auto recheck_report(const RunReport & r) -> vector<string>
    {
        vector<string> failures;
        try {
            recheck(r, failures);
        }
        catch (const Error & e) {
            failures.push_back(string("report: ") + e.what());
        }
        return failures;
    }
}
