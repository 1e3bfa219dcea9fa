#ifndef GPOS_REPORT_HH
#define GPOS_REPORT_HH

#include <gpos/bounds.hh>
#include <gpos/geodesic.hh>
#include <gpos/graph.hh>
#include <gpos/solver.hh>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gpos
{
    inline constexpr std::string_view tool_version = "0.3.1";

    struct InputDescriptor
    {
        std::string path;
        std::string format;
        int n = 0;
        int m = 0;

        auto operator==(const InputDescriptor &) const -> bool = default;
    };

    struct VerifyVerdict
    {
        std::vector<Vertex> requested;
        GeneralPositionSet result;

        auto operator==(const VerifyVerdict &) const -> bool = default;
    };

    struct ReductionSummary
    {
        int lifted_n = 0;
        std::vector<Edge> lifted_edges;
        std::vector<std::array<Vertex, 3>> layer_map;
        std::optional<int> alpha;
        std::vector<Vertex> alpha_witness;
        std::optional<int> lifted_gp;
        std::vector<Vertex> gp_witness;
        std::optional<bool> holds;
        std::string note;

        auto operator==(const ReductionSummary &) const -> bool = default;
    };

    struct FamilySummary
    {
        std::string name;
        std::optional<int> predicted_gp;
        std::optional<std::vector<Vertex>> predicted_witness;
        std::optional<IsometricCover> cover;
        std::optional<std::vector<Edge>> edge_certificate;

        auto operator==(const FamilySummary &) const -> bool = default;
    };

    /// Everything one CLI invocation produced. graph_edges is the canonical
    /// edge list of the input, so the report can be rechecked on its own.
    struct RunReport
    {
        std::string version{ tool_version };
        std::string command;
        InputDescriptor input;
        std::vector<Edge> graph_edges;
        std::optional<SolveResult> solve;
        std::optional<BoundsReport> bounds;
        std::optional<VerifyVerdict> verify;
        std::optional<ReductionSummary> reduction;
        std::optional<FamilySummary> family;
        std::map<std::string, double> timing_ms;

        auto operator==(const RunReport &) const -> bool = default;
    };

    /// Pretty-printed JSON, newline terminated.
    auto serialize_report(const RunReport & r) -> std::string;

    /// Throws MalformedReport on bad JSON or a schema mismatch.
    auto parse_report(std::string_view text) -> RunReport;

    /// Several reports as one JSON array (batch graph6 input).
    auto serialize_reports(const std::vector<RunReport> & rs) -> std::string;
    auto parse_reports(std::string_view text) -> std::vector<RunReport>;

    /// Re-verifies every certificate in r against the graph stored in r.
    /// Returns one message per failed check; empty means all passed.
    auto recheck_report(const RunReport & r) -> std::vector<std::string>;
}

#endif
