#pragma once

#include <optional>
#include <string>

#include "qwmvc/bench.hpp"
#include "qwmvc/exact.hpp"
#include "qwmvc/heuristics.hpp"

namespace qwmvc {

/// Solver-agnostic view of a single solve, for CLI printing.
struct SolveReport {
    std::string solver;
    std::vector<int> cover;
    bool valid = false;
    int iterations = 0;
    double wall_time_s = 0.0;
    std::vector<TraceEntry> trace;
    std::optional<bool> proven_optimal;       // exact only
    std::optional<long long> nodes_explored;  // exact only
};

SolveReport make_report(const CoverResult& r);
SolveReport make_report(const ExactResult& r);

/// "size=K cover=[a,b,...] valid=true ..." plus per-iteration lines if trace.
std::string solve_report_text(const SolveReport& r, bool with_trace);

/// Stable machine-readable schema (documented in the README).
std::string solve_report_json(const SolveReport& r, bool with_trace);

/// Aggregated ratio tables for `report` (stdout).
std::string summary_table_text(const AggregateResult& by_family, const AggregateResult& by_family_n);
std::string summary_table_json(const AggregateResult& by_family, const AggregateResult& by_family_n);

/// Parses a records.csv produced by records_csv(); throws parse_error.
std::vector<RatioRecord> parse_records_csv(std::istream& in, const std::string& source_name);

}  // namespace qwmvc
