#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qwmvc/exact.hpp"
#include "qwmvc/heuristics.hpp"

namespace qwmvc {

enum class Family { er, ba, reg };

const char* family_name(Family f);  // "ER" / "BA" / "REG"

/// Canonical solver ids in report order.
inline const std::vector<std::string>& canonical_solvers() {
    static const std::vector<std::string> ids = {"quantum", "fastvc", "sa", "2approx"};
    return ids;
}

/// One ensemble sweep: families x sizes x parameters x instances, every
/// instance solved exactly and by each requested heuristic.
struct EnsembleConfig {
    std::vector<Family> families = {Family::er, Family::ba, Family::reg};
    std::vector<int> n_values = {4, 8, 12, 16, 20, 24, 28, 32, 36, 40, 44, 48, 52, 56, 60};
    std::vector<double> er_p = {0.2, 0.5, 0.8};
    std::vector<int> ba_m = {1, 2, 3, 5};
    int instances_per_config = 10;
    int reg_instances = 5;  // distinct connected instances per (n, k)
    std::uint64_t seed_base = 1;
    std::vector<std::string> solvers = canonical_solvers();
    bool fixed_time = false;  // false -> t_opt per iteration; true -> t = 0.01
    long long exact_budget = kDefaultBnbBudget;
    SaParams sa;          // per-instance seeds overwritten by the runner
    FastVcParams fastvc;  // likewise

    /// Throws std::invalid_argument if any field is out of contract.
    void validate() const;
};

/// Degree grid for regular graphs at size n: {2, n/4, n/2} rounded, bumped to
/// keep n*k even, clamped to [2, n-1], deduplicated ascending.
std::vector<int> regular_degree_grid(int n);

/// One (instance, solver) outcome.
struct RatioRecord {
    Family family;
    int n;
    double param;  // ER: p, BA: m, REG: k
    std::uint64_t seed;
    bool substituted;  // ER instance replaced by a Watts-Strogatz graph
    std::string solver;
    int cover_size;
    int exact_size;
    bool proven_optimal;
    double ratio;  // cover_size / exact_size
    double wall_time_s;
};

struct RunStats {
    long long substituted_instances = 0;
    long long unproven_instances = 0;
    long long excluded_records = 0;  // records skipped by aggregation
    long long generation_failures = 0;
    /// Achieved instance counts per REG configuration, keyed (n, k).
    std::map<std::pair<int, int>, int> reg_achieved;
};

struct RunResult {
    std::vector<RatioRecord> records;
    RunStats stats;
};

/// Runs the sweep. `threads` = 0 picks hardware concurrency. Output is
/// identical for every thread count (records land in pre-assigned slots).
RunResult run_ensemble(const EnsembleConfig& config, int threads = 0);

struct SummaryRow {
    Family family;
    std::string solver;
    int n;  // -1 for family-level aggregation
    double mean;
    double stddev;  // population std dev
    int count;      // proven records aggregated
    int excluded;   // unproven records skipped
};

struct AggregateResult {
    std::vector<SummaryRow> rows;  // groups with zero proven records are omitted
    int excluded_total = 0;
};

AggregateResult aggregate_by_family(const std::vector<RatioRecord>& records);
AggregateResult aggregate_by_family_n(const std::vector<RatioRecord>& records);

/// CSV emitters; all fixed-point 6 decimals, fixed headers, canonical order,
/// byte-reproducible. Wall times are deliberately not emitted.
std::string records_csv(const std::vector<RatioRecord>& records);
std::string heatmap_csv(const AggregateResult& by_family,
                        const std::vector<std::string>& solvers = canonical_solvers());
std::string curves_csv(const AggregateResult& by_family_n);
std::string run_meta_text(const EnsembleConfig& config, const RunStats& stats,
                          long long record_count);

/// Key=value config file ('#' comments). Unknown keys are errors. Missing keys
/// keep the desk-scale defaults above.
EnsembleConfig parse_config(std::istream& in, const std::string& source_name = "<config>");
EnsembleConfig parse_config_file(const std::string& path);

/// Canonical echo of a config, parseable by parse_config.
std::string config_echo(const EnsembleConfig& config);

}  // namespace qwmvc
