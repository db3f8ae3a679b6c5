#pragma once

#include "tropfw/rational.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tropfw {

inline constexpr const char* kArtifactVersion = "0.1.0";

/// Aggregated results of one experiment cell (one grid point of the sweep).
/// Step statistics are collected only by the search experiments
/// (table2/table3/steps); table1 cells keep has_steps == false.
struct CellStats {
    std::size_t m = 0;
    std::size_t n = 0;
    double v = 0.0;  // sampling variance (table1: variance of the one matrix)
    std::size_t trials = 0;
    std::size_t successes = 0;

    bool has_steps = false;
    // Over successful trials: total steps per strategy and the paired
    // comparison tallies (a1 = lexicographic, a4 = priority).
    std::size_t total_steps_a1 = 0;
    std::size_t total_steps_a4 = 0;
    std::size_t a1_gt_a4 = 0;
    std::size_t a1_lt_a4 = 0;
    std::size_t a1_eq_a4 = 0;

    // Expected to stay 0; counted instead of aborting so sweeps finish.
    std::size_t exclusivity_violations = 0;

    // Mean wall-clock per trial, measured, never asserted.
    double mean_ms_a1 = 0.0;
    double mean_ms_a4 = 0.0;

    /// successes / trials (0 when the cell is empty). Exact.
    Rational rate() const;
    /// total steps / successes per strategy (0 when no successes). Exact.
    Rational mean_steps_a1() const;
    Rational mean_steps_a4() const;
};

struct ExperimentReport {
    std::string id;  // table1 | table2 | table3 | steps
    std::uint64_t seed = 0;
    std::string prng;      // pinned randomness pipeline identifier
    std::string version;   // artifact version
    std::string gen_mode;  // "normalize" | "fix-first"
    std::size_t trials_per_cell = 0;
    std::size_t jobs = 1;
    std::vector<CellStats> cells;
};

/// Exact rational as {"fraction": "p/q", "decimal": d} — the serialization
/// every report number uses (integral counters stay plain JSON integers).
nlohmann::json rational_to_json(const Rational& q);

nlohmann::json report_to_json(const ExperimentReport& report);
void write_report_json(std::ostream& out, const ExperimentReport& report);

/// Plot-ready CSV: `#` provenance comments, a header row, one row per cell.
/// Exact quantities appear twice (fraction column + decimal column).
void write_report_csv(std::ostream& out, const ExperimentReport& report);

}
