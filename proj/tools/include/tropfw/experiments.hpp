#pragma once

#include "tropfw/datagen.hpp"
#include "tropfw/report.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace tropfw {

/// One experiment sweep. Grids left empty take the per-id defaults:
///   table1  m {30}        n {5}       v {10}           (projection check)
///   table2  m {30}        n {5, 10}   v {10}           (search success rate)
///   table3  m {120}       n {20}      v {1,5,10,50,800}
///   steps   m {30}        n {5, 10}   v {10}           (paired step counts)
/// The cell grid is the cross product m x n x v in row-major order.
struct ExperimentConfig {
    std::string id;  // table1 | table2 | table3 | steps
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    std::vector<std::size_t> ms;
    std::vector<std::size_t> ns;
    std::vector<double> vs;
    std::size_t jobs = 0;  // 0 -> hardware concurrency
    GenMode mode = GenMode::Normalize;
};

/// Runs the sweep. Deterministic in (id, trials, seed, grid, mode): every
/// cell draws from derive_stream(seed, cell_ordinal) and every trial from a
/// further split, so results are identical for any `jobs`.
///
/// Per trial: table1 fixes one normal matrix per cell, draws a random
/// triangle (coordinates uniform in [-9999, 9999]), projects the sample
/// onto it, and counts success when the projected Fermat-Weber point of the
/// sample attains the Fermat-Weber optimum of the projected sample. The
/// search experiments draw a fresh normal matrix and run both triangle
/// searches; success means the searches find a verifying pair, and step
/// counts are compared pairwise on successes.
///
/// Throws std::invalid_argument on unknown ids or degenerate grids
/// (n < 3, m < 1, v <= 0).
ExperimentReport run_experiment(const ExperimentConfig& config);

}
