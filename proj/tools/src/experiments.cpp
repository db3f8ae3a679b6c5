#include "tropfw/experiments.hpp"

#include "tropfw/errors.hpp"
#include "tropfw/fermat_weber.hpp"
#include "tropfw/triangle_search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <initializer_list>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

namespace tropfw {

namespace {

struct TrialResult {
    bool success = false;
    bool exclusivity_violation = false;
    std::size_t steps_a1 = 0;
    std::size_t steps_a4 = 0;
    double ms_a1 = 0.0;
    double ms_a4 = 0.0;
};

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

/// Runs fn(trial) for trial in [0, trials) on `jobs` threads. Results land
/// in a preallocated slot per trial, so the outcome is order-independent.
/// The first non-trial exception wins and is rethrown on the caller.
std::vector<TrialResult> map_trials(std::size_t trials, std::size_t jobs,
                                    const std::function<TrialResult(std::size_t)>& fn) {
    std::vector<TrialResult> results(trials);
    if (trials == 0) return results;
    jobs = std::clamp<std::size_t>(jobs, 1, trials);

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t t = next.fetch_add(1);
            if (t >= trials) return;
            try {
                results[t] = fn(t);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);
    return results;
}

CellStats reduce(std::size_t m, std::size_t n, double v, bool has_steps,
                 const std::vector<TrialResult>& results) {
    CellStats cell;
    cell.m = m;
    cell.n = n;
    cell.v = v;
    cell.trials = results.size();
    cell.has_steps = has_steps;
    double total_ms_a1 = 0.0, total_ms_a4 = 0.0;
    for (const TrialResult& r : results) {
        if (r.exclusivity_violation) ++cell.exclusivity_violations;
        total_ms_a1 += r.ms_a1;
        total_ms_a4 += r.ms_a4;
        if (!r.success) continue;
        ++cell.successes;
        if (!has_steps) continue;
        cell.total_steps_a1 += r.steps_a1;
        cell.total_steps_a4 += r.steps_a4;
        if (r.steps_a1 > r.steps_a4)
            ++cell.a1_gt_a4;
        else if (r.steps_a1 < r.steps_a4)
            ++cell.a1_lt_a4;
        else
            ++cell.a1_eq_a4;
    }
    if (has_steps && !results.empty()) {
        cell.mean_ms_a1 = total_ms_a1 / static_cast<double>(results.size());
        cell.mean_ms_a4 = total_ms_a4 / static_cast<double>(results.size());
    }
    return cell;
}

/// table1: does the projected Fermat-Weber point of the sample attain the
/// Fermat-Weber optimum of the projected sample?
TrialResult projection_trial(const DataMatrix& X, const FwResult& fw, std::size_t n,
                             std::uint64_t triangle_seed) {
    const TropicalTriangle C = gen_triangle(n, 9999.0, triangle_seed);
    const std::vector<TropicalPoint> gens = C.generators();
    std::vector<TropicalPoint> projected;
    projected.reserve(X.row_count());
    for (const TropicalPoint& row : X.rows())
        projected.push_back(project_onto_tconv(row, gens));
    const DataMatrix P(std::move(projected));
    const TropicalPoint candidate = project_onto_tconv(fw.point, gens);

    TrialResult r;
    r.success = distance_sum(candidate, P) == fermat_weber_point(P).objective;
    return r;
}

/// table2/table3/steps: one fresh sample matrix, both searches end to end.
TrialResult search_trial(const GenConfig& cfg) {
    const DataMatrix X = gen_matrix(cfg);
    TrialResult r;
    try {
        const auto t1 = std::chrono::steady_clock::now();
        const SearchOutcome a1 = search_lex(X);
        r.ms_a1 = ms_since(t1);

        const auto t4 = std::chrono::steady_clock::now();
        const SearchOutcome a4 = search_priority(X);
        r.ms_a4 = ms_since(t4);

        if (a1.status != a4.status)
            throw SolverInvariantError("search strategies disagree on status");
        r.success = a1.status == SearchStatus::Success;
        r.steps_a1 = a1.steps;
        r.steps_a4 = a4.steps;
    } catch (const ExclusivityViolationError&) {
        r = TrialResult{};
        r.exclusivity_violation = true;
    }
    return r;
}

struct Grid {
    std::vector<std::size_t> ms;
    std::vector<std::size_t> ns;
    std::vector<double> vs;
};

Grid resolve_grid(const ExperimentConfig& cfg) {
    Grid g{cfg.ms, cfg.ns, cfg.vs};
    const auto fallback = [](auto& dst, std::initializer_list<double> values) {
        if (!dst.empty()) return;
        for (double value : values)
            dst.push_back(static_cast<typename std::decay_t<decltype(dst)>::value_type>(value));
    };
    if (cfg.id == "table1") {
        fallback(g.ms, {30});
        fallback(g.ns, {5});
        fallback(g.vs, {10});
    } else if (cfg.id == "table2" || cfg.id == "steps") {
        fallback(g.ms, {30});
        fallback(g.ns, {5, 10});
        fallback(g.vs, {10});
    } else if (cfg.id == "table3") {
        fallback(g.ms, {120});
        fallback(g.ns, {20});
        fallback(g.vs, {1, 5, 10, 50, 800});
    } else {
        throw std::invalid_argument("unknown experiment id: " + cfg.id +
                                    " (expected table1, table2, table3, or steps)");
    }
    for (std::size_t m : g.ms)
        if (m < 1) throw std::invalid_argument("experiment grid needs m >= 1");
    for (std::size_t n : g.ns)
        if (n < 3) throw std::invalid_argument("experiment grid needs n >= 3");
    for (double v : g.vs)
        if (!(v > 0)) throw std::invalid_argument("experiment grid needs v > 0");
    return g;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& config) {
    const Grid grid = resolve_grid(config);
    std::size_t jobs = config.jobs;
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());

    ExperimentReport report;
    report.id = config.id;
    report.seed = config.seed;
    report.prng = kPrngId;
    report.version = kArtifactVersion;
    report.gen_mode = config.mode == GenMode::Normalize ? "normalize" : "fix-first";
    report.trials_per_cell = config.trials;
    report.jobs = jobs;

    const bool is_table1 = config.id == "table1";
    std::uint64_t ordinal = 0;
    for (std::size_t m : grid.ms) {
        for (std::size_t n : grid.ns) {
            for (double v : grid.vs) {
                const std::uint64_t cell_seed = derive_stream(config.seed, ordinal++);
                std::vector<TrialResult> results;
                if (config.trials == 0) {
                    // leave empty: the cell reports 0 trials
                } else if (is_table1) {
                    GenConfig gen;
                    gen.m = m;
                    gen.n = n;
                    gen.variance = v;
                    gen.seed = derive_stream(cell_seed, 0);
                    gen.mode = config.mode;
                    const DataMatrix X = gen_matrix(gen);
                    const FwResult fw = fermat_weber_point(X);
                    results = map_trials(config.trials, jobs, [&](std::size_t t) {
                        return projection_trial(X, fw, n, derive_stream(cell_seed, 1 + t));
                    });
                } else {
                    results = map_trials(config.trials, jobs, [&](std::size_t t) {
                        GenConfig gen;
                        gen.m = m;
                        gen.n = n;
                        gen.variance = v;
                        gen.seed = derive_stream(cell_seed, t);
                        gen.mode = config.mode;
                        return search_trial(gen);
                    });
                }
                report.cells.push_back(reduce(m, n, v, !is_table1, results));
            }
        }
    }
    return report;
}

}
