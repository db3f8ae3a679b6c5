#pragma once

#include "tropfw/rational.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace tropfw {

enum class Sense { LessEqual, GreaterEqual, Equal };

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// A linear program  minimize c.z  over free variables z subject to row
/// constraints and optional per-variable bounds. All data is exact.
class LpProblem {
public:
    struct Constraint {
        std::vector<std::pair<std::size_t, Rational>> entries;  // sparse, sorted by var
        Sense sense;
        Rational rhs;
    };

    explicit LpProblem(std::size_t var_count);

    std::size_t var_count() const { return var_count_; }
    std::size_t constraint_count() const { return constraints_.size(); }

    /// Minimization objective; missing trailing entries default to zero is
    /// not supported — the vector length must equal var_count.
    void set_objective(std::vector<Rational> cost);

    void add_constraint(const std::vector<Rational>& row, Sense sense, Rational rhs);
    void add_constraint_sparse(std::vector<std::pair<std::size_t, Rational>> entries,
                               Sense sense, Rational rhs);

    /// Bounds are sugar for extra rows (z_i >= lo, z_i <= hi); variables
    /// stay free unless bounded explicitly.
    void set_lower_bound(std::size_t var, Rational lo);
    void set_upper_bound(std::size_t var, Rational hi);

    const std::vector<Rational>& objective() const { return cost_; }
    const std::vector<Constraint>& constraints() const { return constraints_; }
    const std::vector<std::optional<Rational>>& lower_bounds() const { return lower_; }
    const std::vector<std::optional<Rational>>& upper_bounds() const { return upper_; }

private:
    std::size_t var_count_;
    std::vector<Rational> cost_;
    std::vector<Constraint> constraints_;
    std::vector<std::optional<Rational>> lower_, upper_;
};

struct LpSolution {
    LpStatus status;
    /// Populated only when status == Optimal: an optimal *vertex* of the
    /// feasible region (an extreme point whenever one exists), chosen by a
    /// fixed deterministic pivot rule — identical problems yield identical
    /// solutions.
    std::vector<Rational> primal;
    Rational objective;  // c.primal when Optimal, 0 otherwise
};

/// Exact simplex solve. The result is certified internally: the returned
/// point satisfies every constraint exactly and its optimality is proven by
/// exact dual feasibility before returning (violations throw
/// SolverInvariantError). A floating-point presolve picks the pivot path for
/// speed, but no float value ever reaches the result.
LpSolution lp_solve(const LpProblem& problem);

}
