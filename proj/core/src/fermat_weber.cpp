#include "tropfw/fermat_weber.hpp"

#include "tropfw/errors.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace tropfw {

LpProblem fw_lp_build(const DataMatrix& X) {
    const std::size_t m = X.row_count();
    const std::size_t n = X.dim();
    if (m < 1) throw DimensionError("Fermat-Weber needs at least one sample row");
    if (n < 2) throw DimensionError("Fermat-Weber needs dimension >= 2");

    // Variables: g_0..g_{m-1} (per-row distances), then y_2..y_n (candidate
    // point, y_1 pinned to 0 by omission).
    LpProblem lp(m + n - 1);
    std::vector<Rational> cost(m + n - 1, Rational(0));
    for (std::size_t i = 0; i < m; ++i) cost[i] = 1;
    lp.set_objective(std::move(cost));

    auto yvar = [&](std::size_t k) { return m + k - 2; };  // k is 1-based, k >= 2

    for (std::size_t i = 0; i < m; ++i) {
        const TropicalPoint& x = X.row(i);
        for (std::size_t k = 1; k < n; ++k) {
            for (std::size_t l = k + 1; l <= n; ++l) {
                const Rational rhs = x[l - 1] - x[k - 1];  // x_l(i) - x_k(i)
                std::vector<std::pair<std::size_t, Rational>> plus{{i, Rational(1)}};
                std::vector<std::pair<std::size_t, Rational>> minus{{i, Rational(1)}};
                if (k >= 2) {
                    plus.emplace_back(yvar(k), Rational(-1));
                    minus.emplace_back(yvar(k), Rational(1));
                }
                plus.emplace_back(yvar(l), Rational(1));
                minus.emplace_back(yvar(l), Rational(-1));
                lp.add_constraint_sparse(std::move(plus), Sense::GreaterEqual, rhs);
                lp.add_constraint_sparse(std::move(minus), Sense::GreaterEqual, -rhs);
            }
        }
    }
    return lp;
}

FwResult fermat_weber_point(const DataMatrix& X) {
    const std::size_t m = X.row_count();
    const std::size_t n = X.dim();
    const LpSolution sol = lp_solve(fw_lp_build(X));
    if (sol.status != LpStatus::Optimal)
        throw SolverInvariantError("Fermat-Weber LP is always solvable, got a non-optimal status");

    std::vector<Rational> coords(n, Rational(0));
    for (std::size_t k = 2; k <= n; ++k) coords[k - 1] = sol.primal[m + k - 2];
    FwResult result{TropicalPoint(std::move(coords)), sol.objective};

    // The LP relaxes each distance to g_i >= d(y, x_i); at an optimum they
    // coincide, so the value must reproduce the plain distance sum exactly.
    if (distance_sum(result.point, X) != result.objective)
        throw SolverInvariantError("Fermat-Weber objective mismatch against distance_sum");
    return result;
}

bool verify_fw_point(const DataMatrix& X) {
    if (X.row_count() < 2)
        throw DimensionError("verification needs a last row plus at least one other row");
    const Rational last_row_sum = distance_sum(X.row(X.row_count() - 1), X);
    return last_row_sum == fermat_weber_point(X).objective;
}

DataMatrix augment_with_fw(const DataMatrix& X) {
    return X.with_row_appended(fermat_weber_point(X).point);
}

}  // namespace tropfw
