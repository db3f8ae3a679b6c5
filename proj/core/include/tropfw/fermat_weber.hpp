#pragma once

#include "tropfw/linprog.hpp"
#include "tropfw/tropical.hpp"

namespace tropfw {

struct FwResult {
    TropicalPoint point;  // canonical representative of a minimizer
    Rational objective;   // the (unique) minimal distance sum
};

/// Builds the exact LP whose optimum is the Fermat-Weber value of X:
/// variables (g_1..g_m, y_2..y_n) with y_1 fixed to 0 by omission, and for
/// every row i and coordinate pair k < l the two rows
///     g_i - y_k + y_l >= x_l(i) - x_k(i)
///     g_i + y_k - y_l >= x_k(i) - x_l(i)
/// minimizing sum g_i. Exactly 2 * m * C(n,2) constraints, m + n - 1
/// variables; no redundant bounds are added.
LpProblem fw_lp_build(const DataMatrix& X);

/// A Fermat-Weber point of X (a minimizer of distance_sum(., X)) plus the
/// optimal value. The minimizer set can be a polytope; this returns the
/// deterministic vertex chosen by lp_solve. Cross-checked exactly against
/// distance_sum before returning. Requires m >= 1.
FwResult fermat_weber_point(const DataMatrix& X);

/// True iff the LAST row of X is itself a Fermat-Weber point of X: compares
/// distance_sum(last row, X) with the LP optimum, exactly. Requires m >= 2.
bool verify_fw_point(const DataMatrix& X);

/// X with fermat_weber_point(X).point appended as the last row.
DataMatrix augment_with_fw(const DataMatrix& X);

}
