#pragma once

#include "tropfw/tropical.hpp"

#include <cstddef>
#include <vector>

namespace tropfw {

/// An unordered coordinate pair {d1, d2} with 1-based labels matching the
/// usual column numbering: 2 <= d1 < d2 <= n. Column 1 is never eligible
/// (it is the normalization coordinate).
struct PairIndex {
    int d1;
    int d2;

    bool operator==(const PairIndex&) const = default;
    bool contains(int column) const { return column == d1 || column == d2; }
};

/// Validates 2 <= d1 < d2 <= n. Throws DimensionError otherwise.
PairIndex make_pair_index(int d1, int d2, std::size_t n);

/// All eligible pairs for dimension n in lexicographic order:
/// (2,3), (2,4), ..., (2,n), (3,4), ..., (n-1,n). Size (n-1)(n-2)/2.
std::vector<PairIndex> pair_order_lex(std::size_t n);

/// The pairs containing `column`, in lexicographic order. `column` must be
/// an eligible label (2..n).
std::vector<PairIndex> pairs_containing(int column, std::size_t n);

/// The flattening of X along {d1,d2}: row k keeps coordinates 1, d1, d2
/// (values 0, x_d1(k), x_d2(k)) and every other coordinate becomes t, the
/// global minimum entry of X. Same shape as X. Requires n >= 3.
DataMatrix projection_matrix(const DataMatrix& X, PairIndex pair);

/// The canonical triangle attached to X and {d1,d2}. With t = min entry of
/// X and column extremes taken over canonical representatives:
///   u1: coordinate d1 -> colmin(d1) - 1, d2 -> colmin(d2) - 1
///   u2: coordinate d1 -> colmin(d1) + 1, d2 -> colmax(d2) + 1
///   u3: coordinate d1 -> colmax(d1) + 1, d2 -> colmin(d2) + 1
/// all remaining coordinates t, first coordinate 0. Coincident generators
/// (possible when a column is constant) are accepted. Requires n >= 3.
TropicalTriangle compute_triangle(const DataMatrix& X, PairIndex pair);

/// Same construction with an explicit floor value t. The vertical-projection
/// property holds for any t <= min entry of X; values above the minimum are
/// rejected with DimensionError.
TropicalTriangle compute_triangle(const DataMatrix& X, PairIndex pair, const Rational& floor_value);

/// Exactness check used by tests: every row of X projects onto
/// compute_triangle(X, pair) exactly to the corresponding row of
/// projection_matrix(X, pair).
bool check_vertical_projection(const DataMatrix& X, PairIndex pair);

}
