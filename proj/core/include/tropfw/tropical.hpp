#pragma once

#include "tropfw/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace tropfw {

/// A point of the tropical projective torus, stored as the canonical
/// representative with first coordinate zero: (0, x2 - x1, ..., xn - x1).
/// Construction normalizes, so two points compare equal iff they are the
/// same torus element. Coordinates are 0-indexed in code; the d1/d2 column
/// labels used by projections are 1-indexed (see projection.hpp).
class TropicalPoint {
public:
    /// Normalizes `raw` (any representative, n >= 2) into canonical form.
    explicit TropicalPoint(std::vector<Rational> raw);

    std::size_t dim() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool operator==(const TropicalPoint&) const = default;

    /// "(0, 1/2, -3)" — fractions where needed.
    std::string to_string() const;

private:
    std::vector<Rational> coords_;
};

/// An ordered list of torus points sharing one dimension. Rows keep their
/// input order; duplicates are allowed (repeated sample points are meaningful
/// for Fermat-Weber data).
class DataMatrix {
public:
    DataMatrix() = default;
    explicit DataMatrix(std::vector<TropicalPoint> rows);
    static DataMatrix from_raw(std::vector<std::vector<Rational>> raw_rows);

    std::size_t row_count() const { return rows_.size(); }  // m
    std::size_t dim() const;                                // n
    const TropicalPoint& row(std::size_t i) const { return rows_.at(i); }
    const std::vector<TropicalPoint>& rows() const { return rows_; }

    DataMatrix with_row_appended(TropicalPoint p) const;

    /// Extremes over the canonical representatives. `col` is 0-indexed.
    Rational min_entry() const;
    Rational column_min(std::size_t col) const;
    Rational column_max(std::size_t col) const;

    bool operator==(const DataMatrix&) const = default;

private:
    std::vector<TropicalPoint> rows_;
};

/// Tropical convex hull of exactly three generators in a common dimension.
struct TropicalTriangle {
    TropicalPoint u1, u2, u3;

    TropicalTriangle(TropicalPoint a, TropicalPoint b, TropicalPoint c);

    std::size_t dim() const { return u1.dim(); }
    std::vector<TropicalPoint> generators() const { return {u1, u2, u3}; }

    bool operator==(const TropicalTriangle&) const = default;
};

/// Max-plus combination  max_i (coeffs[i] + points[i])  taken coordinatewise,
/// returned as a canonical torus point. Requires equal sizes >= 1 and a
/// common dimension.
TropicalPoint trop_combine(const std::vector<Rational>& coeffs,
                           const std::vector<TropicalPoint>& points);

/// Tropical distance  max_i(u_i - v_i) - min_i(u_i - v_i).  Symmetric,
/// representative-independent, zero iff u == v.
Rational trop_distance(const TropicalPoint& u, const TropicalPoint& v);

/// Sum of tropical distances from y to every row of X.
Rational distance_sum(const TropicalPoint& y, const DataMatrix& X);

/// Nearest-point map onto the tropical convex hull of `generators`:
/// the combination with coefficients lambda_i = min_k (x_k - u^(i)_k).
/// The result is the unique best approximation of x in the hull.
TropicalPoint project_onto_tconv(const TropicalPoint& x,
                                 const std::vector<TropicalPoint>& generators);

/// Membership test: x lies in the hull iff its projection is x itself.
bool tconv_contains(const TropicalPoint& x,
                    const std::vector<TropicalPoint>& generators);

}
