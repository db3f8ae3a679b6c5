#include "tropfw/tropical.hpp"

#include "tropfw/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace tropfw {

TropicalPoint::TropicalPoint(std::vector<Rational> raw) : coords_(std::move(raw)) {
    if (coords_.size() < 2)
        throw DimensionError("torus points need dimension >= 2, got " +
                             std::to_string(coords_.size()));
    const Rational shift = coords_[0];  // copy before mutating
    if (shift != 0)
        for (auto& c : coords_) c -= shift;
    else
        coords_[0] = 0;  // normalize -0 style artifacts (no-op for rationals)
}

std::string TropicalPoint::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out << ", ";
        out << to_fraction_string(coords_[i]);
    }
    out << ')';
    return out.str();
}

DataMatrix::DataMatrix(std::vector<TropicalPoint> rows) : rows_(std::move(rows)) {
    for (const auto& r : rows_)
        if (r.dim() != rows_.front().dim())
            throw DimensionError("matrix rows must share one dimension");
}

DataMatrix DataMatrix::from_raw(std::vector<std::vector<Rational>> raw_rows) {
    std::vector<TropicalPoint> rows;
    rows.reserve(raw_rows.size());
    for (auto& r : raw_rows) rows.emplace_back(std::move(r));
    return DataMatrix(std::move(rows));
}

std::size_t DataMatrix::dim() const { return rows_.empty() ? 0 : rows_.front().dim(); }

DataMatrix DataMatrix::with_row_appended(TropicalPoint p) const {
    if (!rows_.empty() && p.dim() != dim())
        throw DimensionError("appended row has dimension " + std::to_string(p.dim()) +
                             ", matrix has " + std::to_string(dim()));
    std::vector<TropicalPoint> rows = rows_;
    rows.push_back(std::move(p));
    return DataMatrix(std::move(rows));
}

Rational DataMatrix::min_entry() const {
    if (rows_.empty()) throw DimensionError("min_entry of an empty matrix");
    Rational best = rows_[0][0];
    for (const auto& r : rows_)
        for (const auto& c : r.coords()) best = std::min(best, c);
    return best;
}

Rational DataMatrix::column_min(std::size_t col) const {
    if (rows_.empty()) throw DimensionError("column_min of an empty matrix");
    Rational best = rows_[0][col];
    for (const auto& r : rows_) best = std::min(best, r[col]);
    return best;
}

Rational DataMatrix::column_max(std::size_t col) const {
    if (rows_.empty()) throw DimensionError("column_max of an empty matrix");
    Rational best = rows_[0][col];
    for (const auto& r : rows_) best = std::max(best, r[col]);
    return best;
}

TropicalTriangle::TropicalTriangle(TropicalPoint a, TropicalPoint b, TropicalPoint c)
    : u1(std::move(a)), u2(std::move(b)), u3(std::move(c)) {
    if (u1.dim() != u2.dim() || u1.dim() != u3.dim())
        throw DimensionError("triangle generators must share one dimension");
}

TropicalPoint trop_combine(const std::vector<Rational>& coeffs,
                           const std::vector<TropicalPoint>& points) {
    if (coeffs.empty() || coeffs.size() != points.size())
        throw DimensionError("trop_combine needs matching, nonempty coefficient/point lists");
    const std::size_t n = points.front().dim();
    std::vector<Rational> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        Rational best = coeffs[0] + points[0][j];
        for (std::size_t i = 1; i < points.size(); ++i) {
            if (points[i].dim() != n)
                throw DimensionError("trop_combine points must share one dimension");
            best = std::max(best, Rational(coeffs[i] + points[i][j]));
        }
        out[j] = best;
    }
    return TropicalPoint(std::move(out));
}

Rational trop_distance(const TropicalPoint& u, const TropicalPoint& v) {
    if (u.dim() != v.dim())
        throw DimensionError("trop_distance operands must share one dimension");
    Rational hi = u[0] - v[0], lo = hi;
    for (std::size_t i = 1; i < u.dim(); ++i) {
        Rational d = u[i] - v[i];
        hi = std::max(hi, d);
        lo = std::min(lo, d);
    }
    return hi - lo;
}

Rational distance_sum(const TropicalPoint& y, const DataMatrix& X) {
    Rational total = 0;
    for (const auto& row : X.rows()) total += trop_distance(y, row);
    return total;
}

TropicalPoint project_onto_tconv(const TropicalPoint& x,
                                 const std::vector<TropicalPoint>& generators) {
    if (generators.empty())
        throw DimensionError("projection needs at least one generator");
    std::vector<Rational> lambdas;
    lambdas.reserve(generators.size());
    for (const auto& u : generators) {
        if (u.dim() != x.dim())
            throw DimensionError("projection generators must match the point dimension");
        Rational lo = x[0] - u[0];
        for (std::size_t k = 1; k < x.dim(); ++k) lo = std::min(lo, Rational(x[k] - u[k]));
        lambdas.push_back(std::move(lo));
    }
    return trop_combine(lambdas, generators);
}

bool tconv_contains(const TropicalPoint& x,
                    const std::vector<TropicalPoint>& generators) {
    return project_onto_tconv(x, generators) == x;
}

}  // namespace tropfw
