#include "tropfw/projection.hpp"

#include "tropfw/errors.hpp"

#include <string>
#include <utility>
#include <vector>

namespace tropfw {

PairIndex make_pair_index(int d1, int d2, std::size_t n) {
    if (n < 3) throw DimensionError("coordinate pairs need dimension >= 3");
    if (!(2 <= d1 && d1 < d2 && d2 <= static_cast<int>(n)))
        throw DimensionError("invalid coordinate pair (" + std::to_string(d1) + "," +
                             std::to_string(d2) + ") for dimension " + std::to_string(n));
    return {d1, d2};
}

std::vector<PairIndex> pair_order_lex(std::size_t n) {
    if (n < 3) throw DimensionError("coordinate pairs need dimension >= 3");
    std::vector<PairIndex> out;
    out.reserve((n - 1) * (n - 2) / 2);
    for (int a = 2; a <= static_cast<int>(n) - 1; ++a)
        for (int b = a + 1; b <= static_cast<int>(n); ++b) out.push_back({a, b});
    return out;
}

std::vector<PairIndex> pairs_containing(int column, std::size_t n) {
    if (column < 2 || column > static_cast<int>(n))
        throw DimensionError("column " + std::to_string(column) +
                             " is not an eligible pair coordinate for dimension " +
                             std::to_string(n));
    std::vector<PairIndex> out;
    out.reserve(n - 2);
    for (int a = 2; a < column; ++a) out.push_back({a, column});
    for (int b = column + 1; b <= static_cast<int>(n); ++b) out.push_back({column, b});
    return out;
}

DataMatrix projection_matrix(const DataMatrix& X, PairIndex pair) {
    const std::size_t n = X.dim();
    if (n < 3) throw DimensionError("flattening needs dimension >= 3");
    (void)make_pair_index(pair.d1, pair.d2, n);
    const Rational t = X.min_entry();

    std::vector<std::vector<Rational>> raw;
    raw.reserve(X.row_count());
    for (const auto& row : X.rows()) {
        std::vector<Rational> r(n, t);
        r[0] = 0;
        r[pair.d1 - 1] = row[pair.d1 - 1];
        r[pair.d2 - 1] = row[pair.d2 - 1];
        raw.push_back(std::move(r));
    }
    return DataMatrix::from_raw(std::move(raw));
}

TropicalTriangle compute_triangle(const DataMatrix& X, PairIndex pair) {
    return compute_triangle(X, pair, X.min_entry());
}

TropicalTriangle compute_triangle(const DataMatrix& X, PairIndex pair, const Rational& floor_value) {
    const std::size_t n = X.dim();
    if (n < 3) throw DimensionError("triangles need dimension >= 3");
    (void)make_pair_index(pair.d1, pair.d2, n);
    if (floor_value > X.min_entry())
        throw DimensionError("triangle floor must not exceed the smallest matrix entry");

    const Rational& t = floor_value;
    const std::size_t c1 = pair.d1 - 1, c2 = pair.d2 - 1;
    const Rational lo1 = X.column_min(c1), hi1 = X.column_max(c1);
    const Rational lo2 = X.column_min(c2), hi2 = X.column_max(c2);

    std::vector<Rational> base(n, t);
    base[0] = 0;

    auto vertex = [&](const Rational& a, const Rational& b) {
        std::vector<Rational> r = base;
        r[c1] = a;
        r[c2] = b;
        return TropicalPoint(std::move(r));
    };
    return TropicalTriangle(vertex(lo1 - 1, lo2 - 1),   // below both ranges
                            vertex(lo1 + 1, hi2 + 1),   // left-high
                            vertex(hi1 + 1, lo2 + 1));  // right-low
}

bool check_vertical_projection(const DataMatrix& X, PairIndex pair) {
    const TropicalTriangle tri = compute_triangle(X, pair);
    const DataMatrix flat = projection_matrix(X, pair);
    const auto gens = tri.generators();
    for (std::size_t i = 0; i < X.row_count(); ++i)
        if (project_onto_tconv(X.row(i), gens) != flat.row(i)) return false;
    return true;
}

}  // namespace tropfw
