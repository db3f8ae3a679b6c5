#pragma once

// Shared fixtures for the unit suites: small hand-checkable instances plus
// one 8x5 worked example with every intermediate value written down, so
// failures point at the exact stage that drifted.

#include "tropfw/projection.hpp"
#include "tropfw/tropical.hpp"

#include <initializer_list>
#include <ostream>
#include <vector>

namespace tropfw {

// doctest stringifies through ADL operator<<.
inline std::ostream& operator<<(std::ostream& os, const TropicalPoint& p) {
    return os << p.to_string();
}

inline std::ostream& operator<<(std::ostream& os, const PairIndex& p) {
    return os << '(' << p.d1 << ',' << p.d2 << ')';
}

inline std::ostream& operator<<(std::ostream& os, const DataMatrix& X) {
    os << '[';
    for (std::size_t i = 0; i < X.row_count(); ++i) {
        if (i) os << ' ';
        os << X.row(i).to_string();
    }
    return os << ']';
}

}  // namespace tropfw

namespace fixtures {

using tropfw::DataMatrix;
using tropfw::PairIndex;
using tropfw::Rational;
using tropfw::TropicalPoint;
using tropfw::TropicalTriangle;

inline TropicalPoint pt(std::initializer_list<long long> xs) {
    std::vector<Rational> raw;
    raw.reserve(xs.size());
    for (long long x : xs) raw.emplace_back(x);
    return TropicalPoint(std::move(raw));
}

inline DataMatrix mat(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<TropicalPoint> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(pt(r));
    return DataMatrix(std::move(out));
}

// Four points in R^3/R1 whose Fermat-Weber value is 9, attained at (0,3,3)
// (among other minimizers).
inline DataMatrix square4() {
    return mat({{0, 1, 5}, {0, 2, 4}, {0, 3, 1}, {0, 4, 3}});
}

inline TropicalPoint square4_fw() { return pt({0, 3, 3}); }

// Five points in R^4/R1 that project vertically onto the "green" triangle
// below (floor value -1, pair (2,3)).
inline DataMatrix cloud5x4() {
    return mat({{0, 2, 1, 3}, {0, 1, 1, 4}, {0, 3, 2, 3}, {0, 3, 3, 5}, {0, 2, 3, 2}});
}

inline TropicalTriangle green_triangle() {
    return TropicalTriangle(pt({0, 0, 0, -1}), pt({0, 2, 4, -1}), pt({0, 4, 2, -1}));
}

// The 8x5 worked example. Every derived matrix below was computed by hand
// from the definitions and double-checked; tests treat them as ground truth.
inline DataMatrix sample8x5() {
    return mat({{0, 211, 45, -33, 10},
                {0, -365, 23, 35, 64},
                {0, -40, -59, 63, 14},
                {0, 65, 257, 39, -35},
                {0, 13, 5, -261, 21},
                {0, -1, 91, 355, 7},
                {0, -644, 21, 58, 36},
                {0, 59, 4, 362, 15}});
}

// One Fermat-Weber point of sample8x5 (the minimizer set may be larger;
// the objective value is what is unique).
inline TropicalPoint sample8x5_fw() { return pt({0, -40, 4, 89, 15}); }

// sample8x5 with sample8x5_fw appended as the last row.
inline DataMatrix sample8x5_augmented() {
    return sample8x5().with_row_appended(sample8x5_fw());
}

// Flattenings of sample8x5_augmented along selected pairs (floor t = -644).
inline DataMatrix flat23() {
    return mat({{0, 211, 45, -644, -644},
                {0, -365, 23, -644, -644},
                {0, -40, -59, -644, -644},
                {0, 65, 257, -644, -644},
                {0, 13, 5, -644, -644},
                {0, -1, 91, -644, -644},
                {0, -644, 21, -644, -644},
                {0, 59, 4, -644, -644},
                {0, -40, 4, -644, -644}});
}

inline DataMatrix flat24() {
    return mat({{0, 211, -644, -33, -644},
                {0, -365, -644, 35, -644},
                {0, -40, -644, 63, -644},
                {0, 65, -644, 39, -644},
                {0, 13, -644, -261, -644},
                {0, -1, -644, 355, -644},
                {0, -644, -644, 58, -644},
                {0, 59, -644, 362, -644},
                {0, -40, -644, 89, -644}});
}

inline DataMatrix flat25() {
    return mat({{0, 211, -644, -644, 10},
                {0, -365, -644, -644, 64},
                {0, -40, -644, -644, 14},
                {0, 65, -644, -644, -35},
                {0, 13, -644, -644, 21},
                {0, -1, -644, -644, 7},
                {0, -644, -644, -644, 36},
                {0, 59, -644, -644, 15},
                {0, -40, -644, -644, 15}});
}

inline DataMatrix flat35() {
    return mat({{0, -644, 45, -644, 10},
                {0, -644, 23, -644, 64},
                {0, -644, -59, -644, 14},
                {0, -644, 257, -644, -35},
                {0, -644, 5, -644, 21},
                {0, -644, 91, -644, 7},
                {0, -644, 21, -644, 36},
                {0, -644, 4, -644, 15},
                {0, -644, 4, -644, 15}});
}

// Known Fermat-Weber points of the flattenings above (again: one minimizer
// each; only flat35's doubles as its own last row).
inline TropicalPoint flat23_fw() { return pt({0, -23, 21, -644, -644}); }
inline TropicalPoint flat24_fw() { return pt({0, -40, -644, 63, -644}); }
inline TropicalPoint flat25_fw() { return pt({0, -1, -644, -644, 15}); }
inline TropicalPoint flat35_fw() { return pt({0, -644, 4, -644, 15}); }

// The triangle attached to sample8x5_augmented at pair (3,5):
// column 3 ranges over [-59, 257], column 5 over [-35, 64], floor -644.
inline TropicalTriangle sample8x5_triangle() {
    return TropicalTriangle(pt({0, -644, -60, -644, -36}),
                            pt({0, -644, -58, -644, 65}),
                            pt({0, -644, 258, -644, -34}));
}

inline PairIndex sample8x5_winner() { return PairIndex{3, 5}; }

// A 6x4 instance on which no pair verifies: both search strategies exhaust
// all three pairs and report Fail. Frozen from a randomized hunt.
inline DataMatrix fail6x4() {
    return mat({{0, 16, -4, 7},
                {0, 14, -10, 16},
                {0, 12, 7, -18},
                {0, 7, -1, -10},
                {0, -4, -1, 4},
                {0, -13, 12, 10}});
}

}  // namespace fixtures
