#pragma once

#include "tropfw/projection.hpp"
#include "tropfw/tropical.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace tropfw {

/// How random sample rows are produced before normalization:
///   Normalize - draw all n coordinates, then shift so coordinate 1 is 0.
///   FixFirst  - pin coordinate 1 to 0 and draw the remaining n - 1.
/// Both land in the same torus; the induced distributions differ, which is
/// why the choice is recorded in every report.
enum class GenMode { Normalize, FixFirst };

struct GenConfig {
    std::size_t m = 0;           // rows, >= 1
    std::size_t n = 0;           // dimension, >= 3
    double variance = 10.0;      // > 0; coordinates ~ Normal(0, variance)
    std::uint64_t seed = 0;
    GenMode mode = GenMode::Normalize;
};

/// Decimal digits kept when a sampled double becomes an exact rational.
inline constexpr int kCoordinateDigits = 12;

/// Pinned identity of the full randomness pipeline, echoed into reports.
inline constexpr const char* kPrngId =
    "splitmix64-stream/mt19937_64/u53/box-muller/dec12";

/// Splits one master seed into independent substream seeds. Pure function:
/// results do not depend on evaluation order, so generation is reproducible
/// under any scheduling (thread counts, trial order, partial reruns).
std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index);

/// Deterministic double-precision source: mt19937_64 with 53-bit uniforms
/// ((x >> 11) * 2^-53) and Box-Muller normals (two uniforms per call, no
/// cached spare).
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    double uniform01();                       // [0, 1)
    double uniform(double a, double b);       // [a, b)
    double normal(double mean, double stddev);

private:
    std::mt19937_64 engine_;
};

/// Raw rows (before torus normalization) for the given config, coordinates
/// already rounded to kCoordinateDigits decimals. Row i consumes only the
/// substream derive_stream(seed, i), so rows are independent of m.
std::vector<std::vector<Rational>> gen_rows_raw(const GenConfig& cfg);

/// The normalized sample matrix for the config.
DataMatrix gen_matrix(const GenConfig& cfg);

/// A random triangle: each generator has first coordinate 0 and the others
/// uniform in [-bound, bound] (rounded to kCoordinateDigits). Generator j
/// consumes derive_stream(seed, j).
TropicalTriangle gen_triangle(std::size_t n, double bound, std::uint64_t seed);

}
