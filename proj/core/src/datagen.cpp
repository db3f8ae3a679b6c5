#include "tropfw/datagen.hpp"

#include "tropfw/errors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tropfw {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

void validate(const GenConfig& cfg) {
    if (cfg.m < 1) throw std::invalid_argument("generation needs m >= 1 rows");
    if (cfg.n < 3) throw std::invalid_argument("generation needs dimension n >= 3");
    if (!(cfg.variance > 0)) throw std::invalid_argument("variance must be positive");
}

}  // namespace

std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed ^ ((index + 1) * 0x9E3779B97F4A7C15ull);
    (void)splitmix64(s);  // burn one round to decorrelate nearby indices
    return splitmix64(s);
}

double RandomSource::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomSource::uniform(double a, double b) { return a + (b - a) * uniform01(); }

double RandomSource::normal(double mean, double stddev) {
    const double u1 = 1.0 - uniform01();  // (0, 1]: keeps the log finite
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * radius * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<std::vector<Rational>> gen_rows_raw(const GenConfig& cfg) {
    validate(cfg);
    const double stddev = std::sqrt(cfg.variance);
    std::vector<std::vector<Rational>> rows;
    rows.reserve(cfg.m);
    for (std::size_t i = 0; i < cfg.m; ++i) {
        RandomSource rs(derive_stream(cfg.seed, i));
        std::vector<Rational> row;
        row.reserve(cfg.n);
        if (cfg.mode == GenMode::FixFirst) row.push_back(Rational(0));
        while (row.size() < cfg.n)
            row.push_back(round_to_decimal(rs.normal(0.0, stddev), kCoordinateDigits));
        rows.push_back(std::move(row));
    }
    return rows;
}

DataMatrix gen_matrix(const GenConfig& cfg) {
    return DataMatrix::from_raw(gen_rows_raw(cfg));
}

TropicalTriangle gen_triangle(std::size_t n, double bound, std::uint64_t seed) {
    if (n < 2) throw DimensionError("triangles need dimension >= 2");
    if (!(bound > 0)) throw std::invalid_argument("triangle bound must be positive");
    auto make_vertex = [&](std::uint64_t index) {
        RandomSource rs(derive_stream(seed, index));
        std::vector<Rational> raw{Rational(0)};
        for (std::size_t k = 1; k < n; ++k)
            raw.push_back(round_to_decimal(rs.uniform(-bound, bound), kCoordinateDigits));
        return TropicalPoint(std::move(raw));
    };
    return TropicalTriangle(make_vertex(0), make_vertex(1), make_vertex(2));
}

}  // namespace tropfw
