#include "tropfw/errors.hpp"
#include "tropfw/fermat_weber.hpp"

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include "doctest.h"

#include <random>
#include <vector>

using namespace tropfw;
using fixtures::mat;
using fixtures::pt;

TEST_SUITE_BEGIN("fermat_weber");

TEST_CASE("program dimensions follow the data shape") {
    const auto small = fw_lp_build(fixtures::square4());  // m=4, n=3
    CHECK(small.var_count() == 6);
    CHECK(small.constraint_count() == 24);

    const auto large = fw_lp_build(fixtures::sample8x5());  // m=8, n=5
    CHECK(large.var_count() == 12);
    CHECK(large.constraint_count() == 160);

    const auto tiny = fw_lp_build(mat({{0, 7}}));  // m=1, n=2
    CHECK(tiny.var_count() == 2);
    CHECK(tiny.constraint_count() == 2);

    CHECK_THROWS_AS(fw_lp_build(DataMatrix()), DimensionError);
}

TEST_CASE("a single point is its own Fermat-Weber point") {
    const auto res = fermat_weber_point(mat({{0, 4, -2, 9}}));
    CHECK(res.objective == 0);
    CHECK(res.point == pt({0, 4, -2, 9}));
}

TEST_CASE("duplicated points pin the optimum at zero") {
    const auto res = fermat_weber_point(mat({{0, 5, 1}, {0, 5, 1}}));
    CHECK(res.objective == 0);
    CHECK(res.point == pt({0, 5, 1}));
}

TEST_CASE("known minimizers attain the optimal value") {
    const auto small = fermat_weber_point(fixtures::square4());
    CHECK(small.objective == distance_sum(fixtures::square4_fw(), fixtures::square4()));
    CHECK(distance_sum(small.point, fixtures::square4()) == small.objective);

    const auto big = fermat_weber_point(fixtures::sample8x5());
    CHECK(big.objective == distance_sum(fixtures::sample8x5_fw(), fixtures::sample8x5()));
    CHECK(distance_sum(big.point, fixtures::sample8x5()) == big.objective);
}

TEST_CASE("verify_fw_point accepts exactly the optimal last rows") {
    CHECK(verify_fw_point(fixtures::flat35()));
    CHECK_FALSE(verify_fw_point(fixtures::flat23()));
    CHECK_FALSE(verify_fw_point(fixtures::flat24()));
    CHECK_FALSE(verify_fw_point(fixtures::flat25()));

    const auto augmented = augment_with_fw(fixtures::square4());
    CHECK(verify_fw_point(augmented));

    CHECK_THROWS_AS(verify_fw_point(mat({{0, 1, 2}})), DimensionError);
}

TEST_CASE("the known flattening minimizers match our objectives") {
    CHECK(fermat_weber_point(fixtures::flat23()).objective ==
          distance_sum(fixtures::flat23_fw(), fixtures::flat23()));
    CHECK(fermat_weber_point(fixtures::flat24()).objective ==
          distance_sum(fixtures::flat24_fw(), fixtures::flat24()));
    CHECK(fermat_weber_point(fixtures::flat25()).objective ==
          distance_sum(fixtures::flat25_fw(), fixtures::flat25()));
    CHECK(fermat_weber_point(fixtures::flat35()).objective ==
          distance_sum(fixtures::flat35_fw(), fixtures::flat35()));
}

TEST_CASE("augmentation appends an attaining row") {
    const auto X = fixtures::square4();
    const auto aug = augment_with_fw(X);
    REQUIRE(aug.row_count() == 5);
    CHECK(distance_sum(aug.row(4), X) == fermat_weber_point(X).objective);

    const auto one = augment_with_fw(mat({{0, 2, 3}}));
    REQUIRE(one.row_count() == 2);
    CHECK(one.row(0) == one.row(1));

    const auto big = augment_with_fw(fixtures::sample8x5());
    REQUIRE(big.row_count() == 9);
    CHECK(distance_sum(big.row(8), fixtures::sample8x5()) ==
          distance_sum(fixtures::sample8x5_fw(), fixtures::sample8x5()));
}

TEST_CASE("no random perturbation beats the optimum") {
    std::mt19937_64 eng(31);
    const auto X = fixtures::square4();
    const auto res = fermat_weber_point(X);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<Rational> raw{Rational(0)};
        for (std::size_t k = 1; k < X.dim(); ++k) {
            // numerator in [-12, 12] halves: dense rational jitter around 0
            raw.push_back(res.point[k] + Rational(oracles::rand_int(eng, -24, 24), 2));
        }
        CHECK(distance_sum(TropicalPoint(raw), X) >= res.objective);
    }
}

TEST_CASE("grid search confirms small integer instances") {
    std::mt19937_64 eng(59);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t m = 1 + eng() % 6;
        const auto X = oracles::rand_matrix(eng, m, 3, 0, 5);
        CHECK(fermat_weber_point(X).objective == oracles::fw_grid_minimum(X, -1, 7));
    }
    CHECK(fermat_weber_point(fixtures::square4()).objective ==
          oracles::fw_grid_minimum(fixtures::square4(), -1, 7));
}

TEST_CASE("an augmented matrix has exactly one Fermat-Weber point") {
    auto unique_and_fixed = [](const DataMatrix& X) {
        const auto aug = augment_with_fw(X);
        REQUIRE(verify_fw_point(aug));
        const auto [lows, highs] = oracles::fw_coordinate_box(aug);
        const auto& last = aug.row(aug.row_count() - 1);
        for (std::size_t k = 1; k < aug.dim(); ++k) {
            CHECK(lows[k] == highs[k]);
            CHECK(lows[k] == last[k]);
        }
    };
    unique_and_fixed(fixtures::square4());
    unique_and_fixed(fixtures::sample8x5());

    std::mt19937_64 eng(101);
    for (int trial = 0; trial < 6; ++trial)
        unique_and_fixed(oracles::rand_matrix(eng, 2 + eng() % 5, 3 + eng() % 3, -20, 20));
}

TEST_SUITE_END();
