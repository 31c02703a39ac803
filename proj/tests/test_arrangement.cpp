#include "arrpot/arrangement.hpp"
#include "arrpot/errors.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace arrpot;
using namespace arrpot::testing;

TEST_CASE("FIG1 matroid data") {
    const auto arr = fig1();
    CHECK(arr.k() == 2);
    CHECK(arr.n() == 4);
    CHECK(arr.labels().front() == "H1");
    CHECK(independent_subsets(arr, 2) ==
          std::vector<IndexTuple>{idx({1, 3}), idx({1, 4}), idx({2, 3}), idx({2, 4}), idx({3, 4})});
    CHECK(circuits(arr) == std::vector<IndexTuple>{idx({1, 2}), idx({1, 3, 4}), idx({2, 3, 4})});
    CHECK(minor(arr, idx({1, 3})) == -1);
    CHECK(minor(arr, idx({3, 1})) == 1);
    CHECK(minor(arr, idx({3, 4})) == 1);
    CHECK(minor(arr, idx({1, 2})) == 0);
    CHECK_FALSE(is_independent(arr, idx({1, 2})));
    CHECK(circuit_form(arr, idx({1, 3, 4})) == zform({{1, 1}, {3, 1}, {4, -1}}));
}

TEST_CASE("discriminant membership") {
    const auto arr = fig1();
    const BasePoint on{0, 0, 1, 1};
    CHECK(in_discriminant(arr, on));
    REQUIRE(discriminant_witness(arr, on));
    CHECK(*discriminant_witness(arr, on) == idx({1, 2}));
    CHECK_FALSE(in_discriminant(arr, BasePoint{0, 1, 0, 2}));
    // z1 + z3 - z4 = 0 makes H1, H3, H4 concurrent
    const BasePoint triple{1, 0, 1, 2};
    REQUIRE(discriminant_witness(arr, triple));
    CHECK(*discriminant_witness(arr, triple) == idx({1, 3, 4}));
    CHECK_THROWS_AS(in_discriminant(arr, BasePoint{0, 1}), InputError);
}

TEST_CASE("discriminant agrees with circuit forms on seeded points") {
    // Independent route: z is on the discriminant iff some circuit form vanishes.
    std::mt19937_64 rng(7);
    const auto arr = fig1();
    const std::vector<LinearForm> forms{zform({{1, 1}, {2, -1}}), zform({{1, 1}, {3, 1}, {4, -1}}),
                                        zform({{2, 1}, {3, 1}, {4, -1}})};
    for (int t = 0; t < 200; ++t) {
        BasePoint z;
        for (int j = 0; j < 4; ++j) z.emplace_back(static_cast<long>(rng() % 5) - 2);
        bool vanishes = false;
        for (const auto& f : forms) vanishes = vanishes || sgn(f.evaluate(z)) == 0;
        CHECK(in_discriminant(arr, z) == vanishes);
    }
}

TEST_CASE("construction rejects invalid families") {
    CHECK_THROWS_AS(ArrangementFamily(RatMatrix::from_columns(2, {{0, 1}, {0, 0}, {1, 0}}), {1, 1, 1}), InputError);
    CHECK_THROWS_AS(ArrangementFamily(RatMatrix::from_columns(2, {{0, 1}, {0, 2}, {0, 3}}), {1, 1, 1}), InputError);
    CHECK_THROWS_AS(ArrangementFamily(RatMatrix::from_columns(2, {{0, 1}, {1, 0}}), {1, 1}), InputError);
    CHECK_THROWS_AS(fig1({1, 0, 1, 1}), InputError);
    CHECK_THROWS_AS(fig1({1, 1, 1}), InputError);
}

TEST_CASE("unbalanced weights") {
    const auto arr = fig1();
    CHECK(is_unbalanced(arr));
    CHECK(all_weights_positive(arr));
    // a_J = 0: the flat at infinity has zero weight
    const RatVector total_zero{1, 1, 1, -3};
    CHECK_FALSE(is_unbalanced(arr, total_zero));
    REQUIRE(zero_weight_dense_flat(arr, total_zero));
    CHECK(zero_weight_dense_flat(arr, total_zero)->empty());
    // the parallel pair {1,2} is a dense flat; its complement weight a_3 + a_4 vanishes
    const RatVector pair_zero{1, 2, 1, -1};
    CHECK_FALSE(is_unbalanced(arr, pair_zero));
    CHECK(*zero_weight_dense_flat(arr, pair_zero) == idx({1, 2}));
    // zero weights are never unbalanced
    CHECK_FALSE(is_unbalanced(arr, RatVector{1, 0, 1, 1}));
    CHECK(is_unbalanced(arr, RatVector{1, 1, -1, 3}));
}
