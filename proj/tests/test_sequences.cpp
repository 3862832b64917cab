#include <catch2/catch_amalgamated.hpp>

#include "facto/sequences.hpp"
#include "oracles.hpp"

using facto::BigNat;

TEST_CASE("partition numbers") {
    CHECK(facto::partition_number(0) == 1);
    CHECK(facto::partition_number(5) == 7);
    CHECK(facto::partition_number(10) == 42);

    for (unsigned n = 0; n <= 40; ++n)
        CHECK(facto::partition_number(n) == oracles::brute_partition_count(n));
}

TEST_CASE("partition partial sums") {
    CHECK(facto::partition_partial_sum(10) == 138);
    BigNat s = 0;
    for (unsigned n = 1; n <= 25; ++n) s += facto::partition_number(n);
    CHECK(facto::partition_partial_sum(25) == s);
}

TEST_CASE("bell numbers") {
    CHECK(facto::bell_number(1) == 1);
    CHECK(facto::bell_number(3) == 5);
    CHECK(facto::bell_number(5) == 52);
    CHECK_THROWS_AS(facto::bell_number(0), facto::invalid_input);

    for (unsigned r = 1; r <= 10; ++r)
        CHECK(facto::bell_number(r) == oracles::brute_set_partition_count(r));
}

TEST_CASE("binomial") {
    CHECK(facto::binomial(4, 2) == 6);
    CHECK(facto::binomial(7, 0) == 1);
    CHECK(facto::binomial(0, 0) == 1);
    CHECK(facto::binomial(3, 5) == 0);
}

TEST_CASE("sum of divisors") {
    CHECK(facto::sigma(1) == 1);
    CHECK(facto::sigma(2) == 3);
    CHECK(facto::sigma(6) == 12);
    CHECK(facto::sigma(12) == 28);
    CHECK(facto::sigma(97) == 98); // prime
    CHECK_THROWS_AS(facto::sigma(0), facto::invalid_input);
}

TEST_CASE("dobinski series encloses the Bell numbers") {
    for (unsigned r : {1u, 3u, 5u}) {
        auto iv = facto::dobinski_partial(r, 1e-9);
        CHECK(iv.contains_nat(facto::bell_number(r)));
        CHECK(iv.width_d() < 1e-6);
    }
    for (unsigned r = 1; r <= 10; ++r)
        CHECK(facto::dobinski_partial(r, 1e-9).contains_nat(facto::bell_number(r)));
    CHECK_THROWS_AS(facto::dobinski_partial(3, 0.0), facto::invalid_input);
}
