#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "facto/factorizations.hpp"
#include "facto/sequences.hpp"

using facto::BigNat;
using facto::Factorization;

TEST_CASE("f(18) and its factorizations") {
    CHECK(facto::count_factorizations(18) == 4);
    auto all = facto::enumerate_factorizations(18);
    std::set<Factorization> got(all.begin(), all.end());
    std::set<Factorization> expect{{18}, {2, 9}, {3, 6}, {2, 3, 3}};
    CHECK(got == expect);
}

TEST_CASE("small values and conventions") {
    CHECK(facto::count_factorizations(1) == 1); // empty factorization
    CHECK(facto::count_factorizations(7) == 1);
    CHECK(facto::count_factorizations(32) == 7); // p(5)
    CHECK(facto::count_factorizations(36) == 9);
    auto one = facto::enumerate_factorizations(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].empty());
    CHECK(facto::enumerate_factorizations(7) == std::vector<Factorization>{{7}});
    std::set<Factorization> got12;
    for (auto& f : facto::enumerate_factorizations(12)) got12.insert(f);
    CHECK(got12 == std::set<Factorization>{{12}, {2, 6}, {3, 4}, {2, 2, 3}});
}

TEST_CASE("exponent signatures") {
    CHECK(facto::exponent_signature(18) == std::vector<unsigned>{1, 2});
    CHECK(facto::exponent_signature(30) == std::vector<unsigned>{1, 1, 1});
    CHECK(facto::exponent_signature(54) == std::vector<unsigned>{1, 3});
    CHECK_THROWS_AS(facto::exponent_signature(1), facto::invalid_input);
}

TEST_CASE("count agrees with enumeration") {
    for (std::uint64_t n = 2; n <= 2000; ++n) {
        auto all = facto::enumerate_factorizations(n);
        CHECK(facto::count_factorizations(n) == (long)all.size());
        CHECK(std::is_sorted(all.begin(), all.end()));
        for (const auto& f : all) {
            CHECK(std::is_sorted(f.begin(), f.end()));
            std::uint64_t prod = 1;
            for (auto d : f) prod *= d;
            CHECK(prod == n);
        }
    }
}

TEST_CASE("prime powers reduce to partition numbers") {
    for (unsigned k = 1; k <= 50; ++k) {
        BigNat q2 = facto::pow_nat(2ul, k), q3 = facto::pow_nat(3ul, k);
        CHECK(facto::count_factorizations_big(q2) == facto::partition_number(k));
        CHECK(facto::count_factorizations_big(q3) == facto::partition_number(k));
    }
}

TEST_CASE("squarefree numbers reduce to Bell numbers") {
    const unsigned primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
    std::uint64_t n = 1;
    for (unsigned r = 1; r <= 10; ++r) {
        n *= primes[r - 1];
        CHECK(facto::count_factorizations(n) == facto::bell_number(r));
    }
}

TEST_CASE("divisor monotonicity") {
    // n | m with 1 < n < m implies f(n) < f(m); underwrites search pruning
    for (std::uint64_t m = 4; m <= 10000; ++m) {
        BigNat fm = facto::count_factorizations(m);
        for (std::uint64_t n : facto::divisors_of(m)) {
            if (n <= 1 || n >= m) continue;
            CHECK(facto::count_factorizations(n) < fm);
        }
    }
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(facto::count_factorizations(2'000'000'000'000ULL), facto::input_too_large);
    CHECK_THROWS_AS(facto::enumerate_factorizations(2'000'000), facto::input_too_large);
    CHECK_THROWS_AS(facto::count_factorizations(0), facto::invalid_input);
}
