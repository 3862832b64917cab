#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "facto/fcount.hpp"
#include "facto/vector_partitions.hpp"

using facto::Alpha;
using facto::BigNat;

TEST_CASE("feasible set basics") {
    auto fs1 = facto::enumerate_feasible(1);
    REQUIRE(fs1.complete);
    REQUIRE(fs1.alphas.size() == 1);
    CHECK(fs1.alphas[0].comps == std::vector<unsigned>{1});

    auto fs4 = facto::enumerate_feasible(4);
    REQUIRE(fs4.complete);
    std::set<BigNat> vals;
    for (const auto& a : fs4.alphas) vals.insert(facto::count_vpartitions(a));
    CHECK(vals == std::set<BigNat>{1, 2, 3, 4});

    CHECK_THROWS_AS(facto::enumerate_feasible(0), facto::invalid_input);
}

TEST_CASE("distinct values at x = 10") {
    auto dv = facto::distinct_values(facto::enumerate_feasible(10));
    // realized counts up to 10: 1,2,3,4,5,7,9
    CHECK(dv.values == std::vector<BigNat>{1, 2, 3, 4, 5, 7, 9});
}

TEST_CASE("distinct count never exceeds tuple count and grows monotonically") {
    std::vector<BigNat> prev;
    for (long x : {1, 2, 5, 10, 50, 200, 1000}) {
        auto fs = facto::enumerate_feasible(x);
        REQUIRE(fs.complete);
        auto dv = facto::distinct_values(fs);
        CHECK(dv.values.size() <= fs.alphas.size());
        // previous value set is a subset of the current one
        CHECK(std::includes(dv.values.begin(), dv.values.end(), prev.begin(), prev.end()));
        prev = dv.values;
        // every reported value is realized by some feasible alpha and is <= x
        std::set<BigNat> realized;
        for (const auto& a : fs.alphas) realized.insert(facto::count_vpartitions(a));
        CHECK(std::set<BigNat>(dv.values.begin(), dv.values.end()) == realized);
        for (const auto& v : dv.values) CHECK(v <= x);
    }
}

TEST_CASE("growth-rate reference curves") {
    CHECK(facto::kGrowthConstant == Catch::Approx(2.0 * 3.14159265358979 * std::sqrt(2.0 / 3.0))
                                        .epsilon(1e-12));
    CHECK_THROWS_AS(facto::theorem_bound(2.0), facto::invalid_input);
    double t = facto::theorem_bound(1e6);
    double lx = std::log(1e6);
    CHECK(t == Catch::Approx(std::exp(facto::kGrowthConstant * std::sqrt(lx / std::log(lx)))));
    CHECK(facto::prior_bound(1.0) == Catch::Approx(1.0));
    CHECK(facto::prior_bound(std::exp(1.0)) == Catch::Approx(std::exp(9.0)));
    CHECK_THROWS_AS(facto::prior_bound(0.5), facto::invalid_input);
}

TEST_CASE("spectrum report") {
    auto rep = facto::spectrum(BigNat(1000));
    CHECK(rep.complete);
    CHECK(rep.distinct_count <= rep.tuple_count);
    CHECK(rep.asymptotics_defined);
    CHECK(rep.theorem_bound_value > (double)rep.distinct_count);
    CHECK(rep.ratio_log > 0);
    CHECK(rep.ratio_log < 1);

    auto small = facto::spectrum(BigNat(5));
    CHECK_FALSE(small.asymptotics_defined);
}

TEST_CASE("node budget exhaustion is reported, not silently truncated") {
    auto fs = facto::enumerate_feasible(BigNat(100000), 3);
    CHECK_FALSE(fs.complete);
    CHECK_THROWS_AS(facto::distinct_values(fs), facto::invalid_input);
}

TEST_CASE("independent scan agrees with the enumeration route") {
    auto dv = facto::distinct_values(facto::enumerate_feasible(30));
    auto scanned = facto::scan_f_values(1 << 16, BigNat(30));
    CHECK(std::set<BigNat>(dv.values.begin(), dv.values.end()) == scanned);
}

TEST_CASE("constrained-set experiment") {
    auto rep = facto::conjecture_S(1e4, 1.0);
    CHECK(rep.s_size >= rep.distinct_p_on_s);
    CHECK(rep.distinct_p_on_s >= 1);
    auto rep6 = facto::conjecture_S(1e6, 1.0);
    CHECK(rep6.s_size > rep.s_size);
    CHECK(rep6.distinct_p_on_s <= rep6.s_size);
    CHECK_THROWS_AS(facto::conjecture_S(2.0, 1.0), facto::invalid_input);
    CHECK_THROWS_AS(facto::conjecture_S(1e4, 0.0), facto::invalid_input);
    CHECK_THROWS_AS(facto::conjecture_S(1e6, 1.0, 10), facto::budget_exceeded);
}
