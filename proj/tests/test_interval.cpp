#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "facto/interval.hpp"

using facto::BigRat;
using facto::RealInterval;

TEST_CASE("constants") {
    RealInterval e = RealInterval::e();
    CHECK(e.lo_d() > 2.718281828);
    CHECK(e.hi_d() < 2.718281829);
    RealInterval pi = RealInterval::pi();
    CHECK(pi.lo_d() > 3.14159265);
    CHECK(pi.hi_d() < 3.14159266);
}

TEST_CASE("enclosure property on random rational expressions") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
    for (int trial = 0; trial < 300; ++trial) {
        BigRat a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        BigRat d(num(rng) + 200, den(rng)); // positive divisor
        BigRat exact = ((a + b) * c - a * b) / d + b * b;
        RealInterval ia = RealInterval::from_rat(a), ib = RealInterval::from_rat(b),
                     ic = RealInterval::from_rat(c), id = RealInterval::from_rat(d);
        RealInterval got = ((ia + ib) * ic - ia * ib) / id + ib * ib;
        CHECK(got.contains_rat(exact));
    }
}

TEST_CASE("division by interval containing zero throws") {
    RealInterval z = RealInterval::hull(RealInterval::exact(-1), RealInterval::exact(1));
    CHECK_THROWS_AS(RealInterval::exact(1) / z, facto::invalid_input);
}

TEST_CASE("exp log sqrt round trips enclose") {
    for (long v : {2L, 3L, 7L, 100L}) {
        RealInterval x = RealInterval::exact(v);
        CHECK(x.log().exp().contains_rat(BigRat(v)));
        CHECK((x.sqrt() * x.sqrt()).contains_rat(BigRat(v)));
    }
}

TEST_CASE("pow at exact boundaries stays exact") {
    // 1^y = 1 and x^0 computed via exp(0) = 1: both must be point intervals
    RealInterval one = RealInterval::exact(1);
    RealInterval p = one.pow(RealInterval::exact(5) / RealInterval::exact(2));
    CHECK(p.lo_d() == 1.0);
    CHECK(p.hi_d() == 1.0);
}

TEST_CASE("certified comparisons are one sided") {
    RealInterval a = RealInterval::exact(1), b = RealInterval::exact(2);
    CHECK(a.certainly_lt(b));
    CHECK(a.certainly_le(a));
    CHECK_FALSE(b.certainly_le(a));
    RealInterval wide = RealInterval::hull(a, b);
    CHECK_FALSE(wide.certainly_lt(b));
    CHECK_FALSE(wide.certainly_gt(a));
}
