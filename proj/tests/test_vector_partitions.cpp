#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "facto/factorizations.hpp"
#include "facto/sequences.hpp"
#include "facto/vector_partitions.hpp"

using facto::Alpha;
using facto::BigNat;
using facto::BigRat;
using facto::VPartition;

namespace {

std::set<std::multiset<std::vector<unsigned>>> as_multisets(const std::vector<VPartition>& ps) {
    std::set<std::multiset<std::vector<unsigned>>> out;
    for (const auto& p : ps) out.insert(std::multiset<std::vector<unsigned>>(p.begin(), p.end()));
    return out;
}

} // namespace

TEST_CASE("partitions of (1,2) match the worked example") {
    auto ps = facto::enumerate_vpartitions(Alpha::of({1, 2}));
    REQUIRE(ps.size() == 4);
    auto got = as_multisets(ps);
    std::set<std::multiset<std::vector<unsigned>>> expect{
        {{1, 2}},
        {{1, 0}, {0, 2}},
        {{0, 1}, {1, 1}},
        {{0, 1}, {0, 1}, {1, 0}},
    };
    CHECK(got == expect);
    // canonical part order inside each partition: non-increasing lex
    for (const auto& p : ps)
        CHECK(std::is_sorted(p.rbegin(), p.rend()));
}

TEST_CASE("enumeration edge cases") {
    auto single = facto::enumerate_vpartitions(Alpha::of({1}));
    REQUIRE(single.size() == 1);
    CHECK(single[0] == VPartition{{1}});
    CHECK(facto::enumerate_vpartitions(Alpha::of({2, 2})).size() == 9);
    CHECK_THROWS_AS(facto::enumerate_vpartitions(Alpha::of({8, 8})), facto::input_too_large);
}

TEST_CASE("counting basics") {
    CHECK(facto::count_vpartitions(Alpha::of({1, 2})) == 4);
    CHECK(facto::count_vpartitions(Alpha::of({5})) == 7);
    CHECK(facto::count_vpartitions(Alpha::of({1, 1, 1})) == 5);
    CHECK(facto::count_vpartitions_direct(Alpha::of({1, 2})) == 4);
    CHECK(facto::count_vpartitions_direct(Alpha::of({5})) == 7);
    CHECK(facto::count_vpartitions_direct(Alpha::of({1, 1, 1})) == 5);
}

TEST_CASE("canonical integers") {
    CHECK(facto::canonical_integer(Alpha::of({1, 2})) == 12);
    CHECK(facto::canonical_integer(Alpha::of({1, 1, 1})) == 30);
    CHECK(facto::canonical_integer(Alpha::of({1, 3})) == 24);
}

TEST_CASE("log series coefficients") {
    CHECK(facto::logP_coefficient({1, 2}) == 1);
    CHECK(facto::logP_coefficient({2, 2}) == BigRat(3, 2));
    CHECK(facto::logP_coefficient({4}) == BigRat(7, 4));
    CHECK_THROWS_AS(facto::logP_coefficient({0, 0}), facto::invalid_input);
}

TEST_CASE("truncated generating function") {
    auto t12 = facto::truncated_P_coefficients(Alpha::of({1, 2}));
    CHECK(t12.at({1, 2}) == 4);
    CHECK(t12.log_identity_ok);
    CHECK(t12.exp_h_nonneg_ok);
    auto t2 = facto::truncated_P_coefficients(Alpha::of({2}));
    CHECK(t2.at({2}) == 2);
    auto t22 = facto::truncated_P_coefficients(Alpha::of({2, 2}));
    CHECK(t22.at({2, 2}) == 9);
    CHECK(t22.log_identity_ok);
    CHECK(t22.exp_h_nonneg_ok);
}

TEST_CASE("oracle equivalence on the small grid") {
    for (const Alpha& a : facto::canonical_alphas_with_sum_at_most(8)) {
        BigNat direct = facto::count_vpartitions_direct(a);
        std::size_t enumerated = 0;
        facto::visit_vpartitions(a, [&](const VPartition&) { ++enumerated; });
        CHECK(direct == (long)enumerated);
        CHECK(direct == facto::count_vpartitions(a));
        CHECK(direct == facto::truncated_P_coefficients(a).at(a.comps));
        BigNat ci = facto::canonical_integer(a);
        CHECK(direct == facto::count_factorizations(ci.get_ui()));
    }
}

TEST_CASE("permutation invariance") {
    std::mt19937 rng(7);
    for (const Alpha& a : facto::canonical_alphas_with_sum_at_most(8)) {
        std::vector<unsigned> shuffled = a.comps;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(facto::count_vpartitions(Alpha::of(shuffled)) == facto::count_vpartitions(a));
    }
}

TEST_CASE("strict monotonicity under increments and appends") {
    for (const Alpha& a : facto::canonical_alphas_with_sum_at_most(9)) {
        BigNat base = facto::count_vpartitions_direct(a);
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::vector<unsigned> up = a.comps;
            ++up[i];
            CHECK(facto::count_vpartitions_direct(Alpha::of(up)) > base);
        }
        std::vector<unsigned> app = a.comps;
        app.push_back(1);
        CHECK(facto::count_vpartitions_direct(Alpha::of(app)) > base);
    }
}

TEST_CASE("zero coordinates do not change the count") {
    for (const Alpha& a : facto::canonical_alphas_with_sum_at_most(7)) {
        std::vector<unsigned> padded = a.comps;
        padded.insert(padded.begin(), 0u);
        facto::detail::CountMemo memo;
        std::vector<unsigned> rem = padded;
        BigNat with_zero = facto::detail::count_rec(rem, padded, memo);
        CHECK(with_zero == facto::count_vpartitions_direct(a));
    }
}

TEST_CASE("specializations to classic sequences") {
    for (unsigned n = 1; n <= 20; ++n)
        CHECK(facto::count_vpartitions(Alpha::of({n})) == facto::partition_number(n));
    for (unsigned r = 1; r <= 8; ++r)
        CHECK(facto::count_vpartitions(Alpha::of(std::vector<unsigned>(r, 1))) ==
              facto::bell_number(r));
}

TEST_CASE("alpha validation") {
    CHECK_THROWS_AS(Alpha::of({}), facto::invalid_input);
    CHECK_THROWS_AS(Alpha::of({0, 1}), facto::invalid_input);
    Alpha a = Alpha::of({3, 1, 2});
    CHECK(a.comps == std::vector<unsigned>{1, 2, 3});
}
