#pragma once

// Unordered factorizations of n into factors > 1: exact counting via the
// bounded divisor recursion F(n, m) = sum_{d | n, 2 <= d <= m} F(n/d, d),
// exhaustive enumeration, and prime exponent signatures.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "facto/bignum.hpp"
#include "facto/errors.hpp"

namespace facto {

inline constexpr std::uint64_t kFactorGuard = 1'000'000'000'000ULL; // 10^12
inline constexpr std::uint64_t kEnumerateGuard = 1'000'000ULL;

using Factorization = std::vector<std::uint64_t>; // nondecreasing, each >= 2

// Prime factorization (p, e) pairs, p ascending, by trial division.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n,
                                                                 std::uint64_t guard = kFactorGuard) {
    if (n > guard) throw input_too_large("factorize: n exceeds trial-division guard");
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::vector<std::uint64_t> divisors_of(std::uint64_t n, std::uint64_t guard = kFactorGuard) {
    auto fac = factorize(n, guard);
    std::vector<std::uint64_t> divs{1};
    for (auto [p, e] : fac) {
        const std::size_t sz = divs.size();
        std::uint64_t pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Sorted multiset of prime exponents of n (n >= 2).
inline std::vector<unsigned> exponent_signature(std::uint64_t n, std::uint64_t guard = kFactorGuard) {
    if (n < 2) throw invalid_input("exponent_signature undefined for n < 2");
    std::vector<unsigned> sig;
    for (auto [p, e] : factorize(n, guard)) sig.push_back(e);
    std::sort(sig.begin(), sig.end());
    return sig;
}

namespace detail {

struct FactorizationMemo {
    std::mutex mu;
    std::map<std::pair<std::uint64_t, std::uint64_t>, BigNat> table;
    std::map<std::uint64_t, std::vector<std::uint64_t>> divisors;

    static FactorizationMemo& instance() {
        static FactorizationMemo m;
        return m;
    }
};

inline BigNat count_bounded(std::uint64_t n, std::uint64_t m, std::uint64_t guard) {
    if (n == 1) return 1;
    if (m < 2) return 0;
    auto& memo = FactorizationMemo::instance();
    const auto key = std::make_pair(n, m);
    {
        std::lock_guard lock(memo.mu);
        if (auto it = memo.table.find(key); it != memo.table.end()) return it->second;
    }
    std::vector<std::uint64_t> divs;
    {
        std::lock_guard lock(memo.mu);
        if (auto it = memo.divisors.find(n); it != memo.divisors.end()) divs = it->second;
    }
    if (divs.empty()) {
        divs = divisors_of(n, guard);
        std::lock_guard lock(memo.mu);
        memo.divisors.emplace(n, divs);
    }
    BigNat total = 0;
    for (std::uint64_t d : divs) {
        if (d < 2 || d > m) continue;
        total += count_bounded(n / d, d, guard);
    }
    std::lock_guard lock(memo.mu);
    memo.table.emplace(key, total);
    return total;
}

} // namespace detail

// f(n): number of unordered factorizations of n into factors > 1; f(1) = 1
// by the empty-factorization convention.
inline BigNat count_factorizations(std::uint64_t n, std::uint64_t guard = kFactorGuard) {
    if (n < 1) throw invalid_input("count_factorizations requires n >= 1");
    if (n > guard) throw input_too_large("count_factorizations: n exceeds guard");
    return detail::count_bounded(n, n, guard);
}

namespace detail {

// Recursion for n beyond 64 bits; only smooth n reach this path.
inline BigNat count_bounded_big(const BigNat& n, const BigNat& m,
                                std::map<std::pair<BigNat, BigNat>, BigNat>& memo,
                                const std::vector<BigNat>& divs) {
    if (n == 1) return 1;
    if (m < 2) return 0;
    const auto key = std::make_pair(n, m);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigNat total = 0;
    for (const BigNat& d : divs) {
        if (d < 2 || d > m || !mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) continue;
        total += count_bounded_big(n / d, d, memo, divs);
    }
    memo.emplace(key, total);
    return total;
}

} // namespace detail

// f(n) for arbitrary-precision n; factorization by trial division up to
// trial_limit, so n must be trial_limit-smooth (up to one larger prime).
inline BigNat count_factorizations_big(const BigNat& n, std::uint64_t trial_limit = 10'000'000) {
    if (n < 1) throw invalid_input("count_factorizations requires n >= 1");
    if (n.fits_ulong_p() && n.get_ui() <= kFactorGuard)
        return count_factorizations(n.get_ui());
    BigNat rest = n;
    std::vector<std::pair<BigNat, unsigned>> fac;
    for (std::uint64_t p = 2; p <= trial_limit && rest > 1; p += (p == 2 ? 1 : 2)) {
        if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            rest /= bignat_from_u64(p);
            ++e;
        }
        fac.emplace_back(bignat_from_u64(p), e);
    }
    if (rest > 1) {
        BigNat lim = bignat_from_u64(trial_limit);
        if (rest > lim * lim) throw input_too_large("count_factorizations_big: not smooth enough");
        fac.emplace_back(rest, 1);
    }
    std::vector<BigNat> divs{BigNat(1)};
    for (const auto& [p, e] : fac) {
        const std::size_t sz = divs.size();
        BigNat pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    std::map<std::pair<BigNat, BigNat>, BigNat> memo;
    return detail::count_bounded_big(n, n, memo, divs);
}

inline void visit_factorizations(std::uint64_t n, std::uint64_t max_factor, Factorization& prefix,
                                 const std::function<void(const Factorization&)>& visit) {
    if (n == 1) {
        visit(prefix);
        return;
    }
    // smallest factor chosen first keeps the list nondecreasing
    std::uint64_t lo = prefix.empty() ? 2 : prefix.back();
    for (std::uint64_t d = lo; d * d <= n; ++d) {
        if (n % d != 0) continue;
        prefix.push_back(d);
        visit_factorizations(n / d, max_factor, prefix, visit);
        prefix.pop_back();
    }
    if (n >= lo) {
        prefix.push_back(n);
        visit(prefix);
        prefix.pop_back();
    }
}

// All factorizations of n in ascending lexicographic order.
inline std::vector<Factorization> enumerate_factorizations(std::uint64_t n,
                                                           std::uint64_t guard = kEnumerateGuard) {
    if (n < 1) throw invalid_input("enumerate_factorizations requires n >= 1");
    if (n > guard) throw input_too_large("enumerate_factorizations: n beyond oracle scale");
    std::vector<Factorization> out;
    if (n == 1) {
        out.push_back({});
        return out;
    }
    Factorization prefix;
    visit_factorizations(n, n, prefix, [&](const Factorization& f) { out.push_back(f); });
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace facto
