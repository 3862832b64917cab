#pragma once

// Classic exact sequences: partition numbers p(n), Bell numbers B_r,
// binomials, sum-of-divisors, and an interval evaluation of the Bell-number
// series (1/e) * sum k^r / k!.

#include <cstdint>
#include <mutex>
#include <vector>

#include "facto/bignum.hpp"
#include "facto/errors.hpp"
#include "facto/interval.hpp"

namespace facto {

namespace detail {

struct PartitionTable {
    std::mutex mu;
    std::vector<BigNat> p{BigNat(1)}; // p[0] = 1

    // Euler's pentagonal-number recurrence.
    void extend(std::size_t n) {
        std::lock_guard lock(mu);
        while (p.size() <= n) {
            const long m = (long)p.size();
            BigNat v = 0;
            for (long k = 1;; ++k) {
                const long g1 = k * (3 * k - 1) / 2;
                const long g2 = k * (3 * k + 1) / 2;
                if (g1 > m && g2 > m) break;
                const int sign = (k % 2 == 1) ? 1 : -1;
                if (g1 <= m) v += sign * p[m - g1];
                if (g2 <= m) v += sign * p[m - g2];
            }
            p.push_back(v);
        }
    }

    static PartitionTable& instance() {
        static PartitionTable t;
        return t;
    }
};

struct BellTable {
    std::mutex mu;
    std::vector<BigNat> row{BigNat(1)}; // current Bell-triangle row
    std::vector<BigNat> bell{BigNat(1), BigNat(1)}; // bell[0]=bell[1]=1

    void extend(std::size_t r) {
        std::lock_guard lock(mu);
        while (bell.size() <= r) {
            std::vector<BigNat> next;
            next.reserve(row.size() + 1);
            next.push_back(row.back());
            for (const BigNat& v : row) next.push_back(next.back() + v);
            row = std::move(next);
            bell.push_back(row.back());
        }
    }

    static BellTable& instance() {
        static BellTable t;
        return t;
    }
};

} // namespace detail

inline BigNat partition_number(std::size_t n) {
    auto& t = detail::PartitionTable::instance();
    t.extend(n);
    std::lock_guard lock(t.mu);
    return t.p[n];
}

// Sum_{m <= n} p(m) for m >= 1.
inline BigNat partition_partial_sum(std::size_t n) {
    auto& t = detail::PartitionTable::instance();
    t.extend(n);
    std::lock_guard lock(t.mu);
    BigNat s = 0;
    for (std::size_t m = 1; m <= n; ++m) s += t.p[m];
    return s;
}

inline BigNat bell_number(std::size_t r) {
    if (r < 1) throw invalid_input("bell_number requires r >= 1");
    auto& t = detail::BellTable::instance();
    t.extend(r);
    std::lock_guard lock(t.mu);
    return t.bell[r];
}

inline BigNat binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    BigNat r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Sum of divisors by trial division; inputs are gcds of exponent vectors,
// always small.
inline BigNat sigma(std::uint64_t m) {
    if (m < 1) throw invalid_input("sigma requires m >= 1");
    BigNat s = 1;
    std::uint64_t rest = m;
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        BigNat pk = 1, geom = 1;
        while (rest % p == 0) {
            rest /= p;
            pk *= (long)p;
            geom += pk;
        }
        s *= geom;
    }
    if (rest > 1) s *= (1 + bignat_from_u64(rest));
    return s;
}

// Enclosure of (1/e) * sum_{k>=0} k^r / k!, certified to contain B_r.
// Terms are summed exactly as rationals; the tail after the term ratio
// drops below 1/2 is bounded by a geometric series.
inline RealInterval dobinski_partial(std::size_t r, double tail_tol,
                                     mpfr_prec_t prec = kDefaultPrec) {
    if (r < 1) throw invalid_input("dobinski_partial requires r >= 1");
    if (!(tail_tol > 0)) throw invalid_input("tail_tol must be positive");

    BigRat sum = 0;
    BigRat term = 0; // k = 0 term: 0^r / 0! = 0
    BigRat tol(tail_tol);
    BigNat kfact = 1;
    std::size_t k = 0;
    BigRat tail_bound;
    for (;;) {
        ++k;
        kfact *= (long)k;
        term = BigRat(pow_nat((unsigned long)k, (unsigned long)r), kfact);
        term.canonicalize();
        sum += term;
        if (k <= r) continue;
        // ratio t_{k+1}/t_k = ((k+1)/k)^r / (k+1), decreasing in k
        BigRat next = BigRat(pow_nat((unsigned long)(k + 1), (unsigned long)r),
                             kfact * (long)(k + 1));
        next.canonicalize();
        if (next * 2 <= term) {
            tail_bound = next * 2;
            if (tail_bound < tol) break;
        }
        if (k > 100000) throw precision_exhausted("dobinski_partial: tail did not certify");
    }
    RealInterval s = RealInterval::from_rat(sum, prec);
    RealInterval s_hi = RealInterval::from_rat(sum + tail_bound, prec);
    RealInterval e = RealInterval::e(prec);
    return RealInterval::hull(s / e, s_hi / e);
}

} // namespace facto
