#pragma once

// Partitions of a vector alpha into unordered sums of nonzero nonnegative
// vectors: brute-force enumerator, memoized counter, canonical-integer
// bridge to f(n), and the truncated generating-function cross-check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <utility>
#include <vector>

#include "facto/bignum.hpp"
#include "facto/errors.hpp"
#include "facto/factorizations.hpp"
#include "facto/sequences.hpp"

namespace facto {

inline constexpr unsigned kEnumerateSumGuard = 14;
inline constexpr unsigned kSeriesSumGuard = 12;

// Canonical exponent tuple: nondecreasing, every component >= 1.
struct Alpha {
    std::vector<unsigned> comps;

    static Alpha of(std::vector<unsigned> v) {
        if (v.empty()) throw invalid_input("Alpha must be nonempty");
        for (unsigned c : v)
            if (c < 1) throw invalid_input("Alpha components must be >= 1");
        std::sort(v.begin(), v.end());
        return Alpha{std::move(v)};
    }

    unsigned sum() const { return std::accumulate(comps.begin(), comps.end(), 0u); }
    std::size_t size() const { return comps.size(); }

    auto operator<=>(const Alpha&) const = default;
};

using VectorPart = std::vector<unsigned>;
using VPartition = std::vector<VectorPart>; // parts in non-increasing lex order

namespace detail {

inline bool all_zero(const std::vector<unsigned>& v) {
    return std::all_of(v.begin(), v.end(), [](unsigned x) { return x == 0; });
}

// Largest vector in the box [0, rem] that is lexicographically <= bound.
inline std::vector<unsigned> clip_lex(const std::vector<unsigned>& bound,
                                      const std::vector<unsigned>& rem) {
    std::vector<unsigned> b(rem.size());
    for (std::size_t i = 0; i < rem.size(); ++i) {
        if (bound[i] <= rem[i]) {
            b[i] = bound[i];
        } else {
            b[i] = rem[i];
            for (std::size_t j = i + 1; j < rem.size(); ++j) b[j] = rem[j];
            return b;
        }
    }
    return b;
}

// Lex predecessor inside the box [0, rem]; returns false when already zero.
inline bool lex_pred(std::vector<unsigned>& b, const std::vector<unsigned>& rem) {
    for (std::size_t j = b.size(); j-- > 0;) {
        if (b[j] > 0) {
            --b[j];
            for (std::size_t i = j + 1; i < b.size(); ++i) b[i] = rem[i];
            return !all_zero(b);
        }
    }
    return false;
}

inline void visit_rec(std::vector<unsigned>& rem, std::vector<unsigned> bound, VPartition& acc,
                      const std::function<void(const VPartition&)>& visit) {
    if (all_zero(rem)) {
        visit(acc);
        return;
    }
    std::vector<unsigned> beta = clip_lex(bound, rem);
    if (all_zero(beta)) return;
    for (;;) {
        for (std::size_t i = 0; i < rem.size(); ++i) rem[i] -= beta[i];
        acc.push_back(beta);
        visit_rec(rem, beta, acc, visit);
        acc.pop_back();
        for (std::size_t i = 0; i < rem.size(); ++i) rem[i] += beta[i];
        if (!lex_pred(beta, rem)) break;
    }
}

using CountMemo = std::map<std::pair<std::vector<unsigned>, std::vector<unsigned>>, BigNat>;

inline BigNat count_rec(std::vector<unsigned>& rem, std::vector<unsigned> bound, CountMemo& memo) {
    if (all_zero(rem)) return 1;
    std::vector<unsigned> beta = clip_lex(bound, rem);
    if (all_zero(beta)) return 0;
    const auto key = std::make_pair(rem, beta);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigNat total = 0;
    std::vector<unsigned> b = beta;
    for (;;) {
        for (std::size_t i = 0; i < rem.size(); ++i) rem[i] -= b[i];
        total += count_rec(rem, b, memo);
        for (std::size_t i = 0; i < rem.size(); ++i) rem[i] += b[i];
        if (!lex_pred(b, rem)) break;
    }
    memo.emplace(key, total);
    return total;
}

struct AlphaMemo {
    std::mutex mu;
    std::map<Alpha, BigNat> table;

    static AlphaMemo& instance() {
        static AlphaMemo m;
        return m;
    }
};

} // namespace detail

// Visit every partition of alpha, parts in non-increasing lex order.
inline void visit_vpartitions(const Alpha& alpha,
                              const std::function<void(const VPartition&)>& visit,
                              unsigned sum_guard = kEnumerateSumGuard) {
    if (alpha.sum() > sum_guard)
        throw input_too_large("visit_vpartitions: alpha beyond oracle scale");
    std::vector<unsigned> rem = alpha.comps;
    VPartition acc;
    detail::visit_rec(rem, alpha.comps, acc, visit);
}

inline std::vector<VPartition> enumerate_vpartitions(const Alpha& alpha,
                                                     unsigned sum_guard = kEnumerateSumGuard) {
    std::vector<VPartition> out;
    visit_vpartitions(alpha, [&](const VPartition& p) { out.push_back(p); }, sum_guard);
    return out;
}

// p(alpha) by direct vector recursion (parts bounded in lex order).
inline BigNat count_vpartitions_direct(const Alpha& alpha) {
    detail::CountMemo memo;
    std::vector<unsigned> rem = alpha.comps;
    return detail::count_rec(rem, alpha.comps, memo);
}

// Smallest integer whose prime exponent signature is alpha: largest
// exponents on the smallest primes.
inline BigNat canonical_integer(const Alpha& alpha) {
    static const unsigned primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                      41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
                                      97, 101, 103, 107, 109, 113, 127, 131};
    if (alpha.size() > std::size(primes))
        throw input_too_large("canonical_integer: too many components");
    std::vector<unsigned> desc = alpha.comps;
    std::sort(desc.rbegin(), desc.rend());
    BigNat n = 1;
    for (std::size_t i = 0; i < desc.size(); ++i) n *= pow_nat((unsigned long)primes[i], desc[i]);
    return n;
}

// p(alpha). Routes through f(canonical integer) when the integer is within
// the divisor-recursion guard, else falls back to the direct recursion.
// Results are memoized per canonical alpha.
inline BigNat count_vpartitions(const Alpha& alpha) {
    auto& memo = detail::AlphaMemo::instance();
    {
        std::lock_guard lock(memo.mu);
        if (auto it = memo.table.find(alpha); it != memo.table.end()) return it->second;
    }
    BigNat result;
    BigNat ci = canonical_integer(alpha);
    if (ci.fits_ulong_p() && ci.get_ui() <= 10 * kFactorGuard) {
        result = count_factorizations(ci.get_ui(), 10 * kFactorGuard);
    } else {
        result = count_vpartitions_direct(alpha);
    }
    std::lock_guard lock(memo.mu);
    memo.table.emplace(alpha, result);
    return result;
}

// All canonical alphas with component sum <= s, in length-lex order.
inline std::vector<Alpha> canonical_alphas_with_sum_at_most(unsigned s) {
    std::vector<Alpha> out;
    std::vector<unsigned> cur;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned minc) {
        if (!cur.empty()) out.push_back(Alpha{cur});
        for (unsigned c = minc; c <= remaining; ++c) {
            cur.push_back(c);
            rec(remaining - c, c);
            cur.pop_back();
        }
    };
    rec(s, 1);
    std::sort(out.begin(), out.end(), [](const Alpha& a, const Alpha& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.comps < b.comps;
    });
    return out;
}

// Coefficient of q^beta in log P(q): sigma(gcd beta) / gcd beta.
inline BigRat logP_coefficient(const VectorPart& beta) {
    std::uint64_t g = 0;
    for (unsigned b : beta) g = std::gcd(g, (std::uint64_t)b);
    if (g == 0) throw invalid_input("logP_coefficient: beta must be nonzero");
    BigRat c(sigma(g), bignat_from_u64(g));
    c.canonicalize();
    return c;
}

// Truncated expansion of prod (1 - q^beta)^{-1} over the box [0, alpha_max],
// cross-checked against exp of the log-series.
struct PSeriesTable {
    Alpha alpha_max;
    std::vector<unsigned> dims;      // alpha_i + 1 per axis
    std::vector<std::size_t> stride;
    std::vector<BigNat> coeff;       // product expansion
    bool log_identity_ok = false;    // exp(log-series) matches product
    bool exp_h_nonneg_ok = false;    // exp(H) has nonnegative coefficients

    std::size_t index_of(const std::vector<unsigned>& beta) const {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < beta.size(); ++i) idx += beta[i] * stride[i];
        return idx;
    }

    const BigNat& at(const std::vector<unsigned>& beta) const { return coeff[index_of(beta)]; }
};

namespace detail {

inline bool box_next(std::vector<unsigned>& v, const std::vector<unsigned>& dims) {
    for (std::size_t i = v.size(); i-- > 0;) {
        if (v[i] + 1 < dims[i]) {
            ++v[i];
            for (std::size_t j = i + 1; j < v.size(); ++j) v[j] = 0;
            return true;
        }
    }
    return false;
}

} // namespace detail

inline PSeriesTable truncated_P_coefficients(const Alpha& alpha_max) {
    if (alpha_max.sum() > kSeriesSumGuard)
        throw input_too_large("truncated_P_coefficients: alpha beyond series guard");
    PSeriesTable t;
    t.alpha_max = alpha_max;
    const std::size_t r = alpha_max.size();
    t.dims.resize(r);
    for (std::size_t i = 0; i < r; ++i) t.dims[i] = alpha_max.comps[i] + 1;
    t.stride.assign(r, 1);
    for (std::size_t i = r - 1; i-- > 0;) t.stride[i] = t.stride[i + 1] * t.dims[i + 1];
    const std::size_t total = t.stride[0] * t.dims[0];

    // product expansion: repeated in-place update, one factor per nonzero beta
    t.coeff.assign(total, BigNat(0));
    t.coeff[0] = 1;
    std::vector<unsigned> beta(r, 0);
    while (detail::box_next(beta, t.dims)) {
        const std::size_t off = t.index_of(beta);
        std::vector<unsigned> a(r, 0);
        std::size_t ai = 0;
        for (;;) {
            bool fits = true;
            for (std::size_t i = 0; i < r; ++i)
                if (a[i] < beta[i]) { fits = false; break; }
            if (fits) t.coeff[ai] += t.coeff[ai - off];
            if (!detail::box_next(a, t.dims)) break;
            ai = t.index_of(a);
        }
    }

    // exp of the log-series, and exp of H = log-series minus sum q^beta
    std::vector<BigRat> expL(total, BigRat(0)), expH(total, BigRat(0));
    expL[0] = 1;
    expH[0] = 1;
    std::fill(beta.begin(), beta.end(), 0u);
    while (detail::box_next(beta, t.dims)) {
        const std::size_t off = t.index_of(beta);
        const BigRat cL = logP_coefficient(beta);
        const BigRat cH = cL - 1;
        // multiply by exp(c * q^beta) = sum_j c^j / j! * q^(j beta)
        unsigned max_mult = 0;
        {
            unsigned m = ~0u;
            for (std::size_t i = 0; i < r; ++i)
                if (beta[i] > 0) m = std::min(m, alpha_max.comps[i] / beta[i]);
            max_mult = m;
        }
        auto apply = [&](std::vector<BigRat>& table, const BigRat& c) {
            if (c == 0) return;
            std::vector<BigRat> pw(max_mult + 1); // pw[j] = c^j / j!
            pw[0] = 1;
            BigRat cj = 1;
            BigNat fact = 1;
            for (unsigned j = 1; j <= max_mult; ++j) {
                cj *= c;
                fact *= (long)j;
                pw[j] = cj / BigRat(fact);
            }
            std::vector<BigRat> out(table.size(), BigRat(0));
            std::vector<unsigned> a(r, 0);
            std::size_t ai = 0;
            for (;;) {
                BigRat acc = table[ai];
                std::vector<unsigned> b = a;
                std::size_t bi = ai;
                for (unsigned j = 1; j <= max_mult; ++j) {
                    bool ok = true;
                    for (std::size_t i = 0; i < r; ++i) {
                        if (b[i] < beta[i]) { ok = false; break; }
                        b[i] -= beta[i];
                    }
                    if (!ok) break;
                    bi -= off;
                    acc += table[bi] * pw[j];
                }
                out[ai] = acc;
                if (!detail::box_next(a, t.dims)) break;
                ai = t.index_of(a);
            }
            table = std::move(out);
        };
        apply(expL, cL);
        apply(expH, cH);
    }

    t.log_identity_ok = true;
    for (std::size_t i = 0; i < total; ++i) {
        if (expL[i] != BigRat(t.coeff[i])) {
            t.log_identity_ok = false;
            break;
        }
    }
    t.exp_h_nonneg_ok =
        std::all_of(expH.begin(), expH.end(), [](const BigRat& q) { return q >= 0; });
    return t;
}

} // namespace facto
