#pragma once

// The explicit lower-bound machinery: g(alpha, z) and its unit root, the
// floor N with its certified sandwich, the hypergeometric series lower
// bound, the closed-form lower bound derived from it, and interval-certified
// sweeps for every auxiliary inequality.
//
// Inequality verdicts use outward rounding only: a claim A <= B passes when
// hi(A) <= lo(B). Equality boundaries are handled by restating the claim so
// that one side is exact (rational or integer) before comparing.

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "facto/bignum.hpp"
#include "facto/errors.hpp"
#include "facto/interval.hpp"
#include "facto/parallel.hpp"
#include "facto/sequences.hpp"
#include "facto/vector_partitions.hpp"

namespace facto {

enum class LemmaId { H_MONOTONE, FACT_BOUND, BINOM_BOUND, MAXP, P_UPPER, P_LOWER, SANDWICH, PRODUCT_BOUND };
enum class CheckStatus { PASS, FAIL, UNDECIDED };

inline const char* to_string(LemmaId id) {
    switch (id) {
        case LemmaId::H_MONOTONE: return "H_MONOTONE";
        case LemmaId::FACT_BOUND: return "FACT_BOUND";
        case LemmaId::BINOM_BOUND: return "BINOM_BOUND";
        case LemmaId::MAXP: return "MAXP";
        case LemmaId::P_UPPER: return "P_UPPER";
        case LemmaId::P_LOWER: return "P_LOWER";
        case LemmaId::SANDWICH: return "SANDWICH";
        case LemmaId::PRODUCT_BOUND: return "PRODUCT_BOUND";
    }
    return "?";
}

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::PASS: return "PASS";
        case CheckStatus::FAIL: return "FAIL";
        case CheckStatus::UNDECIDED: return "UNDECIDED";
    }
    return "?";
}

struct LemmaReport {
    LemmaId id;
    std::string range;
    CheckStatus status = CheckStatus::UNDECIDED;
    double worst_slack = 0.0;      // smallest certified margin observed
    std::string counterexample;    // set on FAIL
};

struct BoundContext {
    Alpha alpha;
    RealInterval z_alpha;
    std::uint64_t n_floor = 1;
};

struct BoundReport {
    Alpha alpha;
    RealInterval closed_form_lower;
    RealInterval hypergeom_lower;
    bool has_exact = false;
    BigNat exact_p;
    double slack_log = 0.0; // log p(alpha) - log(best lower bound)
    bool pass = false;
};

struct BudgetReport {
    double x = 0;
    std::size_t r = 0;
    double r_budget = 0;   // R from the r-budget formula
    std::uint64_t n_floor = 0;
    double n_cap = 0;      // 3 log x
    bool r_ok = false;
    bool n_ok = false;
};

// Process-wide escalation ceiling; the CLI may lower or raise it.
inline mpfr_prec_t& precision_cap() {
    static mpfr_prec_t cap = kPrecCap;
    return cap;
}

namespace detail {

// 1 pass, 0 fail, -1 inconclusive at this precision
template <class F>
CheckStatus escalate(F f, mpfr_prec_t start = kDefaultPrec, mpfr_prec_t cap = 0) {
    if (cap == 0) cap = precision_cap();
    for (mpfr_prec_t p = start; p <= cap; p *= 2) {
        int r = f(p);
        if (r == 1) return CheckStatus::PASS;
        if (r == 0) return CheckStatus::FAIL;
    }
    return CheckStatus::UNDECIDED;
}

inline BigRat rat_pow(const BigRat& q, unsigned long e) {
    BigRat r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(q.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(q.get_mpq_t()), e);
    r.canonicalize();
    return r;
}

} // namespace detail

// g(alpha, z) = z * prod (1 + alpha_i/z)^{-1}, exact for rational z > 0.
inline BigRat g_rational(const Alpha& alpha, const BigRat& z) {
    BigRat num = detail::rat_pow(z, (unsigned long)alpha.size() + 1);
    BigRat den = 1;
    for (unsigned a : alpha.comps) den *= (z + (long)a);
    return num / den;
}

inline RealInterval g_value(const Alpha& alpha, const RealInterval& z,
                            mpfr_prec_t prec = kDefaultPrec) {
    RealInterval res = z;
    for (unsigned a : alpha.comps) {
        RealInterval factor =
            RealInterval::exact(1, prec) + RealInterval::exact((long)a, prec) / z;
        res = res / factor;
    }
    return res;
}

// Root of g(alpha, z) = 1, bracketed by rational bisection; width <= tol.
inline RealInterval solve_z(const Alpha& alpha, double tol = 1e-12,
                            mpfr_prec_t prec = kDefaultPrec) {
    if (!(tol > 0)) throw invalid_input("solve_z: tol must be positive");
    BigRat lo = 1, hi = 2;
    if (g_rational(alpha, lo) >= 1)
        throw invalid_input("solve_z: g(alpha, 1) must be below 1"); // cannot happen for r >= 1
    while (g_rational(alpha, hi) < 1) hi *= 2;
    BigRat width_tol(tol);
    while (hi - lo > width_tol) {
        BigRat mid = (lo + hi) / 2;
        BigRat gm = g_rational(alpha, mid);
        if (gm == 1) return RealInterval::from_rat(mid, prec);
        (gm < 1 ? lo : hi) = mid;
    }
    return RealInterval::hull(RealInterval::from_rat(lo, prec), RealInterval::from_rat(hi, prec));
}

// N = floor(z(alpha)) with the sandwich g(alpha,N) <= 1 <= g(alpha,N+1)
// certified in exact rational arithmetic.
inline BoundContext floor_N(const Alpha& alpha, mpfr_prec_t prec = kDefaultPrec) {
    std::uint64_t hi = 1;
    while (g_rational(alpha, BigRat((long)hi)) <= 1) hi *= 2;
    std::uint64_t lo = hi / 2; // g(lo) <= 1 < g(hi)
    while (hi - lo > 1) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (g_rational(alpha, BigRat((long)mid)) <= 1)
            lo = mid;
        else
            hi = mid;
    }
    BoundContext ctx{alpha, solve_z(alpha, 1e-12, prec), lo};
    return ctx;
}

// T(alpha, k) = (1/(k+1)!) * prod C(k + alpha_i, k), exact.
inline BigRat term_T(const Alpha& alpha, unsigned long k) {
    BigNat num = 1;
    for (unsigned a : alpha.comps) num *= binomial(k + a, k);
    BigRat t(num, factorial(k + 1));
    t.canonicalize();
    return t;
}

namespace detail {

// ratio T(alpha,k+1)/T(alpha,k) = prod(1 + alpha_i/(k+1)) / (k+2)
inline BigRat term_ratio(const Alpha& alpha, unsigned long k) {
    BigRat r(1, (long)(k + 2));
    for (unsigned a : alpha.comps) {
        BigRat f((long)(k + 1 + a), (long)(k + 1));
        f.canonicalize();
        r *= f;
    }
    return r;
}

struct HyperSum {
    BigRat partial;     // sum of T(alpha, k) up to the truncation index
    BigRat tail_bound;  // certified bound on the dropped tail
};

inline HyperSum hyper_partial(const Alpha& alpha, double tail_tol) {
    if (!(tail_tol > 0)) throw invalid_input("tail_tol must be positive");
    BigRat tol(tail_tol);
    BigRat sum = 0, t = term_T(alpha, 0);
    unsigned long k = 0;
    for (;;) {
        sum += t;
        BigRat rho = term_ratio(alpha, k);
        BigRat next = t * rho;
        // the ratio is a product of terms each decreasing in k, so once it
        // drops to 1/2 the tail is dominated by a geometric series
        if (rho * 2 <= 1) {
            BigRat tail = next * 2;
            if (tail < tol) return {sum, tail};
        }
        t = next;
        ++k;
        if (k > 1000000) throw precision_exhausted("hypergeometric tail did not certify");
    }
}

} // namespace detail

// Enclosure of (1/e) * sum_k T(alpha, k); lower end is a certified lower
// bound for p(alpha).
inline RealInterval hypergeom_lower_bound(const Alpha& alpha, double tail_tol = 1e-9,
                                          mpfr_prec_t prec = kDefaultPrec) {
    auto hs = detail::hyper_partial(alpha, tail_tol);
    RealInterval e = RealInterval::e(prec);
    RealInterval lo = RealInterval::from_rat(hs.partial, prec) / e;
    RealInterval hi = RealInterval::from_rat(hs.partial + hs.tail_bound, prec) / e;
    return RealInterval::hull(lo, hi);
}

// Closed-form lower bound e^{N-2}/(2 N^{3/2}) * prod (1/(2 sqrt(2N)))
// (1 + N/alpha_i)^{alpha_i + 1/2}, evaluated in log-space.
inline RealInterval closed_form_lower_bound(const BoundContext& ctx, mpfr_prec_t prec = kDefaultPrec) {
    const long N = (long)ctx.n_floor;
    RealInterval nI = RealInterval::exact(N, prec);
    RealInterval two = RealInterval::exact(2, prec);
    RealInterval half = RealInterval::exact(1, prec) / two;
    RealInterval logN = nI.log();
    RealInterval log2 = two.log();

    RealInterval lg = RealInterval::exact(N - 2, prec) - log2 -
                      (RealInterval::exact(3, prec) * half) * logN;
    RealInterval log_2sqrt2N = log2 + half * (log2 + logN);
    for (unsigned a : ctx.alpha.comps) {
        RealInterval ai = RealInterval::exact((long)a, prec);
        RealInterval base = RealInterval::exact(1, prec) + nI / ai;
        lg = lg - log_2sqrt2N + (ai + half) * base.log();
    }
    return lg.exp();
}

// Certifies the two proof-step inequalities at this alpha:
//   prod (1 + alpha_i/N) >= N                  (exact integer arithmetic)
//   T(alpha,N) >= e^{N-1}/(2 N^{N+3/2}) * prod ...   (squared, vs e^{2N-2})
inline LemmaReport term_inequality_check(const BoundContext& ctx) {
    LemmaReport rep{LemmaId::PRODUCT_BOUND, "alpha sum " + std::to_string(ctx.alpha.sum())};
    const unsigned long N = ctx.n_floor;
    const unsigned long r = ctx.alpha.size();

    BigNat prod = 1;
    for (unsigned a : ctx.alpha.comps) prod *= (long)(N + a);
    BigNat npow = pow_nat((unsigned long)N, r + 1);
    if (prod < npow) {
        rep.status = CheckStatus::FAIL;
        rep.counterexample = "product inequality failed";
        return rep;
    }

    // T^2 * 4 N^{2N+3} * prod [ 8N * (N/(N+a))^{2N} * (a/(N+a))^{2a+1} ] >= e^{2N-2}
    BigRat q = detail::rat_pow(term_T(ctx.alpha, N), 2);
    q *= BigRat(4 * pow_nat(N, 2 * N + 3));
    for (unsigned a : ctx.alpha.comps) {
        q *= BigRat((long)(8 * N));
        q *= detail::rat_pow(BigRat((long)N, (long)(N + a)), 2 * N);
        q *= detail::rat_pow(BigRat((long)a, (long)(N + a)), 2 * (unsigned long)a + 1);
    }
    rep.status = detail::escalate([&](mpfr_prec_t p) -> int {
        RealInterval e2 = RealInterval::exact(2 * (long)N - 2, p).exp();
        RealInterval qi = RealInterval::from_rat(q, p);
        if (qi.certainly_ge(e2)) return 1;
        if (qi.certainly_lt(e2)) return 0;
        return -1;
    });
    if (rep.status == CheckStatus::FAIL) rep.counterexample = "term inequality failed";
    rep.worst_slack = std::log(q.get_d()) - (2.0 * (double)N - 2.0);
    return rep;
}

// Advisory size budgets on r and N relative to x; meaningful for large x.
inline BudgetReport budget_check(double x, const Alpha& alpha) {
    const double lx = std::log(x);
    const double llx = std::log(lx);
    const double lllx = std::log(llx);
    if (!(x > 0) || !(lllx > 0))
        throw invalid_input("budget_check requires x > e^e");
    BudgetReport b;
    b.x = x;
    b.r = alpha.size();
    b.r_budget = (2.0 * lx / llx) * (1.0 + 2.0 * lllx / llx);
    b.n_floor = floor_N(alpha).n_floor;
    b.n_cap = 3.0 * lx;
    b.r_ok = (double)b.r <= b.r_budget;
    b.n_ok = (double)b.n_floor <= b.n_cap;
    return b;
}

namespace detail {

// h1(x) = (1+1/x)^{x+1/2},  h2(x) = (x+1)/(x+2) * (1+1/x)^{x+3/2}
inline RealInterval h1(unsigned long x, mpfr_prec_t prec) {
    RealInterval xi = RealInterval::exact((long)x, prec);
    RealInterval base = RealInterval::exact(1, prec) + RealInterval::exact(1, prec) / xi;
    RealInterval expo = xi + RealInterval::exact(1, prec) / RealInterval::exact(2, prec);
    return base.pow(expo);
}

inline RealInterval h2(unsigned long x, mpfr_prec_t prec) {
    RealInterval xi = RealInterval::exact((long)x, prec);
    RealInterval base = RealInterval::exact(1, prec) + RealInterval::exact(1, prec) / xi;
    RealInterval expo = xi + RealInterval::exact(3, prec) / RealInterval::exact(2, prec);
    RealInterval ratio = (xi + RealInterval::exact(1, prec)) / (xi + RealInterval::exact(2, prec));
    return ratio * base.pow(expo);
}

} // namespace detail

// Lemma: h1 and h2 decrease to e on the positive integers. `e_perturb` is a
// fault-injection hook for the verify self-test; it must stay 0 in real runs.
inline LemmaReport verify_h_monotone(unsigned long x_max, unsigned workers = 1,
                                     double e_perturb = 0.0) {
    LemmaReport rep{LemmaId::H_MONOTONE, "x in 1.." + std::to_string(x_max)};
    if (x_max < 1) throw invalid_input("verify_h_monotone requires x_max >= 1");
    std::vector<CheckStatus> st(x_max, CheckStatus::UNDECIDED);
    std::vector<double> slack(x_max, 0.0);
    std::vector<std::string> ce(x_max);
    parallel_for_index(x_max, workers, [&](std::size_t i) {
        const unsigned long x = i + 1;
        st[i] = detail::escalate([&](mpfr_prec_t p) -> int {
            RealInterval e = RealInterval::e(p) + RealInterval::from_double(e_perturb, p);
            for (auto* h : {&detail::h1, &detail::h2}) {
                RealInterval cur = h(x, p);
                RealInterval nxt = h(x + 1, p);
                if (!(nxt.certainly_gt(e) && cur.certainly_gt(nxt))) {
                    if (!(nxt.certainly_gt(e)) && nxt.certainly_le(e)) return 0;
                    if (!cur.certainly_gt(nxt) && cur.certainly_le(nxt)) return 0;
                    return -1;
                }
            }
            slack[i] = (detail::h2(x + 1, p) - e).lo_d();
            return 1;
        });
        if (st[i] == CheckStatus::FAIL)
            ce[i] = "h monotonicity fails at x=" + std::to_string(x);
    });
    rep.status = CheckStatus::PASS;
    rep.worst_slack = 1e300;
    for (std::size_t i = 0; i < x_max; ++i) {
        if (st[i] == CheckStatus::FAIL) {
            rep.status = CheckStatus::FAIL;
            rep.counterexample = ce[i];
            break;
        }
        if (st[i] == CheckStatus::UNDECIDED && rep.status == CheckStatus::PASS)
            rep.status = CheckStatus::UNDECIDED;
        rep.worst_slack = std::min(rep.worst_slack, slack[i]);
    }
    return rep;
}

// Factorial bound: (k+1)! <= 2 k^{k+3/2} / e^{k-1}, squared so the right side
// is rational and the k=1 equality boundary is exact.
inline LemmaReport verify_factorial_bound(unsigned long k_max, unsigned workers = 1) {
    LemmaReport rep{LemmaId::FACT_BOUND, "k in 1.." + std::to_string(k_max)};
    std::vector<CheckStatus> st(k_max, CheckStatus::UNDECIDED);
    std::vector<double> slack(k_max, 0.0);
    parallel_for_index(k_max, workers, [&](std::size_t i) {
        const unsigned long k = i + 1;
        // e^{2k-2} <= 4 k^{2k+3} / ((k+1)!)^2
        BigRat rhs(4 * pow_nat(k, 2 * k + 3), pow_nat(factorial(k + 1), 2));
        st[i] = detail::escalate([&](mpfr_prec_t p) -> int {
            RealInterval e2 = RealInterval::exact(2 * (long)k - 2, p).exp();
            if (e2.certainly_le_rat(rhs)) return 1;
            if (e2.certainly_ge_rat(rhs) && !e2.contains_rat(rhs)) return 0;
            return -1;
        });
        slack[i] = std::log(rhs.get_d()) - (2.0 * (double)k - 2.0);
    });
    rep.status = CheckStatus::PASS;
    rep.worst_slack = 1e300;
    for (std::size_t i = 0; i < k_max; ++i) {
        if (st[i] == CheckStatus::FAIL) {
            rep.status = CheckStatus::FAIL;
            rep.counterexample = "factorial bound fails at k=" + std::to_string(i + 1);
            break;
        }
        if (st[i] == CheckStatus::UNDECIDED && rep.status == CheckStatus::PASS)
            rep.status = CheckStatus::UNDECIDED;
        rep.worst_slack = std::min(rep.worst_slack, slack[i]);
    }
    return rep;
}

// Binomial bound: C(k+n,k) >= (1/(2 sqrt 2)) (k+n)^{k+n+1/2} / (k^{k+1/2} n^{n+1/2}),
// squared into a pure big-integer comparison (exact at the k=1 boundary).
inline LemmaReport verify_binomial_bound(unsigned long k_max, unsigned long n_max,
                                         unsigned workers = 1) {
    LemmaReport rep{LemmaId::BINOM_BOUND,
                    "k,n in 1.." + std::to_string(k_max) + "x" + std::to_string(n_max)};
    std::vector<int> ok(k_max * n_max, 1);
    parallel_for_index(k_max, workers, [&](std::size_t i) {
        const unsigned long k = i + 1;
        for (unsigned long n = 1; n <= n_max; ++n) {
            BigNat lhs = 8 * pow_nat(binomial(k + n, k), 2) * pow_nat(k, 2 * k + 1) *
                         pow_nat(n, 2 * n + 1);
            BigNat rhs = pow_nat(k + n, 2 * (k + n) + 1);
            ok[i * n_max + (n - 1)] = (lhs >= rhs) ? 1 : 0;
        }
    });
    rep.status = CheckStatus::PASS;
    for (std::size_t j = 0; j < ok.size(); ++j) {
        if (!ok[j]) {
            rep.status = CheckStatus::FAIL;
            rep.counterexample = "binomial bound fails at k=" + std::to_string(j / n_max + 1) +
                                 " n=" + std::to_string(j % n_max + 1);
            break;
        }
    }
    rep.worst_slack = 0.0; // equality at k=1, n=1
    return rep;
}

// Lemma: sum of p(n) for n <= y is at most y exp(pi sqrt(2y/3)).
inline LemmaReport verify_maxp(unsigned long y_max, unsigned workers = 1) {
    LemmaReport rep{LemmaId::MAXP, "y in 1.." + std::to_string(y_max)};
    partition_number(y_max); // warm the table once
    std::vector<CheckStatus> st(y_max, CheckStatus::UNDECIDED);
    std::vector<BigNat> sums(y_max + 1);
    sums[0] = 0;
    for (unsigned long n = 1; n <= y_max; ++n) sums[n] = sums[n - 1] + partition_number(n);
    parallel_for_index(y_max, workers, [&](std::size_t i) {
        const unsigned long y = i + 1;
        st[i] = detail::escalate([&](mpfr_prec_t p) -> int {
            RealInterval arg = (RealInterval::exact(2 * (long)y, p) /
                               RealInterval::exact(3, p)).sqrt() * RealInterval::pi(p);
            RealInterval bound = RealInterval::exact((long)y, p) * arg.exp();
            RealInterval lhs = RealInterval::from_nat(sums[y], p);
            if (lhs.certainly_le(bound)) return 1;
            if (lhs.certainly_gt(bound)) return 0;
            return -1;
        });
    });
    rep.status = CheckStatus::PASS;
    for (std::size_t i = 0; i < y_max; ++i) {
        if (st[i] == CheckStatus::FAIL) {
            rep.status = CheckStatus::FAIL;
            rep.counterexample = "tuple-count bound fails at y=" + std::to_string(i + 1);
            break;
        }
        if (st[i] == CheckStatus::UNDECIDED && rep.status == CheckStatus::PASS)
            rep.status = CheckStatus::UNDECIDED;
    }
    return rep;
}

// p(n) <= exp(pi sqrt(2n/3)) for n <= n_max.
inline LemmaReport verify_p_upper(unsigned long n_max, unsigned workers = 1) {
    LemmaReport rep{LemmaId::P_UPPER, "n in 1.." + std::to_string(n_max)};
    partition_number(n_max);
    std::vector<CheckStatus> st(n_max, CheckStatus::UNDECIDED);
    parallel_for_index(n_max, workers, [&](std::size_t i) {
        const unsigned long n = i + 1;
        BigNat pn = partition_number(n);
        st[i] = detail::escalate([&](mpfr_prec_t p) -> int {
            RealInterval arg = (RealInterval::exact(2 * (long)n, p) /
                               RealInterval::exact(3, p)).sqrt() * RealInterval::pi(p);
            RealInterval bound = arg.exp();
            RealInterval lhs = RealInterval::from_nat(pn, p);
            if (lhs.certainly_le(bound)) return 1;
            if (lhs.certainly_gt(bound)) return 0;
            return -1;
        });
    });
    rep.status = CheckStatus::PASS;
    for (std::size_t i = 0; i < n_max; ++i) {
        if (st[i] == CheckStatus::FAIL) {
            rep.status = CheckStatus::FAIL;
            rep.counterexample = "p upper bound fails at n=" + std::to_string(i + 1);
            break;
        }
        if (st[i] == CheckStatus::UNDECIDED && rep.status == CheckStatus::PASS)
            rep.status = CheckStatus::UNDECIDED;
    }
    return rep;
}

// p(n) >= exp(2 sqrt n)/14 for n <= n_max.
inline LemmaReport verify_p_lower(unsigned long n_max, unsigned workers = 1) {
    LemmaReport rep{LemmaId::P_LOWER, "n in 1.." + std::to_string(n_max)};
    partition_number(n_max);
    std::vector<CheckStatus> st(n_max, CheckStatus::UNDECIDED);
    parallel_for_index(n_max, workers, [&](std::size_t i) {
        const unsigned long n = i + 1;
        BigNat pn = partition_number(n);
        st[i] = detail::escalate([&](mpfr_prec_t p) -> int {
            RealInterval bound =
                (RealInterval::exact(2, p) * RealInterval::exact((long)n, p).sqrt()).exp() /
                RealInterval::exact(14, p);
            RealInterval lhs = RealInterval::from_nat(pn, p);
            if (lhs.certainly_ge(bound)) return 1;
            if (lhs.certainly_lt(bound)) return 0;
            return -1;
        });
    });
    rep.status = CheckStatus::PASS;
    for (std::size_t i = 0; i < n_max; ++i) {
        if (st[i] == CheckStatus::FAIL) {
            rep.status = CheckStatus::FAIL;
            rep.counterexample = "p lower bound fails at n=" + std::to_string(i + 1);
            break;
        }
        if (st[i] == CheckStatus::UNDECIDED && rep.status == CheckStatus::PASS)
            rep.status = CheckStatus::UNDECIDED;
    }
    return rep;
}

// Per-alpha bound report: both lower bounds against the exact count.
inline BoundReport bound_report(const Alpha& alpha, double tail_tol = 1e-9,
                                mpfr_prec_t prec = kDefaultPrec, bool with_exact = true) {
    BoundContext ctx = floor_N(alpha, prec);
    BoundReport rep{alpha, closed_form_lower_bound(ctx, prec), hypergeom_lower_bound(alpha, tail_tol, prec)};
    if (with_exact) {
        rep.exact_p = count_vpartitions(alpha);
        rep.has_exact = true;
        const bool all_ones = std::all_of(alpha.comps.begin(), alpha.comps.end(),
                                          [](unsigned c) { return c == 1; });
        rep.pass = rep.closed_form_lower.certainly_le_nat(rep.exact_p) &&
                   (all_ones ? rep.hypergeom_lower.contains_nat(rep.exact_p)
                             : rep.hypergeom_lower.certainly_le_nat(rep.exact_p));
        double best = std::max(rep.closed_form_lower.lo_d(), rep.hypergeom_lower.lo_d());
        rep.slack_log = std::log(rep.exact_p.get_d()) - std::log(best);
    }
    return rep;
}

// Grid sweep: sandwich, product and term inequalities, soundness of both lower bounds, and
// dominance of the single term T(alpha,N)/e, for every canonical alpha
// with component sum <= sum_max.
inline LemmaReport verify_sandwich_grid(unsigned sum_max, double tail_tol = 1e-9,
                                        unsigned workers = 1) {
    LemmaReport rep{LemmaId::SANDWICH, "alpha sum <= " + std::to_string(sum_max)};
    auto grid = canonical_alphas_with_sum_at_most(sum_max);
    std::vector<CheckStatus> st(grid.size(), CheckStatus::UNDECIDED);
    std::vector<std::string> ce(grid.size());
    parallel_for_index(grid.size(), workers, [&](std::size_t i) {
        const Alpha& a = grid[i];
        BoundContext ctx = floor_N(a);
        // sandwich in exact rationals
        if (!(g_rational(a, BigRat((long)ctx.n_floor)) <= 1 &&
              g_rational(a, BigRat((long)ctx.n_floor + 1)) >= 1)) {
            st[i] = CheckStatus::FAIL;
            ce[i] = "sandwich fails";
            return;
        }
        LemmaReport eq = term_inequality_check(ctx);
        if (eq.status != CheckStatus::PASS) {
            st[i] = eq.status;
            ce[i] = eq.counterexample;
            return;
        }
        BigNat p = count_vpartitions(a);
        RealInterval hyper = hypergeom_lower_bound(a, tail_tol);
        RealInterval propa = closed_form_lower_bound(ctx);
        const bool all_ones =
            std::all_of(a.comps.begin(), a.comps.end(), [](unsigned c) { return c == 1; });
        if (all_ones) {
            // equality case: the series sums to p exactly, so the enclosure
            // must contain it; a one-sided check cannot hold here
            if (!hyper.contains_nat(p)) {
                st[i] = CheckStatus::FAIL;
                ce[i] = "hypergeometric enclosure misses exact count (equality case)";
                return;
            }
        } else if (!hyper.certainly_le_nat(p)) {
            st[i] = CheckStatus::FAIL;
            ce[i] = "hypergeometric bound exceeds exact count";
            return;
        }
        if (!propa.certainly_le_nat(p)) {
            st[i] = CheckStatus::FAIL;
            ce[i] = "closed-form bound exceeds exact count";
            return;
        }
        // single-term dominance: T(alpha,N)/e never exceeds the series value
        RealInterval tN =
            RealInterval::from_rat(term_T(a, ctx.n_floor)) / RealInterval::e();
        if (!tN.certainly_le(hyper)) {
            // widen precision once before declaring failure
            RealInterval tN2 = RealInterval::from_rat(term_T(a, ctx.n_floor), 512) /
                               RealInterval::e(512);
            RealInterval hyper2 = hypergeom_lower_bound(a, tail_tol, 512);
            if (!tN2.certainly_le(hyper2)) {
                st[i] = CheckStatus::FAIL;
                ce[i] = "term dominance fails";
                return;
            }
        }
        st[i] = CheckStatus::PASS;
    });
    rep.status = CheckStatus::PASS;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (st[i] == CheckStatus::FAIL) {
            rep.status = CheckStatus::FAIL;
            rep.counterexample = ce[i] + " at alpha index " + std::to_string(i);
            break;
        }
        if (st[i] == CheckStatus::UNDECIDED && rep.status == CheckStatus::PASS)
            rep.status = CheckStatus::UNDECIDED;
    }
    return rep;
}

} // namespace facto
