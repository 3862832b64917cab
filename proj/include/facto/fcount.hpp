#pragma once

// Exhaustive enumeration of {alpha canonical : p(alpha) <= x}, the distinct
// value set, the growth-rate diagnostics, and the experiment over the
// constrained set S.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "facto/bignum.hpp"
#include "facto/errors.hpp"
#include "facto/vector_partitions.hpp"

namespace facto {

inline constexpr double kGrowthConstant = 5.130199320647456; // 2 pi sqrt(2/3)

struct FeasibleSet {
    BigNat x;
    std::vector<Alpha> alphas;
    bool complete = true;
};

struct DistinctValues {
    std::vector<BigNat> values; // sorted, deduplicated
};

struct SpectrumReport {
    BigNat x;
    std::size_t distinct_count = 0;
    std::size_t tuple_count = 0;
    double theorem_bound_value = 0;
    double prior_bound_value = 0;
    double ratio_log = 0;
    bool asymptotics_defined = false; // x > e^e
    bool complete = true;
};

struct ConjectureSReport {
    double x = 0;
    double B = 0;
    BigNat s_size;
    BigNat distinct_p_on_s;
};

namespace detail {

inline void feasible_dfs(std::vector<unsigned>& tuple, const BigNat& x, FeasibleSet& out,
                         std::uint64_t& budget) {
    Alpha a{tuple};
    if (count_vpartitions(a) > x) return;
    if (budget == 0) {
        out.complete = false;
        return;
    }
    --budget;
    out.alphas.push_back(a);
    // child 1: increment the last component
    ++tuple.back();
    feasible_dfs(tuple, x, out, budget);
    --tuple.back();
    // child 2: append a copy of the last component
    tuple.push_back(tuple.back());
    feasible_dfs(tuple, x, out, budget);
    tuple.pop_back();
}

} // namespace detail

// Complete DFS over canonical tuples; a branch is cut as soon as
// p(alpha) > x, justified by strict monotonicity of p under component
// increments and appends.
inline FeasibleSet enumerate_feasible(const BigNat& x, std::uint64_t node_budget = 10'000'000) {
    if (x < 1) throw invalid_input("enumerate_feasible requires x >= 1");
    FeasibleSet out;
    out.x = x;
    std::vector<unsigned> tuple{1};
    detail::feasible_dfs(tuple, x, out, node_budget);
    return out;
}

inline DistinctValues distinct_values(const FeasibleSet& fs) {
    if (!fs.complete) throw invalid_input("distinct_values: feasible set is incomplete");
    std::set<BigNat> vals;
    for (const Alpha& a : fs.alphas) vals.insert(count_vpartitions(a));
    return DistinctValues{std::vector<BigNat>(vals.begin(), vals.end())};
}

// exp(C sqrt(log x / log log x)), leading factor of the growth-rate bound.
inline double theorem_bound(double x) {
    const double lx = std::log(x);
    if (!(lx > 1)) throw invalid_input("theorem_bound requires x > e^e");
    const double llx = std::log(lx);
    if (!(std::log(llx) > 0)) throw invalid_input("theorem_bound requires x > e^e");
    return std::exp(kGrowthConstant * std::sqrt(lx / llx));
}

// exp(9 (log x)^{2/3}), the prior comparison curve.
inline double prior_bound(double x) {
    if (!(x >= 1)) throw invalid_input("prior_bound requires x >= 1");
    return std::exp(9.0 * std::pow(std::log(x), 2.0 / 3.0));
}

inline SpectrumReport spectrum(const BigNat& x, std::uint64_t node_budget = 10'000'000) {
    FeasibleSet fs = enumerate_feasible(x, node_budget);
    SpectrumReport rep;
    rep.x = x;
    rep.tuple_count = fs.alphas.size();
    rep.complete = fs.complete;
    if (fs.complete) rep.distinct_count = distinct_values(fs).values.size();
    const double xd = x.get_d();
    const double lx = std::log(xd);
    if (lx > std::exp(1.0)) { // defined only past x = e^e
        rep.asymptotics_defined = true;
        rep.theorem_bound_value = theorem_bound(xd);
        rep.prior_bound_value = prior_bound(xd);
        rep.ratio_log = std::log((double)rep.distinct_count) /
                        (kGrowthConstant * std::sqrt(lx / std::log(lx)));
    }
    return rep;
}

// The set S = {alpha : alpha_i <= sqrt(log x), sum alpha_i <= B log x / log log x},
// enumerated exactly, with the number of distinct p values on it.
inline ConjectureSReport conjecture_S(double x, double B, std::uint64_t budget = 10'000'000) {
    const double lx = std::log(x);
    if (!(lx > 1) || !(std::log(lx) > 0) || !(std::log(std::log(lx)) > 0))
        throw invalid_input("conjecture_S requires x > e^e");
    if (!(B > 0)) throw invalid_input("conjecture_S requires B > 0");
    ConjectureSReport rep;
    rep.x = x;
    rep.B = B;
    const unsigned a_max = (unsigned)std::floor(std::sqrt(lx));
    const unsigned s_max = (unsigned)std::floor(B * lx / std::log(lx));
    if (a_max < 1) {
        rep.s_size = 0;
        rep.distinct_p_on_s = 0;
        return rep;
    }
    std::set<BigNat> vals;
    BigNat count = 0;
    std::vector<unsigned> cur;
    std::uint64_t nodes = 0;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned minc) {
        if (!cur.empty()) {
            if (++nodes > budget) throw budget_exceeded("conjecture_S enumeration budget");
            ++count;
            vals.insert(count_vpartitions(Alpha{cur}));
        }
        for (unsigned c = minc; c <= std::min(remaining, a_max); ++c) {
            cur.push_back(c);
            rec(remaining - c, c);
            cur.pop_back();
        }
    };
    rec(s_max, 1);
    rep.s_size = count;
    rep.distinct_p_on_s = (long)vals.size();
    return rep;
}

// Independent spot check for the value set: every f(n) for n <= n_max with
// value <= cap, computed through exponent signatures from a
// smallest-prime-factor sieve.
inline std::set<BigNat> scan_f_values(std::uint32_t n_max, const BigNat& cap) {
    std::vector<std::uint32_t> spf(n_max + 1, 0);
    for (std::uint32_t i = 2; i <= n_max; ++i) {
        if (spf[i] != 0) continue;
        for (std::uint64_t j = i; j <= n_max; j += i)
            if (spf[j] == 0) spf[j] = i;
    }
    std::set<BigNat> out;
    std::map<std::vector<unsigned>, BigNat> by_sig; // direct recursion, one per signature
    for (std::uint32_t n = 2; n <= n_max; ++n) {
        std::vector<unsigned> sig;
        std::uint32_t m = n;
        while (m > 1) {
            std::uint32_t p = spf[m];
            unsigned e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            sig.push_back(e);
        }
        std::sort(sig.begin(), sig.end());
        auto it = by_sig.find(sig);
        if (it == by_sig.end())
            it = by_sig.emplace(sig, count_vpartitions_direct(Alpha{sig})).first;
        if (it->second <= cap) out.insert(it->second);
    }
    out.insert(1); // f(prime) = 1, and f(1) = 1
    return out;
}

} // namespace facto
