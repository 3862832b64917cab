#pragma once

// Independent brute-force oracles for the test suite. These deliberately
// avoid the library's counting paths.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

#include "facto/bignum.hpp"

namespace oracles {

// Number of integer partitions of n, by exhaustive recursion over
// nonincreasing part lists.
inline facto::BigNat brute_partition_count(unsigned n, unsigned max_part) {
    if (n == 0) return 1;
    facto::BigNat total = 0;
    for (unsigned p = std::min(n, max_part); p >= 1; --p) total += brute_partition_count(n - p, p);
    return total;
}

inline facto::BigNat brute_partition_count(unsigned n) { return brute_partition_count(n, n == 0 ? 1 : n); }

// Number of set partitions of {1..r}, by enumerating restricted growth
// strings.
inline facto::BigNat brute_set_partition_count(unsigned r) {
    std::vector<unsigned> rgs(r, 0);
    facto::BigNat count = 0;
    // rgs[i] <= 1 + max(rgs[0..i-1])
    std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned maxv) {
        if (i == r) {
            ++count;
            return;
        }
        for (unsigned v = 0; v <= maxv + 1; ++v) {
            rgs[i] = v;
            rec(i + 1, std::max(maxv, v));
        }
    };
    if (r == 0) return 1;
    rgs[0] = 0;
    rec(1, 0);
    return count;
}

} // namespace oracles
