#pragma once

// Exact arithmetic carriers. BigNat/BigRat are thin aliases over GMP's C++
// classes; everything exact in the library flows through these.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace facto {

using BigNat = mpz_class; // nonnegative by convention of the producing ops
using BigInt = mpz_class;
using BigRat = mpq_class; // kept canonical by GMP (reduced, denominator > 0)

inline BigNat bignat_from_u64(std::uint64_t v) {
    BigNat z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return z;
}

inline std::string to_decimal(const BigNat& n) { return n.get_str(); }
inline std::string to_decimal(const BigRat& q) { return q.get_str(); }

inline BigNat factorial(unsigned long n) {
    BigNat r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigNat pow_nat(const BigNat& base, unsigned long e) {
    BigNat r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigNat pow_nat(unsigned long base, unsigned long e) {
    BigNat r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

} // namespace facto
