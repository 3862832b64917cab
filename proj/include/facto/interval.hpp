#pragma once

// Directed-rounded real enclosures over MPFR. Every operation returns an
// interval containing the exact result; inequality verdicts are read off
// with hi/lo comparisons only.

#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

#include "facto/bignum.hpp"
#include "facto/errors.hpp"

namespace facto {

inline constexpr mpfr_prec_t kDefaultPrec = 128;
inline constexpr mpfr_prec_t kPrecCap = 4096;

class RealInterval {
  public:
    explicit RealInterval(mpfr_prec_t prec = kDefaultPrec) {
        mpfr_init2(lo_, prec);
        mpfr_init2(hi_, prec);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }

    RealInterval(const RealInterval& o) {
        mpfr_init2(lo_, mpfr_get_prec(o.lo_));
        mpfr_init2(hi_, mpfr_get_prec(o.hi_));
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }

    RealInterval(RealInterval&& o) noexcept {
        mpfr_init2(lo_, 2);
        mpfr_init2(hi_, 2);
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }

    RealInterval& operator=(RealInterval o) noexcept {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        return *this;
    }

    ~RealInterval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    static RealInterval exact(long v, mpfr_prec_t prec = kDefaultPrec) {
        RealInterval r(prec);
        mpfr_set_si(r.lo_, v, MPFR_RNDD);
        mpfr_set_si(r.hi_, v, MPFR_RNDU);
        return r;
    }

    static RealInterval from_nat(const BigNat& n, mpfr_prec_t prec = kDefaultPrec) {
        RealInterval r(prec);
        mpfr_set_z(r.lo_, n.get_mpz_t(), MPFR_RNDD);
        mpfr_set_z(r.hi_, n.get_mpz_t(), MPFR_RNDU);
        return r;
    }

    static RealInterval from_rat(const BigRat& q, mpfr_prec_t prec = kDefaultPrec) {
        RealInterval r(prec);
        mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
        return r;
    }

    static RealInterval from_double(double v, mpfr_prec_t prec = kDefaultPrec) {
        RealInterval r(prec);
        mpfr_set_d(r.lo_, v, MPFR_RNDD);
        mpfr_set_d(r.hi_, v, MPFR_RNDU);
        return r;
    }

    // Euler's number at the given working precision.
    static RealInterval e(mpfr_prec_t prec = kDefaultPrec) {
        RealInterval one = exact(1, prec);
        return one.exp();
    }

    static RealInterval pi(mpfr_prec_t prec = kDefaultPrec) {
        RealInterval r(prec);
        mpfr_const_pi(r.lo_, MPFR_RNDD);
        mpfr_const_pi(r.hi_, MPFR_RNDU);
        return r;
    }

    // Smallest interval containing both arguments.
    static RealInterval hull(const RealInterval& a, const RealInterval& b) {
        RealInterval r(std::max(a.prec(), b.prec()));
        mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }
    const mpfr_t& lo() const { return lo_; }
    const mpfr_t& hi() const { return hi_; }

    double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    double mid_d() const { return 0.5 * (lo_d() + hi_d()); }

    bool contains_nat(const BigNat& n) const {
        return mpfr_cmp_z(lo_, n.get_mpz_t()) <= 0 && mpfr_cmp_z(hi_, n.get_mpz_t()) >= 0;
    }

    bool contains_rat(const BigRat& q) const {
        return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
    }

    // Certified comparisons: true only when the enclosures prove the claim.
    bool certainly_le(const RealInterval& o) const { return mpfr_cmp(hi_, o.lo_) <= 0; }
    bool certainly_lt(const RealInterval& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }
    bool certainly_ge(const RealInterval& o) const { return mpfr_cmp(lo_, o.hi_) >= 0; }
    bool certainly_gt(const RealInterval& o) const { return mpfr_cmp(lo_, o.hi_) > 0; }
    bool certainly_le_nat(const BigNat& n) const { return mpfr_cmp_z(hi_, n.get_mpz_t()) <= 0; }
    bool certainly_le_rat(const BigRat& q) const { return mpfr_cmp_q(hi_, q.get_mpq_t()) <= 0; }
    bool certainly_ge_rat(const BigRat& q) const { return mpfr_cmp_q(lo_, q.get_mpq_t()) >= 0; }
    bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }

    double width_d() const {
        mpfr_t w;
        mpfr_init2(w, prec());
        mpfr_sub(w, hi_, lo_, MPFR_RNDU);
        double d = mpfr_get_d(w, MPFR_RNDU);
        mpfr_clear(w);
        return d;
    }

    RealInterval operator+(const RealInterval& o) const {
        RealInterval r(wp(o));
        mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
        return r;
    }

    RealInterval operator-(const RealInterval& o) const {
        RealInterval r(wp(o));
        mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
        mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
        return r;
    }

    RealInterval operator-() const {
        RealInterval r(prec());
        mpfr_neg(r.lo_, hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
        return r;
    }

    RealInterval operator*(const RealInterval& o) const {
        RealInterval r(wp(o));
        mpfr_t c[4];
        for (auto& x : c) mpfr_init2(x, r.prec());
        mpfr_mul(c[0], lo_, o.lo_, MPFR_RNDD);
        mpfr_mul(c[1], lo_, o.hi_, MPFR_RNDD);
        mpfr_mul(c[2], hi_, o.lo_, MPFR_RNDD);
        mpfr_mul(c[3], hi_, o.hi_, MPFR_RNDD);
        mpfr_set(r.lo_, c[0], MPFR_RNDD);
        for (int i = 1; i < 4; ++i) mpfr_min(r.lo_, r.lo_, c[i], MPFR_RNDD);
        mpfr_mul(c[0], lo_, o.lo_, MPFR_RNDU);
        mpfr_mul(c[1], lo_, o.hi_, MPFR_RNDU);
        mpfr_mul(c[2], hi_, o.lo_, MPFR_RNDU);
        mpfr_mul(c[3], hi_, o.hi_, MPFR_RNDU);
        mpfr_set(r.hi_, c[0], MPFR_RNDU);
        for (int i = 1; i < 4; ++i) mpfr_max(r.hi_, r.hi_, c[i], MPFR_RNDU);
        for (auto& x : c) mpfr_clear(x);
        return r;
    }

    // Division requires the divisor interval to exclude zero.
    RealInterval operator/(const RealInterval& o) const {
        if (mpfr_sgn(o.lo_) <= 0 && mpfr_sgn(o.hi_) >= 0)
            throw invalid_input("interval division by an interval containing zero");
        RealInterval r(wp(o));
        mpfr_t c[4];
        for (auto& x : c) mpfr_init2(x, r.prec());
        mpfr_div(c[0], lo_, o.lo_, MPFR_RNDD);
        mpfr_div(c[1], lo_, o.hi_, MPFR_RNDD);
        mpfr_div(c[2], hi_, o.lo_, MPFR_RNDD);
        mpfr_div(c[3], hi_, o.hi_, MPFR_RNDD);
        mpfr_set(r.lo_, c[0], MPFR_RNDD);
        for (int i = 1; i < 4; ++i) mpfr_min(r.lo_, r.lo_, c[i], MPFR_RNDD);
        mpfr_div(c[0], lo_, o.lo_, MPFR_RNDU);
        mpfr_div(c[1], lo_, o.hi_, MPFR_RNDU);
        mpfr_div(c[2], hi_, o.lo_, MPFR_RNDU);
        mpfr_div(c[3], hi_, o.hi_, MPFR_RNDU);
        mpfr_set(r.hi_, c[0], MPFR_RNDU);
        for (int i = 1; i < 4; ++i) mpfr_max(r.hi_, r.hi_, c[i], MPFR_RNDU);
        for (auto& x : c) mpfr_clear(x);
        return r;
    }

    RealInterval sqrt() const {
        if (mpfr_sgn(lo_) < 0) throw invalid_input("sqrt of interval with negative lower end");
        RealInterval r(prec());
        mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
        mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
        return r;
    }

    RealInterval exp() const {
        RealInterval r(prec());
        mpfr_exp(r.lo_, lo_, MPFR_RNDD);
        mpfr_exp(r.hi_, hi_, MPFR_RNDU);
        return r;
    }

    RealInterval log() const {
        if (mpfr_sgn(lo_) <= 0) throw invalid_input("log of interval touching zero");
        RealInterval r(prec());
        mpfr_log(r.lo_, lo_, MPFR_RNDD);
        mpfr_log(r.hi_, hi_, MPFR_RNDU);
        return r;
    }

    // x^y for x with lo > 0, via exp(y * log x).
    RealInterval pow(const RealInterval& y) const { return (y * log()).exp(); }

    std::string lo_str() const { return str_of(lo_, MPFR_RNDD); }
    std::string hi_str() const { return str_of(hi_, MPFR_RNDU); }

  private:
    mpfr_prec_t wp(const RealInterval& o) const { return std::max(prec(), o.prec()); }

    static std::string str_of(const mpfr_t& v, mpfr_rnd_t rnd) {
        char* s = nullptr;
        if (mpfr_asprintf(&s, "%.*R*g", (int)(mpfr_get_prec(v) * 0.30103) + 2, rnd, v) < 0)
            return "?";
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    mpfr_t lo_;
    mpfr_t hi_;
};

} // namespace facto
