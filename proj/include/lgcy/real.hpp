#ifndef LGCY_REAL_HPP
#define LGCY_REAL_HPP

#include "lgcy/rational.hpp"

#include <mpfr.h>
#include <string>
#include <utility>

namespace lgcy {

// Arbitrary-precision binary float (MPFR, round-to-nearest). Each value
// carries its working precision; binary operations compute at the precision
// of the widest operand, so exact small-precision values (integers, zero)
// never narrow a computation.
class Real {
public:
    explicit Real(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, 64);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real of(long n, mpfr_prec_t prec = 64) {
        Real r(prec);
        mpfr_set_si(r.v_, n, MPFR_RNDN);
        return r;
    }
    static Real of(int n, mpfr_prec_t prec = 64) { return of(static_cast<long>(n), prec); }
    static Real of(const Rat& q, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static Real parse(const std::string& s, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_); }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    friend Real operator+(const Real& a, const Real& b) { return bin(mpfr_add, a, b); }
    friend Real operator-(const Real& a, const Real& b) { return bin(mpfr_sub, a, b); }
    friend Real operator*(const Real& a, const Real& b) { return bin(mpfr_mul, a, b); }
    friend Real operator/(const Real& a, const Real& b) { return bin(mpfr_div, a, b); }

    Real operator-() const {
        Real r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    Real& operator+=(const Real& b) { return *this = *this + b; }
    Real& operator-=(const Real& b) { return *this = *this - b; }
    Real& operator*=(const Real& b) { return *this = *this * b; }
    Real& operator/=(const Real& b) { return *this = *this / b; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

    Real abs() const {
        Real r(prec());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }
    Real sqrt() const { return un(mpfr_sqrt, *this); }
    Real exp() const { return un(mpfr_exp, *this); }
    Real log() const { return un(mpfr_log, *this); }
    Real sin() const { return un(mpfr_sin, *this); }
    Real cos() const { return un(mpfr_cos, *this); }

    static Real hypot(const Real& a, const Real& b) { return bin(mpfr_hypot, a, b); }
    static Real atan2(const Real& y, const Real& x) { return bin(mpfr_atan2, y, x); }

    static Real pi(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    static Real euler_gamma(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_euler(r.v_, MPFR_RNDN);
        return r;
    }
    static Real zeta_ui(unsigned long k, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_zeta_ui(r.v_, k, MPFR_RNDN);
        return r;
    }
    static Real gamma(const Real& x) { return un(mpfr_gamma, x); }

    static Real pow2(long e, mpfr_prec_t prec = 64) {
        Real r(prec);
        mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }

    // Fixed scientific format; digits independent of precision so reports
    // stay byte-stable across runs.
    std::string str(int digits = 40) const {
        char buf[512];
        mpfr_snprintf(buf, sizeof buf, "%.*Re", digits, v_);
        return buf;
    }

private:
    using BinOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    using UnOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

    static Real bin(BinOp f, const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        f(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    static Real un(UnOp f, const Real& a) {
        Real r(a.prec());
        f(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;
};

} // namespace lgcy

#endif
