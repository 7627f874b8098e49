#ifndef LGCY_COMPLEXHP_HPP
#define LGCY_COMPLEXHP_HPP

#include "lgcy/real.hpp"

namespace lgcy {

// Complex numbers over Real. Comparisons are tolerance-based only; there is
// deliberately no operator== on values.
struct Complex {
    Real re, im;

    Complex() = default;
    explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    static Complex of(long n, mpfr_prec_t prec = 64) { return {Real::of(n, prec), Real(prec)}; }
    static Complex of(int n, mpfr_prec_t prec = 64) { return of(static_cast<long>(n), prec); }
    static Complex of(const Rat& q, mpfr_prec_t prec) { return {Real::of(q, prec), Real(prec)}; }
    static Complex of(const Real& r) { return {r, Real(r.prec())}; }
    static Complex i_times(const Real& r) { return {Real(r.prec()), r}; }

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    Complex operator-() const { return {-re, -im}; }

    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real d = b.re * b.re + b.im * b.im;
        if (d.is_zero()) throw std::domain_error("Complex: division by zero");
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }

    Complex& operator+=(const Complex& b) { return *this = *this + b; }
    Complex& operator-=(const Complex& b) { return *this = *this - b; }
    Complex& operator*=(const Complex& b) { return *this = *this * b; }
    Complex& operator/=(const Complex& b) { return *this = *this / b; }

    Complex conj() const { return {re, -im}; }
    Real abs() const { return Real::hypot(re, im); }

    Complex inv() const { return Complex::of(1, prec()) / *this; }

    Complex exp() const {
        Real e = re.exp();
        return {e * im.cos(), e * im.sin()};
    }
    // Principal branch: Im(log) in (-pi, pi].
    Complex log() const {
        if (is_zero()) throw std::domain_error("Complex: log of zero");
        return {abs().log(), Real::atan2(im, re)};
    }
    Real arg() const { return Real::atan2(im, re); }

    Complex pow_int(long e) const {
        Complex base = *this;
        if (e < 0) {
            base = base.inv();
            e = -e;
        }
        Complex r = Complex::of(1, prec());
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    static Complex from_polar(const Real& mod, const Real& theta) {
        return {mod * theta.cos(), mod * theta.sin()};
    }

    std::string str(int digits = 40) const {
        return "(" + re.str(digits) + ", " + im.str(digits) + ")";
    }
};

// exp(2 pi i k / n) at the requested precision.
inline Complex root_of_unity(long k, long n, mpfr_prec_t prec) {
    Real theta = Real::of(2 * k, prec) * Real::pi(prec) / Real::of(n, prec);
    return Complex::from_polar(Real::of(1, prec), theta);
}

} // namespace lgcy

#endif
