#ifndef LGCY_SERIES_HPP
#define LGCY_SERIES_HPP

#include "lgcy/complexhp.hpp"
#include "lgcy/mupoly.hpp"
#include "lgcy/rational.hpp"

#include <atomic>
#include <type_traits>
#include <functional>
#include <stdexcept>
#include <vector>

namespace lgcy {

// Count of binary operations that silently narrowed the truncation order.
// Suites snapshot this into the run report; a nonzero delta flags a
// mixed-order computation.
inline std::atomic<long>& narrowing_events() {
    static std::atomic<long> n{0};
    return n;
}

template <class K> struct ring {
    static bool is_zero(const K& x) { return x.is_zero(); }
    static K from_rat(const Rat& q, const K& ctx);
    static K inv(const K& x) { return x.inv(); }
    static K merge_ctx(const K& a, const K& b);
};

template <> struct ring<Rat> {
    static bool is_zero(const Rat& x) { return x == 0; }
    static Rat from_rat(const Rat& q, const Rat&) { return q; }
    static Rat inv(const Rat& x) {
        if (x == 0) throw std::domain_error("ring<Rat>: inverse of zero");
        return Rat(1) / x;
    }
    static Rat merge_ctx(const Rat&, const Rat&) { return Rat(0); }
};

template <> struct ring<MuPoly> {
    static bool is_zero(const MuPoly& x) { return x.is_zero(); }
    static MuPoly from_rat(const Rat& q, const MuPoly& ctx) { return MuPoly(q, ctx.cap()); }
    static MuPoly inv(const MuPoly& x) { return x.inv(); }
    static MuPoly merge_ctx(const MuPoly& a, const MuPoly& b) {
        return MuPoly(Rat(0), std::min(a.cap(), b.cap()));
    }
};

template <> struct ring<Complex> {
    static bool is_zero(const Complex& x) { return x.is_zero(); }
    static Complex from_rat(const Rat& q, const Complex& ctx) {
        return Complex::of(q, std::max<mpfr_prec_t>(ctx.prec(), 64));
    }
    static Complex inv(const Complex& x) { return x.inv(); }
    static Complex merge_ctx(const Complex& a, const Complex& b) {
        return Complex(std::max(a.prec(), b.prec()));
    }
};

// Truncated power series: coefficients of x^0..x^order are stored and exact
// (up to the scalar ring's own rounding); everything above is unknown.
template <class K> class Series {
public:
    Series() : order_(-1) {}
    explicit Series(int order, const K& ctx = K{}) : order_(order), c_(order + 1, K{}), ctx_(ctx) {}

    static Series constant(const K& v, int order) {
        Series s(order, v);
        if (order >= 0) s.c_[0] = v;
        return s;
    }
    static Series one(int order, const K& ctx = K{}) {
        return constant(ring<K>::from_rat(Rat(1), ctx), order);
    }
    // c * x^k
    static Series monomial(const K& v, int k, int order) {
        Series s(order, v);
        if (k <= order) s.c_[k] = v;
        return s;
    }

    int order() const { return order_; }
    const K& ctx() const { return ctx_; }

    const K& operator[](int n) const {
        static const K zero{};
        if (n < 0 || n > order_) return zero;
        return c_[n];
    }
    K& at(int n) {
        if (n < 0 || n > order_) throw std::out_of_range("Series::at");
        return c_[n];
    }

    bool is_zero() const {
        for (const auto& c : c_)
            if (!ring<K>::is_zero(c)) return false;
        return true;
    }

    friend Series operator+(const Series& a, const Series& b) {
        Series r = make_like(a, b);
        for (int n = 0; n <= r.order_; ++n) r.c_[n] = a[n] + b[n];
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) {
        Series r = make_like(a, b);
        for (int n = 0; n <= r.order_; ++n) r.c_[n] = a[n] - b[n];
        return r;
    }
    Series operator-() const {
        Series r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend Series operator*(const Series& a, const Series& b) {
        Series r = make_like(a, b);
        for (int i = 0; i <= r.order_; ++i) {
            if (ring<K>::is_zero(a[i])) continue;
            for (int j = 0; i + j <= r.order_; ++j) {
                if (ring<K>::is_zero(b[j])) continue;
                r.c_[i + j] = r.c_[i + j] + a[i] * b[j];
            }
        }
        return r;
    }

    Series& operator+=(const Series& b) { return *this = *this + b; }
    Series& operator-=(const Series& b) { return *this = *this - b; }
    Series& operator*=(const Series& b) { return *this = *this * b; }

    Series scaled(const K& s) const {
        Series r = *this;
        for (auto& c : r.c_) c = c * s;
        return r;
    }
    template <class Q = K, class = std::enable_if_t<!std::is_same_v<Q, Rat>>>
    Series scaled(const Rat& q) const {
        return scaled(ring<K>::from_rat(q, ctx_));
    }

    // Long division; the divisor's constant term must be invertible.
    friend Series operator/(const Series& a, const Series& b) {
        Series r = make_like(a, b);
        K b0inv = ring<K>::inv(b[0]);
        for (int n = 0; n <= r.order_; ++n) {
            K s = a[n];
            for (int k = 1; k <= n; ++k) s = s - b[k] * r.c_[n - k];
            r.c_[n] = s * b0inv;
        }
        return r;
    }

    Series inverted() const { return one(order_, ctx_) / *this; }

    // d/dx (order drops by one).
    Series derivative() const {
        Series r(order_ - 1, ctx_);
        for (int n = 0; n + 1 <= order_; ++n)
            r.c_[n] = ring<K>::from_rat(Rat(n + 1), ctx_) * c_[n + 1];
        return r;
    }

    // x d/dx (order preserved).
    Series euler_derivative() const {
        Series r(order_, ctx_);
        for (int n = 1; n <= order_; ++n) r.c_[n] = ring<K>::from_rat(Rat(n), ctx_) * c_[n];
        return r;
    }

    // multiply by x^k
    Series shifted_up(int k) const {
        Series r(order_ + k, ctx_);
        for (int n = 0; n <= order_; ++n) r.c_[n + k] = c_[n];
        return r;
    }

    // exact division by x^k; the low coefficients must vanish
    Series shifted_down(int k) const {
        for (int n = 0; n < k && n <= order_; ++n)
            if (!ring<K>::is_zero(c_[n]))
                throw std::domain_error("Series: not divisible by x^k");
        Series r(order_ - k, ctx_);
        for (int n = 0; n <= r.order_; ++n) r.c_[n] = (*this)[n + k];
        return r;
    }

    Series truncated(int order) const {
        Series r(std::min(order, order_), ctx_);
        for (int n = 0; n <= r.order_; ++n) r.c_[n] = c_[n];
        return r;
    }

private:
    static Series make_like(const Series& a, const Series& b) {
        if (a.order_ != b.order_) narrowing_events()++;
        return Series(std::min(a.order_, b.order_), ring<K>::merge_ctx(a.ctx_, b.ctx_));
    }

    int order_;
    std::vector<K> c_;
    K ctx_;
};

// exp of a series with zero constant term
template <class K> Series<K> series_exp(const Series<K>& f) {
    if (!ring<K>::is_zero(f[0]))
        throw std::domain_error("series_exp: nonzero constant term");
    Series<K> e = Series<K>::one(f.order(), f.ctx());
    for (int n = 1; n <= f.order(); ++n) {
        K s{};
        for (int k = 1; k <= n; ++k) s = s + ring<K>::from_rat(Rat(k), f.ctx()) * f[k] * e[n - k];
        e.at(n) = ring<K>::from_rat(Rat(1, n), f.ctx()) * s;
    }
    return e;
}

// log of a series with constant term 1
template <class K> Series<K> series_log(const Series<K>& f) {
    K delta = f[0] - ring<K>::from_rat(Rat(1), f.ctx());
    if (!ring<K>::is_zero(delta))
        throw std::domain_error("series_log: constant term is not 1");
    Series<K> fp = f.derivative();
    Series<K> g = fp / f.truncated(f.order() - 1); // (log f)' to order N-1
    Series<K> l(f.order(), f.ctx());
    for (int n = 1; n <= f.order(); ++n)
        l.at(n) = ring<K>::from_rat(Rat(1, n), f.ctx()) * g[n - 1];
    return l;
}

// f^alpha for constant term 1, alpha rational
template <class K> Series<K> series_pow(const Series<K>& f, const Rat& alpha) {
    return series_exp(series_log(f).scaled(alpha));
}

// f'/f as a series of one lower order
template <class K> Series<K> series_dlog(const Series<K>& f) {
    return f.derivative() / f.truncated(f.order() - 1);
}

// (x d/dx f)/f, order preserved
template <class K> Series<K> series_euler_dlog(const Series<K>& f) {
    return f.euler_derivative() / f;
}

// sum_m binom(m+j-2, m) T0^m  ==  (1-T0)^{1-j}; T0 must have zero constant
// term, j >= 2.
template <class K> Series<K> geometric_binomial_sum(const Series<K>& t0, long j) {
    if (j < 2) throw std::invalid_argument("geometric_binomial_sum: j < 2");
    if (!ring<K>::is_zero(t0[0]))
        throw std::domain_error("geometric_binomial_sum: nonzero constant term");
    int n = t0.order();
    Series<K> acc = Series<K>::one(n, t0.ctx());
    Series<K> pw = Series<K>::one(n, t0.ctx());
    for (int m = 1; m <= n; ++m) {
        pw *= t0;
        Rat coef(binomial(static_cast<unsigned long>(m + j - 2), static_cast<unsigned long>(m)));
        acc += pw.scaled(coef);
    }
    return acc;
}

inline Series<Complex> to_complex(const Series<Rat>& s, mpfr_prec_t prec) {
    Series<Complex> r(s.order(), Complex(prec));
    for (int n = 0; n <= s.order(); ++n) r.at(n) = Complex::of(s[n], prec);
    return r;
}

inline Series<Rat> at_mu_zero(const Series<MuPoly>& s) {
    Series<Rat> r(s.order());
    for (int n = 0; n <= s.order(); ++n) r.at(n) = s[n].at_mu_zero();
    return r;
}

inline Series<MuPoly> lift_mu(const Series<Rat>& s, int cap) {
    Series<MuPoly> r(s.order(), MuPoly(Rat(0), cap));
    for (int n = 0; n <= s.order(); ++n) r.at(n) = MuPoly(s[n], cap);
    return r;
}

// Smallest mu-valuation over all coefficients; 0 for the zero series.
inline int mu_valuation(const Series<MuPoly>& s) {
    int v = MuPoly::kNoCap;
    for (int n = 0; n <= s.order(); ++n)
        if (!s[n].is_zero()) v = std::min(v, s[n].mu_valuation());
    return v == MuPoly::kNoCap ? 0 : v;
}

inline Series<MuPoly> mu_shift_down(const Series<MuPoly>& s, int k) {
    Series<MuPoly> r(s.order(), s.ctx());
    for (int n = 0; n <= s.order(); ++n) r.at(n) = s[n].shift_down(k);
    return r;
}

inline Series<MuPoly> mu_shift_up(const Series<MuPoly>& s, int k) {
    Series<MuPoly> r(s.order(), s.ctx());
    for (int n = 0; n <= s.order(); ++n) r.at(n) = s[n].shift_up(k);
    return r;
}

// Horner evaluation of a rational series at a complex point.
inline Complex eval_series(const Series<Rat>& s, const Complex& x) {
    Complex acc(x.prec());
    for (int n = s.order(); n >= 0; --n) acc = acc * x + Complex::of(s[n], x.prec());
    return acc;
}

inline Complex eval_series(const Series<Complex>& s, const Complex& x) {
    Complex acc(x.prec());
    for (int n = s.order(); n >= 0; --n) acc = acc * x + s[n];
    return acc;
}

} // namespace lgcy

#endif
