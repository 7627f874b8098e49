#ifndef LGCY_LOGSERIES_HPP
#define LGCY_LOGSERIES_HPP

#include "lgcy/series.hpp"

namespace lgcy {

// Polynomial in a formal logarithm ell with truncated-series coefficients.
// On the q-side ell stands for log q and the Euler derivation D = q d/dq
// acts with D(ell) = 1; the series algebra never evaluates ell.
template <class K> class LogSeries {
public:
    LogSeries() = default;
    explicit LogSeries(const Series<K>& f) : ell_{f} {}
    LogSeries(int order, int ell_degree, const K& ctx = K{})
        : ell_(ell_degree + 1, Series<K>(order, ctx)) {}

    int ell_degree() const { return static_cast<int>(ell_.size()) - 1; }
    int order() const { return ell_.empty() ? -1 : ell_[0].order(); }

    const Series<K>& coeff(int k) const {
        static const Series<K> zero;
        if (k < 0 || k >= static_cast<int>(ell_.size())) return zero;
        return ell_[k];
    }
    Series<K>& at(int k) { return ell_.at(k); }

    bool is_ell_free() const {
        for (int k = 1; k <= ell_degree(); ++k)
            if (!ell_[k].is_zero()) return false;
        return true;
    }
    bool is_zero() const {
        for (const auto& f : ell_)
            if (!f.is_zero()) return false;
        return true;
    }

    const Series<K>& ell_free_part() const { return coeff(0); }

    Series<K> require_ell_free() const {
        if (!is_ell_free()) throw std::domain_error("LogSeries: unexpected log terms");
        return coeff(0);
    }

    friend LogSeries operator+(const LogSeries& a, const LogSeries& b) {
        LogSeries r;
        int deg = std::max(a.ell_degree(), b.ell_degree());
        for (int k = 0; k <= deg; ++k) {
            if (k > a.ell_degree()) r.ell_.push_back(b.coeff(k));
            else if (k > b.ell_degree()) r.ell_.push_back(a.coeff(k));
            else r.ell_.push_back(a.coeff(k) + b.coeff(k));
        }
        r.trim();
        return r;
    }
    friend LogSeries operator-(const LogSeries& a, const LogSeries& b) { return a + (-b); }
    LogSeries operator-() const {
        LogSeries r = *this;
        for (auto& f : r.ell_) f = -f;
        return r;
    }

    friend LogSeries operator*(const LogSeries& a, const LogSeries& b) {
        LogSeries r;
        r.ell_.assign(a.ell_degree() + b.ell_degree() + 1,
                      Series<K>(std::min(a.order(), b.order()),
                                ring<K>::merge_ctx(a.coeff(0).ctx(), b.coeff(0).ctx())));
        for (int i = 0; i <= a.ell_degree(); ++i)
            for (int j = 0; j <= b.ell_degree(); ++j)
                r.ell_[i + j] += a.coeff(i) * b.coeff(j);
        r.trim();
        return r;
    }

    LogSeries& operator+=(const LogSeries& b) { return *this = *this + b; }
    LogSeries& operator-=(const LogSeries& b) { return *this = *this - b; }

    LogSeries scaled(const K& s) const {
        LogSeries r = *this;
        for (auto& f : r.ell_) f = f.scaled(s);
        return r;
    }

    // Division by a log-free series (the only division the constructions
    // require; the tower diagonals are log-free).
    friend LogSeries operator/(const LogSeries& a, const Series<K>& b) {
        LogSeries r = a;
        for (auto& f : r.ell_) f = f / b;
        return r;
    }

    // D = x d/dx with D(ell) = 1
    LogSeries euler_derivative() const {
        LogSeries r = *this;
        for (int k = 0; k <= r.ell_degree(); ++k) {
            r.ell_[k] = ell_[k].euler_derivative();
            if (k + 1 <= ell_degree())
                r.ell_[k] += ell_[k + 1].scaled(ring<K>::from_rat(Rat(k + 1), ell_[k].ctx()));
        }
        r.trim();
        return r;
    }

    LogSeries times_ell() const {
        LogSeries r;
        r.ell_.assign(ell_.size() + 1, Series<K>(order(), coeff(0).ctx()));
        for (size_t k = 0; k < ell_.size(); ++k) r.ell_[k + 1] = ell_[k];
        return r;
    }

    LogSeries truncated(int order) const {
        LogSeries r = *this;
        for (auto& f : r.ell_) f = f.truncated(order);
        return r;
    }

    // value at a concrete branch of the logarithm
    Complex eval(const Complex& x, const Complex& log_x) const;

private:
    void trim() {
        while (ell_.size() > 1 && ell_.back().is_zero()) ell_.pop_back();
    }

    std::vector<Series<K>> ell_;
};

template <> inline Complex LogSeries<Rat>::eval(const Complex& x, const Complex& log_x) const {
    Complex acc(x.prec());
    for (int k = ell_degree(); k >= 0; --k) acc = acc * log_x + eval_series(coeff(k), x);
    return acc;
}

inline LogSeries<Rat> at_mu_zero(const LogSeries<MuPoly>& f) {
    LogSeries<Rat> r(f.order(), f.ell_degree());
    for (int k = 0; k <= f.ell_degree(); ++k) r.at(k) = at_mu_zero(f.coeff(k));
    return r;
}

} // namespace lgcy

#endif
