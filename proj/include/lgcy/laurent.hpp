#ifndef LGCY_LAURENT_HPP
#define LGCY_LAURENT_HPP

#include "lgcy/complexhp.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace lgcy {

// Small dense complex matrix.
class CMat {
public:
    CMat() : n_(0) {}
    CMat(int n, mpfr_prec_t prec) : n_(n), e_(n * n, Complex(prec)) {}

    static CMat identity(int n, mpfr_prec_t prec) {
        CMat m(n, prec);
        for (int i = 0; i < n; ++i) m(i, i) = Complex::of(1, prec);
        return m;
    }

    int dim() const { return n_; }
    Complex& operator()(int i, int j) { return e_[i * n_ + j]; }
    const Complex& operator()(int i, int j) const { return e_[i * n_ + j]; }

    friend CMat operator+(const CMat& a, const CMat& b) {
        CMat r = a;
        for (size_t k = 0; k < r.e_.size(); ++k) r.e_[k] += b.e_[k];
        return r;
    }
    friend CMat operator-(const CMat& a, const CMat& b) {
        CMat r = a;
        for (size_t k = 0; k < r.e_.size(); ++k) r.e_[k] -= b.e_[k];
        return r;
    }
    CMat operator-() const {
        CMat r = *this;
        for (auto& x : r.e_) x = -x;
        return r;
    }
    friend CMat operator*(const CMat& a, const CMat& b) {
        CMat r(a.n_, a.prec());
        for (int i = 0; i < a.n_; ++i)
            for (int k = 0; k < a.n_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (int j = 0; j < a.n_; ++j) r(i, j) += a(i, k) * b(k, j);
            }
        return r;
    }
    CMat scaled(const Complex& s) const {
        CMat r = *this;
        for (auto& x : r.e_) x = x * s;
        return r;
    }

    CMat transpose() const {
        CMat r(n_, prec());
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    // Gauss-Jordan with partial pivoting.
    CMat inverse() const {
        int n = n_;
        CMat a = *this;
        CMat r = identity(n, prec());
        for (int c = 0; c < n; ++c) {
            int p = c;
            for (int i = c + 1; i < n; ++i)
                if (a(i, c).abs() > a(p, c).abs()) p = i;
            if (a(p, c).is_zero()) throw std::domain_error("CMat: singular matrix");
            if (p != c)
                for (int j = 0; j < n; ++j) {
                    std::swap(a(p, j), a(c, j));
                    std::swap(r(p, j), r(c, j));
                }
            Complex inv = a(c, c).inv();
            for (int j = 0; j < n; ++j) {
                a(c, j) *= inv;
                r(c, j) *= inv;
            }
            for (int i = 0; i < n; ++i) {
                if (i == c || a(i, c).is_zero()) continue;
                Complex f = a(i, c);
                for (int j = 0; j < n; ++j) {
                    a(i, j) -= f * a(c, j);
                    r(i, j) -= f * r(c, j);
                }
            }
        }
        return r;
    }

    // Solve A x = b.
    std::vector<Complex> solve(std::vector<Complex> b) const {
        CMat a = *this;
        int n = n_;
        for (int c = 0; c < n; ++c) {
            int p = c;
            for (int i = c + 1; i < n; ++i)
                if (a(i, c).abs() > a(p, c).abs()) p = i;
            if (a(p, c).is_zero()) throw std::domain_error("CMat: singular system");
            if (p != c) {
                for (int j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
                std::swap(b[p], b[c]);
            }
            for (int i = c + 1; i < n; ++i) {
                Complex f = a(i, c) / a(c, c);
                for (int j = c; j < n; ++j) a(i, j) -= f * a(c, j);
                b[i] -= f * b[c];
            }
        }
        std::vector<Complex> x(n, Complex(prec()));
        for (int i = n - 1; i >= 0; --i) {
            Complex s = b[i];
            for (int j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
            x[i] = s / a(i, i);
        }
        return x;
    }

    Real max_abs() const {
        Real m(prec());
        for (const auto& x : e_) {
            Real ax = x.abs();
            if (ax > m) m = ax;
        }
        return m;
    }

    mpfr_prec_t prec() const {
        mpfr_prec_t p = 64;
        for (const auto& x : e_) p = std::max(p, x.prec());
        return p;
    }

private:
    int n_;
    std::vector<Complex> e_;
};

// Square matrix whose entries are finite Laurent polynomials in z, stored as
// z-power -> dense coefficient matrix. The window is tracked exactly.
class LaurentMatrix {
public:
    LaurentMatrix() : n_(0) {}
    LaurentMatrix(int n, mpfr_prec_t prec) : n_(n), prec_(prec) {}

    static LaurentMatrix identity(int n, mpfr_prec_t prec) {
        LaurentMatrix m(n, prec);
        m.coeff_[0] = CMat::identity(n, prec);
        return m;
    }

    int dim() const { return n_; }
    mpfr_prec_t prec() const { return prec_; }
    bool empty() const { return coeff_.empty(); }

    int window_min() const { return coeff_.empty() ? 0 : coeff_.begin()->first; }
    int window_max() const { return coeff_.empty() ? 0 : coeff_.rbegin()->first; }

    CMat& at(int zpow) {
        auto it = coeff_.find(zpow);
        if (it == coeff_.end()) it = coeff_.emplace(zpow, CMat(n_, prec_)).first;
        return it->second;
    }
    CMat get(int zpow) const {
        auto it = coeff_.find(zpow);
        return it == coeff_.end() ? CMat(n_, prec_) : it->second;
    }
    const std::map<int, CMat>& coeffs() const { return coeff_; }

    void set_entry(int row, int col, int zpow, const Complex& v) { at(zpow)(row, col) = v; }

    friend LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b) {
        LaurentMatrix r = a;
        for (const auto& [k, m] : b.coeff_) {
            auto it = r.coeff_.find(k);
            if (it == r.coeff_.end()) r.coeff_[k] = m;
            else it->second = it->second + m;
        }
        return r;
    }
    friend LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) {
        return a + b.scaled(Complex::of(-1, a.prec_));
    }
    friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
        LaurentMatrix r(a.n_, std::max(a.prec_, b.prec_));
        for (const auto& [ka, ma] : a.coeff_)
            for (const auto& [kb, mb] : b.coeff_) {
                CMat p = ma * mb;
                auto it = r.coeff_.find(ka + kb);
                if (it == r.coeff_.end()) r.coeff_[ka + kb] = p;
                else it->second = it->second + p;
            }
        return r;
    }

    LaurentMatrix scaled(const Complex& s) const {
        LaurentMatrix r = *this;
        for (auto& [k, m] : r.coeff_) m = m.scaled(s);
        return r;
    }

    // substitute z -> -z
    LaurentMatrix flip_z() const {
        LaurentMatrix r = *this;
        for (auto& [k, m] : r.coeff_)
            if (k & 1) m = -m;
        return r;
    }

    // Adjoint with respect to a (nondegenerate) pairing P on each side:
    // M*(z) = P^{-1} M(z)^T P. No substitution in z is performed here;
    // callers combine with flip_z per the identity being checked.
    LaurentMatrix adjoint(const CMat& p) const {
        CMat pinv = p.inverse();
        LaurentMatrix r(n_, prec_);
        for (const auto& [k, m] : coeff_) r.coeff_[k] = pinv * m.transpose() * p;
        return r;
    }

    // max entry magnitude across the whole window
    Real max_abs() const {
        Real m(prec_);
        for (const auto& [k, c] : coeff_) {
            Real cm = c.max_abs();
            if (cm > m) m = cm;
        }
        return m;
    }

    Real distance_to_identity() const {
        LaurentMatrix d = *this - identity(n_, prec_);
        return d.max_abs();
    }

private:
    int n_ = 0;
    mpfr_prec_t prec_ = 64;
    std::map<int, CMat> coeff_;
};

// Pairing matrix 5*antidiag(1,1,1,1) shared by both state spaces.
inline CMat quintic_pairing(int n, mpfr_prec_t prec) {
    CMat p(n, prec);
    for (int i = 0; i < n; ++i) p(i, n - 1 - i) = Complex::of(5, prec);
    return p;
}

} // namespace lgcy

#endif
