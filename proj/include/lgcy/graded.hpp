#ifndef LGCY_GRADED_HPP
#define LGCY_GRADED_HPP

#include "lgcy/mupoly.hpp"
#include "lgcy/series.hpp"

#include <array>

namespace lgcy {

// Ambient CY coefficient ring: C[H]/(H^4) on the basis 1, H, H^2, H^3, with
// Poincare pairing (H^i, H^j) = 5 delta_{i+j,3}.
template <class S> struct Nilp4 {
    std::array<S, 4> a{};

    static Nilp4 unit(const S& one) {
        Nilp4 r;
        r.a[0] = one;
        return r;
    }
    static Nilp4 h(const S& one) {
        Nilp4 r;
        r.a[1] = one;
        return r;
    }

    friend Nilp4 operator+(const Nilp4& x, const Nilp4& y) {
        Nilp4 r;
        for (int i = 0; i < 4; ++i) r.a[i] = x.a[i] + y.a[i];
        return r;
    }
    friend Nilp4 operator-(const Nilp4& x, const Nilp4& y) {
        Nilp4 r;
        for (int i = 0; i < 4; ++i) r.a[i] = x.a[i] - y.a[i];
        return r;
    }
    friend Nilp4 operator*(const Nilp4& x, const Nilp4& y) {
        Nilp4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; i + j < 4; ++j) r.a[i + j] = r.a[i + j] + x.a[i] * y.a[j];
        return r;
    }

    bool is_zero() const {
        for (const auto& c : a)
            if (!ring<S>::is_zero(c)) return false;
        return true;
    }

    friend S pairing(const Nilp4& x, const Nilp4& y, const S& five) {
        S s{};
        for (int i = 0; i < 4; ++i) {
            int j = 3 - i;
            s = s + five * x.a[i] * y.a[j];
        }
        return s;
    }
};

// Twisted coefficient ring: Q[mu][phi]/(phi^5 - mu) on the basis
// phi_0..phi_4. The pairing is Frobenius for the relation:
// (phi_a, phi_b) = 5 mu^{floor((a+b)/5)} delta_{(a+b) mod 5, 3}.
struct Phi5 {
    std::array<MuPoly, 5> a;

    explicit Phi5(int cap = MuPoly::kNoCap) { a.fill(MuPoly(Rat(0), cap)); }

    static Phi5 unit(int cap) {
        Phi5 r(cap);
        r.a[0] = MuPoly(Rat(1), cap);
        return r;
    }
    static Phi5 phi(int cap) {
        Phi5 r(cap);
        r.a[1] = MuPoly(Rat(1), cap);
        return r;
    }
    static Phi5 phi_power(int k, int cap) {
        Phi5 r(cap);
        r.a[k % 5] = MuPoly(Rat(1), cap).shift_up(k / 5);
        return r;
    }
    static Phi5 scalar(const Rat& q, int cap) {
        Phi5 r(cap);
        r.a[0] = MuPoly(q, cap);
        return r;
    }

    bool is_zero() const {
        for (const auto& c : a)
            if (!c.is_zero()) return false;
        return true;
    }

    friend Phi5 operator+(const Phi5& x, const Phi5& y) {
        Phi5 r;
        for (int i = 0; i < 5; ++i) r.a[i] = x.a[i] + y.a[i];
        return r;
    }
    friend Phi5 operator-(const Phi5& x, const Phi5& y) {
        Phi5 r;
        for (int i = 0; i < 5; ++i) r.a[i] = x.a[i] - y.a[i];
        return r;
    }
    friend Phi5 operator*(const Phi5& x, const Phi5& y) {
        Phi5 r;
        for (int i = 0; i < 5; ++i) {
            if (x.a[i].is_zero()) continue;
            for (int j = 0; j < 5; ++j) {
                if (y.a[j].is_zero()) continue;
                MuPoly p = x.a[i] * y.a[j];
                int k = i + j;
                if (k >= 5) p = p.shift_up(1); // phi^5 = mu
                r.a[k % 5] += p;
            }
        }
        return r;
    }

    friend Phi5 operator*(const MuPoly& s, const Phi5& y) {
        Phi5 r;
        for (int i = 0; i < 5; ++i) r.a[i] = s * y.a[i];
        return r;
    }

    Phi5& operator+=(const Phi5& y) { return *this = *this + y; }

    friend MuPoly pairing(const Phi5& x, const Phi5& y) {
        MuPoly s;
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) {
                if ((i + j) % 5 != 3) continue;
                MuPoly t = x.a[i] * y.a[j];
                s += (Rat(5) * t).shift_up((i + j) / 5);
            }
        return s;
    }
};

} // namespace lgcy

#endif
