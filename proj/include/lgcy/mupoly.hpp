#ifndef LGCY_MUPOLY_HPP
#define LGCY_MUPOLY_HPP

#include "lgcy/rational.hpp"

#include <algorithm>
#include <vector>

namespace lgcy {

// Polynomials in mu = lambda^5 over Rat. The equivariant parameter only ever
// enters through this combination. Each value carries a degree cap; binary
// operations narrow to the smaller cap and drop higher powers, mirroring the
// truncation-order rule of the series layer.
class MuPoly {
public:
    static constexpr int kNoCap = 1 << 20;

    MuPoly() : cap_(kNoCap) {}
    explicit MuPoly(const Rat& c, int cap = kNoCap) : cap_(cap) {
        if (c != 0) c_.push_back(c);
    }
    MuPoly(std::vector<Rat> coeffs, int cap) : c_(std::move(coeffs)), cap_(cap) {
        truncate();
        trim();
    }

    static MuPoly mu(int cap = kNoCap) {
        MuPoly p;
        p.cap_ = cap;
        p.c_ = {Rat(0), Rat(1)};
        p.truncate();
        return p;
    }

    int cap() const { return cap_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const Rat& coeff(int k) const {
        static const Rat zero(0);
        if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
        return c_[k];
    }

    Rat at_mu_zero() const { return coeff(0); }

    bool is_constant() const { return c_.size() <= 1; }

    Rat constant() const {
        if (!is_constant()) throw std::domain_error("MuPoly: not a constant");
        return coeff(0);
    }

    // Smallest k with a nonzero mu^k coefficient (0 for the zero polynomial).
    int mu_valuation() const {
        for (size_t k = 0; k < c_.size(); ++k)
            if (c_[k] != 0) return static_cast<int>(k);
        return 0;
    }

    // Exact division by mu^k; throws if any lower coefficient survives.
    MuPoly shift_down(int k) const {
        for (int j = 0; j < k && j < static_cast<int>(c_.size()); ++j)
            if (c_[j] != 0) throw std::domain_error("MuPoly: not divisible by mu^k");
        MuPoly r;
        r.cap_ = cap_;
        if (static_cast<int>(c_.size()) > k)
            r.c_.assign(c_.begin() + k, c_.end());
        return r;
    }

    MuPoly shift_up(int k) const {
        MuPoly r;
        r.cap_ = cap_;
        if (!c_.empty()) {
            r.c_.assign(c_.size() + k, Rat(0));
            std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
        }
        r.truncate();
        r.trim();
        return r;
    }

    friend MuPoly operator+(const MuPoly& a, const MuPoly& b) {
        MuPoly r;
        r.cap_ = std::min(a.cap_, b.cap_);
        r.c_.assign(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t k = 0; k < a.c_.size(); ++k) r.c_[k] += a.c_[k];
        for (size_t k = 0; k < b.c_.size(); ++k) r.c_[k] += b.c_[k];
        r.truncate();
        r.trim();
        return r;
    }

    friend MuPoly operator-(const MuPoly& a, const MuPoly& b) { return a + (-b); }

    MuPoly operator-() const {
        MuPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend MuPoly operator*(const MuPoly& a, const MuPoly& b) {
        MuPoly r;
        r.cap_ = std::min(a.cap_, b.cap_);
        if (a.is_zero() || b.is_zero()) return r;
        size_t n = std::min(a.c_.size() + b.c_.size() - 1,
                            static_cast<size_t>(r.cap_) + 1);
        r.c_.assign(n, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size() && i + j < n; ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    friend MuPoly operator*(const Rat& s, const MuPoly& b) { return MuPoly(s, kNoCap) * b; }

    MuPoly& operator+=(const MuPoly& b) { return *this = *this + b; }
    MuPoly& operator-=(const MuPoly& b) { return *this = *this - b; }
    MuPoly& operator*=(const MuPoly& b) { return *this = *this * b; }

    friend bool operator==(const MuPoly& a, const MuPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const MuPoly& a, const MuPoly& b) { return !(a == b); }

    // Inverse of a unit (nonzero constant term), as a mu-power series
    // truncated at the cap. Division in this ring is only ever performed by
    // units; tower code strips mu-monomials first.
    MuPoly inv() const {
        Rat c0 = coeff(0);
        if (c0 == 0) throw std::domain_error("MuPoly: inverse of non-unit");
        int cap = cap_;
        if (cap == kNoCap && degree() > 0)
            throw std::domain_error("MuPoly: uncapped inverse of non-constant");
        MuPoly r;
        r.cap_ = cap_;
        int deg = is_zero() ? 0 : degree();
        int n = (cap == kNoCap) ? 0 : cap;
        r.c_.assign(n + 1, Rat(0));
        r.c_[0] = Rat(1) / c0;
        for (int k = 1; k <= n; ++k) {
            Rat s(0);
            for (int j = 1; j <= std::min(k, deg); ++j) s += c_[j] * r.c_[k - j];
            r.c_[k] = -s / c0;
        }
        r.trim();
        return r;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0) continue;
            if (!s.empty()) s += " + ";
            s += c_[k].get_str();
            if (k == 1) s += "*mu";
            else if (k > 1) s += "*mu^" + std::to_string(k);
        }
        return s;
    }

private:
    void truncate() {
        if (cap_ != kNoCap && static_cast<int>(c_.size()) > cap_ + 1)
            c_.resize(cap_ + 1);
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rat> c_;
    int cap_;
};

} // namespace lgcy

#endif
