#include "lgcy/ifunc.hpp"

#include <cassert>
#include <stdexcept>

namespace lgcy {

namespace {

// Extract the scalar component of a weighted-homogeneous Phi5 element that
// must be supported on the single basis index `idx`.
MuPoly single_index_scalar(const Phi5& x, int idx) {
    for (int i = 0; i < 5; ++i)
        if (i != idx && !x.a[i].is_zero())
            throw std::logic_error("ifunc: ratio coefficient not weighted-homogeneous");
    return x.a[idx];
}

} // namespace

LGComponents build_ilg_twisted(int order, int max_slot, int mu_cap) {
    LGComponents out;
    out.order = order;
    out.max_slot = max_slot;
    out.mu_cap = mu_cap;
    MuPoly mu_ctx(Rat(0), mu_cap);
    out.comp.assign(max_slot + 1, Series<MuPoly>(order, mu_ctx));

    for (int a = 0; a <= order; ++a) {
        int j = a % 5;
        int m = a / 5;
        // prod_{i=0}^{m-1} (k_i^5 X + mu) with X = z^5, k_i = (j+1)/5 + i
        std::vector<MuPoly> prod{MuPoly(Rat(1), mu_cap)};
        for (int i = 0; i < m; ++i) {
            Rat k((j + 1) + 5 * i, 5);
            Rat k5 = pow_rat(k, 5);
            std::vector<MuPoly> next(prod.size() + 1, MuPoly(Rat(0), mu_cap));
            for (size_t s = 0; s < prod.size(); ++s) {
                next[s] += prod[s] * MuPoly::mu(mu_cap);
                next[s + 1] += MuPoly(k5, mu_cap) * prod[s];
            }
            prod = std::move(next);
        }
        Rat inv_fact = Rat(1) / Rat(factorial(a));
        for (int s = 0; s <= m; ++s) {
            int slot = a - 5 * s;
            if (slot > max_slot) continue;
            out.comp[slot].at(a) += prod[s] * MuPoly(inv_fact, mu_cap);
        }
    }
    return out;
}

CYComponents build_icy_twisted(int order, int max_slot, int mu_cap) {
    CYComponents out;
    out.order = order;
    out.max_slot = max_slot;
    out.mu_cap = mu_cap;
    MuPoly mu_ctx(Rat(0), mu_cap);
    out.comp.assign(max_slot + 1, LogSeries<MuPoly>(order, max_slot, mu_ctx));

    for (int d = 0; d <= order; ++d) {
        // numerator prod_{k=1}^{5d} (5 phi + k z), polynomial in z
        std::vector<Phi5> num{Phi5::scalar(Rat(1), mu_cap)};
        Phi5 five_phi = Phi5::scalar(Rat(5), mu_cap) * Phi5::phi(mu_cap);
        for (int k = 1; k <= 5 * d; ++k) {
            std::vector<Phi5> next(num.size() + 1, Phi5(mu_cap));
            for (size_t i = 0; i < num.size(); ++i) {
                next[i] += num[i] * five_phi;
                next[i + 1] += Phi5::scalar(Rat(k), mu_cap) * num[i];
            }
            num = std::move(next);
        }
        // denominator prod_{k=1}^{d} ((phi + k z)^5 - mu), polynomial in z
        std::vector<Phi5> den{Phi5::scalar(Rat(1), mu_cap)};
        for (int k = 1; k <= d; ++k) {
            std::vector<Phi5> factor(6, Phi5(mu_cap));
            for (int j = 0; j <= 5; ++j) {
                Rat c = Rat(binomial(5, j)) * pow_rat(Rat(k), j);
                factor[j] = Phi5::scalar(c, mu_cap) * Phi5::phi_power(5 - j, mu_cap);
            }
            // subtract mu from the z^0 coefficient: (phi + k z)^5 - mu
            Phi5 mu_elt(mu_cap);
            mu_elt.a[0] = MuPoly::mu(mu_cap);
            factor[0] = factor[0] - mu_elt;
            std::vector<Phi5> next(den.size() + 5, Phi5(mu_cap));
            for (size_t i = 0; i < den.size(); ++i)
                for (int j = 0; j <= 5; ++j) next[i + j] += den[i] * factor[j];
            den = std::move(next);
        }

        // tail coefficients: num = z^{5d} sum_s A_s z^{-s}, den likewise
        int smax = max_slot;
        auto tail = [&](const std::vector<Phi5>& poly) {
            std::vector<Phi5> t(smax + 1, Phi5(mu_cap));
            int top = static_cast<int>(poly.size()) - 1; // = 5d
            for (int s = 0; s <= smax && s <= top; ++s) t[s] = poly[top - s];
            return t;
        };
        std::vector<Phi5> A = tail(num);
        std::vector<Phi5> B = tail(den);

        // invert den tail: B = b0 (1 + e), b0 = (d!)^5 scalar
        Rat b0 = Rat(1) / Rat(pow_int(factorial(d), 5));
        std::vector<Phi5> inv(smax + 1, Phi5(mu_cap));
        inv[0] = Phi5::scalar(b0, mu_cap);
        for (int s = 1; s <= smax; ++s) {
            Phi5 acc(mu_cap);
            for (int u = 1; u <= s; ++u) acc += B[u] * inv[s - u];
            inv[s] = Phi5::scalar(-b0, mu_cap) * acc;
        }
        // ratio tail R_s
        std::vector<Phi5> R(smax + 1, Phi5(mu_cap));
        for (int s = 0; s <= smax; ++s) {
            Phi5 acc(mu_cap);
            for (int u = 0; u <= s; ++u) acc += A[u] * inv[s - u];
            R[s] = acc;
        }

        // q^d e^{ell phi / z} * ratio: slot n collects sum_{r+s=n} ell^r/r! phi^r R_s
        for (int n = 0; n <= max_slot; ++n) {
            for (int r = 0; r <= n; ++r) {
                int s = n - r;
                Phi5 term = Phi5::phi_power(r, mu_cap) * R[s];
                MuPoly scal = single_index_scalar(term, n % 5);
                if (scal.is_zero()) continue;
                out.comp[n].at(r).at(d) += scal * MuPoly(Rat(1) / Rat(factorial(r)), mu_cap);
            }
        }
    }
    return out;
}

IFunctionCY build_icy(int order) {
    CYComponents tw = build_icy_twisted(order, 3, 0);
    IFunctionCY f;
    f.order = order;
    for (int n = 0; n < 4; ++n) f.comp[n] = at_mu_zero(tw.comp[n]);
    f.i0_ = f.comp[0].require_ell_free();
    return f;
}

IFunctionLG build_ilg(int order) {
    LGComponents tw = build_ilg_twisted(order, 3, 0);
    IFunctionLG f;
    f.order = order;
    for (int n = 0; n < 4; ++n) f.comp[n] = at_mu_zero(tw.comp[n]);
    return f;
}

std::vector<Rat> cy_pf_product_poly() {
    // prod_{i=1}^{5} (5D + i)
    std::vector<Rat> p{Rat(1)};
    for (int i = 1; i <= 5; ++i) {
        std::vector<Rat> next(p.size() + 1, Rat(0));
        for (size_t s = 0; s < p.size(); ++s) {
            next[s] += Rat(i) * p[s];
            next[s + 1] += Rat(5) * p[s];
        }
        p = std::move(next);
    }
    return p;
}

std::vector<LogSeries<MuPoly>> pf_apply_cy(const PFOperator& op, const CYComponents& icy,
                                           bool mu_on) {
    if (op.side != Side::CY) throw std::invalid_argument("pf_apply_cy: wrong side");
    if (icy.order < 5) throw std::invalid_argument("pf_apply_cy: order too small");
    MuPoly mu = MuPoly::mu(icy.mu_cap);
    std::vector<LogSeries<MuPoly>> res;
    res.reserve(icy.comp.size());
    for (size_t n = 0; n < icy.comp.size(); ++n) {
        const auto& f = icy.comp[n];
        LogSeries<MuPoly> d5 = f;
        for (int i = 0; i < 5; ++i) d5 = d5.euler_derivative();
        // q * prod_i (5D + i) f
        LogSeries<MuPoly> w = f;
        for (int i = 1; i <= 5; ++i) {
            LogSeries<MuPoly> dw = w.euler_derivative();
            w = dw.scaled(MuPoly(Rat(5), icy.mu_cap)) + w.scaled(MuPoly(Rat(i), icy.mu_cap));
        }
        LogSeries<MuPoly> qw(w.order(), w.ell_degree(), MuPoly(Rat(0), icy.mu_cap));
        for (int k = 0; k <= w.ell_degree(); ++k)
            qw.at(k) = w.coeff(k).shifted_up(1).truncated(f.order());
        LogSeries<MuPoly> r = qw - d5;
        if (mu_on && n >= 5) {
            LogSeries<MuPoly> lower = icy.comp[n - 5];
            r += lower.scaled(mu);
        }
        res.push_back(r);
    }
    return res;
}

std::vector<Series<MuPoly>> pf_apply_lg(const PFOperator& op, const LGComponents& ilg,
                                        bool mu_on) {
    if (op.side != Side::LG) throw std::invalid_argument("pf_apply_lg: wrong side");
    if (ilg.order < 5) throw std::invalid_argument("pf_apply_lg: order too small");
    MuPoly mu = MuPoly::mu(ilg.mu_cap);
    std::vector<Series<MuPoly>> res;
    res.reserve(ilg.comp.size());
    for (size_t n = 0; n < ilg.comp.size(); ++n) {
        // u = t * I_n, kept through t-order N+1 exactly
        Series<MuPoly> u = ilg.comp[n].shifted_up(1);
        // (1/5 tD)^5 u
        Series<MuPoly> d5 = u;
        for (int i = 0; i < 5; ++i) d5 = d5.euler_derivative();
        d5 = d5.scaled(Rat(1, 3125));
        // prod_i (tD - i) u   (or the verbatim (tD - 1)^5 variant)
        Series<MuPoly> w = u;
        for (int i = 1; i <= 5; ++i) {
            int shift = op.indexed_product ? i : 1;
            w = w.euler_derivative() - w.scaled(Rat(shift));
        }
        // residual premultiplied by t^5: t^5 (1/5 tD)^5 u + t^5 mu u_{n-5} - w
        Series<MuPoly> r = d5.shifted_up(5).truncated(u.order()) - w;
        if (mu_on && n >= 5) {
            Series<MuPoly> lower = ilg.comp[n - 5].shifted_up(6).truncated(u.order());
            r += lower.scaled(mu);
        }
        res.push_back(r);
    }
    return res;
}

LogSeries<Rat> mirror_map_cy(const IFunctionCY& icy) { return icy.comp[1] / icy.i0(); }

Series<Rat> mirror_map_lg(const IFunctionLG& ilg) { return ilg.comp[1] / ilg.comp[0]; }

std::array<LogSeries<Rat>, 4> j_slice_cy(const IFunctionCY& icy) {
    std::array<LogSeries<Rat>, 4> j;
    for (int n = 0; n < 4; ++n) j[n] = icy.comp[n] / icy.i0();
    return j;
}

std::array<Series<Rat>, 4> j_slice_lg(const IFunctionLG& ilg) {
    std::array<Series<Rat>, 4> j;
    for (int n = 0; n < 4; ++n) j[n] = ilg.comp[n] / ilg.comp[0];
    return j;
}

std::vector<std::vector<Rat>> cy_pf_dq_coefficients() {
    // Stirling numbers of the second kind up to n = 5: D^s = sum_k S(s,k) q^k d^k
    long stirling[6][6] = {};
    stirling[0][0] = 1;
    for (int nn = 1; nn <= 5; ++nn)
        for (int k = 1; k <= nn; ++k)
            stirling[nn][k] = stirling[nn - 1][k - 1] + k * stirling[nn - 1][k];

    std::vector<Rat> p = cy_pf_product_poly(); // p[s] coefficient of D^s
    // c_k(q): from -D^5 the term -S(5,k) q^k, from q p_s D^s the term p_s S(s,k) q^{k+1}
    std::vector<std::vector<Rat>> c(6);
    for (int k = 0; k <= 5; ++k) c[k].assign(7, Rat(0));
    for (int k = 1; k <= 5; ++k) c[k][k] -= Rat(stirling[5][k]);
    for (int s = 0; s <= 5; ++s)
        for (int k = 0; k <= s; ++k) c[k][k + 1] += p[s] * Rat(stirling[s][k]);
    return c;
}

} // namespace lgcy
