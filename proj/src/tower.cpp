#include "lgcy/tower.hpp"

#include <stdexcept>

namespace lgcy {

Series<Rat> TowerLG::diag_rat(int p) const {
    Series<MuPoly> d = mu_shift_down(at(p, p), p / 5);
    Series<Rat> r(d.order());
    for (int n = 0; n <= d.order(); ++n) {
        if (d[n].degree() > 0)
            throw std::logic_error("TowerLG: stripped diagonal not mu-free");
        r.at(n) = d[n].at_mu_zero();
    }
    return r;
}

Series<MuPoly> TowerCY::diag(int p) const { return at(p, p).require_ell_free(); }

Series<Rat> TowerCY::diag_rat(int p) const {
    Series<MuPoly> d = mu_shift_down(diag(p), p / 5);
    Series<Rat> r(d.order());
    for (int n = 0; n <= d.order(); ++n) {
        if (d[n].degree() > 0)
            throw std::logic_error("TowerCY: stripped diagonal not mu-free");
        r.at(n) = d[n].at_mu_zero();
    }
    return r;
}

TowerLG build_tower_lg(const LGComponents& comps, int max_row) {
    TowerLG tw;
    tw.rows_built = max_row;
    tw.max_slot = comps.max_slot;
    tw.order = comps.order;
    tw.mu_cap = comps.mu_cap;
    tw.rows.push_back(comps.comp);
    for (int p = 1; p <= max_row; ++p) {
        const auto& prev = tw.rows[p - 1];
        // I_{p-1,p-1} with its mu^{floor((p-1)/5)} monomial stripped
        Series<MuPoly> diag = mu_shift_down(prev[0], (p - 1) / 5);
        std::vector<Series<MuPoly>> row;
        for (int q = p; q <= comps.max_slot; ++q)
            row.push_back((prev[q - (p - 1)] / diag).derivative());
        tw.rows.push_back(std::move(row));
    }
    return tw;
}

TowerCY build_tower_cy(const CYComponents& comps, int max_row) {
    TowerCY tw;
    tw.rows_built = max_row;
    tw.max_slot = comps.max_slot;
    tw.order = comps.order;
    tw.mu_cap = comps.mu_cap;
    tw.rows.push_back(comps.comp);
    for (int p = 1; p <= max_row; ++p) {
        const auto& prev = tw.rows[p - 1];
        Series<MuPoly> diag = mu_shift_down(prev[0].require_ell_free(), (p - 1) / 5);
        std::vector<LogSeries<MuPoly>> row;
        for (int q = p; q <= comps.max_slot; ++q)
            row.push_back((prev[q - (p - 1)] / diag).euler_derivative());
        tw.rows.push_back(std::move(row));
    }
    return tw;
}

void ValSeries::normalize() {
    while (unit.order() >= 1 && unit[0].is_zero()) {
        bool all_zero = unit.is_zero();
        if (all_zero) return;
        unit = unit.shifted_down(1);
        ++val;
    }
}

ValSeries ValSeries::d_tilde() const {
    Series<Complex> u = unit.scaled(ring<Complex>::from_rat(Rat(-val, 5), unit.ctx())) +
                        unit.euler_derivative().scaled(ring<Complex>::from_rat(Rat(-1, 5), unit.ctx()));
    return ValSeries(val, std::move(u));
}

ValSeries operator/(const ValSeries& a, const ValSeries& b) {
    return ValSeries(a.val - b.val, a.unit / b.unit);
}

ValSeries operator*(const ValSeries& a, const ValSeries& b) {
    return ValSeries(a.val + b.val, a.unit * b.unit);
}

Series<Complex> ValSeries::power_series(int order) const {
    if (val < 0) throw std::domain_error("ValSeries: negative valuation");
    return unit.shifted_up(val).truncated(order);
}

TowerCont build_tower_cont(const std::array<Series<Complex>, 4>& g) {
    TowerCont tw;
    tw.rows_built = 3;
    tw.order = g[0].order();
    std::vector<ValSeries> row0;
    for (int q = 0; q < 4; ++q) row0.emplace_back(1, g[q].scaled(ring<Complex>::from_rat(Rat(1, 5), g[q].ctx())));
    tw.rows.push_back(std::move(row0));
    for (int p = 1; p <= 3; ++p) {
        const auto& prev = tw.rows[p - 1];
        std::vector<ValSeries> row;
        for (int q = p; q <= 3; ++q) row.push_back((prev[q - (p - 1)] / prev[0]).d_tilde());
        tw.rows.push_back(std::move(row));
    }
    return tw;
}

Series<Rat> big_L(Side side, int order) {
    Series<Rat> base = Series<Rat>::one(order);
    if (side == Side::CY) {
        if (order >= 1) base.at(1) = Rat(-3125);
    } else {
        if (order >= 5) base.at(5) = Rat(-1, 3125);
    }
    return series_pow(base, Rat(-1, 5));
}

DLog DLog::scaled(const Rat& r) const {
    Complex s = ring<Complex>::from_rat(r, pole);
    return {pole * s, reg.scaled(s)};
}

DLog dlog(const ValSeries& f) {
    Complex pole = ring<Complex>::from_rat(Rat(f.val), f.unit.ctx());
    return {pole, series_dlog(f.unit)};
}

CScalarsRat c_scalars_lg(const TowerLG& tw, const Series<Rat>& L) {
    CScalarsRat cs;
    int n = std::min(L.order(), tw.diag_rat(3).order());
    Series<Rat> Lt = L.truncated(n);
    cs.c[0] = Series<Rat>::one(n); // c_{-1}
    Series<Rat> acc = Series<Rat>::one(n);
    Series<Rat> Lpow = Series<Rat>::one(n);
    for (int i = 0; i <= 3; ++i) {
        // c_i = I_00 ... I_ii / L^{i+1}
        acc = acc * tw.diag_rat(i).truncated(n);
        Lpow = Lpow * Lt;
        cs.c[i + 1] = acc / Lpow;
    }
    cs.c[5] = Series<Rat>::one(n); // c_4
    return cs;
}

CScalarsCont c_scalars_cont(const TowerCont& tw, const Series<Rat>& Llg) {
    CScalarsCont cs;
    int n = tw.at(3, 3).unit.order();
    mpfr_prec_t prec = tw.at(0, 0).unit.ctx().prec();
    Series<Complex> Lc = to_complex(Llg, prec).truncated(n);
    // Ltilde = -(t/5) L^LG, the formal branch convention
    ValSeries Lt(1, Lc.scaled(ring<Complex>::from_rat(Rat(-1, 5), Complex(prec))));
    cs.c[0] = ValSeries(0, Series<Complex>::one(n, Complex(prec))); // c_{-1}
    ValSeries acc = cs.c[0];
    ValSeries Lpow = cs.c[0];
    for (int i = 0; i <= 3; ++i) {
        ValSeries d = tw.at(i, i);
        d.unit = d.unit.truncated(n);
        acc = acc * d;
        Lpow = Lpow * Lt;
        cs.c[i + 1] = acc / Lpow;
    }
    cs.c[5] = cs.c[0]; // c_4
    return cs;
}

PsiMatrix psi_matrix(const CScalarsRat& cs, const ConstantPool& pool, int order) {
    mpfr_prec_t prec = pool.precision;
    int n = std::min(order, cs.c[1].order());
    PsiMatrix psi;
    for (int alpha = 0; alpha < 5; ++alpha)
        for (int m = 0; m <= 4; ++m) {
            Complex ph = pool.xi_half_pow(alpha * (2 * m - 3));
            psi.entry[alpha][m] = to_complex(cs.c[(3 - m) + 1].truncated(n), prec).scaled(ph);
            Complex phi = pool.xi_half_pow(alpha * (3 - 2 * m)) * Complex::of(Rat(1, 5), prec);
            psi.inverse[m][alpha] = to_complex(cs.c[m + 1].truncated(n), prec).scaled(phi);
        }
    return psi;
}

Real psi_unitarity_residual(const CScalarsRat& cs, const ConstantPool& pool, int order) {
    mpfr_prec_t prec = pool.precision;
    PsiMatrix psi = psi_matrix(cs, pool, order);
    int n = psi.entry[0][0].order();
    Real worst(prec);
    for (int alpha = 0; alpha < 5; ++alpha)
        for (int beta = 0; beta < 5; ++beta) {
            Series<Complex> acc(n, Complex(prec));
            for (int m = 0; m <= 4; ++m) acc += psi.entry[alpha][m] * psi.inverse[m][beta];
            if (alpha == beta) acc -= Series<Complex>::one(n, Complex(prec));
            for (int k = 0; k <= n; ++k) {
                Real a = acc[k].abs();
                if (a > worst) worst = a;
            }
        }
    return worst;
}

Series<Rat> delta_series_lg(const TowerLG& tw, const Series<Rat>& L) {
    Series<Rat> i00 = tw.diag_rat(0);
    int n = std::min(i00.order(), L.order());
    Series<Rat> num = i00.truncated(n) * i00.truncated(n);
    Series<Rat> den = L.truncated(n) * L.truncated(n);
    return num / den;
}

Series<Rat> g_potential_lg_dt(const TowerLG& tw, const Series<Rat>& L) {
    Series<Rat> i00 = tw.diag_rat(0);
    Series<Rat> i11 = tw.diag_rat(1);
    int n = std::min({L.order() - 1, i00.order() - 1, i11.order() - 1});
    auto dl = [&](const Series<Rat>& f) { return series_dlog(f.truncated(n + 1)); };
    return dl(L).scaled(Rat(5, 4)) - dl(i00).scaled(Rat(4)) - dl(i11);
}

Series<Rat> g_potential_cy_dlogq(const TowerCY& tw, const Series<Rat>& L) {
    Series<Rat> i00 = tw.diag_rat(0);
    Series<Rat> i11 = tw.diag_rat(1);
    int n = std::min({L.order(), i00.order(), i11.order()});
    auto dl = [&](const Series<Rat>& f) { return series_euler_dlog(f.truncated(n)); };
    Series<Rat> g = dl(L).scaled(Rat(5, 4)) - dl(i00).scaled(Rat(4)) - dl(i11);
    g.at(0) -= Rat(3, 4);
    return g;
}

DLog g_potential_cont_dt(const TowerCont& tw, const Series<Rat>& Llg) {
    mpfr_prec_t prec = tw.at(0, 0).unit.ctx().prec();
    int n = tw.at(1, 1).unit.order() - 1;
    ValSeries Lt(1, to_complex(Llg, prec).scaled(ring<Complex>::from_rat(Rat(1, 5), Complex(prec))));
    ValSeries i00 = tw.at(0, 0);
    ValSeries i11 = tw.at(1, 1);
    auto trunc = [&](DLog d) {
        return DLog{d.pole, d.reg.truncated(n)};
    };
    DLog g = trunc(dlog(Lt)).scaled(Rat(5, 4)) - trunc(dlog(i00)).scaled(Rat(4)) - trunc(dlog(i11));
    // -(3/4) log q continues as +(15/4) log t up to a constant
    g.pole += Complex::of(Rat(15, 4), prec);
    return g;
}

MZeroResult m_zero_check(const TowerLG& lg, const TowerCont& cont, const Series<Rat>& Llg,
                         const ConstantPool& pool) {
    mpfr_prec_t prec = pool.precision;
    CScalarsRat clg = c_scalars_lg(lg, Llg);
    CScalarsCont ccont = c_scalars_cont(cont, Llg);
    int n = std::min(clg.c[1].order(), ccont.c[1].unit.order());

    MZeroResult res{Real(prec), Real(prec)};

    // diagonal: -ctilde_m / c_m  vs  (-1)^m 5^{m+1}/t^{m+1} prod Itilde/I
    for (int m = 0; m <= 4; ++m) {
        ValSeries lhsv = ccont.c[m + 1];
        if (lhsv.val != 0) throw std::logic_error("m_zero_check: c-ratio valuation");
        Series<Complex> clgm = to_complex(clg.c[m + 1].truncated(n), prec);
        Series<Complex> lhs = -(lhsv.unit.truncated(n)) / clgm;

        ValSeries rhsv(-(m + 1), Series<Complex>::one(n, Complex(prec)));
        for (int j = 0; j <= m; ++j) {
            ValSeries it = (j <= 3) ? cont.at(j, j) : cont.at(0, 0); // Itilde_44 = Itilde_00
            rhsv = rhsv * it;
            rhsv.unit = rhsv.unit / to_complex(lg.diag_rat(j).truncated(rhsv.unit.order()), prec);
        }
        if (rhsv.val != 0) throw std::logic_error("m_zero_check: product valuation");
        Rat sign = (m % 2 == 0) ? Rat(pow_int(Int(5), m + 1)) : -Rat(pow_int(Int(5), m + 1));
        Series<Complex> rhs = rhsv.unit.truncated(n).scaled(ring<Complex>::from_rat(sign, Complex(prec)));

        Series<Complex> diff = lhs.truncated(n) - rhs;
        for (int k = 0; k <= diff.order(); ++k) {
            Real a = diff[k].abs();
            if (a > res.diag_residual) res.diag_residual = a;
        }
    }

    // off-diagonal entries of -(Psi~)^{-1} Psi^LG
    for (int m = 0; m <= 4; ++m)
        for (int mp = 0; mp <= 4; ++mp) {
            if (m == mp) continue;
            Complex phase(prec);
            for (int alpha = 0; alpha < 5; ++alpha)
                phase += pool.xi_half_pow(2 * alpha * (mp - m));
            phase = phase * Complex::of(Rat(-1, 5), prec);
            Series<Complex> entry =
                (ccont.c[m + 1].power_series(n) *
                 to_complex(clg.c[(3 - mp) + 1].truncated(n), prec))
                    .scaled(phase);
            for (int k = 0; k <= entry.order(); ++k) {
                Real a = entry[k].abs();
                if (a > res.offdiag_residual) res.offdiag_residual = a;
            }
        }
    return res;
}

} // namespace lgcy
