#include "lgcy/genusone.hpp"

namespace lgcy {

Series<Rat> f1_euler_deriv_cy(const IFunctionCY& icy) {
    int n = icy.order;
    Series<Rat> disc = Series<Rat>::one(n);
    disc.at(1) = Rat(-3125);
    LogSeries<Rat> tau = mirror_map_cy(icy);
    Series<Rat> dtau = tau.euler_derivative().require_ell_free();
    Series<Rat> r = series_euler_dlog(icy.i0()).scaled(Rat(-31, 3)) -
                    series_euler_dlog(disc).scaled(Rat(1, 12)) -
                    series_euler_dlog(dtau).scaled(Rat(1, 2));
    r.at(0) -= Rat(25, 12);
    return r;
}

Series<Rat> f1_route_r1_cy(const TowerCY& tw, const Series<Rat>& Lcy, const IFunctionCY& icy) {
    (void)icy;
    Series<Rat> i00 = tw.diag_rat(0);
    int n = std::min(i00.order(), Lcy.order());
    Series<Rat> a = series_euler_dlog(i00.truncated(n));
    a.at(0) += Rat(1, 5); // Dlog(q^{1/5} I0)
    Series<Rat> b = series_euler_dlog(Lcy.truncated(n));
    b.at(0) += Rat(1, 5); // Dlog(q^{1/5} L)
    Series<Rat> g = g_potential_cy_dlogq(tw, Lcy);
    return g.truncated(n).scaled(Rat(1, 2)) - a.scaled(Rat(25, 3)) - b.scaled(Rat(5, 24));
}

Series<Rat> f1_deriv_lg(const IFunctionLG& ilg) {
    int n = ilg.order;
    Series<Rat> disc = Series<Rat>::one(n);
    if (n >= 5) disc.at(5) = Rat(-1, 3125); // 1 - (t/5)^5
    Series<Rat> dtau = mirror_map_lg(ilg).derivative();
    return series_dlog(ilg.i0()).scaled(Rat(-31, 3)) - series_dlog(disc).scaled(Rat(1, 12)) -
           series_dlog(dtau).scaled(Rat(1, 2));
}

Series<Rat> f1_route_r1_lg(const TowerLG& tw, const Series<Rat>& Llg, const IFunctionLG& ilg) {
    Series<Rat> g = g_potential_lg_dt(tw, Llg);
    int n = std::min(g.order(), ilg.order - 1);
    return g.truncated(n).scaled(Rat(1, 2)) -
           series_dlog(ilg.i0().truncated(n + 1)).scaled(Rat(25, 3)) -
           series_dlog(Llg.truncated(n + 1)).scaled(Rat(5, 24));
}

Series<Complex> vertex_contribution(const IFunctionLG& ilg, const ContinuedCY& quant) {
    mpfr_prec_t prec = quant.prec;
    int n = std::min(ilg.order - 1, quant.order - 1);
    Series<Complex> df1 = to_complex(f1_deriv_lg(ilg).truncated(n), prec);
    // d log(t I0^LG) - d log(5 Itilde_0) = dlog I0 - dlog g0 (poles cancel)
    Series<Complex> dlog_i0 = to_complex(series_dlog(ilg.i0()).truncated(n), prec);
    Series<Complex> dlog_g0 = series_dlog(quant.g[0].truncated(n + 1));
    return df1 + (dlog_i0 - dlog_g0).scaled(ring<Complex>::from_rat(Rat(25, 3), Complex(prec)));
}

DLog loop_contribution(const TowerLG& lg, const Series<Rat>& Llg, const ContinuedCY& quant) {
    mpfr_prec_t prec = quant.prec;
    DLog gtilde = g_potential_cont_dt(quant.tower, Llg);
    Series<Complex> glg = to_complex(g_potential_lg_dt(lg, Llg), prec);
    int n = std::min(gtilde.reg.order(), glg.order());
    DLog d{gtilde.pole, gtilde.reg.truncated(n) - glg.truncated(n)};
    return d.scaled(Rat(1, 2));
}

DLog f1_deriv_cy_continued(const ContinuedCY& gw) {
    mpfr_prec_t prec = gw.prec;
    int n = gw.order - 2;
    Complex one = Complex::of(1, prec);

    // d log Itilde_0 = 1/t + dlog g0
    DLog dlog_i0{one, series_dlog(gw.g[0].truncated(n + 1))};
    // d log q = -5/t
    DLog dlog_q{Complex::of(-5, prec), Series<Complex>(n, Complex(prec))};
    // d log(1 - 5^5 q) with q = t^{-5}: -5/t + dlog(1 - (t/5)^5)
    Series<Rat> disc = Series<Rat>::one(n + 1);
    if (n + 1 >= 5) disc.at(5) = Rat(-1, 3125);
    DLog dlog_disc{Complex::of(-5, prec), to_complex(series_dlog(disc), prec)};
    // d log( -(t/5) dtau/dt ) = 1/t + dlog(tau')
    Series<Complex> dtau = gw.tau.truncated(n + 2).derivative();
    DLog dlog_qdtau{one, series_dlog(dtau)};

    DLog r = dlog_i0.scaled(Rat(-31, 3)) - dlog_q.scaled(Rat(25, 12)) -
             dlog_disc.scaled(Rat(1, 12)) - dlog_qdtau.scaled(Rat(1, 2));
    return r;
}

GenusOneForms genus_one_check(const IFunctionLG& ilg, const TowerLG& lgtower,
                              const Series<Rat>& Llg, const ContinuedCY& quant_side,
                              const ContinuedCY& gw_side, int check_order) {
    mpfr_prec_t prec = quant_side.prec;
    GenusOneForms f;
    f.vertex = vertex_contribution(ilg, quant_side);
    DLog loop = loop_contribution(lgtower, Llg, quant_side);
    f.loop = loop.reg;
    DLog rhs = f1_deriv_cy_continued(gw_side);

    int n = std::min({check_order, f.vertex.order(), f.loop.order(), rhs.reg.order()});
    f.lhs = f.vertex.truncated(n) + f.loop.truncated(n);
    f.rhs = rhs.reg.truncated(n);
    f.residual = f.lhs - f.rhs;
    f.pole_residual = (loop.pole - rhs.pole).abs();
    f.residual_max = Real(prec);
    for (int k = 0; k <= f.residual.order(); ++k) {
        Real a = f.residual[k].abs();
        if (a > f.residual_max) f.residual_max = a;
    }
    return f;
}

} // namespace lgcy
