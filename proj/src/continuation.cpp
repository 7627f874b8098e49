#include "lgcy/continuation.hpp"

namespace lgcy {

std::vector<LogSeries<Rat>> cy_components_mu0(int order, int max_slot) {
    // R_d(h) = (5d)!/(d!)^5 exp( sum_{j>=1} (-1)^{j+1} h^j / j *
    //            (5^j H_{5d,j} - 5 H_{d,j}) ), h^5 = 0;
    // component n collects q^d ell^r/r! [h^{n-r}] R_d.
    std::vector<LogSeries<Rat>> comp(max_slot + 1, LogSeries<Rat>(order, max_slot));
    std::array<Rat, 5> hs5{}, hs1{}; // prefix sums H_{5d,j}, H_{d,j}, j = 1..4
    Rat c(1);                        // (5d)!/(d!)^5
    for (int d = 0; d <= order; ++d) {
        if (d > 0) {
            for (int k = 5 * d - 4; k <= 5 * d; ++k) {
                Rat inv_k(1, k);
                Rat p = inv_k;
                for (int j = 1; j <= 4; ++j) {
                    hs5[j] += p;
                    p *= inv_k;
                }
                c *= Rat(k);
            }
            Rat inv_d(1, d);
            Rat p = inv_d;
            for (int j = 1; j <= 4; ++j) {
                hs1[j] += p;
                p *= inv_d;
            }
            c /= pow_rat(Rat(d), 5);
        }
        std::array<Rat, 5> expo{};
        for (int j = 1; j <= 4; ++j) {
            Rat v = (pow_rat(Rat(5), j) * hs5[j] - Rat(5) * hs1[j]) / Rat(j);
            expo[j] = (j % 2 == 1) ? v : -v;
        }
        // R = c * exp(expo), truncated at h^5
        std::array<Rat, 5> r{};
        r[0] = Rat(1);
        std::array<Rat, 5> pw{};
        pw[0] = Rat(1);
        Rat fact(1);
        for (int k = 1; k <= 4; ++k) {
            std::array<Rat, 5> nx{};
            for (int a = 0; a <= 4; ++a)
                for (int b = 1; a + b <= 4; ++b) nx[a + b] += pw[a] * expo[b];
            pw = nx;
            fact /= Rat(k);
            for (int a = 0; a <= 4; ++a) r[a] += pw[a] * fact;
        }
        for (int a = 0; a <= 4; ++a) r[a] *= c;

        for (int n = 0; n <= max_slot; ++n)
            for (int rr = 0; rr <= n; ++rr) {
                int s = n - rr;
                if (s > 4) continue;
                comp[n].at(rr).at(d) += r[s] / Rat(factorial(rr));
            }
    }
    return comp;
}

std::vector<Series<Rat>> lg_components_mu0(int order, int max_slot) {
    std::vector<Series<Rat>> comp(max_slot + 1, Series<Rat>(order));
    for (int n = 0; n <= max_slot && n <= 4; ++n) {
        Rat prod(1);
        for (int m = 0; 5 * m + n <= order; ++m) {
            if (m > 0) prod *= pow_rat(Rat(n + 1 + 5 * (m - 1), 5), 5);
            comp[n].at(5 * m + n) = prod / Rat(factorial(5 * m + n));
        }
    }
    return comp;
}

PathSpec default_path(mpfr_prec_t prec) {
    auto pt = [&](const Rat& re, const Rat& im) {
        return Complex{Real::of(re, prec), Real::of(im, prec)};
    };
    Rat qs(1, 3125); // discriminant
    PathSpec p;
    p.waypoints.push_back(pt(qs / 4, Rat(0)));
    p.waypoints.push_back(pt(qs / 4, qs));
    p.waypoints.push_back(pt(2 * qs, qs));
    p.waypoints.push_back(pt(Rat(1, 10), Rat(1, 20)));
    p.waypoints.push_back(pt(Rat(32), Rat(0)));
    return p;
}

namespace {

// the ODE sum_k c_k(q) y^(k) = 0 with polynomial coefficients; c[k][j]
// multiplies q^j
struct OdePoly {
    std::vector<std::vector<Complex>> c;
    mpfr_prec_t prec;
};

OdePoly make_ode(mpfr_prec_t prec) {
    auto cq = cy_pf_dq_coefficients();
    OdePoly ode;
    ode.prec = prec;
    ode.c.resize(cq.size());
    for (size_t k = 0; k < cq.size(); ++k) {
        ode.c[k].reserve(cq[k].size());
        for (const auto& r : cq[k]) ode.c[k].push_back(Complex::of(r, prec));
    }
    return ode;
}

// recenter polynomial at q = c0 + h by Horner shifts
std::vector<Complex> recenter(const std::vector<Complex>& poly, const Complex& c0) {
    std::vector<Complex> p = poly;
    int n = static_cast<int>(p.size());
    for (int i = 0; i < n; ++i)
        for (int j = n - 2; j >= i; --j) p[j] = p[j] + c0 * p[j + 1];
    return p;
}

// One Taylor step for all columns; jets hold a_k = y^(k)(center)/k!.
// Returns the relative size of the last few Taylor terms at h, the local
// truncation estimate the caller budgets against.
Real taylor_step(const OdePoly& ode, const Complex& center, const Complex& h,
                 const std::vector<Jet>& jets, std::vector<Jet>& out, int taylor_order) {
    mpfr_prec_t prec = ode.prec;
    int jd = static_cast<int>(jets[0].size());
    std::vector<std::vector<Complex>> cs(6);
    for (int k = 0; k <= 5; ++k) cs[k] = recenter(ode.c[k], center);
    Complex lead_inv = cs[5][0].inv();

    out.clear();
    Real habs = h.abs();
    Real tail(prec), scale(prec);
    for (const auto& jet : jets) {
        std::vector<Complex> a = jet;
        a.resize(taylor_order + 1, Complex(prec));
        for (int m = 0; m + 5 <= taylor_order; ++m) {
            Complex acc(prec);
            for (int k = 0; k <= 5; ++k) {
                int jmax = static_cast<int>(cs[k].size()) - 1;
                for (int j = 0; j <= jmax && j <= m; ++j) {
                    if (k == 5 && j == 0) continue; // unknown term
                    if (cs[k][j].is_zero()) continue;
                    int idx = m - j + k;
                    Rat ff(1); // falling factorial idx (idx-1) ... (idx-k+1)
                    for (int t = 0; t < k; ++t) ff *= Rat(idx - t);
                    acc += cs[k][j] * a[idx] * Complex::of(ff, prec);
                }
            }
            Rat ff5(1);
            for (int t = 0; t < 5; ++t) ff5 *= Rat(m + 5 - t);
            a[m + 5] = -acc * lead_inv / Complex::of(ff5, prec);
        }
        Jet next(jd, Complex(prec));
        for (int der = 0; der < jd; ++der) {
            Complex val(prec);
            for (int n = taylor_order; n >= der; --n)
                val = val * h + a[n] * Complex::of(Rat(binomial(n, der)), prec);
            next[der] = val; // y^{(der)}(center+h)/der!
        }
        // local truncation estimate from the last terms of the value series
        {
            Real hk = Real::of(1, prec);
            for (int n = 0; n < taylor_order - 4; ++n) hk = hk * habs;
            for (int n = taylor_order - 4; n <= taylor_order; ++n) {
                tail += a[n].abs() * hk;
                hk = hk * habs;
            }
        }
        Real s = next[0].abs();
        if (s > scale) scale = s;
        out.push_back(std::move(next));
    }
    if (scale.is_zero()) scale = Real::of(1, prec);
    return tail / scale;
}

} // namespace

std::vector<Jet> transport_jets(const PathSpec& path, std::vector<Jet> jets,
                                const TransportOptions& opt, int* steps_out) {
    mpfr_prec_t prec = opt.prec;
    OdePoly ode = make_ode(prec);
    Complex disc = Complex::of(Rat(1, 3125), prec);
    Real margin = Real::of(Rat(1, 31250), prec); // 0.1 * discriminant
    Real ratio = Real::of(opt.step_ratio, prec);
    int steps = 0;

    Real budget = Real::pow2(16 - static_cast<long>(prec), prec);
    for (size_t seg = 0; seg + 1 < path.waypoints.size(); ++seg) {
        Complex pos = path.waypoints[seg];
        Complex target = path.waypoints[seg + 1];
        bool done = false;
        while (!done) {
            Complex rem = target - pos;
            Real rem_abs = rem.abs();
            if (rem_abs.is_zero()) break;
            Real d0 = pos.abs();
            Real d1 = (pos - disc).abs();
            Real rho = d0 < d1 ? d0 : d1;
            if (rho < margin)
                throw std::domain_error("transport_jets: path too close to a singular point");
            Real hmax = ratio * rho;
            Complex h = rem;
            done = !(rem_abs > hmax);
            if (!done) h = rem * Complex::of(hmax / rem_abs);
            std::vector<Jet> next;
            for (int tries = 0;; ++tries) {
                Real est = taylor_step(ode, pos, h, jets, next, opt.taylor_order);
                if (!(est > budget)) break;
                if (tries >= 6)
                    throw std::domain_error(
                        "transport_jets: step rejected (local truncation over budget)");
                h = h * Complex::of(Rat(1, 2), prec);
                done = false;
            }
            jets = std::move(next);
            pos = done ? target : pos + h;
            ++steps;
        }
    }
    if (steps_out) *steps_out = steps;
    return jets;
}

namespace {

// jet of a rational series at a complex center: J_k = sum_n C(n,k) c_n x0^{n-k}
Jet series_jet(const Series<Rat>& f, const Complex& x0, int jd) {
    mpfr_prec_t prec = x0.prec();
    Jet out(jd, Complex(prec));
    for (int k = 0; k < jd; ++k) {
        Complex acc(prec);
        for (int n = f.order(); n >= k; --n)
            acc = acc * x0 + Complex::of(f[n] * Rat(binomial(n, k)), prec);
        out[k] = acc;
    }
    return out;
}

Jet jet_mul(const Jet& a, const Jet& b, mpfr_prec_t prec) {
    int n = static_cast<int>(a.size());
    Jet r(n, Complex(prec));
    for (int i = 0; i < n; ++i)
        for (int j = 0; i + j < n; ++j) r[i + j] += a[i] * b[j];
    return r;
}

// seed jets of the five CY Frobenius solutions at q0 (principal log branch)
std::vector<Jet> cy_seed_jets(const Complex& q0, int terms, int jd, mpfr_prec_t prec) {
    auto comps = cy_components_mu0(terms, 4);
    Jet logjet(jd, Complex(prec));
    logjet[0] = q0.log();
    Complex qinv = q0.inv();
    Complex qpow = Complex::of(1, prec);
    for (int k = 1; k < jd; ++k) {
        qpow = qpow * qinv;
        logjet[k] = Complex::of(Rat(k % 2 == 1 ? 1 : -1, k), prec) * qpow;
    }
    std::vector<Jet> jets;
    for (int n = 0; n <= 4; ++n) {
        Jet acc(jd, Complex(prec));
        Jet lp(jd, Complex(prec));
        lp[0] = Complex::of(1, prec);
        for (int r = 0; r <= comps[n].ell_degree(); ++r) {
            if (r > 0) lp = jet_mul(lp, logjet, prec);
            if (comps[n].coeff(r).is_zero()) continue;
            Jet fj = series_jet(comps[n].coeff(r), q0, jd);
            Jet term = jet_mul(lp, fj, prec);
            for (int k = 0; k < jd; ++k) acc[k] += term[k];
        }
        jets.push_back(acc);
    }
    return jets;
}

// compose a q-jet at q1 with q(t) = t^{-5} around t1: the delta-q jet has
// coefficient q1 * C(-5,k) / t1^k at s^k
Jet q_to_t_jet(const Jet& a, const Complex& q1, const Complex& t1, mpfr_prec_t prec) {
    int jd = static_cast<int>(a.size());
    Jet dq(jd, Complex(prec));
    Rat binom_m5(1);
    Complex tinv = t1.inv();
    Complex tpow = Complex::of(1, prec);
    for (int k = 1; k < jd; ++k) {
        binom_m5 *= Rat(-5 - (k - 1), k); // C(-5, k)
        tpow = tpow * tinv;
        dq[k] = q1 * Complex::of(binom_m5, prec) * tpow;
    }
    Jet out(jd, Complex(prec));
    out[0] = a[0];
    Jet pw(jd, Complex(prec));
    pw[0] = Complex::of(1, prec);
    for (int k = 1; k < jd; ++k) {
        pw = jet_mul(pw, dq, prec);
        for (int i = 0; i < jd; ++i) out[i] += a[k] * pw[i];
    }
    return out;
}

CMat solve_connection(const std::vector<Jet>& tjets, const Complex& t1, int terms,
                      mpfr_prec_t prec) {
    auto lg = lg_components_mu0(terms, 4);
    int jd = static_cast<int>(tjets[0].size());
    CMat g(5, prec);
    for (int j = 0; j <= 4; ++j) {
        Jet jet = series_jet(lg[j].shifted_up(1), t1, jd); // u_j = t I_j^LG
        for (int k = 0; k < 5; ++k) g(k, j) = jet[k];
    }
    CMat conn(5, prec);
    for (int r = 0; r < 5; ++r) {
        std::vector<Complex> rhs;
        for (int k = 0; k < 5; ++k) rhs.push_back(tjets[r][k]);
        auto col = g.solve(rhs);
        for (int j = 0; j < 5; ++j) conn(r, j) = col[j];
    }
    return conn;
}

Complex continue_l_branch(const PathSpec& path, const Complex& t1, int terms,
                          mpfr_prec_t prec) {
    // follow w(q) = 1 - 5^5 q along the path with a continuously tracked
    // argument; each sub-piece is short enough for the principal increment
    Complex c3125 = Complex::of(3125, prec);
    Complex one = Complex::of(1, prec);
    auto w_at = [&](const Complex& q) { return one - c3125 * q; };
    Complex prev_w = w_at(path.waypoints[0]);
    Real theta = prev_w.arg();
    for (size_t seg = 0; seg + 1 < path.waypoints.size(); ++seg) {
        const Complex &a = path.waypoints[seg], &b = path.waypoints[seg + 1];
        const int pieces = 64;
        for (int i = 1; i <= pieces; ++i) {
            Complex q = a + (b - a) * Complex::of(Rat(i, pieces), prec);
            Complex w = w_at(q);
            theta = theta + (w / prev_w).arg();
            prev_w = w;
        }
    }
    Complex logw{prev_w.abs().log(), theta};
    Complex lpath = (logw * Complex::of(Rat(-1, 5), prec)).exp();
    Series<Rat> llg = big_L(Side::LG, terms);
    Complex llg_val = eval_series(to_complex(llg, prec), t1);
    Complex denom = t1 * Complex::of(Rat(1, 5), prec) * llg_val;
    return lpath / denom;
}

} // namespace

TransportResult pf_transport(const PathSpec& path, const TransportOptions& opt,
                             const ConstantPool& pool) {
    (void)pool;
    mpfr_prec_t prec = opt.prec;
    if (path.waypoints.size() < 2)
        throw std::invalid_argument("pf_transport: need at least two waypoints");

    Complex q0 = path.waypoints.front();
    Complex q1 = path.waypoints.back();
    // endpoint convergence requirements (with margin for the series tails)
    if (!(q0.abs() * Real::of(3125, prec) < Real::of(Rat(1, 2), prec)))
        throw std::domain_error("pf_transport: q0 outside the q-series disk");
    Complex t1 = (q1.log() * Complex::of(Rat(-1, 5), prec)).exp(); // principal branch
    if (!(t1.abs() < Real::of(2, prec)))
        throw std::domain_error("pf_transport: endpoint outside the t-series disk");

    const int jd = 6;
    std::vector<Jet> start = cy_seed_jets(q0, opt.terms(), jd, prec);
    std::vector<Jet> jets = start;
    int steps = 0;
    jets = transport_jets(path, jets, opt, &steps);

    std::vector<Jet> tjets;
    for (const auto& a : jets) tjets.push_back(q_to_t_jet(a, q1, t1, prec));
    CMat conn = solve_connection(tjets, t1, opt.terms(), prec);

    TransportResult res;
    res.connection5 = conn;
    res.bhat = CMat(4, prec);
    for (int r = 0; r < 4; ++r)
        for (int j = 0; j < 4; ++j) res.bhat(r, j) = conn(r, j) * Complex::of(5, prec);
    res.steps = steps;
    res.q0 = q0;
    res.t1 = t1;
    res.beta_path = continue_l_branch(path, t1, opt.terms(), prec);

    // path reversal
    PathSpec rev;
    rev.waypoints.assign(path.waypoints.rbegin(), path.waypoints.rend());
    std::vector<Jet> back = transport_jets(rev, jets, opt, nullptr);
    Real num(prec), den(prec);
    for (size_t r = 0; r < back.size(); ++r)
        for (int k = 0; k < jd; ++k) {
            Real d = (back[r][k] - start[r][k]).abs();
            Real s = start[r][k].abs();
            if (d > num) num = d;
            if (s > den) den = s;
        }
    res.path_reversal = num / den;

    // step halving
    TransportOptions half = opt;
    half.step_ratio = opt.step_ratio / Rat(2);
    std::vector<Jet> jets2 = transport_jets(path, start, half, nullptr);
    std::vector<Jet> tjets2;
    for (const auto& a : jets2) tjets2.push_back(q_to_t_jet(a, q1, t1, prec));
    CMat conn2 = solve_connection(tjets2, t1, opt.terms(), prec);
    Real worst(prec);
    for (int r = 0; r < 5; ++r)
        for (int j = 0; j < 5; ++j) {
            Real d = (conn(r, j) - conn2(r, j)).abs();
            if (d > worst) worst = d;
        }
    res.step_halving = worst;
    return res;
}

ContinuedCY build_continued_cy(const CMat& b, const IFunctionLG& ilg, int order,
                               mpfr_prec_t prec) {
    if (ilg.order < order) throw std::invalid_argument("build_continued_cy: ilg too short");
    ContinuedCY c;
    c.prec = prec;
    c.order = order;
    c.b = b;
    for (int i = 0; i < 4; ++i) {
        Series<Complex> g(order, Complex(prec));
        for (int j = 0; j < 4; ++j)
            g += to_complex(ilg.comp[j].truncated(order), prec).scaled(b(i, j));
        c.g[i] = g;
    }
    c.tower = build_tower_cont(c.g);
    c.tau = c.g[1] / c.g[0];
    return c;
}

Real cont_tower_product_residual(const ContinuedCY& cont, const Series<Rat>& Llg) {
    mpfr_prec_t prec = cont.prec;
    ValSeries prod = cont.tower.at(0, 0) * cont.tower.at(0, 0); // Itilde_44 = Itilde_00
    for (int p = 1; p <= 3; ++p) prod = prod * cont.tower.at(p, p);
    Series<Complex> lhs = prod.power_series(prod.unit.order() + prod.val);
    // -((t/5) L)^5
    Series<Complex> l = to_complex(Llg, prec);
    Series<Complex> tl =
        l.shifted_up(1).scaled(ring<Complex>::from_rat(Rat(1, 5), Complex(prec)));
    Series<Complex> rhs = tl * tl;
    rhs = rhs * rhs * tl;
    rhs = -rhs;
    int n = std::min(lhs.order(), rhs.order());
    Series<Complex> diff = lhs.truncated(n) - rhs.truncated(n);
    Real worst(prec);
    for (int k = 0; k <= diff.order(); ++k) {
        Real a = diff[k].abs();
        if (a > worst) worst = a;
    }
    return worst;
}

} // namespace lgcy
