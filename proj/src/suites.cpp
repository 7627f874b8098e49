#include "lgcy/suites.hpp"

#include "lgcy/birkhoff.hpp"
#include "lgcy/genusone.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace lgcy {

const std::vector<std::string> kAllSuites = {"constants", "series",        "pf",
                                             "u-matrix",  "birkhoff",      "tower",
                                             "continuation", "genus-one"};

void RunConfig::validate() const {
    if (precision < 64) throw std::invalid_argument("config: precision >= 64 required");
    if (order < 1) throw std::invalid_argument("config: order >= 1 required");
    if (mu_cap < 1) throw std::invalid_argument("config: mu-cap >= 1 required");
    if (format != "text" && format != "json")
        throw std::invalid_argument("config: format must be text or json");
    for (const auto& s : suites) {
        bool known = false;
        for (const auto& k : kAllSuites) known = known || (k == s);
        if (!known) throw std::invalid_argument("config: unknown suite " + s);
    }
}

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt_real(const Real& r) { return r.str(30); }

struct Ctx {
    RunConfig cfg;
    ConstantPool pool;
    Real tol;
    Report rep;
    Clock::time_point mark;

    explicit Ctx(const RunConfig& c)
        : cfg(c), pool(build_constant_pool(c.precision, 8)), tol(pool.tolerance()) {
        if (c.tolerance) tol = Real::parse(*c.tolerance, c.precision);
        mark = Clock::now();
    }

    double take_ms() {
        auto now = Clock::now();
        double ms = std::chrono::duration<double, std::milli>(now - mark).count();
        mark = now;
        return ms;
    }

    void add(const std::string& id, const std::string& ref, const Real& residual,
             const Real& tolerance, int order) {
        CheckResult c;
        c.id = id;
        c.ref = ref;
        c.pass = !(residual > tolerance);
        c.residual = fmt_real(residual);
        c.tolerance = fmt_real(tolerance);
        c.order = order;
        c.precision = cfg.precision;
        c.wall_ms = take_ms();
        rep.checks.push_back(std::move(c));
    }
    void add(const std::string& id, const std::string& ref, const Real& residual, int order) {
        add(id, ref, residual, tol, order);
    }
    void add_exact(const std::string& id, const std::string& ref, bool zero, int order) {
        CheckResult c;
        c.id = id;
        c.ref = ref;
        c.pass = zero;
        c.residual = zero ? "0 (exact)" : "nonzero";
        c.tolerance = "exact";
        c.order = order;
        c.precision = cfg.precision;
        c.wall_ms = take_ms();
        rep.checks.push_back(std::move(c));
    }
    void add_expect(const std::string& id, const std::string& ref, bool pass,
                    const std::string& note, int order) {
        CheckResult c;
        c.id = id;
        c.ref = ref;
        c.pass = pass;
        c.residual = note;
        c.tolerance = "see ref";
        c.order = order;
        c.precision = cfg.precision;
        c.wall_ms = take_ms();
        rep.checks.push_back(std::move(c));
    }

    // lazily built artifacts
    std::optional<IFunctionLG> ilg_;
    std::optional<IFunctionCY> icy_;
    std::optional<LGComponents> lgtw_;
    std::optional<CYComponents> cytw_;
    std::optional<TowerLG> tower_lg_;
    std::optional<TowerCY> tower_cy_;
    std::optional<UMatrix> u_;
    std::optional<BirkhoffFactors> bf_;
    std::optional<CMat> b_;
    std::optional<TransportResult> tr_;
    std::optional<ContinuedCY> cont_u_, cont_tr_;
    std::optional<Series<Rat>> llg_, lcy_;

    const IFunctionLG& ilg() {
        if (!ilg_) ilg_ = build_ilg(cfg.order + 2);
        return *ilg_;
    }
    const IFunctionCY& icy() {
        if (!icy_) icy_ = build_icy(cfg.order + 2);
        return *icy_;
    }
    const LGComponents& lgtw() {
        if (!lgtw_) lgtw_ = build_ilg_twisted(cfg.order + 10, 9, cfg.mu_cap);
        return *lgtw_;
    }
    const CYComponents& cytw() {
        if (!cytw_) cytw_ = build_icy_twisted(cfg.order, 9, cfg.mu_cap);
        return *cytw_;
    }
    const TowerLG& tower_lg() {
        if (!tower_lg_) tower_lg_ = build_tower_lg(lgtw(), 9);
        return *tower_lg_;
    }
    const TowerCY& tower_cy() {
        if (!tower_cy_) tower_cy_ = build_tower_cy(cytw(), 9);
        return *tower_cy_;
    }
    const Series<Rat>& llg() {
        if (!llg_) llg_ = big_L(Side::LG, cfg.order + 10);
        return *llg_;
    }
    const Series<Rat>& lcy() {
        if (!lcy_) lcy_ = big_L(Side::CY, cfg.order + 10);
        return *lcy_;
    }
    const UMatrix& u() {
        if (!u_) u_ = build_u_matrix(pool);
        return *u_;
    }
    const BirkhoffFactors& bf() {
        if (!bf_) bf_ = birkhoff_factorize(u());
        return *bf_;
    }
    const CMat& b() {
        if (!b_) b_ = extract_b_matrix(u(), ilg(), pool);
        return *b_;
    }
    const TransportResult& tr() {
        if (!tr_) {
            TransportOptions opt;
            opt.prec = cfg.precision;
            opt.taylor_order = cfg.taylor_order;
            PathSpec p = cfg.path ? *cfg.path : default_path(cfg.precision);
            tr_ = pf_transport(p, opt, pool);
        }
        return *tr_;
    }
    const ContinuedCY& cont_u() {
        if (!cont_u_) cont_u_ = build_continued_cy(b(), ilg(), cfg.order + 2, cfg.precision);
        return *cont_u_;
    }
    const ContinuedCY& cont_tr() {
        if (!cont_tr_) cont_tr_ = build_continued_cy(tr().bhat, ilg(), cfg.order + 2, cfg.precision);
        return *cont_tr_;
    }
};

Real series_max_abs(const Series<Complex>& s, int through) {
    Real m(s.ctx().prec());
    for (int k = 0; k <= std::min(through, s.order()); ++k) {
        Real a = s[k].abs();
        if (a > m) m = a;
    }
    return m;
}

// ------------------------------------------------------------------ suites

void suite_constants(Ctx& c) {
    const ConstantPool& p = c.pool;
    mpfr_prec_t prec = p.precision;
    Real tolp = Real::pow2(8 - static_cast<long>(prec), prec); // pool contract

    for (int j = 1; j <= 2; ++j) {
        Real lhs = p.gamma_fifth[j] * p.gamma_fifth[5 - j];
        Real rhs = p.pi / (Real::of(Rat(j), prec) * p.pi / Real::of(5, prec)).sin();
        c.add("constants.reflection-j" + std::to_string(j),
              "Gamma(j/5) Gamma(1-j/5) = pi / sin(pi j/5)", ((lhs - rhs) / rhs).abs(), tolp, 0);
    }
    {
        Real rhs = p.pi * p.pi / Real::of(6, prec);
        c.add("constants.zeta2", "zeta(2) = pi^2/6", ((p.zeta[2] - rhs) / rhs).abs(), tolp, 0);
    }
    c.add("constants.xi-root", "|xi^5 - 1| = 0",
          (p.xi.pow_int(5) - Complex::of(1, prec)).abs(), tolp, 0);
    {
        Complex s(prec);
        for (int a = 0; a < 5; ++a) s += p.xi_pow(a);
        c.add("constants.xi-sum", "sum of the five fifth roots of unity vanishes", s.abs(), tolp,
              0);
    }
    {
        Complex lhs = p.two_pi_i.pow_int(3) * p.e_const;
        Real r1 = lhs.im.abs();
        Real r2 = (lhs.re + Real::of(40, prec) * p.zeta[3]).abs();
        c.add("constants.E-imag", "(2 pi i)^3 E is real", r1, tolp, 0);
        c.add("constants.E-value", "(2 pi i)^3 E = -40 zeta(3)", r2, tolp, 0);
    }
    {
        Real lhs = p.gamma_fifth[1] * p.gamma_fifth[2] * p.gamma_fifth[3] * p.gamma_fifth[4];
        Real rhs = Real::of(4, prec) * p.pi * p.pi / Real::of(5, prec).sqrt();
        c.add("constants.gauss-product", "Gamma(1/5)...Gamma(4/5) = (2 pi)^2 / sqrt(5)",
              ((lhs - rhs) / rhs).abs(), tolp, 0);
    }
    {
        auto lg = loggamma_coeffs(3, p);
        Real r1 = (lg[0] + Complex::of(p.euler)).abs();
        Real r2 = (lg[1] - Complex::of(p.pi * p.pi / Real::of(12, prec))).abs();
        c.add("constants.loggamma-c1", "c1 = -euler", r1, tolp, 0);
        c.add("constants.loggamma-c2", "c2 = zeta(2)/2 = pi^2/12", r2, tolp, 0);
        // cross-check the degree-3 truncation against a direct Gamma value
        Real x = Real::pow2(0, prec); // 1
        x = Real::of(Rat(1, 100000000), prec);
        Complex acc(prec);
        for (int k = 3; k >= 1; --k) acc = (acc + lg[k - 1]) * Complex::of(x);
        Real approx = acc.exp().re;
        Real direct = Real::gamma(Real::of(1, prec) + x);
        c.add("constants.loggamma-c3-oracle",
              "exp of the cubic log-Gamma truncation matches Gamma(1+1e-8)",
              ((approx - direct) / direct).abs(), Real::parse("1e-20", prec), 0);
    }
    {
        bool threw = false;
        try {
            build_constant_pool(32, 8);
        } catch (const std::invalid_argument&) {
            threw = true;
        }
        c.add_expect("constants.precision-floor", "precision below 64 bits is rejected", threw,
                     threw ? "rejected" : "accepted", 0);
    }
}

void suite_series(Ctx& c) {
    int n = c.cfg.order;
    {
        Series<Rat> f(2);
        f.at(0) = Rat(1);
        f.at(1) = Rat(120);
        f.at(2) = Rat(113400);
        Series<Rat> g = f.inverted();
        bool ok = (f * g - Series<Rat>::one(2)).is_zero();
        c.add_exact("series.invert-roundtrip", "f * invert(f) = 1 + O(x^{N+1})", ok, 2);
    }
    {
        Series<Rat> f = Series<Rat>::one(3) - Series<Rat>::monomial(Rat(1), 1, 3);
        Series<Rat> g = f.inverted();
        bool ok = g[0] == 1 && g[1] == 1 && g[2] == 1 && g[3] == 1;
        c.add_exact("series.invert-geometric", "1/(1-x) = 1 + x + x^2 + ...", ok, 3);
    }
    {
        // deterministic pseudo-random rational series, exact exp/log round trip
        Series<Rat> f(n);
        long seed = 12345;
        for (int k = 1; k <= n; ++k) {
            seed = (seed * 1103515245 + 12345) % 2147483648L;
            f.at(k) = Rat((seed % 19) - 9, 1 + (seed % 7));
        }
        bool ok = (series_log(series_exp(f)) - f).is_zero();
        c.add_exact("series.exp-log-roundtrip", "log(exp(f)) = f for zero-constant f", ok, n);
    }
    {
        Series<Rat> x = Series<Rat>::monomial(Rat(1), 1, n);
        Series<Rat> lhs = geometric_binomial_sum(x, 2);
        Series<Rat> one_minus = Series<Rat>::one(n) - x;
        bool ok = (lhs - one_minus.inverted()).is_zero();
        c.add_exact("series.geom-binom-j2", "sum_m T0^m = 1/(1-T0) at j=2", ok, n);
    }
    {
        Series<Rat> t0(n);
        long seed = 98765;
        for (int k = 1; k <= n; ++k) {
            seed = (seed * 1103515245 + 12345) % 2147483648L;
            t0.at(k) = Rat((seed % 11) - 5, 1 + (seed % 5));
        }
        Series<Rat> lhs = geometric_binomial_sum(t0, 5);
        Series<Rat> rhs = series_pow(Series<Rat>::one(n) - t0, Rat(-4));
        c.add_exact("series.geom-binom-oracle", "binomial sum equals (1-T0)^{1-j} at j=5",
                    (lhs - rhs).is_zero(), n);
    }
    {
        // adjoint is an anti-homomorphism on random Laurent matrices
        mpfr_prec_t prec = c.cfg.precision;
        CMat pair = quintic_pairing(4, prec);
        long seed = 555;
        auto rnd_mat = [&]() {
            LaurentMatrix m(4, prec);
            for (int k = -2; k <= 2; ++k)
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 4; ++j) {
                        seed = (seed * 1103515245 + 12345) % 2147483648L;
                        m.at(k)(i, j) = Complex::of(Rat((seed % 13) - 6, 3), prec);
                    }
            return m;
        };
        LaurentMatrix m = rnd_mat(), nmat = rnd_mat();
        LaurentMatrix lhs = (m * nmat).adjoint(pair);
        LaurentMatrix rhs = nmat.adjoint(pair) * m.adjoint(pair);
        c.add("series.adjoint-antihom", "(MN)* = N* M* for the quintic pairing",
              (lhs - rhs).max_abs(), 0);
        LaurentMatrix invol = m.adjoint(pair).adjoint(pair) - m;
        c.add("series.adjoint-involution", "(M*)* = M", invol.max_abs(), 0);
    }
    {
        // derivation property of the log-bearing series
        LogSeries<Rat> f(n, 2), g(n, 1);
        long seed = 777;
        auto fill = [&](LogSeries<Rat>& h) {
            for (int k = 0; k <= h.ell_degree(); ++k)
                for (int d = 0; d <= n; ++d) {
                    seed = (seed * 1103515245 + 12345) % 2147483648L;
                    h.at(k).at(d) = Rat((seed % 9) - 4, 1 + (seed % 3));
                }
        };
        fill(f);
        fill(g);
        LogSeries<Rat> lhs = (f * g).euler_derivative();
        LogSeries<Rat> rhs = f.euler_derivative() * g + f * g.euler_derivative();
        c.add_exact("series.log-derivation", "D(fg) = f D(g) + g D(f) with D(ell) = 1",
                    (lhs - rhs).is_zero(), n);
    }
    {
        // graded rings: nilpotence and the phi^5 = mu relation
        Phi5 x(2);
        long seed = 31337;
        for (int i = 0; i < 5; ++i) {
            seed = (seed * 1103515245 + 12345) % 2147483648L;
            x.a[i] = MuPoly(Rat((seed % 15) - 7, 2), 2);
        }
        Phi5 lhs = Phi5::phi_power(5, 2) * x;
        Phi5 rhs = MuPoly::mu(2) * x;
        bool ok = (lhs - rhs).is_zero();
        Nilp4<Rat> y;
        y.a = {Rat(3), Rat(-2), Rat(5), Rat(7)};
        Nilp4<Rat> h3;
        h3.a = {Rat(0), Rat(0), Rat(0), Rat(1)};
        Nilp4<Rat> z = h3 * y;
        bool ok2 = z.a[3] == Rat(3) * Rat(1); // only H^3 coefficient survives
        ok2 = ok2 && z.a[0] == 0 && z.a[1] == 0 && z.a[2] == 0;
        c.add_exact("series.graded-relations", "H^4 = 0 and phi^5 x = mu x", ok && ok2, 0);
    }
}

void suite_pf(Ctx& c) {
    int n = c.cfg.order;
    {
        PFOperator op{Side::CY, true};
        auto res = pf_apply_cy(op, c.cytw(), true);
        bool ok = true;
        for (const auto& r : res) ok = ok && r.truncated(n - 5).is_zero();
        c.add_exact("pf.cy-annihilation",
                    "the CY Picard-Fuchs operator annihilates the twisted I-function", ok, n - 5);
    }
    {
        PFOperator op{Side::LG, true};
        auto res = pf_apply_lg(op, c.lgtw(), true);
        bool ok = true;
        for (const auto& r : res) ok = ok && r.truncated(n).is_zero();
        c.add_exact("pf.lg-annihilation",
                    "the LG Picard-Fuchs operator annihilates t * I^LG (indexed product)", ok,
                    n - 5);
    }
    {
        PFOperator op{Side::LG, false};
        auto res = pf_apply_lg(op, c.lgtw(), true);
        bool nonzero = false;
        for (const auto& r : res) nonzero = nonzero || !r.truncated(n).is_zero();
        c.add_expect("pf.lg-verbatim-fails",
                     "the unindexed (tD-1)^5 variant does not annihilate t * I^LG", nonzero,
                     nonzero ? "nonzero residual (as required)" : "unexpectedly zero", n - 5);
    }
    {
        // operator match under q^{-1} = t^5: prod(5x+i) at x = -y/5 equals -prod(y-i)
        auto p = cy_pf_product_poly();
        std::vector<Rat> lhs(6, Rat(0));
        // evaluate p at x = -y/5 as a polynomial in y
        for (int s = 5; s >= 0; --s) {
            // multiply lhs by (-y/5) and add p[s]
            std::vector<Rat> nx(6, Rat(0));
            for (int k = 0; k + 1 < 6; ++k) nx[k + 1] = lhs[k] * Rat(-1, 5);
            nx[0] += p[s];
            for (int k = 1; k < 6; ++k) nx[k] = nx[k] + (k < 6 ? Rat(0) : Rat(0));
            for (int k = 0; k < 6; ++k) lhs[k] = nx[k] + (k >= 1 ? Rat(0) : Rat(0));
        }
        // rebuild properly with Horner: lhs = sum p[s] (-y/5)^s
        std::vector<Rat> horner(6, Rat(0));
        for (int s = 5; s >= 0; --s) {
            std::vector<Rat> nx(6, Rat(0));
            for (int k = 0; k + 1 < 6; ++k) nx[k + 1] = horner[k] * Rat(-1, 5);
            nx[0] += p[s];
            horner = nx;
        }
        std::vector<Rat> rhs{Rat(1)};
        for (int i = 1; i <= 5; ++i) {
            std::vector<Rat> nx(rhs.size() + 1, Rat(0));
            for (size_t k = 0; k < rhs.size(); ++k) {
                nx[k] += rhs[k] * Rat(-i);
                nx[k + 1] += rhs[k];
            }
            rhs = nx;
        }
        bool ok = true;
        for (int k = 0; k < 6; ++k) ok = ok && horner[k] == -rhs[k];
        c.add_exact("pf.operators-match",
                    "CY and LG Picard-Fuchs operators agree under q^{-1} = t^5", ok, 0);
    }
    {
        // mu-monomial structure of the components
        bool ok = true;
        for (int s = 0; s <= 9; ++s) {
            ok = ok && mu_valuation(c.lgtw().comp[s]) >= s / 5;
            Series<MuPoly> ell0 = c.cytw().comp[s].coeff(0);
            if (!ell0.is_zero()) ok = ok && mu_valuation(ell0) >= s / 5;
        }
        c.add_exact("pf.mu-monomial", "component q carries the monomial mu^{floor(q/5)}", ok, n);
    }
}

void suite_umatrix(Ctx& c) {
    c.add("umatrix.band", "entry (r,m) of U(-z) is supported at z^{m-r} only",
          u_band_residual(c.u()), 0);
    c.add("umatrix.closed-form", "all 16 entries match the Gamma/xi closed forms (C, E)",
          u_closed_form_residual(c.u(), c.pool), 0);
    c.add("umatrix.symplectic", "U(z) U(-z)* = 1", u_symplectic_residual(c.u(), c.pool), 0);
    {
        Real worst(c.cfg.precision);
        for (int i = 0; i <= 1; ++i)
            for (int j = 0; j < 4; ++j) {
                Real d = (c.b()(i, j) - b_closed_form(i, j, c.pool)).abs();
                if (d > worst) worst = d;
            }
        c.add("umatrix.b-rows01", "b_{ij} closed form for rows 0 and 1", worst, 4);
    }
    {
        bool ok = !c.b()(0, 0).is_zero();
        c.add_expect("umatrix.b-regular", "b_{00} is nonzero (the continued I_0 has t-order 1)",
                     ok, ok ? "nonzero" : "zero", 0);
    }
}

void suite_birkhoff(Ctx& c) {
    mpfr_prec_t prec = c.cfg.precision;
    const BirkhoffFactors& f = c.bf();
    {
        LaurentMatrix su = f.s_negz * c.u().m;
        Real worst(prec);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                Complex want = su_display_closed_form(i, j, c.pool);
                Real d = (su.get(j - i)(i, j) - want).abs();
                if (d > worst) worst = d;
            }
        // everything off the band and below the diagonal must vanish
        for (const auto& [k, m] : su.coeffs())
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    if (j - i == k && j >= i) continue;
                    Real a = m(i, j).abs();
                    if (a > worst) worst = a;
                }
        c.add("birkhoff.su-display", "S(-z) U(-z) reproduces the upper-triangular display",
              worst, 0);
    }
    {
        Real w1 = (f.uplus_linear(0, 1) - uplus_closed_form(0, c.pool)).abs();
        Real w2 = (f.uplus_linear(1, 2) - uplus_closed_form(1, c.pool)).abs();
        Real w3 = (f.uplus_linear(2, 3) - uplus_closed_form(2, c.pool)).abs();
        c.add("birkhoff.uplus-01", "(U_+)_{01} closed form", w1, 0);
        c.add("birkhoff.uplus-12", "(U_+)_{12} closed form", w2, 0);
        c.add("birkhoff.uplus-23", "(U_+)_{23} closed form", w3, 0);
        c.add("birkhoff.uplus-23-eq-01", "(U_+)_{23} = (U_+)_{01} via Gamma reflection",
              (f.uplus_linear(2, 3) - f.uplus_linear(0, 1)).abs(), 0);
    }
    {
        LaurentMatrix re = f.u_minus_negz * f.u0_laurent() * f.u_plus_negz - c.u().m;
        c.add("birkhoff.reassembly", "U_- U_0 U_+ = U", re.max_abs(), 0);
    }
    {
        CMat pair = quintic_pairing(4, prec);
        LaurentMatrix s = f.s_negz.flip_z(); // S(z)
        Real r1 = (s * f.s_negz.adjoint(pair)).distance_to_identity();
        LaurentMatrix r = f.r_negz().flip_z(); // R(z)
        Real r2 = (r * f.r_negz().adjoint(pair)).distance_to_identity();
        LaurentMatrix u0 = f.u0_laurent();
        Real r3 = (u0 * u0.adjoint(pair)).distance_to_identity();
        Real worst = r1 > r2 ? r1 : r2;
        if (r3 > worst) worst = r3;
        c.add("birkhoff.factor-symplectic", "S(z)S(-z)* = R(z)R(-z)* = U_0 U_0* = 1", worst, 0);
    }
    {
        // factorization uniqueness: an admissible triangular perturbation of
        // U_- breaks reassembly
        LaurentMatrix pert = f.u_minus_negz;
        pert.at(-1)(0, 1) += Complex::of(Rat(1, 1000000), prec);
        LaurentMatrix re = pert * f.u0_laurent() * f.u_plus_negz - c.u().m;
        bool broke = re.max_abs() > Real::parse("1e-9", prec);
        c.add_expect("birkhoff.uniqueness", "perturbing U_- breaks the reassembly", broke,
                     broke ? "reassembly residual raised as required" : "perturbation invisible",
                     0);
    }
    {
        CMat pair = quintic_pairing(4, prec);
        LaurentMatrix one = LaurentMatrix::identity(4, prec);
        QuadForm w = quad_form_w(one, 3, pair);
        QuadForm v = quad_form_v(one, 3, pair);
        Real worst = w.remainder > v.remainder ? w.remainder : v.remainder;
        for (const auto& [kl, m] : w.kl) {
            Real a = m.max_abs();
            if (a > worst) worst = a;
        }
        for (const auto& [kl, m] : v.kl) {
            Real a = m.max_abs();
            if (a > worst) worst = a;
        }
        c.add("birkhoff.wv-degenerate", "S = 1 and R = 1 give identically zero W and V", worst,
              0);
    }
    {
        // first-order closed forms with a nilpotent self-adjoint generator
        CMat pair = quintic_pairing(4, prec);
        CMat s1(4, prec);
        s1(0, 1) = Complex::of(1, prec);
        s1(2, 3) = Complex::of(1, prec); // e01* = e23: self-adjoint, square zero
        LaurentMatrix s = LaurentMatrix::identity(4, prec);
        s.at(-1) = s1;
        QuadForm w = quad_form_w(s, 3, pair);
        Real worst = w.remainder;
        Real d00 = (w.get(0, 0, 4, prec) - s1).max_abs();
        if (d00 > worst) worst = d00;
        for (const auto& [kl, m] : w.kl) {
            if (kl.first == 0 && kl.second == 0) continue;
            Real a = m.max_abs();
            if (a > worst) worst = a;
        }
        LaurentMatrix r = LaurentMatrix::identity(4, prec);
        r.at(1) = s1;
        QuadForm v = quad_form_v(r, 3, pair);
        if (v.remainder > worst) worst = v.remainder;
        Real e00 = (v.get(0, 0, 4, prec) - s1).max_abs();
        if (e00 > worst) worst = e00;
        for (const auto& [kl, m] : v.kl) {
            if (kl.first == 0 && kl.second == 0) continue;
            Real a = m.max_abs();
            if (a > worst) worst = a;
        }
        c.add("birkhoff.wv-first-order", "W00 = S1 and V00 = R1 for nilpotent self-adjoint data",
              worst, 0);
    }
    {
        CMat pair = quintic_pairing(4, prec);
        QuadForm w = quad_form_w(f.s_z(), 3, pair);
        QuadForm v = quad_form_v(f.r_negz().flip_z(), 3, pair);
        c.add("birkhoff.w-divisibility", "S(w)*S(z) - 1 is divisible by w^{-1} + z^{-1}",
              w.remainder, 0);
        c.add("birkhoff.v-divisibility", "1 - R(-w)*R(-z) is divisible by w + z", v.remainder,
              0);
        Real worst(prec);
        for (int k = 0; k <= 3; ++k)
            for (int l = 0; k + l <= 3; ++l) {
                CMat wk = w.get(k, l, 4, prec);
                CMat wl = w.get(l, k, 4, prec);
                CMat dw = wk - pair.inverse() * wl.transpose() * pair;
                Real a = dw.max_abs();
                if (a > worst) worst = a;
                CMat vk = v.get(k, l, 4, prec);
                CMat vl = v.get(l, k, 4, prec);
                CMat dv = vk - pair.inverse() * vl.transpose() * pair;
                a = dv.max_abs();
                if (a > worst) worst = a;
            }
        c.add("birkhoff.wv-symmetry", "W_kl = W_lk* and V_kl = V_lk* for k+l <= 3", worst, 0);
    }
}

void suite_tower(Ctx& c) {
    int n = c.cfg.order;
    const TowerLG& lg = c.tower_lg();
    const TowerCY& cy = c.tower_cy();
    {
        Series<MuPoly> prod = lg.at(0, 0);
        for (int p = 1; p <= 4; ++p) prod *= lg.at(p, p);
        Series<Rat> l = c.llg().truncated(prod.order());
        Series<Rat> l5r = l * l;
        l5r = l5r * l5r * l;
        bool ok = (prod - lift_mu(l5r.truncated(prod.order()), c.cfg.mu_cap)).is_zero();
        c.add_exact("tower.product-L5-lg", "I_00 ... I_44 = L^5 on the LG side", ok, n);
    }
    {
        Series<MuPoly> prod = cy.diag(0);
        for (int p = 1; p <= 4; ++p) prod *= cy.diag(p);
        Series<Rat> l = c.lcy().truncated(prod.order());
        Series<Rat> l5r = l * l;
        l5r = l5r * l5r * l;
        bool ok = (prod - lift_mu(l5r.truncated(prod.order()), c.cfg.mu_cap)).is_zero();
        c.add_exact("tower.product-L5-cy", "I_00 ... I_44 = L^5 on the CY side", ok, n);
    }
    {
        bool ok = true;
        for (int p = 0; p <= 4; ++p) {
            Series<MuPoly> lhs = lg.at(5 + p, 5 + p);
            Series<MuPoly> rhs = lg.at(p, p).truncated(lhs.order());
            Series<MuPoly> diff = lhs - mu_shift_up(rhs, 1);
            ok = ok && diff.is_zero();
        }
        c.add_exact("tower.periodicity-lg", "I_{5+p,5+p} = mu I_{p,p} (LG)", ok, n);
    }
    {
        bool ok = true;
        for (int p = 0; p <= 4; ++p) {
            Series<MuPoly> lhs = cy.diag(5 + p);
            Series<MuPoly> diff = lhs - mu_shift_up(cy.diag(p).truncated(lhs.order()), 1);
            ok = ok && diff.is_zero();
        }
        c.add_exact("tower.periodicity-cy", "I_{5+p,5+p} = mu I_{p,p} (CY)", ok, n);
    }
    {
        bool ok = true;
        for (int p = 0; p <= 1; ++p) {
            Series<MuPoly> a = lg.at(p, p);
            Series<MuPoly> b = lg.at(4 - p, 4 - p);
            int m = std::min(a.order(), b.order());
            ok = ok && (a.truncated(m) - b.truncated(m)).is_zero();
            Series<MuPoly> acy = cy.diag(p);
            Series<MuPoly> bcy = cy.diag(4 - p);
            m = std::min(acy.order(), bcy.order());
            ok = ok && (acy.truncated(m) - bcy.truncated(m)).is_zero();
        }
        c.add_exact("tower.palindrome", "I_{p,p} = I_{4-p,4-p} for 0 <= p <= 4", ok, n);
    }
    {
        CScalarsRat cs = c_scalars_lg(lg, c.llg());
        bool ok = true;
        // c_1 c_2 = 1 and c_0 c_3 = 1 encode the product and palindrome identities
        ok = ok && (cs.c[2] * cs.c[3] - Series<Rat>::one(cs.c[2].order())).is_zero();
        ok = ok && (cs.c[1] * cs.c[4] - Series<Rat>::one(cs.c[1].order())).is_zero();
        c.add_exact("tower.c-products", "c_1 c_2 = 1 and c_0 c_3 = 1", ok, n);
        c.add("tower.psi-unitary", "Psi Psi* = 1 for the LG normalization matrix",
              psi_unitarity_residual(cs, c.pool, n), n);
    }
    {
        Series<Rat> g = g_potential_cy_dlogq(cy, c.lcy());
        bool ok = g[0] == Rat(-3, 4);
        c.add_exact("tower.g-cy-constant", "q d/dq of the CY R1 potential at q=0 equals -3/4",
                    ok, n);
    }
    {
        // mu-evaluation commutes with the recursion
        LGComponents lg0 = build_ilg_twisted(c.cfg.order + 10, 9, c.cfg.mu_cap);
        for (auto& s : lg0.comp) s = lift_mu(at_mu_zero(s), 0);
        lg0.mu_cap = 0;
        TowerLG t0 = build_tower_lg(lg0, 4);
        bool ok = true;
        for (int p = 0; p <= 4; ++p) {
            Series<Rat> a = at_mu_zero(lg.at(p, p));
            Series<Rat> b = at_mu_zero(t0.at(p, p));
            int m = std::min(a.order(), b.order());
            ok = ok && (a.truncated(m) - b.truncated(m)).is_zero();
        }
        c.add_exact("tower.mu-commutes", "building at generic mu then setting mu=0 equals the mu=0 build",
                    ok, n);
    }
    {
        // Delta ratio: Delta_a / Delta_b = xi^{3(a-b)} as formal lambda-grading;
        // the series part is alpha-independent by construction
        Series<Rat> d = delta_series_lg(lg, c.llg());
        bool ok = d[0] == Rat(1);
        c.add_exact("tower.delta-normalized", "Delta series I_00^2/L^2 has constant term 1", ok,
                    n);
    }
}

void suite_continuation(Ctx& c) {
    mpfr_prec_t prec = c.cfg.precision;
    const TransportResult& t = c.tr();
    Real tol20 = Real::parse("1e-20", prec);
    {
        Real worst(prec);
        for (int i = 0; i <= 1; ++i)
            for (int j = 0; j < 4; ++j) {
                Real d = (t.bhat(i, j) - b_closed_form(i, j, c.pool)).abs();
                if (d > worst) worst = d;
            }
        c.add("continuation.b-rows01-closed-form",
              "transported connection rows 0,1 match the Gamma/xi closed forms", worst, tol20,
              0);
    }
    {
        Real worst(prec);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                Real d = (t.bhat(i, j) - c.b()(i, j)).abs();
                if (d > worst) worst = d;
            }
        c.add("continuation.b-threeway",
              "transported connection equals the U-extracted b (all four rows)", worst, tol20,
              0);
    }
    c.add("continuation.path-reversal", "transport(P) transport(reverse P) = 1",
          t.path_reversal, Real::parse("1e-19", prec), 0);
    c.add("continuation.step-halving", "halving the step budget moves the connection invisibly",
          t.step_halving, Real::parse("1e-19", prec), 0);
    {
        Complex b5 = t.beta_path.pow_int(5);
        c.add("continuation.beta-fifth-power", "the continued L branch satisfies beta^5 = -1",
              (b5 + Complex::of(1, prec)).abs(), 0);
    }
    c.add("continuation.tower-product",
          "prod Itilde_pp = (Ltilde)^5 with Ltilde^5 = -((t/5) L)^5",
          cont_tower_product_residual(c.cont_u(), c.llg()), c.cfg.order);
    {
        MZeroResult m = m_zero_check(c.tower_lg(), c.cont_u().tower, c.llg(), c.pool);
        int ord = std::min(c.cfg.order, 12);
        c.add("continuation.m-matrix-diagonal",
              "M(t,0) diagonal product formula equals -(Psi~)^{-1} Psi", m.diag_residual, ord);
        c.add("continuation.m-matrix-offdiagonal", "M(t,0) is diagonal", m.offdiag_residual,
              ord);
    }
}

void suite_genus_one(Ctx& c) {
    mpfr_prec_t prec = c.cfg.precision;
    int n = c.cfg.order;
    {
        Series<Rat> r1 = f1_euler_deriv_cy(c.icy());
        Series<Rat> r2 = f1_route_r1_cy(c.tower_cy(), c.lcy(), c.icy());
        int m = std::min(r1.order(), r2.order());
        bool ok = (r1.truncated(m) - r2.truncated(m)).is_zero();
        c.add_exact("genus-one.route-consistency-cy",
                    "CY genus-one mirror formula equals its R1 decomposition", ok, m);
    }
    {
        Series<Rat> r1 = f1_deriv_lg(c.ilg());
        Series<Rat> r2 = f1_route_r1_lg(c.tower_lg(), c.llg(), c.ilg());
        int m = std::min(r1.order(), r2.order());
        bool ok = (r1.truncated(m) - r2.truncated(m)).is_zero();
        c.add_exact("genus-one.route-consistency-lg",
                    "LG genus-one mirror formula equals its R1 decomposition", ok, m);
    }
    {
        // Lemma-two constant: dG~/dt(0) equals the Gamma-ratio expression
        DLog g = g_potential_cont_dt(c.cont_u().tower, c.llg());
        Complex kappa_tower = g.reg[0];
        Complex kappa_gamma =
            Complex::of(2, prec) * uplus_closed_form(0, c.pool) + uplus_closed_form(1, c.pool);
        c.add("genus-one.kappa-constant",
              "5 lambda xi^a R1~(0) equals 2 (U+)01 + (U+)12 in closed form",
              (kappa_tower - kappa_gamma).abs(), 0);
        // trace identity, stated through the shifted (underlined) constant:
        // (kappa + 3/4) - trace = 3/4
        Complex trace = c.bf().uplus_linear(0, 1) + c.bf().uplus_linear(1, 2) +
                        c.bf().uplus_linear(2, 3);
        Complex lhs = kappa_tower + Complex::of(Rat(3, 4), prec) - trace;
        c.add("genus-one.trace-identity",
              "(U+)01 + (U+)12 + (U+)23 differs from the shifted R1 constant by 3/4",
              (lhs - Complex::of(Rat(3, 4), prec)).abs(), 0);
    }
    {
        // genus-zero consistency: the two continuations give the same mirror map
        Series<Complex> d = c.cont_u().tau - c.cont_tr().tau;
        c.add("genus-one.genus-zero-tau", "tau^C agrees between the U-side and transported side",
              series_max_abs(d, n), n);
    }
    GenusOneForms forms = genus_one_check(c.ilg(), c.tower_lg(), c.llg(), c.cont_u(),
                                          c.cont_tr(), n - 5);
    c.add("genus-one.pole-cancellation", "the 1/t parts of dF1^C and dF1~^CY cancel",
          forms.pole_residual, 0);
    c.add("genus-one.residual", "dF1^C(tau^C) = dF1~^CY(tau^C) through t^{N-5}",
          forms.residual_max, n - 5);
    {
        // negative control: perturb b_00 by 1e-6
        CMat bp = c.b();
        bp(0, 0) = bp(0, 0) * (Complex::of(1, prec) + Complex::of(Rat(1, 1000000), prec));
        ContinuedCY pert = build_continued_cy(bp, c.ilg(), c.cfg.order + 2, prec);
        GenusOneForms bad = genus_one_check(c.ilg(), c.tower_lg(), c.llg(), pert, c.cont_tr(),
                                            n - 5);
        Real floor_ = c.tol * Real::parse("1e10", prec);
        if (forms.residual_max * Real::parse("1e10", prec) > floor_)
            floor_ = forms.residual_max * Real::parse("1e10", prec);
        bool ok = bad.residual_max > floor_;
        c.add_expect("genus-one.negative-b00",
                     "a 1e-6 perturbation of b_00 breaks the residual by >= 10 orders", ok,
                     bad.residual_max.str(10), n - 5);
    }
    {
        // negative control: single sign flip in a displayed U entry
        UMatrix flipped = c.u();
        Complex e = flipped.m.get(1)(0, 1);
        flipped.m.set_entry(0, 1, 1, -e);
        CMat bf_ = extract_b_matrix(flipped, c.ilg(), c.pool);
        ContinuedCY pert = build_continued_cy(bf_, c.ilg(), c.cfg.order + 2, prec);
        GenusOneForms bad = genus_one_check(c.ilg(), c.tower_lg(), c.llg(), pert, c.cont_tr(),
                                            n - 5);
        Real floor_ = c.tol * Real::parse("1e10", prec);
        if (forms.residual_max * Real::parse("1e10", prec) > floor_)
            floor_ = forms.residual_max * Real::parse("1e10", prec);
        bool ok = bad.residual_max > floor_;
        c.add_expect("genus-one.negative-sign-flip",
                     "flipping the sign of U(-z)_{01} breaks the residual by >= 10 orders", ok,
                     bad.residual_max.str(10), n - 5);
    }
    {
        // the loop contribution is a pure difference of G-potentials: the
        // formal mu-cap does not move it (lambda cancels identically)
        LGComponents lg1 = build_ilg_twisted(c.cfg.order + 10, 9, 1);
        TowerLG tlg1 = build_tower_lg(lg1, 9);
        DLog a = loop_contribution(c.tower_lg(), c.llg(), c.cont_u());
        DLog b2 = loop_contribution(tlg1, c.llg(), c.cont_u());
        int m = std::min(a.reg.order(), b2.reg.order());
        Series<Complex> d = a.reg.truncated(m) - b2.reg.truncated(m);
        Real worst = (a.pole - b2.pole).abs();
        Real sm = series_max_abs(d, m);
        if (sm > worst) worst = sm;
        c.add("genus-one.loop-mu-cap",
              "the loop contribution is independent of the formal mu-cap", worst, m);
    }
    {
        // fake identity continuation: with Itilde_0 = (t/5) I_0^LG the vertex
        // reduces to dF1^LG exactly
        CMat fake(4, prec);
        for (int j = 0; j < 4; ++j) fake(0, j) = Complex::of(j == 0 ? 1 : 0, prec);
        fake(1, 1) = Complex::of(1, prec);
        fake(2, 2) = Complex::of(1, prec);
        fake(3, 3) = Complex::of(1, prec);
        ContinuedCY id_cont = build_continued_cy(fake, c.ilg(), c.cfg.order + 2, prec);
        Series<Complex> v = vertex_contribution(c.ilg(), id_cont);
        Series<Complex> d = v - to_complex(f1_deriv_lg(c.ilg()).truncated(v.order()), prec);
        c.add("genus-one.vertex-degenerate",
              "with the identity continuation the vertex equals dF1^LG", series_max_abs(d, n),
              n);
    }
}

} // namespace

Report run_suite(const RunConfig& cfg) {
    cfg.validate();
    auto want = [&](const std::string& s) {
        if (cfg.suites.empty()) return true;
        for (const auto& x : cfg.suites)
            if (x == s) return true;
        return false;
    };
    // suite-specific floors: Gamma-identity checks need 128 bits, the
    // genus-one assembly needs three nontrivial orders past t^5
    if (cfg.precision < 128)
        throw std::invalid_argument("config: precision >= 128 required for the Gamma checks");
    if (want("genus-one") && cfg.order < 8)
        throw std::invalid_argument(
            "config: order >= 8 required for the genus-one suite (three orders past t^5)");

    Ctx ctx(cfg);
    long narrowing_before = narrowing_events().load();

    if (want("constants")) suite_constants(ctx);
    if (want("series")) suite_series(ctx);
    if (want("pf")) suite_pf(ctx);
    if (want("u-matrix")) suite_umatrix(ctx);
    if (want("birkhoff")) suite_birkhoff(ctx);
    if (want("tower")) suite_tower(ctx);
    if (want("continuation")) suite_continuation(ctx);
    if (want("genus-one")) suite_genus_one(ctx);

    ctx.rep.meta.emplace_back("order", std::to_string(cfg.order));
    ctx.rep.meta.emplace_back("precision", std::to_string(cfg.precision));
    ctx.rep.meta.emplace_back("tolerance", fmt_real(ctx.tol));
    ctx.rep.meta.emplace_back("mu_cap", std::to_string(cfg.mu_cap));
    if (ctx.tr_) {
        ctx.rep.meta.emplace_back("transport_steps", std::to_string(ctx.tr_->steps));
        ctx.rep.meta.emplace_back("beta_path", ctx.tr_->beta_path.str(20));
        ctx.rep.meta.emplace_back("path_q0", ctx.tr_->q0.str(10));
        ctx.rep.meta.emplace_back("path_t1", ctx.tr_->t1.str(10));
    }
    ctx.rep.meta.emplace_back(
        "order_narrowing_events",
        std::to_string(narrowing_events().load() - narrowing_before));
    return ctx.rep;
}

std::string dump_series(const std::string& what, const std::string& side, const RunConfig& cfg) {
    cfg.validate();
    std::ostringstream os;
    int n = cfg.order;
    if (what == "icy") {
        IFunctionCY f = build_icy(n);
        os << "d,I0,I1_minus_I0_log\n";
        for (int d = 0; d <= n; ++d)
            os << d << "," << f.i0()[d].get_str() << "," << f.comp[1].coeff(0)[d].get_str()
               << "\n";
        return os.str();
    }
    if (what == "ilg") {
        IFunctionLG f = build_ilg(n);
        os << "a,I0,I1,I2,I3\n";
        for (int d = 0; d <= n; ++d) {
            os << d;
            for (int s = 0; s < 4; ++s) os << "," << f.comp[s][d].get_str();
            os << "\n";
        }
        return os.str();
    }
    if (what == "tower") {
        if (side == "cy") {
            CYComponents comp = build_icy_twisted(n, 9, cfg.mu_cap);
            TowerCY tw = build_tower_cy(comp, 4);
            os << "d,I00,I11,I22,I33,I44\n";
            for (int d = 0; d <= tw.diag_rat(4).order(); ++d) {
                os << d;
                for (int p = 0; p <= 4; ++p) os << "," << tw.diag_rat(p)[d].get_str();
                os << "\n";
            }
        } else {
            LGComponents comp = build_ilg_twisted(n + 5, 9, cfg.mu_cap);
            TowerLG tw = build_tower_lg(comp, 4);
            os << "a,I00,I11,I22,I33,I44\n";
            for (int d = 0; d <= tw.diag_rat(4).order() && d <= n; ++d) {
                os << d;
                for (int p = 0; p <= 4; ++p) os << "," << tw.diag_rat(p)[d].get_str();
                os << "\n";
            }
        }
        return os.str();
    }
    if (what == "mirror") {
        if (side == "cy") {
            LogSeries<Rat> tau = mirror_map_cy(build_icy(n));
            os << "d,tau_minus_log\n";
            for (int d = 0; d <= n; ++d) os << d << "," << tau.coeff(0)[d].get_str() << "\n";
        } else {
            Series<Rat> tau = mirror_map_lg(build_ilg(n));
            os << "a,tau\n";
            for (int d = 0; d <= n; ++d) os << d << "," << tau[d].get_str() << "\n";
        }
        return os.str();
    }
    if (what == "f1") {
        if (side == "cy") {
            Series<Rat> f = f1_euler_deriv_cy(build_icy(n));
            os << "d,qddq_F1\n";
            for (int d = 0; d <= f.order(); ++d) os << d << "," << f[d].get_str() << "\n";
        } else {
            Series<Rat> f = f1_deriv_lg(build_ilg(n));
            os << "a,dF1_dt\n";
            for (int d = 0; d <= f.order(); ++d) os << d << "," << f[d].get_str() << "\n";
        }
        return os.str();
    }
    if (what == "continued") {
        ConstantPool pool = build_constant_pool(cfg.precision, 8);
        UMatrix u = build_u_matrix(pool);
        IFunctionLG ilg = build_ilg(n + 2);
        CMat b = extract_b_matrix(u, ilg, pool);
        ContinuedCY cont = build_continued_cy(b, ilg, n, cfg.precision);
        os << "t-power,g0,tau_C\n";
        for (int d = 0; d <= cont.tau.order(); ++d)
            os << d << "," << cont.g[0][d].str(20) << "," << cont.tau[d].str(20) << "\n";
        return os.str();
    }
    throw std::invalid_argument("dump: unknown selector " + what);
}

} // namespace lgcy
