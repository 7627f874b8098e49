#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lgcy/birkhoff.hpp"
#include "lgcy/genusone.hpp"
#include "lgcy/umatrix.hpp"

using namespace lgcy;

namespace {
constexpr mpfr_prec_t kPrec = 192;
constexpr int kOrder = 12;

struct Fixture {
    ConstantPool pool = build_constant_pool(kPrec, 8);
    IFunctionLG ilg = build_ilg(kOrder + 2);
    IFunctionCY icy = build_icy(kOrder + 2);
    LGComponents lgc = build_ilg_twisted(kOrder + 12, 9, 2);
    CYComponents cyc = build_icy_twisted(kOrder + 2, 9, 2);
    TowerLG tlg = build_tower_lg(lgc, 9);
    TowerCY tcy = build_tower_cy(cyc, 9);
    Series<Rat> llg = big_L(Side::LG, kOrder + 12);
    Series<Rat> lcy = big_L(Side::CY, kOrder + 12);
    UMatrix u = build_u_matrix(pool);
    CMat b = extract_b_matrix(u, ilg, pool);
    ContinuedCY cont_u = build_continued_cy(b, ilg, kOrder + 2, kPrec);
    TransportResult tr = [this] {
        TransportOptions o;
        o.prec = kPrec;
        o.taylor_order = 160;
        o.series_terms = 120;
        return pf_transport(default_path(kPrec), o, pool);
    }();
    ContinuedCY cont_tr = build_continued_cy(tr.bhat, ilg, kOrder + 2, kPrec);
};
Fixture& fix() {
    static Fixture f;
    return f;
}
bool small(const Real& x, const char* bound) { return !(x > Real::parse(bound, kPrec)); }
} // namespace

TEST_CASE("LG genus-one derivative starts at t^4") {
    Series<Rat> f = f1_deriv_lg(fix().ilg);
    for (int k = 0; k <= 3; ++k) CHECK(f[k] == 0);
    CHECK(f[4] != 0);
}

TEST_CASE("CY genus-one constant term is -25/12") {
    Series<Rat> f = f1_euler_deriv_cy(fix().icy);
    CHECK(f[0] == Rat(-25, 12));
}

TEST_CASE("route consistency: mirror formulas equal their R1 decompositions (exact)") {
    Fixture& f = fix();
    Series<Rat> a = f1_euler_deriv_cy(f.icy);
    Series<Rat> b = f1_route_r1_cy(f.tcy, f.lcy, f.icy);
    int m = std::min(a.order(), b.order());
    CHECK((a.truncated(m) - b.truncated(m)).is_zero());

    Series<Rat> c = f1_deriv_lg(f.ilg);
    Series<Rat> d = f1_route_r1_lg(f.tlg, f.llg, f.ilg);
    m = std::min(c.order(), d.order());
    CHECK((c.truncated(m) - d.truncated(m)).is_zero());
}

TEST_CASE("vertex contribution reduces to dF1^LG under the identity continuation") {
    Fixture& f = fix();
    CMat fake(4, kPrec);
    for (int i = 0; i < 4; ++i) fake(i, i) = Complex::of(1, kPrec);
    ContinuedCY idc = build_continued_cy(fake, f.ilg, kOrder + 2, kPrec);
    Series<Complex> v = vertex_contribution(f.ilg, idc);
    Series<Complex> d = v - to_complex(f1_deriv_lg(f.ilg).truncated(v.order()), kPrec);
    Real worst(kPrec);
    for (int k = 0; k <= d.order(); ++k) {
        Real a = d[k].abs();
        if (a > worst) worst = a;
    }
    CHECK(small(worst, "1e-40"));
    // and the loop contribution vanishes identically for the same reason
    DLog loop = loop_contribution(f.tlg, f.llg, idc);
    CHECK(small(loop.pole.abs(), "1e-40"));
    Real worst2(kPrec);
    for (int k = 0; k <= loop.reg.order(); ++k) {
        Real a = loop.reg[k].abs();
        if (a > worst2) worst2 = a;
    }
    CHECK(small(worst2, "1e-40"));
}

TEST_CASE("vertex has a finite t -> 0 limit") {
    Fixture& f = fix();
    Series<Complex> v = vertex_contribution(f.ilg, f.cont_u);
    CHECK(v.order() >= 0); // construction succeeded: the 1/t parts cancelled exactly
}

TEST_CASE("kappa constant from the continued tower equals the Gamma expression") {
    Fixture& f = fix();
    DLog g = g_potential_cont_dt(f.cont_u.tower, f.llg);
    CHECK(small(g.pole.abs(), "1e-40"));
    Complex kappa_gamma = Complex::of(2, kPrec) * uplus_closed_form(0, f.pool) +
                          uplus_closed_form(1, f.pool);
    CHECK(small((g.reg[0] - kappa_gamma).abs(), "1e-40"));
}

TEST_CASE("main genus-one identity at reduced settings") {
    Fixture& f = fix();
    GenusOneForms forms =
        genus_one_check(f.ilg, f.tlg, f.llg, f.cont_u, f.cont_tr, kOrder - 5);
    CHECK(small(forms.pole_residual, "1e-30"));
    CHECK(small(forms.residual_max, "1e-15"));
}

TEST_CASE("negative control: perturbing b00 breaks the identity") {
    Fixture& f = fix();
    CMat bp = f.b;
    bp(0, 0) = bp(0, 0) * (Complex::of(1, kPrec) + Complex::of(Rat(1, 1000000), kPrec));
    ContinuedCY pert = build_continued_cy(bp, f.ilg, kOrder + 2, kPrec);
    GenusOneForms bad = genus_one_check(f.ilg, f.tlg, f.llg, pert, f.cont_tr, kOrder - 5);
    CHECK(bad.residual_max > Real::parse("1e-8", kPrec));
}

TEST_CASE("negative control: a sign flip in U breaks the identity") {
    Fixture& f = fix();
    UMatrix flipped = f.u;
    Complex e = flipped.m.get(1)(0, 1);
    flipped.m.set_entry(0, 1, 1, -e);
    CMat b2 = extract_b_matrix(flipped, f.ilg, f.pool);
    ContinuedCY pert = build_continued_cy(b2, f.ilg, kOrder + 2, kPrec);
    GenusOneForms bad = genus_one_check(f.ilg, f.tlg, f.llg, pert, f.cont_tr, kOrder - 5);
    CHECK(bad.residual_max > Real::parse("1e-8", kPrec));
}

TEST_CASE("genus-zero consistency of the two continued mirror maps") {
    Fixture& f = fix();
    Series<Complex> d = f.cont_u.tau - f.cont_tr.tau;
    Real worst(kPrec);
    for (int k = 0; k <= std::min(d.order(), kOrder); ++k) {
        Real a = d[k].abs();
        if (a > worst) worst = a;
    }
    CHECK(small(worst, "1e-15"));
}
