#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lgcy/tower.hpp"

using namespace lgcy;

namespace {
struct Fixture {
    int order = 14;
    LGComponents lg = build_ilg_twisted(order + 10, 9, 2);
    CYComponents cy = build_icy_twisted(order, 9, 2);
    TowerLG tlg = build_tower_lg(lg, 9);
    TowerCY tcy = build_tower_cy(cy, 9);
    Series<Rat> llg = big_L(Side::LG, order + 10);
    Series<Rat> lcy = big_L(Side::CY, order + 10);
};
Fixture& fix() {
    static Fixture f;
    return f;
}
Series<Rat> pow5(const Series<Rat>& l) {
    Series<Rat> s = l * l;
    return s * s * l;
}
} // namespace

TEST_CASE("L-series expansions") {
    CHECK(fix().llg[0] == 1);
    CHECK(fix().llg[5] == Rat(1, 15625)); // (1/5)(1/5)^5
    CHECK(fix().lcy[0] == 1);
    CHECK(fix().lcy[1] == 625);           // (1/5) 5^5
}

TEST_CASE("LG tower leading behavior") {
    // I_00 at mu=0: 1 + t^5/375000 + ...
    Series<Rat> i00 = fix().tlg.diag_rat(0);
    CHECK(i00[0] == 1);
    CHECK(i00[5] == Rat(1, 375000));
    // I_11 constant term 1
    CHECK(fix().tlg.diag_rat(1)[0] == 1);
    CHECK(fix().tlg.diag_rat(1)[5] == Rat(13, 187500));
    CHECK(fix().tlg.diag_rat(2)[5] == Rat(11, 62500));
}

TEST_CASE("tower identity: product of the five diagonals is L^5") {
    Fixture& f = fix();
    Series<MuPoly> prod = f.tlg.at(0, 0);
    for (int p = 1; p <= 4; ++p) prod *= f.tlg.at(p, p);
    CHECK((prod - lift_mu(pow5(f.llg).truncated(prod.order()), 2)).is_zero());

    Series<MuPoly> prodcy = f.tcy.diag(0);
    for (int p = 1; p <= 4; ++p) prodcy *= f.tcy.diag(p);
    CHECK((prodcy - lift_mu(pow5(f.lcy).truncated(prodcy.order()), 2)).is_zero());
}

TEST_CASE("tower identity: I_{5+p,5+p} = mu I_{p,p}") {
    Fixture& f = fix();
    for (int p = 0; p <= 4; ++p) {
        Series<MuPoly> lhs = f.tlg.at(5 + p, 5 + p);
        Series<MuPoly> rhs = mu_shift_up(f.tlg.at(p, p).truncated(lhs.order()), 1);
        CHECK((lhs - rhs).is_zero());
        Series<MuPoly> lhscy = f.tcy.diag(5 + p);
        Series<MuPoly> rhscy = mu_shift_up(f.tcy.diag(p).truncated(lhscy.order()), 1);
        CHECK((lhscy - rhscy).is_zero());
    }
    // the spec's I_55 / I_00 = mu reading
    Series<MuPoly> i55 = f.tlg.at(5, 5);
    Series<MuPoly> i00 = f.tlg.at(0, 0).truncated(i55.order());
    CHECK((i55 - mu_shift_up(i00, 1)).is_zero());
}

TEST_CASE("tower identity: palindrome I_{p,p} = I_{4-p,4-p}") {
    Fixture& f = fix();
    for (int p = 0; p <= 4; ++p) {
        Series<MuPoly> a = f.tlg.at(p, p);
        Series<MuPoly> b = f.tlg.at(4 - p, 4 - p);
        int m = std::min(a.order(), b.order());
        CHECK((a.truncated(m) - b.truncated(m)).is_zero());
        Series<MuPoly> acy = f.tcy.diag(p);
        Series<MuPoly> bcy = f.tcy.diag(4 - p);
        m = std::min(acy.order(), bcy.order());
        CHECK((acy.truncated(m) - bcy.truncated(m)).is_zero());
    }
}

TEST_CASE("CY tower diagonals are log-free and I_11 = D tau") {
    Fixture& f = fix();
    for (int p = 0; p <= 4; ++p) CHECK(f.tcy.at(p, p).is_ell_free());
    // I_11 equals q d/dq of the mirror map: both are 1 + 770 q + ...
    Series<Rat> i11 = f.tcy.diag_rat(1);
    CHECK(i11[0] == 1);
    CHECK(i11[1] == 770);
}

TEST_CASE("c-scalars and Psi") {
    Fixture& f = fix();
    CScalarsRat cs = c_scalars_lg(f.tlg, f.llg);
    // c_1 c_2 = 1 and c_0 c_3 = 1 (equivalent to the product + palindrome identities)
    CHECK((cs.c[2] * cs.c[3] - Series<Rat>::one(cs.c[2].order())).is_zero());
    CHECK((cs.c[1] * cs.c[4] - Series<Rat>::one(cs.c[1].order())).is_zero());
    // lambda grading tags
    CHECK(cs.lambda_halves(-1) == 5);
    CHECK(cs.lambda_halves(4) == -5);
    ConstantPool pool = build_constant_pool(192, 8);
    Real res = psi_unitarity_residual(cs, pool, 10);
    CHECK(!(res > Real::parse("1e-40", 192)));
}

TEST_CASE("Delta series") {
    Fixture& f = fix();
    Series<Rat> d = delta_series_lg(f.tlg, f.llg);
    CHECK(d[0] == 1);
    // I_00^2 / L^2 exactly
    Series<Rat> i00 = f.tlg.diag_rat(0);
    int n = d.order();
    Series<Rat> want = (i00.truncated(n) * i00.truncated(n)) /
                       (f.llg.truncated(n) * f.llg.truncated(n));
    CHECK((d - want).is_zero());
}

TEST_CASE("R1 potentials") {
    Fixture& f = fix();
    Series<Rat> glg = g_potential_lg_dt(f.tlg, f.llg);
    // all three logs are 1 + O(t^5) series, and the t^4 terms cancel exactly
    // ((5/4)/15625 = 4/375000 + 13/187500), so dG starts only at t^9
    for (int k = 0; k <= 8; ++k) CHECK(glg[k] == 0);
    CHECK(glg[9] == Rat(97, 5062500000));

    Series<Rat> gcy = g_potential_cy_dlogq(f.tcy, f.lcy);
    CHECK(gcy[0] == Rat(-3, 4));
}

TEST_CASE("alpha-sum collapse: sum_a (xi^a lambda) R1_aa = dG/du") {
    // R1_aa = dG/du / (5 xi^a lambda); the five terms each contribute a
    // fifth, so the weighted sum collapses to dG/du
    Fixture& f = fix();
    mpfr_prec_t prec = 192;
    ConstantPool pool = build_constant_pool(prec, 8);
    Series<Rat> glg = g_potential_lg_dt(f.tlg, f.llg);
    int n = glg.order();
    Series<Complex> dg_du =
        to_complex(glg, prec) / to_complex(f.llg.truncated(n), prec); // dG/dt / L
    Series<Complex> acc(n, Complex(prec));
    for (int a = 0; a < 5; ++a) {
        // (xi^a lambda) * dG/du / (5 xi^a lambda): lambda cancels exactly
        acc += dg_du.scaled(Complex::of(Rat(1, 5), prec));
    }
    Series<Complex> diff = acc - dg_du;
    Real worst(prec);
    for (int k = 0; k <= diff.order(); ++k) {
        Real x = diff[k].abs();
        if (x > worst) worst = x;
    }
    CHECK(!(worst > Real::parse("1e-40", prec)));
    (void)pool;
}

TEST_CASE("mu evaluation commutes with the recursion") {
    Fixture& f = fix();
    LGComponents lg0 = build_ilg_twisted(f.order + 10, 9, 2);
    for (auto& s : lg0.comp) s = lift_mu(at_mu_zero(s), 0);
    lg0.mu_cap = 0;
    TowerLG t0 = build_tower_lg(lg0, 4);
    for (int p = 0; p <= 4; ++p) {
        Series<Rat> a = at_mu_zero(f.tlg.at(p, p));
        Series<Rat> b = at_mu_zero(t0.at(p, p));
        int m = std::min(a.order(), b.order());
        CHECK((a.truncated(m) - b.truncated(m)).is_zero());
    }
}
