#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lgcy/birkhoff.hpp"

using namespace lgcy;

namespace {
const ConstantPool& pool() {
    static ConstantPool p = build_constant_pool(256, 8);
    return p;
}
const UMatrix& u() {
    static UMatrix m = build_u_matrix(pool());
    return m;
}
const BirkhoffFactors& bf() {
    static BirkhoffFactors f = birkhoff_factorize(u());
    return f;
}
bool small(const Real& x, const char* bound = "1e-70") {
    return !(x > Real::parse(bound, 256));
}
} // namespace

TEST_CASE("triangular structure of the factors") {
    const BirkhoffFactors& f = bf();
    // U_-(-z): unit diagonal, strictly negative z-powers below the diagonal
    for (const auto& [k, m] : f.u_minus_negz.coeffs())
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                if (m(i, j).is_zero()) continue;
                if (i == j) CHECK(k == 0);
                else {
                    CHECK(j < i);
                    CHECK(k == j - i);
                }
            }
    for (const auto& [k, m] : f.u_plus_negz.coeffs())
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                if (m(i, j).is_zero()) continue;
                if (i == j) CHECK(k == 0);
                else {
                    CHECK(j > i);
                    CHECK(k == j - i);
                }
            }
}

TEST_CASE("S(-z) U(-z) reproduces the displayed upper-triangular matrix") {
    LaurentMatrix su = bf().s_negz * u().m;
    Real worst(256);
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            Real d = (su.get(j - i)(i, j) - su_display_closed_form(i, j, pool())).abs();
            if (d > worst) worst = d;
        }
    CHECK(small(worst));
    // entries (0,0) and (1,1) spelled out
    Complex one = Complex::of(1, 256);
    const ConstantPool& p = pool();
    Complex want00 = -p.two_pi_i * p.xi / ((one - p.xi) * Complex::of(p.gamma_fifth_5(4)));
    CHECK(small((su.get(0)(0, 0) - want00).abs()));
    Complex y2 = p.xi_pow(2);
    Complex want11 = -p.two_pi_i.pow_int(2) * p.xi_pow(3) /
                     ((one - y2).pow_int(2) * Complex::of(p.gamma_fifth_5(3)));
    CHECK(small((su.get(0)(1, 1) - want11).abs()));
    // everything below the diagonal vanished
    for (const auto& [k, m] : su.coeffs())
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < i; ++j) CHECK(small(m(i, j).abs()));
}

TEST_CASE("U_+ superdiagonal closed forms and the reflection coincidence") {
    const BirkhoffFactors& f = bf();
    CHECK(small((f.uplus_linear(0, 1) - uplus_closed_form(0, pool())).abs()));
    CHECK(small((f.uplus_linear(1, 2) - uplus_closed_form(1, pool())).abs()));
    CHECK(small((f.uplus_linear(2, 3) - uplus_closed_form(2, pool())).abs()));
    // (U_+)_{23} = (U_+)_{01} via the Gamma reflection formula
    CHECK(small((f.uplus_linear(2, 3) - f.uplus_linear(0, 1)).abs()));
}

TEST_CASE("reassembly and factor symplecticity") {
    const BirkhoffFactors& f = bf();
    LaurentMatrix re = f.u_minus_negz * f.u0_laurent() * f.u_plus_negz - u().m;
    CHECK(small(re.max_abs()));

    CMat pair = quintic_pairing(4, 256);
    CHECK(small((f.s_negz.flip_z() * f.s_negz.adjoint(pair)).distance_to_identity()));
    CHECK(small((f.r_negz().flip_z() * f.r_negz().adjoint(pair)).distance_to_identity()));
    CHECK(small((f.u0_laurent() * f.u0_laurent().adjoint(pair)).distance_to_identity()));
}

TEST_CASE("factorization uniqueness: triangular perturbations break reassembly") {
    const BirkhoffFactors& f = bf();
    LaurentMatrix pert = f.u_minus_negz;
    pert.at(-1)(1, 0) += Complex::of(Rat(1, 1000000), 256);
    LaurentMatrix re = pert * f.u0_laurent() * f.u_plus_negz - u().m;
    CHECK(re.max_abs() > Real::parse("1e-9", 256));
}

TEST_CASE("degenerate quadratic forms") {
    CMat pair = quintic_pairing(4, 256);
    LaurentMatrix one = LaurentMatrix::identity(4, 256);
    QuadForm w = quad_form_w(one, 3, pair);
    QuadForm v = quad_form_v(one, 3, pair);
    CHECK(small(w.remainder));
    CHECK(small(v.remainder));
    for (const auto& [kl, m] : w.kl) CHECK(small(m.max_abs()));
    for (const auto& [kl, m] : v.kl) CHECK(small(m.max_abs()));
}

TEST_CASE("first-order quadratic forms with nilpotent self-adjoint data") {
    mpfr_prec_t prec = 256;
    CMat pair = quintic_pairing(4, prec);
    CMat s1(4, prec);
    s1(0, 1) = Complex::of(1, prec); // e01 + its adjoint reflection e23
    s1(2, 3) = Complex::of(1, prec);
    LaurentMatrix s = LaurentMatrix::identity(4, prec);
    s.at(-1) = s1;
    QuadForm w = quad_form_w(s, 3, pair);
    CHECK(small(w.remainder));
    CHECK(small((w.get(0, 0, 4, prec) - s1).max_abs()));
    for (const auto& [kl, m] : w.kl)
        if (kl != std::pair<int, int>{0, 0}) CHECK(small(m.max_abs()));

    LaurentMatrix r = LaurentMatrix::identity(4, prec);
    r.at(1) = s1;
    QuadForm v = quad_form_v(r, 3, pair);
    CHECK(small(v.remainder));
    CHECK(small((v.get(0, 0, 4, prec) - s1).max_abs()));
    for (const auto& [kl, m] : v.kl)
        if (kl != std::pair<int, int>{0, 0}) CHECK(small(m.max_abs()));
}

TEST_CASE("quadratic forms of the correspondence factors") {
    mpfr_prec_t prec = 256;
    CMat pair = quintic_pairing(4, prec);
    QuadForm w = quad_form_w(bf().s_z(), 3, pair);
    QuadForm v = quad_form_v(bf().r_negz().flip_z(), 3, pair);
    CHECK(small(w.remainder));
    CHECK(small(v.remainder));
    // symmetries W_kl = W_lk* and V_kl = V_lk*
    CMat pinv = pair.inverse();
    for (int k = 0; k <= 3; ++k)
        for (int l = 0; k + l <= 3; ++l) {
            CHECK(small((w.get(k, l, 4, prec) - pinv * w.get(l, k, 4, prec).transpose() * pair)
                            .max_abs()));
            CHECK(small((v.get(k, l, 4, prec) - pinv * v.get(l, k, 4, prec).transpose() * pair)
                            .max_abs()));
        }
    // W_00 is the z^{-1} coefficient of S (self-adjoint under the pairing)
    CMat s1 = bf().s_z().get(-1);
    CHECK(small((w.get(0, 0, 4, prec) - s1).max_abs()));
}

TEST_CASE("divisibility gate throws on a non-symplectic input") {
    mpfr_prec_t prec = 256;
    CMat pair = quintic_pairing(4, prec);
    LaurentMatrix s = LaurentMatrix::identity(4, prec);
    s.at(-1)(0, 1) = Complex::of(1, prec); // e01 alone is not self-adjoint
    Real tol = Real::parse("1e-30", prec);
    CHECK_THROWS_AS(quad_form_w(s, 3, pair, tol), std::domain_error);
}

TEST_CASE("degenerate inputs are reported as data errors") {
    // vanishing pivot
    UMatrix z;
    z.m = LaurentMatrix(4, 256);
    CHECK_THROWS_AS(birkhoff_factorize(z), std::domain_error);
    // off-band mass
    UMatrix offband;
    offband.m = LaurentMatrix(4, 256);
    for (int r = 0; r < 4; ++r)
        for (int m = 0; m < 4; ++m) offband.m.set_entry(r, m, 0, Complex::of(1 + r + m, 256));
    CHECK_THROWS_AS(birkhoff_factorize(offband), std::invalid_argument);
}
