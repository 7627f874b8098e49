#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lgcy/logseries.hpp"
#include "lgcy/series.hpp"

#include <random>

using namespace lgcy;

namespace {
Rat rnd_rat(std::mt19937& g) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    return Rat(num(g), den(g));
}
Series<Rat> rnd_series(std::mt19937& g, int order, bool zero_const = false) {
    Series<Rat> s(order);
    for (int k = zero_const ? 1 : 0; k <= order; ++k) s.at(k) = rnd_rat(g);
    return s;
}
} // namespace

TEST_CASE("series inversion") {
    Series<Rat> one = Series<Rat>::one(3);
    CHECK((one.inverted() - one).is_zero());

    Series<Rat> f = Series<Rat>::one(3) - Series<Rat>::monomial(Rat(1), 1, 3);
    Series<Rat> geo = f.inverted();
    for (int k = 0; k <= 3; ++k) CHECK(geo[k] == 1);

    Series<Rat> g(2);
    g.at(0) = Rat(1);
    g.at(1) = Rat(120);
    g.at(2) = Rat(113400);
    CHECK((g * g.inverted() - Series<Rat>::one(2)).is_zero());
    CHECK(g.inverted()[1] == Rat(-120));

    Series<Rat> z(3); // zero constant term
    CHECK_THROWS_AS(z.inverted(), std::domain_error);
}

TEST_CASE("series exp/log") {
    Series<Rat> zero(4);
    CHECK((series_exp(zero) - Series<Rat>::one(4)).is_zero());

    Series<Rat> f = Series<Rat>::one(4) - Series<Rat>::monomial(Rat(1), 1, 4);
    Series<Rat> l = series_log(f);
    CHECK(l[1] == Rat(-1));
    CHECK(l[2] == Rat(-1, 2));
    CHECK(l[3] == Rat(-1, 3));
    CHECK(l[4] == Rat(-1, 4));

    std::mt19937 g(17);
    for (int rep = 0; rep < 10; ++rep) {
        Series<Rat> r = rnd_series(g, 8, true);
        CHECK((series_log(series_exp(r)) - r).is_zero());
    }
    Series<Rat> bad = Series<Rat>::one(3);
    CHECK_THROWS_AS(series_exp(bad), std::domain_error);
    Series<Rat> bad2(3);
    CHECK_THROWS_AS(series_log(bad2), std::domain_error);
}

TEST_CASE("rational powers via exp/log") {
    // (1-u)^{-1/5} = 1 + u/5 + 3u^2/25 + ...
    Series<Rat> f = Series<Rat>::one(3) - Series<Rat>::monomial(Rat(1), 1, 3);
    Series<Rat> p = series_pow(f, Rat(-1, 5));
    CHECK(p[0] == 1);
    CHECK(p[1] == Rat(1, 5));
    CHECK(p[2] == Rat(3, 25));
}

TEST_CASE("geometric binomial sum") {
    Series<Rat> x = Series<Rat>::monomial(Rat(1), 1, 6);
    Series<Rat> j2 = geometric_binomial_sum(x, 2);
    Series<Rat> geo = (Series<Rat>::one(6) - x).inverted();
    CHECK((j2 - geo).is_zero());

    Series<Rat> j3 = geometric_binomial_sum(x.truncated(2), 3);
    CHECK(j3[0] == 1);
    CHECK(j3[1] == 2);
    CHECK(j3[2] == 3);

    std::mt19937 g(23);
    for (int rep = 0; rep < 5; ++rep) {
        Series<Rat> t0 = rnd_series(g, 7, true);
        Series<Rat> lhs = geometric_binomial_sum(t0, 5);
        Series<Rat> rhs = series_pow(Series<Rat>::one(7) - t0, Rat(-4));
        CHECK((lhs - rhs).is_zero());
    }
    CHECK_THROWS_AS(geometric_binomial_sum(x, 1), std::invalid_argument);
    Series<Rat> c = Series<Rat>::one(3);
    CHECK_THROWS_AS(geometric_binomial_sum(c, 2), std::domain_error);
}

TEST_CASE("ring axioms and truncation narrowing") {
    std::mt19937 g(31);
    for (int rep = 0; rep < 20; ++rep) {
        Series<Rat> a = rnd_series(g, 6), b = rnd_series(g, 6), c = rnd_series(g, 6);
        CHECK(((a + b) + c - (a + (b + c))).is_zero());
        CHECK((a * b - b * a).is_zero());
        CHECK((a * (b + c) - (a * b + a * c)).is_zero());
    }
    long before = narrowing_events().load();
    Series<Rat> a = rnd_series(g, 6), b = rnd_series(g, 4);
    Series<Rat> p = a * b;
    CHECK(p.order() == 4);
    CHECK(narrowing_events().load() == before + 1);
}

TEST_CASE("derivatives and dlog") {
    std::mt19937 g(37);
    Series<Rat> f = rnd_series(g, 8);
    f.at(0) = Rat(1);
    // x (log f)' = (x f')/f
    Series<Rat> lhs = series_euler_dlog(f);
    Series<Rat> rhs = f.euler_derivative() / f;
    CHECK((lhs - rhs).is_zero());
    Series<Rat> l = series_log(f);
    CHECK((l.derivative() - series_dlog(f)).is_zero());
    CHECK((f.shifted_up(2).shifted_down(2) - f).is_zero());
    CHECK_THROWS_AS(f.shifted_down(1), std::domain_error);
}

TEST_CASE("log-series derivation rule") {
    std::mt19937 g(41);
    for (int rep = 0; rep < 10; ++rep) {
        LogSeries<Rat> f(6, 2), gg(6, 1);
        for (int k = 0; k <= 2; ++k)
            for (int d = 0; d <= 6; ++d) f.at(k).at(d) = rnd_rat(g);
        for (int k = 0; k <= 1; ++k)
            for (int d = 0; d <= 6; ++d) gg.at(k).at(d) = rnd_rat(g);
        LogSeries<Rat> lhs = (f * gg).euler_derivative();
        LogSeries<Rat> rhs = f.euler_derivative() * gg + f * gg.euler_derivative();
        CHECK((lhs - rhs).is_zero());
    }
    // D(ell^k f) = k ell^{k-1} f + ell^k D f
    LogSeries<Rat> f(5, 0);
    std::mt19937 g2(43);
    for (int d = 0; d <= 5; ++d) f.at(0).at(d) = rnd_rat(g2);
    LogSeries<Rat> lf = f.times_ell().times_ell(); // ell^2 f
    LogSeries<Rat> dlhs = lf.euler_derivative();
    LogSeries<Rat> drhs = f.times_ell().scaled(Rat(2)) +
                          LogSeries<Rat>(f.coeff(0).euler_derivative()).times_ell().times_ell();
    CHECK((dlhs - drhs).is_zero());
}

TEST_CASE("log-series division by log-free series") {
    LogSeries<Rat> f(4, 1);
    for (int d = 0; d <= 4; ++d) {
        f.at(0).at(d) = Rat(d + 1);
        f.at(1).at(d) = Rat(2 * d + 1);
    }
    Series<Rat> g = Series<Rat>::one(4) + Series<Rat>::monomial(Rat(3), 1, 4);
    LogSeries<Rat> q = f / g;
    LogSeries<Rat> back = q * LogSeries<Rat>(g);
    CHECK((back - f).is_zero());
    CHECK_THROWS_AS(f.require_ell_free(), std::domain_error);
}

TEST_CASE("mu-series helpers") {
    Series<MuPoly> s(3, MuPoly(Rat(0), 2));
    s.at(1) = MuPoly::mu(2);
    s.at(2) = MuPoly::mu(2) * MuPoly(Rat(3), 2);
    CHECK(mu_valuation(s) == 1);
    Series<MuPoly> d = mu_shift_down(s, 1);
    CHECK(d[1].constant() == 1);
    Series<MuPoly> u = mu_shift_up(d, 1);
    CHECK((u - s).is_zero());
    Series<Rat> z = at_mu_zero(s);
    CHECK(z.is_zero());
}

TEST_CASE("complex series and evaluation") {
    mpfr_prec_t prec = 192;
    Series<Rat> f(6);
    f.at(0) = Rat(1);
    f.at(1) = Rat(1, 2);
    f.at(3) = Rat(-2, 3);
    Complex x{Real::of(Rat(1, 7), prec), Real::of(Rat(1, 9), prec)};
    Complex direct = eval_series(f, x);
    Complex via = eval_series(to_complex(f, prec), x);
    CHECK(!((direct - via).abs() > Real::parse("1e-50", prec)));
}
