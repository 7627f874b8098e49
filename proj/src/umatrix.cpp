#include "lgcy/umatrix.hpp"

#include "lgcy/graded.hpp"

namespace lgcy {

namespace {

using Nil = Nilp4<Complex>;

Nil nil_zero(mpfr_prec_t prec) {
    Nil x;
    for (auto& c : x.a) c = Complex(prec);
    return x;
}

Nil nil_scalar(const Complex& c, mpfr_prec_t prec) {
    Nil x = nil_zero(prec);
    x.a[0] = c;
    return x;
}

Nil nil_inverse(const Nil& x, mpfr_prec_t prec) {
    // (c0 (1 + n))^{-1} with n nilpotent of order 4
    Complex c0inv = x.a[0].inv();
    Nil n = x;
    n.a[0] = Complex(prec);
    for (auto& c : n.a) c = c * c0inv;
    Nil acc = nil_scalar(Complex::of(1, prec), prec);
    Nil pw = nil_scalar(Complex::of(1, prec), prec);
    Nil minus_n = nil_zero(prec) - n;
    for (int k = 1; k <= 3; ++k) {
        pw = pw * minus_n;
        acc = acc + pw;
    }
    for (auto& c : acc.a) c = c * c0inv;
    return acc;
}

} // namespace

UMatrix build_u_matrix(const ConstantPool& pool) {
    if (pool.precision < 128)
        throw std::invalid_argument("build_u_matrix: pool precision below 128 bits");
    mpfr_prec_t prec = pool.precision;
    Complex one = Complex::of(1, prec);

    // Gamma^5(1+h) / Gamma(1+5h) = exp( sum_k c_k (5 - 5^k) h^k ), h^4 = 0
    std::vector<Complex> lg = loggamma_coeffs(3, pool);
    Nil expo = nil_zero(prec);
    for (int k = 1; k <= 3; ++k) {
        Rat five_minus(5 - pow_int(Int(5), k));
        expo.a[k] = lg[k - 1] * Complex::of(five_minus, prec);
    }
    Nil gamma_ratio = nil_scalar(one, prec);
    {
        Nil pw = nil_scalar(one, prec);
        Rat fact(1);
        for (int k = 1; k <= 3; ++k) {
            pw = pw * expo;
            fact /= Rat(k);
            Nil term = pw;
            for (auto& c : term.a) c = c * Complex::of(fact, prec);
            gamma_ratio = gamma_ratio + term;
        }
    }

    // e^{-2 pi i h} as a nilpotent exponential
    Nil emh = nil_zero(prec);
    {
        Complex w = -pool.two_pi_i;
        Complex pw = one;
        Rat fact(1);
        emh.a[0] = one;
        for (int k = 1; k <= 3; ++k) {
            pw = pw * w;
            fact /= Rat(k);
            emh.a[k] = pw * Complex::of(fact, prec);
        }
    }

    UMatrix u;
    u.m = LaurentMatrix(4, prec);
    for (int m = 0; m < 4; ++m) {
        Complex y = pool.xi_pow(m + 1);
        // xi^{m+1} / (e^{-2 pi i h} - xi^{m+1}) via the geometric series in
        // the nilpotent deviation
        Nil denom = emh;
        denom.a[0] = denom.a[0] - y;
        Nil geom = nil_inverse(denom, prec);
        for (auto& c : geom.a) c = c * y;

        Complex pref = -pool.two_pi_i / Complex::of(pool.gamma_fifth_5(4 - m));
        Nil col = geom * gamma_ratio;
        for (int r = 0; r < 4; ++r) {
            Complex entry = col.a[r] * pref;
            if (m % 2 == 1) entry = -entry; // (-z)^m = (-1)^m z^m
            u.m.set_entry(r, m, m - r, entry);
        }
    }
    return u;
}

Complex u_entry_closed_form(int r, int m, const ConstantPool& pool) {
    mpfr_prec_t prec = pool.precision;
    Complex one = Complex::of(1, prec);
    Complex y = pool.xi_pow(m + 1);
    Complex u = one - y;
    Complex g;
    switch (r) {
    case 0: g = y / u; break;
    case 1: g = y / (u * u); break;
    case 2: {
        Complex a = y * (one + y) / (Complex::of(2, prec) * u.pow_int(3));
        g = a + Complex::of(pool.c_const, prec) * y / u;
        break;
    }
    case 3: {
        Complex a = y * (one + Complex::of(4, prec) * y + y * y) /
                    (Complex::of(6, prec) * u.pow_int(4));
        Complex b = Complex::of(pool.c_const, prec) * y / (u * u);
        g = a + b - pool.e_const * y / u;
        break;
    }
    default: throw std::out_of_range("u_entry_closed_form");
    }
    Complex sign = (m % 2 == 0) ? -one : one; // (-1)^{m+1}
    return sign * pool.two_pi_i.pow_int(r + 1) * g / Complex::of(pool.gamma_fifth_5(4 - m));
}

CMat u_scalar_matrix(const UMatrix& u) {
    mpfr_prec_t prec = u.m.prec();
    CMat s(4, prec);
    for (int r = 0; r < 4; ++r)
        for (int m = 0; m < 4; ++m) s(r, m) = u.m.get(m - r)(r, m);
    return s;
}

Real u_band_residual(const UMatrix& u) {
    Real worst(u.m.prec());
    for (const auto& [k, c] : u.m.coeffs())
        for (int r = 0; r < 4; ++r)
            for (int m = 0; m < 4; ++m) {
                if (m - r == k) continue;
                Real a = c(r, m).abs();
                if (a > worst) worst = a;
            }
    return worst;
}

Real u_closed_form_residual(const UMatrix& u, const ConstantPool& pool) {
    CMat s = u_scalar_matrix(u);
    Real worst(pool.precision);
    for (int r = 0; r < 4; ++r)
        for (int m = 0; m < 4; ++m) {
            Real a = (s(r, m) - u_entry_closed_form(r, m, pool)).abs();
            if (a > worst) worst = a;
        }
    return worst;
}

Real u_symplectic_residual(const UMatrix& u, const ConstantPool& pool) {
    CMat p = quintic_pairing(4, pool.precision);
    LaurentMatrix prod = u.m.flip_z() * u.m.adjoint(p);
    return prod.distance_to_identity();
}

CMat extract_b_matrix(const UMatrix& u, const IFunctionLG& ilg, const ConstantPool& pool) {
    if (ilg.order < 4) throw std::invalid_argument("extract_b_matrix: need order >= 4");
    mpfr_prec_t prec = pool.precision;
    CMat scal = u_scalar_matrix(u);
    CMat b(4, prec);
    for (int i = 0; i < 4; ++i) {
        // g_i = sum_j U_{ij} I_j^LG(t); b_{ij} = j! [t^j] g_i
        Series<Complex> g(4, Complex(prec));
        for (int j = 0; j < 4; ++j)
            g += to_complex(ilg.comp[j].truncated(4), prec).scaled(scal(i, j));
        for (int j = 0; j < 4; ++j) b(i, j) = g[j] * Complex::of(Rat(factorial(j)), prec);
    }
    return b;
}

Complex b_closed_form(int i, int j, const ConstantPool& pool) {
    if (i < 0 || i > 1) throw std::out_of_range("b_closed_form: rows 0,1 only");
    mpfr_prec_t prec = pool.precision;
    Complex y = pool.xi_pow(j + 1);
    Complex one = Complex::of(1, prec);
    Complex sign = (j % 2 == 0) ? one : -one; // (-1)^{j+1}
    return -sign * pool.two_pi_i.pow_int(i + 1) * y /
           ((one - y).pow_int(i + 1) * Complex::of(pool.gamma_fifth_5(4 - j)));
}

} // namespace lgcy
