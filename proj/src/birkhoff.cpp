#include "lgcy/birkhoff.hpp"

namespace lgcy {

LaurentMatrix BirkhoffFactors::u0_laurent() const {
    LaurentMatrix m(u0.dim(), u0.prec());
    m.at(0) = u0;
    return m;
}

LaurentMatrix BirkhoffFactors::r_negz() const {
    CMat u0inv = u0.inverse();
    LaurentMatrix r(u0.dim(), u0.prec());
    for (const auto& [k, c] : u_plus_negz.coeffs()) r.at(k) = u0 * c * u0inv;
    return r;
}

Complex BirkhoffFactors::uplus_linear(int i, int j) const {
    return -u_plus_negz.get(1)(i, j); // flip z -> -z on the linear term
}

BirkhoffFactors birkhoff_factorize(const UMatrix& u) {
    mpfr_prec_t prec = u.m.prec();
    int n = u.m.dim();
    Real band = u_band_residual(u);
    Real gate = Real::pow2(-static_cast<long>(prec) / 4, prec);
    if (band > gate) throw std::invalid_argument("birkhoff_factorize: input not banded");

    // exact LDU of the scalar matrix (no pivoting; the principal minors of
    // the correspondence matrix are nonzero)
    CMat w = u_scalar_matrix(u);
    CMat lower = CMat::identity(n, prec);
    for (int c = 0; c < n; ++c) {
        if (w(c, c).is_zero()) throw std::domain_error("birkhoff_factorize: zero pivot");
        for (int r = c + 1; r < n; ++r) {
            Complex f = w(r, c) / w(c, c);
            lower(r, c) = f;
            for (int j = 0; j < n; ++j) w(r, j) -= f * w(c, j);
        }
    }
    CMat diag(n, prec);
    CMat upper = CMat::identity(n, prec);
    for (int i = 0; i < n; ++i) {
        diag(i, i) = w(i, i);
        for (int j = i + 1; j < n; ++j) upper(i, j) = w(i, j) / w(i, i);
    }

    // invert the unitriangular factor by forward substitution
    CMat linv = CMat::identity(n, prec);
    for (int i = 0; i < n; ++i)
        for (int j = i - 1; j >= 0; --j) {
            Complex s(prec);
            for (int k = j; k < i; ++k) s += lower(i, k) * linv(k, j);
            linv(i, j) = -s;
        }

    BirkhoffFactors f;
    f.u0 = diag;
    f.u_minus_negz = LaurentMatrix(n, prec);
    f.s_negz = LaurentMatrix(n, prec);
    f.u_plus_negz = LaurentMatrix(n, prec);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!lower(i, j).is_zero()) f.u_minus_negz.set_entry(i, j, j - i, lower(i, j));
            if (!linv(i, j).is_zero()) f.s_negz.set_entry(i, j, j - i, linv(i, j));
            if (!upper(i, j).is_zero()) f.u_plus_negz.set_entry(i, j, j - i, upper(i, j));
        }
    return f;
}

Complex su_display_closed_form(int i, int j, const ConstantPool& pool) {
    mpfr_prec_t prec = pool.precision;
    if (j < i) return Complex(prec);
    Complex one = Complex::of(1, prec);
    Complex xi = pool.xi;
    auto xip = [&](long k) { return pool.xi_pow(k); };
    Complex val(prec);
    Complex tpi = pool.two_pi_i;
    // the displayed S(-z) U(-z) matrix, entry scalars at z^{j-i}
    if (i == 0) {
        Complex num = xip(j + 1);
        Complex den = one - xip(j + 1);
        Complex sgn = (j % 2 == 0) ? -one : one;
        val = sgn * tpi * num / (den * Complex::of(pool.gamma_fifth_5(4 - j)));
    } else if (i == 1) {
        Complex den = (one - xip(j + 1)) * (one - xip(j + 1));
        Complex num;
        switch (j) {
        case 1: num = -xip(3); break;
        case 2: num = xip(4) * (one + xi); break;
        case 3: num = -xip(5) * (one + xi + xi * xi); break;
        default: throw std::out_of_range("su_display_closed_form");
        }
        val = tpi.pow_int(2) * num / (den * Complex::of(pool.gamma_fifth_5(4 - j)));
    } else if (i == 2) {
        Complex den = (one - xip(j + 1)).pow_int(3);
        Complex num;
        switch (j) {
        case 2: num = -xip(6); break;
        case 3: num = xip(7) * (one + xi + xi * xi); break;
        default: throw std::out_of_range("su_display_closed_form");
        }
        val = tpi.pow_int(3) * num / (den * Complex::of(pool.gamma_fifth_5(4 - j)));
    } else {
        if (j != 3) throw std::out_of_range("su_display_closed_form");
        Complex den = (one - xip(4)).pow_int(4);
        val = tpi.pow_int(4) * (-xip(10)) / (den * Complex::of(pool.gamma_fifth_5(1)));
    }
    return val;
}

Complex uplus_closed_form(int i, const ConstantPool& pool) {
    mpfr_prec_t prec = pool.precision;
    Complex one = Complex::of(1, prec);
    Complex xi = pool.xi;
    switch (i) {
    case 0: // (U_+)_{01} = xi/(1+xi) Gamma^5(4/5)/Gamma^5(3/5)
        return xi / (one + xi) *
               Complex::of(pool.gamma_fifth_5(4) / pool.gamma_fifth_5(3));
    case 1: { // (U_+)_{12} = xi (1+xi)^3 / (1+xi+xi^2)^2 Gamma^5(3/5)/Gamma^5(2/5)
        Complex opx = one + xi;
        Complex s = one + xi + xi * xi;
        return xi * opx.pow_int(3) / s.pow_int(2) *
               Complex::of(pool.gamma_fifth_5(3) / pool.gamma_fifth_5(2));
    }
    case 2: { // (U_+)_{23} = xi (1+xi+xi^2) (1-xi^3)^3 / (1-xi^4)^3 Gamma^5(2/5)/Gamma^5(1/5)
        Complex s = one + xi + xi * xi;
        Complex a = (one - pool.xi_pow(3)).pow_int(3);
        Complex b = (one - pool.xi_pow(4)).pow_int(3);
        return xi * s * a / b * Complex::of(pool.gamma_fifth_5(2) / pool.gamma_fifth_5(1));
    }
    default: throw std::out_of_range("uplus_closed_form");
    }
}

namespace {

// polynomial in two commuting variables with matrix coefficients
using BiPoly = std::map<std::pair<int, int>, CMat>;

void bipoly_add(BiPoly& p, int i, int j, const CMat& m) {
    auto it = p.find({i, j});
    if (it == p.end()) p[{i, j}] = m;
    else it->second = it->second + m;
}

// divide f(x,y) by (x+y): f = q (x+y) + r(x - y); exact shear coordinates
// s = x+y, d = x-y, x = (s+d)/2, y = (s-d)/2.
struct ShearResult {
    BiPoly quotient; // back in (x,y)
    Real remainder;
};

ShearResult divide_by_sum(const BiPoly& f, mpfr_prec_t prec) {
    // expand into (s,d)
    BiPoly sd;
    for (const auto& [ij, m] : f) {
        auto [i, j] = ij;
        // x^i y^j = 2^{-i-j} sum_{a,b} C(i,a) C(j,b) s^{a+b} d^{(i-a)-(j-b)}...
        for (int a = 0; a <= i; ++a)
            for (int b = 0; b <= j; ++b) {
                // (s+d)^i -> C(i,a) s^a d^{i-a}; (s-d)^j -> C(j,b) s^b (-d)^{j-b}
                Rat coef = Rat(binomial(i, a) * binomial(j, b), pow_int(Int(2), i + j));
                if ((j - b) % 2 == 1) coef = -coef;
                int spow = a + b, dpow = (i - a) + (j - b);
                bipoly_add(sd, spow, dpow, m.scaled(Complex::of(coef, prec)));
            }
    }
    ShearResult res{{}, Real(prec)};
    BiPoly qsd;
    for (const auto& [ab, m] : sd) {
        auto [a, b] = ab;
        if (a == 0) {
            Real ma = m.max_abs();
            if (ma > res.remainder) res.remainder = ma;
        } else {
            bipoly_add(qsd, a - 1, b, m);
        }
    }
    // back-substitute s = x+y, d = x-y
    for (const auto& [ab, m] : qsd) {
        auto [a, b] = ab;
        for (int i = 0; i <= a; ++i)
            for (int j = 0; j <= b; ++j) {
                Rat coef = Rat(binomial(a, i) * binomial(b, j));
                if ((b - j) % 2 == 1) coef = -coef;
                bipoly_add(res.quotient, i + j, (a - i) + (b - j),
                           m.scaled(Complex::of(coef, prec)));
            }
    }
    return res;
}

} // namespace

QuadForm quad_form_w(const LaurentMatrix& s_z, int window, const CMat& pairing,
                     const std::optional<Real>& tol) {
    mpfr_prec_t prec = s_z.prec();
    int n = s_z.dim();
    LaurentMatrix s_adj = s_z.adjoint(pairing);
    // numerator in x = 1/w, y = 1/z: N = S(w)^* S(z) - 1
    BiPoly num;
    for (const auto& [kw, mw] : s_adj.coeffs())
        for (const auto& [kz, mz] : s_z.coeffs()) {
            if (kw > 0 || kz > 0) throw std::invalid_argument("quad_form_w: S has positive z-powers");
            bipoly_add(num, -kw, -kz, mw * mz);
        }
    bipoly_add(num, 0, 0, -CMat::identity(n, prec));

    ShearResult sr = divide_by_sum(num, prec);
    if (tol && sr.remainder > *tol)
        throw std::domain_error("quad_form_w: numerator not divisible by w^{-1}+z^{-1}");

    QuadForm q{{}, sr.remainder};
    for (const auto& [ij, m] : sr.quotient) {
        auto [i, j] = ij;
        if (i + j <= window) bipoly_add(q.kl, i, j, m);
    }
    return q;
}

QuadForm quad_form_v(const LaurentMatrix& r_z, int window, const CMat& pairing,
                     const std::optional<Real>& tol) {
    mpfr_prec_t prec = r_z.prec();
    int n = r_z.dim();
    LaurentMatrix r_negw_adj = r_z.flip_z().adjoint(pairing);
    LaurentMatrix r_negz = r_z.flip_z();
    // numerator in (w, z): 1 - R(-w)^* R(-z)
    BiPoly num;
    bipoly_add(num, 0, 0, CMat::identity(n, prec));
    for (const auto& [kw, mw] : r_negw_adj.coeffs())
        for (const auto& [kz, mz] : r_negz.coeffs()) {
            if (kw < 0 || kz < 0) throw std::invalid_argument("quad_form_v: R has negative z-powers");
            bipoly_add(num, kw, kz, -(mw * mz));
        }

    ShearResult sr = divide_by_sum(num, prec);
    if (tol && sr.remainder > *tol)
        throw std::domain_error("quad_form_v: numerator not divisible by w+z");

    QuadForm q{{}, sr.remainder};
    for (const auto& [ij, m] : sr.quotient) {
        auto [i, j] = ij;
        if (i + j <= window) bipoly_add(q.kl, i, j, m);
    }
    return q;
}

} // namespace lgcy
