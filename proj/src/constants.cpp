#include "lgcy/constants.hpp"

#include <stdexcept>

namespace lgcy {

Complex ConstantPool::xi_pow(long k) const {
    long r = ((k % 5) + 5) % 5;
    return xi.pow_int(r);
}

Complex ConstantPool::xi_half_pow(long k) const {
    long r = ((k % 10) + 10) % 10;
    return xi_half.pow_int(r);
}

Real ConstantPool::gamma_fifth_5(int j) const {
    if (j < 1 || j > 4) throw std::out_of_range("gamma_fifth_5: j in 1..4");
    Real g = gamma_fifth[j];
    Real g2 = g * g;
    return g2 * g2 * g;
}

Real ConstantPool::tolerance() const {
    return Real::pow2(-static_cast<long>(precision / 2), precision);
}

ConstantPool build_constant_pool(mpfr_prec_t precision, int zeta_max) {
    if (precision < 64)
        throw std::invalid_argument("build_constant_pool: precision below 64 bits");
    if (zeta_max < 3)
        throw std::invalid_argument("build_constant_pool: zeta_max below 3");

    ConstantPool p;
    p.precision = precision;
    p.zeta_max = zeta_max;
    p.pi = Real::pi(precision);
    p.euler = Real::euler_gamma(precision);

    p.zeta.assign(zeta_max + 1, Real(precision));
    for (int k = 2; k <= zeta_max; ++k) p.zeta[k] = Real::zeta_ui(k, precision);

    p.gamma_fifth[0] = Real::of(1, precision);
    for (int j = 1; j <= 4; ++j) {
        Real x = Real::of(Rat(j, 5), precision);
        p.gamma_fifth[j] = Real::gamma(x);
    }

    p.xi = root_of_unity(1, 5, precision);
    p.xi_half = root_of_unity(1, 10, precision);
    p.two_pi_i = Complex::i_times(Real::of(2, precision) * p.pi);

    // E = -40 zeta(3) / (2 pi i)^3; purely imaginary.
    Complex num = Complex::of(Rat(-40), precision) * Complex::of(p.zeta[3]);
    p.e_const = num / p.two_pi_i.pow_int(3);
    return p;
}

std::vector<Complex> loggamma_coeffs(int n, const ConstantPool& pool) {
    if (n < 1) throw std::invalid_argument("loggamma_coeffs: n < 1");
    if (n > pool.zeta_max)
        throw std::out_of_range("loggamma_coeffs: n exceeds available zeta values");
    std::vector<Complex> c;
    c.reserve(n);
    c.push_back(Complex::of(-pool.euler));
    for (int k = 2; k <= n; ++k) {
        Real v = Real::of(Rat(k % 2 == 0 ? 1 : -1, k), pool.precision) * pool.zeta[k];
        c.push_back(Complex::of(v));
    }
    return c;
}

} // namespace lgcy
