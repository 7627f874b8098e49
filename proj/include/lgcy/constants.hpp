#ifndef LGCY_CONSTANTS_HPP
#define LGCY_CONSTANTS_HPP

#include "lgcy/complexhp.hpp"

#include <array>
#include <vector>

namespace lgcy {

// High-precision realizations of the transcendental constants the
// correspondence needs: pi, the Euler-Mascheroni constant, zeta(k),
// Gamma(j/5), the fifth root of unity xi, 2*pi*i, and the derived
// Gamma-expansion constants C = 5/12 and E = -40 zeta(3) / (2 pi i)^3.
struct ConstantPool {
    mpfr_prec_t precision = 0;
    int zeta_max = 0;

    Real pi;
    Real euler;
    std::vector<Real> zeta;          // zeta[k] valid for 2 <= k <= zeta_max
    std::array<Real, 5> gamma_fifth; // gamma_fifth[j] = Gamma(j/5), j = 1..4; [0] = 1
    Complex xi;                      // exp(2 pi i / 5)
    Complex xi_half;                 // exp(pi i / 5), for half-integer xi powers
    Complex two_pi_i;
    Rat c_const = Rat(5, 12);
    Complex e_const;                 // -40 zeta(3) / (2 pi i)^3

    Complex xi_pow(long k) const;       // xi^k, any integer k
    Complex xi_half_pow(long k) const;  // exp(pi i k / 5)
    Real gamma_fifth_5(int j) const;    // Gamma(j/5)^5
    Real tolerance() const;             // default relative tolerance 2^(-prec/2)

    Complex c1() const { return Complex::of(1, precision); }
};

// precision >= 64 bits, zeta values prepared for 2 <= k <= zeta_max (>= 3).
ConstantPool build_constant_pool(mpfr_prec_t precision, int zeta_max = 8);

// Coefficients c_1..c_n of log Gamma(1+x) = sum c_k x^k + O(x^{n+1}):
// c_1 = -euler, c_k = (-1)^k zeta(k)/k for k >= 2. Throws if n exceeds the
// pool's zeta table.
std::vector<Complex> loggamma_coeffs(int n, const ConstantPool& pool);

} // namespace lgcy

#endif
