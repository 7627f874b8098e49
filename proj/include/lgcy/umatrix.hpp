#ifndef LGCY_UMATRIX_HPP
#define LGCY_UMATRIX_HPP

#include "lgcy/constants.hpp"
#include "lgcy/ifunc.hpp"
#include "lgcy/laurent.hpp"

namespace lgcy {

// The LG/CY symplectomorphism in its untwisted matrix form. The stored
// LaurentMatrix is U(-z): column m is the phi-basis expansion of
// U(-z)(phi_m), so entry (r,m) is supported at z-power m-r only.
struct UMatrix {
    LaurentMatrix m; // 4x4 over Complex, window [-3,3]
};

// Nilpotent Gamma-expansion build: the three factors of each column are
// expanded in h = phi_1/z through h^3 (log-Gamma coefficients and a
// geometric series in the nilpotent deviation of e^{-2 pi i h}).
UMatrix build_u_matrix(const ConstantPool& pool);

// The displayed closed form of entry (r,m) (rows in terms of the constants
// C = 5/12 and E = -40 zeta(3)/(2 pi i)^3); scalar at z^{m-r}.
Complex u_entry_closed_form(int r, int m, const ConstantPool& pool);

// scalar coefficient matrix: U(-z) = Z(z)^{-1} [scalar] Z(z), Z = diag(z^r)
CMat u_scalar_matrix(const UMatrix& u);

Real u_band_residual(const UMatrix& u);                             // mass off the band
Real u_closed_form_residual(const UMatrix& u, const ConstantPool& pool);
Real u_symplectic_residual(const UMatrix& u, const ConstantPool& pool); // |U(z)U(-z)* - 1|

// b_{ij}: the continued CY components in the LG frame,
// Itilde_i = (t/5) sum_j b_{ij} I_j^LG; read off by applying U to t I^LG
// and dividing by 5 at the leading t-orders.
CMat extract_b_matrix(const UMatrix& u, const IFunctionLG& ilg, const ConstantPool& pool);

// closed form of b_{ij} for rows i = 0, 1
Complex b_closed_form(int i, int j, const ConstantPool& pool);

} // namespace lgcy

#endif
