#ifndef LGCY_BIRKHOFF_HPP
#define LGCY_BIRKHOFF_HPP

#include "lgcy/constants.hpp"
#include "lgcy/umatrix.hpp"

#include <map>
#include <optional>
#include <utility>

namespace lgcy {

// U(-z) = U_-(-z) U_0 U_+(-z) with U_- = 1 + O(z^{-1}) and U_+ = 1 + O(z),
// both unitriangular, U_0 diagonal and z-free. For the banded U this is an
// exact LDU factorization of the scalar coefficient matrix, regraded by z.
struct BirkhoffFactors {
    LaurentMatrix u_minus_negz;
    CMat u0;
    LaurentMatrix u_plus_negz;
    LaurentMatrix s_negz; // S(-z) = U_-(-z)^{-1}; rows of elementary operations

    LaurentMatrix s_z() const { return s_negz.flip_z(); }
    LaurentMatrix u_minus_z() const { return u_minus_negz.flip_z(); }
    LaurentMatrix u_plus_z() const { return u_plus_negz.flip_z(); }
    LaurentMatrix u0_laurent() const;
    LaurentMatrix r_negz() const; // U_0 U_+(-z) U_0^{-1}
    LaurentMatrix r_z() const { return r_negz().flip_z(); }

    // linear-in-z coefficient of U_+(z) at (i,j)
    Complex uplus_linear(int i, int j) const;
};

BirkhoffFactors birkhoff_factorize(const UMatrix& u);

// displayed closed form of (S(-z) U(-z))_{ij} = (U_0 U_+(-z))_{ij}, the
// scalar multiplying z^{j-i} (zero below the diagonal)
Complex su_display_closed_form(int i, int j, const ConstantPool& pool);

// closed forms of the three superdiagonal U_+ entries (in the +z grading)
Complex uplus_closed_form(int i, const ConstantPool& pool); // i = 0,1,2 -> (01),(12),(23)

// Quantization quadratic forms. W_{kl} from S, V_{kl} from R:
//   sum W_{kl} w^{-k} z^{-l} = (S(w)^* S(z) - 1) / (w^{-1} + z^{-1})
//   sum V_{kl} w^{k} z^{l}   = (1 - R(-w)^* R(-z)) / (w + z)
// The two-variable division is performed exactly in sheared coordinates
// (s, d) = (x + y, x - y); the remainder (the s^0 part) measures how far the
// numerator is from being divisible, i.e. the symplecticity defect.
struct QuadForm {
    std::map<std::pair<int, int>, CMat> kl;
    Real remainder;
    CMat get(int k, int l, int n, mpfr_prec_t prec) const {
        auto it = kl.find({k, l});
        return it == kl.end() ? CMat(n, prec) : it->second;
    }
};

// If tol is given and the division remainder exceeds it, throws domain_error
// (the numerator lacks the symplecticity factor).
QuadForm quad_form_w(const LaurentMatrix& s_z, int window, const CMat& pairing,
                     const std::optional<Real>& tol = std::nullopt);
QuadForm quad_form_v(const LaurentMatrix& r_z, int window, const CMat& pairing,
                     const std::optional<Real>& tol = std::nullopt);

} // namespace lgcy

#endif
