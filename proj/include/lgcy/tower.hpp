#ifndef LGCY_TOWER_HPP
#define LGCY_TOWER_HPP

#include "lgcy/constants.hpp"
#include "lgcy/ifunc.hpp"
#include "lgcy/laurent.hpp"

namespace lgcy {

// I_{p,q} towers via the normalize-and-differentiate recursion
//   I_{0,q} = I_q,   I_{p,q} = D( I_{p-1,q} / I_{p-1,p-1} )
// where the diagonal divisor is stripped of its known mu^{floor((p-1)/5)}
// monomial (the mu-power rides with the basis vector Phi_q, so property (2)
// reads I_{5+p,5+p} = mu I_{p,p} on the stored scalars).

struct TowerLG {
    int rows_built = 0; // P
    int max_slot = 0;
    int order = 0;
    int mu_cap = 2;
    std::vector<std::vector<Series<MuPoly>>> rows; // rows[p][q-p] = I_{p,q}
    const Series<MuPoly>& at(int p, int q) const { return rows.at(p).at(q - p); }
    Series<Rat> diag_rat(int p) const; // mu-stripped diagonal, exact over Q
};

struct TowerCY {
    int rows_built = 0;
    int max_slot = 0;
    int order = 0;
    int mu_cap = 2;
    std::vector<std::vector<LogSeries<MuPoly>>> rows;
    const LogSeries<MuPoly>& at(int p, int q) const { return rows.at(p).at(q - p); }
    Series<MuPoly> diag(int p) const; // log-free by construction
    Series<Rat> diag_rat(int p) const;
};

TowerLG build_tower_lg(const LGComponents& comps, int max_row);
TowerCY build_tower_cy(const CYComponents& comps, int max_row);

// t^val * unit(t); used for the analytically continued tower whose entries
// all carry one exact power of t.
struct ValSeries {
    int val = 0;
    Series<Complex> unit;

    ValSeries() = default;
    ValSeries(int v, Series<Complex> u) : val(v), unit(std::move(u)) { normalize(); }

    void normalize(); // move exact-zero leading coefficients into val
    ValSeries d_tilde() const; // D = -(1/5) t d/dt
    friend ValSeries operator/(const ValSeries& a, const ValSeries& b);
    friend ValSeries operator*(const ValSeries& a, const ValSeries& b);
    Series<Complex> power_series(int order) const; // requires val >= 0
};

struct TowerCont {
    int rows_built = 0;
    int order = 0;
    std::vector<std::vector<ValSeries>> rows; // rows[p][q-p], q <= 3
    const ValSeries& at(int p, int q) const { return rows.at(p).at(q - p); }
};

// components[q] = g_q with I~_q = (t/5) g_q, q = 0..3
TowerCont build_tower_cont(const std::array<Series<Complex>, 4>& g);

// L^CY(q) = (1 - 5^5 q)^{-1/5},  L^LG(t) = (1 - (t/5)^5)^{-1/5}
Series<Rat> big_L(Side side, int order);

// d log f packaged with its exact 1/t pole coefficient.
struct DLog {
    Complex pole;        // coefficient of 1/t
    Series<Complex> reg; // regular part
    friend DLog operator+(const DLog& a, const DLog& b) { return {a.pole + b.pole, a.reg + b.reg}; }
    friend DLog operator-(const DLog& a, const DLog& b) { return {a.pole - b.pole, a.reg - b.reg}; }
    DLog scaled(const Rat& r) const;
};

DLog dlog(const ValSeries& f);

// Normalized-canonical-frame scalars c_{-1}..c_4 (index shifted by one) with
// their half-integer lambda grading: c_i carries lambda^{(3-2i)/2}.
struct CScalarsRat {
    std::array<Series<Rat>, 6> c; // c[i+1] = c_i
    int lambda_halves(int i) const { return 3 - 2 * i; }
};
struct CScalarsCont {
    std::array<ValSeries, 6> c;
    int lambda_halves(int i) const { return 3 - 2 * i; }
};

CScalarsRat c_scalars_lg(const TowerLG& tw, const Series<Rat>& L);
// Continued side; uses the formal branch convention Ltilde = -(t/5) L^LG.
CScalarsCont c_scalars_cont(const TowerCont& tw, const Series<Rat>& Llg);

// Numeric normalization matrix: Psi_{alpha m} = xi^{alpha(m - 3/2)} c_{3-m}
// and (Psi^{-1})_{m alpha} = xi^{alpha(3/2 - m)} c_m / 5, realized with the
// primitive tenth root for the half-integer xi powers; entry (alpha, m)
// additionally carries the formal grading lambda^{m - 3/2}.
struct PsiMatrix {
    std::array<std::array<Series<Complex>, 5>, 5> entry;
    std::array<std::array<Series<Complex>, 5>, 5> inverse;
};
PsiMatrix psi_matrix(const CScalarsRat& cs, const ConstantPool& pool, int order);

// max |coeff| of (Psi Psi^* - 1) over the truncation window, LG side
Real psi_unitarity_residual(const CScalarsRat& cs, const ConstantPool& pool, int order);

// Delta_alpha = (xi^alpha lambda)^3 I_00^2 / L^2 : exact series part
Series<Rat> delta_series_lg(const TowerLG& tw, const Series<Rat>& L);

// R1 diagonal potentials. 5 lambda xi^alpha (R_1)_aa = (dG/du-form); we
// return the coordinate derivative of G directly:
//   LG:  dG/dt  = (5/4) dlog L - 4 dlog I00 - dlog I11            (exact)
//   CY:  q d/dq G = (5/4) Dlog L - 4 Dlog I00 - Dlog I11 - 3/4     (exact)
Series<Rat> g_potential_lg_dt(const TowerLG& tw, const Series<Rat>& L);
Series<Rat> g_potential_cy_dlogq(const TowerCY& tw, const Series<Rat>& L);
// continued: dG~/dt with the -(3/4) log q term continued as +(15/4) log t
DLog g_potential_cont_dt(const TowerCont& tw, const Series<Rat>& Llg);

// M(t,0) residuals: diagonal identity and off-diagonal magnitude
struct MZeroResult {
    Real diag_residual;    // max coeff |LHS_m - RHS_m| over m=0..4
    Real offdiag_residual; // max |offdiag entries| at t = 0 window
};
MZeroResult m_zero_check(const TowerLG& lg, const TowerCont& cont, const Series<Rat>& Llg,
                         const ConstantPool& pool);

} // namespace lgcy

#endif
