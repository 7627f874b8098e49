#ifndef LGCY_GENUSONE_HPP
#define LGCY_GENUSONE_HPP

#include "lgcy/continuation.hpp"
#include "lgcy/tower.hpp"

namespace lgcy {

// Genus-one mirror formulas and their semisimple-decomposition route, both
// sides, plus the final correspondence residual.
//
// The two sides of the final identity draw their continued ingredients from
// independent sources: the quantization side (vertex + loop) from the
// U-extracted connection matrix, the continued-GW side (the Zinger closed
// form in the t-coordinate) from the numerically transported one. The
// residual therefore verifies the correspondence rather than an algebraic
// rearrangement of one continuation.

// (q d/dq) F_1^CY from the genus-one CY mirror formula, exact over Q
Series<Rat> f1_euler_deriv_cy(const IFunctionCY& icy);
// same via -200/24 Dlog(q^{1/5} I0) - 5/24 Dlog(q^{1/5} L) + (1/2) dG
Series<Rat> f1_route_r1_cy(const TowerCY& tw, const Series<Rat>& Lcy, const IFunctionCY& icy);

// d/dt F_1^LG from the genus-one LG mirror formula, exact over Q
Series<Rat> f1_deriv_lg(const IFunctionLG& ilg);
Series<Rat> f1_route_r1_lg(const TowerLG& tw, const Series<Rat>& Llg, const IFunctionLG& ilg);

// d/dt of the vertex contribution:
//   dF1^LG + (25/3) d[ log(t I0^LG) - log(5 Itilde_0) ]  (the 1/t poles cancel)
Series<Complex> vertex_contribution(const IFunctionLG& ilg, const ContinuedCY& quant);

// d/dt of the loop contribution (1/2)(dG~ - dG^LG); the alpha-sum over the
// five canonical directions collapses to the difference of G-potentials
DLog loop_contribution(const TowerLG& lg, const Series<Rat>& Llg, const ContinuedCY& quant);

// d/dt of the continued genus-one CY mirror formula
DLog f1_deriv_cy_continued(const ContinuedCY& gw);

struct GenusOneForms {
    Series<Complex> vertex;
    Series<Complex> loop;
    Series<Complex> lhs; // dF1^C/dt
    Series<Complex> rhs; // dFtilde1^CY/dt
    Series<Complex> residual;
    Real residual_max;
    Real pole_residual; // the 1/t parts must cancel on both sides
};

GenusOneForms genus_one_check(const IFunctionLG& ilg, const TowerLG& lgtower,
                              const Series<Rat>& Llg, const ContinuedCY& quant_side,
                              const ContinuedCY& gw_side, int check_order);

} // namespace lgcy

#endif
