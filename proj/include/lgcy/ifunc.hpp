#ifndef LGCY_IFUNC_HPP
#define LGCY_IFUNC_HPP

#include "lgcy/graded.hpp"
#include "lgcy/logseries.hpp"
#include "lgcy/series.hpp"

#include <array>
#include <vector>

namespace lgcy {

enum class Side { CY, LG };

// Twisted I-function component tables. comp[n] is the scalar coefficient of
// z^{1-n} Phi_{n mod 5} in I(x,z); the basis index wraps mod 5 and the
// component carries its explicit mu^{floor(n/5)} monomial (on the LG side mu
// comes from the twisted product, on the CY side from phi^5 = mu).
struct CYComponents {
    int order = 0;
    int max_slot = 0;
    int mu_cap = 2;
    std::vector<LogSeries<MuPoly>> comp;
};

struct LGComponents {
    int order = 0;
    int max_slot = 0;
    int mu_cap = 2;
    std::vector<Series<MuPoly>> comp;
};

CYComponents build_icy_twisted(int order, int max_slot, int mu_cap);
LGComponents build_ilg_twisted(int order, int max_slot, int mu_cap);

// Untwisted I-functions on the four-dimensional state spaces (mu = 0,
// phi_4 = 0): the slices that enter the mirror maps and genus-one forms.
struct IFunctionCY {
    int order = 0;
    std::array<LogSeries<Rat>, 4> comp;
    const Series<Rat>& i0() const { return i0_; }
    Series<Rat> i0_;
};

struct IFunctionLG {
    int order = 0;
    std::array<Series<Rat>, 4> comp;
    const Series<Rat>& i0() const { return comp[0]; }
};

IFunctionCY build_icy(int order);
IFunctionLG build_ilg(int order);

// Picard-Fuchs operators. The LG product term defaults to the indexed form
// prod_i (t d/dt - i); the verbatim flag reproduces (t d/dt - 1)^5, which
// fails annihilation and matches nothing under q^{-1} = t^5 (kept testable).
struct PFOperator {
    Side side = Side::CY;
    bool indexed_product = true;
};

// Componentwise residuals. CY: residual of the operator applied to I, valid
// through q-order `order`. LG: residual premultiplied by t^5 (so no negative
// powers appear for wrong variants), valid through t-order `order`;
// annihilation of t*I through t^{order-5} is equivalent to a zero table.
std::vector<LogSeries<MuPoly>> pf_apply_cy(const PFOperator& op, const CYComponents& icy,
                                           bool mu_on = true);
std::vector<Series<MuPoly>> pf_apply_lg(const PFOperator& op, const LGComponents& ilg,
                                        bool mu_on = true);

// tau = I_1 / I_0
LogSeries<Rat> mirror_map_cy(const IFunctionCY& icy);
Series<Rat> mirror_map_lg(const IFunctionLG& ilg);

// J-slice I / I_0
std::array<LogSeries<Rat>, 4> j_slice_cy(const IFunctionCY& icy);
std::array<Series<Rat>, 4> j_slice_lg(const IFunctionLG& ilg);

// The mu = 0 CY operator -D^5 + q prod_i(5D+i) rewritten as
// sum_k c_k(q) (d/dq)^k; element [k][j] is the q^j coefficient of c_k.
// This is the order-5 ODE the transport module integrates.
std::vector<std::vector<Rat>> cy_pf_dq_coefficients();

// prod_{i=1}^{5}(5D + i) as a polynomial in D (exact integer coefficients)
std::vector<Rat> cy_pf_product_poly();

} // namespace lgcy

#endif
