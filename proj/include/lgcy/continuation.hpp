#ifndef LGCY_CONTINUATION_HPP
#define LGCY_CONTINUATION_HPP

#include "lgcy/constants.hpp"
#include "lgcy/tower.hpp"
#include "lgcy/umatrix.hpp"

namespace lgcy {

// Efficient mu = 0 component tables (log-polynomial coefficients on the CY
// side, plain series on the LG side), slots 0..4 of the extended state
// space. These seed the numeric transport and back the continued objects.
std::vector<LogSeries<Rat>> cy_components_mu0(int order, int max_slot);
std::vector<Series<Rat>> lg_components_mu0(int order, int max_slot);

struct PathSpec {
    std::vector<Complex> waypoints; // piecewise-linear path in the q-plane
};

// q0 = 5^-5/4 on the positive real axis, over the discriminant at height
// 5^-5, out to q1 = t1^-5 with t1 = 1/2.
PathSpec default_path(mpfr_prec_t prec);

struct TransportOptions {
    int taylor_order = 240;
    // step <= ratio * distance to the nearest singularity {0, 5^-5}
    Rat step_ratio = Rat(7, 20);
    // endpoint series truncation; 0 = scale with the precision (the q0-side
    // tail decays like 4^-terms, so ~0.8 bits of accuracy per term)
    int series_terms = 0;
    mpfr_prec_t prec = 256;

    int terms() const {
        if (series_terms > 0) return series_terms;
        int t = static_cast<int>(prec * 7 / 10);
        return t < 150 ? 150 : t;
    }
};

// truncated local Taylor data of one solution: a_k = y^(k)(center)/k!
using Jet = std::vector<Complex>;

// Transport jets of solutions of the mu=0 CY Picard-Fuchs ODE along a
// piecewise-linear path by high-order Taylor stepping. Throws if a waypoint
// comes too close to a singular point.
std::vector<Jet> transport_jets(const PathSpec& path, std::vector<Jet> jets,
                                const TransportOptions& opt, int* steps_out = nullptr);

struct TransportResult {
    CMat bhat;           // 4x4: transported I_r = (1/5) sum_j bhat_rj * (t I_j^LG)
    CMat connection5;    // full 5x5 connection in the LG Frobenius basis
    Complex beta_path;   // continued branch of L^CY against (t/5) L^LG at t1
    Real path_reversal;  // | round-trip - start | / |start|
    Real step_halving;   // connection difference when the step ratio is halved
    int steps = 0;
    Complex q0;          // first waypoint
    Complex t1;          // principal q1^{-1/5}
};

TransportResult pf_transport(const PathSpec& path, const TransportOptions& opt,
                             const ConstantPool& pool);

// Continued CY data built from a connection matrix b (either the
// U-extracted one or the transported one): components Itilde_i = (t/5) g_i,
// the continued tower, and the continued mirror map.
struct ContinuedCY {
    mpfr_prec_t prec = 256;
    int order = 0;
    CMat b;
    std::array<Series<Complex>, 4> g; // unit factors, g_i = 5 Itilde_i / t
    TowerCont tower;
    Series<Complex> tau; // tau^C = Itilde_1 / Itilde_0 = g_1/g_0
};

ContinuedCY build_continued_cy(const CMat& b, const IFunctionLG& ilg, int order,
                               mpfr_prec_t prec);

// | prod_{p=0}^{4} Itilde_pp - (Ltilde)^5 | with Itilde_44 = Itilde_00 and
// (Ltilde)^5 = -((t/5) L^LG)^5; validates the fifth-power branch beta^5 = -1.
Real cont_tower_product_residual(const ContinuedCY& cont, const Series<Rat>& Llg);

} // namespace lgcy

#endif
