#pragma once

#include "weblab/connection.hpp"
#include "weblab/pw.hpp"
#include "weblab/web.hpp"

namespace weblab {

// Classical 3-web data: the 1-form gamma with d(omega_i) = gamma ^ omega_i
// for normalized omega_i = rho_i (dy - p_i dx) with omega_1+omega_2+omega_3
// = 0, and its differential d(gamma) -- the Blaschke curvature. gamma
// depends on the normalization, d(gamma) does not.
struct BlaschkeData {
    Series gamma_dx;   // coefficient of dx
    Series gamma_dy;   // coefficient of dy
    Series curvature;  // d(gamma) = (d_x gamma_dy - d_y gamma_dx) dx^dy
};

// Independent classical computation from three explicit slopes; solves the
// overdetermined system from two of the three structure equations and
// verifies the third at precision.
BlaschkeData blaschke_curvature_3web(const Series& p1, const Series& p2, const Series& p3);

struct TraceFormulaReport {
    Series lhs;  // tr(K) of the full pipeline
    Series rhs;  // sum of C(d,3) extracted Blaschke curvatures
    bool equal;
    int compared_precision;
    std::vector<Series> subweb_curvatures;  // in canonical selector order
};

// Theoreme-1 check: both sides computed by independent code paths.
TraceFormulaReport trace_formula_check(const WebPresentation& w);

struct CrossRatioReport {
    Series cross_ratio;
    bool is_constant;
    // Indexed by the omitted leaf: K_1 omits slope 1, etc.
    std::vector<Series> extracted_curvatures;
    bool all_equal;
    bool equivalence_holds;  // is_constant == all_equal
};

// Nakai equivalence items 2-3 for a 4-web with explicit slopes.
CrossRatioReport nakai_checks_d4(const WebPresentation& w);

struct RectifiedTraceReport {
    Series oracle_trace;      // K_x + K_y + K_3 + K_4 from 3-web oracles
    Series pipeline_trace;    // k_1 of the connection
    bool equal;
    // Proposition-3 style candidates, reported as corroboration only: the
    // note pins its adapted basis only up to construction, so k_2/k_3
    // matches are logged, not asserted.
    Series k2_candidate;  // d_x(K_y) + v_3 K_y
    Series k3_candidate;  // d_y(K_x) - v_2 K_x
    bool k2_matches;
    bool k3_matches;
};

// For a rectified 4-web pushed through an affine chart: the trace recomputed
// purely from extracted 3-web oracles, compared against the pipeline trace.
RectifiedTraceReport rectified_trace_oracle(const WebPresentation& w, const PwPolynomial& p,
                                            const ConnectionData& c);

}  // namespace weblab
