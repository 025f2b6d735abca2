#pragma once

#include <string>

#include "weblab/abelian.hpp"
#include "weblab/pw.hpp"
#include "weblab/series_matrix.hpp"

namespace weblab {

// One free jet coordinate: the pure y-derivative d_y^m b_j.
struct JetLabel {
    int j;  // function index, 3..d
    int m;  // derivative order, 0..d-3
};

// The staircase of free coordinates after triangularizing the prolonged
// system: at derivative order m the labels are j = d, d-1, ..., m+3, so the
// level counts run d-2, d-3, ..., 1 and the total is pi_d = (d-1)(d-2)/2.
struct JetSchema {
    int d;
    std::vector<JetLabel> labels;

    int pi() const { return static_cast<int>(labels.size()); }
};

JetSchema staircase_schema(int d);

// Connection matrices for the free-coordinate vector f: horizontal sections
// satisfy df + (gamma_x dx + gamma_y dy) f = 0.
struct Prolongation {
    JetSchema schema;
    SeriesMatrix gamma_x;
    SeriesMatrix gamma_y;
};

// Differentiates the d-1 equations of M(d) formally up to total order d-3
// and solves, level by level, for the dependent jet coordinates; every level
// is a square constant-coefficient system. DegenerateProlongation is raised
// if a level matrix is singular (not expected for valid webs).
Prolongation prolong(const SlopeSystem& sys);

struct CurvatureData {
    SeriesMatrix full;              // K = d_x(g_y) - d_y(g_x) + [g_x, g_y]
    std::vector<Series> first_row;  // k_1 ... k_pi
    bool full_check;                // rows 2..pi vanish at precision
};

CurvatureData curvature_of(const SeriesMatrix& gamma_x, const SeriesMatrix& gamma_y);

struct ConnectionData {
    JetSchema schema;
    SeriesMatrix gamma_x;
    SeriesMatrix gamma_y;
    std::vector<Series> k;  // curvature row in the adapted basis
    Series trace;           // = k_1, cross-computed as tr(K)
    bool adapted;
    bool gauge_repaired;
    std::string repair_note;

    int pi() const { return schema.pi(); }
};

// Full pipeline step: derive M(d), prolong, take the curvature and normalize
// the basis so that only the first curvature row is nonzero. Raises
// AdaptedBasisViolation when even the gauge repair cannot reach that form.
ConnectionData build_connection(const WebPresentation& w);
ConnectionData build_connection_from_system(const SlopeSystem& sys);

// Normalization step on an existing prolongation (permutation and unipotent
// gauge repair); build_connection goes through this.
ConnectionData finalize_connection(Prolongation p);

// The curvature row; cross-checked against the trace of the full matrix.
Series blaschke_chern_trace(const ConnectionData& c);

// Free-coordinate vector of a candidate solution: f_l = d_y^m b_j per the
// schema. Used by the horizontality and annihilation tests.
std::vector<Series> horizontal_vector(const JetSchema& schema, const AbelianCandidate& c);

struct LinearizabilityReport {
    Series kappa;        // k_1 / 3
    Series l1_residual;  // k_2 - 3 d_x(kappa)
    Series l2_residual;  // k_3 - 3 d_y(kappa)
    bool degree_gate;
    bool linearizable;
};

// d = 4 only: the curvature-based linearizability test.
LinearizabilityReport linearizability_d4(const ConnectionData& c, const PwPolynomial& p);

}  // namespace weblab
