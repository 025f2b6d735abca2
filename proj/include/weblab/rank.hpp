#pragma once

#include <optional>

#include "weblab/blaschke.hpp"
#include "weblab/connection.hpp"

namespace weblab {

// The pi_d x pi_d matrix of covariant derivatives of the curvature row k up
// to order d-3; its corank over the series ring is the rank of the web.
struct RankMatrix {
    SeriesMatrix m;
    std::vector<std::string> row_labels;  // derivation that produced each row
    int d;
};

// d(row) - row * gamma_dir: annihilates horizontal sections whenever the
// input row does.
std::vector<Series> covariant_row_derive(const std::vector<Series>& row,
                                         const ConnectionData& c, bool in_x);

// Rows D_x^a D_y^b k (y-derivations applied first) for a+b <= d-3, ordered
// by total order then by a descending.
RankMatrix build_rank_matrix(const ConnectionData& c);

struct RankCertificate {
    int rank_of_web;  // = corank
    int corank;
    int pi_d;
    bool flat;  // k = 0 at precision (shortcut: rank = pi_d)
    int generic_rank;
    int decision_precision;
    std::vector<PivotRecord> pivots;
    std::optional<Series> determinant;
    std::string advisory;  // set when decisions ran at marginal precision
};

RankCertificate rank_of_web(const RankMatrix& m);

struct CorollaryReport {
    bool equal_nonzero_curvatures;
    bool rank_le_1_consistent;  // equal nonzero curvatures => rank <= 1
    bool trace_zero;
    bool rank_ne_2_consistent;  // zero trace => rank != 2
    bool det_zero;
    bool det_iff_rank_consistent;  // det = 0 at precision <=> rank >= 1
    bool all_consistent;
};

// The d = 4 consequences of Theoreme 2 stated in the note, checked against
// a computed certificate.
CorollaryReport d4_corollary_checks(const RankCertificate& cert, const CrossRatioReport& cr,
                                    const Series& trace);

}  // namespace weblab
