#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weblab/series.hpp"

namespace weblab {

// Rectangular matrix of truncated series sharing a working precision (the
// minimum of the entry orders).
class SeriesMatrix {
public:
    SeriesMatrix() : rows_(0), cols_(0) {}
    SeriesMatrix(int rows, int cols, int order);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Series& at(int r, int c) const { return e_[r * cols_ + c]; }
    Series& at(int r, int c) { return e_[r * cols_ + c]; }

    int working_order() const;

    static SeriesMatrix identity(int n, int order);

    friend SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b);
    friend SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b);
    friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);

    SeriesMatrix derive_x() const;
    SeriesMatrix derive_y() const;

    Series trace() const;
    bool is_zero() const;

private:
    int rows_, cols_;
    std::vector<Series> e_;
};

// One elimination step of the fraction-free rank computation: which entry
// was used as pivot (or that an entire column was declared zero) and at what
// precision the decision was made.
struct PivotRecord {
    int step;
    int row;        // -1 when the column was declared zero
    int col;
    int valuation;  // valuation of the pivot; meaningless when declared_zero
    bool declared_zero;
    int precision;  // order at which the zero/nonzero decision was taken
};

struct RankResult {
    int rank;
    std::vector<PivotRecord> pivots;
    // Determinant at precision for square full-rank matrices; zero series
    // when rank-deficient; nullopt for non-square inputs.
    std::optional<Series> determinant;
    int decision_precision;  // lowest order at which any pivot decision ran
};

// Generic rank over the fraction field of the series ring, by fraction-free
// Gaussian elimination with minimal-valuation pivoting. Zero tests are taken
// at the working precision and recorded in the certificate.
RankResult series_matrix_rank(const SeriesMatrix& m);

// Solve M * X = B by Gaussian elimination with unit pivots (constant-term
// pivoting). Requires the constant-term matrix M(0) to be invertible; since
// every division is by a unit series, no precision is lost. Returns X.
SeriesMatrix solve_unit_system(const SeriesMatrix& m, const SeriesMatrix& b);

}  // namespace weblab
