#include "weblab/series_matrix.hpp"

#include <algorithm>

namespace weblab {

SeriesMatrix::SeriesMatrix(int rows, int cols, int order) : rows_(rows), cols_(cols) {
    e_.assign(static_cast<size_t>(rows) * cols, Series(order));
}

int SeriesMatrix::working_order() const {
    int n = e_.empty() ? 1 : e_.front().order();
    for (const Series& s : e_) n = std::min(n, s.order());
    return n;
}

SeriesMatrix SeriesMatrix::identity(int n, int order) {
    SeriesMatrix m(n, n, order);
    for (int i = 0; i < n; ++i) m.at(i, i) = Series::constant(Rational(1), order);
    return m;
}

SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b) {
    SeriesMatrix r(a.rows_, a.cols_, std::min(a.working_order(), b.working_order()));
    for (size_t k = 0; k < r.e_.size(); ++k) r.e_[k] = a.e_[k] + b.e_[k];
    return r;
}

SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b) {
    SeriesMatrix r(a.rows_, a.cols_, std::min(a.working_order(), b.working_order()));
    for (size_t k = 0; k < r.e_.size(); ++k) r.e_[k] = a.e_[k] - b.e_[k];
    return r;
}

SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
    if (a.cols_ != b.rows_) raise(ErrorCode::Internal, "matrix dimension mismatch");
    SeriesMatrix r(a.rows_, b.cols_, std::min(a.working_order(), b.working_order()));
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) {
            Series acc(r.working_order());
            for (int k = 0; k < a.cols_; ++k) acc += a.at(i, k) * b.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

SeriesMatrix SeriesMatrix::derive_x() const {
    SeriesMatrix r(rows_, cols_, working_order() - 1 > 0 ? working_order() - 1 : 1);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k].derive_x();
    return r;
}

SeriesMatrix SeriesMatrix::derive_y() const {
    SeriesMatrix r(rows_, cols_, working_order() - 1 > 0 ? working_order() - 1 : 1);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k].derive_y();
    return r;
}

Series SeriesMatrix::trace() const {
    Series t(working_order());
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

bool SeriesMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Series& s) { return s.is_zero(); });
}

RankResult series_matrix_rank(const SeriesMatrix& m) {
    const int nr = m.rows(), nc = m.cols();
    RankResult res;
    res.rank = 0;
    res.decision_precision = m.working_order();

    // Working copy at the shared precision.
    std::vector<std::vector<Series>> w;
    w.reserve(nr);
    int order = m.working_order();
    for (int i = 0; i < nr; ++i) {
        std::vector<Series> row;
        row.reserve(nc);
        for (int j = 0; j < nc; ++j) row.push_back(m.at(i, j).truncated(order));
        w.push_back(std::move(row));
    }

    Series prev_pivot = Series::constant(Rational(1), order);
    int sign = 1;
    int r = 0;
    int step = 0;
    for (int c = 0; c < nc && r < nr; ++c) {
        // Pivot: minimal valuation among rows >= r in this column.
        int current_order = w[r][c].order();
        int best = -1, best_val = 0;
        for (int i = r; i < nr; ++i) {
            current_order = std::min(current_order, w[i][c].order());
            int v = w[i][c].valuation();
            if (v < w[i][c].order() && (best < 0 || v < best_val)) {
                best = i;
                best_val = v;
            }
        }
        res.decision_precision = std::min(res.decision_precision, current_order);
        if (best < 0) {
            res.pivots.push_back({step++, -1, c, 0, true, current_order});
            continue;
        }
        if (best != r) {
            std::swap(w[best], w[r]);
            sign = -sign;
        }
        res.pivots.push_back({step++, r, c, best_val, false, current_order});
        const Series pivot = w[r][c];
        for (int i = r + 1; i < nr; ++i) {
            for (int j = c + 1; j < nc; ++j)
                w[i][j] = divide_exact(w[i][j] * pivot - w[i][c] * w[r][j], prev_pivot);
            w[i][c] = Series(w[i][c].order());
        }
        prev_pivot = pivot;
        ++r;
    }
    res.rank = r;

    if (nr == nc) {
        if (r == nr) {
            Series det = prev_pivot;  // last pivot of full-rank Bareiss = det
            if (sign < 0) det = -det;
            res.determinant = det;
        } else {
            res.determinant = Series(res.decision_precision);
        }
    }
    return res;
}

SeriesMatrix solve_unit_system(const SeriesMatrix& m, const SeriesMatrix& b) {
    const int n = m.rows();
    if (m.cols() != n || b.rows() != n)
        raise(ErrorCode::Internal, "solve_unit_system dimension mismatch");
    int order = std::min(m.working_order(), b.working_order());

    std::vector<std::vector<Series>> a;
    a.reserve(n);
    for (int i = 0; i < n; ++i) {
        std::vector<Series> row;
        row.reserve(n + b.cols());
        for (int j = 0; j < n; ++j) row.push_back(m.at(i, j).truncated(order));
        for (int j = 0; j < b.cols(); ++j) row.push_back(b.at(i, j).truncated(order));
        a.push_back(std::move(row));
    }

    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int i = c; i < n; ++i)
            if (a[i][c].is_unit()) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            raise(ErrorCode::NotAUnit, "linear system has no unit pivot (singular at the origin)");
        std::swap(a[pivot], a[c]);
        Series inv = a[c][c].inverted();
        for (int j = c; j < n + b.cols(); ++j) a[c][j] = a[c][j] * inv;
        for (int i = 0; i < n; ++i) {
            if (i == c || a[i][c].is_zero()) continue;
            Series f = a[i][c];
            for (int j = c; j < n + b.cols(); ++j) a[i][j] = a[i][j] - f * a[c][j];
        }
    }

    SeriesMatrix x(n, b.cols(), order);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < b.cols(); ++j) x.at(i, j) = a[i][n + j];
    return x;
}

}  // namespace weblab
