#include "weblab/rank.hpp"

#include <map>

namespace weblab {

std::vector<Series> covariant_row_derive(const std::vector<Series>& row,
                                         const ConnectionData& c, bool in_x) {
    const SeriesMatrix& g = in_x ? c.gamma_x : c.gamma_y;
    const int pi = static_cast<int>(row.size());
    std::vector<Series> out;
    out.reserve(pi);
    for (int l = 0; l < pi; ++l) {
        Series acc = in_x ? row[l].derive_x() : row[l].derive_y();
        for (int m = 0; m < pi; ++m) acc -= row[m] * g.at(m, l);
        out.push_back(acc);
    }
    return out;
}

RankMatrix build_rank_matrix(const ConnectionData& c) {
    const int d = c.schema.d;
    const int pi = c.pi();

    // rows[a][b] = D_x^a D_y^b k with all y-derivations applied first.
    std::map<std::pair<int, int>, std::vector<Series>> rows;
    rows[{0, 0}] = c.k;
    for (int q = 1; q <= d - 3; ++q)
        for (int a = q; a >= 0; --a) {
            int b = q - a;
            if (a > 0)
                rows[{a, b}] = covariant_row_derive(rows.at({a - 1, b}), c, true);
            else
                rows[{a, b}] = covariant_row_derive(rows.at({0, b - 1}), c, false);
        }

    int order = c.k.front().order();
    for (const auto& [ab, r] : rows)
        for (const Series& s : r) order = std::min(order, s.order());

    RankMatrix out{SeriesMatrix(pi, pi, order), {}, d};
    int idx = 0;
    for (int q = 0; q <= d - 3; ++q)
        for (int a = q; a >= 0; --a) {
            const std::vector<Series>& r = rows.at({a, q - a});
            for (int l = 0; l < pi; ++l) out.m.at(idx, l) = r[l];
            std::string label;
            for (int t = 0; t < a; ++t) label += "Dx ";
            for (int t = 0; t < q - a; ++t) label += "Dy ";
            out.row_labels.push_back(label + "k");
            ++idx;
        }
    return out;
}

RankCertificate rank_of_web(const RankMatrix& m) {
    const int pi = m.m.rows();
    RankCertificate cert{};
    cert.pi_d = pi;

    bool flat = true;
    for (int l = 0; l < pi; ++l)
        if (!m.m.at(0, l).is_zero()) flat = false;
    cert.flat = flat;

    if (flat) {
        // k = 0: the matrix is zero by construction, rank is maximal.
        cert.generic_rank = 0;
        cert.corank = pi;
        cert.rank_of_web = pi;
        cert.decision_precision = m.m.working_order();
        cert.determinant = Series(cert.decision_precision);
        return cert;
    }

    RankResult res = series_matrix_rank(m.m);
    cert.generic_rank = res.rank;
    cert.corank = pi - res.rank;
    cert.rank_of_web = cert.corank;
    cert.decision_precision = res.decision_precision;
    cert.pivots = res.pivots;
    cert.determinant = res.determinant;
    if (cert.decision_precision <= 2)
        cert.advisory = "rank decisions were made at order <= 2; rerun with a higher working order";
    return cert;
}

CorollaryReport d4_corollary_checks(const RankCertificate& cert, const CrossRatioReport& cr,
                                    const Series& trace) {
    CorollaryReport rep{};
    bool any_nonzero = false;
    for (const Series& k : cr.extracted_curvatures)
        if (!k.is_zero()) any_nonzero = true;
    rep.equal_nonzero_curvatures = cr.all_equal && any_nonzero;
    rep.rank_le_1_consistent = !rep.equal_nonzero_curvatures || cert.rank_of_web <= 1;

    rep.trace_zero = trace.is_zero();
    rep.rank_ne_2_consistent = !rep.trace_zero || cert.rank_of_web != 2;

    rep.det_zero = cert.determinant && cert.determinant->is_zero();
    rep.det_iff_rank_consistent = rep.det_zero == (cert.rank_of_web >= 1);

    rep.all_consistent =
        rep.rank_le_1_consistent && rep.rank_ne_2_consistent && rep.det_iff_rank_consistent;
    return rep;
}

}  // namespace weblab
