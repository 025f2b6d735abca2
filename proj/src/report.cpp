#include "weblab/report.hpp"

namespace weblab {

Json series_to_json(const Series& s) {
    Json terms = Json::array();
    for (int t = 0; t < s.order(); ++t)
        for (int i = 0; i <= t; ++i) {
            const Rational& c = s.coeff(i, t - i);
            if (c.is_zero()) continue;
            terms.push_back(Json::array(
                {i, t - i, c.numerator_string(), c.denominator_string()}));
        }
    return Json{{"order", s.order()}, {"terms", std::move(terms)}};
}

namespace {

Rational rational_from_term(const Json& num, const Json& den) {
    std::string ns = num.is_string() ? num.get<std::string>() : num.dump();
    std::string ds = den.is_string() ? den.get<std::string>() : den.dump();
    return Rational(ns, ds);
}

}  // namespace

Series poly_terms_from_json(const Json& j, int order) {
    if (!j.is_array())
        raise(ErrorCode::MalformedInput, "polynomial must be an array of [i, j, num, den] terms");
    Series s(order);
    for (const Json& term : j) {
        if (!term.is_array() || term.size() != 4)
            raise(ErrorCode::MalformedInput, "polynomial term must be [i, j, num, den]");
        int i = term[0].get<int>(), jj = term[1].get<int>();
        if (i < 0 || jj < 0)
            raise(ErrorCode::MalformedInput, "negative exponent in polynomial term");
        if (i + jj >= order) continue;  // beyond the working precision
        s.set_coeff(i, jj, s.coeff(i, jj) + rational_from_term(term[2], term[3]));
    }
    return s;
}

Series series_from_json(const Json& j, int default_order) {
    if (j.is_array()) return poly_terms_from_json(j, default_order);
    if (!j.is_object() || !j.contains("terms"))
        raise(ErrorCode::MalformedInput, "series must be {order, terms} or a term list");
    int order = j.value("order", default_order);
    return poly_terms_from_json(j.at("terms"), order);
}

Json matrix_to_json(const SeriesMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(series_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json rows_to_json(const std::vector<Series>& rows) {
    Json out = Json::array();
    for (const Series& s : rows) out.push_back(series_to_json(s));
    return out;
}

Json validation_to_json(const ValidationReport& rep) {
    return Json{
        {"valid", rep.valid},
        {"a0_unit", Json{{"passed", rep.a0_unit.passed}, {"precision", rep.a0_unit.precision}}},
        {"resultant_unit", Json{{"passed", rep.resultant_unit.passed},
                                {"precision", rep.resultant_unit.precision}}},
        {"resultant_constant_term", rep.resultant_constant_term.to_string()},
        {"failure", rep.failure},
    };
}

Json certificate_to_json(const RankCertificate& cert) {
    Json pivots = Json::array();
    for (const PivotRecord& p : cert.pivots)
        pivots.push_back(Json{{"step", p.step},
                              {"row", p.row},
                              {"col", p.col},
                              {"valuation", p.valuation},
                              {"declared_zero", p.declared_zero},
                              {"precision", p.precision}});
    Json j{{"rank_of_web", cert.rank_of_web},
           {"corank", cert.corank},
           {"pi_d", cert.pi_d},
           {"flat", cert.flat},
           {"generic_rank", cert.generic_rank},
           {"decision_precision", cert.decision_precision},
           {"pivots", std::move(pivots)},
           {"advisory", cert.advisory}};
    if (cert.determinant) j["determinant"] = series_to_json(*cert.determinant);
    return j;
}

}  // namespace weblab
