#include "weblab/pipeline.hpp"

#include <chrono>
#include <set>

#include "weblab/blaschke.hpp"
#include "weblab/connection.hpp"
#include "weblab/pw.hpp"
#include "weblab/rank.hpp"

namespace weblab {

namespace {

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    raise(ErrorCode::MalformedInput, "rational values must be integers or \"n/d\" strings");
}

Json canonical_poly_echo(const Json& raw) {
    // Echo terms exactly but with rationals normalized to strings.
    Json out = Json::array();
    for (const Json& term : raw) {
        Rational c = Rational(term[2].is_string() ? term[2].get<std::string>() : term[2].dump(),
                              term[3].is_string() ? term[3].get<std::string>() : term[3].dump());
        out.push_back(Json::array({term[0].get<int>(), term[1].get<int>(),
                                   c.numerator_string(), c.denominator_string()}));
    }
    return out;
}

}  // namespace

WebDocument parse_document(const Json& j) {
    if (!j.is_object()) raise(ErrorCode::MalformedInput, "document must be a JSON object");
    WebDocument doc;
    doc.order = j.value("order", 12);
    if (doc.order < 4) raise(ErrorCode::MalformedInput, "order is too small");

    bool has_slopes = j.contains("slopes"), has_coeffs = j.contains("coefficients");
    if (has_slopes == has_coeffs)
        raise(ErrorCode::MalformedInput,
              "document needs exactly one of \"slopes\" or \"coefficients\"");

    Json echo{{"format_version", j.value("format_version", "1")}, {"order", doc.order}};
    if (has_slopes) {
        doc.by_slopes = true;
        doc.slopes_raw = j.at("slopes");
        if (!doc.slopes_raw.is_array() || doc.slopes_raw.size() < 3)
            raise(ErrorCode::MalformedInput, "\"slopes\" must list at least 3 entries");
        Json se = Json::array();
        for (const Json& s : doc.slopes_raw) {
            if (s.is_string()) {
                if (s.get<std::string>() != "vertical")
                    raise(ErrorCode::MalformedInput, "the only slope marker is \"vertical\"");
                se.push_back("vertical");
            } else if (s.is_array()) {
                se.push_back(canonical_poly_echo(s));
            } else {
                raise(ErrorCode::MalformedInput, "slope entries are term lists or \"vertical\"");
            }
        }
        echo["slopes"] = std::move(se);
    } else {
        doc.coeffs_raw = j.at("coefficients");
        if (!doc.coeffs_raw.is_array() || doc.coeffs_raw.size() < 4)
            raise(ErrorCode::MalformedInput, "\"coefficients\" must list a_0 ... a_d with d >= 3");
        Json ce = Json::array();
        for (const Json& c : doc.coeffs_raw) {
            if (!c.is_array())
                raise(ErrorCode::MalformedInput, "coefficient entries are term lists");
            ce.push_back(canonical_poly_echo(c));
        }
        echo["coefficients"] = std::move(ce);
    }
    if (j.contains("chart")) {
        doc.chart = rational_from_json(j.at("chart"));
        echo["chart"] = doc.chart->to_string();
    }
    if (doc.order < doc.d() + 4)
        raise(ErrorCode::MalformedInput, "order must be at least d + 4 = " +
                                             std::to_string(doc.d() + 4));
    doc.echo = std::move(echo);
    return doc;
}

WebPresentation presentation_from_document(const WebDocument& doc, int order) {
    if (!doc.by_slopes) {
        std::vector<Series> coeffs;
        for (const Json& c : doc.coeffs_raw) coeffs.push_back(poly_terms_from_json(c, order));
        return WebPresentation::from_coefficients(std::move(coeffs));
    }
    bool any_vertical = false;
    std::vector<SlopeInput> inputs;
    for (const Json& s : doc.slopes_raw) {
        if (s.is_string()) {
            inputs.emplace_back(VerticalSlope{});
            any_vertical = true;
        } else {
            inputs.emplace_back(poly_terms_from_json(s, order));
        }
    }
    if (any_vertical || doc.chart)
        return apply_affine_chart(inputs, doc.chart.value_or(Rational(0)), order);
    std::vector<Series> slopes;
    for (SlopeInput& in : inputs) slopes.push_back(std::move(std::get<Series>(in)));
    return WebPresentation::from_slopes(std::move(slopes));
}

namespace {

Json schema_to_json(const JetSchema& s) {
    Json out = Json::array();
    for (const JetLabel& lab : s.labels)
        out.push_back(Json{{"function", lab.j}, {"y_order", lab.m}});
    return out;
}

int rank_for_document(const WebDocument& doc, int order) {
    WebPresentation w = presentation_from_document(doc, order);
    ConnectionData c = build_connection(w);
    return rank_of_web(build_rank_matrix(c)).rank_of_web;
}

struct StageTimer {
    Json& timing;
    std::string name;
    std::chrono::steady_clock::time_point start;
    StageTimer(Json& t, std::string n) : timing(t), name(std::move(n)),
                                         start(std::chrono::steady_clock::now()) {}
    ~StageTimer() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start).count();
        timing[name] = static_cast<long>(ms);
    }
};

}  // namespace

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::SingularAtOrigin: return 2;
        case ErrorCode::PrecisionExhausted: return 3;
        default: return 1;
    }
}

Json run(const std::string& subcommand, const WebDocument& doc, const RunOptions& opts) {
    static const std::set<std::string> known = {"validate", "pw",        "system",
                                                "connection", "curvature", "trace-check",
                                                "rank",     "linearize", "full"};
    if (!known.count(subcommand))
        raise(ErrorCode::MalformedInput, "unknown subcommand " + subcommand);

    const bool full = subcommand == "full";
    auto wants = [&](std::initializer_list<const char*> stages) {
        if (full) return true;
        for (const char* s : stages)
            if (subcommand == s) return true;
        return false;
    };

    int order = opts.order_override.value_or(doc.order);
    if (order < doc.d() + 4)
        raise(ErrorCode::MalformedInput, "order must be at least d + 4");

    Json report;
    Json timing;
    Json ledger = Json::array();
    report["format_version"] = "1";
    report["subcommand"] = subcommand;
    report["order"] = order;
    report["echo"] = doc.echo;
    report["errors"] = Json::array();

    WebPresentation w = presentation_from_document(doc, order);
    report["d"] = w.d();

    {
        StageTimer t(timing, "validate");
        ValidationReport v = validate(w);
        report["validation"] = validation_to_json(v);
        ledger.push_back(Json{{"check", "a0_unit"},
                              {"precision", v.a0_unit.precision},
                              {"result", v.a0_unit.passed ? "nonzero" : "zero"}});
        ledger.push_back(Json{{"check", "resultant_unit"},
                              {"precision", v.resultant_unit.precision},
                              {"result", v.resultant_unit.passed ? "nonzero" : "zero"}});
        if (!v.valid) raise(ErrorCode::SingularAtOrigin, v.failure);
    }

    if (wants({"pw", "linearize"})) {
        StageTimer t(timing, "pw");
        PwPolynomial p = compute_pw(w);
        Json coeffs = Json::array();
        for (const Series& c : p.poly().descending()) coeffs.push_back(series_to_json(c));
        report["pw_coefficients"] = std::move(coeffs);
        report["is_linear"] = is_linear(p);
        report["degree_gate"] = linearizability_degree_gate(p);
    }

    std::optional<SlopeSystem> sys;
    if (wants({"system", "connection", "curvature", "rank", "linearize"})) {
        StageTimer t(timing, "system");
        sys.emplace(derive_system(w));
        if (wants({"system"})) {
            Json rows = Json::array();
            for (int r = 1; r <= sys->rows(); ++r) {
                Json row = Json::array();
                for (int c = 1; c <= sys->cols(); ++c)
                    row.push_back(series_to_json(sys->a(r, c)));
                rows.push_back(std::move(row));
            }
            report["A_table"] = std::move(rows);
        }
    }

    std::optional<ConnectionData> conn;
    if (wants({"connection", "curvature", "rank", "linearize"})) {
        StageTimer t(timing, "connection");
        conn.emplace(build_connection_from_system(*sys));
        if (wants({"connection"})) {
            report["schema"] = schema_to_json(conn->schema);
            report["gamma_x"] = matrix_to_json(conn->gamma_x);
            report["gamma_y"] = matrix_to_json(conn->gamma_y);
            report["adapted"] = conn->adapted;
            report["gauge_repaired"] = conn->gauge_repaired;
        }
    }

    if (wants({"curvature", "rank", "linearize"})) {
        StageTimer t(timing, "curvature");
        if (wants({"curvature"})) {
            report["curvature_row"] = rows_to_json(conn->k);
            report["trace"] = series_to_json(blaschke_chern_trace(*conn));
            ledger.push_back(Json{{"check", "curvature_row"},
                                  {"precision", conn->k.front().order()},
                                  {"result", conn->k.front().is_zero() ? "zero" : "nonzero"}});
        }
    }

    if (subcommand == "trace-check" || (full && w.has_slopes() && w.d() >= 4)) {
        StageTimer t(timing, "trace_check");
        TraceFormulaReport rep = trace_formula_check(w);
        report["trace_lhs"] = series_to_json(rep.lhs);
        report["trace_rhs"] = series_to_json(rep.rhs);
        report["trace_equal"] = rep.equal;
        report["trace_compared_precision"] = rep.compared_precision;
        report["subweb_curvatures"] = rows_to_json(rep.subweb_curvatures);
    }

    if ((subcommand == "linearize" || full) && w.d() == 4) {
        StageTimer t(timing, "linearize");
        PwPolynomial p = compute_pw(w);
        if (!conn) conn.emplace(build_connection_from_system(*sys));
        LinearizabilityReport rep = linearizability_d4(*conn, p);
        report["linearizability"] =
            Json{{"kappa", series_to_json(rep.kappa)},
                 {"L1_residual", series_to_json(rep.l1_residual)},
                 {"L2_residual", series_to_json(rep.l2_residual)},
                 {"degree_gate", rep.degree_gate},
                 {"linearizable", rep.linearizable}};
    } else if (subcommand == "linearize") {
        raise(ErrorCode::MalformedInput, "linearize needs a 4-web");
    }

    std::optional<CrossRatioReport> nakai;
    if (w.d() == 4 && w.has_slopes() && (full || subcommand == "rank")) {
        StageTimer t(timing, "nakai");
        nakai.emplace(nakai_checks_d4(w));
        if (full) {
            report["cross_ratio"] = series_to_json(nakai->cross_ratio);
            report["cross_ratio_constant"] = nakai->is_constant;
            report["extracted_curvatures"] = rows_to_json(nakai->extracted_curvatures);
            report["extracted_all_equal"] = nakai->all_equal;
            report["nakai_equivalence"] = nakai->equivalence_holds;
        }
    }

    if (wants({"rank"})) {
        StageTimer t(timing, "rank");
        if (!conn) conn.emplace(build_connection_from_system(*sys));
        RankMatrix m = build_rank_matrix(*conn);
        RankCertificate cert = rank_of_web(m);
        report["kml_matrix"] = matrix_to_json(m.m);
        report["kml_row_labels"] = m.row_labels;
        report["rank"] = certificate_to_json(cert);
        report["corank"] = cert.corank;
        report["pi_d"] = cert.pi_d;
        report["decision_precision"] = cert.decision_precision;
        for (const PivotRecord& p : cert.pivots)
            ledger.push_back(Json{{"check", "rank_pivot_col_" + std::to_string(p.col)},
                                  {"precision", p.precision},
                                  {"result", p.declared_zero ? "zero" : "nonzero"}});
        if (nakai) {
            CorollaryReport cor = d4_corollary_checks(cert, *nakai, conn->trace);
            report["corollaries"] = Json{
                {"equal_nonzero_curvatures", cor.equal_nonzero_curvatures},
                {"rank_le_1_consistent", cor.rank_le_1_consistent},
                {"trace_zero", cor.trace_zero},
                {"rank_ne_2_consistent", cor.rank_ne_2_consistent},
                {"det_zero", cor.det_zero},
                {"det_iff_rank_consistent", cor.det_iff_rank_consistent},
                {"all_consistent", cor.all_consistent}};
        }
        if (opts.recheck_order) {
            StageTimer t2(timing, "recheck");
            int m2 = *opts.recheck_order;
            if (m2 < doc.d() + 4)
                raise(ErrorCode::MalformedInput, "recheck order must be at least d + 4");
            int other = rank_for_document(doc, m2);
            report["recheck"] = Json{{"order", m2},
                                     {"rank_of_web", other},
                                     {"agrees", other == cert.rank_of_web}};
        }
    }

    report["precision_ledger"] = std::move(ledger);
    report["timing"] = std::move(timing);
    return report;
}

}  // namespace weblab
