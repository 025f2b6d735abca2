#include "weblab/web.hpp"

#include <algorithm>

namespace weblab {

namespace {

SlopePoly monic_from_roots(const std::vector<Series>& roots, int order) {
    SlopePoly f = SlopePoly::constant(Series::constant(Rational(1), order));
    for (const Series& r : roots) {
        SlopePoly lin = SlopePoly::from_ascending(
            {-r.truncated(order), Series::constant(Rational(1), order)});
        f = f * lin;
    }
    return f;
}

void check_distinct_constants(const std::vector<Series>& slopes) {
    for (size_t i = 0; i < slopes.size(); ++i)
        for (size_t j = i + 1; j < slopes.size(); ++j)
            if (slopes[i].constant_term() == slopes[j].constant_term())
                raise(ErrorCode::SlopeCollision,
                      "slopes " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                          " share the constant term " + slopes[i].constant_term().to_string());
}

}  // namespace

WebPresentation WebPresentation::from_slopes(std::vector<Series> slopes) {
    if (slopes.size() < 3)
        raise(ErrorCode::MalformedInput, "a web needs at least 3 slopes, got " +
                                             std::to_string(slopes.size()));
    check_distinct_constants(slopes);
    int order = slopes.front().order();
    for (const Series& s : slopes) order = std::min(order, s.order());
    SlopePoly f = monic_from_roots(slopes, order);
    Series resultant = sylvester_resultant(f, f.derive_p());
    int d = f.degree();
    return WebPresentation(std::move(f), std::move(resultant), std::move(slopes), d);
}

WebPresentation WebPresentation::from_coefficients(std::vector<Series> descending_coeffs) {
    if (descending_coeffs.size() < 4)
        raise(ErrorCode::MalformedInput, "implicit presentation needs degree >= 3");
    SlopePoly f = SlopePoly::from_descending(std::move(descending_coeffs));
    Series resultant = sylvester_resultant(f, f.derive_p());
    int d = f.degree();
    return WebPresentation(std::move(f), std::move(resultant), std::nullopt, d);
}

const std::vector<Series>& WebPresentation::slopes() const {
    if (!slopes_)
        raise(ErrorCode::NoExplicitSlopes, "presentation was given implicitly");
    return *slopes_;
}

WebPresentation WebPresentation::rescaled(const Series& unit) const {
    if (!unit.is_unit()) raise(ErrorCode::NotAUnit, "rescaling requires a unit series");
    SlopePoly f = f_.scaled(unit);
    Series resultant = sylvester_resultant(f, f.derive_p());
    return WebPresentation(std::move(f), std::move(resultant), slopes_, d_);
}

ValidationReport validate(const WebPresentation& w) {
    ValidationReport rep;
    rep.a0_unit = {w.a(0).is_unit(), w.a(0).order()};
    rep.resultant_unit = {w.resultant().is_unit(), w.resultant().order()};
    rep.resultant_constant_term = w.resultant().constant_term();
    rep.valid = rep.a0_unit.passed && rep.resultant_unit.passed;
    if (!rep.a0_unit.passed)
        rep.failure = "leading coefficient a_0 vanishes at the origin";
    else if (!rep.resultant_unit.passed)
        rep.failure = "p-resultant vanishes at the origin (repeated slope branch)";
    return rep;
}

void require_valid(const WebPresentation& w) {
    ValidationReport rep = validate(w);
    if (!rep.valid) raise(ErrorCode::SingularAtOrigin, rep.failure);
}

SubwebSelector::SubwebSelector(std::vector<int> indices, int d) : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    if (indices_.size() < 3)
        raise(ErrorCode::MalformedInput, "subweb selector needs at least 3 indices");
    for (size_t k = 0; k < indices_.size(); ++k) {
        if (indices_[k] < 1 || indices_[k] > d)
            raise(ErrorCode::MalformedInput, "selector index out of range");
        if (k > 0 && indices_[k] == indices_[k - 1])
            raise(ErrorCode::MalformedInput, "selector indices must be distinct");
    }
}

WebPresentation extract_subweb(const WebPresentation& w, const SubwebSelector& sel) {
    const std::vector<Series>& all = w.slopes();
    std::vector<Series> chosen;
    chosen.reserve(sel.indices().size());
    for (int i : sel.indices()) chosen.push_back(all[i - 1]);
    return WebPresentation::from_slopes(std::move(chosen));
}

Series chart_image_of_slope(const Series& slope, const Rational& t) {
    int n = slope.order();
    Rational denom = Rational(1) + t * t;
    Rational c = (Rational(1) - t * t) / denom;
    Rational s = (t + t) / denom;
    // p in the rotated base coordinates, then the Mobius action on p.
    Series p = slope.substitute_linear(c, s, -s, c);
    Series num = Series::constant(s, n) + p.scaled(c);
    Series den = Series::constant(c, n) - p.scaled(s);
    if (!den.is_unit())
        raise(ErrorCode::BadChart,
              "slope hits infinity under the chart t = " + t.to_string());
    return num * den.inverted();
}

WebPresentation apply_affine_chart(const std::vector<SlopeInput>& slopes, const Rational& t,
                                   int order) {
    Rational denom = Rational(1) + t * t;
    Rational c = (Rational(1) - t * t) / denom;
    Rational s = (t + t) / denom;
    std::vector<Series> transformed;
    transformed.reserve(slopes.size());
    for (const SlopeInput& in : slopes) {
        if (std::holds_alternative<VerticalSlope>(in)) {
            if (s.is_zero())
                raise(ErrorCode::BadChart, "identity chart cannot remove a vertical foliation");
            transformed.push_back(Series::constant(-(c / s), order));
        } else {
            transformed.push_back(chart_image_of_slope(std::get<Series>(in).truncated(order), t));
        }
    }
    for (size_t i = 0; i < transformed.size(); ++i)
        for (size_t j = i + 1; j < transformed.size(); ++j)
            if (transformed[i].constant_term() == transformed[j].constant_term())
                raise(ErrorCode::BadChart, "chart t = " + t.to_string() +
                                               " leaves slopes " + std::to_string(i + 1) +
                                               " and " + std::to_string(j + 1) + " in collision");
    return WebPresentation::from_slopes(std::move(transformed));
}

WebPresentation apply_affine_chart(const WebPresentation& w, const Rational& t) {
    std::vector<SlopeInput> in;
    for (const Series& s : w.slopes()) in.emplace_back(s);
    return apply_affine_chart(in, t, w.order());
}

}  // namespace weblab
