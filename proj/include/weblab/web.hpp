#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "weblab/rational.hpp"
#include "weblab/slope_poly.hpp"

namespace weblab {

// A d-web in the plane presented implicitly by
//   F(x, y, p) = a_0 p^d + a_1 p^(d-1) + ... + a_d,   p = y'.
// a_0 must be a unit series so that all d slope branches are finite germs at
// the origin; webs with vertical leaves go through apply_affine_chart first.
class WebPresentation {
public:
    // Monic presentation from explicit slope germs (>= 3, pairwise distinct
    // constant terms). Slopes are cached on the presentation.
    static WebPresentation from_slopes(std::vector<Series> slopes);

    // User-supplied implicit coefficients a_0 ... a_d, kept exactly as given
    // (never normalized by a_0; reduction mod F uses the Bezout machinery).
    static WebPresentation from_coefficients(std::vector<Series> descending_coeffs);

    int d() const { return d_; }
    int order() const { return f_.order(); }

    const SlopePoly& f() const { return f_; }
    // a_i of the descending convention.
    const Series& a(int i) const { return f_.descending_coeff(i); }

    const Series& resultant() const { return resultant_; }

    bool has_slopes() const { return slopes_.has_value(); }
    const std::vector<Series>& slopes() const;

    // Same presentation with every coefficient (and cached slope/resultant)
    // rescaled by a unit series; the web is unchanged.
    WebPresentation rescaled(const Series& unit) const;

private:
    WebPresentation(SlopePoly f, Series resultant, std::optional<std::vector<Series>> slopes,
                    int d)
        : f_(std::move(f)), resultant_(std::move(resultant)), slopes_(std::move(slopes)), d_(d) {}

    SlopePoly f_;
    Series resultant_;
    std::optional<std::vector<Series>> slopes_;
    int d_;
};

struct ValidationCheck {
    bool passed;
    int precision;  // order at which the check was decided
};

struct ValidationReport {
    bool valid;
    ValidationCheck a0_unit;
    ValidationCheck resultant_unit;  // squarefreeness proxy Res_p(F, dF/dp)
    Rational resultant_constant_term;
    std::string failure;  // empty when valid
};

// Non-singularity gate: a_0 and Res_p(F, dF/dp) must be unit series.
ValidationReport validate(const WebPresentation& w);

// Throws SingularAtOrigin when validate() fails.
void require_valid(const WebPresentation& w);

// Sorted 1-based subset of {1..d}, size >= 3.
class SubwebSelector {
public:
    SubwebSelector(std::vector<int> indices, int d);
    const std::vector<int>& indices() const { return indices_; }

private:
    std::vector<int> indices_;
};

// Presentation of the subweb spanned by the selected slopes. Requires the
// web to carry explicit slopes (root isolation is out of scope).
WebPresentation extract_subweb(const WebPresentation& w, const SubwebSelector& sel);

// A slope entry for chart changes: either a finite slope germ or the
// identically vertical foliation x = const.
struct VerticalSlope {};
using SlopeInput = std::variant<Series, VerticalSlope>;

// Rational rotation of the base plane parametrized by t:
//   cos = (1-t^2)/(1+t^2), sin = 2t/(1+t^2).
// Moves vertical or colliding-at-infinity slopes to finite pairwise distinct
// germs; raises BadChart when the chosen t still collides slopes. The base
// coordinates are rotated consistently.
WebPresentation apply_affine_chart(const std::vector<SlopeInput>& slopes, const Rational& t,
                                   int order);

// Chart applied to a presentation that already carries finite slopes.
WebPresentation apply_affine_chart(const WebPresentation& w, const Rational& t);

// The rotated image of one finite slope germ under the chart above;
// exposed for the chart's oracle tests.
Series chart_image_of_slope(const Series& slope, const Rational& t);

}  // namespace weblab
