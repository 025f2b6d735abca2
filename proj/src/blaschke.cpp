#include "weblab/blaschke.hpp"

#include <algorithm>

namespace weblab {

BlaschkeData blaschke_curvature_3web(const Series& p1, const Series& p2, const Series& p3) {
    const Series* ps[3] = {&p1, &p2, &p3};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (ps[i]->constant_term() == ps[j]->constant_term())
                raise(ErrorCode::SlopeCollision, "3-web slopes collide at the origin");

    int n = std::min({p1.order(), p2.order(), p3.order()});

    // rho_1 = 1; the other two solve omega_1 + omega_2 + omega_3 = 0.
    Series inv23 = (p3 - p2).inverted();
    Series rho1 = Series::constant(Rational(1), n);
    Series rho2 = -(p3 - p1) * inv23;
    Series rho3 = (p2 - p1) * inv23;

    // Structure equations: d(omega_i) = gamma ^ omega_i reads
    //   d_x(rho_i) + d_y(rho_i p_i) = rho_i (gamma_x + p_i gamma_y).
    const Series* rhos[3] = {&rho1, &rho2, &rho3};
    std::vector<Series> w;
    for (int i = 0; i < 3; ++i) {
        Series lhs = rhos[i]->derive_x() + (*rhos[i] * *ps[i]).derive_y();
        w.push_back(lhs * rhos[i]->inverted());
    }

    // Solve from sheets 1 and 2; the third equation is the self-check of
    // the overdetermined system.
    Series det_inv = (p2 - p1).inverted();
    Series gamma_y = (w[1] - w[0]) * det_inv;
    Series gamma_x = w[0] - p1 * gamma_y;
    Series third = gamma_x + p3 * gamma_y - w[2];
    if (!third.is_zero())
        raise(ErrorCode::Internal, "overdetermined Blaschke system is inconsistent");

    return BlaschkeData{gamma_x, gamma_y,
                        gamma_y.derive_x() - gamma_x.derive_y()};
}

TraceFormulaReport trace_formula_check(const WebPresentation& w) {
    const std::vector<Series>& slopes = w.slopes();
    const int d = w.d();
    if (d < 4)
        raise(ErrorCode::MalformedInput, "trace formula check needs d >= 4");

    ConnectionData conn = build_connection(w);
    Series lhs = blaschke_chern_trace(conn);

    TraceFormulaReport rep{lhs, Series(lhs.order()), false, 0, {}};
    bool first = true;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = j + 1; k < d; ++k) {
                Series c = blaschke_curvature_3web(slopes[i], slopes[j], slopes[k]).curvature;
                rep.subweb_curvatures.push_back(c);
                rep.rhs = first ? c : rep.rhs + c;
                first = false;
            }
    Series diff = rep.lhs - rep.rhs;
    rep.equal = diff.is_zero();
    rep.compared_precision = diff.order();
    return rep;
}

CrossRatioReport nakai_checks_d4(const WebPresentation& w) {
    if (w.d() != 4) raise(ErrorCode::MalformedInput, "Nakai checks are for d = 4");
    const std::vector<Series>& p = w.slopes();

    Series num = (p[0] - p[2]) * (p[1] - p[3]);
    Series den = (p[0] - p[3]) * (p[1] - p[2]);
    Series cr = num * den.inverted();

    CrossRatioReport rep{cr, false, {}, false, false};
    rep.is_constant = (cr - Series::constant(cr.constant_term(), cr.order())).is_zero();
    for (int omitted = 0; omitted < 4; ++omitted) {
        std::vector<const Series*> rest;
        for (int i = 0; i < 4; ++i)
            if (i != omitted) rest.push_back(&p[i]);
        rep.extracted_curvatures.push_back(
            blaschke_curvature_3web(*rest[0], *rest[1], *rest[2]).curvature);
    }
    rep.all_equal = true;
    for (int i = 1; i < 4; ++i)
        if (!(rep.extracted_curvatures[i] - rep.extracted_curvatures[0]).is_zero())
            rep.all_equal = false;
    rep.equivalence_holds = (rep.is_constant == rep.all_equal);
    return rep;
}

RectifiedTraceReport rectified_trace_oracle(const WebPresentation& w, const PwPolynomial& p,
                                            const ConnectionData& c) {
    if (w.d() != 4) raise(ErrorCode::MalformedInput, "rectified trace oracle is for d = 4");
    const std::vector<Series>& s = w.slopes();

    // Curvature of the subweb omitting leaf i; leaves 1 and 2 are the
    // images of the x = const and y = const foliations.
    auto omit = [&](int omitted) {
        std::vector<const Series*> rest;
        for (int i = 0; i < 4; ++i)
            if (i != omitted) rest.push_back(&s[i]);
        return blaschke_curvature_3web(*rest[0], *rest[1], *rest[2]).curvature;
    };
    Series kx = omit(0), ky = omit(1), k3 = omit(2), k4 = omit(3);

    RectifiedTraceReport rep{kx + ky + k3 + k4, c.k.front(), false,
                             ky.derive_x() + p.v(3) * ky,
                             kx.derive_y() - p.v(2) * kx,
                             false, false};
    rep.equal = (rep.oracle_trace - rep.pipeline_trace).is_zero();
    rep.k2_matches = (rep.k2_candidate - c.k[1]).is_zero();
    rep.k3_matches = (rep.k3_candidate - c.k[2]).is_zero();
    return rep;
}

}  // namespace weblab
