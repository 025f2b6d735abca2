#include "weblab/abelian.hpp"

#include <algorithm>

namespace weblab {

int SlopeSystem::order() const {
    int n = a_.front().front().order();
    for (const auto& row : a_)
        for (const Series& s : row) n = std::min(n, s.order());
    return n;
}

SlopeSystem derive_system(const WebPresentation& w) {
    require_valid(w);
    const int d = w.d();
    const SlopePoly& f = w.f();
    const int n = f.order();

    SlopePoly fp = f.derive_p();
    SlopePoly fpp = fp.derive_p();
    SlopePoly fx = f.derive_x();
    SlopePoly fy = f.derive_y();
    SlopePoly fp_x = fp.derive_x();
    SlopePoly fp_y = fp.derive_y();

    // F_x + p F_y and d_x(F_p) + p d_y(F_p), both polynomials in p.
    SlopePoly fx_p_fy = fx + fy.shifted(1);
    SlopePoly dfp = fp_x + fp_y.shifted(1);

    SlopePoly u = bezout_inverse_mod(f, fp);
    SlopePoly u2 = poly_mod(u * u, f);

    std::vector<std::vector<Series>> a(d - 1, std::vector<Series>(d - 2, Series(n - 1)));
    for (int j = 3; j <= d; ++j) {
        // Constant candidate b = p^(d-j): the derivative terms of the
        // closedness polynomial drop and what remains is the column of
        // zeroth-order coefficients attached to b_j.
        SlopePoly b(d - j, n);
        b.coeff_mut(d - j) = Series::constant(Rational(1), n);
        SlopePoly bp = b.derive_p();

        SlopePoly h = -(fp * b) * dfp - fx_p_fy * (fp * bp - b * fpp) - (fy * fp) * b;
        SlopePoly t = poly_mod(u2 * poly_mod(h, f), f);
        if (!t.coeff(d - 1).is_zero())
            raise(ErrorCode::Internal,
                  "closedness expansion has a top-degree residue; system is not M(d)-shaped");
        for (int r = 1; r <= d - 1; ++r) a[r - 1][j - 3] = t.coeff(r - 1);
    }
    return SlopeSystem(d, std::move(a));
}

std::vector<Series> residual(const SlopeSystem& sys, const AbelianCandidate& c) {
    const int d = sys.d();
    if (static_cast<int>(c.b.size()) != d - 2)
        raise(ErrorCode::Internal, "candidate has wrong length");
    std::vector<Series> rows;
    rows.reserve(d - 1);
    for (int r = 1; r <= d - 1; ++r) {
        // Stair part: coefficient of p^(r-1) in d_x(b) + p d_y(b).
        int jx = d - r + 1;  // d_x(b_jx)
        int jy = d - r + 2;  // d_y(b_jy)
        Series acc = (jx >= 3 && jx <= d) ? c.of(jx).derive_x()
                                          : c.of(jy).derive_y();
        if (jx >= 3 && jx <= d && jy >= 3 && jy <= d) acc += c.of(jy).derive_y();
        for (int j = 3; j <= d; ++j) acc += sys.a(r, j - 2) * c.of(j);
        rows.push_back(acc);
    }
    return rows;
}

}  // namespace weblab
