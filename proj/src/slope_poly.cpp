#include "weblab/slope_poly.hpp"

#include <algorithm>
#include <sstream>

#include "weblab/series_matrix.hpp"

namespace weblab {

SlopePoly::SlopePoly(int degree, int order) {
    if (degree < 0) raise(ErrorCode::Internal, "negative polynomial degree");
    asc_.assign(degree + 1, Series(order));
}

SlopePoly SlopePoly::from_descending(std::vector<Series> coeffs) {
    std::reverse(coeffs.begin(), coeffs.end());
    return from_ascending(std::move(coeffs));
}

SlopePoly SlopePoly::from_ascending(std::vector<Series> coeffs) {
    if (coeffs.empty()) raise(ErrorCode::Internal, "empty coefficient list");
    SlopePoly p;
    p.asc_ = std::move(coeffs);
    return p;
}

SlopePoly SlopePoly::constant(Series s) { return from_ascending({std::move(s)}); }

const Series& SlopePoly::coeff(int k) const {
    static const Series zero(1);
    if (k < 0 || k > degree()) return zero;
    return asc_[k];
}

Series& SlopePoly::coeff_mut(int k) { return asc_.at(k); }

std::vector<Series> SlopePoly::descending() const {
    std::vector<Series> d(asc_.rbegin(), asc_.rend());
    return d;
}

int SlopePoly::order() const {
    int n = asc_.front().order();
    for (const Series& s : asc_) n = std::min(n, s.order());
    return n;
}

int SlopePoly::effective_degree() const {
    for (int k = degree(); k >= 0; --k)
        if (!asc_[k].is_zero()) return k;
    return -1;
}

SlopePoly SlopePoly::operator-() const {
    SlopePoly r = *this;
    for (Series& s : r.asc_) s = -s;
    return r;
}

SlopePoly operator+(const SlopePoly& a, const SlopePoly& b) {
    int n = std::min(a.order(), b.order());
    // Coefficients past a polynomial's degree are exactly zero, so they enter
    // at the shared working order rather than clamping precision.
    auto term = [n](const SlopePoly& p, int k) {
        return k <= p.degree() ? p.coeff(k).truncated(n) : Series(n);
    };
    SlopePoly r(std::max(a.degree(), b.degree()), n);
    for (int k = 0; k <= r.degree(); ++k) r.asc_[k] = term(a, k) + term(b, k);
    return r;
}

SlopePoly operator-(const SlopePoly& a, const SlopePoly& b) { return a + (-b); }

SlopePoly operator*(const SlopePoly& a, const SlopePoly& b) {
    int n = std::min(a.order(), b.order());
    SlopePoly r(a.degree() + b.degree(), n);
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; j <= b.degree(); ++j)
            r.asc_[i + j] += (a.coeff(i) * b.coeff(j)).truncated(n);
    }
    return r;
}

SlopePoly SlopePoly::scaled(const Series& s) const {
    SlopePoly r = *this;
    for (Series& c : r.asc_) c = c * s;
    return r;
}

SlopePoly SlopePoly::shifted(int k) const {
    SlopePoly r(degree() + k, order());
    for (int i = 0; i <= degree(); ++i) r.asc_[i + k] = asc_[i];
    return r;
}

SlopePoly SlopePoly::derive_x() const {
    SlopePoly r = *this;
    for (Series& s : r.asc_) s = s.derive_x();
    return r;
}

SlopePoly SlopePoly::derive_y() const {
    SlopePoly r = *this;
    for (Series& s : r.asc_) s = s.derive_y();
    return r;
}

SlopePoly SlopePoly::derive_p() const {
    if (degree() == 0) return SlopePoly(0, order());
    SlopePoly r(degree() - 1, order());
    for (int k = 1; k <= degree(); ++k) r.asc_[k - 1] = asc_[k].scaled(Rational(k));
    return r;
}

Series SlopePoly::eval(const Series& p) const {
    Series acc = asc_.back().truncated(std::min(order(), p.order()));
    for (int k = degree() - 1; k >= 0; --k) acc = acc * p + asc_[k];
    return acc;
}

std::string SlopePoly::to_string() const {
    std::ostringstream os;
    for (int k = degree(); k >= 0; --k) {
        os << "(" << asc_[k].to_string() << ")";
        if (k > 0) os << "*p^" << k << " + ";
    }
    return os.str();
}

std::pair<SlopePoly, SlopePoly> poly_divmod(const SlopePoly& A, const SlopePoly& B) {
    if (!B.leading().is_unit())
        raise(ErrorCode::NotAUnit, "division by a polynomial with non-unit leading coefficient");
    int n = std::min(A.order(), B.order());
    int db = B.degree();
    Series lead_inv = B.leading().inverted().truncated(n);

    std::vector<Series> rem;
    rem.reserve(A.degree() + 1);
    for (int k = 0; k <= A.degree(); ++k) rem.push_back(A.coeff(k).truncated(n));

    int dq = A.degree() - db;
    if (dq < 0) return {SlopePoly(0, n), SlopePoly::from_ascending(std::move(rem))};

    std::vector<Series> quot(dq + 1, Series(n));
    for (int k = A.degree(); k >= db; --k) {
        Series f = rem[k] * lead_inv;
        quot[k - db] = f;
        if (f.is_zero()) continue;
        for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * B.coeff(j);
    }
    rem.erase(rem.begin() + std::max(db, 1), rem.end());
    return {SlopePoly::from_ascending(std::move(quot)), SlopePoly::from_ascending(std::move(rem))};
}

SlopePoly poly_mod(const SlopePoly& A, const SlopePoly& B) { return poly_divmod(A, B).second; }

Series sylvester_resultant(const SlopePoly& A, const SlopePoly& B) {
    int da = A.degree(), db = B.degree();
    if (da < 1 || db < 1)
        raise(ErrorCode::Internal, "resultant requires degrees >= 1");
    int n = std::min(A.order(), B.order());
    int size = da + db;
    SeriesMatrix s(size, size, n);
    // deg(A) shifted rows of B's coefficients first, then deg(B) rows of
    // A's; with this block order Res_p(p - r, p - s) = s - r.
    for (int r = 0; r < da; ++r)
        for (int k = 0; k <= db; ++k) s.at(r, r + k) = B.coeff(db - k).truncated(n);
    for (int r = 0; r < db; ++r)
        for (int k = 0; k <= da; ++k) s.at(da + r, r + k) = A.coeff(da - k).truncated(n);
    RankResult res = series_matrix_rank(s);
    if (!res.determinant)
        raise(ErrorCode::Internal, "Sylvester matrix must be square");
    return *res.determinant;
}

SlopePoly bezout_inverse_mod(const SlopePoly& F, const SlopePoly& G) {
    int d = F.degree();
    int n = std::min(F.order(), G.order());
    if (d < 1) raise(ErrorCode::Internal, "modulus must have degree >= 1");
    if (!F.leading().is_unit())
        raise(ErrorCode::NotAUnit, "modulus has non-unit leading coefficient");

    // Columns of the multiplication-by-G map on the basis 1, p, ..., p^(d-1)
    // modulo F; its determinant is the p-resultant up to a unit, so the
    // system is a Cramer solve that stays in the series ring when R is a
    // unit.
    SeriesMatrix m(d, d, n);
    for (int c = 0; c < d; ++c) {
        SlopePoly col = poly_mod(G.shifted(c), F);
        for (int r = 0; r < d; ++r) m.at(r, c) = col.coeff(r).truncated(n);
    }
    SeriesMatrix rhs(d, 1, n);
    rhs.at(0, 0) = Series::constant(Rational(1), n);
    SeriesMatrix u;
    try {
        u = solve_unit_system(m, rhs);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NotAUnit)
            raise(ErrorCode::NotCoprime,
                  "resultant vanishes at the origin; no inverse modulo F");
        throw;
    }
    std::vector<Series> coeffs;
    coeffs.reserve(d);
    for (int r = 0; r < d; ++r) coeffs.push_back(u.at(r, 0));
    return SlopePoly::from_ascending(std::move(coeffs));
}

}  // namespace weblab
