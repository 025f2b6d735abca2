#pragma once

// Shared helpers for the test suites: deterministic random generators and a
// tiny exact bivariate-polynomial type used as an oracle independent of the
// Series arithmetic under test.

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "weblab/rational.hpp"
#include "weblab/series.hpp"

namespace testsupport {

using weblab::Rational;
using weblab::Series;

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, long lo = -4, long hi = 4, long max_den = 3) {
    std::uniform_int_distribution<long> num(lo, hi);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(Rng& rng, long lo = -4, long hi = 4) {
    for (;;) {
        Rational r = random_rational(rng, lo, hi);
        if (!r.is_zero()) return r;
    }
}

// Random polynomial-supported series: a handful of low-degree terms.
inline Series random_series(Rng& rng, int order, int max_deg = 3, int terms = 5) {
    Series s(order);
    std::uniform_int_distribution<int> deg(0, max_deg);
    for (int t = 0; t < terms; ++t) {
        int i = deg(rng), j = deg(rng);
        if (i + j >= order) continue;
        s.set_coeff(i, j, random_rational(rng));
    }
    return s;
}

inline Series random_unit_series(Rng& rng, int order, int max_deg = 3) {
    Series s = random_series(rng, order, max_deg);
    s.set_coeff(0, 0, random_nonzero_rational(rng));
    return s;
}

// Exact bivariate polynomial over the rationals; the truncation-free oracle.
struct ExactPoly {
    std::map<std::pair<int, int>, Rational> terms;

    static ExactPoly from_series(const Series& s) {
        ExactPoly p;
        for (int t = 0; t < s.order(); ++t)
            for (int i = 0; i <= t; ++i)
                if (!s.coeff(i, t - i).is_zero()) p.terms[{i, t - i}] = s.coeff(i, t - i);
        return p;
    }

    ExactPoly mul(const ExactPoly& o) const {
        ExactPoly r;
        for (const auto& [ea, ca] : terms)
            for (const auto& [eb, cb] : o.terms) {
                auto key = std::make_pair(ea.first + eb.first, ea.second + eb.second);
                auto it = r.terms.find(key);
                if (it == r.terms.end())
                    r.terms[key] = ca * cb;
                else
                    it->second += ca * cb;
            }
        return r;
    }

    ExactPoly add(const ExactPoly& o) const {
        ExactPoly r = *this;
        for (const auto& [e, c] : o.terms) {
            auto it = r.terms.find(e);
            if (it == r.terms.end())
                r.terms[e] = c;
            else
                it->second += c;
        }
        return r;
    }

    Series truncate(int order) const {
        Series s(order);
        for (const auto& [e, c] : terms)
            if (e.first + e.second < order && !c.is_zero()) s.set_coeff(e.first, e.second, c);
        return s;
    }
};

}  // namespace testsupport

// ---- web-level helpers -----------------------------------------------------

#include "weblab/abelian.hpp"
#include "weblab/web.hpp"

namespace testsupport {

// Slope germ of the pencil of lines through (a, b) != (0, 0).
inline Series pencil_slope(Rational a, Rational b, int order) {
    Series num = Series::variable_y(order) - Series::constant(b, order);
    Series den = Series::variable_x(order) - Series::constant(a, order);
    return num * den.inverted();
}

inline std::vector<Series> random_distinct_slopes(Rng& rng, int d, int order,
                                                  int max_deg = 2, int terms = 3) {
    std::vector<Series> slopes;
    std::vector<Rational> used;
    while (static_cast<int>(slopes.size()) < d) {
        Series s = random_series(rng, order, max_deg, terms);
        s.set_coeff(0, 0, random_rational(rng, -6, 6));
        bool fresh = true;
        for (const Rational& c : used)
            if (c == s.constant_term()) fresh = false;
        if (!fresh) continue;
        used.push_back(s.constant_term());
        slopes.push_back(s);
    }
    return slopes;
}

// Candidate b with b(p_i) = value_i, built by Lagrange interpolation through
// the cached slopes. The interpolant has degree <= d-1; when the values come
// from an abelian relation its two top coefficients vanish, which is
// asserted here, and the remaining coefficients are b_3 ... b_d.
inline weblab::AbelianCandidate candidate_from_values(const weblab::WebPresentation& w,
                                                      const std::vector<Series>& values) {
    const std::vector<Series>& p = w.slopes();
    const int d = w.d();
    int n = w.order();
    std::vector<Series> coeffs(d, Series(n));  // ascending powers, degree d-1
    for (int i = 0; i < d; ++i) {
        // values[i] * prod_{j != i} (p - p_j) / (p_i - p_j)
        Series denom = Series::constant(Rational(1), n);
        weblab::SlopePoly numer =
            weblab::SlopePoly::constant(Series::constant(Rational(1), n));
        for (int j = 0; j < d; ++j) {
            if (j == i) continue;
            denom = denom * (p[i] - p[j]);
            numer = numer * weblab::SlopePoly::from_ascending(
                                {-p[j], Series::constant(Rational(1), n)});
        }
        Series scale = values[i] * denom.inverted();
        for (int k = 0; k < d; ++k) coeffs[k] = coeffs[k] + numer.coeff(k) * scale;
    }
    // Abelian-relation values leave no p^(d-1) or p^(d-2) part.
    if (!coeffs[d - 1].is_zero() || !coeffs[d - 2].is_zero())
        throw weblab::Error(weblab::ErrorCode::Internal,
                            "values do not come from an abelian relation");
    weblab::AbelianCandidate c{{}};
    for (int j = 3; j <= d; ++j) c.b.push_back(coeffs[d - j]);
    return c;
}

}  // namespace testsupport
