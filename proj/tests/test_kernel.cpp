#include <doctest.h>

#include "support.hpp"
#include "weblab/series.hpp"
#include "weblab/series_matrix.hpp"
#include "weblab/slope_poly.hpp"

using namespace weblab;
using testsupport::ExactPoly;
using testsupport::Rng;

namespace {

Series poly_1d(std::vector<Rational> xcoeffs, int order) {
    Series s(order);
    for (size_t i = 0; i < xcoeffs.size(); ++i) s.set_coeff(static_cast<int>(i), 0, xcoeffs[i]);
    return s;
}

SlopePoly monic_from_roots(const std::vector<Series>& roots, int order) {
    SlopePoly f = SlopePoly::constant(Series::constant(Rational(1), order));
    for (const Series& r : roots) {
        SlopePoly lin = SlopePoly::from_ascending({-r, Series::constant(Rational(1), order)});
        f = f * lin;
    }
    return f;
}

}  // namespace

TEST_CASE("rational basics") {
    Rational a(1, 2), b(1, 3);
    CHECK((a + b) == Rational(5, 6));
    CHECK((a * b) == Rational(1, 6));
    CHECK((a - a).is_zero());
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational("-6", "4").to_string() == "-3/2");
    CHECK(Rational::parse("7/3") == Rational(7, 3));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK(Rational(3, 4).inverse() == Rational(4, 3));
    CHECK_THROWS_AS(Rational("1", "0"), Error);
}

TEST_CASE("series add and mul match the spec examples") {
    int n = 5;
    Series one_plus_x = Series::constant(Rational(1), n) + Series::variable_x(n);
    Series y = Series::variable_y(n);
    Series sum = one_plus_x + y;
    CHECK(sum.order() == 5);
    CHECK(sum.coeff(0, 0) == Rational(1));
    CHECK(sum.coeff(1, 0) == Rational(1));
    CHECK(sum.coeff(0, 1) == Rational(1));
    CHECK(sum.coeff(1, 1).is_zero());

    Series xy = Series::variable_x(4) * Series::variable_y(4);
    CHECK(xy.order() == 4);
    CHECK(xy.coeff(1, 1) == Rational(1));

    // (1 + x + x^2 + x^3)(1 - x) truncates to 1 at order 4; oracle is the
    // exact polynomial product.
    Series a = poly_1d({Rational(1), Rational(1), Rational(1), Rational(1)}, 4);
    Series b = poly_1d({Rational(1), Rational(-1)}, 4);
    Series expected = ExactPoly::from_series(a).mul(ExactPoly::from_series(b)).truncate(4);
    CHECK(Series::equal_at_shared_precision(a * b, expected));
    CHECK((a * b - Series::constant(Rational(1), 4)).is_zero());
}

TEST_CASE("series inversion") {
    CHECK((Series::constant(Rational(1), 6).inverted() - Series::constant(Rational(1), 6)).is_zero());

    // Geometric series oracle: 1/(1-x) = 1 + x + x^2 + x^3 at order 4.
    Series s = poly_1d({Rational(1), Rational(-1)}, 4);
    Series inv = s.inverted();
    Series geo = poly_1d({Rational(1), Rational(1), Rational(1), Rational(1)}, 4);
    CHECK(Series::equal_at_shared_precision(inv, geo));

    // Coefficientwise-solve oracle pinned before the build:
    // u*(2 - 3x + x^2) = 1 gives u = 1/2 + (3/4)x + (7/8)x^2 at order 3.
    Series t = poly_1d({Rational(2), Rational(-3), Rational(1)}, 3);
    Series u = t.inverted();
    CHECK(u.coeff(0, 0) == Rational(1, 2));
    CHECK(u.coeff(1, 0) == Rational(3, 4));
    CHECK(u.coeff(2, 0) == Rational(7, 8));

    CHECK_THROWS_AS(Series::variable_x(4).inverted(), Error);
}

TEST_CASE("series derivatives") {
    Series s = Series::monomial(2, 1, Rational(1), 6);
    Series dx = s.derive_x();
    CHECK(dx.order() == 5);
    CHECK(dx.coeff(1, 1) == Rational(2));

    CHECK(Series::constant(Rational(7), 5).derive_y().is_zero());

    // d/dx of 1/(1-x): 1 + 2x + 3x^2 + 4x^3 at order 4.
    Series inv = poly_1d({Rational(1), Rational(-1)}, 5).inverted();
    Series d = inv.derive_x();
    CHECK(d.order() == 4);
    for (int k = 0; k < 4; ++k) CHECK(d.coeff(k, 0) == Rational(k + 1));

    CHECK_THROWS_AS(Series::constant(Rational(1), 1).derive_x(), Error);
}

TEST_CASE("series ring axioms on random inputs") {
    Rng rng(20240811);
    for (int iter = 0; iter < 200; ++iter) {
        Series a = testsupport::random_series(rng, 8);
        Series b = testsupport::random_series(rng, 8);
        Series c = testsupport::random_series(rng, 8);
        CHECK(Series::equal_at_shared_precision((a + b) + c, a + (b + c)));
        CHECK(Series::equal_at_shared_precision(a * (b + c), a * b + a * c));
        CHECK(Series::equal_at_shared_precision(a * b, b * a));
        CHECK(Series::equal_at_shared_precision((a * b) * c, a * (b * c)));
    }
}

TEST_CASE("inversion round-trip on random units") {
    Rng rng(77001);
    for (int iter = 0; iter < 200; ++iter) {
        Series s = testsupport::random_unit_series(rng, 7);
        Series r = s * s.inverted() - Series::constant(Rational(1), 7);
        CHECK(r.is_zero());
    }
}

TEST_CASE("mixed partials commute") {
    Rng rng(5150);
    for (int iter = 0; iter < 200; ++iter) {
        Series s = testsupport::random_series(rng, 7, 4, 8);
        CHECK(Series::equal_at_shared_precision(s.derive_x().derive_y(), s.derive_y().derive_x()));
    }
}

TEST_CASE("exact series division") {
    int n = 8;
    Series a = Series::variable_x(n) * Series::variable_y(n);
    Series q = divide_exact(a, Series::variable_x(n));
    CHECK(q.order() == n - 1);
    CHECK(q.coeff(0, 1) == Rational(1));

    // (x + y) * unit / (x + y) round-trips.
    Series u = poly_1d({Rational(2), Rational(1)}, n);
    Series xy = Series::variable_x(n) + Series::variable_y(n);
    Series back = divide_exact(xy * u, xy);
    CHECK(Series::equal_at_shared_precision(back, u));

    CHECK_THROWS_AS(divide_exact(a, Series(n)), Error);
}

TEST_CASE("poly divmod examples") {
    int n = 6;
    SlopePoly p2 = SlopePoly::from_ascending(
        {Series(n), Series(n), Series::constant(Rational(1), n)});
    SlopePoly p1 = SlopePoly::from_ascending({Series(n), Series::constant(Rational(1), n)});
    auto [q, r] = poly_divmod(p2, p1);
    CHECK(q.effective_degree() == 1);
    CHECK(q.coeff(1).coeff(0, 0) == Rational(1));
    CHECK(r.is_zero());

    // (p^2 - 3p + 2) / (p - 1) = p - 2 exactly.
    SlopePoly a = SlopePoly::from_ascending({Series::constant(Rational(2), n),
                                             Series::constant(Rational(-3), n),
                                             Series::constant(Rational(1), n)});
    SlopePoly b = SlopePoly::from_ascending({Series::constant(Rational(-1), n),
                                             Series::constant(Rational(1), n)});
    auto [q2, r2] = poly_divmod(a, b);
    CHECK(r2.is_zero());
    CHECK(q2.coeff(0).coeff(0, 0) == Rational(-2));
    CHECK(q2.coeff(1).coeff(0, 0) == Rational(1));

    // ((1+x)p^2 + y) / p^2: quotient 1 + x, remainder y; oracle re-expands.
    SlopePoly num = SlopePoly::from_ascending(
        {Series::variable_y(n), Series(n),
         Series::constant(Rational(1), n) + Series::variable_x(n)});
    auto [q3, r3] = poly_divmod(num, p2);
    CHECK(Series::equal_at_shared_precision(
        q3.coeff(0), Series::constant(Rational(1), n) + Series::variable_x(n)));
    CHECK(Series::equal_at_shared_precision(r3.coeff(0), Series::variable_y(n)));
    SlopePoly recompose = p2 * q3 + r3;
    for (int k = 0; k <= num.degree(); ++k)
        CHECK(Series::equal_at_shared_precision(recompose.coeff(k), num.coeff(k)));

    CHECK_THROWS_AS(poly_divmod(p2, SlopePoly::from_ascending(
                                        {Series::constant(Rational(1), n), Series::variable_x(n)})),
                    Error);
}

TEST_CASE("poly divmod round-trip on random inputs") {
    Rng rng(424242);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 6;
        std::uniform_int_distribution<int> degd(1, 3);
        int da = degd(rng) + 1, db = degd(rng);
        std::vector<Series> ac, bc;
        for (int k = 0; k <= da; ++k) ac.push_back(testsupport::random_series(rng, n, 2, 3));
        for (int k = 0; k < db; ++k) bc.push_back(testsupport::random_series(rng, n, 2, 3));
        bc.push_back(testsupport::random_unit_series(rng, n, 2));
        SlopePoly a = SlopePoly::from_ascending(ac);
        SlopePoly b = SlopePoly::from_ascending(bc);
        auto [q, r] = poly_divmod(a, b);
        CHECK(r.degree() < b.degree());
        SlopePoly back = b * q + r;
        for (int k = 0; k <= a.degree(); ++k)
            CHECK(Series::equal_at_shared_precision(back.coeff(k), a.coeff(k)));
    }
}

TEST_CASE("sylvester resultant pinned values") {
    int n = 6;
    auto lin = [n](Rational root) {
        return SlopePoly::from_ascending({Series::constant(-root, n),
                                          Series::constant(Rational(1), n)});
    };
    // Res_p(p-1, p-2) = 1 in the convention used throughout.
    Series r1 = sylvester_resultant(lin(Rational(1)), lin(Rational(2)));
    CHECK(Series::equal_at_shared_precision(r1, Series::constant(Rational(1), n)));

    // Res_p((p-1)(p-2), 2p-3): pinned to -1 by the root-product oracle
    // lc(A)^deg(B) * B(1) * B(2) = (2*1-3)(2*2-3) = -1 (block order does not
    // change the sign here since deg(A)*deg(B) is even).
    SlopePoly quad = lin(Rational(1)) * lin(Rational(2));
    SlopePoly blin = SlopePoly::from_ascending({Series::constant(Rational(-3), n),
                                                Series::constant(Rational(2), n)});
    Series r2 = sylvester_resultant(quad, blin);
    CHECK(Series::equal_at_shared_precision(r2, Series::constant(Rational(-1), n)));

    // Res_p(F, dF/dp) for F = (p-1)(p-2)(p-3): the discriminant oracle
    // prod_{i<j}(p_i - p_j)^2 = 4 and the sign (-1)^{d(d-1)/2} give -4.
    SlopePoly cubic = quad * lin(Rational(3));
    Series r3 = sylvester_resultant(cubic, cubic.derive_p());
    CHECK(Series::equal_at_shared_precision(r3, Series::constant(Rational(-4), n)));
    CHECK(r3.is_unit());
}

TEST_CASE("resultant vanishes iff common factor, on factored inputs") {
    Rng rng(998877);
    int n = 6;
    for (int iter = 0; iter < 200; ++iter) {
        // Build three distinct linear factors with random unit constant terms.
        std::vector<Series> roots;
        std::vector<Rational> consts;
        while (roots.size() < 3) {
            Series r = testsupport::random_series(rng, n, 1, 2);
            bool fresh = true;
            for (const Rational& c : consts)
                if (c == r.coeff(0, 0)) fresh = false;
            if (!fresh) continue;
            consts.push_back(r.coeff(0, 0));
            roots.push_back(r);
        }
        SlopePoly shared = monic_from_roots({roots[0], roots[1]}, n);
        SlopePoly with_common = monic_from_roots({roots[0], roots[2]}, n);
        SlopePoly coprime = monic_from_roots({roots[2]}, n);

        CHECK(sylvester_resultant(shared, with_common).is_zero());
        CHECK(!sylvester_resultant(shared, coprime).is_zero());
    }
}

TEST_CASE("bezout inverse mod") {
    int n = 6;
    // F = p^2 - 1, G = p: U = p since p*p = 1 mod F.
    SlopePoly f = SlopePoly::from_ascending({Series::constant(Rational(-1), n), Series(n),
                                             Series::constant(Rational(1), n)});
    SlopePoly g = SlopePoly::from_ascending({Series(n), Series::constant(Rational(1), n)});
    SlopePoly u = bezout_inverse_mod(f, g);
    CHECK(u.coeff(0).is_zero());
    CHECK(Series::equal_at_shared_precision(u.coeff(1), Series::constant(Rational(1), n)));

    // F = (p-1)(p-2), G = 2p-3: the 2x2 linear-solve oracle pins U = 2p-3
    // (G is its own inverse modulo F).
    SlopePoly f2 = SlopePoly::from_ascending({Series::constant(Rational(2), n),
                                              Series::constant(Rational(-3), n),
                                              Series::constant(Rational(1), n)});
    SlopePoly g2 = f2.derive_p();
    SlopePoly u2 = bezout_inverse_mod(f2, g2);
    CHECK(Series::equal_at_shared_precision(u2.coeff(0), Series::constant(Rational(-3), n)));
    CHECK(Series::equal_at_shared_precision(u2.coeff(1), Series::constant(Rational(2), n)));

    // F = (p-1)(p-2)(p-3), G = dF/dp: verify U*G = 1 mod F by reduction.
    auto lin = [n](Rational root) {
        return SlopePoly::from_ascending({Series::constant(-root, n),
                                          Series::constant(Rational(1), n)});
    };
    SlopePoly f3 = lin(Rational(1)) * lin(Rational(2)) * lin(Rational(3));
    SlopePoly u3 = bezout_inverse_mod(f3, f3.derive_p());
    SlopePoly prod = poly_mod(u3 * f3.derive_p(), f3);
    CHECK(Series::equal_at_shared_precision(prod.coeff(0), Series::constant(Rational(1), n)));
    CHECK(prod.coeff(1).is_zero());
    CHECK(prod.coeff(2).is_zero());

    // Common root at the origin: NotCoprime.
    SlopePoly f4 = lin(Rational(1)) * lin(Rational(1));
    CHECK_THROWS_AS(bezout_inverse_mod(f4, f4.derive_p()), Error);
}

TEST_CASE("series matrix rank") {
    int n = 6;
    SeriesMatrix zero(3, 3, n);
    CHECK(series_matrix_rank(zero).rank == 0);

    CHECK(series_matrix_rank(SeriesMatrix::identity(3, n)).rank == 3);
    CHECK(Series::equal_at_shared_precision(
        *series_matrix_rank(SeriesMatrix::identity(3, n)).determinant,
        Series::constant(Rational(1), n)));

    // rows (1, x), (y, xy): second row is y * first row.
    SeriesMatrix m(2, 2, n);
    m.at(0, 0) = Series::constant(Rational(1), n);
    m.at(0, 1) = Series::variable_x(n);
    m.at(1, 0) = Series::variable_y(n);
    m.at(1, 1) = Series::variable_x(n) * Series::variable_y(n);
    RankResult res = series_matrix_rank(m);
    CHECK(res.rank == 1);
    CHECK(res.determinant->is_zero());
    CHECK(res.pivots.size() == 2);
    CHECK(res.pivots[1].declared_zero);
}

TEST_CASE("rank is invariant under row swaps and unit scalings") {
    Rng rng(314159);
    int n = 6;
    for (int iter = 0; iter < 60; ++iter) {
        SeriesMatrix m(3, 3, n);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m.at(i, j) = testsupport::random_series(rng, n, 2, 2);
        // Occasionally force a dependent row.
        if (iter % 3 == 0) {
            Series f = testsupport::random_series(rng, n, 1, 2);
            for (int j = 0; j < 3; ++j) m.at(2, j) = m.at(0, j) * f;
        }
        int base = series_matrix_rank(m).rank;

        SeriesMatrix swapped = m;
        for (int j = 0; j < 3; ++j) std::swap(swapped.at(0, j), swapped.at(1, j));
        CHECK(series_matrix_rank(swapped).rank == base);

        SeriesMatrix scaled = m;
        Series unit = testsupport::random_unit_series(rng, n, 2);
        for (int j = 0; j < 3; ++j) scaled.at(1, j) = scaled.at(1, j) * unit;
        CHECK(series_matrix_rank(scaled).rank == base);
    }
}

TEST_CASE("solve_unit_system solves and detects singular origins") {
    int n = 6;
    SeriesMatrix m(2, 2, n);
    m.at(0, 0) = Series::constant(Rational(2), n);
    m.at(0, 1) = Series::variable_x(n);
    m.at(1, 0) = Series::variable_y(n);
    m.at(1, 1) = Series::constant(Rational(1), n) + Series::variable_x(n);
    SeriesMatrix b(2, 1, n);
    b.at(0, 0) = Series::constant(Rational(1), n);
    b.at(1, 0) = Series::variable_x(n);
    SeriesMatrix x = solve_unit_system(m, b);
    SeriesMatrix back = m * x;
    CHECK(Series::equal_at_shared_precision(back.at(0, 0), b.at(0, 0)));
    CHECK(Series::equal_at_shared_precision(back.at(1, 0), b.at(1, 0)));

    SeriesMatrix sing(2, 2, n);
    sing.at(0, 0) = Series::variable_x(n);
    sing.at(0, 1) = Series::variable_y(n);
    sing.at(1, 0) = Series::variable_y(n);
    sing.at(1, 1) = Series::variable_x(n);
    CHECK_THROWS_AS(solve_unit_system(sing, b), Error);
}
