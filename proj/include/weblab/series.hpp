#pragma once

#include <string>
#include <vector>

#include "weblab/rational.hpp"

namespace weblab {

// Truncated bivariate power series over the rationals. A series of order N
// stores every coefficient of x^i y^j with i + j < N; monomials of total
// degree >= N are unknown, not zero. Operations never report more precision
// than their inputs justify: sums and products take the minimum order and a
// derivative drops one level.
class Series {
public:
    // Zero series known to the given order.
    explicit Series(int order);

    static Series constant(Rational value, int order);
    static Series variable_x(int order);
    static Series variable_y(int order);
    static Series monomial(int i, int j, Rational value, int order);

    int order() const { return order_; }

    const Rational& coeff(int i, int j) const;
    void set_coeff(int i, int j, Rational value);

    // True when every stored coefficient vanishes, i.e. zero at this
    // series' precision.
    bool is_zero() const;
    bool is_unit() const { return !coeff(0, 0).is_zero(); }
    const Rational& constant_term() const { return coeff(0, 0); }

    // Lowest total degree with a nonzero coefficient, or order() when zero
    // at precision.
    int valuation() const;

    // Same coefficients, forgotten down to new_order (<= order).
    Series truncated(int new_order) const;

    Series operator-() const;
    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series& operator-=(const Series& o) { return *this = *this - o; }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    Series scaled(const Rational& c) const;

    // Multiplicative inverse at the same order; requires a unit constant
    // term (NotAUnit otherwise).
    Series inverted() const;

    // Formal partial derivatives; result order is one less
    // (PrecisionExhausted when no level would remain).
    Series derive_x() const;
    Series derive_y() const;

    // f(a*X + b*Y, c*X + d*Y): linear change of base coordinates.
    Series substitute_linear(const Rational& a, const Rational& b,
                             const Rational& c, const Rational& d) const;

    // Equality of all coefficients up to the shared precision.
    static bool equal_at_shared_precision(const Series& a, const Series& b);

    // Human-readable form, for diagnostics and tests.
    std::string to_string() const;

    // Coefficients with i + j == t, as a vector indexed by i (size t + 1).
    std::vector<Rational> homogeneous_part(int t) const;
    void set_homogeneous_part(int t, const std::vector<Rational>& part);

private:
    static int storage_size(int order) { return order * (order + 1) / 2; }
    static int index(int i, int j) {
        int t = i + j;
        return t * (t + 1) / 2 + i;
    }

    int order_;
    std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Series& s);

// Exact division a / b in the series ring. The quotient must exist (it does
// for the divisions performed by fraction-free elimination); the guaranteed
// order of the result is min(order) - valuation(b). Raises PrecisionExhausted
// when the divisor is zero at precision or no output level remains, and
// Internal when the division turns out not to be exact.
Series divide_exact(const Series& a, const Series& b);

}  // namespace weblab
