#pragma once

#include <utility>
#include <vector>

#include "weblab/series.hpp"

namespace weblab {

// Polynomial in the slope variable p with truncated-series coefficients.
// Stored by ascending power internally; constructors and accessors that
// speak "a_0 ... a_d" use the descending convention of the presentation
// F = a_0 p^d + a_1 p^(d-1) + ... + a_d.
class SlopePoly {
public:
    SlopePoly() = default;

    // Zero polynomial of the given degree (all coefficients zero at order).
    SlopePoly(int degree, int order);

    static SlopePoly from_descending(std::vector<Series> coeffs);
    static SlopePoly from_ascending(std::vector<Series> coeffs);
    static SlopePoly constant(Series s);

    int degree() const { return static_cast<int>(asc_.size()) - 1; }
    bool empty() const { return asc_.empty(); }

    // Coefficient of p^k (zero series past the degree).
    const Series& coeff(int k) const;
    Series& coeff_mut(int k);

    // a_i in the descending convention: coefficient of p^(degree - i).
    const Series& descending_coeff(int i) const { return coeff(degree() - i); }

    std::vector<Series> descending() const;
    const std::vector<Series>& ascending() const { return asc_; }

    int order() const;
    const Series& leading() const { return coeff(degree()); }

    // Degree after discarding leading coefficients that are zero at
    // precision; -1 for the (at-precision) zero polynomial.
    int effective_degree() const;
    bool is_zero() const { return effective_degree() < 0; }

    SlopePoly operator-() const;
    friend SlopePoly operator+(const SlopePoly& a, const SlopePoly& b);
    friend SlopePoly operator-(const SlopePoly& a, const SlopePoly& b);
    friend SlopePoly operator*(const SlopePoly& a, const SlopePoly& b);

    SlopePoly scaled(const Series& s) const;
    SlopePoly shifted(int k) const;  // * p^k

    // Coefficient-wise partial derivatives (series order drops by one).
    SlopePoly derive_x() const;
    SlopePoly derive_y() const;
    // Formal derivative in p.
    SlopePoly derive_p() const;

    // Horner evaluation at a series value of p.
    Series eval(const Series& p) const;

    std::string to_string() const;

private:
    std::vector<Series> asc_;  // asc_[k] = coefficient of p^k
};

// Euclidean division A = B*q + r with deg r < deg B. B's leading coefficient
// must be a unit series (NotAUnit otherwise). Quotient and remainder are
// exact at the shared precision.
std::pair<SlopePoly, SlopePoly> poly_divmod(const SlopePoly& A, const SlopePoly& B);

// Remainder of A mod B (unit leading coefficient required on B).
SlopePoly poly_mod(const SlopePoly& A, const SlopePoly& B);

// Determinant of the Sylvester matrix of A and B in p, by fraction-free
// (Bareiss) elimination over the series ring.
Series sylvester_resultant(const SlopePoly& A, const SlopePoly& B);

// U with U*G = 1 mod F and deg U < deg F. Requires Res_p(F, G) to be a unit
// series; raises NotCoprime when the modular-multiplication system is
// singular at the origin.
SlopePoly bezout_inverse_mod(const SlopePoly& F, const SlopePoly& G);

}  // namespace weblab
