#pragma once

#include "weblab/web.hpp"

namespace weblab {

// The unique polynomial of degree <= d-1 in p with P(x, y, p_i) equal to
// p_i' along every slope branch; the web's leaves solve y'' = P(x, y, y').
class PwPolynomial {
public:
    PwPolynomial(SlopePoly coeffs, int d) : p_(std::move(coeffs)), d_(d) {}

    const SlopePoly& poly() const { return p_; }
    int d() const { return d_; }

    // For d = 4 the named aliases of P = -v_1 p^3 - v_2 p^2 - v_3 p - v_4.
    Series v(int k) const;

private:
    SlopePoly p_;
    int d_;
};

// P = -(F_x + p F_y) * U mod F with U the Bezout inverse of dF/dp; works for
// implicit presentations, no root-finding involved.
PwPolynomial compute_pw(const WebPresentation& w);

// The web is linear iff P vanishes at precision.
bool is_linear(const PwPolynomial& p);

// Necessary half of the linearizability criterion: deg P <= 3.
bool linearizability_degree_gate(const PwPolynomial& p);

}  // namespace weblab
