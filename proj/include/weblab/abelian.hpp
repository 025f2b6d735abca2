#pragma once

#include "weblab/web.hpp"

namespace weblab {

// Zeroth-order coefficients of the linear first-order system M(d) whose
// analytic solutions b_3 ... b_d are exactly the closed forms
// b(p) (dy - p dx) / (dF/dp) on the web surface:
//
//   row 1:            d_x(b_d)              + A_{1,1} b_3 + ... = 0
//   row r (middle):   d_x(b_{d-r+1}) + d_y(b_{d-r+2}) + ...     = 0
//   row d-1:          d_y(b_3)              + A_{d-1,1} b_3 ... = 0
class SlopeSystem {
public:
    SlopeSystem(int d, std::vector<std::vector<Series>> a) : d_(d), a_(std::move(a)) {}

    int d() const { return d_; }
    int rows() const { return d_ - 1; }
    int cols() const { return d_ - 2; }

    // A_{r,c} with 1-based indices; column c couples b_{c+2}.
    const Series& a(int r, int c) const { return a_.at(r - 1).at(c - 1); }

    int order() const;

private:
    int d_;
    std::vector<std::vector<Series>> a_;
};

// A candidate solution vector (b_3, ..., b_d).
struct AbelianCandidate {
    std::vector<Series> b;  // b[j] = b_{j+3}

    const Series& of(int j) const { return b.at(j - 3); }  // b_j
};

// Derive the A_{ij} from the closedness condition: the condition, cleared of
// denominators, is a polynomial identity H(b) = 0 mod F; multiplying by the
// square of the Bezout inverse of dF/dp turns its p-coefficients into the
// d-1 rows of M(d). The top coefficient must vanish identically, which is
// asserted at precision.
SlopeSystem derive_system(const WebPresentation& w);

// Left-hand sides of M(d) for a concrete candidate; all zero at precision
// iff the candidate encodes an abelian relation.
std::vector<Series> residual(const SlopeSystem& sys, const AbelianCandidate& c);

}  // namespace weblab
