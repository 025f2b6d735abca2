#include "weblab/pw.hpp"

namespace weblab {

Series PwPolynomial::v(int k) const {
    if (d_ != 4 || k < 1 || k > 4)
        raise(ErrorCode::Internal, "v-aliases are defined for d = 4 only");
    return -p_.coeff(4 - k);
}

PwPolynomial compute_pw(const WebPresentation& w) {
    require_valid(w);
    const SlopePoly& f = w.f();
    SlopePoly fp = f.derive_p();
    SlopePoly u = bezout_inverse_mod(f, fp);
    SlopePoly fx = f.derive_x();
    SlopePoly fy_p = f.derive_y().shifted(1);
    SlopePoly raw = -(fx + fy_p) * u;
    return PwPolynomial(poly_mod(raw, f), w.d());
}

bool is_linear(const PwPolynomial& p) {
    for (int k = 0; k <= p.poly().degree(); ++k)
        if (!p.poly().coeff(k).is_zero()) return false;
    return true;
}

bool linearizability_degree_gate(const PwPolynomial& p) {
    for (int k = 4; k <= p.poly().degree(); ++k)
        if (!p.poly().coeff(k).is_zero()) return false;
    return true;
}

}  // namespace weblab
