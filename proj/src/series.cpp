#include "weblab/series.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace weblab {

Series::Series(int order) : order_(order) {
    if (order < 1) raise(ErrorCode::PrecisionExhausted, "series order must be >= 1");
    c_.resize(storage_size(order));
}

Series Series::constant(Rational value, int order) {
    Series s(order);
    s.c_[0] = std::move(value);
    return s;
}

Series Series::variable_x(int order) { return monomial(1, 0, Rational(1), order); }

Series Series::variable_y(int order) { return monomial(0, 1, Rational(1), order); }

Series Series::monomial(int i, int j, Rational value, int order) {
    Series s(order);
    if (i + j < order) s.c_[index(i, j)] = std::move(value);
    return s;
}

const Rational& Series::coeff(int i, int j) const {
    static const Rational zero;
    if (i < 0 || j < 0 || i + j >= order_) return zero;
    return c_[index(i, j)];
}

void Series::set_coeff(int i, int j, Rational value) {
    if (i < 0 || j < 0 || i + j >= order_)
        raise(ErrorCode::Internal, "coefficient outside stored precision");
    c_[index(i, j)] = std::move(value);
}

bool Series::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

int Series::valuation() const {
    for (int t = 0; t < order_; ++t)
        for (int i = 0; i <= t; ++i)
            if (!c_[index(i, t - i)].is_zero()) return t;
    return order_;
}

Series Series::truncated(int new_order) const {
    if (new_order > order_) raise(ErrorCode::Internal, "cannot raise series precision");
    Series r(new_order);
    std::copy(c_.begin(), c_.begin() + storage_size(new_order), r.c_.begin());
    return r;
}

Series Series::operator-() const {
    Series r(order_);
    for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = -c_[k];
    return r;
}

Series operator+(const Series& a, const Series& b) {
    int n = std::min(a.order_, b.order_);
    Series r(n);
    for (size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
}

Series operator-(const Series& a, const Series& b) {
    int n = std::min(a.order_, b.order_);
    Series r(n);
    for (size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
}

Series operator*(const Series& a, const Series& b) {
    int n = std::min(a.order_, b.order_);
    Series r(n);
    for (int ta = 0; ta < n; ++ta) {
        for (int ia = 0; ia <= ta; ++ia) {
            const Rational& ca = a.c_[Series::index(ia, ta - ia)];
            if (ca.is_zero()) continue;
            for (int tb = 0; tb + ta < n; ++tb) {
                for (int ib = 0; ib <= tb; ++ib) {
                    const Rational& cb = b.c_[Series::index(ib, tb - ib)];
                    if (cb.is_zero()) continue;
                    int i = ia + ib, j = (ta - ia) + (tb - ib);
                    r.c_[Series::index(i, j)] += ca * cb;
                }
            }
        }
    }
    return r;
}

Series Series::scaled(const Rational& c) const {
    Series r(order_);
    for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k] * c;
    return r;
}

Series Series::inverted() const {
    if (!is_unit())
        raise(ErrorCode::NotAUnit, "series constant term is zero, inverse lies outside the ring");
    Series u(order_);
    Rational inv0 = c_[0].inverse();
    u.c_[0] = inv0;
    // Graded recursion: u_t = -u_0 * sum_{s=1..t} (self_s * u_{t-s}).
    for (int t = 1; t < order_; ++t) {
        for (int i = 0; i <= t; ++i) {
            Rational acc;
            for (int s = 1; s <= t; ++s) {
                for (int ia = std::max(0, i - (t - s)); ia <= std::min(i, s); ++ia) {
                    const Rational& a = c_[index(ia, s - ia)];
                    if (a.is_zero()) continue;
                    acc += a * u.c_[index(i - ia, (t - s) - (i - ia))];
                }
            }
            u.c_[index(i, t - i)] = -inv0 * acc;
        }
    }
    return u;
}

Series Series::derive_x() const {
    if (order_ <= 1)
        raise(ErrorCode::PrecisionExhausted, "derivative would drop series order to zero");
    Series r(order_ - 1);
    for (int t = 0; t < order_ - 1; ++t)
        for (int i = 0; i <= t; ++i)
            r.c_[index(i, t - i)] = coeff(i + 1, t - i) * Rational(i + 1);
    return r;
}

Series Series::derive_y() const {
    if (order_ <= 1)
        raise(ErrorCode::PrecisionExhausted, "derivative would drop series order to zero");
    Series r(order_ - 1);
    for (int t = 0; t < order_ - 1; ++t)
        for (int i = 0; i <= t; ++i)
            r.c_[index(i, t - i)] = coeff(i, t - i + 1) * Rational(t - i + 1);
    return r;
}

Series Series::substitute_linear(const Rational& a, const Rational& b,
                                 const Rational& c, const Rational& d) const {
    // Powers of (aX + bY) and (cX + dY), then monomial-by-monomial expansion.
    std::vector<Series> xpow, ypow;
    xpow.reserve(order_);
    ypow.reserve(order_);
    xpow.push_back(constant(Rational(1), order_));
    ypow.push_back(constant(Rational(1), order_));
    Series lx = variable_x(order_).scaled(a) + variable_y(order_).scaled(b);
    Series ly = variable_x(order_).scaled(c) + variable_y(order_).scaled(d);
    for (int k = 1; k < order_; ++k) {
        xpow.push_back(xpow.back() * lx);
        ypow.push_back(ypow.back() * ly);
    }
    Series r(order_);
    for (int t = 0; t < order_; ++t) {
        for (int i = 0; i <= t; ++i) {
            const Rational& cf = c_[index(i, t - i)];
            if (cf.is_zero()) continue;
            r += (xpow[i] * ypow[t - i]).scaled(cf);
        }
    }
    return r;
}

bool Series::equal_at_shared_precision(const Series& a, const Series& b) {
    return (a - b).is_zero();
}

std::vector<Rational> Series::homogeneous_part(int t) const {
    std::vector<Rational> part(t + 1);
    if (t < order_)
        for (int i = 0; i <= t; ++i) part[i] = c_[index(i, t - i)];
    return part;
}

void Series::set_homogeneous_part(int t, const std::vector<Rational>& part) {
    if (t >= order_) raise(ErrorCode::Internal, "homogeneous part outside precision");
    for (int i = 0; i <= t; ++i) c_[index(i, t - i)] = part[i];
}

std::string Series::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int t = 0; t < order_; ++t) {
        for (int i = 0; i <= t; ++i) {
            const Rational& cf = c_[index(i, t - i)];
            if (cf.is_zero()) continue;
            if (!first) os << " + ";
            os << cf.to_string();
            if (i > 0) os << "*x^" << i;
            if (t - i > 0) os << "*y^" << (t - i);
            first = false;
        }
    }
    if (first) os << "0";
    os << " + O(" << order_ << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Series& s) { return os << s.to_string(); }

namespace {

// Exact division of homogeneous forms: deg-n form / deg-v form with quotient
// of degree n - v, via the univariate dehomogenization in x.
std::vector<Rational> divide_homogeneous(const std::vector<Rational>& num, int n,
                                         const std::vector<Rational>& den, int v) {
    int qdeg = n - v;
    std::vector<Rational> q(qdeg + 1);
    bool num_zero = std::all_of(num.begin(), num.end(), [](const Rational& r) { return r.is_zero(); });
    if (num_zero) return q;
    int db = -1;
    for (int i = v; i >= 0; --i)
        if (!den[i].is_zero()) { db = i; break; }
    if (db < 0) raise(ErrorCode::Internal, "homogeneous division by zero form");
    std::vector<Rational> rem = num;
    for (int k = n; k >= db; --k) {
        if (rem[k].is_zero()) continue;
        int e = k - db;
        if (e > qdeg) raise(ErrorCode::Internal, "inexact series division (degree overflow)");
        Rational f = rem[k] / den[db];
        q[e] = f;
        for (int i = 0; i <= db; ++i) rem[i + e] -= f * den[i];
    }
    for (const Rational& r : rem)
        if (!r.is_zero()) raise(ErrorCode::Internal, "inexact series division");
    return q;
}

}  // namespace

Series divide_exact(const Series& a, const Series& b) {
    int n = std::min(a.order(), b.order());
    int v = b.valuation();
    if (v >= n)
        raise(ErrorCode::PrecisionExhausted, "division by a series that is zero at precision");
    if (v == 0) return (a.truncated(n)) * b.inverted().truncated(n);
    int qorder = n - v;
    if (qorder < 1)
        raise(ErrorCode::PrecisionExhausted, "series division leaves no known coefficients");
    if (a.valuation() < v)
        raise(ErrorCode::Internal, "inexact series division (valuation mismatch)");
    Series q(qorder);
    std::vector<Rational> bv = b.homogeneous_part(v);
    for (int s = 0; s < qorder; ++s) {
        // q_s * b_v = a_{s+v} - sum_{t<s} q_t * b_{s+v-t}
        std::vector<Rational> rhs = a.homogeneous_part(s + v);
        for (int t = 0; t < s; ++t) {
            std::vector<Rational> qt = q.homogeneous_part(t);
            std::vector<Rational> bp = b.homogeneous_part(s + v - t);
            for (int i = 0; i <= t; ++i) {
                if (qt[i].is_zero()) continue;
                for (int j = 0; j <= s + v - t; ++j) {
                    if (bp[j].is_zero()) continue;
                    rhs[i + j] -= qt[i] * bp[j];
                }
            }
        }
        q.set_homogeneous_part(s, divide_homogeneous(rhs, s + v, bv, v));
    }
    return q;
}

}  // namespace weblab
