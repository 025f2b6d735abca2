#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

#include "weblab/errors.hpp"

namespace weblab {

// Value wrapper around mpq_t. Always canonical: lowest terms, positive
// denominator (mpq arithmetic preserves this as long as inputs are canonical).
class Rational {
public:
    Rational() { mpq_init(q_); }

    Rational(long num, long den = 1) {
        mpq_init(q_);
        if (den == 0) raise(ErrorCode::Internal, "rational with zero denominator");
        mpq_set_si(q_, num, 1);
        mpq_t d;
        mpq_init(d);
        mpq_set_si(d, den, 1);
        mpq_div(q_, q_, d);
        mpq_clear(d);
    }

    // Numerator and denominator given as decimal strings.
    Rational(const std::string& num, const std::string& den) {
        mpq_init(q_);
        if (mpz_set_str(mpq_numref(q_), num.c_str(), 10) != 0 ||
            mpz_set_str(mpq_denref(q_), den.c_str(), 10) != 0) {
            mpq_clear(q_);
            raise(ErrorCode::MalformedInput, "bad rational literal " + num + "/" + den);
        }
        if (mpz_sgn(mpq_denref(q_)) == 0) {
            mpq_clear(q_);
            raise(ErrorCode::MalformedInput, "zero denominator in " + num + "/" + den);
        }
        mpq_canonicalize(q_);
    }

    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }

    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }

    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }

    Rational& operator=(Rational&& o) noexcept {
        if (this != &o) mpq_swap(q_, o.q_);
        return *this;
    }

    ~Rational() { mpq_clear(q_); }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
    int sign() const { return mpq_sgn(q_); }

    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }

    Rational& operator+=(const Rational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) raise(ErrorCode::Internal, "rational division by zero");
        mpq_div(q_, q_, o.q_);
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_, b.q_) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return mpq_cmp(a.q_, b.q_) < 0;
    }

    Rational inverse() const {
        if (is_zero()) raise(ErrorCode::Internal, "inverse of zero rational");
        Rational r;
        mpq_inv(r.q_, q_);
        return r;
    }

    std::string numerator_string() const { return mpz_to_string(mpq_numref(q_)); }
    std::string denominator_string() const { return mpz_to_string(mpq_denref(q_)); }

    // "n" when the denominator is 1, "n/d" otherwise.
    std::string to_string() const {
        if (mpz_cmp_si(mpq_denref(q_), 1) == 0) return numerator_string();
        return numerator_string() + "/" + denominator_string();
    }

    // Parses "n" or "n/d".
    static Rational parse(const std::string& text) {
        auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(text, "1");
        return Rational(text.substr(0, slash), text.substr(slash + 1));
    }

private:
    static std::string mpz_to_string(mpz_srcptr z) {
        char* raw = mpz_get_str(nullptr, 10, z);
        std::string s(raw);
        void (*freefunc)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefunc);
        freefunc(raw, s.size() + 1);
        return s;
    }

    mpq_t q_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace weblab

#include <ostream>

namespace weblab {
inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}
}  // namespace weblab
