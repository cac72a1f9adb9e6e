#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

#include "awdaha/errors.hpp"

namespace awdaha {

// Arbitrary-precision rational in canonical form: denominator > 0,
// gcd(|numerator|, denominator) = 1, zero is 0/1.  Wraps GMP's mpq_class
// so that every construction path canonicalizes and division by zero is
// rejected instead of aborting inside GMP.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, 2 means 2/1
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_), already_canonical{}); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero();
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero");
        return Rational(mpq_class(1 / v_), already_canonical{});
    }

    // integer exponents, negative allowed for nonzero base; 0^0 = 1
    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        if (is_zero()) {
            if (e < 0) throw DivisionByZero("negative power of zero");
            return Rational(0);
        }
        Rational base = e < 0 ? inverse() : *this;
        unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1
                                : static_cast<unsigned long>(e);
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), base.v_.get_num().get_mpz_t(), k);
        mpz_pow_ui(d.get_mpz_t(), base.v_.get_den().get_mpz_t(), k);
        Rational r;
        r.v_ = mpq_class(n, d);  // powers of a canonical form stay canonical
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // "p" for integers, "p/q" otherwise, sign on the numerator
    std::string to_string() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    struct already_canonical {};
    Rational(mpq_class v, already_canonical) : v_(std::move(v)) {}
    mpq_class v_;
};

}  // namespace awdaha
