#pragma once

#include <string>
#include <utility>

#include "awdaha/polynomial.hpp"
#include "awdaha/rational.hpp"

namespace awdaha {

using RatPoly = Poly<Rational>;

// gcd over Q[q] by clearing denominators to Z[q] and running a
// primitive-part pseudo-remainder sequence, which keeps intermediate
// coefficients near the size of the inputs; returned monic
template <>
RatPoly gcd_monic<Rational>(RatPoly a, RatPoly b);

// Element of Q(q): numerator/denominator in Q[q], denominator monic,
// the two coprime, zero represented as 0/1.  Normalization happens in
// the constructor; every arithmetic result is built through it.
class RationalFunction {
public:
    RationalFunction() : num_(), den_{Rational(1)} {}
    RationalFunction(long n) : num_(Rational(n)), den_{Rational(1)} {}  // NOLINT
    explicit RationalFunction(const Rational& c) : num_(c), den_{Rational(1)} {}
    RationalFunction(RatPoly num, RatPoly den);

    static RationalFunction variable() {
        return RationalFunction(RatPoly::variable(), RatPoly{Rational(1)});
    }
    // c * q^e with any integer exponent
    static RationalFunction laurent(const Rational& c, long e);

    const RatPoly& num() const { return num_; }
    const RatPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_constant() && den_.is_constant() && !num_.is_zero() && num_.coeff(0).is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const;  // precondition: is_constant()

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

    RationalFunction inverse() const;
    RationalFunction pow(long e) const;

    // exact evaluation at q = q0; throws DenominatorVanishes at poles
    Rational evaluate(const Rational& q0) const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

private:
    RatPoly num_, den_;
};

}  // namespace awdaha
