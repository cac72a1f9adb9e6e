#pragma once

#include <string>
#include <variant>

#include "awdaha/rational_function.hpp"

namespace awdaha {

// Exact scalar of the toolkit: either in Q or in Q(q).  Mixed-tag
// arithmetic promotes the rational side into Q(q); nothing ever demotes,
// so a computation that started symbolic stays symbolic.  Equality,
// ordering and printing are value-based under the embedding Q in Q(q):
// FieldElement(2) and the constant function 2 are one and the same value.
class FieldElement {
public:
    FieldElement() : v_(Rational(0)) {}
    FieldElement(long n) : v_(Rational(n)) {}  // NOLINT: implicit by design
    FieldElement(Rational r) : v_(std::move(r)) {}  // NOLINT
    FieldElement(RationalFunction f) : v_(std::move(f)) {}  // NOLINT

    // the generator q of Q(q)
    static FieldElement q() { return FieldElement(RationalFunction::variable()); }

    bool is_rational_tag() const { return std::holds_alternative<Rational>(v_); }
    bool is_symbolic_tag() const { return !is_rational_tag(); }

    // true when the value lies in Q, regardless of tag
    bool is_rational_value() const {
        return is_rational_tag() || std::get<RationalFunction>(v_).is_constant();
    }
    Rational rational_value() const;           // requires is_rational_value()
    RationalFunction as_function() const;      // promoting view
    const Rational& rational() const { return std::get<Rational>(v_); }

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator-() const;
    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement inverse() const;
    FieldElement pow(long e) const;

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    // total order for deterministic tie-breaking: all values in Q first
    // (numerically), then proper functions by (deg num, deg den) and
    // coefficient lists; returns <0, 0, >0
    static int cmp(const FieldElement& a, const FieldElement& b);

    std::string to_string() const;

private:
    std::variant<Rational, RationalFunction> v_;
};

inline bool scalar_less(const FieldElement& a, const FieldElement& b) {
    return FieldElement::cmp(a, b) < 0;
}

// c * q^e, landing in Q(q) even when e = 0
FieldElement make_laurent(const Rational& coeff, long exponent);

// exact evaluation at q = q_value; rational inputs pass through untouched.
// q_value must avoid {0, 1, -1}: those are exactly the rationals that are
// zero or roots of unity.
FieldElement specialize(const FieldElement& x, const Rational& q_value);

// true for symbolic values (a transcendental is never a root of unity)
// and for rationals outside {0, 1, -1}
bool is_not_root_of_unity_guard(const FieldElement& q_value);

// Scalar text syntax: integers, p/q, powers q^k with signed k, products
// and sums like 3/2*q^-2 or (q^2+1)/(q-1).  parse_scalar accepts the
// whole grammar; to_string emits the canonical whitespace-free form that
// parses back to the identical value.
FieldElement parse_scalar(const std::string& text);

std::string to_string(const RationalFunction& f);

}  // namespace awdaha
