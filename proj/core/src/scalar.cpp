#include "awdaha/scalar.hpp"

#include <cctype>
#include <limits>

namespace awdaha {

Rational FieldElement::rational_value() const {
    if (is_rational_tag()) return std::get<Rational>(v_);
    const auto& f = std::get<RationalFunction>(v_);
    if (!f.is_constant()) throw Error("value is not rational: " + to_string());
    return f.constant_value();
}

RationalFunction FieldElement::as_function() const {
    if (is_rational_tag()) return RationalFunction(std::get<Rational>(v_));
    return std::get<RationalFunction>(v_);
}

bool FieldElement::is_zero() const {
    return is_rational_tag() ? std::get<Rational>(v_).is_zero()
                             : std::get<RationalFunction>(v_).is_zero();
}

bool FieldElement::is_one() const {
    return is_rational_tag() ? std::get<Rational>(v_).is_one()
                             : std::get<RationalFunction>(v_).is_one();
}

FieldElement FieldElement::operator-() const {
    if (is_rational_tag()) return FieldElement(-std::get<Rational>(v_));
    return FieldElement(-std::get<RationalFunction>(v_));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    if (a.is_rational_tag() && b.is_rational_tag())
        return FieldElement(a.rational() + b.rational());
    return FieldElement(a.as_function() + b.as_function());
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    if (a.is_rational_tag() && b.is_rational_tag())
        return FieldElement(a.rational() * b.rational());
    return FieldElement(a.as_function() * b.as_function());
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    if (a.is_rational_tag() && b.is_rational_tag())
        return FieldElement(a.rational() / b.rational());
    return FieldElement(a.as_function() / b.as_function());
}

FieldElement FieldElement::inverse() const {
    if (is_rational_tag()) return FieldElement(std::get<Rational>(v_).inverse());
    return FieldElement(std::get<RationalFunction>(v_).inverse());
}

FieldElement FieldElement::pow(long e) const {
    if (is_rational_tag()) return FieldElement(std::get<Rational>(v_).pow(e));
    return FieldElement(std::get<RationalFunction>(v_).pow(e));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.is_rational_tag() && b.is_rational_tag()) return a.rational() == b.rational();
    if (a.is_rational_value() != b.is_rational_value()) return false;
    if (a.is_rational_value()) return a.rational_value() == b.rational_value();
    return std::get<RationalFunction>(a.v_) == std::get<RationalFunction>(b.v_);
}

namespace {

int cmp_rat(const Rational& a, const Rational& b) {
    if (a < b) return -1;
    return a == b ? 0 : 1;
}

// descending-degree coefficient comparison of equal-degree polynomials
int cmp_poly(const RatPoly& a, const RatPoly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
    for (int i = a.deg(); i >= 0; --i)
        if (int c = cmp_rat(a.coeff(i), b.coeff(i)); c != 0) return c;
    return 0;
}

}  // namespace

int FieldElement::cmp(const FieldElement& a, const FieldElement& b) {
    bool ra = a.is_rational_value();
    bool rb = b.is_rational_value();
    if (ra && rb) return cmp_rat(a.rational_value(), b.rational_value());
    if (ra != rb) return ra ? -1 : 1;
    const auto& f = std::get<RationalFunction>(a.v_);
    const auto& g = std::get<RationalFunction>(b.v_);
    if (int c = cmp_poly(f.num(), g.num()); c != 0) return c;
    return cmp_poly(f.den(), g.den());
}

FieldElement make_laurent(const Rational& coeff, long exponent) {
    return FieldElement(RationalFunction::laurent(coeff, exponent));
}

bool is_not_root_of_unity_guard(const FieldElement& q_value) {
    if (!q_value.is_rational_value()) return true;
    Rational r = q_value.rational_value();
    return !r.is_zero() && r != Rational(1) && r != Rational(-1);
}

FieldElement specialize(const FieldElement& x, const Rational& q_value) {
    if (q_value.is_zero() || q_value == Rational(1) || q_value == Rational(-1))
        throw ForbiddenQ("q = " + q_value.to_string() + " is zero or a root of unity");
    if (x.is_rational_tag()) return x;
    return FieldElement(x.as_function().evaluate(q_value));
}

// ---------------------------------------------------------------------
// printing

namespace {

// one Laurent term c*q^e in canonical form
std::string term_string(const Rational& c, long e) {
    if (e == 0) return c.to_string();
    std::string mono = e == 1 ? "q" : "q^" + std::to_string(e);
    if (c.is_one()) return mono;
    if (c == Rational(-1)) return "-" + mono;
    return c.to_string() + "*" + mono;
}

// polynomial (or Laurent polynomial when shift < 0), highest power first
std::string poly_string(const RatPoly& p, long shift) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.deg(); i >= 0; --i) {
        Rational c = p.coeff(i);
        if (c.is_zero()) continue;
        std::string t = term_string(c, i + shift);
        if (out.empty())
            out = t;
        else if (t.front() == '-')
            out += t;
        else
            out += "+" + t;
    }
    return out;
}

int term_count(const RatPoly& p) {
    int n = 0;
    for (const Rational& c : p.coeffs())
        if (!c.is_zero()) ++n;
    return n;
}

bool is_monic_monomial(const RatPoly& p) {
    return !p.is_zero() && term_count(p) == 1 && p.lc().is_one();
}

}  // namespace

std::string to_string(const RationalFunction& f) {
    if (f.is_zero()) return "0";
    if (f.den().is_constant()) return poly_string(f.num(), 0);
    if (is_monic_monomial(f.den())) return poly_string(f.num(), -f.den().deg());
    std::string num = poly_string(f.num(), 0);
    if (term_count(f.num()) > 1) num = "(" + num + ")";
    return num + "/(" + poly_string(f.den(), 0) + ")";
}

std::string FieldElement::to_string() const {
    if (is_rational_value()) return rational_value().to_string();
    return awdaha::to_string(std::get<RationalFunction>(v_));
}

// ---------------------------------------------------------------------
// parsing
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ('-'|'+') factor | primary ('^' signed-integer)?
//   primary:= integer | 'q' | '(' expr ')'

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    FieldElement run() {
        FieldElement v = expr();
        skip_ws();
        if (i_ != s_.size()) throw ParseError("unexpected trailing input", i_);
        return v;
    }

private:
    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool next_is(char c) {
        skip_ws();
        return i_ < s_.size() && s_[i_] == c;
    }
    bool accept(char c) {
        if (!next_is(c)) return false;
        ++i_;
        return true;
    }

    FieldElement expr() {
        FieldElement v = term();
        for (;;) {
            if (accept('+'))
                v = v + term();
            else if (accept('-'))
                v = v - term();
            else
                return v;
        }
    }

    FieldElement term() {
        FieldElement v = factor();
        for (;;) {
            if (accept('*')) {
                v = v * factor();
            } else if (accept('/')) {
                FieldElement d = factor();
                if (d.is_zero()) throw ParseError("division by zero", i_);
                v = v / d;
            } else {
                return v;
            }
        }
    }

    FieldElement factor() {
        if (accept('-')) return -factor();
        if (accept('+')) return factor();
        FieldElement v = primary();
        if (accept('^')) {
            long e = signed_integer();
            if (v.is_zero() && e < 0) throw ParseError("negative power of zero", i_);
            v = v.pow(e);
        }
        return v;
    }

    FieldElement primary() {
        skip_ws();
        if (i_ >= s_.size()) throw ParseError("unexpected end of input", i_);
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            FieldElement v = expr();
            if (!accept(')')) throw ParseError("expected ')'", i_);
            return v;
        }
        if (c == 'q') {
            ++i_;
            return FieldElement::q();
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return FieldElement(Rational(integer_digits()));
        throw ParseError(std::string("unexpected character '") + c + "'", i_);
    }

    long signed_integer() {
        skip_ws();
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        skip_ws();
        if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
            throw ParseError("expected integer exponent", i_);
        mpz_class z = integer_digits();
        if (!z.fits_slong_p()) throw ParseError("exponent out of range", i_);
        long v = z.get_si();
        return neg ? -v : v;
    }

    mpz_class integer_digits() {
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        return mpz_class(s_.substr(start, i_ - start));
    }

    const std::string& s_;
    std::size_t i_ = 0;
};

}  // namespace

FieldElement parse_scalar(const std::string& text) {
    return Parser(text).run();
}

}  // namespace awdaha
