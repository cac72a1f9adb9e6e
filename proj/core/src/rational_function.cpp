#include "awdaha/rational_function.hpp"

#include <algorithm>
#include <vector>

namespace awdaha {

namespace {

// clear denominators and content: primitive integer polynomial with
// positive leading coefficient, low degree first
std::vector<mpz_class> to_primitive_int(const RatPoly& p) {
    mpz_class den_lcm = 1;
    for (const Rational& c : p.coeffs())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> z;
    z.reserve(p.coeffs().size());
    mpz_class content = 0;
    for (const Rational& c : p.coeffs()) {
        mpz_class v = c.num() * (den_lcm / c.den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        z.push_back(std::move(v));
    }
    if (content != 0) {
        if (z.back() < 0) content = -content;
        for (auto& v : z) v /= content;
    }
    return z;
}

int zdeg(const std::vector<mpz_class>& p) { return static_cast<int>(p.size()) - 1; }

void ztrim(std::vector<mpz_class>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

mpz_class zcontent(const std::vector<mpz_class>& p) {
    mpz_class g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

// pseudo-remainder: prem(a, b) = lc(b)^(deg a - deg b + 1) * a  mod  b
std::vector<mpz_class> zprem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    const mpz_class& lb = b.back();
    int k = zdeg(a) - zdeg(b);
    while (k >= 0) {
        mpz_class f = a.back();
        for (auto& c : a) c *= lb;
        for (int i = 0; i <= zdeg(b); ++i)
            a[static_cast<std::size_t>(k + i)] -= f * b[static_cast<std::size_t>(i)];
        ztrim(a);
        k = zdeg(a) - zdeg(b);
    }
    return a;
}

}  // namespace

template <>
RatPoly gcd_monic<Rational>(RatPoly a, RatPoly b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    std::vector<mpz_class> u = to_primitive_int(a);
    std::vector<mpz_class> v = to_primitive_int(b);
    if (zdeg(u) < zdeg(v)) std::swap(u, v);
    while (!v.empty()) {
        std::vector<mpz_class> r = zprem(u, v);
        if (!r.empty()) {
            mpz_class c = zcontent(r);
            for (auto& x : r) x /= c;  // primitive part each step
        }
        u = std::move(v);
        v = std::move(r);
    }
    std::vector<Rational> out;
    out.reserve(u.size());
    for (const auto& c : u) out.emplace_back(c);
    return RatPoly(std::move(out)).monic();
}

RationalFunction::RationalFunction(RatPoly num, RatPoly den) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = RatPoly();
        den_ = RatPoly{Rational(1)};
        return;
    }
    RatPoly g = gcd_monic<Rational>(num, den);
    if (g.deg() > 0) {
        num = num / g;
        den = den / g;
    }
    Rational lead_inv = den.lc().inverse();
    num_ = lead_inv * num;
    den_ = lead_inv * den;
}

RationalFunction RationalFunction::laurent(const Rational& c, long e) {
    if (c.is_zero()) return RationalFunction();
    if (e >= 0) return RationalFunction(RatPoly::monomial(c, static_cast<int>(e)), RatPoly{Rational(1)});
    return RationalFunction(RatPoly{c}, RatPoly::monomial(Rational(1), static_cast<int>(-e)));
}

Rational RationalFunction::constant_value() const {
    return num_.coeff(0) / den_.coeff(0);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    RatPoly g = gcd_monic<Rational>(a.den_, b.den_);
    RatPoly da = a.den_ / g;
    RatPoly db = b.den_ / g;
    return RationalFunction(a.num_ * db + b.num_ * da, a.den_ * db);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction();
    // cross-cancel first so the final gcd works on small operands
    RatPoly g1 = gcd_monic<Rational>(a.num_, b.den_);
    RatPoly g2 = gcd_monic<Rational>(b.num_, a.den_);
    return RationalFunction((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long e) const {
    if (e == 0) return RationalFunction(1);
    RationalFunction base = e < 0 ? inverse() : *this;
    long k = e < 0 ? -e : e;
    RationalFunction acc(1);
    while (k > 0) {  // square and multiply; exponents stay small here anyway
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Rational RationalFunction::evaluate(const Rational& q0) const {
    Rational d = den_.eval(q0);
    if (d.is_zero()) throw DenominatorVanishes("denominator vanishes at q = " + q0.to_string());
    return num_.eval(q0) / d;
}

}  // namespace awdaha
