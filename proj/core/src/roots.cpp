#include <algorithm>
#include <cstdint>
#include <optional>

#include "awdaha/linalg.hpp"

// Exact root enumeration.
//
// Over Q: take the squarefree part, clear to a primitive integer
// polynomial, find its roots modulo a small prime that keeps it
// squarefree, Newton-lift each residue until the modulus dominates the
// numerator/denominator bounds from the rational root theorem, recover
// u/v by rational reconstruction, and keep exactly the candidates the
// polynomial itself confirms.  Every true root survives this pipeline
// (it reduces to a simple root mod p and its lift reconstructs within
// the bounds), and nothing false survives the final exact check.
//
// Over Q(q): take the squarefree part, clear denominators to Q[q][x],
// specialize q to a small rational q0 preserving degree and
// squarefreeness, read off the rational roots there, then Newton-lift
// each one as a power series in (q - q0) and recover a rational
// function by Pade reconstruction inside the degree bounds u | trailing
// coefficient, v | leading coefficient.  Exact verification again has
// the final word.

namespace awdaha {

namespace {

// ------------------------------------------------------------------
// machine-prime helpers (p < 2^32, products via 128-bit)

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t to_mod(const mpz_class& z, std::uint64_t p) {
    mpz_class r = z % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}

std::vector<std::uint64_t> poly_mod(const std::vector<mpz_class>& c, std::uint64_t p) {
    std::vector<std::uint64_t> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = to_mod(c[i], p);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::uint64_t eval_mod(const std::vector<std::uint64_t>& c, std::uint64_t x, std::uint64_t p) {
    std::uint64_t acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = (mulmod(acc, x, p) + c[i]) % p;
    return acc;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1;
    while (e) {
        if (e & 1) acc = mulmod(acc, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return acc;
}

std::vector<std::uint64_t> derivative_mod(const std::vector<std::uint64_t>& c, std::uint64_t p) {
    if (c.size() <= 1) return {};
    std::vector<std::uint64_t> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = mulmod(c[i], i % p, p);
    while (!d.empty() && d.back() == 0) d.pop_back();
    return d;
}

std::vector<std::uint64_t> rem_mod(std::vector<std::uint64_t> a,
                                   const std::vector<std::uint64_t>& b, std::uint64_t p) {
    std::uint64_t inv = pow_mod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
        std::uint64_t f = mulmod(a.back(), inv, p);
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::uint64_t t = mulmod(f, b[i], p);
            a[off + i] = (a[off + i] + p - t) % p;
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

bool squarefree_mod(const std::vector<std::uint64_t>& c, std::uint64_t p) {
    std::vector<std::uint64_t> a = c, b = derivative_mod(c, p);
    while (!b.empty()) {
        auto r = rem_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a.size() == 1;  // gcd is a nonzero constant
}

// ------------------------------------------------------------------
// Q side

std::vector<mpz_class> to_primitive_z(const RatPoly& p) {
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
    if (content != 0)
        for (auto& v : z) v /= content;
    return z;
}

std::optional<Rational> rational_reconstruct(const mpz_class& x, const mpz_class& modulus,
                                             const mpz_class& num_bound,
                                             const mpz_class& den_bound) {
    mpz_class r0 = modulus, r1 = x % modulus;
    if (r1 < 0) r1 += modulus;
    mpz_class t0 = 0, t1 = 1;
    while (r1 > num_bound) {
        mpz_class qq = r0 / r1;
        mpz_class r2 = r0 - qq * r1;
        r0 = r1;
        r1 = r2;
        mpz_class t2 = t0 - qq * t1;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || abs(t1) > den_bound) return std::nullopt;
    mpz_class u = r1, v = t1;
    if (v < 0) {
        v = -v;
        u = -u;
    }
    return Rational(u, v);
}

// roots of a squarefree rational polynomial of degree >= 1
std::vector<Rational> roots_of_squarefree_q(const RatPoly& sq) {
    std::vector<Rational> out;
    if (sq.deg() == 1) {
        out.push_back(-(sq.coeff(0) / sq.coeff(1)));
        return out;
    }
    if (sq.deg() == 2) {
        // quadratic formula when the discriminant is a rational square
        Rational a = sq.coeff(2), b = sq.coeff(1), c = sq.coeff(0);
        Rational disc = b * b - Rational(4) * a * c;
        if (disc.sign() < 0) return out;
        if (mpz_perfect_square_p(disc.num().get_mpz_t()) &&
            mpz_perfect_square_p(disc.den().get_mpz_t())) {
            mpz_class sn, sd;
            mpz_sqrt(sn.get_mpz_t(), disc.num().get_mpz_t());
            mpz_sqrt(sd.get_mpz_t(), disc.den().get_mpz_t());
            Rational s(sn, sd);
            out.push_back((-b + s) / (Rational(2) * a));
            if (!s.is_zero()) out.push_back((-b - s) / (Rational(2) * a));
        }
        return out;
    }

    std::vector<mpz_class> z = to_primitive_z(sq);
    // trailing coefficient is nonzero here (zero roots were stripped)
    mpz_class num_bound = abs(z.front());
    mpz_class den_bound = abs(z.back());

    // pick a prime keeping the reduction squarefree with full degree
    mpz_class pz = 65537;
    std::vector<std::uint64_t> zp;
    std::uint64_t p = 0;
    for (;;) {
        p = pz.get_ui();
        if (z.back() % pz != 0) {
            zp = poly_mod(z, p);
            if (zp.size() == z.size() && squarefree_mod(zp, p)) break;
        }
        mpz_nextprime(pz.get_mpz_t(), pz.get_mpz_t());
    }

    mpz_class target = 2 * num_bound * den_bound + 1;
    for (std::uint64_t r = 0; r < p; ++r) {
        if (eval_mod(zp, r, p) != 0) continue;
        // Newton lift the residue; f'(r) is a unit mod p by squarefreeness
        mpz_class modulus = pz;
        mpz_class x = static_cast<unsigned long>(r);
        while (modulus < target) {
            modulus *= modulus;
            mpz_class fx = 0, dfx = 0;
            for (std::size_t i = z.size(); i-- > 0;) {
                dfx = (dfx * x + fx) % modulus;
                fx = (fx * x + z[i]) % modulus;
            }
            mpz_class dinv;
            if (mpz_invert(dinv.get_mpz_t(), dfx.get_mpz_t(), modulus.get_mpz_t()) == 0) break;
            x = (x - fx * dinv) % modulus;
            if (x < 0) x += modulus;
        }
        if (modulus < target) continue;
        auto cand = rational_reconstruct(x, modulus, num_bound, den_bound);
        if (!cand) continue;
        if (sq.eval(*cand).is_zero()) out.push_back(*cand);
    }
    return out;
}

// ------------------------------------------------------------------
// Q(q) side: truncated power series in s with rational coefficients

struct Series {
    std::vector<Rational> c;  // exactly n terms

    static Series constant(const Rational& r, std::size_t n) {
        Series s;
        s.c.assign(n, Rational(0));
        s.c[0] = r;
        return s;
    }
};

Series add(const Series& a, const Series& b) {
    Series r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
}

Series sub(const Series& a, const Series& b) {
    Series r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
}

Series mul(const Series& a, const Series& b) {
    Series r;
    r.c.assign(a.c.size(), Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < b.c.size(); ++j) {
            if (b.c[j].is_zero()) continue;
            r.c[i + j] += a.c[i] * b.c[j];
        }
    }
    return r;
}

// multiplicative inverse of a unit series
Series inv(const Series& a) {
    Series r;
    r.c.assign(a.c.size(), Rational(0));
    Rational lead = a.c[0].inverse();
    r.c[0] = lead;
    for (std::size_t k = 1; k < a.c.size(); ++k) {
        Rational acc(0);
        for (std::size_t i = 1; i <= k; ++i) acc += a.c[i] * r.c[k - i];
        r.c[k] = -(acc * lead);
    }
    return r;
}

Series from_ratpoly(const RatPoly& p, std::size_t n) {
    Series s;
    s.c.assign(n, Rational(0));
    for (std::size_t i = 0; i < n && static_cast<int>(i) <= p.deg(); ++i)
        s.c[i] = p.coeff(static_cast<int>(i));
    return s;
}

RatPoly to_ratpoly(const Series& s) {
    return RatPoly(std::vector<Rational>(s.c.begin(), s.c.end()));
}

// roots in Q(q) of a squarefree polynomial with RationalFunction
// coefficients, degree >= 1
std::vector<FieldElement> roots_of_squarefree_qq(const Polynomial& sq) {
    std::vector<FieldElement> out;
    if (sq.deg() == 1) {
        out.push_back(-(sq.coeff(0) / sq.coeff(1)));
        return out;
    }

    // clear denominators: coefficients land in Q[q]
    const int m = sq.deg();
    RatPoly lcm_den{Rational(1)};
    for (int j = 0; j <= m; ++j) lcm_den = lcm_monic(lcm_den, sq.coeff(j).as_function().den());
    std::vector<RatPoly> zc(static_cast<std::size_t>(m) + 1);
    RatPoly content;
    for (int j = 0; j <= m; ++j) {
        RationalFunction f = sq.coeff(j).as_function();
        zc[static_cast<std::size_t>(j)] = f.num() * (lcm_den / f.den());
        content = gcd_monic(content, zc[static_cast<std::size_t>(j)]);
    }
    if (content.deg() > 0)
        for (auto& c : zc) c = c / content;

    const int du = zc.front().deg();  // bound for root numerators
    const int dv = zc.back().deg();   // bound for root denominators
    const std::size_t prec = static_cast<std::size_t>(du + dv) + 1;

    // specialize q -> q0 keeping degree and squarefreeness
    Rational q0;
    std::vector<Rational> spec(static_cast<std::size_t>(m) + 1);
    for (long cand = 2;; ++cand) {
        q0 = Rational(cand);
        if (zc.back().eval(q0).is_zero()) continue;
        for (int j = 0; j <= m; ++j) spec[static_cast<std::size_t>(j)] = zc[static_cast<std::size_t>(j)].eval(q0);
        RatPoly sp(spec);
        if (is_squarefree(sp)) break;
    }

    RatPoly sp(spec);
    std::vector<Rational> anchors = roots_of_squarefree_q(sp);
    if (anchors.empty()) return out;

    // coefficients as truncated series in s = q - q0
    std::vector<Series> cs;
    cs.reserve(zc.size());
    for (const auto& c : zc) cs.push_back(from_ratpoly(c.taylor_shift(q0), prec));
    std::vector<Series> dcs;  // d/dx of the polynomial, coefficient-wise
    for (std::size_t j = 1; j < cs.size(); ++j) {
        Series d = cs[j];
        for (auto& x : d.c) x *= Rational(static_cast<long>(j));
        dcs.push_back(std::move(d));
    }
    auto eval_series = [&](const std::vector<Series>& coeffs, const Series& x) {
        Series acc = Series::constant(Rational(0), prec);
        for (std::size_t j = coeffs.size(); j-- > 0;) acc = add(mul(acc, x), coeffs[j]);
        return acc;
    };

    for (const Rational& rho : anchors) {
        Series x = Series::constant(rho, prec);
        std::size_t correct = 1;
        while (correct < prec) {
            x = sub(x, mul(eval_series(cs, x), inv(eval_series(dcs, x))));
            correct *= 2;
        }
        // Pade reconstruction: extended Euclid against s^prec, stopping
        // at the numerator degree bound
        RatPoly r0 = RatPoly::monomial(Rational(1), static_cast<int>(prec));
        RatPoly r1 = to_ratpoly(x);
        RatPoly t0, t1{Rational(1)};
        while (r1.deg() > du) {
            auto [qq, rem] = divmod(r0, r1);
            r0 = r1;
            r1 = rem;
            RatPoly t2 = t0 - qq * t1;
            t0 = t1;
            t1 = t2;
        }
        if (r1.is_zero() || t1.is_zero()) continue;
        if (t1.coeff(0).is_zero()) continue;  // denominator must be a unit at s=0
        RationalFunction w(r1.taylor_shift(-q0), t1.taylor_shift(-q0));
        if (sq.eval(FieldElement(w)).is_zero()) out.push_back(FieldElement(w));
    }
    return out;
}

}  // namespace

RootList rational_roots(const Polynomial& p) {
    if (p.is_zero()) throw Error("rational_roots of the zero polynomial");
    RootList out;
    if (p.deg() == 0) {
        out.splits = true;  // vacuously: no roots to account for
        return out;
    }

    // factor out x^k
    Polynomial body = p;
    int zero_mult = 0;
    while (body.deg() > 0 && body.coeff(0).is_zero()) {
        body = body / Polynomial{FieldElement(0), FieldElement(1)};
        ++zero_mult;
    }

    bool all_rational = true;
    for (const auto& c : body.coeffs())
        if (!c.is_rational_value()) {
            all_rational = false;
            break;
        }

    std::vector<FieldElement> distinct;
    if (zero_mult > 0) distinct.push_back(FieldElement(0));
    if (body.deg() >= 1) {
        if (all_rational) {
            std::vector<Rational> rc(static_cast<std::size_t>(body.deg()) + 1);
            for (int i = 0; i <= body.deg(); ++i)
                rc[static_cast<std::size_t>(i)] = body.coeff(i).rational_value();
            RatPoly rp(std::move(rc));
            RatPoly sqf = squarefree_part(rp);
            for (const Rational& r : roots_of_squarefree_q(sqf))
                distinct.push_back(FieldElement(r));
        } else {
            Polynomial sqf = squarefree_part(body);
            for (auto& r : roots_of_squarefree_qq(sqf)) distinct.push_back(std::move(r));
        }
    }

    std::sort(distinct.begin(), distinct.end(), scalar_less);
    int total = 0;
    for (const auto& r : distinct) {
        Polynomial lin{-r, FieldElement(1)};
        Polynomial rest = p;
        int mult = 0;
        for (;;) {
            auto [quo, rem] = divmod(rest, lin);
            if (!rem.is_zero()) break;
            rest = quo;
            ++mult;
        }
        out.roots.emplace_back(r, mult);
        total += mult;
    }
    out.splits = total == p.deg();
    return out;
}

}  // namespace awdaha
