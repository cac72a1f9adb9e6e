#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "awdaha/errors.hpp"

namespace awdaha {

// Dense univariate polynomial over a field K, coefficients stored low
// degree first with no trailing zeros.  deg(0) = -1 by convention.
// K must provide: default construction to zero, construction from long,
// +, -, *, inverse(), is_zero(), ==.
template <class K>
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<K> low_first) : c_(low_first) { trim(); }
    explicit Poly(std::vector<K> low_first) : c_(std::move(low_first)) { trim(); }
    explicit Poly(const K& constant) : c_{constant} { trim(); }

    static Poly monomial(const K& coeff, int exponent) {
        if (coeff.is_zero()) return Poly();
        std::vector<K> c(static_cast<std::size_t>(exponent) + 1);
        c.back() = coeff;
        return Poly(std::move(c));
    }
    static Poly variable() { return monomial(K(1), 1); }

    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(int i) const {
        if (i < 0 || i > deg()) return K();
        return c_[static_cast<std::size_t>(i)];
    }
    const K& lc() const { return c_.back(); }  // precondition: nonzero poly

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < a.c_.size()) c[i] = c[i] + a.c_[i];
            if (i < b.c_.size()) c[i] = c[i] + b.c_[i];
        }
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        std::vector<K> c(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
        Poly r;
        r.c_ = std::move(c);
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }
    friend Poly operator*(const K& s, const Poly& p) {
        std::vector<K> c(p.c_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * p.c_[i];
        return Poly(std::move(c));
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    K eval(const K& x) const {
        K acc;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = K(static_cast<long>(i)) * c_[i];
        return Poly(std::move(c));
    }

    // quotient and remainder; divisor must be nonzero
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
        if (a.deg() < b.deg()) return {Poly(), a};
        const K lb_inv = b.lc().inverse();
        std::vector<K> rem = a.c_;
        std::vector<K> quo(static_cast<std::size_t>(a.deg() - b.deg()) + 1);
        for (int k = a.deg() - b.deg(); k >= 0; --k) {
            K f = rem[static_cast<std::size_t>(k + b.deg())] * lb_inv;
            quo[static_cast<std::size_t>(k)] = f;
            if (f.is_zero()) continue;
            for (int i = 0; i <= b.deg(); ++i) {
                auto idx = static_cast<std::size_t>(k + i);
                rem[idx] = rem[idx] - f * b.c_[static_cast<std::size_t>(i)];
            }
        }
        rem.resize(static_cast<std::size_t>(b.deg() > 0 ? b.deg() : 0));
        return {Poly(std::move(quo)), Poly(std::move(rem))};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    Poly monic() const {
        if (is_zero()) return *this;
        return lc().inverse() * *this;
    }

    Poly pow(int e) const {
        Poly r{K(1)};
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    // p(x + t), exact Taylor shift by Horner on (x + t)
    Poly taylor_shift(const K& t) const {
        Poly r;
        Poly lin{t, K(1)};
        for (std::size_t i = c_.size(); i-- > 0;) r = r * lin + Poly(c_[i]);
        return r;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<K> c_;
};

// monic gcd by the Euclidean algorithm, valid over any field K;
// Poly<Rational> has a dedicated overload that controls coefficient
// growth (see rational_function.hpp)
template <class K>
Poly<K> gcd_monic(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        Poly<K> r = a % b;
        a = std::move(b);
        b = r.monic();  // normalizing each remainder keeps coefficients tame
    }
    return a.monic();
}

template <class K>
Poly<K> lcm_monic(const Poly<K>& a, const Poly<K>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<K>();
    return ((a * b) / gcd_monic(a, b)).monic();
}

template <class K>
bool is_squarefree(const Poly<K>& p) {
    if (p.deg() <= 1) return true;
    return gcd_monic(p, p.derivative()).deg() == 0;
}

template <class K>
Poly<K> squarefree_part(const Poly<K>& p) {
    if (p.deg() <= 1) return p.monic();
    return (p / gcd_monic(p, p.derivative())).monic();
}

}  // namespace awdaha
