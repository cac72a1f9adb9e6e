#include "awdaha/matrix.hpp"

#include <sstream>

namespace awdaha {

SquareMatrix::SquareMatrix(int n, std::vector<FieldElement> row_major)
    : n_(n), a_(std::move(row_major)) {
    if (a_.size() != static_cast<std::size_t>(n) * n)
        throw Error("matrix entry count does not match dimension");
    for (const auto& x : a_)
        if (x.is_symbolic_tag()) {
            symbolic_ = true;
            break;
        }
    if (symbolic_) promote_all();
}

void SquareMatrix::promote_all() {
    for (auto& x : a_)
        if (x.is_rational_tag()) x = FieldElement(x.as_function());
}

void SquareMatrix::set(int i, int j, const FieldElement& v) {
    auto& slot = a_[static_cast<std::size_t>(i) * n_ + j];
    if (v.is_symbolic_tag() && !symbolic_) {
        symbolic_ = true;
        slot = v;
        promote_all();
    } else if (v.is_rational_tag() && symbolic_) {
        slot = FieldElement(v.as_function());
    } else {
        slot = v;
    }
}

SquareMatrix SquareMatrix::identity(int n) {
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, FieldElement(1));
    return m;
}

SquareMatrix SquareMatrix::scalar(int n, const FieldElement& s) {
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, s);
    return m;
}

SquareMatrix SquareMatrix::diagonal(const Vec& d) {
    SquareMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.n(); ++i) m.set(i, i, d[static_cast<std::size_t>(i)]);
    return m;
}

SquareMatrix SquareMatrix::operator-() const {
    SquareMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.set(i, j, -at(i, j));
    return r;
}

SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.n_ != b.n_) throw Error("matrix dimension mismatch");
    SquareMatrix r(a.n_);
    for (int i = 0; i < a.n_; ++i)
        for (int j = 0; j < a.n_; ++j) r.set(i, j, a.at(i, j) + b.at(i, j));
    return r;
}

SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) { return a + (-b); }

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.n_ != b.n_) throw Error("matrix dimension mismatch");
    SquareMatrix r(a.n_);
    for (int i = 0; i < a.n_; ++i)
        for (int j = 0; j < a.n_; ++j) {
            FieldElement acc;
            for (int k = 0; k < a.n_; ++k) {
                if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
                acc = acc + a.at(i, k) * b.at(k, j);
            }
            r.set(i, j, acc);
        }
    return r;
}

SquareMatrix operator*(const FieldElement& s, const SquareMatrix& m) {
    SquareMatrix r(m.n_);
    for (int i = 0; i < m.n_; ++i)
        for (int j = 0; j < m.n_; ++j) r.set(i, j, s * m.at(i, j));
    return r;
}

bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
        if (!(a.a_[i] == b.a_[i])) return false;
    return true;
}

SquareMatrix SquareMatrix::transpose() const {
    SquareMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.set(j, i, at(i, j));
    return r;
}

bool SquareMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool SquareMatrix::is_identity() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (i == j && !at(i, j).is_one()) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

std::optional<FieldElement> SquareMatrix::as_scalar() const {
    const FieldElement& s = at(0, 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (i == j && !(at(i, j) == s)) return std::nullopt;
            if (i != j && !at(i, j).is_zero()) return std::nullopt;
        }
    return s;
}

Vec operator*(const SquareMatrix& m, const Vec& v) {
    if (static_cast<int>(v.size()) != m.n()) throw Error("matrix/vector dimension mismatch");
    Vec r(v.size());
    for (int i = 0; i < m.n(); ++i) {
        FieldElement acc;
        for (int j = 0; j < m.n(); ++j) {
            if (m.at(i, j).is_zero() || v[static_cast<std::size_t>(j)].is_zero()) continue;
            acc = acc + m.at(i, j) * v[static_cast<std::size_t>(j)];
        }
        r[static_cast<std::size_t>(i)] = acc;
    }
    return r;
}

std::string SquareMatrix::to_text() const {
    std::string out = std::to_string(n_) + "\n";
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (j) out += " ";
            out += at(i, j).to_string();
        }
        out += "\n";
    }
    return out;
}

SquareMatrix SquareMatrix::from_text(const std::string& text) {
    std::istringstream in(text);
    long n = 0;
    if (!(in >> n) || n < 1) throw ParseError("expected a positive matrix dimension", 0);
    std::vector<FieldElement> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    std::string tok;
    for (long k = 0; k < n * n; ++k) {
        if (!(in >> tok)) throw ParseError("expected " + std::to_string(n * n) + " entries", 0);
        entries.push_back(parse_scalar(tok));
    }
    if (in >> tok) throw ParseError("unexpected trailing entries", 0);
    return SquareMatrix(static_cast<int>(n), std::move(entries));
}

SquareMatrix specialize(const SquareMatrix& m, const Rational& q_value) {
    SquareMatrix r(m.n());
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) r.set(i, j, specialize(m.at(i, j), q_value));
    return r;
}

}  // namespace awdaha
