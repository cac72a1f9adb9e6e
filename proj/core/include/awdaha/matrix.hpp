#pragma once

#include <optional>
#include <string>
#include <vector>

#include "awdaha/scalar.hpp"

namespace awdaha {

using Vec = std::vector<FieldElement>;

// Dense square matrix over the scalar field, acting on column vectors;
// column j is the image of the j-th basis vector.  Entries are kept on
// one common tag: storing a symbolic entry promotes the whole matrix to
// Q(q), storing a rational entry into a symbolic matrix promotes the
// entry.  n is tiny here (<= 32), so O(n^2) promotion is irrelevant.
class SquareMatrix {
public:
    explicit SquareMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}
    SquareMatrix(int n, std::vector<FieldElement> row_major);

    static SquareMatrix identity(int n);
    static SquareMatrix scalar(int n, const FieldElement& s);
    static SquareMatrix diagonal(const Vec& d);

    int n() const { return n_; }
    const FieldElement& at(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * n_ + j];
    }
    void set(int i, int j, const FieldElement& v);
    bool symbolic() const { return symbolic_; }

    SquareMatrix operator-() const;
    friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b);
    friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b);
    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
    friend SquareMatrix operator*(const FieldElement& s, const SquareMatrix& m);
    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b);
    friend bool operator!=(const SquareMatrix& a, const SquareMatrix& b) { return !(a == b); }

    SquareMatrix transpose() const;
    bool is_zero() const;
    bool is_identity() const;
    // the scalar s with M = s*I, when M is a scalar matrix
    std::optional<FieldElement> as_scalar() const;

    friend Vec operator*(const SquareMatrix& m, const Vec& v);

    // text format: first line n, then n rows of n scalar tokens
    std::string to_text() const;
    static SquareMatrix from_text(const std::string& text);

private:
    void promote_all();
    int n_;
    std::vector<FieldElement> a_;
    bool symbolic_ = false;
};

SquareMatrix specialize(const SquareMatrix& m, const Rational& q_value);

}  // namespace awdaha
