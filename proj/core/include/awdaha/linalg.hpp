#pragma once

#include <utility>
#include <vector>

#include "awdaha/matrix.hpp"
#include "awdaha/polynomial.hpp"

namespace awdaha {

using Polynomial = Poly<FieldElement>;

// Linear span of row vectors kept permanently in reduced echelon form
// with unit pivots, first-nonzero-from-the-left pivot rule, rows ordered
// by pivot column.  That form is unique per subspace, so equality is
// plain entry comparison and tie-breaking on subspaces is well defined.
class SpanBuilder {
public:
    explicit SpanBuilder(int width) : width_(width) {}

    // returns true when v enlarged the span
    bool insert(Vec v);
    bool contains(Vec v) const;
    void reduce(Vec& v) const;  // v minus its projection onto the span
    int dim() const { return static_cast<int>(rows_.size()); }
    int width() const { return width_; }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

private:
    int width_;
    std::vector<Vec> rows_;    // ordered by pivot column
    std::vector<int> pivots_;  // pivots_[k] = pivot column of rows_[k]
};

// Subspace of F^n in the canonical reduced echelon basis
struct Subspace {
    int ambient = 0;
    std::vector<Vec> basis;

    static Subspace from_vectors(int ambient, const std::vector<Vec>& vectors);
    int dim() const { return static_cast<int>(basis.size()); }
    bool contains(const Vec& v) const;
    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient == b.ambient && a.basis == b.basis;
    }
};

// a.basis == b.basis needs Vec ==; FieldElement == is value-based, so this
// compares canonical forms entrywise

SquareMatrix inverse(const SquareMatrix& m);          // throws Singular
FieldElement determinant(const SquareMatrix& m);

// monic characteristic polynomial det(xI - M), division-free
// (Samuelson-Berkowitz), with a direct product fast path for
// triangular matrices
Polynomial char_poly(const SquareMatrix& m);

// monic minimal polynomial as the lcm of the annihilators of the
// standard basis vectors, each found from its Krylov chain
Polynomial min_poly(const SquareMatrix& m);

// squarefree minimal polynomial, i.e. diagonalizable over the
// algebraic closure
bool is_diagonalizable(const SquareMatrix& m);

// squarefree characteristic polynomial
bool is_multiplicity_free(const SquareMatrix& m);

Subspace eigenspace(const SquareMatrix& m, const FieldElement& lambda);
Subspace nullspace(const SquareMatrix& m);

// basis of {v : r.v = 0 for every row r}; the rows need not be independent
std::vector<Vec> homogeneous_kernel(const std::vector<Vec>& rows, int width);

struct RootList {
    std::vector<std::pair<FieldElement, int>> roots;  // sorted, with multiplicities
    bool splits = false;  // multiplicities sum to the degree
};

// every root of p lying in the working field (Q, or Q(q) for symbolic
// input), found exactly; see roots.cpp for the method
RootList rational_roots(const Polynomial& p);

// p(M) by Horner
SquareMatrix eval_at(const Polynomial& p, const SquareMatrix& m);

// coordinates of v in a list of independent vectors; nullopt when v is
// outside their span
std::optional<Vec> solve_coordinates(const std::vector<Vec>& basis, const Vec& v);

}  // namespace awdaha
