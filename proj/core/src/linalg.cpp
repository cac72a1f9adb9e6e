#include "awdaha/linalg.hpp"

#include <algorithm>

namespace awdaha {

namespace {

int first_nonzero(const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return static_cast<int>(i);
    return -1;
}

// c is taken by value: callers pass coefficients living inside target
void axpy(Vec& target, FieldElement c, const Vec& src) {
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < target.size(); ++i) {
        if (src[i].is_zero()) continue;
        target[i] = target[i] - c * src[i];
    }
}

}  // namespace

void SpanBuilder::reduce(Vec& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const auto p = static_cast<std::size_t>(pivots_[k]);
        if (!v[p].is_zero()) axpy(v, v[p], rows_[k]);
    }
}

bool SpanBuilder::insert(Vec v) {
    reduce(v);
    int p = first_nonzero(v);
    if (p < 0) return false;
    FieldElement inv = v[static_cast<std::size_t>(p)].inverse();
    for (auto& x : v) x = inv * x;
    // clear the new pivot column in the old rows to keep full reduction
    for (std::size_t k = 0; k < rows_.size(); ++k)
        axpy(rows_[k], rows_[k][static_cast<std::size_t>(p)], v);
    auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), p);
    auto idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
    return true;
}

bool SpanBuilder::contains(Vec v) const {
    reduce(v);
    return first_nonzero(v) < 0;
}

Subspace Subspace::from_vectors(int ambient, const std::vector<Vec>& vectors) {
    SpanBuilder sb(ambient);
    for (const auto& v : vectors) sb.insert(v);
    Subspace s;
    s.ambient = ambient;
    s.basis = sb.rows();
    return s;
}

bool Subspace::contains(const Vec& v) const {
    SpanBuilder sb(ambient);
    for (const auto& r : basis) sb.insert(r);
    return sb.contains(v);
}

SquareMatrix inverse(const SquareMatrix& m) {
    const int n = m.n();
    // Gauss-Jordan on [M | I]
    std::vector<Vec> rows(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(2 * n)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) rows[i][static_cast<std::size_t>(j)] = m.at(i, j);
        rows[i][static_cast<std::size_t>(n + i)] = FieldElement(1);
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!rows[r][static_cast<std::size_t>(col)].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw Singular();
        std::swap(rows[static_cast<std::size_t>(col)], rows[static_cast<std::size_t>(piv)]);
        FieldElement inv = rows[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)].inverse();
        for (auto& x : rows[static_cast<std::size_t>(col)]) x = inv * x;
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            axpy(rows[static_cast<std::size_t>(r)],
                 rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)],
                 rows[static_cast<std::size_t>(col)]);
        }
    }
    SquareMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.set(i, j, rows[i][static_cast<std::size_t>(n + j)]);
    return out;
}

FieldElement determinant(const SquareMatrix& m) {
    const int n = m.n();
    std::vector<Vec> rows(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[i][static_cast<std::size_t>(j)] = m.at(i, j);
    FieldElement det(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!rows[r][static_cast<std::size_t>(col)].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return FieldElement(0);
        if (piv != col) {
            std::swap(rows[static_cast<std::size_t>(col)], rows[static_cast<std::size_t>(piv)]);
            det = -det;
        }
        const FieldElement& pv = rows[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        det = det * pv;
        FieldElement inv = pv.inverse();
        for (int r = col + 1; r < n; ++r) {
            FieldElement f = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] * inv;
            axpy(rows[static_cast<std::size_t>(r)], f, rows[static_cast<std::size_t>(col)]);
        }
    }
    return det;
}

namespace {

enum class Tri { no, lower, upper };

Tri triangular_kind(const SquareMatrix& m) {
    bool lower = true, upper = true;
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) {
            if (i < j && !m.at(i, j).is_zero()) lower = false;
            if (i > j && !m.at(i, j).is_zero()) upper = false;
        }
    if (lower) return Tri::lower;
    if (upper) return Tri::upper;
    return Tri::no;
}

}  // namespace

Polynomial char_poly(const SquareMatrix& m) {
    const int n = m.n();
    if (triangular_kind(m) != Tri::no) {
        Polynomial p{FieldElement(1)};
        for (int i = 0; i < n; ++i) p = p * Polynomial{-m.at(i, i), FieldElement(1)};
        return p;
    }
    // Samuelson-Berkowitz: walk principal submatrices from the bottom
    // right; each step multiplies the coefficient vector by the Toeplitz
    // column (1, -a, -RC, -RBC, -RB^2C, ...) of the current partition
    //   [ a R ]
    //   [ C B ]
    std::vector<FieldElement> p{FieldElement(1)};  // highest power first
    for (int i = n - 1; i >= 0; --i) {
        const int msz = n - i;
        std::vector<FieldElement> t(static_cast<std::size_t>(msz) + 1);
        t[0] = FieldElement(1);
        t[1] = -m.at(i, i);
        std::vector<FieldElement> w(static_cast<std::size_t>(n - i - 1));
        for (int k = 0; k < n - i - 1; ++k) w[static_cast<std::size_t>(k)] = m.at(i + 1 + k, i);
        for (int j = 2; j <= msz; ++j) {
            FieldElement acc;
            for (int k = 0; k < n - i - 1; ++k) {
                if (m.at(i, i + 1 + k).is_zero() || w[static_cast<std::size_t>(k)].is_zero()) continue;
                acc = acc + m.at(i, i + 1 + k) * w[static_cast<std::size_t>(k)];
            }
            t[static_cast<std::size_t>(j)] = -acc;
            if (j < msz) {
                std::vector<FieldElement> nw(w.size());
                for (int r = 0; r < n - i - 1; ++r) {
                    FieldElement s;
                    for (int c = 0; c < n - i - 1; ++c) {
                        if (m.at(i + 1 + r, i + 1 + c).is_zero() || w[static_cast<std::size_t>(c)].is_zero())
                            continue;
                        s = s + m.at(i + 1 + r, i + 1 + c) * w[static_cast<std::size_t>(c)];
                    }
                    nw[static_cast<std::size_t>(r)] = s;
                }
                w = std::move(nw);
            }
        }
        // the Toeplitz factor has msz+1 rows, so the product truncates
        // at degree index msz
        std::vector<FieldElement> np(static_cast<std::size_t>(msz) + 1);
        for (std::size_t j = 0; j < t.size(); ++j) {
            if (t[j].is_zero()) continue;
            for (std::size_t k = 0; k < p.size() && j + k < np.size(); ++k)
                np[j + k] = np[j + k] + t[j] * p[k];
        }
        p = std::move(np);
    }
    std::reverse(p.begin(), p.end());
    return Polynomial(std::move(p));
}

Polynomial min_poly(const SquareMatrix& m) {
    const int n = m.n();
    Polynomial acc{FieldElement(1)};
    SpanBuilder seen(n);
    for (int s = 0; s < n && acc.deg() < n; ++s) {
        Vec e(static_cast<std::size_t>(n));
        e[static_cast<std::size_t>(s)] = FieldElement(1);
        if (seen.contains(e)) continue;
        std::vector<Vec> chain;
        SpanBuilder kry(n);
        Vec v = e;
        while (kry.insert(v)) {
            chain.push_back(v);
            v = m * v;
        }
        auto coords = solve_coordinates(chain, v);
        if (!coords) throw Error("krylov chain lost closure");
        std::vector<FieldElement> c(chain.size() + 1);
        for (std::size_t j = 0; j < chain.size(); ++j) c[j] = -(*coords)[j];
        c.back() = FieldElement(1);
        acc = lcm_monic(acc, Polynomial(std::move(c)));
        for (const auto& w : chain) seen.insert(w);
    }
    return acc;
}

bool is_diagonalizable(const SquareMatrix& m) { return is_squarefree(min_poly(m)); }

bool is_multiplicity_free(const SquareMatrix& m) { return is_squarefree(char_poly(m)); }

std::vector<Vec> homogeneous_kernel(const std::vector<Vec>& rows, int width) {
    SpanBuilder rowspace(width);
    for (const auto& r : rows) rowspace.insert(r);
    std::vector<bool> is_pivot(static_cast<std::size_t>(width), false);
    for (int p : rowspace.pivots()) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<Vec> kernel;
    for (int f = 0; f < width; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        Vec v(static_cast<std::size_t>(width));
        v[static_cast<std::size_t>(f)] = FieldElement(1);
        for (std::size_t k = 0; k < rowspace.rows().size(); ++k)
            v[static_cast<std::size_t>(rowspace.pivots()[k])] =
                -rowspace.rows()[k][static_cast<std::size_t>(f)];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

Subspace nullspace(const SquareMatrix& m) {
    const int n = m.n();
    std::vector<Vec> rows(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j);
    return Subspace::from_vectors(n, homogeneous_kernel(rows, n));
}

Subspace eigenspace(const SquareMatrix& m, const FieldElement& lambda) {
    return nullspace(m - SquareMatrix::scalar(m.n(), lambda));
}

SquareMatrix eval_at(const Polynomial& p, const SquareMatrix& m) {
    SquareMatrix acc(m.n());
    for (int i = p.deg(); i >= 0; --i) {
        acc = acc * m;
        if (!p.coeff(i).is_zero()) acc = acc + SquareMatrix::scalar(m.n(), p.coeff(i));
    }
    return acc;
}

std::optional<Vec> solve_coordinates(const std::vector<Vec>& basis, const Vec& v) {
    if (basis.empty()) {
        if (first_nonzero(v) < 0) return Vec{};
        return std::nullopt;
    }
    const auto width = basis[0].size();
    const std::size_t k = basis.size();
    // columns = basis vectors, augmented with v; eliminate and read back
    std::vector<Vec> rows(width, Vec(k + 1));
    for (std::size_t i = 0; i < width; ++i) {
        for (std::size_t j = 0; j < k; ++j) rows[i][j] = basis[j][i];
        rows[i][k] = v[i];
    }
    std::vector<int> pivot_row_of_col(k, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < k && rank < width; ++col) {
        std::size_t piv = width;
        for (std::size_t r = rank; r < width; ++r)
            if (!rows[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv == width) continue;  // basis not independent; tolerated
        std::swap(rows[rank], rows[piv]);
        FieldElement inv = rows[rank][col].inverse();
        for (auto& x : rows[rank]) x = inv * x;
        for (std::size_t r = 0; r < width; ++r) {
            if (r == rank) continue;
            axpy(rows[r], rows[r][col], rows[rank]);
        }
        pivot_row_of_col[col] = static_cast<int>(rank);
        ++rank;
    }
    // consistent iff no row reads 0 = nonzero
    for (std::size_t r = rank; r < width; ++r)
        if (!rows[r][k].is_zero()) return std::nullopt;
    Vec out(k);
    for (std::size_t col = 0; col < k; ++col)
        if (pivot_row_of_col[col] >= 0)
            out[col] = rows[static_cast<std::size_t>(pivot_row_of_col[col])][k];
    return out;
}

}  // namespace awdaha
