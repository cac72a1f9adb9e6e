#include <optional>
#include <string>
#include <vector>

#include "awdaha/analysis.hpp"
#include "awdaha/errors.hpp"

namespace awdaha {

namespace {

// eigendecomposition of an operator whose spectrum is simple and splits:
// values sorted canonically, u's columns the matching eigenvectors
struct EigenSystem {
    std::vector<FieldElement> values;
    std::optional<SquareMatrix> u, u_inv;
    std::string why;  // empty when usable
};

EigenSystem eigen_system(const SquareMatrix& x) {
    EigenSystem es;
    const RootList rl = rational_roots(char_poly(x));
    if (!rl.splits) {
        es.why = "spectrum does not split over the working field";
        return es;
    }
    for (const auto& [root, mult] : rl.roots) {
        if (mult > 1) {
            es.why = "spectrum has a repeated eigenvalue";
            return es;
        }
    }
    const int n = x.n();
    SquareMatrix u(n);
    int col = 0;
    for (const auto& [root, mult] : rl.roots) {
        const Subspace space = eigenspace(x, root);
        if (space.dim() != 1) throw Error("simple eigenvalue with eigenspace dimension != 1");
        for (int i = 0; i < n; ++i) u.set(i, col, space.basis[0][static_cast<std::size_t>(i)]);
        es.values.push_back(root);
        ++col;
    }
    es.u_inv = inverse(u);
    es.u = std::move(u);
    return es;
}

// Vertex order of the single simple path formed by the off-diagonal
// support of y, requiring both directed entries nonzero on every edge;
// nullopt when the pattern is anything else.  The order starts at the
// endpoint with the smaller index.
std::optional<std::vector<int>> tridiagonal_path(const SquareMatrix& y) {
    const int n = y.n();
    if (n == 1) return std::vector<int>{0};
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const bool ij = !y.at(i, j).is_zero();
            const bool ji = !y.at(j, i).is_zero();
            if (ij != ji) return std::nullopt;  // a one-sided zero on a needed edge
            if (ij) {
                adj[static_cast<std::size_t>(i)].push_back(j);
                adj[static_cast<std::size_t>(j)].push_back(i);
            }
        }
    }
    int start = -1;
    for (int i = 0; i < n; ++i) {
        const std::size_t deg = adj[static_cast<std::size_t>(i)].size();
        if (deg > 2 || deg == 0) return std::nullopt;
        if (deg == 1 && start < 0) start = i;
    }
    if (start < 0) return std::nullopt;  // all degrees 2: contains a cycle
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (static_cast<int>(order.size()) < n) {
        int next = -1;
        for (int nb : adj[static_cast<std::size_t>(cur)]) {
            if (nb != prev) {
                next = nb;
                break;
            }
        }
        if (next < 0) return std::nullopt;  // walk ended early: disconnected
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

struct ConditionResult {
    std::optional<std::vector<int>> order;
    std::string why;
};

// one Leonard condition: in the eigenbasis of the diagonalized operator,
// every partner must be irreducible tridiagonal under one common ordering
ConditionResult one_condition(const EigenSystem& es, const char* diag_name,
                              const std::vector<const SquareMatrix*>& partners) {
    ConditionResult res;
    if (!es.why.empty()) {
        res.why = std::string(diag_name) + ": " + es.why;
        return res;
    }
    std::optional<std::vector<int>> common;
    for (const SquareMatrix* p : partners) {
        const SquareMatrix expressed = *es.u_inv * *p * *es.u;
        auto path = tridiagonal_path(expressed);
        if (!path) {
            res.why = std::string(diag_name) +
                      ": a partner is not an irreducible tridiagonal pattern in the eigenbasis";
            return res;
        }
        if (common && *common != *path) {
            res.why = std::string(diag_name) + ": partners require different orderings";
            return res;
        }
        common = std::move(path);
    }
    res.order = std::move(common);
    return res;
}

}  // namespace

LeonardVerdict leonard_pair_check(const SquareMatrix& l, const SquareMatrix& lstar) {
    LeonardVerdict v;
    v.multiplicity_free = {is_multiplicity_free(l), is_multiplicity_free(lstar)};
    const EigenSystem el = eigen_system(l);
    const EigenSystem es = eigen_system(lstar);
    const ConditionResult c1 = one_condition(el, "first operator", {&lstar});
    const ConditionResult c2 = one_condition(es, "second operator", {&l});
    if (c1.order && c2.order) {
        v.result = true;
        v.certificate = {*c1.order, *c2.order};
    } else {
        v.reason = !c1.order ? c1.why : c2.why;
    }
    return v;
}

LeonardVerdict leonard_triple_check(const SquareMatrix& a, const SquareMatrix& b,
                                    const SquareMatrix& c) {
    LeonardVerdict v;
    v.multiplicity_free = {is_multiplicity_free(a), is_multiplicity_free(b),
                           is_multiplicity_free(c)};
    const ConditionResult ra = one_condition(eigen_system(a), "A", {&b, &c});
    const ConditionResult rb = one_condition(eigen_system(b), "B", {&a, &c});
    const ConditionResult rc = one_condition(eigen_system(c), "C", {&a, &b});
    if (ra.order && rb.order && rc.order) {
        v.result = true;
        v.certificate = {*ra.order, *rb.order, *rc.order};
    } else {
        v.reason = !ra.order ? ra.why : (!rb.order ? rb.why : rc.why);
    }
    return v;
}

}  // namespace awdaha
