#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "awdaha/linalg.hpp"

using namespace awdaha;

namespace {

FieldElement fe(long n, long d = 1) { return FieldElement(Rational(n, d)); }

SquareMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    SquareMatrix m(static_cast<int>(rows.size()));
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (long v : row) m.set(i, j++, fe(v));
        ++i;
    }
    return m;
}

Rational rand_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    return Rational(num(rng), den(rng));
}

SquareMatrix rand_matrix(std::mt19937_64& rng, int n) {
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.set(i, j, FieldElement(rand_rational(rng)));
    return m;
}

SquareMatrix rand_symbolic_matrix(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<long> num(-3, 3), exp(-2, 2);
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.set(i, j, make_laurent(Rational(num(rng)), exp(rng)));
    return m;
}

// independent determinant oracle: cofactor expansion along the first row
FieldElement cofactor_det(const SquareMatrix& m) {
    const int n = m.n();
    if (n == 1) return m.at(0, 0);
    FieldElement acc(0);
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        SquareMatrix minor(n - 1);
        for (int r = 1; r < n; ++r)
            for (int c = 0, cc = 0; c < n; ++c) {
                if (c == j) continue;
                minor.set(r - 1, cc++, m.at(r, c));
            }
        FieldElement term = m.at(0, j) * cofactor_det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

Polynomial lin_factor(const FieldElement& root) { return Polynomial{-root, FieldElement(1)}; }

}  // namespace

TEST_CASE("matrix construction, arithmetic, text round-trip") {
    SquareMatrix a = from_rows({{1, 2}, {3, 4}});
    SquareMatrix b = from_rows({{0, 1}, {1, 0}});
    CHECK((a + b) == from_rows({{1, 3}, {4, 4}}));
    CHECK((a - a).is_zero());
    CHECK((a * SquareMatrix::identity(2)) == a);
    CHECK((a * b) == from_rows({{2, 1}, {4, 3}}));
    CHECK(a.transpose() == from_rows({{1, 3}, {2, 4}}));
    CHECK((fe(2) * a) == from_rows({{2, 4}, {6, 8}}));

    CHECK(SquareMatrix::scalar(3, fe(5)).as_scalar().has_value());
    CHECK(*SquareMatrix::scalar(3, fe(5)).as_scalar() == fe(5));
    CHECK(!a.as_scalar().has_value());

    Vec v{fe(1), fe(0)};
    Vec av = a * v;
    CHECK(av[0] == fe(1));
    CHECK(av[1] == fe(3));

    SquareMatrix s(2);
    s.set(0, 0, FieldElement::q());
    s.set(0, 1, fe(1, 2));
    s.set(1, 0, make_laurent(Rational(3), -2));
    s.set(1, 1, FieldElement::q() + fe(1));
    std::string text = s.to_text();
    CHECK(SquareMatrix::from_text(text) == s);
    CHECK(SquareMatrix::from_text(s.to_text()).to_text() == text);

    std::string at = a.to_text();
    CHECK(SquareMatrix::from_text(at) == a);
    CHECK_THROWS_AS(SquareMatrix::from_text("2\n1 2\n3"), ParseError);
    CHECK_THROWS_AS(SquareMatrix::from_text("0\n"), ParseError);
    CHECK_THROWS_AS(SquareMatrix::from_text("1\n5 junk"), ParseError);
}

TEST_CASE("inverse on pinned inputs") {
    for (int n : {1, 2, 3, 5})
        CHECK(inverse(SquareMatrix::identity(n)) == SquareMatrix::identity(n));

    SquareMatrix d = SquareMatrix::diagonal({fe(2), fe(1, 3)});
    CHECK(inverse(d) == SquareMatrix::diagonal({fe(1, 2), fe(3)}));

    CHECK_THROWS_AS(inverse(from_rows({{1, 1}, {0, 0}})), Singular);
}

TEST_CASE("inverse times original is the identity") {
    std::mt19937_64 rng(20240818);
    int found = 0;
    while (found < 25) {
        int n = 1 + static_cast<int>(rng() % 6);
        SquareMatrix m = rand_matrix(rng, n);
        if (determinant(m).is_zero()) continue;
        ++found;
        SquareMatrix inv = inverse(m);
        CHECK((inv * m).is_identity());
        CHECK((m * inv).is_identity());
    }
    int sym_found = 0;
    while (sym_found < 8) {
        int n = 1 + static_cast<int>(rng() % 3);
        SquareMatrix m = rand_symbolic_matrix(rng, n);
        if (determinant(m).is_zero()) continue;
        ++sym_found;
        CHECK((inverse(m) * m).is_identity());
    }
}

TEST_CASE("determinant against cofactor expansion") {
    CHECK(determinant(SquareMatrix::identity(3)) == fe(1));
    CHECK(determinant(SquareMatrix::diagonal({fe(1, 4), fe(1, 4)})) == fe(1, 16));
    CHECK(determinant(from_rows({{1, 1}, {0, 0}})).is_zero());

    std::mt19937_64 rng(20240819);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng() % 5);
        SquareMatrix m = rand_matrix(rng, n);
        CHECK(determinant(m) == cofactor_det(m));
    }
    for (int trial = 0; trial < 10; ++trial) {
        int n = 1 + static_cast<int>(rng() % 3);
        SquareMatrix m = rand_symbolic_matrix(rng, n);
        CHECK(determinant(m) == cofactor_det(m));
    }
    // multiplicativity
    for (int trial = 0; trial < 10; ++trial) {
        SquareMatrix a = rand_matrix(rng, 4), b = rand_matrix(rng, 4);
        CHECK(determinant(a * b) == determinant(a) * determinant(b));
    }
}

TEST_CASE("char_poly on pinned inputs") {
    Polynomial x{FieldElement(0), FieldElement(1)};
    CHECK(char_poly(SquareMatrix::identity(2)) == lin_factor(fe(1)) * lin_factor(fe(1)));
    CHECK(char_poly(SquareMatrix::diagonal({fe(1), fe(2)})) == lin_factor(fe(1)) * lin_factor(fe(2)));
    CHECK(char_poly(from_rows({{0, 1}, {0, 0}})) == x * x);
}

TEST_CASE("char_poly cross-checked at sample points and by Cayley-Hamilton") {
    std::mt19937_64 rng(20240820);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 1 + static_cast<int>(rng() % 5);
        SquareMatrix m = rand_matrix(rng, n);
        Polynomial p = char_poly(m);
        CHECK(p.deg() == n);
        CHECK(p.lc() == FieldElement(1));
        // the dense charpoly walk and plain elimination must agree
        for (long x0 : {0L, 1L, -1L, 2L, 7L}) {
            SquareMatrix shifted = SquareMatrix::scalar(n, fe(x0)) - m;
            CHECK(p.eval(fe(x0)) == cofactor_det(shifted));
        }
    }
    for (int n : {1, 2, 3, 4, 6, 8}) {
        SquareMatrix m = rand_matrix(rng, n);
        CHECK(eval_at(char_poly(m), m).is_zero());
    }
    for (int trial = 0; trial < 6; ++trial) {
        int n = 1 + static_cast<int>(rng() % 3);
        SquareMatrix m = rand_symbolic_matrix(rng, n);
        Polynomial p = char_poly(m);
        CHECK(p.deg() == n);
        CHECK(eval_at(p, m).is_zero());
        SquareMatrix shifted = SquareMatrix::scalar(n, fe(3)) - m;
        CHECK(p.eval(fe(3)) == cofactor_det(shifted));
    }
    // triangular inputs exercise the direct product path
    SquareMatrix tri(3);
    tri.set(0, 0, fe(2));
    tri.set(1, 0, fe(5));
    tri.set(1, 1, fe(3));
    tri.set(2, 1, fe(7));
    tri.set(2, 2, fe(2));
    CHECK(char_poly(tri) == lin_factor(fe(2)) * lin_factor(fe(3)) * lin_factor(fe(2)));
    CHECK(char_poly(tri.transpose()) == char_poly(tri));
}

TEST_CASE("min_poly on pinned inputs and divisibility") {
    Polynomial x{FieldElement(0), FieldElement(1)};
    CHECK(min_poly(SquareMatrix::identity(3)) == lin_factor(fe(1)));
    CHECK(min_poly(from_rows({{0, 1}, {0, 0}})) == x * x);
    CHECK(min_poly(SquareMatrix::diagonal({fe(1), fe(1), fe(2)})) ==
          lin_factor(fe(1)) * lin_factor(fe(2)));

    std::mt19937_64 rng(20240821);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        SquareMatrix m = rand_matrix(rng, n);
        Polynomial mp = min_poly(m), cp = char_poly(m);
        CHECK(eval_at(mp, m).is_zero());
        auto [quo, rem] = divmod(cp, mp);
        CHECK(rem.is_zero());
        if (is_multiplicity_free(m)) CHECK(mp == cp);
    }
}

TEST_CASE("diagonalizability and multiplicity-freeness on pinned inputs") {
    CHECK(is_diagonalizable(SquareMatrix::diagonal({fe(1), fe(1), fe(2)})));
    CHECK(!is_diagonalizable(from_rows({{0, 1}, {0, 0}})));

    CHECK(is_multiplicity_free(SquareMatrix::diagonal({fe(1), fe(2), fe(3)})));
    CHECK(!is_multiplicity_free(SquareMatrix::diagonal({fe(1), fe(1)})));
    CHECK(is_multiplicity_free(SquareMatrix::identity(1)));

    // conjugated diagonal matrices with repeated entries stay diagonalizable
    std::mt19937_64 rng(20240822);
    for (int trial = 0; trial < 10; ++trial) {
        SquareMatrix p = rand_matrix(rng, 4);
        if (determinant(p).is_zero()) continue;
        SquareMatrix d = SquareMatrix::diagonal({fe(1), fe(1), fe(2), fe(5, 3)});
        SquareMatrix m = p * d * inverse(p);
        CHECK(is_diagonalizable(m));
        CHECK(!is_multiplicity_free(m));
    }
    // nonzero nilpotent conjugates are never diagonalizable
    for (int trial = 0; trial < 10; ++trial) {
        SquareMatrix p = rand_matrix(rng, 3);
        if (determinant(p).is_zero()) continue;
        SquareMatrix nil(3);
        nil.set(0, 1, fe(1));
        nil.set(1, 2, fe(1));
        CHECK(!is_diagonalizable(p * nil * inverse(p)));
    }
}

TEST_CASE("eigenspaces on pinned inputs") {
    Subspace full = eigenspace(SquareMatrix::identity(2), fe(1));
    CHECK(full.dim() == 2);

    Subspace none = eigenspace(SquareMatrix::diagonal({fe(1), fe(2)}), fe(3));
    CHECK(none.dim() == 0);

    Subspace second = eigenspace(SquareMatrix::diagonal({fe(1), fe(2)}), fe(2));
    CHECK(second.dim() == 1);
    CHECK(second.contains(Vec{fe(0), fe(1)}));
    CHECK(!second.contains(Vec{fe(1), fe(0)}));

    SquareMatrix dq = SquareMatrix::diagonal({FieldElement::q(), FieldElement::q() * FieldElement::q()});
    CHECK(eigenspace(dq, FieldElement::q()).dim() == 1);
    CHECK(eigenspace(dq, FieldElement::q()).contains(Vec{FieldElement(1), FieldElement(0)}));

    Subspace ker = nullspace(from_rows({{1, 1}, {1, 1}}));
    CHECK(ker.dim() == 1);
    CHECK(ker.contains(Vec{fe(1), fe(-1)}));
}

TEST_CASE("eigenspace dimensions certify diagonalizability when the spectrum splits") {
    std::mt19937_64 rng(20240823);
    int checked = 0;
    while (checked < 15) {
        int n = 2 + static_cast<int>(rng() % 4);
        // conjugate a random diagonal matrix to guarantee a split spectrum
        SquareMatrix p = rand_matrix(rng, n);
        if (determinant(p).is_zero()) continue;
        std::vector<FieldElement> eigs;
        for (int i = 0; i < n; ++i) eigs.push_back(fe(static_cast<long>(rng() % 4)));
        SquareMatrix m = p * SquareMatrix::diagonal(eigs) * inverse(p);
        RootList rl = rational_roots(char_poly(m));
        REQUIRE(rl.splits);
        int total = 0;
        for (const auto& [root, mult] : rl.roots) total += eigenspace(m, root).dim();
        CHECK(total == n);
        CHECK(is_diagonalizable(m));
        ++checked;
    }
    // defective matrix: eigenspace sum falls short
    SquareMatrix jordan = from_rows({{2, 1}, {0, 2}});
    RootList rl = rational_roots(char_poly(jordan));
    REQUIRE(rl.splits);
    int total = 0;
    for (const auto& [root, mult] : rl.roots) total += eigenspace(jordan, root).dim();
    CHECK(total == 1);
    CHECK(!is_diagonalizable(jordan));
}

TEST_CASE("rational_roots on pinned inputs") {
    Polynomial p = lin_factor(fe(1)) * lin_factor(fe(2));
    RootList rl = rational_roots(p);
    CHECK(rl.splits);
    REQUIRE(rl.roots.size() == 2);
    CHECK(rl.roots[0] == std::pair{fe(1), 1});
    CHECK(rl.roots[1] == std::pair{fe(2), 1});

    Polynomial x2p1{FieldElement(1), FieldElement(0), FieldElement(1)};
    RootList irr = rational_roots(x2p1);
    CHECK(!irr.splits);
    CHECK(irr.roots.empty());

    // low-degree closed forms
    RootList lin = rational_roots(Polynomial{fe(3), fe(-2)});
    CHECK(lin.splits);
    CHECK(lin.roots == std::vector{std::pair{fe(3, 2), 1}});
    RootList quad = rational_roots(Polynomial{fe(-9, 4), FieldElement(0), FieldElement(1)});
    CHECK(quad.splits);
    REQUIRE(quad.roots.size() == 2);
    CHECK(quad.roots[0].first == fe(-3, 2));
    CHECK(quad.roots[1].first == fe(3, 2));
    CHECK(!rational_roots(Polynomial{fe(-2), FieldElement(0), FieldElement(1)}).splits);

    CHECK_THROWS_AS(rational_roots(Polynomial()), Error);
    RootList constant = rational_roots(Polynomial{fe(5)});
    CHECK(constant.splits);
    CHECK(constant.roots.empty());
}

TEST_CASE("rational_roots recovers constructed spectra over the rationals") {
    std::mt19937_64 rng(20240824);
    Polynomial x2p1{FieldElement(1), FieldElement(0), FieldElement(1)};
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::pair<FieldElement, int>> want;
        int k = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < k; ++i) {
            FieldElement r = FieldElement(rand_rational(rng));
            bool dup = false;
            for (auto& [w, mult] : want)
                if (w == r) {
                    ++mult;
                    dup = true;
                }
            if (!dup) want.emplace_back(r, 1 + static_cast<int>(rng() % 2));
        }
        std::sort(want.begin(), want.end(),
                  [](const auto& a, const auto& b) { return scalar_less(a.first, b.first); });
        bool blocked = (rng() % 2) == 0;
        Polynomial p{FieldElement(1)};
        for (const auto& [r, mult] : want)
            for (int i = 0; i < mult; ++i) p = p * lin_factor(r);
        if (blocked) p = p * x2p1;
        p = fe(static_cast<long>(1 + rng() % 5)) * p;  // non-monic inputs too

        RootList rl = rational_roots(p);
        CHECK(rl.splits == !blocked);
        CHECK(rl.roots == want);
    }
    // large numerators and denominators push past the lifting bound logic
    Polynomial big = lin_factor(fe(1234567, 89)) * lin_factor(fe(-98765, 4321)) * lin_factor(fe(1));
    RootList rl = rational_roots(big);
    CHECK(rl.splits);
    REQUIRE(rl.roots.size() == 3);
    CHECK(rl.roots[0].first == fe(-98765, 4321));
    CHECK(rl.roots[1].first == fe(1));
    CHECK(rl.roots[2].first == fe(1234567, 89));
}

TEST_CASE("rational_roots recovers constructed spectra over the function field") {
    FieldElement q = FieldElement::q();
    std::vector<FieldElement> pool{
        q,
        q * q,
        make_laurent(Rational(3, 2), -1),
        q + FieldElement(1),
        FieldElement(Rational(5, 7)),
        make_laurent(Rational(1), -3),
        (q + FieldElement(1)) * (q - FieldElement(2)).inverse(),
    };
    std::mt19937_64 rng(20240825);
    Polynomial x2pq{q, FieldElement(0), FieldElement(1)};  // no root: odd q-degree
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<std::pair<FieldElement, int>> want;
        int k = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < k; ++i) {
            FieldElement r = pool[rng() % pool.size()];
            bool dup = false;
            for (auto& [w, mult] : want)
                if (w == r) {
                    ++mult;
                    dup = true;
                }
            if (!dup) want.emplace_back(r, 1 + static_cast<int>(rng() % 2));
        }
        std::sort(want.begin(), want.end(),
                  [](const auto& a, const auto& b) { return scalar_less(a.first, b.first); });
        bool blocked = (rng() % 2) == 0;
        Polynomial p{FieldElement(1)};
        for (const auto& [r, mult] : want)
            for (int i = 0; i < mult; ++i) p = p * lin_factor(r);
        if (blocked) p = p * x2pq;

        RootList rl = rational_roots(p);
        CHECK(rl.splits == !blocked);
        CHECK(rl.roots == want);
    }
}

TEST_CASE("span builder and subspace canonical form") {
    SpanBuilder sb(3);
    CHECK(sb.insert(Vec{fe(2), fe(0), fe(2)}));
    CHECK(sb.insert(Vec{fe(0), fe(3), fe(3)}));
    CHECK(!sb.insert(Vec{fe(2), fe(3), fe(5)}));  // dependent on the first two
    CHECK(sb.dim() == 2);
    CHECK(sb.contains(Vec{fe(1), fe(-1), fe(0)}));
    CHECK(!sb.contains(Vec{fe(0), fe(0), fe(1)}));

    // two spanning sets of one plane produce identical canonical bases
    Subspace s1 = Subspace::from_vectors(3, {Vec{fe(2), fe(0), fe(2)}, Vec{fe(0), fe(3), fe(3)}});
    Subspace s2 = Subspace::from_vectors(3, {Vec{fe(2), fe(3), fe(5)}, Vec{fe(2), fe(-3), fe(-1)}});
    CHECK(s1 == s2);
    CHECK(s1.dim() == 2);
    CHECK(s1.basis[0] == Vec{fe(1), fe(0), fe(1)});
    CHECK(s1.basis[1] == Vec{fe(0), fe(1), fe(1)});

    auto coords = solve_coordinates(s1.basis, Vec{fe(3), fe(-2), fe(1)});
    REQUIRE(coords.has_value());
    CHECK((*coords)[0] == fe(3));
    CHECK((*coords)[1] == fe(-2));
    CHECK(!solve_coordinates(s1.basis, Vec{fe(0), fe(0), fe(1)}).has_value());
}
