#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "awdaha/linalg.hpp"
#include "awdaha/realizations.hpp"

using namespace awdaha;

namespace {

FieldElement fe(long n, long d = 1) { return FieldElement(Rational(n, d)); }

Polynomial lin_factor(const FieldElement& root) { return Polynomial{-root, FieldElement(1)}; }

bool commutes(const SquareMatrix& x, const SquareMatrix& y) { return x * y == y * x; }

// the four generator relations every DAHA realization must satisfy
void check_daha_relations(const DahaRealization& m) {
    const SquareMatrix id = SquareMatrix::identity(m.n());
    for (int i = 0; i < 4; ++i) {
        CHECK(m.t[i] * m.t_inv[i] == id);
        CHECK(m.t[i] + m.t_inv[i] == SquareMatrix::scalar(m.n(), m.c[i]));
    }
    CHECK(m.t[0] * m.t[1] * m.t[2] * m.t[3] == SquareMatrix::scalar(m.n(), m.q.inverse()));
}

// scalars by which the three central combinations act; the test recomputes
// them from scratch rather than trusting the builder
void check_aw_centrality(const AwRealization& w, const CentralCharacter& expect) {
    const FieldElement q = w.q, qi = w.q.inverse();
    const FieldElement norm = (q + qi) / (q * q - qi * qi);
    const SquareMatrix am =
        (q + qi) * w.A + norm * (q * (w.B * w.C) - qi * (w.C * w.B));
    const SquareMatrix bm =
        (q + qi) * w.B + norm * (q * (w.C * w.A) - qi * (w.A * w.C));
    const SquareMatrix cm =
        (q + qi) * w.C + norm * (q * (w.A * w.B) - qi * (w.B * w.A));
    CHECK(am == SquareMatrix::scalar(w.n(), expect.alpha));
    CHECK(bm == SquareMatrix::scalar(w.n(), expect.beta));
    CHECK(cm == SquareMatrix::scalar(w.n(), expect.gamma));
}

DahaSpecE espec(int d, FieldElement q, FieldElement k0, FieldElement k1, FieldElement k2,
                FieldElement k3) {
    return DahaSpecE{d, std::move(q), {std::move(k0), std::move(k1), std::move(k2), std::move(k3)}};
}

DahaSpecO ospec(int d, FieldElement q, FieldElement k0, FieldElement k1, FieldElement k2,
                FieldElement k3) {
    return DahaSpecO{d, std::move(q), {std::move(k0), std::move(k1), std::move(k2), std::move(k3)}};
}

// closes the product constraint: k3 = q^{-d-1}/(k0*k1*k2)
DahaSpecO ospec_auto(int d, FieldElement q, FieldElement k0, FieldElement k1, FieldElement k2) {
    FieldElement k3 = q.pow(-d - 1) / (k0 * k1 * k2);
    return ospec(d, std::move(q), std::move(k0), std::move(k1), std::move(k2), std::move(k3));
}

}  // namespace

TEST_CASE("one-dimensional AW build is the three scalar sums") {
    AwRealization w = build_vd(VdSpec{0, fe(2), fe(2), fe(3), fe(5)});
    CHECK(w.A == SquareMatrix::scalar(1, fe(5, 2)));
    CHECK(w.B == SquareMatrix::scalar(1, fe(10, 3)));
    CHECK(w.C == SquareMatrix::scalar(1, fe(26, 5)));
    REQUIRE(w.character.has_value());
    check_aw_centrality(w, *w.character);
}

TEST_CASE("AW build: diagonal and off-diagonal entries against hand evaluation") {
    AwRealization w = build_vd(VdSpec{1, fe(2), fe(2), fe(3), fe(5)});
    // theta_i = a q^{2i-d} + a^-1 q^{d-2i} at d=1, q=2, a=2
    CHECK(w.A.at(0, 0) == fe(2));
    CHECK(w.A.at(1, 1) == fe(17, 4));
    CHECK(w.A.at(1, 0) == fe(1));
    CHECK(w.A.at(0, 1) == fe(0));
    // theta*_i uses b in place of a
    CHECK(w.B.at(0, 0) == fe(3, 2) + fe(2, 3));
    CHECK(w.B.at(1, 1) == fe(6) + fe(1, 6));
    // phi_1 evaluated by hand: (2/3)(3/2)(-3/2)(-29/2)(-1/10) = -87/40
    CHECK(w.B.at(0, 1) == fe(-87, 40));
    CHECK(w.B.at(1, 0) == fe(0));
}

TEST_CASE("AW build satisfies the three centrality identities") {
    std::vector<VdSpec> specs = {
        {2, fe(2), fe(3), fe(3), fe(3)},
        {3, fe(2), fe(4), fe(1, 3), fe(7)},
        {4, fe(3, 2), fe(2), fe(5), fe(-1, 2)},
        {3, FieldElement::q(), make_laurent(Rational(1), 2), fe(3), FieldElement::q() + fe(1)},
    };
    for (const VdSpec& s : specs) {
        AwRealization w = build_vd(s);
        REQUIRE(w.character.has_value());
        check_aw_centrality(w, *w.character);
    }
}

TEST_CASE("AW build rejects bad specs") {
    CHECK_THROWS_AS(build_vd(VdSpec{-1, fe(2), fe(2), fe(3), fe(5)}), InvalidSpec);
    CHECK_THROWS_AS(build_vd(VdSpec{2, fe(2), fe(0), fe(3), fe(5)}), InvalidSpec);
    CHECK_THROWS_AS(build_vd(VdSpec{2, fe(1), fe(2), fe(3), fe(5)}), InvalidSpec);
    CHECK_THROWS_AS(build_vd(VdSpec{2, fe(-1), fe(2), fe(3), fe(5)}), InvalidSpec);
    CHECK_THROWS_AS(build_vd(VdSpec{2, fe(0), fe(2), fe(3), fe(5)}), InvalidSpec);
}

TEST_CASE("two-dimensional E build: t0 scalar, determinants, relations") {
    DahaRealization m = build_e(espec(1, fe(4), fe(1, 4), fe(2), fe(3), fe(5)));
    CHECK(m.t[0] == SquareMatrix::scalar(2, fe(1, 4)));
    CHECK(determinant(m.t[0]) == fe(1, 16));
    check_daha_relations(m);
}

TEST_CASE("E build: column actions pinned by hand for the smallest case") {
    // d=1, q=4, k=(1/4, 2, 3, 5): every branch with content is a single rule
    DahaRealization m = build_e(espec(1, fe(4), fe(1, 4), fe(2), fe(3), fe(5)));
    // t1 v0 = k1 v0 + k1^-1 v1; t1 v1 = k1^-1 v1
    CHECK(m.t[1].at(0, 0) == fe(2));
    CHECK(m.t[1].at(1, 0) == fe(1, 2));
    CHECK(m.t[1].at(0, 1) == fe(0));
    CHECK(m.t[1].at(1, 1) == fe(1, 2));
    // t2 v0 = u(v0 - v1) with u = (k0 k1 k3)^-1 q^-1
    const FieldElement u = fe(1, 10);
    CHECK(m.t[2].at(0, 0) == u);
    CHECK(m.t[2].at(1, 0) == -u);
    // t2 v1 = (w-k2)(w-k2^-1)/w v0 + (k2+k2^-1 - u') v1, w = k0 k1 k3 q, u' = 1/w
    const FieldElement w = fe(10);
    CHECK(m.t[2].at(0, 1) == (w - fe(3)) * (w - fe(1, 3)) / w);
    CHECK(m.t[2].at(1, 1) == fe(3) + fe(1, 3) - fe(1, 10));
    // t3 v0 = k3 v0; t3 v1 = -k3^-1 (w-k2)(w-k2^-1) v0 + k3^-1 v1
    CHECK(m.t[3].at(0, 0) == fe(5));
    CHECK(m.t[3].at(1, 0) == fe(0));
    CHECK(m.t[3].at(0, 1) == fe(-1, 5) * (w - fe(3)) * (w - fe(1, 3)));
    CHECK(m.t[3].at(1, 1) == fe(1, 5));
}

TEST_CASE("E build: relations and generator determinants across specs") {
    std::vector<DahaSpecE> specs = {
        espec(1, fe(4), fe(-1, 4), fe(2), fe(3), fe(5)),
        espec(3, fe(2), fe(1, 4), fe(1), fe(1), fe(1)),
        espec(3, fe(2), fe(1, 4), fe(3), fe(5), fe(7)),
        espec(5, fe(2), fe(1, 8), fe(2, 3), fe(-4), fe(9)),
        espec(3, fe(3, 2), fe(4, 9), fe(5), fe(1, 7), fe(-2)),
        espec(3, FieldElement::q(), make_laurent(Rational(1), -2), fe(2), fe(3),
              make_laurent(Rational(5), 1)),
    };
    for (const DahaSpecE& s : specs) {
        DahaRealization m = build_e(s);
        check_daha_relations(m);
        CHECK(determinant(m.t[0]) == s.q.pow(-s.d - 1));
        CHECK(determinant(m.t[1]) == fe(1));
        CHECK(determinant(m.t[2]) == fe(1));
        CHECK(determinant(m.t[3]) == fe(1));
        // k1^-1 fixes every odd basis vector
        CHECK(m.t[1].at(1, 1) == s.k[1].inverse());
    }
}

TEST_CASE("E build: char poly of t0*t1 equals the closed-form eigenvalue list") {
    std::vector<DahaSpecE> specs = {
        espec(3, fe(2), fe(1, 4), fe(3), fe(5), fe(7)),
        espec(5, fe(2), fe(-1, 8), fe(2), fe(-3, 2), fe(4)),
        espec(3, FieldElement::q(), make_laurent(Rational(1), -2), fe(2), fe(3), fe(5)),
    };
    for (const DahaSpecE& s : specs) {
        DahaRealization m = build_e(s);
        Polynomial expect{FieldElement(1)};
        const FieldElement k01 = s.k[0] * s.k[1];
        for (int i = 0; i <= s.d - 1; i += 2) expect = expect * lin_factor(k01 * s.q.pow(i));
        for (int i = 1; i <= s.d; i += 2) {
            expect = expect * lin_factor(k01.inverse() * s.q.pow(-i - 1));
        }
        CHECK(char_poly(m.t[0] * m.t[1]) == expect);
        CHECK(char_poly(m.t[1] * m.t[0]) == expect);
    }
}

TEST_CASE("E build rejects bad specs") {
    CHECK_THROWS_AS(build_e(espec(2, fe(2), fe(1, 2), fe(1), fe(1), fe(1))), InvalidSpec);
    CHECK_THROWS_AS(build_e(espec(-1, fe(2), fe(1), fe(1), fe(1), fe(1))), InvalidSpec);
    // k0^2 != q^{-d-1}
    CHECK_THROWS_AS(build_e(espec(1, fe(4), fe(1, 2), fe(1), fe(1), fe(1))), InvalidSpec);
    CHECK_THROWS_AS(build_e(espec(1, fe(4), fe(1, 4), fe(0), fe(1), fe(1))), InvalidSpec);
    CHECK_THROWS_AS(build_e(espec(1, fe(1), fe(1), fe(1), fe(1), fe(1))), InvalidSpec);
}

TEST_CASE("O build: one-dimensional case is the scalar tuple") {
    DahaRealization m = build_o(ospec_auto(0, fe(2), fe(2), fe(3), fe(5)));
    CHECK(m.t[0] == SquareMatrix::scalar(1, fe(2)));
    CHECK(m.t[1] == SquareMatrix::scalar(1, fe(3)));
    CHECK(m.t[2] == SquareMatrix::scalar(1, fe(5)));
    CHECK(m.t[3] == SquareMatrix::scalar(1, fe(1, 60)));
    check_daha_relations(m);
}

TEST_CASE("O build: d=2 determinants and fixed vectors") {
    DahaRealization m = build_o(ospec_auto(2, fe(2), fe(2), fe(3), fe(5)));
    CHECK(m.k[3] == fe(1, 240));
    CHECK(determinant(m.t[2]) == fe(5));
    // t3 fixes the even basis vectors with factor k3
    const FieldElement k3 = m.k[3];
    for (int i : {0, 2}) {
        for (int r = 0; r < 3; ++r) {
            CHECK(m.t[3].at(r, i) == (r == i ? k3 : fe(0)));
        }
    }
    check_daha_relations(m);
}

TEST_CASE("O build: relations and generator determinants across specs") {
    std::vector<DahaSpecO> specs = {
        ospec_auto(0, fe(2), fe(2), fe(3), fe(5)),
        ospec_auto(2, fe(2), fe(2), fe(3), fe(5)),
        ospec_auto(2, fe(2), fe(1), fe(3), fe(5)),
        ospec_auto(4, fe(2), fe(1, 3), fe(-2), fe(7, 2)),
        ospec_auto(2, fe(3, 2), fe(4), fe(1, 5), fe(-3)),
        ospec_auto(2, FieldElement::q(), make_laurent(Rational(1), 1), fe(2),
                   FieldElement::q() + fe(3)),
    };
    for (const DahaSpecO& s : specs) {
        DahaRealization m = build_o(s);
        check_daha_relations(m);
        for (int i = 0; i < 4; ++i) CHECK(determinant(m.t[i]) == s.k[i]);
    }
}

TEST_CASE("O build: char poly of t0*t1 equals the closed-form eigenvalue list") {
    std::vector<DahaSpecO> specs = {
        ospec_auto(2, fe(2), fe(2), fe(3), fe(5)),
        ospec_auto(4, fe(2), fe(1, 2), fe(-3), fe(7)),
        ospec_auto(2, FieldElement::q(), make_laurent(Rational(1), 1), fe(2), fe(3)),
    };
    for (const DahaSpecO& s : specs) {
        DahaRealization m = build_o(s);
        Polynomial expect{FieldElement(1)};
        const FieldElement k01 = s.k[0] * s.k[1];
        for (int i = 0; i <= s.d; i += 2) expect = expect * lin_factor(k01 * s.q.pow(i));
        for (int i = 1; i <= s.d - 1; i += 2) {
            expect = expect * lin_factor(k01.inverse() * s.q.pow(-i - 1));
        }
        CHECK(char_poly(m.t[0] * m.t[1]) == expect);
        CHECK(char_poly(m.t[1] * m.t[0]) == expect);
    }
}

TEST_CASE("O build rejects bad specs") {
    CHECK_THROWS_AS(build_o(ospec(1, fe(2), fe(2), fe(3), fe(5), fe(1, 60))), InvalidSpec);
    CHECK_THROWS_AS(build_o(ospec(0, fe(2), fe(2), fe(3), fe(5), fe(1, 2))), InvalidSpec);
    CHECK_THROWS_AS(build_o(ospec(0, fe(2), fe(2), fe(3), fe(0), fe(1))), InvalidSpec);
    CHECK_THROWS_AS(build_o(ospec_auto(2, fe(-1), fe(2), fe(3), fe(5))), InvalidSpec);
}

TEST_CASE("twist permutes generators cyclically and is a group action") {
    DahaRealization m = build_e(espec(3, fe(2), fe(1, 4), fe(3), fe(5), fe(7)));

    DahaRealization m0 = twist(m, TwistLabel{0});
    for (int i = 0; i < 4; ++i) CHECK(m0.t[i] == m.t[i]);
    CHECK(m0.twist == 0);

    DahaRealization m1 = twist(m, TwistLabel{1});
    CHECK(m1.t[0] == m.t[1]);
    CHECK(m1.t[1] == m.t[2]);
    CHECK(m1.t[2] == m.t[3]);
    CHECK(m1.t[3] == m.t[0]);
    CHECK(m1.c[0] == m.c[1]);
    CHECK(m1.twist == 1);
    check_daha_relations(m1);

    DahaRealization back = twist(m1, TwistLabel{3});
    CHECK(back.twist == 0);
    for (int i = 0; i < 4; ++i) {
        CHECK(back.t[i] == m.t[i]);
        CHECK(back.t_inv[i] == m.t_inv[i]);
        CHECK(back.c[i] == m.c[i]);
    }

    DahaRealization two_steps = twist(twist(m, TwistLabel{1}), TwistLabel{2});
    DahaRealization one_step = twist(m, TwistLabel{3});
    for (int i = 0; i < 4; ++i) CHECK(two_steps.t[i] == one_step.t[i]);
    check_daha_relations(two_steps);
}

TEST_CASE("pushforward: toy identity generators give A = 2I") {
    const SquareMatrix id = SquareMatrix::identity(2);
    DahaRealization toy{DahaFamily::E, 1,          fe(1, 1),
                        {fe(1), fe(1), fe(1), fe(1)}, 0,
                        {id, id, id, id},          {id, id, id, id},
                        {fe(2), fe(2), fe(2), fe(2)}};
    AwRealization w = push_to_aw(toy);
    CHECK(w.A == SquareMatrix::scalar(2, fe(2)));
    CHECK(w.B == SquareMatrix::scalar(2, fe(2)));
    CHECK(w.C == SquareMatrix::scalar(2, fe(2)));
    CHECK_FALSE(w.character.has_value());
}

TEST_CASE("pushforward of the one-dimensional O module") {
    DahaRealization m = build_o(ospec_auto(0, fe(2), fe(2), fe(3), fe(5)));
    AwRealization w = push_to_aw(m);
    CHECK(w.A == SquareMatrix::scalar(1, fe(6) + fe(1, 6)));
    CHECK(w.B == SquareMatrix::scalar(1, fe(2) * fe(1, 60) + fe(30)));
    CHECK(w.C == SquareMatrix::scalar(1, fe(10) + fe(1, 10)));
}

TEST_CASE("pushforward: central combinations commute with A, B, C") {
    // the pushforward module usually decomposes with distinct central
    // characters on the pieces, so the central combinations commute with
    // everything but need not be scalar matrices
    std::vector<DahaRealization> ms = {
        build_e(espec(3, fe(2), fe(1, 4), fe(3), fe(5), fe(7))),
        build_o(ospec_auto(2, fe(2), fe(2), fe(3), fe(5))),
        build_e(espec(3, FieldElement::q(), make_laurent(Rational(1), -2), fe(2), fe(3), fe(5))),
    };
    for (const DahaRealization& m : ms) {
        for (int eps = 0; eps < 4; ++eps) {
            AwRealization w = push_to_aw(twist(m, TwistLabel{eps}));
            const FieldElement q = w.q, qi = w.q.inverse();
            const FieldElement norm = (q + qi) / (q * q - qi * qi);
            const SquareMatrix am =
                (q + qi) * w.A + norm * (q * (w.B * w.C) - qi * (w.C * w.B));
            const SquareMatrix bm =
                (q + qi) * w.B + norm * (q * (w.C * w.A) - qi * (w.A * w.C));
            const SquareMatrix cm =
                (q + qi) * w.C + norm * (q * (w.A * w.B) - qi * (w.B * w.A));
            for (const SquareMatrix* z : {&am, &bm, &cm}) {
                CHECK(commutes(*z, w.A));
                CHECK(commutes(*z, w.B));
                CHECK(commutes(*z, w.C));
            }
        }
    }
}

TEST_CASE("irreducible two-dimensional pushforward matches the AW build") {
    // with d=1 and k0 q = 1 the pushforward is the AW module with
    // parameters (k1, k3, k2); central scalars and char polys must agree
    AwRealization w = push_to_aw(build_e(espec(1, fe(4), fe(1, 4), fe(2), fe(3), fe(5))));
    AwRealization v = build_vd(VdSpec{1, fe(4), fe(2), fe(5), fe(3)});
    REQUIRE(v.character.has_value());
    check_aw_centrality(w, *v.character);
    CHECK(char_poly(w.A) == char_poly(v.A));
    CHECK(char_poly(w.B) == char_poly(v.B));
    CHECK(char_poly(w.C) == char_poly(v.C));
}

TEST_CASE("word evaluation") {
    DahaRealization m = build_e(espec(1, fe(4), fe(1, 4), fe(2), fe(3), fe(5)));
    CHECK(evaluate_word(m, {}) == SquareMatrix::identity(2));
    CHECK(evaluate_word(m, {"t0", "t0^-1"}) == SquareMatrix::identity(2));
    CHECK(evaluate_word(m, {"t0", "t1", "t2", "t3"}) == SquareMatrix::scalar(2, fe(1, 4)));
    CHECK(evaluate_word(m, {"t2", "t3"}) == m.t[2] * m.t[3]);
    CHECK_THROWS_AS(evaluate_word(m, {"t4"}), UnknownSymbol);
    CHECK_THROWS_AS(evaluate_word(m, {"t1^2"}), UnknownSymbol);
    CHECK_THROWS_AS(evaluate_word(m, {"x"}), UnknownSymbol);
}

TEST_CASE("spec JSON parse, serialize, and realize") {
    const std::string text = R"({"family":"E","d":3,"q":"2","params":)"
                             R"({"k0":"1/4","k1":"3","k2":"5","k3":"7"},"twist":1})";
    ModuleSpec ms = parse_module_spec(text);
    CHECK(ms.twist == 1);
    REQUIRE(std::holds_alternative<DahaSpecE>(ms.spec));
    CHECK(std::get<DahaSpecE>(ms.spec).d == 3);
    CHECK(std::get<DahaSpecE>(ms.spec).k[2] == fe(5));

    DahaRealization direct = twist(build_e(espec(3, fe(2), fe(1, 4), fe(3), fe(5), fe(7))),
                                   TwistLabel{1});
    DahaRealization via_json = realize_daha(ms);
    for (int i = 0; i < 4; ++i) CHECK(via_json.t[i] == direct.t[i]);

    ModuleSpec round = parse_module_spec(module_spec_to_json(ms));
    DahaRealization again = realize_daha(round);
    for (int i = 0; i < 4; ++i) CHECK(again.t[i] == direct.t[i]);

    // integers are accepted for scalars; twist defaults to 0
    ModuleSpec vd = parse_module_spec(
        R"({"family":"Vd","d":1,"q":2,"params":{"a":"2","b":"3","c":"5"}})");
    AwRealization w = realize_aw(vd);
    CHECK(w.A.at(0, 0) == fe(2));
    CHECK(w.A.at(1, 1) == fe(17, 4));
    CHECK_THROWS_AS(realize_daha(vd), InvalidSpec);

    ModuleSpec o = parse_module_spec(
        R"({"family":"O","d":0,"q":"2","params":{"k0":"2","k1":"3","k2":"5","k3":"1/60"}})");
    CHECK(realize_aw(o).A == SquareMatrix::scalar(1, fe(6) + fe(1, 6)));
}

TEST_CASE("spec JSON rejects malformed input") {
    CHECK_THROWS_AS(parse_module_spec("{"), ParseError);
    CHECK_THROWS_AS(parse_module_spec("[1,2]"), InvalidSpec);
    CHECK_THROWS_AS(parse_module_spec(R"({"family":"X","d":1,"q":"2","params":{}})"),
                    InvalidSpec);
    CHECK_THROWS_AS(parse_module_spec(R"({"family":"E","d":3,"q":"2","params":{}})"),
                    InvalidSpec);
    CHECK_THROWS_AS(
        parse_module_spec(
            R"({"family":"E","d":3,"q":"2","params":{"k0":"1/4","k1":"1","k2":"1","k3":"1"},"twist":4})"),
        InvalidSpec);
    CHECK_THROWS_AS(
        parse_module_spec(
            R"({"family":"Vd","d":1,"q":"2","params":{"a":"2","b":"3","c":"5"},"twist":2})"),
        InvalidSpec);
    CHECK_THROWS_AS(
        parse_module_spec(R"({"family":"E","d":"x","q":"2","params":{}})"), InvalidSpec);
}
