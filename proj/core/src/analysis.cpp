#include "awdaha/analysis.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

#include <json.hpp>

#include "awdaha/errors.hpp"

namespace awdaha {

namespace {

Vec flatten(const SquareMatrix& m) {
    const int n = m.n();
    Vec v(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(i * n + j)] = m.at(i, j);
    return v;
}

bool commutes(const SquareMatrix& x, const SquareMatrix& y) { return x * y == y * x; }

// the three central combinations of the AW presentation, as matrices
struct CentralMats {
    SquareMatrix am, bm, cm;
};

CentralMats central_mats(const FieldElement& q, const SquareMatrix& a, const SquareMatrix& b,
                         const SquareMatrix& c) {
    const FieldElement qi = q.inverse();
    const FieldElement norm = (q + qi) / (q * q - qi * qi);
    return CentralMats{
        (q + qi) * a + norm * (q * (b * c) - qi * (c * b)),
        (q + qi) * b + norm * (q * (c * a) - qi * (a * c)),
        (q + qi) * c + norm * (q * (a * b) - qi * (b * a)),
    };
}

std::optional<CentralCharacter> central_character(const FieldElement& q, const SquareMatrix& a,
                                                  const SquareMatrix& b, const SquareMatrix& c) {
    const CentralMats z = central_mats(q, a, b, c);
    auto alpha = z.am.as_scalar();
    auto beta = z.bm.as_scalar();
    auto gamma = z.cm.as_scalar();
    if (!alpha || !beta || !gamma) return std::nullopt;
    return CentralCharacter{*alpha, *beta, *gamma};
}

// lexicographic order on canonical echelon bases, for deterministic ties
bool basis_lex_less(const std::vector<Vec>& x, const std::vector<Vec>& y) {
    for (std::size_t r = 0; r < x.size() && r < y.size(); ++r) {
        for (std::size_t i = 0; i < x[r].size(); ++i) {
            const int c = FieldElement::cmp(x[r][i], y[r][i]);
            if (c != 0) return c < 0;
        }
    }
    return x.size() < y.size();
}

// smallest invariant subspace containing seed, by closure under gens
Subspace spin_up(const std::vector<SquareMatrix>& gens, const Vec& seed, int n) {
    SpanBuilder sb(n);
    std::vector<Vec> work;
    if (sb.insert(seed)) work.push_back(seed);
    while (!work.empty()) {
        Vec v = std::move(work.back());
        work.pop_back();
        for (const SquareMatrix& g : gens) {
            Vec w = g * v;
            if (sb.insert(w)) work.push_back(std::move(w));
        }
    }
    Subspace s;
    s.ambient = n;
    s.basis = sb.rows();
    return s;
}

std::vector<Vec> standard_and_eigen_seeds(const std::vector<SquareMatrix>& eigen_sources, int n) {
    std::vector<Vec> seeds;
    for (int i = 0; i < n; ++i) {
        Vec e(static_cast<std::size_t>(n));
        e[static_cast<std::size_t>(i)] = FieldElement(1);
        seeds.push_back(std::move(e));
    }
    for (const SquareMatrix& g : eigen_sources) {
        const RootList rl = rational_roots(char_poly(g));
        for (const auto& [root, mult] : rl.roots) {
            Subspace es = eigenspace(g, root);
            for (const Vec& v : es.basis) seeds.push_back(v);
        }
    }
    return seeds;
}

void keep_if_better(std::optional<Subspace>& best, Subspace cand) {
    if (!best || cand.dim() < best->dim() ||
        (cand.dim() == best->dim() && basis_lex_less(cand.basis, best->basis))) {
        best = std::move(cand);
    }
}

// proper nonzero invariant subspace of minimal dimension reachable by
// spin-up from the pinned candidate list; nullopt when every candidate
// generates the whole space
std::optional<Subspace> find_minimal_invariant(const std::vector<SquareMatrix>& gens,
                                               const std::vector<SquareMatrix>& eigen_sources,
                                               int n) {
    std::optional<Subspace> best;
    for (const Vec& seed : standard_and_eigen_seeds(eigen_sources, n)) {
        Subspace s = spin_up(gens, seed, n);
        if (s.dim() > 0 && s.dim() < n) keep_if_better(best, std::move(s));
    }
    return best;
}

bool is_invariant(const Subspace& s, const std::vector<SquareMatrix>& gens) {
    for (const SquareMatrix& g : gens)
        for (const Vec& v : s.basis)
            if (!s.contains(g * v)) return false;
    return true;
}

// action of m on the subspace, in the coordinates of its canonical basis
SquareMatrix restrict_to(const Subspace& s, const SquareMatrix& m) {
    const int k = s.dim();
    SquareMatrix out(k);
    for (int j = 0; j < k; ++j) {
        auto coords = solve_coordinates(s.basis, m * s.basis[static_cast<std::size_t>(j)]);
        if (!coords) throw Error("restriction to a non-invariant subspace");
        for (int i = 0; i < k; ++i) out.set(i, j, (*coords)[static_cast<std::size_t>(i)]);
    }
    return out;
}

// action of m on the quotient, in the classes of the non-pivot coordinates
SquareMatrix quotient_action(const Subspace& s, const SquareMatrix& m) {
    const int n = s.ambient;
    std::vector<int> pivot_of_row;
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (const Vec& r : s.basis) {
        int p = 0;
        while (r[static_cast<std::size_t>(p)].is_zero()) ++p;
        pivot_of_row.push_back(p);
        is_pivot[static_cast<std::size_t>(p)] = true;
    }
    std::vector<int> free_cols;
    for (int j = 0; j < n; ++j)
        if (!is_pivot[static_cast<std::size_t>(j)]) free_cols.push_back(j);

    const int k = static_cast<int>(free_cols.size());
    SquareMatrix out(k);
    for (int j = 0; j < k; ++j) {
        Vec img(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = m.at(i, free_cols[static_cast<std::size_t>(j)]);
        for (std::size_t r = 0; r < s.basis.size(); ++r) {
            const FieldElement c = img[static_cast<std::size_t>(pivot_of_row[r])];
            if (c.is_zero()) continue;
            for (int i = 0; i < n; ++i) {
                img[static_cast<std::size_t>(i)] =
                    img[static_cast<std::size_t>(i)] - c * s.basis[r][static_cast<std::size_t>(i)];
            }
        }
        for (int i = 0; i < k; ++i) out.set(i, j, img[static_cast<std::size_t>(free_cols[static_cast<std::size_t>(i)])]);
    }
    return out;
}

}  // namespace

std::string report_to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["paper_ref"] = r.paper_ref;
    j["pass"] = r.pass;
    j["detail"] = r.detail;
    return j.dump();
}

VerificationReport verify_daha_relations(const DahaRealization& m) {
    VerificationReport rep{"daha_relations", "Definition of H_q", true, ""};
    const SquareMatrix id = SquareMatrix::identity(m.n());
    auto fail = [&rep](const std::string& what) {
        rep.pass = false;
        if (!rep.detail.empty()) rep.detail += "; ";
        rep.detail += what;
    };
    for (int i = 0; i < 4; ++i) {
        const std::string ti = "t" + std::to_string(i);
        if (m.t[i] * m.t_inv[i] != id || m.t_inv[i] * m.t[i] != id) {
            fail(ti + " inverse is wrong");
        }
        const SquareMatrix central = m.t[i] + m.t_inv[i];
        for (int j = 0; j < 4; ++j) {
            if (!commutes(central, m.t[j])) {
                fail(ti + "+" + ti + "^-1 does not commute with t" + std::to_string(j));
            }
        }
        if (central != SquareMatrix::scalar(m.n(), m.c[i])) {
            fail(ti + "+" + ti + "^-1 is not the recorded scalar");
        }
    }
    if (m.t[0] * m.t[1] * m.t[2] * m.t[3] != SquareMatrix::scalar(m.n(), m.q.inverse())) {
        fail("t0 t1 t2 t3 is not q^-1");
    }
    if (rep.pass) rep.detail = "all generator relations hold exactly";
    return rep;
}

VerificationReport verify_aw_centrality(AwRealization& m) {
    VerificationReport rep{"aw_centrality", "Definition of Delta_q", true, ""};
    const CentralMats z = central_mats(m.q, m.A, m.B, m.C);
    const char* names[3] = {"alpha", "beta", "gamma"};
    const SquareMatrix* centrals[3] = {&z.am, &z.bm, &z.cm};
    const SquareMatrix* gens[3] = {&m.A, &m.B, &m.C};
    const char* gen_names[3] = {"A", "B", "C"};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (!commutes(*centrals[i], *gens[j])) {
                rep.pass = false;
                if (!rep.detail.empty()) rep.detail += "; ";
                rep.detail += std::string(names[i]) + " does not commute with " + gen_names[j];
            }
        }
    }
    if (rep.pass) {
        auto alpha = z.am.as_scalar();
        auto beta = z.bm.as_scalar();
        auto gamma = z.cm.as_scalar();
        if (alpha && beta && gamma) {
            m.character = CentralCharacter{*alpha, *beta, *gamma};
            rep.detail = "central combinations act as scalars; character recorded";
        } else {
            rep.detail = "central combinations commute but are not scalar on this module";
        }
    }
    return rep;
}

BurnsideResult burnside_irreducible(const std::vector<SquareMatrix>& mats) {
    if (mats.empty()) throw Error("burnside test needs at least one matrix");
    const int n = mats[0].n();
    for (const SquareMatrix& m : mats)
        if (m.n() != n) throw Error("burnside test needs a common dimension");

    // close the unital algebra under left multiplication by generators
    SpanBuilder span(n * n);
    std::vector<SquareMatrix> basis;
    const SquareMatrix id = SquareMatrix::identity(n);
    span.insert(flatten(id));
    basis.push_back(id);
    for (std::size_t i = 0; i < basis.size() && span.dim() < n * n; ++i) {
        for (const SquareMatrix& g : mats) {
            SquareMatrix p = g * basis[i];
            if (span.insert(flatten(p))) basis.push_back(std::move(p));
            if (span.dim() == n * n) break;
        }
    }
    if (span.dim() == n * n) return BurnsideResult{true, std::nullopt};

    // reducible: hunt a proper nonzero invariant subspace, first through
    // orbits of candidate vectors, then through the dual module
    std::optional<Subspace> best;
    for (const Vec& seed : standard_and_eigen_seeds(mats, n)) {
        std::vector<Vec> orbit;
        for (const SquareMatrix& b : basis) orbit.push_back(b * seed);
        Subspace s = Subspace::from_vectors(n, orbit);
        if (s.dim() > 0 && s.dim() < n) keep_if_better(best, std::move(s));
    }
    if (!best) {
        std::vector<SquareMatrix> tmats;
        for (const SquareMatrix& m : mats) tmats.push_back(m.transpose());
        for (const Vec& seed : standard_and_eigen_seeds(tmats, n)) {
            std::vector<Vec> orbit;
            for (const SquareMatrix& b : basis) orbit.push_back(b.transpose() * seed);
            Subspace dual = Subspace::from_vectors(n, orbit);
            if (dual.dim() == 0 || dual.dim() == n) continue;
            Subspace s = Subspace::from_vectors(n, homogeneous_kernel(dual.basis, n));
            if (s.dim() > 0 && s.dim() < n) keep_if_better(best, std::move(s));
        }
    }
    if (!best) {
        throw NonSplittingSpectrum(
            "the algebra is a proper subalgebra but no candidate vector exhibits an invariant "
            "subspace over the working field");
    }
    if (!is_invariant(*best, mats)) throw Error("extracted witness is not invariant");
    return BurnsideResult{false, std::move(best)};
}

bool criterion_vd(const VdSpec& spec) {
    const FieldElement abc = spec.a * spec.b * spec.c;
    const FieldElement vals[4] = {abc, abc / (spec.a * spec.a), abc / (spec.b * spec.b),
                                  abc / (spec.c * spec.c)};
    for (int i = 1; i <= spec.d; ++i) {
        const FieldElement p = spec.q.pow(2 * i - spec.d - 1);
        for (const FieldElement& v : vals)
            if (v == p) return false;
    }
    return true;
}

bool criterion_e(const DahaSpecE& spec) {
    const FieldElement prod = spec.k[0] * spec.k[1] * spec.k[2] * spec.k[3];
    const FieldElement vals[4] = {prod, prod / (spec.k[1] * spec.k[1]),
                                  prod / (spec.k[2] * spec.k[2]), prod / (spec.k[3] * spec.k[3])};
    for (int i = 1; i <= spec.d; i += 2) {
        const FieldElement p = spec.q.pow(-i);
        for (const FieldElement& v : vals)
            if (v == p) return false;
    }
    return true;
}

bool criterion_o(const DahaSpecO& spec) {
    for (int i = 2; i <= spec.d; i += 2) {
        const FieldElement p = spec.q.pow(-i);
        for (const FieldElement& k : spec.k)
            if (k * k == p) return false;
    }
    return true;
}

IrreducibilityVerdict irreducibility_vd(const VdSpec& spec) {
    AwRealization w = build_vd(spec);
    BurnsideResult b = burnside_irreducible({w.A, w.B, w.C});
    return IrreducibilityVerdict{criterion_vd(spec), b.irreducible, std::move(b.witness)};
}

IrreducibilityVerdict irreducibility_e(const DahaSpecE& spec) {
    DahaRealization m = build_e(spec);
    BurnsideResult b = burnside_irreducible({m.t[0], m.t[1], m.t[2], m.t[3]});
    return IrreducibilityVerdict{criterion_e(spec), b.irreducible, std::move(b.witness)};
}

IrreducibilityVerdict irreducibility_o(const DahaSpecO& spec) {
    DahaRealization m = build_o(spec);
    BurnsideResult b = burnside_irreducible({m.t[0], m.t[1], m.t[2], m.t[3]});
    return IrreducibilityVerdict{criterion_o(spec), b.irreducible, std::move(b.witness)};
}

namespace {

void series_rec(const FieldElement& q, const SquareMatrix& a, const SquareMatrix& b,
                const SquareMatrix& c, std::vector<CompositionFactor>& out) {
    const int n = a.n();
    if (n == 0) return;
    const std::vector<SquareMatrix> gens = {a, b, c};
    std::optional<Subspace> sub = find_minimal_invariant(gens, {a}, n);
    if (!sub) {
        BurnsideResult bi = burnside_irreducible(gens);
        if (!bi.irreducible) {
            // the witness came from the dual side; split along it
            sub = std::move(bi.witness);
        } else {
            auto cc = central_character(q, a, b, c);
            if (!cc) throw Error("central combinations are not scalar on an irreducible factor");
            out.push_back(
                CompositionFactor{n, *cc, char_poly(a), char_poly(b), a, b, c});
            return;
        }
    }
    series_rec(q, restrict_to(*sub, a), restrict_to(*sub, b), restrict_to(*sub, c), out);
    series_rec(q, quotient_action(*sub, a), quotient_action(*sub, b), quotient_action(*sub, c),
               out);
}

}  // namespace

CompositionSeries composition_series_aw(const AwRealization& m) {
    CompositionSeries s;
    series_rec(m.q, m.A, m.B, m.C, s.factors);
    int total = 0;
    for (const CompositionFactor& f : s.factors) total += f.dimension;
    if (total != m.n()) throw Error("factor dimensions do not sum to the ambient dimension");
    return s;
}

std::vector<VdSpec> predicted_factors(const DahaRealization& m) {
    const FieldElement& q = m.q;
    const FieldElement k01 = m.k[0] * m.k[1];
    const FieldElement k02 = m.k[0] * m.k[2];
    const FieldElement k03 = m.k[0] * m.k[3];
    const int d = m.d;

    if (m.family == DahaFamily::E) {
        if (!criterion_e(DahaSpecE{d, q, m.k})) {
            throw Error("factor prediction requires an irreducible module");
        }
        const int h = (d + 1) / 2;
        std::vector<VdSpec> out;
        switch (m.twist) {
            case 0:
                out.push_back(VdSpec{h, q, k01 * q.pow(h), k03 * q.pow(h), k02 * q.pow(h)});
                if (d >= 3) {
                    out.push_back(
                        VdSpec{h - 2, q, k01 * q.pow(h), k03 * q.pow(h), k02 * q.pow(h)});
                }
                break;
            case 1:
                out.push_back(
                    VdSpec{h - 1, q, k03 * q.pow(h), k01 * q.pow(h + 1), k02 * q.pow(h)});
                out.push_back(
                    VdSpec{h - 1, q, k03 * q.pow(h), k01 * q.pow(h - 1), k02 * q.pow(h)});
                break;
            case 2:
                out.push_back(
                    VdSpec{h - 1, q, k01 * q.pow(h), k03 * q.pow(h), k02 * q.pow(h + 1)});
                out.push_back(
                    VdSpec{h - 1, q, k01 * q.pow(h), k03 * q.pow(h), k02 * q.pow(h - 1)});
                break;
            case 3:
                out.push_back(
                    VdSpec{h - 1, q, k03 * q.pow(h - 1), k01 * q.pow(h), k02 * q.pow(h)});
                out.push_back(
                    VdSpec{h - 1, q, k03 * q.pow(h + 1), k01 * q.pow(h), k02 * q.pow(h)});
                break;
            default:
                throw Error("twist out of range");
        }
        return out;
    }

    if (!criterion_o(DahaSpecO{d, q, m.k})) {
        throw Error("factor prediction requires an irreducible module");
    }
    if (m.twist != 0) {
        throw Error("no closed-form factor prediction for twisted odd-dimensional modules");
    }
    std::vector<VdSpec> out;
    if (d == 0) {
        out.push_back(VdSpec{0, q, k01, k03, k02});
        return out;
    }
    const int h = d / 2;
    if (m.k[0] * m.k[0] == FieldElement(1)) {
        out.push_back(VdSpec{0, q, k01, k03, k02});
        const VdSpec rep{h - 1, q, k01 * q.pow(h + 1), k03 * q.pow(h + 1), k02 * q.pow(h + 1)};
        out.push_back(rep);
        out.push_back(rep);
    } else {
        out.push_back(VdSpec{h, q, k01 * q.pow(h), k03 * q.pow(h), k02 * q.pow(h)});
        out.push_back(
            VdSpec{h - 1, q, k01 * q.pow(h + 1), k03 * q.pow(h + 1), k02 * q.pow(h + 1)});
    }
    return out;
}

VerificationReport match_predicted_factors(const CompositionSeries& series,
                                           const DahaRealization& m) {
    VerificationReport rep{
        m.family == DahaFamily::E ? "thm_3_14_match" : "thm_4_11_match",
        m.family == DahaFamily::E ? "Theorem 3.14" : "Theorem 4.11",
        false,
        "",
    };
    const std::vector<VdSpec> predicted = predicted_factors(m);
    if (predicted.size() != series.factors.size()) {
        rep.detail = "predicted " + std::to_string(predicted.size()) + " factors, computed " +
                     std::to_string(series.factors.size());
        return rep;
    }
    std::vector<bool> used(series.factors.size(), false);
    for (std::size_t p = 0; p < predicted.size(); ++p) {
        AwRealization w = build_vd(predicted[p]);
        const Polynomial pa = char_poly(w.A);
        const Polynomial pb = char_poly(w.B);
        bool matched = false;
        for (std::size_t f = 0; f < series.factors.size(); ++f) {
            if (used[f]) continue;
            const CompositionFactor& cf = series.factors[f];
            if (cf.dimension != w.n() || !(cf.character == *w.character) ||
                cf.char_poly_a != pa || cf.char_poly_b != pb) {
                continue;
            }
            used[f] = true;
            matched = true;
            break;
        }
        if (!matched) {
            rep.detail = "predicted factor " + std::to_string(p) +
                         " (dimension " + std::to_string(predicted[p].d + 1) +
                         ") has no matching computed factor";
            return rep;
        }
    }
    rep.pass = true;
    rep.detail = "all " + std::to_string(predicted.size()) + " factors matched bijectively";
    return rep;
}

namespace {

bool among_q_powers(const FieldElement& x, const FieldElement& q, int high, int low) {
    // membership in {q^high, q^{high-2}, ..., q^low}; empty when high < low
    for (int e = high; e >= low; e -= 2)
        if (x == q.pow(e)) return true;
    return false;
}

}  // namespace

std::map<std::string, bool> diag_predicates(const VdSpec& spec) {
    const int d = spec.d;
    auto ok = [&](const FieldElement& x) {
        return !among_q_powers(x * x, spec.q, 2 * d - 2, 2 - 2 * d);
    };
    return {
        {"lemma_2_5_a", ok(spec.a)},
        {"lemma_2_5_b", ok(spec.b)},
        {"lemma_2_5_c", ok(spec.c)},
    };
}

std::map<std::string, bool> diag_predicates(const DahaSpecE& spec) {
    const int d = spec.d;
    const FieldElement& q = spec.q;
    auto s1 = [&](const FieldElement& k) { return !among_q_powers(k * k, q, d - 1, 1 - d); };
    auto s2 = [&](const FieldElement& k) { return !among_q_powers(k * k, q, d - 3, 3 - d); };
    // for a twisted module whose two factors carry k q^{+1} and k q^{-1},
    // the per-factor windows shift oppositely; their union fills the full
    // range q^{d-1},...,q^{1-d} only for d >= 5, and for d = 1, 3 the
    // exponent 0 drops out
    auto s1_split = [&](const FieldElement& k) {
        return !among_q_powers(k * k, q, d - 1, 5 - d) &&
               !among_q_powers(k * k, q, d - 5, 1 - d);
    };
    const bool k1_s1 = s1(spec.k[1]), k2_s1 = s1(spec.k[2]), k3_s1 = s1(spec.k[3]);
    const bool k1_s2 = s2(spec.k[1]), k2_s2 = s2(spec.k[2]), k3_s2 = s2(spec.k[3]);
    return {
        {"lemma_3_10_k1", k1_s1},
        {"lemma_3_11_k2", k2_s1},
        {"lemma_3_12_k3", k3_s1},
        {"lemma_3_13_k1", k1_s2},
        {"lemma_3_13_k2", k2_s2},
        {"lemma_3_13_k3", k3_s2},
        {"lemma_3_15_A", k1_s1},
        {"lemma_3_15_B", k3_s1},
        {"lemma_3_15_C", k2_s1},
        {"lemma_3_16_A", k3_s2},
        {"lemma_3_16_B", s1_split(spec.k[1])},
        {"lemma_3_16_C", k2_s2},
        {"lemma_3_17_A", k1_s2},
        {"lemma_3_17_B", k3_s2},
        {"lemma_3_17_C", s1_split(spec.k[2])},
        {"lemma_3_18_A", s1_split(spec.k[3])},
        {"lemma_3_18_B", k1_s2},
        {"lemma_3_18_C", k2_s2},
    };
}

std::map<std::string, bool> diag_predicates(const DahaSpecO& spec) {
    const int d = spec.d;
    const FieldElement& q = spec.q;
    const FieldElement k0sq = spec.k[0] * spec.k[0];
    auto t_full = [&](const FieldElement& k) {
        return !among_q_powers(k0sq * k * k, q, -2, -2 * d);
    };
    auto t_short = [&](const FieldElement& k) {
        return !among_q_powers(k0sq * k * k, q, -2, 2 - 2 * d);
    };
    auto u_short = [&](const FieldElement& k) {
        return !among_q_powers(k * k, q, -6, 2 - 2 * d);
    };
    return {
        {"lemma_4_7_k0k1", t_full(spec.k[1])},
        {"lemma_4_8_k0k2", t_full(spec.k[2])},
        {"lemma_4_9_k0k3", t_full(spec.k[3])},
        {"lemma_4_10_A", t_short(spec.k[1])},
        {"lemma_4_10_B", t_short(spec.k[3])},
        {"lemma_4_10_C", t_short(spec.k[2])},
        {"lemma_4_12_A", u_short(spec.k[1])},
        {"lemma_4_12_B", u_short(spec.k[3])},
        {"lemma_4_12_C", u_short(spec.k[2])},
        {"lemma_4_13_A", t_short(spec.k[1])},
        {"lemma_4_13_B", t_short(spec.k[3])},
        {"lemma_4_13_C", t_short(spec.k[2])},
    };
}

std::optional<SquareMatrix> find_intertwiner(const std::vector<SquareMatrix>& gens1,
                                             const std::vector<SquareMatrix>& gens2) {
    if (gens1.size() != gens2.size() || gens1.empty()) {
        throw Error("intertwiner search needs matching generator lists");
    }
    const int n = gens1[0].n();
    for (std::size_t i = 0; i < gens1.size(); ++i)
        if (gens1[i].n() != n || gens2[i].n() != n)
            throw Error("intertwiner search needs equal dimensions");

    // rows of the homogeneous system for X g1 = g2 X, unknowns X flattened
    std::vector<Vec> rows;
    for (std::size_t g = 0; g < gens1.size(); ++g) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                Vec row(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
                for (int l = 0; l < n; ++l) {
                    row[static_cast<std::size_t>(i * n + l)] =
                        row[static_cast<std::size_t>(i * n + l)] + gens1[g].at(l, j);
                    row[static_cast<std::size_t>(l * n + j)] =
                        row[static_cast<std::size_t>(l * n + j)] - gens2[g].at(i, l);
                }
                rows.push_back(std::move(row));
            }
        }
    }
    const std::vector<Vec> kernel = homogeneous_kernel(rows, n * n);
    if (kernel.empty()) return std::nullopt;

    auto unflatten = [n](const Vec& v) {
        SquareMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.set(i, j, v[static_cast<std::size_t>(i * n + j)]);
        return m;
    };
    std::vector<SquareMatrix> cands;
    for (const Vec& v : kernel) cands.push_back(unflatten(v));
    if (kernel.size() > 1) {
        // deterministic small combinations for the rare higher-dimensional
        // solution spaces
        for (std::size_t i = 0; i < kernel.size(); ++i) {
            for (std::size_t j = i + 1; j < kernel.size(); ++j) {
                cands.push_back(cands[i] + cands[j]);
                cands.push_back(cands[i] + FieldElement(2) * cands[j]);
                cands.push_back(cands[i] + FieldElement(3) * cands[j]);
            }
        }
        SquareMatrix sum = cands[0];
        for (std::size_t i = 1; i < kernel.size(); ++i) sum = sum + cands[i];
        cands.push_back(std::move(sum));
    }
    for (const SquareMatrix& x : cands) {
        if (!determinant(x).is_zero()) return x;
    }
    return std::nullopt;
}

}  // namespace awdaha
