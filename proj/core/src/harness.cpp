#include "awdaha/harness.hpp"

#include <algorithm>
#include <chrono>
#include <utility>

#include <json.hpp>

#include "awdaha/errors.hpp"

namespace awdaha {

namespace {

enum class Fam { Vd, E, O };

const char* fam_name(Fam f) {
    switch (f) {
        case Fam::Vd: return "Vd";
        case Fam::E: return "E";
        default: return "O";
    }
}

Fam fam_from(const std::string& s) {
    if (s == "Vd") return Fam::Vd;
    if (s == "E") return Fam::E;
    if (s == "O") return Fam::O;
    throw ConfigError("unknown family: " + s);
}

// ---------- deterministic draws ----------

struct Rng {
    std::uint64_t state;
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

std::uint64_t mix_key(std::uint64_t seed, std::uint64_t fam, std::uint64_t d, std::uint64_t qi,
                      std::uint64_t sample) {
    std::uint64_t s = seed;
    for (std::uint64_t v : {fam, d, qi, sample}) {
        s = (s ^ (v + 0x9e3779b97f4a7c15ULL)) * 0x100000001b3ULL;
    }
    return s;
}

// signed small-height rational from the {1..9}/{1..9} pool
Rational draw_pool_rational(Rng& rng) {
    const long num = 1 + static_cast<long>(rng.next() % 9);
    const long den = 1 + static_cast<long>(rng.next() % 9);
    const bool neg = (rng.next() & 1) != 0;
    const Rational r(num, den);
    return neg ? Rational(-r) : r;
}

// pool rational for concrete q; Laurent monomial c*q^e with
// e in [-d-2, d+2] for symbolic q
FieldElement draw_param(Rng& rng, bool symbolic_q, int d) {
    const Rational c = draw_pool_rational(rng);
    if (!symbolic_q) return FieldElement(c);
    const std::uint64_t span = static_cast<std::uint64_t>(2 * d + 5);
    const long e = -(d + 2) + static_cast<long>(rng.next() % span);
    return make_laurent(c, e);
}

// ---------- suite registry ----------

const std::vector<std::string> kSuites = {
    "daha_relations", "aw_centrality",     "determinants", "charpoly_t0t1",
    "irreducible",    "factors",           "thm_1_6",      "thm_1_7",
    "thm_1_8",        "predicate_battery", "example_b_E",  "example_b_O",
};

bool suite_known(const std::string& s) {
    return std::find(kSuites.begin(), kSuites.end(), s) != kSuites.end();
}

bool suite_applies(const std::string& s, Fam f) {
    if (s == "aw_centrality" || s == "irreducible" || s == "predicate_battery") return true;
    if (s == "example_b_E") return f == Fam::E;
    if (s == "example_b_O") return f == Fam::O;
    return f != Fam::Vd;
}

// whether the grid crosses this suite with the configured twists; suites
// whose statements are pinned to the untwisted module run at twist 0 only
bool suite_uses_config_twists(const std::string& s, Fam f) {
    if (f == Fam::Vd) return false;
    if (s == "charpoly_t0t1" || s == "irreducible" || s == "example_b_E" || s == "example_b_O")
        return false;
    if (f == Fam::O)
        return s == "daha_relations" || s == "aw_centrality" || s == "determinants";
    return true;
}

int suite_fixed_twist(const std::string& s) { return s == "example_b_E" ? 2 : 0; }

bool suite_is_criterion_suite(const std::string& s) {
    return s == "irreducible" || s == "factors" || s == "thm_1_6" || s == "thm_1_7" ||
           s == "thm_1_8" || s == "predicate_battery";
}

bool suite_wants_criterion_false(const std::string& s) {
    return s == "irreducible" || s == "thm_1_6" || s == "thm_1_7" || s == "thm_1_8";
}

bool suite_wants_resonance(const std::string& s) {
    return s == "factors" || s == "thm_1_6" || s == "thm_1_7" || s == "thm_1_8" ||
           s == "predicate_battery";
}

bool suite_is_example(const std::string& s) {
    return s == "example_b_E" || s == "example_b_O";
}

int suite_min_d(const std::string& s, Fam f) {
    if (s == "example_b_O") return 2;
    return f == Fam::E ? 1 : 0;
}

std::string suite_paper_ref(const std::string& s) {
    if (s == "daha_relations") return "Definition of H_q";
    if (s == "aw_centrality") return "Definition of Delta_q";
    if (s == "determinants") return "Lemmas 3.5, 4.3";
    if (s == "charpoly_t0t1") return "Lemmas 3.8, 4.5";
    if (s == "irreducible") return "Theorems 2.2, 3.3, 4.2";
    if (s == "factors") return "Theorems 3.14, 4.11";
    if (s == "thm_1_6") return "Theorem 1.6";
    if (s == "thm_1_7") return "Theorem 1.7";
    if (s == "thm_1_8") return "Theorem 1.8";
    if (s == "predicate_battery") return "Lemmas 2.5, 3.10-3.18, 4.7-4.13";
    if (s == "example_b_E") return "Example 3.20";
    return "Example 4.15";
}

// ---------- grid points ----------

struct GridPoint {
    Fam family = Fam::Vd;
    int d = 0;
    FieldElement q;
    std::vector<FieldElement> params;
    int twist = 0;
    std::string suite;
};

VdSpec vd_spec(const GridPoint& p) {
    return VdSpec{p.d, p.q, p.params[0], p.params[1], p.params[2]};
}

DahaSpecE e_spec(const GridPoint& p) {
    return DahaSpecE{p.d, p.q, {p.params[0], p.params[1], p.params[2], p.params[3]}};
}

DahaSpecO o_spec(const GridPoint& p) {
    return DahaSpecO{p.d, p.q, {p.params[0], p.params[1], p.params[2], p.params[3]}};
}

DahaRealization build_daha_point(const GridPoint& p) {
    DahaRealization m = p.family == Fam::E ? build_e(e_spec(p)) : build_o(o_spec(p));
    if (p.twist == 0) return m;
    return twist(m, TwistLabel{p.twist});
}

AwRealization build_aw_point(const GridPoint& p) {
    if (p.family == Fam::Vd) return build_vd(vd_spec(p));
    return push_to_aw(build_daha_point(p));
}

bool point_criterion(const GridPoint& p) {
    if (p.family == Fam::Vd) return criterion_vd(vd_spec(p));
    if (p.family == Fam::E) return criterion_e(e_spec(p));
    return criterion_o(o_spec(p));
}

std::string point_id(const GridPoint& p) {
    std::string s = fam_name(p.family);
    s += ";d=" + std::to_string(p.d);
    s += ";q=" + p.q.to_string();
    s += ";t=" + std::to_string(p.twist);
    s += ";p=";
    for (std::size_t i = 0; i < p.params.size(); ++i) {
        if (i) s += ",";
        s += p.params[i].to_string();
    }
    s += ";" + p.suite;
    return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

GridPoint parse_point_id(const std::string& id) {
    const std::vector<std::string> parts = split(id, ';');
    if (parts.size() != 6 || parts[1].rfind("d=", 0) != 0 || parts[2].rfind("q=", 0) != 0 ||
        parts[3].rfind("t=", 0) != 0 || parts[4].rfind("p=", 0) != 0) {
        throw UnknownPoint("malformed point id: " + id);
    }
    GridPoint p;
    try {
        if (parts[0] != "Vd" && parts[0] != "E" && parts[0] != "O")
            throw UnknownPoint("unknown family in point id");
        p.family = parts[0] == "Vd" ? Fam::Vd : (parts[0] == "E" ? Fam::E : Fam::O);
        p.d = std::stoi(parts[1].substr(2));
        p.q = parse_scalar(parts[2].substr(2));
        p.twist = std::stoi(parts[3].substr(2));
        for (const std::string& tok : split(parts[4].substr(2), ','))
            p.params.push_back(parse_scalar(tok));
        p.suite = parts[5];
    } catch (const UnknownPoint&) {
        throw;
    } catch (const std::exception& e) {
        throw UnknownPoint(std::string("point id does not decode: ") + e.what());
    }
    const std::size_t arity = p.family == Fam::Vd ? 3 : 4;
    if (p.params.size() != arity || p.d < 0 || p.twist < 0 || p.twist > 3 ||
        !suite_known(p.suite) || !suite_applies(p.suite, p.family)) {
        throw UnknownPoint("point id fails validation: " + id);
    }
    return p;
}

// ---------- constructed boundary points ----------

const std::vector<Rational> kPool = {
    Rational(3),    Rational(5),    Rational(7), Rational(2),    Rational(4),    Rational(9),
    Rational(8),    Rational(6),    Rational(2, 3), Rational(3, 2), Rational(5, 2),
    Rational(7, 3),
};

// equality-case tuples: the irreducibility criterion fails on purpose
std::vector<std::vector<FieldElement>> criterion_false_tuples(Fam f, int d,
                                                              const FieldElement& q) {
    std::vector<std::vector<FieldElement>> out;
    if (f == Fam::Vd) {
        if (d >= 1) out.push_back({FieldElement(1), FieldElement(1), q.pow(1 - d)});
    } else if (f == Fam::E) {
        // product lands on q^-1
        out.push_back(
            {q.pow(-(d + 1) / 2), FieldElement(1), FieldElement(1), q.pow((d - 1) / 2)});
    } else if (d >= 2) {
        // k0^2 lands on q^-2
        out.push_back(
            {q.inverse(), FieldElement(2), FieldElement(3), q.pow(-d) / FieldElement(6)});
    }
    return out;
}

// resonance tuples: criterion holds but one diagonalizability predicate
// fails, searched over the deterministic pool
std::vector<std::vector<FieldElement>> resonance_tuples(Fam f, int d, const FieldElement& q) {
    std::vector<std::vector<FieldElement>> out;
    if (f == Fam::Vd) {
        if (d < 1) return out;
        const FieldElement a = q.pow(d - 1);  // a^2 = q^{2d-2}
        for (const Rational& b : kPool) {
            for (const Rational& c : kPool) {
                const VdSpec spec{d, q, a, FieldElement(b), FieldElement(c)};
                if (criterion_vd(spec) && !diag_predicates(spec).at("lemma_2_5_a")) {
                    out.push_back({a, FieldElement(b), FieldElement(c)});
                    return out;
                }
            }
        }
        throw ConfigError("no resonance point found for family Vd");
    }
    if (f == Fam::E) {
        const FieldElement k0 = q.pow(-(d + 1) / 2);
        const FieldElement k1 = q.pow((d - 1) / 2);  // k1^2 = q^{d-1}
        for (const Rational& k2 : kPool) {
            for (const Rational& k3 : kPool) {
                const DahaSpecE spec{d, q, {k0, k1, FieldElement(k2), FieldElement(k3)}};
                if (criterion_e(spec) && !diag_predicates(spec).at("lemma_3_10_k1")) {
                    out.push_back({k0, k1, FieldElement(k2), FieldElement(k3)});
                    return out;
                }
            }
        }
        throw ConfigError("no resonance point found for family E");
    }
    if (d < 2) return out;
    for (const Rational& k0r : kPool) {
        const FieldElement k0{k0r};
        const FieldElement k1 = q.inverse() / k0;  // k0^2 k1^2 = q^-2
        for (const Rational& k2r : kPool) {
            const FieldElement k2{k2r};
            const FieldElement k3 = q.pow(-d - 1) / (k0 * k1 * k2);
            const DahaSpecO spec{d, q, {k0, k1, k2, k3}};
            if (criterion_o(spec) && !diag_predicates(spec).at("lemma_4_7_k0k1")) {
                out.push_back({k0, k1, k2, k3});
                return out;
            }
        }
    }
    throw ConfigError("no resonance point found for family O");
}

// the two counterexample families have their parameters pinned by
// construction; only the free slot runs over the pool
std::vector<std::vector<FieldElement>> example_tuples(const std::string& suite, int d,
                                                      const FieldElement& q) {
    std::vector<std::vector<FieldElement>> out;
    if (suite == "example_b_E") {
        const FieldElement k0 = q.pow(-(d + 1) / 2);
        const FieldElement k13 = q.pow((d - 1) / 2);
        for (const Rational& cand : kPool) {
            const FieldElement k2{cand};
            bool excluded = false;
            for (int e = (3 * d - 3) / 2; e >= (3 - 3 * d) / 2; e -= 2) {
                if (k2 == q.pow(e)) {
                    excluded = true;
                    break;
                }
            }
            if (excluded) continue;
            out.push_back({k0, k13, k2, k13});
            if (out.size() == 2) break;
        }
    } else {
        for (const Rational& cand : kPool) {
            const FieldElement k0{cand};
            bool excluded = false;
            for (int e = -2; e >= 2 - 3 * d; e -= 2) {
                if (k0 * k0 == q.pow(e)) {
                    excluded = true;
                    break;
                }
            }
            if (excluded) continue;
            out.push_back({k0, q.pow(-d) / k0, q.pow(d - 1) * k0, q.pow(-d) / k0});
            if (out.size() == 2) break;
        }
    }
    if (out.empty()) throw ConfigError("no admissible example point for " + suite);
    return out;
}

// ---------- samplers ----------

std::vector<FieldElement> materialize_explicit(const std::vector<std::string>& tup, Fam fam,
                                               int d, const FieldElement& q) {
    const std::size_t arity = fam == Fam::Vd ? 3 : 4;
    if (tup.size() != arity) {
        throw ConfigError("explicit point has " + std::to_string(tup.size()) +
                          " entries; family " + fam_name(fam) + " needs " +
                          std::to_string(arity));
    }
    std::vector<FieldElement> params(arity, FieldElement(0));
    int auto_slot = -1;
    for (std::size_t i = 0; i < arity; ++i) {
        if (tup[i] == "auto") {
            const bool allowed = (fam == Fam::E && i == 0) || (fam == Fam::O && i == 3);
            if (!allowed) {
                throw ConfigError(
                    "auto is only available in the constrained slot (first for E, last for O)");
            }
            auto_slot = static_cast<int>(i);
            continue;
        }
        try {
            params[i] = parse_scalar(tup[i]);
        } catch (const ParseError& e) {
            throw ConfigError("bad scalar \"" + tup[i] + "\" in explicit point: " + e.what());
        }
    }
    if (auto_slot == 0) {
        params[0] = q.pow(-(d + 1) / 2);
    } else if (auto_slot == 3) {
        const FieldElement rest = params[0] * params[1] * params[2];
        if (rest.is_zero()) throw ConfigError("explicit point has a zero parameter");
        params[3] = q.pow(-d - 1) / rest;
    }
    for (const FieldElement& x : params)
        if (x.is_zero()) throw ConfigError("explicit point has a zero parameter");
    if (fam == Fam::E && params[0] * params[0] != q.pow(-d - 1)) {
        throw ConfigError("explicit E point violates the k0 constraint at d=" +
                          std::to_string(d));
    }
    if (fam == Fam::O && params[0] * params[1] * params[2] * params[3] != q.pow(-d - 1)) {
        throw ConfigError("explicit O point violates the product constraint at d=" +
                          std::to_string(d));
    }
    return params;
}

std::vector<FieldElement> draw_sample_tuple(Fam fam, int d, const FieldElement& q, std::size_t qi,
                                            std::uint64_t seed, int s) {
    const bool symbolic = !q.is_rational_tag();
    Rng rng{mix_key(seed, static_cast<std::uint64_t>(fam), static_cast<std::uint64_t>(d), qi,
                    static_cast<std::uint64_t>(s))};
    if (fam == Fam::Vd) {
        std::vector<FieldElement> t;
        for (int i = 0; i < 3; ++i) t.push_back(draw_param(rng, symbolic, d));
        return t;
    }
    if (fam == Fam::E) {
        FieldElement k0 = q.pow(-(d + 1) / 2);
        if ((rng.next() & 1) != 0) k0 = -k0;
        std::vector<FieldElement> t{k0};
        for (int i = 0; i < 3; ++i) t.push_back(draw_param(rng, symbolic, d));
        return t;
    }
    const FieldElement k0 = draw_param(rng, symbolic, d);
    const FieldElement k1 = draw_param(rng, symbolic, d);
    const FieldElement k2 = draw_param(rng, symbolic, d);
    return {k0, k1, k2, q.pow(-d - 1) / (k0 * k1 * k2)};
}

std::vector<std::vector<FieldElement>> sampled_tuples(const SweepConfig& cfg, Fam fam, int d,
                                                      const FieldElement& q, std::size_t qi) {
    std::vector<std::vector<FieldElement>> out;
    if (cfg.sampler.kind == "explicit") {
        for (const auto& tup : cfg.sampler.points)
            out.push_back(materialize_explicit(tup, fam, d, q));
        return out;
    }
    for (int s = 0; s < cfg.sampler.count; ++s)
        out.push_back(draw_sample_tuple(fam, d, q, qi, cfg.sampler.seed, s));
    return out;
}

// ---------- per-suite executors ----------

std::string yn(bool b) { return b ? "yes" : "no"; }

VerificationReport not_applicable(const std::string& check, const std::string& ref) {
    return VerificationReport{check, ref, true, "not applicable: module reducible at this point"};
}

std::vector<VerificationReport> run_daha_relations(const GridPoint& p) {
    DahaRealization m = build_daha_point(p);
    return {verify_daha_relations(m)};
}

std::vector<VerificationReport> run_aw_centrality(const GridPoint& p) {
    AwRealization w = build_aw_point(p);
    return {verify_aw_centrality(w)};
}

std::vector<VerificationReport> run_determinants(const GridPoint& p) {
    const DahaRealization m = build_daha_point(p);
    const bool is_e = p.family == Fam::E;
    std::array<FieldElement, 4> base{FieldElement(1), FieldElement(1), FieldElement(1),
                                     FieldElement(1)};
    if (is_e) {
        base[0] = p.q.pow(-p.d - 1);
    } else {
        for (int i = 0; i < 4; ++i) base[static_cast<std::size_t>(i)] = p.params[static_cast<std::size_t>(i)];
    }
    VerificationReport rep{is_e ? "lemma_3_5_dets" : "lemma_4_3_dets",
                           is_e ? "Lemma 3.5" : "Lemma 4.3", true, ""};
    for (int i = 0; i < 4; ++i) {
        const FieldElement expect = base[static_cast<std::size_t>((i + p.twist) % 4)];
        if (determinant(m.t[static_cast<std::size_t>(i)]) != expect) {
            rep.pass = false;
            if (!rep.detail.empty()) rep.detail += "; ";
            rep.detail += "det t" + std::to_string(i) + " is off";
        }
    }
    if (rep.pass) rep.detail = "all four determinants match the closed form";
    return {rep};
}

std::vector<VerificationReport> run_charpoly(const GridPoint& p) {
    const DahaRealization m = build_daha_point(p);
    const FieldElement k01 = p.params[0] * p.params[1];
    const FieldElement k01i = k01.inverse();
    auto lin = [](const FieldElement& r) { return Polynomial{-r, FieldElement(1)}; };
    Polynomial expect{FieldElement(1)};
    if (p.family == Fam::E) {
        for (int i = 0; i <= p.d - 1; i += 2) expect = expect * lin(k01 * p.q.pow(i));
        for (int i = 1; i <= p.d; i += 2) expect = expect * lin(k01i * p.q.pow(-i - 1));
    } else {
        for (int i = 0; i <= p.d; i += 2) expect = expect * lin(k01 * p.q.pow(i));
        for (int i = 1; i <= p.d - 1; i += 2) expect = expect * lin(k01i * p.q.pow(-i - 1));
    }
    const bool ok = char_poly(m.t[0] * m.t[1]) == expect;
    const bool is_e = p.family == Fam::E;
    return {VerificationReport{is_e ? "lemma_3_8_charpoly" : "lemma_4_5_charpoly",
                               is_e ? "Lemma 3.8" : "Lemma 4.5", ok,
                               ok ? "char poly of t0 t1 equals the eigenvalue product"
                                  : "char poly of t0 t1 deviates from the closed form"}};
}

std::vector<VerificationReport> run_irreducible(const GridPoint& p) {
    IrreducibilityVerdict v{};
    const char* check = "";
    const char* ref = "";
    if (p.family == Fam::Vd) {
        v = irreducibility_vd(vd_spec(p));
        check = "thm_2_2_iff_burnside";
        ref = "Theorem 2.2";
    } else if (p.family == Fam::E) {
        v = irreducibility_e(e_spec(p));
        check = "thm_3_3_iff_burnside";
        ref = "Theorem 3.3";
    } else {
        v = irreducibility_o(o_spec(p));
        check = "thm_4_2_iff_burnside";
        ref = "Theorem 4.2";
    }
    std::string detail = "criterion=" + yn(v.by_criterion) + ", burnside=" + yn(v.by_burnside);
    if (v.witness) detail += ", witness dim " + std::to_string(v.witness->dim());
    return {VerificationReport{check, ref, v.by_criterion == v.by_burnside, detail}};
}

std::vector<VerificationReport> run_factors(const GridPoint& p) {
    const bool is_e = p.family == Fam::E;
    const char* check = is_e ? "thm_3_14_match" : "thm_4_11_match";
    const char* ref = is_e ? "Theorem 3.14" : "Theorem 4.11";
    if (!point_criterion(p)) return {not_applicable(check, ref)};
    const DahaRealization m = build_daha_point(p);
    const CompositionSeries series = composition_series_aw(push_to_aw(m));
    return {match_predicted_factors(series, m)};
}

const SquareMatrix& factor_op(const CompositionFactor& f, int x) {
    return x == 0 ? f.A : (x == 1 ? f.B : f.C);
}

std::vector<VerificationReport> run_thm_1_6(const GridPoint& p) {
    if (!point_criterion(p)) return {not_applicable("thm_1_6", "Theorem 1.6")};
    const AwRealization w = build_aw_point(p);
    const CompositionSeries series = composition_series_aw(w);
    const char* names[3] = {"A", "B", "C"};
    const SquareMatrix* ops[3] = {&w.A, &w.B, &w.C};
    std::vector<VerificationReport> out;
    for (int x = 0; x < 3; ++x) {
        const bool on_module = is_diagonalizable(*ops[x]);
        bool diag_factors = true;
        bool mf_factors = true;
        for (const auto& f : series.factors) {
            diag_factors = diag_factors && is_diagonalizable(factor_op(f, x));
            mf_factors = mf_factors && is_multiplicity_free(factor_op(f, x));
        }
        out.push_back(VerificationReport{
            std::string("thm_1_6_") + names[x], "Theorem 1.6",
            on_module == diag_factors && diag_factors == mf_factors,
            "module diag=" + yn(on_module) + ", factor diag=" + yn(diag_factors) +
                ", factor multiplicity-free=" + yn(mf_factors)});
    }
    return out;
}

std::vector<VerificationReport> run_thm_1_7(const GridPoint& p) {
    if (!point_criterion(p)) return {not_applicable("thm_1_7", "Theorem 1.7")};
    const AwRealization w = build_aw_point(p);
    const CompositionSeries series = composition_series_aw(w);
    const int pairs[3][2] = {{0, 1}, {1, 2}, {2, 0}};
    const char* names[3] = {"AB", "BC", "CA"};
    std::vector<VerificationReport> out;
    for (int k = 0; k < 3; ++k) {
        bool mf_all = true;
        bool leonard_all = true;
        for (const auto& f : series.factors) {
            const SquareMatrix& x = factor_op(f, pairs[k][0]);
            const SquareMatrix& y = factor_op(f, pairs[k][1]);
            mf_all = mf_all && is_multiplicity_free(x) && is_multiplicity_free(y);
            leonard_all = leonard_all && leonard_pair_check(x, y).result;
        }
        out.push_back(VerificationReport{
            std::string("thm_1_7_") + names[k], "Theorem 1.7", mf_all == leonard_all,
            "factor multiplicity-free=" + yn(mf_all) + ", leonard pairs=" + yn(leonard_all)});
    }
    return out;
}

std::vector<VerificationReport> run_thm_1_8(const GridPoint& p) {
    if (!point_criterion(p)) return {not_applicable("thm_1_8", "Theorem 1.8")};
    const AwRealization w = build_aw_point(p);
    const CompositionSeries series = composition_series_aw(w);
    bool mf_all = true;
    bool leonard_all = true;
    for (const auto& f : series.factors) {
        for (int x = 0; x < 3; ++x) mf_all = mf_all && is_multiplicity_free(factor_op(f, x));
        leonard_all = leonard_all && leonard_triple_check(f.A, f.B, f.C).result;
    }
    return {VerificationReport{
        "thm_1_8_ABC", "Theorem 1.8", mf_all == leonard_all,
        "factor multiplicity-free=" + yn(mf_all) + ", leonard triples=" + yn(leonard_all)}};
}

std::vector<VerificationReport> run_battery_vd(const GridPoint& p) {
    const VdSpec spec = vd_spec(p);
    if (!criterion_vd(spec)) return {not_applicable("predicate_battery", "Lemma 2.5")};
    const auto preds = diag_predicates(spec);
    const AwRealization w = build_vd(spec);
    const char* keys[3] = {"lemma_2_5_a", "lemma_2_5_b", "lemma_2_5_c"};
    const SquareMatrix* ops[3] = {&w.A, &w.B, &w.C};
    std::vector<VerificationReport> out;
    for (int x = 0; x < 3; ++x) {
        const bool pred = preds.at(keys[x]);
        const bool ok =
            is_diagonalizable(*ops[x]) == pred && is_multiplicity_free(*ops[x]) == pred;
        out.push_back(VerificationReport{keys[x], "Lemma 2.5", ok, "predicate=" + yn(pred)});
    }
    return out;
}

std::vector<VerificationReport> run_battery_e(const GridPoint& p) {
    const DahaSpecE spec = e_spec(p);
    if (!criterion_e(spec)) return {not_applicable("predicate_battery", "Lemmas 3.10-3.18")};
    const auto preds = diag_predicates(spec);
    const DahaRealization m = build_e(spec);
    std::vector<VerificationReport> out;
    if (p.twist == 0) {
        const struct {
            const char* key;
            const char* ref;
            int i;
        } gen[3] = {{"lemma_3_10_k1", "Lemma 3.10", 1},
                    {"lemma_3_11_k2", "Lemma 3.11", 2},
                    {"lemma_3_12_k3", "Lemma 3.12", 3}};
        for (const auto& g : gen) {
            const SquareMatrix x = m.t[static_cast<std::size_t>(g.i)] * m.t[0];
            const SquareMatrix rev = m.t[0] * m.t[static_cast<std::size_t>(g.i)];
            const bool pred = preds.at(g.key);
            const bool ok = is_diagonalizable(x) == pred && is_multiplicity_free(x) == pred &&
                            is_diagonalizable(rev) == pred;
            out.push_back(VerificationReport{g.key, g.ref, ok, "predicate=" + yn(pred)});
        }
        // one-directional: the short-window predicate forces the sum
        const struct {
            const char* key;
            int a, b;
        } suff[3] = {{"lemma_3_13_k1", 2, 3}, {"lemma_3_13_k2", 1, 3}, {"lemma_3_13_k3", 1, 2}};
        for (const auto& sf : suff) {
            const SquareMatrix x =
                m.t[static_cast<std::size_t>(sf.a)] * m.t[static_cast<std::size_t>(sf.b)];
            const SquareMatrix sum = x + inverse(x);
            const bool pred = preds.at(sf.key);
            const bool ok = !pred || is_diagonalizable(sum);
            out.push_back(VerificationReport{sf.key, "Lemma 3.13", ok, "predicate=" + yn(pred)});
        }
    }
    const DahaRealization tw = p.twist == 0 ? m : twist(m, TwistLabel{p.twist});
    const AwRealization push = push_to_aw(tw);
    const CompositionSeries series = composition_series_aw(push);
    const std::string lemma = "lemma_3_1" + std::to_string(5 + p.twist) + "_";
    const std::string ref = "Lemma 3.1" + std::to_string(5 + p.twist);
    const char* names[3] = {"A", "B", "C"};
    for (int x = 0; x < 3; ++x) {
        bool mf_all = true;
        for (const auto& f : series.factors)
            mf_all = mf_all && is_multiplicity_free(factor_op(f, x));
        const bool pred = preds.at(lemma + names[x]);
        out.push_back(
            VerificationReport{lemma + names[x], ref, mf_all == pred, "predicate=" + yn(pred)});
    }
    return out;
}

std::vector<VerificationReport> run_battery_o(const GridPoint& p) {
    const DahaSpecO spec = o_spec(p);
    if (!criterion_o(spec)) return {not_applicable("predicate_battery", "Lemmas 4.7-4.13")};
    const auto preds = diag_predicates(spec);
    const DahaRealization m = build_o(spec);
    std::vector<VerificationReport> out;
    const struct {
        const char* key;
        const char* ref;
        int i;
    } gen[3] = {{"lemma_4_7_k0k1", "Lemma 4.7", 1},
                {"lemma_4_8_k0k2", "Lemma 4.8", 2},
                {"lemma_4_9_k0k3", "Lemma 4.9", 3}};
    for (const auto& g : gen) {
        const SquareMatrix x = m.t[static_cast<std::size_t>(g.i)] * m.t[0];
        const SquareMatrix rev = m.t[0] * m.t[static_cast<std::size_t>(g.i)];
        const bool pred = preds.at(g.key);
        const bool ok = is_diagonalizable(x) == pred && is_multiplicity_free(x) == pred &&
                        is_diagonalizable(rev) == pred;
        out.push_back(VerificationReport{g.key, g.ref, ok, "predicate=" + yn(pred)});
    }
    const AwRealization push = push_to_aw(m);
    const SquareMatrix* ops[3] = {&push.A, &push.B, &push.C};
    const char* names[3] = {"A", "B", "C"};
    for (int x = 0; x < 3; ++x) {
        const bool pred = preds.at(std::string("lemma_4_10_") + names[x]);
        const bool ok = !pred || is_diagonalizable(*ops[x]);
        out.push_back(VerificationReport{std::string("lemma_4_10_") + names[x], "Lemma 4.10", ok,
                                         "predicate=" + yn(pred)});
    }
    const bool unit = spec.k[0] * spec.k[0] == FieldElement(1);
    const std::string lemma = unit ? "lemma_4_12_" : "lemma_4_13_";
    const std::string ref = unit ? "Lemma 4.12" : "Lemma 4.13";
    const CompositionSeries series = composition_series_aw(push);
    for (int x = 0; x < 3; ++x) {
        bool mf_all = true;
        for (const auto& f : series.factors)
            mf_all = mf_all && is_multiplicity_free(factor_op(f, x));
        const bool pred = preds.at(lemma + names[x]);
        out.push_back(
            VerificationReport{lemma + names[x], ref, mf_all == pred, "predicate=" + yn(pred)});
    }
    return out;
}

std::vector<VerificationReport> run_example_b_e(const GridPoint& p) {
    const DahaSpecE spec = e_spec(p);
    const bool irr = criterion_e(spec);
    const DahaRealization tw = build_daha_point(p);  // twist 2
    const AwRealization push = push_to_aw(tw);
    const bool x01 = is_diagonalizable(tw.t[0] * tw.t[1]);
    const bool x30 = is_diagonalizable(tw.t[3] * tw.t[0]);
    const bool da = is_diagonalizable(push.A);
    const bool db = is_diagonalizable(push.B);
    return {VerificationReport{
        "example_3_20", "Example 3.20", irr && !x01 && !x30 && da && db,
        "irreducible=" + yn(irr) + ", t0t1 diag=" + yn(x01) + ", t3t0 diag=" + yn(x30) +
            ", A diag=" + yn(da) + ", B diag=" + yn(db)}};
}

std::vector<VerificationReport> run_example_b_o(const GridPoint& p) {
    const DahaSpecO spec = o_spec(p);
    const bool irr = criterion_o(spec);
    const DahaRealization m = build_daha_point(p);  // untwisted
    const AwRealization push = push_to_aw(m);
    const bool x01 = is_diagonalizable(m.t[0] * m.t[1]);
    const bool x30 = is_diagonalizable(m.t[3] * m.t[0]);
    const bool da = is_diagonalizable(push.A);
    const bool db = is_diagonalizable(push.B);
    return {VerificationReport{
        "example_4_15", "Example 4.15", irr && !x01 && !x30 && da && db,
        "irreducible=" + yn(irr) + ", t0t1 diag=" + yn(x01) + ", t3t0 diag=" + yn(x30) +
            ", A diag=" + yn(da) + ", B diag=" + yn(db)}};
}

std::vector<VerificationReport> execute_point(const GridPoint& p) {
    if (p.suite == "daha_relations") return run_daha_relations(p);
    if (p.suite == "aw_centrality") return run_aw_centrality(p);
    if (p.suite == "determinants") return run_determinants(p);
    if (p.suite == "charpoly_t0t1") return run_charpoly(p);
    if (p.suite == "irreducible") return run_irreducible(p);
    if (p.suite == "factors") return run_factors(p);
    if (p.suite == "thm_1_6") return run_thm_1_6(p);
    if (p.suite == "thm_1_7") return run_thm_1_7(p);
    if (p.suite == "thm_1_8") return run_thm_1_8(p);
    if (p.suite == "predicate_battery") {
        if (p.family == Fam::Vd) return run_battery_vd(p);
        if (p.family == Fam::E) return run_battery_e(p);
        return run_battery_o(p);
    }
    if (p.suite == "example_b_E") return run_example_b_e(p);
    return run_example_b_o(p);
}

VerificationReport merge_reports(const GridPoint& p,
                                 const std::vector<VerificationReport>& reports) {
    VerificationReport rep{p.suite, suite_paper_ref(p.suite), true, ""};
    int failed = 0;
    for (const auto& r : reports)
        if (!r.pass) ++failed;
    rep.pass = failed == 0;
    rep.detail = std::to_string(reports.size() - static_cast<std::size_t>(failed)) + "/" +
                 std::to_string(reports.size()) + " checks passed";
    for (const auto& r : reports)
        if (!r.pass) rep.detail += "; " + r.check + ": " + r.detail;
    return rep;
}

// ---------- config plumbing ----------

void validate_config(const SweepConfig& c) {
    if (c.families.empty()) throw ConfigError("families must be nonempty");
    for (const std::string& f : c.families) fam_from(f);
    if (c.d_values.empty()) throw ConfigError("d values must be nonempty");
    for (int d : c.d_values)
        if (d < 0) throw ConfigError("d must be nonnegative");
    if (c.q_values.empty()) throw ConfigError("q_values must be nonempty");
    if (c.sampler.kind == "seeded") {
        if (c.sampler.count < 1) throw ConfigError("seeded sampler needs count >= 1");
    } else if (c.sampler.kind == "explicit") {
        if (c.sampler.points.empty()) throw ConfigError("explicit sampler needs points");
    } else {
        throw ConfigError("sampler kind must be \"seeded\" or \"explicit\"");
    }
    if (c.twists.empty()) throw ConfigError("twists must be nonempty");
    for (int t : c.twists)
        if (t < 0 || t > 3) throw ConfigError("twists must lie in 0..3");
    if (c.suites.empty()) throw ConfigError("suites must be nonempty");
    for (const std::string& s : c.suites) {
        if (!suite_known(s)) throw ConfigError("unknown suite: " + s);
        if (!c.include_boundary && suite_is_criterion_suite(s)) {
            throw ConfigError("suite " + s +
                              " verifies a criterion and needs its boundary points; "
                              "include_boundary cannot be false");
        }
    }
}

std::vector<FieldElement> parse_q_values(const SweepConfig& c) {
    std::vector<FieldElement> out;
    for (const std::string& s : c.q_values) {
        FieldElement v;
        try {
            v = parse_scalar(s);
        } catch (const ParseError& e) {
            throw ConfigError("bad q value \"" + s + "\": " + e.what());
        }
        if (!is_not_root_of_unity_guard(v))
            throw ConfigError("q value fails the root-of-unity guard: " + s);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<GridPoint> build_grid(const SweepConfig& cfg, const std::vector<FieldElement>& qs) {
    std::vector<GridPoint> grid;
    for (const std::string& suite : cfg.suites) {
        for (const std::string& fam_s : cfg.families) {
            const Fam fam = fam_from(fam_s);
            if (!suite_applies(suite, fam)) continue;
            for (int d : cfg.d_values) {
                if (fam == Fam::E && d % 2 == 0) continue;
                if (fam == Fam::O && d % 2 == 1) continue;
                if (d < suite_min_d(suite, fam)) continue;
                for (std::size_t qi = 0; qi < qs.size(); ++qi) {
                    const FieldElement& q = qs[qi];
                    std::vector<std::vector<FieldElement>> tuples;
                    if (suite_is_example(suite)) {
                        tuples = example_tuples(suite, d, q);
                    } else {
                        tuples = sampled_tuples(cfg, fam, d, q, qi);
                        if (cfg.include_boundary) {
                            if (suite_wants_criterion_false(suite)) {
                                for (auto& t : criterion_false_tuples(fam, d, q))
                                    tuples.push_back(std::move(t));
                            }
                            if (suite_wants_resonance(suite)) {
                                for (auto& t : resonance_tuples(fam, d, q))
                                    tuples.push_back(std::move(t));
                            }
                        }
                    }
                    const std::vector<int> twists =
                        suite_uses_config_twists(suite, fam)
                            ? cfg.twists
                            : std::vector<int>{suite_fixed_twist(suite)};
                    for (const auto& tup : tuples) {
                        for (int tw : twists) grid.push_back(GridPoint{fam, d, q, tup, tw, suite});
                    }
                }
            }
        }
    }
    return grid;
}

nlohmann::ordered_json config_json(const SweepConfig& c) {
    nlohmann::ordered_json j;
    j["families"] = c.families;
    j["d_values"] = c.d_values;
    j["q_values"] = c.q_values;
    nlohmann::ordered_json s;
    s["kind"] = c.sampler.kind;
    if (c.sampler.kind == "seeded") {
        s["seed"] = c.sampler.seed;
        s["count"] = c.sampler.count;
    } else {
        s["points"] = c.sampler.points;
    }
    j["sampler"] = std::move(s);
    j["twists"] = c.twists;
    j["suites"] = c.suites;
    j["include_boundary"] = c.include_boundary;
    return j;
}

nlohmann::ordered_json report_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["paper_ref"] = r.paper_ref;
    j["pass"] = r.pass;
    j["detail"] = r.detail;
    return j;
}

}  // namespace

const std::vector<std::string>& known_suites() { return kSuites; }

SweepConfig parse_sweep_config(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    SweepConfig c;
    try {
        c.families = j.at("families").get<std::vector<std::string>>();
        const bool has_values = j.contains("d_values");
        const bool has_range = j.contains("d_range");
        if (has_values == has_range)
            throw ConfigError("config needs exactly one of d_values or d_range");
        if (has_values) {
            c.d_values = j.at("d_values").get<std::vector<int>>();
        } else {
            const auto range = j.at("d_range").get<std::vector<int>>();
            if (range.size() != 2 || range[0] > range[1])
                throw ConfigError("d_range must be [lo, hi] with lo <= hi");
            for (int d = range[0]; d <= range[1]; ++d) c.d_values.push_back(d);
        }
        c.q_values = j.at("q_values").get<std::vector<std::string>>();
        const auto& s = j.at("sampler");
        c.sampler.kind = s.at("kind").get<std::string>();
        if (c.sampler.kind == "seeded") {
            c.sampler.seed = s.at("seed").get<std::uint64_t>();
            c.sampler.count = s.at("count").get<int>();
        } else if (c.sampler.kind == "explicit") {
            c.sampler.points = s.at("points").get<std::vector<std::vector<std::string>>>();
        }
        if (j.contains("twists")) c.twists = j.at("twists").get<std::vector<int>>();
        c.suites = j.at("suites").get<std::vector<std::string>>();
        if (j.contains("include_boundary")) c.include_boundary = j.at("include_boundary").get<bool>();
    } catch (const ConfigError&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    validate_config(c);
    return c;
}

std::string sweep_config_to_json(const SweepConfig& config) {
    return config_json(config).dump(2);
}

SuiteResult run_suite(const SweepConfig& config) {
    validate_config(config);
    const std::vector<FieldElement> qs = parse_q_values(config);
    const auto start = std::chrono::steady_clock::now();
    const std::vector<GridPoint> grid = build_grid(config, qs);
    if (grid.empty()) throw ConfigError("the configuration generates no grid points");

    SuiteResult res;
    res.config = config;
    for (const GridPoint& p : grid) {
        PointOutcome out;
        out.id = point_id(p);
        out.suite = p.suite;
        out.family = fam_name(p.family);
        out.d = p.d;
        out.q = p.q.to_string();
        out.twist = p.twist;
        for (const FieldElement& x : p.params) out.params.push_back(x.to_string());
        out.reports = execute_point(p);
        out.pass = true;
        for (const auto& r : out.reports) {
            ++res.check_count;
            if (!r.pass) {
                ++res.failed_checks;
                out.pass = false;
            }
        }
        if (!out.pass) ++res.failed_points;
        res.points.push_back(std::move(out));
    }
    const auto end = std::chrono::steady_clock::now();
    res.wall_ms = std::chrono::duration<double, std::milli>(end - start).count();
    return res;
}

std::string suite_result_to_json(const SuiteResult& result) {
    nlohmann::ordered_json j;
    j["config"] = config_json(result.config);
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (const PointOutcome& p : result.points) {
        nlohmann::ordered_json pj;
        pj["id"] = p.id;
        pj["suite"] = p.suite;
        pj["family"] = p.family;
        pj["d"] = p.d;
        pj["q"] = p.q;
        pj["twist"] = p.twist;
        pj["params"] = p.params;
        pj["pass"] = p.pass;
        nlohmann::ordered_json reps = nlohmann::ordered_json::array();
        for (const auto& r : p.reports) reps.push_back(report_json(r));
        pj["reports"] = std::move(reps);
        pts.push_back(std::move(pj));
    }
    j["points"] = std::move(pts);
    j["summary"] = {{"points", result.points.size()},
                    {"failed_points", result.failed_points},
                    {"checks", result.check_count},
                    {"failed_checks", result.failed_checks}};
    j["wall_ms"] = result.wall_ms;
    return j.dump(2);
}

VerificationReport replay(const std::string& point_id_text) {
    const GridPoint p = parse_point_id(point_id_text);
    std::vector<VerificationReport> reports;
    try {
        reports = execute_point(p);
    } catch (const UnknownPoint&) {
        throw;
    } catch (const Error& e) {
        throw UnknownPoint(std::string("point does not execute: ") + e.what());
    }
    return merge_reports(p, reports);
}

std::vector<FieldElement> seeded_params(const std::string& family, int d, const FieldElement& q,
                                        std::uint64_t seed) {
    return draw_sample_tuple(fam_from(family), d, q, 0, seed, 0);
}

}  // namespace awdaha
