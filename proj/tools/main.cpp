#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "awdaha/analysis.hpp"
#include "awdaha/errors.hpp"
#include "awdaha/harness.hpp"
#include "awdaha/realizations.hpp"

namespace {

using namespace awdaha;
using nlohmann::ordered_json;

// ---------- output formatting ----------

std::string fe_str(const FieldElement& x) { return x.to_string(); }

ordered_json matrix_json(const SquareMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.n(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.n(); ++j) row.push_back(fe_str(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string matrix_text(const SquareMatrix& m, const std::string& indent = "  ") {
    std::vector<std::size_t> width(static_cast<std::size_t>(m.n()), 0);
    for (int j = 0; j < m.n(); ++j)
        for (int i = 0; i < m.n(); ++i)
            width[static_cast<std::size_t>(j)] =
                std::max(width[static_cast<std::size_t>(j)], fe_str(m.at(i, j)).size());
    std::string out;
    for (int i = 0; i < m.n(); ++i) {
        out += indent + "[";
        for (int j = 0; j < m.n(); ++j) {
            const std::string s = fe_str(m.at(i, j));
            out += " " + s + std::string(width[static_cast<std::size_t>(j)] - s.size(), ' ');
        }
        out += " ]\n";
    }
    return out;
}

std::string poly_text(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.deg(); i >= 0; --i) {
        FieldElement c = p.coeff(i);
        if (c.is_zero()) continue;
        std::string cs = fe_str(c);
        const bool plain_negative = cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
        if (out.empty()) {
            if (plain_negative) {
                out = "-";
                c = -c;
                cs = cs.substr(1);
            }
        } else if (plain_negative) {
            out += " - ";
            c = -c;
            cs = cs.substr(1);
        } else {
            out += " + ";
        }
        if (i == 0) {
            out += cs;
            continue;
        }
        const std::string xs = i == 1 ? "x" : "x^" + std::to_string(i);
        if (c.is_one()) {
            out += xs;
        } else {
            const bool wrap = cs.find_first_of("+-", 1) != std::string::npos;
            out += (wrap ? "(" + cs + ")" : cs) + "*" + xs;
        }
    }
    return out;
}

ordered_json poly_json(const Polynomial& p) {
    ordered_json coeffs = ordered_json::array();
    for (const FieldElement& c : p.coeffs()) coeffs.push_back(fe_str(c));
    return ordered_json{{"coeffs_low_first", std::move(coeffs)}, {"text", poly_text(p)}};
}

ordered_json report_json_obj(const VerificationReport& r) {
    return ordered_json{
        {"check", r.check}, {"paper_ref", r.paper_ref}, {"pass", r.pass}, {"detail", r.detail}};
}

std::string report_text(const VerificationReport& r) {
    return r.check + ": " + (r.pass ? "pass" : "FAIL") + "  " + r.detail;
}

ordered_json subspace_json(const Subspace& s) {
    ordered_json basis = ordered_json::array();
    for (const Vec& v : s.basis) {
        ordered_json row = ordered_json::array();
        for (const FieldElement& x : v) row.push_back(fe_str(x));
        basis.push_back(std::move(row));
    }
    return ordered_json{{"dimension", s.dim()}, {"basis", std::move(basis)}};
}

ordered_json character_json(const CentralCharacter& ch) {
    return ordered_json{
        {"alpha", fe_str(ch.alpha)}, {"beta", fe_str(ch.beta)}, {"gamma", fe_str(ch.gamma)}};
}

std::string character_text(const CentralCharacter& ch) {
    return "alpha=" + fe_str(ch.alpha) + ", beta=" + fe_str(ch.beta) +
           ", gamma=" + fe_str(ch.gamma);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw ConfigError("cannot open output file " + out_path);
    f << text;
    if (text.empty() || text.back() != '\n') f << '\n';
}

// ---------- spec resolution ----------

struct SpecFlags {
    std::string config_path;
    std::string family;
    int d = -1;
    std::string q_text;
    std::string a, b, c;
    std::string k_csv;
    std::string k0;
    std::uint64_t kseed = 0;
    bool kseed_set = false;
    int twist = 0;
};

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot read file " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

ModuleSpec resolve_spec(const SpecFlags& f) {
    if (!f.config_path.empty()) return parse_module_spec(read_file(f.config_path));
    if (f.family.empty() || f.d < 0 || f.q_text.empty())
        throw ConfigError("--family, --d and --q are required unless --config is given");
    const FieldElement q = parse_scalar(f.q_text);

    if (f.family == "Vd") {
        std::vector<std::string> abc;
        if (f.kseed_set) {
            const auto drawn = seeded_params("Vd", f.d, q, f.kseed);
            for (const auto& x : drawn) abc.push_back(fe_str(x));
        } else if (!f.k_csv.empty()) {
            abc = split_csv(f.k_csv);
        } else {
            abc = {f.a, f.b, f.c};
            if (f.a.empty() || f.b.empty() || f.c.empty())
                throw ConfigError("Vd needs --a, --b, --c (or --k a,b,c, or --kseed)");
        }
        if (abc.size() != 3) throw ConfigError("Vd takes exactly three parameters");
        if (!f.k0.empty()) throw ConfigError("--k0 applies to family E only");
        if (f.twist != 0) throw ConfigError("Vd modules take no twist");
        return ModuleSpec{
            VdSpec{f.d, q, parse_scalar(abc[0]), parse_scalar(abc[1]), parse_scalar(abc[2])}, 0};
    }
    if (f.family != "E" && f.family != "O")
        throw ConfigError("unknown family " + f.family + " (expected Vd, E or O)");

    std::array<FieldElement, 4> k;
    if (f.kseed_set) {
        const auto drawn = seeded_params(f.family, f.d, q, f.kseed);
        for (std::size_t i = 0; i < 4; ++i) k[i] = drawn[i];
    } else {
        std::vector<std::string> parts = split_csv(f.k_csv);
        if (f.family == "E") {
            if (parts.size() == 3) {
                parts.insert(parts.begin(), f.k0.empty() ? std::string("auto") : f.k0);
            } else if (parts.size() == 4) {
                if (!f.k0.empty()) throw ConfigError("--k0 conflicts with a four-entry --k");
            } else {
                throw ConfigError("E takes --k k1,k2,k3 (with --k0) or --k k0,k1,k2,k3");
            }
        } else {
            if (!f.k0.empty()) throw ConfigError("--k0 applies to family E only");
            if (parts.size() == 3) parts.push_back("auto");
            if (parts.size() != 4)
                throw ConfigError("O takes --k k0,k1,k2,k3 (the last entry may be auto)");
        }
        for (std::size_t i = 0; i < 4; ++i) {
            if (parts[i] != "auto") {
                k[i] = parse_scalar(parts[i]);
                continue;
            }
            if (f.family == "E" && i == 0) {
                k[0] = q.pow(-(static_cast<long>(f.d) + 1) / 2);
            } else if (f.family == "O" && i == 3) {
                const FieldElement denom = k[0] * k[1] * k[2];
                if (denom.is_zero()) throw ConfigError("auto slot needs nonzero k0*k1*k2");
                k[3] = q.pow(-static_cast<long>(f.d) - 1) / denom;
            } else {
                throw ConfigError("auto is only solvable in the constrained slot (k0 for E, "
                                  "the last entry for O)");
            }
        }
    }
    if (f.family == "E") return ModuleSpec{DahaSpecE{f.d, q, k}, f.twist};
    return ModuleSpec{DahaSpecO{f.d, q, k}, f.twist};
}

ordered_json spec_echo(const ModuleSpec& ms) { return ordered_json::parse(module_spec_to_json(ms)); }

std::string spec_header(const ModuleSpec& ms) {
    const ordered_json j = spec_echo(ms);
    std::string line = "family=" + j.at("family").get<std::string>() +
                       " d=" + std::to_string(j.at("d").get<int>()) +
                       " q=" + j.at("q").get<std::string>();
    if (j.at("family") != "Vd") line += " twist=" + std::to_string(ms.twist);
    line += "\nparams: ";
    bool first = true;
    for (const auto& [key, val] : j.at("params").items()) {
        if (!first) line += ", ";
        line += key + "=" + val.get<std::string>();
        first = false;
    }
    return line;
}

bool module_criterion(const ModuleSpec& ms) {
    if (const auto* v = std::get_if<VdSpec>(&ms.spec)) return criterion_vd(*v);
    if (const auto* e = std::get_if<DahaSpecE>(&ms.spec)) return criterion_e(*e);
    return criterion_o(std::get<DahaSpecO>(ms.spec));
}

// ---------- commands ----------

int cmd_build(const ModuleSpec& ms, const std::string& format, const std::string& out) {
    if (std::holds_alternative<VdSpec>(ms.spec)) {
        const AwRealization aw = realize_aw(ms);
        if (format == "json") {
            ordered_json j{{"command", "build"}, {"spec", spec_echo(ms)}};
            j["A"] = matrix_json(aw.A);
            j["B"] = matrix_json(aw.B);
            j["C"] = matrix_json(aw.C);
            j["character"] = character_json(*aw.character);
            emit(j.dump(2), out);
            return 0;
        }
        std::string text = spec_header(ms) + "\n";
        text += "A =\n" + matrix_text(aw.A);
        text += "B =\n" + matrix_text(aw.B);
        text += "C =\n" + matrix_text(aw.C);
        text += character_text(*aw.character) + "\n";
        emit(text, out);
        return 0;
    }
    const DahaRealization m = realize_daha(ms);
    const AwRealization push = push_to_aw(m);
    const SquareMatrix product = m.t[0] * m.t[1] * m.t[2] * m.t[3];
    const std::optional<FieldElement> scalar = product.as_scalar();
    if (format == "json") {
        ordered_json j{{"command", "build"}, {"spec", spec_echo(ms)}};
        ordered_json gens = ordered_json::array();
        for (const SquareMatrix& t : m.t) gens.push_back(matrix_json(t));
        j["t"] = std::move(gens);
        j["t0t1t2t3"] = scalar ? ordered_json(fe_str(*scalar)) : ordered_json(nullptr);
        j["A"] = matrix_json(push.A);
        j["B"] = matrix_json(push.B);
        j["C"] = matrix_json(push.C);
        emit(j.dump(2), out);
        return 0;
    }
    std::string text = spec_header(ms) + "\n";
    for (int i = 0; i < 4; ++i)
        text += "t" + std::to_string(i) + " =\n" + matrix_text(m.t[static_cast<std::size_t>(i)]);
    text += "t0*t1*t2*t3 = " + (scalar ? fe_str(*scalar) : std::string("(not scalar)")) + "\n";
    text += "A =\n" + matrix_text(push.A);
    text += "B =\n" + matrix_text(push.B);
    text += "C =\n" + matrix_text(push.C);
    emit(text, out);
    return 0;
}

int cmd_verify(const ModuleSpec& ms, const std::string& format, const std::string& out) {
    std::vector<VerificationReport> reports;
    if (std::holds_alternative<VdSpec>(ms.spec)) {
        AwRealization aw = realize_aw(ms);
        reports.push_back(verify_aw_centrality(aw));
    } else {
        const DahaRealization m = realize_daha(ms);
        reports.push_back(verify_daha_relations(m));
        AwRealization push = push_to_aw(m);
        reports.push_back(verify_aw_centrality(push));
    }
    bool all = true;
    for (const auto& r : reports) all = all && r.pass;
    if (format == "json") {
        ordered_json j{{"command", "verify"}, {"spec", spec_echo(ms)}, {"pass", all}};
        ordered_json rs = ordered_json::array();
        for (const auto& r : reports) rs.push_back(report_json_obj(r));
        j["reports"] = std::move(rs);
        emit(j.dump(2), out);
    } else {
        std::string text = spec_header(ms) + "\n";
        for (const auto& r : reports) text += report_text(r) + "\n";
        emit(text, out);
    }
    return all ? 0 : 1;
}

int cmd_irreducible(const ModuleSpec& ms, const std::string& format, const std::string& out) {
    IrreducibilityVerdict v;
    if (const auto* vd = std::get_if<VdSpec>(&ms.spec)) {
        v = irreducibility_vd(*vd);
    } else if (const auto* e = std::get_if<DahaSpecE>(&ms.spec)) {
        v = irreducibility_e(*e);
    } else {
        v = irreducibility_o(std::get<DahaSpecO>(ms.spec));
    }
    const bool agree = v.by_criterion == v.by_burnside;
    if (format == "json") {
        ordered_json j{{"command", "irreducible"},
                       {"spec", spec_echo(ms)},
                       {"criterion", v.by_criterion},
                       {"burnside", v.by_burnside},
                       {"agree", agree}};
        j["witness"] = v.witness ? subspace_json(*v.witness) : ordered_json(nullptr);
        emit(j.dump(2), out);
    } else {
        std::string text = spec_header(ms) + "\n";
        text += std::string("criterion: ") + (v.by_criterion ? "irreducible" : "reducible") + "\n";
        text += std::string("burnside:  ") + (v.by_burnside ? "irreducible" : "reducible") + "\n";
        text += std::string("agreement: ") + (agree ? "yes" : "NO") + "\n";
        if (v.witness) {
            text += "witness: invariant subspace of dimension " +
                    std::to_string(v.witness->dim()) + "\n";
            for (const Vec& row : v.witness->basis) {
                text += "  span";
                for (const FieldElement& x : row) text += " " + fe_str(x);
                text += "\n";
            }
        }
        emit(text, out);
    }
    return agree ? 0 : 1;
}

int cmd_factors(const ModuleSpec& ms, const std::string& format, const std::string& out) {
    const AwRealization aw = realize_aw(ms);
    const CompositionSeries series = composition_series_aw(aw);
    std::optional<VerificationReport> match;
    if (!std::holds_alternative<VdSpec>(ms.spec) && module_criterion(ms))
        match = match_predicted_factors(series, realize_daha(ms));
    if (format == "json") {
        ordered_json j{{"command", "factors"}, {"spec", spec_echo(ms)}};
        ordered_json fs = ordered_json::array();
        for (const auto& f : series.factors) {
            fs.push_back(ordered_json{{"dimension", f.dimension},
                                      {"character", character_json(f.character)},
                                      {"charpoly_A", poly_json(f.char_poly_a)},
                                      {"charpoly_B", poly_json(f.char_poly_b)}});
        }
        j["factors"] = std::move(fs);
        j["match"] = match ? report_json_obj(*match) : ordered_json(nullptr);
        emit(j.dump(2), out);
    } else {
        std::string text = spec_header(ms) + "\n";
        text += std::to_string(series.factors.size()) + " composition factor" +
                (series.factors.size() == 1 ? "" : "s") + "\n";
        for (std::size_t i = 0; i < series.factors.size(); ++i) {
            const auto& f = series.factors[i];
            text += "factor " + std::to_string(i) + ": dim " + std::to_string(f.dimension) +
                    ", " + character_text(f.character) + "\n";
            text += "  charpoly(A) = " + poly_text(f.char_poly_a) + "\n";
            text += "  charpoly(B) = " + poly_text(f.char_poly_b) + "\n";
        }
        if (match) {
            text += "predicted match: " + report_text(*match) + "\n";
        } else if (!std::holds_alternative<VdSpec>(ms.spec)) {
            text += "predicted match: not applicable (module reducible)\n";
        }
        emit(text, out);
    }
    return !match || match->pass ? 0 : 1;
}

std::string orderings_text(const std::vector<std::vector<int>>& cert) {
    std::string out;
    for (std::size_t i = 0; i < cert.size(); ++i) {
        if (i > 0) out += " | ";
        for (std::size_t j = 0; j < cert[i].size(); ++j) {
            if (j > 0) out += ",";
            out += std::to_string(cert[i][j]);
        }
    }
    return out;
}

ordered_json leonard_json(const LeonardVerdict& v) {
    ordered_json j{{"result", v.result}};
    j["multiplicity_free"] = v.multiplicity_free;
    j["certificate"] = v.certificate;
    j["reason"] = v.reason;
    return j;
}

std::string leonard_text(const std::string& label, const LeonardVerdict& v) {
    if (v.result) return "  " + label + ": yes; orderings " + orderings_text(v.certificate);
    return "  " + label + ": no (" + v.reason + ")";
}

int cmd_leonard(const ModuleSpec& ms, const std::string& format, const std::string& out) {
    const AwRealization aw = realize_aw(ms);
    const CompositionSeries series = composition_series_aw(aw);
    ordered_json jfs = ordered_json::array();
    std::string text = spec_header(ms) + "\n";
    for (std::size_t i = 0; i < series.factors.size(); ++i) {
        const auto& f = series.factors[i];
        const LeonardVerdict ab = leonard_pair_check(f.A, f.B);
        const LeonardVerdict bc = leonard_pair_check(f.B, f.C);
        const LeonardVerdict ca = leonard_pair_check(f.C, f.A);
        const LeonardVerdict abc = leonard_triple_check(f.A, f.B, f.C);
        if (format == "json") {
            jfs.push_back(ordered_json{{"dimension", f.dimension},
                                       {"pair_AB", leonard_json(ab)},
                                       {"pair_BC", leonard_json(bc)},
                                       {"pair_CA", leonard_json(ca)},
                                       {"triple", leonard_json(abc)}});
        } else {
            text += "factor " + std::to_string(i) + " (dim " + std::to_string(f.dimension) +
                    "):\n";
            text += leonard_text("pair (A,B)", ab) + "\n";
            text += leonard_text("pair (B,C)", bc) + "\n";
            text += leonard_text("pair (C,A)", ca) + "\n";
            text += leonard_text("triple (A,B,C)", abc) + "\n";
        }
    }
    if (format == "json") {
        ordered_json j{{"command", "leonard"}, {"spec", spec_echo(ms)}};
        j["factors"] = std::move(jfs);
        emit(j.dump(2), out);
    } else {
        emit(text, out);
    }
    return 0;
}

int cmd_suite(const std::string& config_path, const std::optional<std::uint64_t>& seed,
              const std::string& out) {
    SweepConfig config = parse_sweep_config(read_file(config_path));
    if (seed) config.sampler.seed = *seed;
    const SuiteResult result = run_suite(config);
    emit(suite_result_to_json(result), out);
    return result.failed_checks == 0 ? 0 : 1;
}

int cmd_replay(const std::string& id, const std::string& format, const std::string& out) {
    const VerificationReport r = replay(id);
    if (format == "json") {
        emit(report_to_json(r), out);
    } else {
        emit(report_text(r), out);
    }
    return r.pass ? 0 : 1;
}

void add_output_flags(CLI::App* sub, std::string& format, std::string& out_path) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--out", out_path, "write output to this file instead of stdout");
}

void add_spec_flags(CLI::App* sub, SpecFlags& f) {
    auto* config = sub->add_option("--config", f.config_path,
                                   "module spec as a JSON file instead of flags");
    auto* family = sub->add_option("--family", f.family, "module family: Vd, E or O");
    auto* d = sub->add_option("--d", f.d, "diameter parameter d")->check(CLI::NonNegativeNumber);
    auto* q = sub->add_option("--q", f.q_text, "deformation scalar, e.g. 2, 3/2 or q");
    auto* a = sub->add_option("--a", f.a, "Vd parameter a");
    auto* b = sub->add_option("--b", f.b, "Vd parameter b");
    auto* c = sub->add_option("--c", f.c, "Vd parameter c");
    auto* k = sub->add_option("--k", f.k_csv,
                              "comma-separated parameters (Vd: a,b,c; E: k1,k2,k3 or "
                              "k0,k1,k2,k3; O: k0,k1,k2,k3, constrained slot may be auto)");
    auto* k0 = sub->add_option("--k0", f.k0, "E parameter k0 (defaults to the solved value)");
    auto* kseed =
        sub->add_option("--kseed", f.kseed, "draw the parameter tuple from this seed instead");
    auto* twist =
        sub->add_option("--twist", f.twist, "cyclic twist 0..3 (E and O modules)")
            ->check(CLI::Range(0, 3));
    kseed->excludes(k)->excludes(k0)->excludes(a)->excludes(b)->excludes(c);
    for (auto* opt : {family, d, q, a, b, c, k, k0, kseed, twist}) config->excludes(opt);
    sub->callback([kseed, &f]() { f.kseed_set = kseed->count() > 0; });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact module realizations and verdicts for the Askey-Wilson algebra and the "
                 "(C1v,C1) double affine Hecke algebra"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_path;

    SpecFlags build_f, verify_f, irred_f, factors_f, leonard_f;
    auto* build = app.add_subcommand("build", "print the generator matrices of a module");
    add_spec_flags(build, build_f);
    auto* verify = app.add_subcommand("verify", "check the defining relations and centrality");
    add_spec_flags(verify, verify_f);
    auto* irred = app.add_subcommand("irreducible",
                                     "compare the closed-form criterion with the matrix-algebra "
                                     "span test");
    add_spec_flags(irred, irred_f);
    auto* factors = app.add_subcommand("factors",
                                       "composition series and the predicted-factor match");
    add_spec_flags(factors, factors_f);
    auto* leonard = app.add_subcommand("leonard",
                                       "pair and triple verdicts on every composition factor");
    add_spec_flags(leonard, leonard_f);

    std::string suite_config;
    std::optional<std::uint64_t> suite_seed;
    std::uint64_t suite_seed_value = 0;
    auto* suite = app.add_subcommand("suite", "run a sweep described by a JSON config");
    suite->add_option("--config", suite_config, "sweep config JSON file")->required();
    auto* seed_opt = suite->add_option("--seed", suite_seed_value, "override the sampler seed");

    std::string replay_id;
    auto* replay_cmd = app.add_subcommand("replay", "re-run one sweep point from its id");
    replay_cmd->add_option("id", replay_id, "point id as printed in suite results")->required();

    for (auto* sub : {build, verify, irred, factors, leonard, suite, replay_cmd})
        add_output_flags(sub, format, out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (seed_opt->count() > 0) suite_seed = suite_seed_value;

    try {
        if (build->parsed()) return cmd_build(resolve_spec(build_f), format, out_path);
        if (verify->parsed()) return cmd_verify(resolve_spec(verify_f), format, out_path);
        if (irred->parsed()) return cmd_irreducible(resolve_spec(irred_f), format, out_path);
        if (factors->parsed()) return cmd_factors(resolve_spec(factors_f), format, out_path);
        if (leonard->parsed()) return cmd_leonard(resolve_spec(leonard_f), format, out_path);
        if (suite->parsed()) return cmd_suite(suite_config, suite_seed, out_path);
        if (replay_cmd->parsed()) return cmd_replay(replay_id, format, out_path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
