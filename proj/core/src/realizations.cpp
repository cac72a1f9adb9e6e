#include "awdaha/realizations.hpp"

#include <utility>

#include <json.hpp>

#include "awdaha/errors.hpp"
#include "awdaha/linalg.hpp"

namespace awdaha {

namespace {

// Assembles a matrix from per-basis-vector rules: rule(j, entries) sets
// column j to the stated combination of basis vectors.  Rows outside the
// basis range contribute nothing (the small-d degenerate cases).  A
// column may be hit by two rules only if both produce the same image;
// a disagreement means the branch sets genuinely overlap and is an error.
class ColumnRules {
public:
    explicit ColumnRules(int n) : m_(n), set_(static_cast<std::size_t>(n), false), n_(n) {}

    void rule(int col, const std::vector<std::pair<int, FieldElement>>& entries) {
        Vec image(static_cast<std::size_t>(n_));
        for (const auto& [row, coeff] : entries) {
            if (row < 0 || row >= n_) continue;
            image[static_cast<std::size_t>(row)] = image[static_cast<std::size_t>(row)] + coeff;
        }
        if (set_[static_cast<std::size_t>(col)]) {
            for (int i = 0; i < n_; ++i) {
                if (m_.at(i, col) != image[static_cast<std::size_t>(i)]) {
                    throw Error("conflicting basis rules for column " + std::to_string(col));
                }
            }
            return;
        }
        for (int i = 0; i < n_; ++i) m_.set(i, col, image[static_cast<std::size_t>(i)]);
        set_[static_cast<std::size_t>(col)] = true;
    }

    SquareMatrix take() {
        for (int j = 0; j < n_; ++j) {
            if (!set_[static_cast<std::size_t>(j)]) {
                throw Error("no basis rule covers column " + std::to_string(j));
            }
        }
        return std::move(m_);
    }

private:
    SquareMatrix m_;
    std::vector<bool> set_;
    int n_;
};

void require_nonzero(const FieldElement& x, const char* name) {
    if (x.is_zero()) throw InvalidSpec(std::string(name) + " must be nonzero");
}

void require_q(const FieldElement& q) {
    if (!is_not_root_of_unity_guard(q)) {
        throw InvalidSpec("q must be nonzero and pass the root-of-unity guard");
    }
}

DahaRealization assemble(DahaFamily family, int d, const FieldElement& q,
                         const std::array<FieldElement, 4>& k,
                         std::array<SquareMatrix, 4> t) {
    return DahaRealization{
        family,
        d,
        q,
        k,
        0,
        t,
        {inverse(t[0]), inverse(t[1]), inverse(t[2]), inverse(t[3])},
        {k[0] + k[0].inverse(), k[1] + k[1].inverse(), k[2] + k[2].inverse(),
         k[3] + k[3].inverse()},
    };
}

}  // namespace

AwRealization build_vd(const VdSpec& spec) {
    if (spec.d < 0) throw InvalidSpec("d must be nonnegative");
    require_q(spec.q);
    require_nonzero(spec.a, "a");
    require_nonzero(spec.b, "b");
    require_nonzero(spec.c, "c");

    const int d = spec.d;
    const int n = d + 1;
    const FieldElement& q = spec.q;
    const FieldElement a = spec.a, b = spec.b, c = spec.c;
    const FieldElement ai = a.inverse(), bi = b.inverse(), ci = c.inverse();
    auto qp = [&q](int e) { return q.pow(e); };

    SquareMatrix A(n), B(n);
    for (int i = 0; i <= d; ++i) {
        A.set(i, i, a * qp(2 * i - d) + ai * qp(d - 2 * i));
        B.set(i, i, b * qp(2 * i - d) + bi * qp(d - 2 * i));
    }
    for (int i = 1; i <= d; ++i) {
        A.set(i, i - 1, FieldElement(1));
        B.set(i - 1, i,
              ai * bi * qp(d + 1) * (qp(i) - qp(-i)) * (qp(i - d - 1) - qp(d - i + 1)) *
                  (qp(-i) - a * b * c * qp(i - d - 1)) * (qp(-i) - a * b * ci * qp(i - d - 1)));
    }

    const FieldElement nu = qp(d + 1) + qp(-d - 1);
    const FieldElement alpha = (b + bi) * (c + ci) + (a + ai) * nu;
    const FieldElement beta = (c + ci) * (a + ai) + (b + bi) * nu;
    const FieldElement gamma = (a + ai) * (b + bi) + (c + ci) * nu;

    const FieldElement qi = q.inverse();
    SquareMatrix C = SquareMatrix::scalar(n, gamma / (q + qi)) -
                     (FieldElement(1) / (q * q - qi * qi)) * (q * (A * B) - qi * (B * A));
    return AwRealization{q, A, B, C, CentralCharacter{alpha, beta, gamma}};
}

DahaRealization build_e(const DahaSpecE& spec) {
    if (spec.d < 1 || spec.d % 2 == 0) throw InvalidSpec("d must be odd and positive");
    require_q(spec.q);
    for (int i = 0; i < 4; ++i) require_nonzero(spec.k[i], "k");
    const FieldElement& q = spec.q;
    const int d = spec.d;
    if (spec.k[0] * spec.k[0] != q.pow(-d - 1)) {
        throw InvalidSpec("k0^2 must equal q^{-d-1}");
    }

    const int n = d + 1;
    const FieldElement one(1);
    const FieldElement k0 = spec.k[0], k1 = spec.k[1], k2 = spec.k[2], k3 = spec.k[3];
    const FieldElement k0i = k0.inverse(), k1i = k1.inverse(), k2i = k2.inverse(),
                       k3i = k3.inverse();
    auto qp = [&q](int e) { return q.pow(e); };

    ColumnRules t0(n);
    t0.rule(0, {{0, k0}});
    t0.rule(d, {{d, k0}});
    for (int i = 2; i <= d - 1; i += 2) {
        t0.rule(i, {{i - 1, k0i * qp(-i) * (one - qp(i)) * (one - k0 * k0 * qp(i))},
                    {i, k0 + k0i - k0i * qp(-i)}});
    }
    for (int i = 1; i <= d - 2; i += 2) {
        const FieldElement u = k0i * qp(-i - 1);
        t0.rule(i, {{i, u}, {i + 1, -u}});
    }

    ColumnRules t1(n);
    t1.rule(0, {{0, k1}, {1, k1i}});
    for (int i = 2; i <= d - 1; i += 2) {
        t1.rule(i, {{i - 1, -(k1 * (one - qp(i)) * (one - k0 * k0 * qp(i)))},
                    {i, k1},
                    {i + 1, k1i}});
    }
    for (int i = 1; i <= d; i += 2) t1.rule(i, {{i, k1i}});

    ColumnRules t2(n);
    for (int i = 0; i <= d - 1; i += 2) {
        const FieldElement u = k0i * k1i * k3i * qp(-i - 1);
        t2.rule(i, {{i, u}, {i + 1, -u}});
    }
    for (int i = 1; i <= d; i += 2) {
        const FieldElement w = k0 * k1 * k3 * qp(i);
        t2.rule(i, {{i - 1, (w - k2) * (w - k2i) / w},
                    {i, k2 + k2i - k0i * k1i * k3i * qp(-i)}});
    }

    ColumnRules t3(n);
    for (int i = 0; i <= d - 1; i += 2) t3.rule(i, {{i, k3}});
    for (int i = 1; i <= d - 2; i += 2) {
        const FieldElement w = k0 * k1 * k3 * qp(i);
        t3.rule(i, {{i - 1, -(k3i * (w - k2) * (w - k2i))}, {i, k3i}, {i + 1, k3}});
    }
    {
        const FieldElement w = k0 * k1 * k3 * qp(d);
        t3.rule(d, {{d - 1, -(k3i * (w - k2) * (w - k2i))}, {d, k3i}});
    }

    return assemble(DahaFamily::E, d, q, spec.k, {t0.take(), t1.take(), t2.take(), t3.take()});
}

DahaRealization build_o(const DahaSpecO& spec) {
    if (spec.d < 0 || spec.d % 2 != 0) throw InvalidSpec("d must be even and nonnegative");
    require_q(spec.q);
    for (int i = 0; i < 4; ++i) require_nonzero(spec.k[i], "k");
    const FieldElement& q = spec.q;
    const int d = spec.d;
    if (spec.k[0] * spec.k[1] * spec.k[2] * spec.k[3] != q.pow(-d - 1)) {
        throw InvalidSpec("k0*k1*k2*k3 must equal q^{-d-1}");
    }

    const int n = d + 1;
    const FieldElement one(1);
    const FieldElement k0 = spec.k[0], k1 = spec.k[1], k2 = spec.k[2], k3 = spec.k[3];
    const FieldElement k0i = k0.inverse(), k1i = k1.inverse(), k2i = k2.inverse(),
                       k3i = k3.inverse();
    auto qp = [&q](int e) { return q.pow(e); };

    ColumnRules t0(n);
    t0.rule(0, {{0, k0}});
    for (int i = 2; i <= d; i += 2) {
        t0.rule(i, {{i - 1, k0i * qp(-i) * (one - qp(i)) * (one - k0 * k0 * qp(i))},
                    {i, k0 + k0i - k0i * qp(-i)}});
    }
    for (int i = 1; i <= d - 1; i += 2) {
        const FieldElement u = k0i * qp(-i - 1);
        t0.rule(i, {{i, u}, {i + 1, -u}});
    }

    ColumnRules t1(n);
    t1.rule(0, {{0, k1}, {1, k1i}});
    t1.rule(d, {{d - 1, -(k1 * (one - qp(d)) * (one - k0 * k0 * qp(d)))}, {d, k1}});
    for (int i = 2; i <= d - 2; i += 2) {
        t1.rule(i, {{i - 1, -(k1 * (one - qp(i)) * (one - k0 * k0 * qp(i)))},
                    {i, k1},
                    {i + 1, k1i}});
    }
    for (int i = 1; i <= d - 1; i += 2) t1.rule(i, {{i, k1i}});

    ColumnRules t2(n);
    for (int i = 0; i <= d - 2; i += 2) {
        const FieldElement u = k2 * qp(d - i);
        t2.rule(i, {{i, u}, {i + 1, -u}});
    }
    for (int i = 1; i <= d - 1; i += 2) {
        t2.rule(i, {{i - 1, -(k2 * (one - k2i * k2i * qp(i - d - 1)) * (one - qp(d - i + 1)))},
                    {i, k2 + k2i - k2 * qp(d - i + 1)}});
    }
    t2.rule(d, {{d, k2}});

    ColumnRules t3(n);
    for (int i = 0; i <= d; i += 2) t3.rule(i, {{i, k3}});
    for (int i = 1; i <= d - 1; i += 2) {
        t3.rule(i, {{i - 1, -(k3i * (one - k2i * k2i * qp(i - d - 1)) * (one - qp(i - d - 1)))},
                    {i, k3i},
                    {i + 1, k3}});
    }

    return assemble(DahaFamily::O, d, q, spec.k, {t0.take(), t1.take(), t2.take(), t3.take()});
}

DahaRealization twist(const DahaRealization& m, TwistLabel eps) {
    const int e = ((eps.eps % 4) + 4) % 4;
    DahaRealization out = m;
    for (int i = 0; i < 4; ++i) {
        const int j = (i + e) % 4;
        out.t[i] = m.t[j];
        out.t_inv[i] = m.t_inv[j];
        out.c[i] = m.c[j];
    }
    out.twist = (m.twist + e) % 4;
    return out;
}

AwRealization push_to_aw(const DahaRealization& m) {
    SquareMatrix A = m.t[1] * m.t[0] + m.t_inv[0] * m.t_inv[1];
    SquareMatrix B = m.t[3] * m.t[0] + m.t_inv[0] * m.t_inv[3];
    SquareMatrix C = m.t[2] * m.t[0] + m.t_inv[0] * m.t_inv[2];
    return AwRealization{m.q, std::move(A), std::move(B), std::move(C), std::nullopt};
}

SquareMatrix evaluate_word(const DahaRealization& m, const std::vector<std::string>& word) {
    SquareMatrix acc = SquareMatrix::identity(m.n());
    for (const std::string& s : word) {
        if (s.size() < 2 || s[0] != 't' || s[1] < '0' || s[1] > '3') {
            throw UnknownSymbol("unknown generator symbol: " + s);
        }
        const int i = s[1] - '0';
        if (s.size() == 2) {
            acc = acc * m.t[i];
        } else if (s.compare(2, std::string::npos, "^-1") == 0) {
            acc = acc * m.t_inv[i];
        } else {
            throw UnknownSymbol("unknown generator symbol: " + s);
        }
    }
    return acc;
}

namespace {

FieldElement scalar_from_json(const nlohmann::json& j, const char* name) {
    if (j.is_number_integer()) return FieldElement(j.get<long>());
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    throw InvalidSpec(std::string("field ") + name + " must be a scalar string or integer");
}

const nlohmann::json& field(const nlohmann::json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw InvalidSpec(std::string("missing field ") + name);
    return *it;
}

}  // namespace

ModuleSpec parse_module_spec(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
    if (!j.is_object()) throw InvalidSpec("spec must be a JSON object");

    try {
        const std::string family = field(j, "family").get<std::string>();
        const int d = field(j, "d").get<int>();
        const FieldElement q = scalar_from_json(field(j, "q"), "q");
        const nlohmann::json& params = field(j, "params");
        int tw = 0;
        if (auto it = j.find("twist"); it != j.end()) tw = it->get<int>();
        if (tw < 0 || tw > 3) throw InvalidSpec("twist must lie in 0..3");

        ModuleSpec ms;
        ms.twist = tw;
        if (family == "Vd") {
            if (tw != 0) throw InvalidSpec("twist applies to E and O families only");
            ms.spec = VdSpec{d, q, scalar_from_json(field(params, "a"), "a"),
                             scalar_from_json(field(params, "b"), "b"),
                             scalar_from_json(field(params, "c"), "c")};
        } else if (family == "E" || family == "O") {
            std::array<FieldElement, 4> k;
            const char* names[4] = {"k0", "k1", "k2", "k3"};
            for (int i = 0; i < 4; ++i) {
                k[i] = scalar_from_json(field(params, names[i]), names[i]);
            }
            if (family == "E") {
                ms.spec = DahaSpecE{d, q, k};
            } else {
                ms.spec = DahaSpecO{d, q, k};
            }
        } else {
            throw InvalidSpec("family must be one of E, O, Vd");
        }
        return ms;
    } catch (const nlohmann::json::type_error& e) {
        throw InvalidSpec(std::string("malformed spec: ") + e.what());
    }
}

std::string module_spec_to_json(const ModuleSpec& ms) {
    nlohmann::ordered_json j;
    if (const auto* v = std::get_if<VdSpec>(&ms.spec)) {
        j["family"] = "Vd";
        j["d"] = v->d;
        j["q"] = v->q.to_string();
        j["params"] = {{"a", v->a.to_string()}, {"b", v->b.to_string()}, {"c", v->c.to_string()}};
    } else {
        const bool is_e = std::holds_alternative<DahaSpecE>(ms.spec);
        const int d = is_e ? std::get<DahaSpecE>(ms.spec).d : std::get<DahaSpecO>(ms.spec).d;
        const FieldElement& q =
            is_e ? std::get<DahaSpecE>(ms.spec).q : std::get<DahaSpecO>(ms.spec).q;
        const auto& k = is_e ? std::get<DahaSpecE>(ms.spec).k : std::get<DahaSpecO>(ms.spec).k;
        j["family"] = is_e ? "E" : "O";
        j["d"] = d;
        j["q"] = q.to_string();
        j["params"] = {{"k0", k[0].to_string()},
                       {"k1", k[1].to_string()},
                       {"k2", k[2].to_string()},
                       {"k3", k[3].to_string()}};
    }
    j["twist"] = ms.twist;
    return j.dump();
}

DahaRealization realize_daha(const ModuleSpec& ms) {
    if (const auto* e = std::get_if<DahaSpecE>(&ms.spec)) {
        return twist(build_e(*e), TwistLabel{ms.twist});
    }
    if (const auto* o = std::get_if<DahaSpecO>(&ms.spec)) {
        return twist(build_o(*o), TwistLabel{ms.twist});
    }
    throw InvalidSpec("Vd specs do not define a DAHA realization");
}

AwRealization realize_aw(const ModuleSpec& ms) {
    if (const auto* v = std::get_if<VdSpec>(&ms.spec)) return build_vd(*v);
    return push_to_aw(realize_daha(ms));
}

}  // namespace awdaha
