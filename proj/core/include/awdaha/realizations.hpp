#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "awdaha/matrix.hpp"

namespace awdaha {

// The three module families the toolkit realizes as explicit matrices:
//   Vd  - the (d+1)-dimensional module of the Askey-Wilson algebra with
//         parameters a, b, c,
//   E   - the even-dimensional DAHA module (d odd, so d+1 is even) with
//         parameters k0..k3 tied by k0^2 = q^{-d-1},
//   O   - the odd-dimensional DAHA module (d even) with parameters tied
//         by k0*k1*k2*k3 = q^{-d-1}.

struct VdSpec {
    int d = 0;
    FieldElement q;
    FieldElement a, b, c;
};

struct DahaSpecE {
    int d = 1;
    FieldElement q;
    std::array<FieldElement, 4> k;
};

struct DahaSpecO {
    int d = 0;
    FieldElement q;
    std::array<FieldElement, 4> k;
};

// residue class of the cyclic twist; 0 is the identity twist
struct TwistLabel {
    int eps = 0;
};

enum class DahaFamily { E, O };

// scalars by which the three central elements of the Askey-Wilson
// algebra act on a module (each is (q+q^-1) times the corresponding
// central combination of the generators)
struct CentralCharacter {
    FieldElement alpha, beta, gamma;
    friend bool operator==(const CentralCharacter& x, const CentralCharacter& y) {
        return x.alpha == y.alpha && x.beta == y.beta && x.gamma == y.gamma;
    }
    friend bool operator!=(const CentralCharacter& x, const CentralCharacter& y) {
        return !(x == y);
    }
};

// A DAHA module in matrix form.  The untwisted spec (family, d, q, k) is
// kept alongside the matrices so downstream predicates can phrase their
// answers in terms of the original parameters.  Construction caches the
// generator inverses; c[i] is the scalar by which t_i + t_i^-1 acts.
struct DahaRealization {
    DahaFamily family = DahaFamily::E;
    int d = 1;
    FieldElement q;
    std::array<FieldElement, 4> k;
    int twist = 0;
    std::array<SquareMatrix, 4> t;
    std::array<SquareMatrix, 4> t_inv;
    std::array<FieldElement, 4> c;
    int n() const { return t[0].n(); }
};

// An Askey-Wilson module in matrix form.  The character is present when
// the central scalars are known at construction time (Vd builds) and
// absent until verified otherwise (pushforwards).
struct AwRealization {
    FieldElement q;
    SquareMatrix A, B, C;
    std::optional<CentralCharacter> character;
    int n() const { return A.n(); }
};

// Builders.  Each validates its spec (InvalidSpec) and transcribes the
// per-basis-vector actions into columns: column j is the image of v_j.
AwRealization build_vd(const VdSpec& spec);
DahaRealization build_e(const DahaSpecE& spec);
DahaRealization build_o(const DahaSpecO& spec);

// Cyclic twist: generator i of the result acts by the original
// generator (i + eps) mod 4; central scalars follow.  Group action:
// twist(twist(m, e1), e2) == twist(m, e1 + e2).
DahaRealization twist(const DahaRealization& m, TwistLabel eps);

// A = t1*t0 + (t1*t0)^-1, B = t3*t0 + (t3*t0)^-1, C = t2*t0 + (t2*t0)^-1.
// The character is left unset; the analysis module fills it in once the
// central elements are verified to act as scalars.
AwRealization push_to_aw(const DahaRealization& m);

// Product of generators named by symbols "t0".."t3" and "t0^-1".."t3^-1",
// left to right; the empty word is the identity.  Throws UnknownSymbol.
SquareMatrix evaluate_word(const DahaRealization& m, const std::vector<std::string>& word);

// A parsed spec file: one family plus an optional twist.  The JSON shape
// is {"family": "E"|"O"|"Vd", "d": int, "q": scalar, "params": {...},
// "twist": 0..3} where scalars are strings in the parse_scalar grammar
// (bare JSON numbers are accepted for integers).  Vd specs take params
// a, b, c and must have twist 0; E and O take params k0..k3.
struct ModuleSpec {
    std::variant<VdSpec, DahaSpecE, DahaSpecO> spec;
    int twist = 0;
};

ModuleSpec parse_module_spec(const std::string& json_text);
std::string module_spec_to_json(const ModuleSpec& ms);

// Convenience drivers for the CLI and sweep harness.
DahaRealization realize_daha(const ModuleSpec& ms);  // E/O only
AwRealization realize_aw(const ModuleSpec& ms);      // Vd directly, E/O via pushforward

}  // namespace awdaha
