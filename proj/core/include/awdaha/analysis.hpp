#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "awdaha/linalg.hpp"
#include "awdaha/realizations.hpp"

namespace awdaha {

// Outcome of one verification.  check is a stable machine id, paper_ref
// names the statement being certified, detail is free text.  Failures are
// outcomes, not exceptions.
struct VerificationReport {
    std::string check;
    std::string paper_ref;
    bool pass = false;
    std::string detail;
};

std::string report_to_json(const VerificationReport& r);

struct BurnsideResult {
    bool irreducible = false;
    // proper nonzero invariant subspace, present whenever reducible
    std::optional<Subspace> witness;
};

struct IrreducibilityVerdict {
    bool by_criterion = false;
    bool by_burnside = false;
    std::optional<Subspace> witness;
};

// One composition factor with the acting matrices in the factor's basis.
struct CompositionFactor {
    int dimension = 0;
    CentralCharacter character;
    Polynomial char_poly_a;
    Polynomial char_poly_b;
    SquareMatrix A, B, C;
};

struct CompositionSeries {
    std::vector<CompositionFactor> factors;
};

// Result of a Leonard pair or triple test.  multiplicity_free holds one
// entry per operator argument.  When result is true, certificate holds
// one eigenvalue ordering per condition (indices into the canonically
// sorted spectrum of the diagonalized operator); re-expressing the
// partner(s) in that ordered eigenbasis is exactly irreducible
// tridiagonal.  reason describes the first obstruction otherwise.
struct LeonardVerdict {
    std::vector<bool> multiplicity_free;
    bool result = false;
    std::vector<std::vector<int>> certificate;
    std::string reason;
};

// Checks the generator relations: each t_i invertible with the cached
// inverse, t_i + t_i^-1 central and equal to c_i times the identity, and
// the product relation t0 t1 t2 t3 = q^-1.
VerificationReport verify_daha_relations(const DahaRealization& m);

// Checks that the three central combinations built from A, B, C commute
// with A, B, C.  When all three are scalar matrices the scalars are
// recorded into m.character.
VerificationReport verify_aw_centrality(AwRealization& m);

// Absolute irreducibility: the unital algebra generated by the matrices
// has dimension n^2.  When reducible, a proper nonzero invariant subspace
// is extracted by spinning up candidate vectors (standard basis vectors
// and rational eigenvectors, on both the module and its dual); throws
// NonSplittingSpectrum if no candidate exhibits one.
BurnsideResult burnside_irreducible(const std::vector<SquareMatrix>& mats);

// Closed-form irreducibility predicates.
bool criterion_vd(const VdSpec& spec);
bool criterion_e(const DahaSpecE& spec);
bool criterion_o(const DahaSpecO& spec);

// Criterion and Burnside oracle side by side on one spec.
IrreducibilityVerdict irreducibility_vd(const VdSpec& spec);
IrreducibilityVerdict irreducibility_e(const DahaSpecE& spec);
IrreducibilityVerdict irreducibility_o(const DahaSpecO& spec);

// Composition series over the algebra generated by A, B, C: repeatedly
// extracts a minimal invariant subspace found by spin-up from candidate
// vectors (standard basis plus eigenvectors of A at each rational root of
// its char poly; ties broken by smallest dimension, then lexicographically
// smallest canonical basis), records it, and recurses into sub and
// quotient.  Factors are emitted bottom-up and each passes the Burnside
// test.  Throws NonSplittingSpectrum when no candidate splits a space the
// Burnside test rejects.
CompositionSeries composition_series_aw(const AwRealization& m);

// The closed-form factor list for the pushforward of m (family, d, twist
// and parameters decide the shapes).  Requires the module irreducible on
// the DAHA side; O-family predictions exist for the untwisted module only.
std::vector<VdSpec> predicted_factors(const DahaRealization& m);

// Multiset match of a computed series against the predicted factors on
// (dimension, central character, char poly of A, char poly of B).
// A mismatch is reported with pass = false, never thrown.
VerificationReport match_predicted_factors(const CompositionSeries& series,
                                           const DahaRealization& m);

LeonardVerdict leonard_pair_check(const SquareMatrix& l, const SquareMatrix& lstar);
LeonardVerdict leonard_triple_check(const SquareMatrix& a, const SquareMatrix& b,
                                    const SquareMatrix& c);

// Every closed-form diagonalizability/multiplicity-freeness predicate for
// the family, keyed by a stable name.
std::map<std::string, bool> diag_predicates(const VdSpec& spec);
std::map<std::string, bool> diag_predicates(const DahaSpecE& spec);
std::map<std::string, bool> diag_predicates(const DahaSpecO& spec);

// Invertible X with X g1[i] = g2[i] X for all i, when one exists in the
// solution space of the exact linear system.
std::optional<SquareMatrix> find_intertwiner(const std::vector<SquareMatrix>& gens1,
                                             const std::vector<SquareMatrix>& gens2);

}  // namespace awdaha
