#pragma once

// Niho exponents d = s(p^m - 1) + 1 over F_{p^{2m}}: construction, every
// closed-form prediction (uniformity, spectra, Walsh/FBCT/SOZD distributions,
// code weights, moment counts), the known four-valued families and their
// cyclotomic-shift closure, the C_{i,j} partition counts, the V-system on
// mu_{p^m+1}, diagonal-curve point counts, and the measured-vs-predicted
// verification drivers.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "niho/boomerang.hpp"
#include "niho/codes.hpp"
#include "niho/diff_spectrum.hpp"
#include "niho/field.hpp"
#include "niho/walsh.hpp"

namespace niho {

struct NihoExponent {
    int p = 0;
    int m = 0;
    long long s = 0;  // canonical residue in [0, p^m]
    long long d = 0;  // s(p^m - 1) + 1, normalized into [1, p^n - 1]
    long long s1 = 0; // gcd(s, p^m + 1)
    long long s2 = 0; // gcd(s - 1, p^m + 1)
};

NihoExponent make_niho(int p, int m, long long s);

// Inverse of the s -> d map. Throws BadExponentError unless d is congruent
// to 1 mod p^m - 1.
NihoExponent niho_from_d(int p, int m, long long d);

enum class Family { F1, F2, F3 };

// Canonical s residues of the named family over F_{p^{2m}}. F1 and F3 are
// characteristic-2 families; F2 = {2} exists for every p.
std::vector<long long> family_s_values(int p, int m, Family family);

struct PredictionReport {
    NihoExponent exponent;
    long long predicted_uniformity = 0;

    // Necessary condition for locally-APN: s1(s1-1) + s2(s2-1) <= 2 together
    // with the degeneracy exclusions (s in {0,1} gives a linearized map,
    // d = p^n - 1 the unit indicator). A function failing this is certainly
    // not locally-APN; passing it does not guarantee locally-APN.
    bool lapn_necessary = false;

    // Family facts.
    bool f1_member = false;       // p = 2 only
    bool f3_member = false;       // p = 2 only
    bool f2_member = false;       // s == 2
    bool family_shift_member = false; // d in the cyclotomic-shift closure of a member

    // Proven guarantee: member (or shift of a member) of a family with a
    // four-valued Walsh spectrum, excluding the degenerate corner. This is
    // the sound "predicted locally-APN" flag; the conditional distribution
    // predictions below are populated exactly when it holds.
    bool predicted_locally_apn = false;

    long long predicted_n3 = 0; // third-moment count, unconditional
    std::optional<long long> predicted_n4;
    std::optional<std::map<long long, long long>> predicted_spectrum;
    std::optional<std::map<long long, long long>> predicted_walsh; // rational values only
    std::optional<std::map<long long, long long>> predicted_boomerang; // FBCT or SOZD table
    std::optional<std::map<long long, long long>> predicted_code_weights;
};

// Closed-form evaluation only; no field enumeration.
PredictionReport predict(const NihoExponent& e);

// The four-value theorem tables for a locally-APN Niho exponent over
// F_{p^{2m}}, as plain integer maps.
std::map<long long, long long> lapn_spectrum_pattern(int p, int m);
std::map<long long, long long> lapn_walsh_pattern(int p, int m);
std::map<long long, long long> lapn_boomerang_pattern(int p, int m); // FBCT (p=2) / SOZD (p>2)
std::map<long long, long long> lapn_code_weight_pattern(int p, int m);

// Exact equality of a measured Walsh multiset with an integer-keyed pattern.
bool walsh_matches_pattern(const WalshDistribution& dist,
                           const std::map<long long, long long>& pattern);

// ---- verification ----

struct VerifyCheck {
    std::string name;
    bool applicable = true;
    bool match = true;
    std::string predicted;
    std::string measured;
};

struct VerifyReport {
    NihoExponent exponent;
    bool measured_locally_apn = false;
    long long measured_uniformity = 0;
    std::vector<VerifyCheck> checks;
    bool pass = true;
};

VerifyReport verify(const Field& f, const NihoExponent& e, const Exec& exec = {});

// ---- lemma-level counters ----

// |C_{i,j}| = #{x not in {0,-1} : ind(x+1) = i, ind(x) = j mod p^m+1}.
long long cij_count(const Field& f, long long i, long long j);

// Number of z in mu_{p^m+1} with
//   u z^{2g1-1} + v z^{g1+g2-1} + vbar z^{g1-g2} + ubar = 0
// (exponents taken mod p^m+1). With g2 = 0 (the d2 = 1 specialization,
// d2 = g2(p^m-1)+1) the count satisfies W(u,-v) = (V(u,v) - 1) p^m
// pointwise for d = g1(p^m-1)+1; g2 = 1 gives the d2 = p^m row, i.e. the
// same relation with v replaced by its conjugate.
long long count_V(const Field& f, long long g1, long long g2, FieldElement u, FieldElement v);

struct CurveReport {
    long long n1 = 0, n2 = 0;
    long long r1 = 0, r2 = 0;
    long long l = 0, k = 0, t = 0;
    long long measured = 0;
    std::optional<long long> predicted; // absent when no case pattern applies
    int case_id = 0;                    // 1..5, or 0 when no case applies
};

// Points (x,y) in F^2 on alpha x^{n1} + beta y^{n2} + 1 = 0, with the
// closed-form prediction when one of the five case patterns applies.
// Requires lcm(n1,n2) | p^l + 1 for some l | m, and alpha, beta nonzero.
CurveReport curve_points(const Field& f, long long n1, long long n2, FieldElement alpha,
                         FieldElement beta);
std::optional<long long> predicted_curve_points(const Field& f, long long n1, long long n2,
                                                FieldElement alpha, FieldElement beta,
                                                int* case_id = nullptr);

// Pointwise check of W(u,-v) = (V(u,v) - 1) p^m over the full (u,v) grid.
struct VSystemReport {
    long long g1 = 0, g2 = 0;
    long long pairs_checked = 0;
    long long mismatches = 0;
    bool all_match = true;
};
VSystemReport check_v_system(const Field& f, const NihoExponent& e, long long g2 = 0,
                             const Exec& exec = {});

// Exhaustive comparison of every |C_{i,j}| against the partition lemma.
struct CijReport {
    long long total = 0;          // sum over all (i,j); must be p^n - 2
    long long mismatched_cells = 0;
    bool all_match = true;
};
CijReport check_cij(const Field& f, const Exec& exec = {});

// ---- conjecture-evidence search ----

struct SearchRow {
    NihoExponent exponent;
    long long predicted_uniformity = 0;
    long long measured_uniformity = 0;
    bool lapn_necessary = false;
    bool lapn_guaranteed = false;
    bool measured_lapn = false;
    bool f1_member = false;
    bool f1_shift_member = false;
    // Smallest exponent in {p^j d mod p^n-1}: annotates cyclotomic
    // equivalence without quotienting the report by it, so equivalent rows
    // stay individually visible.
    long long cyclotomic_class_rep = 0;
    bool match = true; // no theorem violated at this s
};

struct SearchReport {
    int p = 0;
    int m = 0;
    FieldParams field;
    std::vector<SearchRow> rows;
    std::vector<long long> mismatches;      // s with a theorem violation
    std::vector<long long> lapn_outside_f1; // measured lAPN not in F1 or its shifts (p=2)
    bool pass = true;
};

SearchReport search_locally_apn(int p, int m, const Exec& exec = {},
                                long long size_cap = kDefaultFieldCap);

} // namespace niho
