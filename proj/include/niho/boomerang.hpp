#pragma once

// FBCT (characteristic 2) and second-order zero differential spectra (any
// characteristic) of x^d. The table entry at (a,b) with ab != 0 depends only
// on c = a/b (substitute y = x/b), so the full p^{2n}-cell distribution costs
// p^{2n} work instead of p^{3n}; the naive full-table path is kept as an
// oracle for small fields.

#include <map>

#include "niho/exec.hpp"
#include "niho/field.hpp"

namespace niho {

enum class BoomerangKind { FBCT, SOZD };

struct BoomerangDistribution {
    long long d = 0;
    BoomerangKind kind = BoomerangKind::FBCT;
    std::map<long long, long long> entries; // value -> #(a,b) pairs
    long long uniformity = 0; // max over the kind's non-degenerate index set
};

// #{x : F(x+a+b) + F(x+a) + F(x+b) + F(x) = 0}, characteristic 2 only.
long long fbct_entry(const Field& f, long long d, FieldElement a, FieldElement b);

// #{x : F(x+a+b) - F(x+a) - F(x+b) + F(x) = 0}, any characteristic.
long long sozd_entry(const Field& f, long long d, FieldElement a, FieldElement b);

BoomerangDistribution fbct_distribution(const Field& f, long long d, const Exec& exec = {});
BoomerangDistribution sozd_distribution(const Field& f, long long d, const Exec& exec = {});

// Full (a,b)-table enumeration; the oracle the fast path is checked against.
BoomerangDistribution fbct_distribution_naive(const Field& f, long long d,
                                              const Exec& exec = {});

} // namespace niho
