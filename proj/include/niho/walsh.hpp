#pragma once

// Exact Walsh transform W_F(u,v) = sum_x zeta_p^{Tr(u x^d - v x)} computed by
// trace-class counting (p integer counters per pair, never complex floats),
// the full value distribution over F* x F, and the power-sum moment
// identities sum W^r = p^{2n} N_r.

#include <map>
#include <vector>

#include "niho/cyclotomic.hpp"
#include "niho/exec.hpp"
#include "niho/field.hpp"

namespace niho {

struct WalshDistribution {
    long long d = 0;
    // Multiset over (u,v) in F* x F, canonically ordered.
    std::map<CyclotomicInteger, long long> entries;
    // The u = 0 row is excluded from `entries` (the four-value theorems are
    // stated over F* x F) but participates in the moment sums.
    long long zero_row_w00 = 0; // W(0,0) = p^n
    long long zero_row_w0v = 0; // W(0,v) = 0 for v != 0
};

struct MomentReport {
    int r = 0;
    CyclotomicInteger lhs; // sum over ALL (u,v) in F x F of W^r
    long long n_r = 0;     // brute-force solution count N_r
    long long rhs = 0;     // p^{2n} * N_r
    bool match = false;
};

CyclotomicInteger walsh_value(const Field& f, long long d, FieldElement u, FieldElement v);

WalshDistribution walsh_distribution(const Field& f, long long d, const Exec& exec = {});

// N_r: solutions of x_1 + ... + x_r = 0 and x_1^d + ... + x_r^d = 0,
// enumerated over r-1 free variables. r in {1,2,3,4}.
long long count_Nr(const Field& f, long long d, int r, const Exec& exec = {});

// Alternating-sign fourth count: x1 - x2 + x3 - x4 = 0 and the same with
// d-th powers. Coincides with N_4 for odd d and in characteristic 2.
long long count_fourth_alternating(const Field& f, long long d, const Exec& exec = {});

MomentReport moment(const Field& f, long long d, int r, const Exec& exec = {});

// All four moments from one distribution pass.
std::vector<MomentReport> moments(const Field& f, long long d, const WalshDistribution& dist,
                                  const Exec& exec = {});

} // namespace niho
