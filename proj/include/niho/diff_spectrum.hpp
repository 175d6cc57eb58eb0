#pragma once

// Differential analysis of the power map F(x) = x^d over F_{p^n}. Only the
// a = 1 derivative row is ever materialized; the scaling identity
// D_a(x) = b  <=>  D_1(x/a) = b/a^d reduces the whole DDT to it.

#include <cstdint>
#include <map>
#include <vector>

#include "niho/field.hpp"

namespace niho {

struct DifferentialSpectrum {
    long long d = 0;
    std::map<long long, long long> counts; // i -> omega_i, zero multiplicities omitted
    long long uniformity = 0;              // max i with omega_i > 0
    long long max_outside_prime_field = 0; // max Delta(1,b) over b outside F_p
    bool locally_apn = false;              // max_outside_prime_field == 2, exactly
};

// #{x : (x+1)^d - x^d = b} for every b, indexed by rep(b). Sums to p^n.
std::vector<long long> delta_counts(const Field& f, long long d);

// Any DDT cell as a view over the materialized a = 1 row, via the scaling
// identity Delta(a, b) = Delta(1, b / a^d). The a = 0 row is 0 everywhere
// except Delta(0, 0) = p^n.
long long ddt_entry(const Field& f, long long d, const std::vector<long long>& unit_row,
                    FieldElement a, FieldElement b);

DifferentialSpectrum differential_spectrum(const Field& f, long long d);

// Exact check of sum_i i^2 omega_i = (M - p^{2n}) / (p^n - 1), where M counts
// solutions of x1 - x2 + x3 - x4 = 0, x1^d - x2^d + x3^d - x4^d = 0.
// Throws NonIntegralRatioError if the ratio is not an integer.
bool second_moment_check(const Field& f, long long d, const DifferentialSpectrum& spectrum,
                         long long M);

// Valid power-map exponents are 1..p^n-1 inclusive (x^{p^n-1} is the unit
// indicator and arises from Niho normalization on the smallest field).
void check_exponent(const Field& f, long long d);

} // namespace niho
