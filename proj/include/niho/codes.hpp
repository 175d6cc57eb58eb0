#pragma once

// Weight distribution of the cyclic code of length p^n - 1 whose codewords
// are the trace sequences (Tr(u psi^{id} + v psi^i))_i over (u,v) in F^2.
// Weights are obtained by direct trace counting (total even when Walsh values
// are irrational); the Walsh-transform weight formula is the cross-check.

#include <map>
#include <optional>

#include "niho/exec.hpp"
#include "niho/field.hpp"

namespace niho {

struct WeightDistribution {
    long long d = 0;
    long long length = 0;                   // p^n - 1
    std::map<long long, long long> weights; // weight -> #codewords (u,v)
    long long distinct_codewords = 0;       // p^{2n} / #zero-weight pairs
    int dimension = 0;                      // log_p(distinct_codewords)
};

// Hamming weight of the codeword indexed by (u,v).
long long codeword_weight(const Field& f, long long d, FieldElement u, FieldElement v);

// Weight via p^{n-1}(p-1) - ((p-1)/p) W_F(u,-v); defined only when the Walsh
// value is rational (then the expression is an exact integer).
std::optional<long long> codeword_weight_from_walsh(const Field& f, long long d, FieldElement u,
                                                    FieldElement v);

WeightDistribution weight_distribution(const Field& f, long long d, const Exec& exec = {});

} // namespace niho
