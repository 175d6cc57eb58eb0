#pragma once

// Dense-table model of the quadratic extension field F_{p^{2m}}.
//
// Elements are stored as base-p packed coefficient vectors ("rep") in the
// power basis of a fixed primitive modulus root psi. Multiplication and
// exponentiation go through log/antilog tables, traces through a precomputed
// table, so every operation used by the enumeration loops is O(1) (O(n) digit
// work for addition in odd characteristic). The construction is fully
// deterministic: the modulus is the lexicographically first primitive
// polynomial (constant term varying fastest), so identical (p, m) always
// yield bit-identical tables.

#include <compare>
#include <cstdint>
#include <vector>

#include "niho/errors.hpp"

namespace niho {

struct FieldElement {
    uint32_t rep = 0;
    friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

struct FieldParams {
    int p = 0;                // characteristic, prime
    int m = 0;                // half extension degree
    int n = 0;                // extension degree, always 2m
    std::vector<int> modulus; // monic primitive polynomial, c0..cn
    long long order = 0;      // p^n
};

inline constexpr long long kDefaultFieldCap = 1LL << 20;

class Field {
  public:
    // Throws NotPrimeError, TooLargeError, ConstructionFailureError.
    static Field build(int p, int m, long long size_cap = kDefaultFieldCap);

    const FieldParams& params() const { return params_; }
    int p() const { return params_.p; }
    int m() const { return params_.m; }
    int n() const { return params_.n; }
    long long order() const { return params_.order; }          // q = p^n
    long long group_order() const { return params_.order - 1; } // q - 1
    long long subfield_order() const { return pm_; }            // p^m

    FieldElement zero() const { return {}; }
    FieldElement one() const { return {1}; }
    FieldElement psi() const { return {exp_[1]}; }

    FieldElement element(uint32_t rep) const {
        if (rep >= params_.order) throw IndexRangeError("element rep out of range");
        return {rep};
    }
    // Constant c in [0, p) embeds as the constant polynomial.
    FieldElement from_prime_field(int c) const { return {static_cast<uint32_t>(c % params_.p)}; }

    // psi^t for any integer t (reduced mod q-1).
    FieldElement psi_pow(long long t) const {
        long long g = group_order();
        t %= g;
        if (t < 0) t += g;
        return {exp_[static_cast<size_t>(t)]};
    }

    FieldElement add(FieldElement a, FieldElement b) const {
        if (params_.p == 2) return {a.rep ^ b.rep};
        return add_odd(a, b);
    }
    FieldElement neg(FieldElement a) const { return {neg_[a.rep]}; }
    FieldElement sub(FieldElement a, FieldElement b) const {
        if (params_.p == 2) return {a.rep ^ b.rep};
        return add_odd(a, {neg_[b.rep]});
    }
    FieldElement mul(FieldElement a, FieldElement b) const {
        if (a.rep == 0 || b.rep == 0) return {};
        return {exp_[static_cast<size_t>(log_[a.rep]) + log_[b.rep]]};
    }
    FieldElement inv(FieldElement a) const {
        if (a.rep == 0) throw ZeroElementError("inverse of zero");
        return {exp_[group_order() - log_[a.rep]]};
    }

    // x^e with e >= 0. pow(0,0) = 1 so that power maps are total; exponents
    // are reduced mod q-1 for nonzero bases only.
    FieldElement pow(FieldElement x, long long e) const {
        if (e < 0) throw BadExponentError("negative exponent");
        if (x.rep == 0) return e == 0 ? one() : zero();
        long long g = group_order();
        uint64_t r = static_cast<uint64_t>(e % g);
        uint64_t idx = static_cast<uint64_t>(log_[x.rep]) * r % static_cast<uint64_t>(g);
        return {exp_[idx]};
    }

    // Absolute trace Tr^n_1 : F_{p^n} -> F_p, returned as an integer in [0, p).
    int trace(FieldElement x) const { return trace_[x.rep]; }

    // t with psi^t = x. Throws ZeroElementError for x = 0.
    long long discrete_log(FieldElement x) const {
        if (x.rep == 0) throw ZeroElementError("discrete log of zero");
        return log_[x.rep];
    }

    // Membership in mu_e = {x : x^e = 1}. e must divide q-1.
    bool in_mu(FieldElement x, long long e) const {
        if (e <= 0 || group_order() % e != 0)
            throw BadOrderError("subgroup order must divide p^n - 1");
        return x.rep != 0 && pow(x, e) == one();
    }

    // Conjugation over the subfield: x^{p^m}.
    FieldElement conj(FieldElement x) const { return pow(x, pm_); }

    bool in_prime_field(FieldElement x) const {
        return x.rep < static_cast<uint32_t>(params_.p);
    }
    bool in_subfield(FieldElement x) const { return pow(x, pm_) == x; }

    // Raw tables, exposed for byte-level reproducibility checks.
    const std::vector<uint32_t>& exp_table() const { return exp_; }
    const std::vector<uint32_t>& log_table() const { return log_; }
    const std::vector<uint16_t>& trace_table() const { return trace_; }

  private:
    Field() = default;
    FieldElement add_odd(FieldElement a, FieldElement b) const;

    FieldParams params_;
    long long pm_ = 0; // p^m
    std::vector<uint32_t> exp_;  // length 2(q-1); exp_[t] = rep of psi^t, doubled
    std::vector<uint32_t> log_;  // length q; log_[0] is a sentinel
    std::vector<uint32_t> neg_;  // length q; rep of -x
    std::vector<uint16_t> trace_;
};

inline Field build_field(int p, int m, long long size_cap = kDefaultFieldCap) {
    return Field::build(p, m, size_cap);
}

} // namespace niho
