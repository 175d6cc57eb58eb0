#pragma once

// Exact elements of Z[zeta_p] in the canonical basis 1, zeta, ..., zeta^{p-2}
// (zeta^{p-1} eliminated via 1 + zeta + ... + zeta^{p-1} = 0). The basis is a
// Z-basis, so coefficient-vector equality is value equality. Walsh transform
// values and their moments live here; no floating point anywhere.

#include <cstdint>
#include <vector>

#include "niho/errors.hpp"

namespace niho {

class CyclotomicInteger {
  public:
    CyclotomicInteger() : p_(2), coeffs_(1, 0) {}
    explicit CyclotomicInteger(int p, long long rational = 0)
        : p_(p), coeffs_(static_cast<size_t>(p - 1), 0) {
        coeffs_[0] = rational;
    }

    // Sum_{j<p} counts[j] * zeta^j, reduced to canonical form.
    static CyclotomicInteger from_root_counts(int p, const std::vector<long long>& counts) {
        CyclotomicInteger z(p);
        long long top = counts[static_cast<size_t>(p - 1)];
        for (int j = 0; j + 1 < p; ++j)
            z.coeffs_[static_cast<size_t>(j)] = counts[static_cast<size_t>(j)] - top;
        return z;
    }

    int prime() const { return p_; }
    const std::vector<long long>& coeffs() const { return coeffs_; }

    bool is_rational() const {
        for (size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }
    long long rational_value() const {
        if (!is_rational()) throw NonIntegralRatioError("cyclotomic value is not rational");
        return coeffs_[0];
    }

    bool is_zero() const {
        for (long long c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    CyclotomicInteger operator-() const {
        CyclotomicInteger r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    CyclotomicInteger& operator+=(const CyclotomicInteger& o) {
        check_same(o);
        for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    CyclotomicInteger& operator-=(const CyclotomicInteger& o) {
        check_same(o);
        for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    friend CyclotomicInteger operator+(CyclotomicInteger a, const CyclotomicInteger& b) {
        return a += b;
    }
    friend CyclotomicInteger operator-(CyclotomicInteger a, const CyclotomicInteger& b) {
        return a -= b;
    }

    // Convolution mod zeta^p = 1, then canonical reduction.
    friend CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b) {
        a.check_same(b);
        const int p = a.p_;
        std::vector<long long> wrapped(static_cast<size_t>(p), 0);
        for (int i = 0; i + 1 < p; ++i) {
            if (a.coeffs_[static_cast<size_t>(i)] == 0) continue;
            for (int j = 0; j + 1 < p; ++j)
                wrapped[static_cast<size_t>((i + j) % p)] +=
                    a.coeffs_[static_cast<size_t>(i)] * b.coeffs_[static_cast<size_t>(j)];
        }
        return from_root_counts(p, wrapped);
    }

    // Scalar multiple with overflow check (multiplicities can be ~p^{2n}).
    CyclotomicInteger scaled(long long k) const {
        CyclotomicInteger r(*this);
        for (auto& c : r.coeffs_) {
            __int128 v = static_cast<__int128>(c) * k;
            if (v > INT64_MAX || v < INT64_MIN)
                throw TooLargeError("cyclotomic coefficient exceeds 64-bit range");
            c = static_cast<long long>(v);
        }
        return r;
    }

    CyclotomicInteger pow(int e) const {
        CyclotomicInteger r(p_, 1), base(*this);
        while (e > 0) {
            if (e & 1) r = r * base;
            if (e >>= 1) base = base * base;
        }
        return r;
    }

    friend bool operator==(const CyclotomicInteger& a, const CyclotomicInteger& b) {
        return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
    }

    // Canonical report order: rational values ascending first, then
    // non-rational values by lexicographic coefficient order.
    friend bool operator<(const CyclotomicInteger& a, const CyclotomicInteger& b) {
        bool ra = a.is_rational(), rb = b.is_rational();
        if (ra != rb) return ra;
        if (ra) return a.coeffs_[0] < b.coeffs_[0];
        return a.coeffs_ < b.coeffs_;
    }

  private:
    void check_same(const CyclotomicInteger& o) const {
        if (p_ != o.p_) throw WrongCharacteristicError("mixed cyclotomic primes");
    }

    int p_;
    std::vector<long long> coeffs_;
};

} // namespace niho
