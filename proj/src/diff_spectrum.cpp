#include "niho/diff_spectrum.hpp"

namespace niho {

void check_exponent(const Field& f, long long d) {
    if (d < 1 || d > f.group_order())
        throw BadExponentError("exponent d must be in [1, p^n - 1]");
}

std::vector<long long> delta_counts(const Field& f, long long d) {
    check_exponent(f, d);
    const long long q = f.order();
    std::vector<long long> counts(static_cast<size_t>(q), 0);
    const FieldElement one = f.one();
    for (long long r = 0; r < q; ++r) {
        FieldElement x{static_cast<uint32_t>(r)};
        FieldElement b = f.sub(f.pow(f.add(x, one), d), f.pow(x, d));
        ++counts[b.rep];
    }
    return counts;
}

long long ddt_entry(const Field& f, long long d, const std::vector<long long>& unit_row,
                    FieldElement a, FieldElement b) {
    check_exponent(f, d);
    if (a.rep == 0) return b.rep == 0 ? f.order() : 0;
    return unit_row[f.mul(b, f.inv(f.pow(a, d))).rep];
}

DifferentialSpectrum differential_spectrum(const Field& f, long long d) {
    DifferentialSpectrum s;
    s.d = d;
    auto row = delta_counts(f, d);
    const uint32_t p = static_cast<uint32_t>(f.p());
    for (uint32_t b = 0; b < row.size(); ++b) {
        ++s.counts[row[b]];
        if (row[b] > s.uniformity) s.uniformity = row[b];
        if (b >= p && row[b] > s.max_outside_prime_field) s.max_outside_prime_field = row[b];
    }
    s.locally_apn = (s.max_outside_prime_field == 2);
    return s;
}

bool second_moment_check(const Field& f, long long d, const DifferentialSpectrum& spectrum,
                         long long M) {
    check_exponent(f, d);
    const long long q = f.order();
    long long lhs = 0;
    for (auto& [i, w] : spectrum.counts) lhs += i * i * w;
    long long num = M - q * q;
    if (num % (q - 1) != 0)
        throw NonIntegralRatioError("p^n - 1 does not divide M - p^{2n}");
    return lhs == num / (q - 1);
}

} // namespace niho
