#include "niho/codes.hpp"

#include "niho/diff_spectrum.hpp"
#include "niho/walsh.hpp"

namespace niho {
namespace {

long long weight_from_tables(const Field& f, const std::vector<uint32_t>& fd, FieldElement u,
                             FieldElement v) {
    const long long q = f.order();
    long long zeros = 0;
    for (long long r = 1; r < q; ++r) {
        FieldElement x{static_cast<uint32_t>(r)};
        FieldElement arg = f.add(f.mul(u, {fd[static_cast<size_t>(r)]}), f.mul(v, x));
        if (f.trace(arg) == 0) ++zeros;
    }
    return (q - 1) - zeros;
}

} // namespace

long long codeword_weight(const Field& f, long long d, FieldElement u, FieldElement v) {
    check_exponent(f, d);
    const long long q = f.order();
    std::vector<uint32_t> fd(static_cast<size_t>(q));
    for (long long r = 0; r < q; ++r)
        fd[static_cast<size_t>(r)] = f.pow({static_cast<uint32_t>(r)}, d).rep;
    return weight_from_tables(f, fd, u, v);
}

std::optional<long long> codeword_weight_from_walsh(const Field& f, long long d, FieldElement u,
                                                    FieldElement v) {
    CyclotomicInteger w = walsh_value(f, d, u, f.neg(v));
    if (!w.is_rational()) return std::nullopt;
    const long long q = f.order();
    const long long p = f.p();
    long long numerator = (p - 1) * w.rational_value();
    if (numerator % p != 0)
        throw NonIntegralRatioError("Walsh weight formula is not integral");
    return (q / p) * (p - 1) - numerator / p;
}

WeightDistribution weight_distribution(const Field& f, long long d, const Exec& exec) {
    check_exponent(f, d);
    const long long q = f.order();
    exec.charge(q * q * q, "weight_distribution");

    std::vector<uint32_t> fd(static_cast<size_t>(q));
    for (long long r = 0; r < q; ++r)
        fd[static_cast<size_t>(r)] = f.pow({static_cast<uint32_t>(r)}, d).rep;

    WeightDistribution dist;
    dist.d = d;
    dist.length = q - 1;

    const int workers = exec.resolved_workers();
    std::vector<std::map<long long, long long>> partials(static_cast<size_t>(workers));
    parallel_chunks(static_cast<uint64_t>(q), workers, [&](int w, uint64_t lo, uint64_t hi) {
        auto& local = partials[static_cast<size_t>(w)];
        for (uint64_t ur = lo; ur < hi; ++ur) {
            FieldElement u{static_cast<uint32_t>(ur)};
            for (long long vr = 0; vr < q; ++vr)
                ++local[weight_from_tables(f, fd, u, {static_cast<uint32_t>(vr)})];
        }
    });
    for (auto& part : partials)
        for (auto& [weight, mult] : part) dist.weights[weight] += mult;

    long long kernel = dist.weights.count(0) ? dist.weights.at(0) : 0;
    if (kernel == 0 || (q * q) % kernel != 0)
        throw ConstructionFailureError("zero-weight multiplicity must divide p^{2n}");
    dist.distinct_codewords = q * q / kernel;
    long long v = dist.distinct_codewords;
    while (v > 1) {
        if (v % f.p() != 0)
            throw ConstructionFailureError("distinct codeword count is not a p-power");
        v /= f.p();
        ++dist.dimension;
    }
    return dist;
}

} // namespace niho
