#include "niho/boomerang.hpp"

#include "niho/diff_spectrum.hpp"

namespace niho {
namespace {

std::vector<uint32_t> power_table(const Field& f, long long d) {
    const long long q = f.order();
    std::vector<uint32_t> t(static_cast<size_t>(q));
    for (long long r = 0; r < q; ++r)
        t[static_cast<size_t>(r)] = f.pow({static_cast<uint32_t>(r)}, d).rep;
    return t;
}

long long entry_generic(const Field& f, const std::vector<uint32_t>& fd, FieldElement a,
                        FieldElement b) {
    const long long q = f.order();
    FieldElement ab = f.add(a, b);
    long long count = 0;
    for (long long r = 0; r < q; ++r) {
        FieldElement x{static_cast<uint32_t>(r)};
        FieldElement lhs = f.add(f.sub(FieldElement{fd[f.add(x, ab).rep]},
                                       FieldElement{fd[f.add(x, a).rep]}),
                                 f.sub(FieldElement{fd[x.rep]},
                                       FieldElement{fd[f.add(x, b).rep]}));
        if (lhs.rep == 0) ++count;
    }
    return count;
}

// Distribution over all (a,b) via the ratio reduction. The value at (a,b)
// with ab != 0 equals the value at (c, 1), c = a/b; each c accounts for
// q-1 pairs. Rows with ab = 0 are identically p^n.
BoomerangDistribution ratio_distribution(const Field& f, long long d, BoomerangKind kind,
                                         const Exec& exec) {
    check_exponent(f, d);
    const long long q = f.order();
    exec.charge(q * q, "boomerang distribution");

    const auto fd = power_table(f, d);
    BoomerangDistribution dist;
    dist.d = d;
    dist.kind = kind;
    dist.entries[q] += 2 * q - 1; // a = 0 or b = 0

    const int workers = exec.resolved_workers();
    std::vector<std::map<long long, long long>> partials(static_cast<size_t>(workers));
    std::vector<long long> partial_max(static_cast<size_t>(workers), 0);
    const bool char2 = f.p() == 2;
    parallel_chunks(static_cast<uint64_t>(q - 1), workers,
                    [&](int w, uint64_t lo, uint64_t hi) {
                        auto& local = partials[static_cast<size_t>(w)];
                        long long mx = 0;
                        for (uint64_t i = lo; i < hi; ++i) {
                            FieldElement c{static_cast<uint32_t>(i + 1)};
                            long long value = entry_generic(f, fd, c, f.one());
                            local[value] += q - 1;
                            // uniformity index set: p = 2 excludes a = b
                            // (c = 1); p > 2 is over all nonzero a, b.
                            if (!(char2 && c == f.one()) && value > mx) mx = value;
                        }
                        partial_max[static_cast<size_t>(w)] = mx;
                    });
    for (auto& part : partials)
        for (auto& [value, mult] : part) dist.entries[value] += mult;
    for (long long mx : partial_max)
        if (mx > dist.uniformity) dist.uniformity = mx;
    return dist;
}

} // namespace

long long fbct_entry(const Field& f, long long d, FieldElement a, FieldElement b) {
    if (f.p() != 2) throw OddCharacteristicError("FBCT is defined in characteristic 2");
    check_exponent(f, d);
    const auto fd = power_table(f, d);
    return entry_generic(f, fd, a, b);
}

long long sozd_entry(const Field& f, long long d, FieldElement a, FieldElement b) {
    check_exponent(f, d);
    const auto fd = power_table(f, d);
    return entry_generic(f, fd, a, b);
}

BoomerangDistribution fbct_distribution(const Field& f, long long d, const Exec& exec) {
    if (f.p() != 2) throw OddCharacteristicError("FBCT is defined in characteristic 2");
    return ratio_distribution(f, d, BoomerangKind::FBCT, exec);
}

BoomerangDistribution sozd_distribution(const Field& f, long long d, const Exec& exec) {
    return ratio_distribution(f, d, BoomerangKind::SOZD, exec);
}

BoomerangDistribution fbct_distribution_naive(const Field& f, long long d, const Exec& exec) {
    if (f.p() != 2) throw OddCharacteristicError("FBCT is defined in characteristic 2");
    check_exponent(f, d);
    const long long q = f.order();
    exec.charge(q * q * q, "fbct_distribution_naive");

    const auto fd = power_table(f, d);
    BoomerangDistribution dist;
    dist.d = d;
    dist.kind = BoomerangKind::FBCT;
    for (long long ar = 0; ar < q; ++ar)
        for (long long br = 0; br < q; ++br) {
            FieldElement a{static_cast<uint32_t>(ar)}, b{static_cast<uint32_t>(br)};
            long long value = entry_generic(f, fd, a, b);
            ++dist.entries[value];
            bool degenerate = a.rep == 0 || b.rep == 0 || a == b;
            if (!degenerate && value > dist.uniformity) dist.uniformity = value;
        }
    return dist;
}

} // namespace niho
