#include "niho/walsh.hpp"

#include <algorithm>

#include "niho/diff_spectrum.hpp"

namespace niho {
namespace {

// x^d for every rep, shared by all the enumeration loops.
std::vector<uint32_t> power_table(const Field& f, long long d) {
    const long long q = f.order();
    std::vector<uint32_t> t(static_cast<size_t>(q));
    for (long long r = 0; r < q; ++r)
        t[static_cast<size_t>(r)] = f.pow({static_cast<uint32_t>(r)}, d).rep;
    return t;
}

__int128 ipow128(long long base, int e) {
    __int128 r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

long long narrow128(__int128 v, const char* what) {
    if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
        throw TooLargeError(std::string(what) + ": value exceeds 64-bit range");
    return static_cast<long long>(v);
}

} // namespace

CyclotomicInteger walsh_value(const Field& f, long long d, FieldElement u, FieldElement v) {
    check_exponent(f, d);
    const long long q = f.order();
    std::vector<long long> counts(static_cast<size_t>(f.p()), 0);
    for (long long r = 0; r < q; ++r) {
        FieldElement x{static_cast<uint32_t>(r)};
        FieldElement arg = f.sub(f.mul(u, f.pow(x, d)), f.mul(v, x));
        ++counts[static_cast<size_t>(f.trace(arg))];
    }
    return CyclotomicInteger::from_root_counts(f.p(), counts);
}

WalshDistribution walsh_distribution(const Field& f, long long d, const Exec& exec) {
    check_exponent(f, d);
    const long long q = f.order();
    exec.charge(q * q * q, "walsh_distribution");

    WalshDistribution dist;
    dist.d = d;
    dist.zero_row_w00 = q;

    const auto fd = power_table(f, d);
    const int p = f.p();
    const int workers = exec.resolved_workers();

    std::vector<std::map<CyclotomicInteger, long long>> partials(
        static_cast<size_t>(workers));
    parallel_chunks(static_cast<uint64_t>(q - 1), workers,
                    [&](int w, uint64_t lo, uint64_t hi) {
                        auto& local = partials[static_cast<size_t>(w)];
                        std::vector<uint32_t> ufd(static_cast<size_t>(q));
                        std::vector<long long> cls(static_cast<size_t>(p));
                        for (uint64_t i = lo; i < hi; ++i) {
                            FieldElement u{static_cast<uint32_t>(i + 1)};
                            for (long long r = 0; r < q; ++r)
                                ufd[static_cast<size_t>(r)] =
                                    f.mul(u, {fd[static_cast<size_t>(r)]}).rep;
                            for (long long vr = 0; vr < q; ++vr) {
                                FieldElement v{static_cast<uint32_t>(vr)};
                                std::fill(cls.begin(), cls.end(), 0);
                                for (long long r = 0; r < q; ++r) {
                                    FieldElement x{static_cast<uint32_t>(r)};
                                    FieldElement arg =
                                        f.sub({ufd[static_cast<size_t>(r)]}, f.mul(v, x));
                                    ++cls[static_cast<size_t>(f.trace(arg))];
                                }
                                ++local[CyclotomicInteger::from_root_counts(p, cls)];
                            }
                        }
                    });
    for (auto& part : partials)
        for (auto& [value, mult] : part) dist.entries[value] += mult;
    return dist;
}

long long count_Nr(const Field& f, long long d, int r, const Exec& exec) {
    check_exponent(f, d);
    if (r < 1 || r > 4) throw IndexRangeError("r must be in {1,2,3,4}");
    const long long q = f.order();
    long long est = 1;
    for (int i = 0; i + 1 < r; ++i) est *= q;
    exec.charge(est, "count_Nr");

    if (r == 1) {
        // x = 0 forced; 0^d = 0 for d >= 1.
        return f.pow(f.zero(), d) == f.zero() ? 1 : 0;
    }
    const auto fd = power_table(f, d);
    auto fd_at = [&](FieldElement x) { return FieldElement{fd[x.rep]}; };

    if (r == 2) {
        long long count = 0;
        for (long long x1 = 0; x1 < q; ++x1) {
            FieldElement a{static_cast<uint32_t>(x1)};
            FieldElement b = f.neg(a);
            if (f.add(fd_at(a), fd_at(b)) == f.zero()) ++count;
        }
        return count;
    }
    if (r == 3) {
        long long count = 0;
        for (long long x1 = 0; x1 < q; ++x1) {
            FieldElement a{static_cast<uint32_t>(x1)};
            FieldElement pa = fd_at(a);
            for (long long x2 = 0; x2 < q; ++x2) {
                FieldElement b{static_cast<uint32_t>(x2)};
                FieldElement c = f.neg(f.add(a, b));
                if (f.add(f.add(pa, fd_at(b)), fd_at(c)) == f.zero()) ++count;
            }
        }
        return count;
    }
    // r == 4
    const int workers = exec.resolved_workers();
    std::vector<long long> partial(static_cast<size_t>(workers), 0);
    parallel_chunks(static_cast<uint64_t>(q), workers, [&](int w, uint64_t lo, uint64_t hi) {
        long long count = 0;
        for (uint64_t x1 = lo; x1 < hi; ++x1) {
            FieldElement a{static_cast<uint32_t>(x1)};
            FieldElement pa = fd_at(a);
            for (long long x2 = 0; x2 < q; ++x2) {
                FieldElement b{static_cast<uint32_t>(x2)};
                FieldElement sab = f.add(a, b);
                FieldElement pab = f.add(pa, fd_at(b));
                for (long long x3 = 0; x3 < q; ++x3) {
                    FieldElement c{static_cast<uint32_t>(x3)};
                    FieldElement e = f.neg(f.add(sab, c));
                    if (f.add(f.add(pab, fd_at(c)), fd_at(e)) == f.zero()) ++count;
                }
            }
        }
        partial[static_cast<size_t>(w)] = count;
    });
    long long total = 0;
    for (long long c : partial) total += c;
    return total;
}

long long count_fourth_alternating(const Field& f, long long d, const Exec& exec) {
    check_exponent(f, d);
    const long long q = f.order();
    exec.charge(q * q * q, "count_fourth_alternating");
    const auto fd = power_table(f, d);
    auto fd_at = [&](FieldElement x) { return FieldElement{fd[x.rep]}; };

    const int workers = exec.resolved_workers();
    std::vector<long long> partial(static_cast<size_t>(workers), 0);
    parallel_chunks(static_cast<uint64_t>(q), workers, [&](int w, uint64_t lo, uint64_t hi) {
        long long count = 0;
        for (uint64_t x1 = lo; x1 < hi; ++x1) {
            FieldElement a{static_cast<uint32_t>(x1)};
            FieldElement pa = fd_at(a);
            for (long long x2 = 0; x2 < q; ++x2) {
                FieldElement b{static_cast<uint32_t>(x2)};
                FieldElement s12 = f.sub(a, b);
                FieldElement p12 = f.sub(pa, fd_at(b));
                for (long long x3 = 0; x3 < q; ++x3) {
                    FieldElement c{static_cast<uint32_t>(x3)};
                    FieldElement x4 = f.add(s12, c); // x4 = x1 - x2 + x3
                    if (f.sub(f.add(p12, fd_at(c)), fd_at(x4)) == f.zero()) ++count;
                }
            }
        }
        partial[static_cast<size_t>(w)] = count;
    });
    long long total = 0;
    for (long long c : partial) total += c;
    return total;
}

std::vector<MomentReport> moments(const Field& f, long long d, const WalshDistribution& dist,
                                  const Exec& exec) {
    const long long q = f.order();
    std::vector<MomentReport> out;
    for (int r = 1; r <= 4; ++r) {
        MomentReport rep;
        rep.r = r;
        // Sum over all (u,v): the F* x F multiset, the W(0,0) = q term, and
        // the u = 0, v != 0 terms which are all zero.
        CyclotomicInteger lhs(f.p(), narrow128(ipow128(q, r), "moment lhs"));
        for (const auto& [value, mult] : dist.entries)
            lhs += value.pow(r).scaled(mult);
        rep.lhs = lhs;
        rep.n_r = count_Nr(f, d, r, exec);
        rep.rhs = narrow128(static_cast<__int128>(q) * q * rep.n_r, "moment rhs");
        rep.match = lhs.is_rational() && lhs.rational_value() == rep.rhs;
        out.push_back(std::move(rep));
    }
    return out;
}

MomentReport moment(const Field& f, long long d, int r, const Exec& exec) {
    if (r < 1 || r > 4) throw IndexRangeError("r must be in {1,2,3,4}");
    auto dist = walsh_distribution(f, d, exec);
    return moments(f, d, dist, exec)[static_cast<size_t>(r - 1)];
}

} // namespace niho
