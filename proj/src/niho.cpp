#include "niho/niho.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace niho {
namespace {

bool is_prime_int(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long long ipow(long long base, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

long long inv_mod(long long a, long long mod) {
    long long t = 0, nt = 1, r = mod, nr = ((a % mod) + mod) % mod;
    while (nr != 0) {
        long long quot = r / nr;
        t -= quot * nt;
        std::swap(t, nt);
        r -= quot * nr;
        std::swap(r, nr);
    }
    return ((t % mod) + mod) % mod;
}

// d = p^n - 1 is the unit-indicator map; it only arises in the Niho layer on
// F_4 (s = 2) and none of the four-value theorems apply to it.
bool is_degenerate(const NihoExponent& e) {
    long long q = ipow(e.p, 2 * e.m);
    return e.d == q - 1 || e.s == 0 || e.s == 1;
}

// Cyclotomic-shift closure {p^j * d mod p^n-1} of the base family exponents;
// x^d -> x^{pd} permutes derivative rows by Frobenius, so local APN-ness is
// preserved along it.
std::set<long long> shift_closure(int p, int m, const std::vector<long long>& s_values) {
    const long long pm = ipow(p, m), qm1 = pm * pm - 1;
    std::set<long long> closure;
    for (long long s : s_values) {
        long long d = (s * (pm - 1) + 1) % qm1;
        if (d == 0) d = qm1;
        for (int j = 0; j < 2 * m; ++j) {
            closure.insert(d);
            d = d * p % qm1;
            if (d == 0) d = qm1;
        }
    }
    return closure;
}

std::vector<long long> base_family_s(int p, int m) {
    std::vector<long long> base = family_s_values(p, m, Family::F2);
    if (p == 2) {
        for (long long s : family_s_values(p, m, Family::F1)) base.push_back(s);
        for (long long s : family_s_values(p, m, Family::F3)) base.push_back(s);
    }
    return base;
}

} // namespace

std::map<long long, long long> lapn_walsh_pattern(int p, int m) {
    const long long pm = ipow(p, m);
    const long long d4 = pm * pm * pm * pm - pm * pm * pm - pm * pm + pm;
    return {{-pm, d4 / 3}, {0, d4 / 2}, {pm, pm * pm * pm - pm}, {2 * pm, d4 / 6}};
}

std::map<long long, long long> lapn_spectrum_pattern(int p, int m) {
    const long long pm = ipow(p, m), q = pm * pm;
    return {{0, (q + pm - 2) / 2}, {2, (q - pm) / 2}, {pm, 1}};
}

std::map<long long, long long> lapn_boomerang_pattern(int p, int m) {
    const long long pm = ipow(p, m), q = pm * pm;
    std::map<long long, long long> t;
    if (p == 2) {
        t[q] = 3 * q - 2;
        if (pm > 2) t[pm] = (pm - 2) * (q - 1);
        t[0] = (q - pm) * (q - 1);
    } else {
        t[q] = 2 * q - 1;
        t[pm] = (pm - 1) * (q - 1);
        t[1] = (q - pm) * (q - 1);
    }
    return t;
}

std::map<long long, long long> lapn_code_weight_pattern(int p, int m) {
    const long long pm = ipow(p, m), q = pm * pm;
    const long long base = (pm / p) * (p - 1); // p^{m-1}(p-1)
    const long long d4 = pm * pm * pm * pm - pm * pm * pm - pm * pm + pm;
    std::map<long long, long long> w;
    w[0] = 1;
    w[base * (pm - 2)] += d4 / 6;
    w[base * (pm - 1)] += pm * pm * pm - pm;
    w[base * pm] += d4 / 2 + (q - 1); // + the u = 0, v != 0 row
    w[base * (pm + 1)] += d4 / 3;
    return w;
}

bool walsh_matches_pattern(const WalshDistribution& dist,
                           const std::map<long long, long long>& pattern) {
    if (dist.entries.size() != pattern.size()) return false;
    for (const auto& [value, mult] : dist.entries) {
        if (!value.is_rational()) return false;
        auto it = pattern.find(value.rational_value());
        if (it == pattern.end() || it->second != mult) return false;
    }
    return true;
}

NihoExponent make_niho(int p, int m, long long s) {
    if (!is_prime_int(p)) throw NotPrimeError("p is not prime");
    if (m < 1) throw IndexRangeError("m must be positive");
    NihoExponent e;
    e.p = p;
    e.m = m;
    const long long pm = ipow(p, m), L = pm + 1, qm1 = pm * pm - 1;
    e.s = ((s % L) + L) % L;
    e.d = (e.s * (pm - 1) + 1) % qm1;
    if (e.d == 0) e.d = qm1;
    // gcd(0, L) = L, which is exactly the wanted value at s = 0 and s = 1
    e.s1 = std::gcd(e.s, L);
    e.s2 = std::gcd(((e.s - 1) % L + L) % L, L);
    return e;
}

NihoExponent niho_from_d(int p, int m, long long d) {
    if (!is_prime_int(p)) throw NotPrimeError("p is not prime");
    const long long pm = ipow(p, m), qm1 = pm * pm - 1;
    if (d < 1 || d > qm1) throw BadExponentError("d out of range [1, p^n - 1]");
    if ((d - 1) % (pm - 1) != 0)
        throw BadExponentError("d is not a Niho exponent (d != 1 mod p^m - 1)");
    return make_niho(p, m, (d - 1) / (pm - 1));
}

std::vector<long long> family_s_values(int p, int m, Family family) {
    if ((family == Family::F1 || family == Family::F3) && p != 2)
        throw WrongCharacteristicError("families F1 and F3 require characteristic 2");
    const long long L = ipow(p, m) + 1;
    std::set<long long> out;
    switch (family) {
    case Family::F2:
        out.insert(2 % L);
        break;
    case Family::F1:
        for (int r = 1; r < m; ++r) {
            if (std::gcd(static_cast<long long>(r), static_cast<long long>(m)) != 1) continue;
            const long long tw = 1LL << r;
            if (std::gcd(tw - 1, L) == 1) out.insert(tw % L * inv_mod(tw - 1, L) % L);
            if (std::gcd(tw + 1, L) == 1) out.insert(tw % L * inv_mod(tw + 1, L) % L);
        }
        break;
    case Family::F3:
        for (int k = 1; k < m; ++k) {
            if (std::gcd(static_cast<long long>(k), static_cast<long long>(m)) != 1) continue;
            const long long g = (1LL << k) + 1;
            if (std::gcd(g, L) == 1) out.insert(inv_mod(g, L));
        }
        break;
    }
    return {out.begin(), out.end()};
}

PredictionReport predict(const NihoExponent& e) {
    PredictionReport r;
    r.exponent = e;
    const long long pm = ipow(e.p, e.m), q = pm * pm;
    r.predicted_uniformity =
        pm + (e.s1 - 1) * (e.s1 - 2) + (e.s2 - 1) * (e.s2 - 2);

    const bool degenerate = is_degenerate(e);
    r.lapn_necessary =
        e.s1 * (e.s1 - 1) + e.s2 * (e.s2 - 1) <= 2 && !degenerate;

    if (e.p == 2) {
        auto f1 = family_s_values(e.p, e.m, Family::F1);
        auto f3 = family_s_values(e.p, e.m, Family::F3);
        r.f1_member = std::find(f1.begin(), f1.end(), e.s) != f1.end();
        r.f3_member = std::find(f3.begin(), f3.end(), e.s) != f3.end();
    }
    r.f2_member = (e.s == 2 % (pm + 1));
    r.family_shift_member = shift_closure(e.p, e.m, base_family_s(e.p, e.m)).count(e.d) > 0;
    r.predicted_locally_apn = r.family_shift_member && !degenerate;

    r.predicted_n3 = 3 * q - 2 + (q - 1) * (r.predicted_uniformity - 2);
    if (r.predicted_locally_apn) {
        r.predicted_n4 = 4 * q * q - 2 * pm * pm * pm - 3 * q + 2 * pm;
        r.predicted_spectrum = lapn_spectrum_pattern(e.p, e.m);
        r.predicted_walsh = lapn_walsh_pattern(e.p, e.m);
        r.predicted_boomerang = lapn_boomerang_pattern(e.p, e.m);
        r.predicted_code_weights = lapn_code_weight_pattern(e.p, e.m);
    }
    return r;
}

long long cij_count(const Field& f, long long i, long long j) {
    const long long L = f.subfield_order() + 1;
    if (i < 0 || i >= L || j < 0 || j >= L)
        throw IndexRangeError("C_{i,j} indices must lie in [0, p^m]");
    const long long q = f.order();
    const FieldElement minus_one = f.neg(f.one());
    long long count = 0;
    for (long long r = 1; r < q; ++r) {
        FieldElement x{static_cast<uint32_t>(r)};
        if (x == minus_one) continue;
        if (f.discrete_log(x) % L != j) continue;
        if (f.discrete_log(f.add(x, f.one())) % L == i) ++count;
    }
    return count;
}

long long count_V(const Field& f, long long g1, long long g2, FieldElement u, FieldElement v) {
    const long long pm = f.subfield_order(), L = pm + 1;
    auto red = [L](long long e) { return ((e % L) + L) % L; };
    const long long e1 = red(2 * g1 - 1), e2 = red(g1 + g2 - 1), e3 = red(g1 - g2);
    const FieldElement ub = f.conj(u), vb = f.conj(v);
    long long count = 0;
    for (long long jj = 0; jj < L; ++jj) {
        FieldElement z = f.psi_pow(jj * (pm - 1));
        FieldElement term = f.add(f.add(f.mul(u, f.pow(z, e1)), f.mul(v, f.pow(z, e2))),
                                  f.add(f.mul(vb, f.pow(z, e3)), ub));
        if (term.rep == 0) ++count;
    }
    return count;
}

std::optional<long long> predicted_curve_points(const Field& f, long long n1, long long n2,
                                                FieldElement alpha, FieldElement beta,
                                                int* case_id) {
    if (n1 < 1 || n2 < 1) throw HypothesisViolatedError("curve degrees must be positive");
    if (alpha.rep == 0 || beta.rep == 0)
        throw HypothesisViolatedError("curve coefficients must be nonzero");
    const long long lc = std::lcm(n1, n2);
    long long l = 0;
    for (long long cand = 1; cand <= f.m(); ++cand) {
        if (f.m() % cand != 0) continue;
        if ((ipow(f.p(), static_cast<int>(cand)) + 1) % lc == 0) {
            l = cand;
            break;
        }
    }
    if (l == 0)
        throw HypothesisViolatedError("lcm(n1,n2) divides p^l + 1 for no l dividing m");
    const long long k = f.m() / l;
    const long long t = std::gcd(n1, n2);
    const long long r1 = f.discrete_log(alpha) % n1;
    const long long r2 = f.discrete_log(beta) % n2;
    const long long q = f.order(), root = f.subfield_order(); // p^{n/2}
    const long long sgn_k = (k % 2 == 0) ? 1 : -1;            // (-1)^k
    const long long sgn_km1 = -sgn_k;                         // (-1)^{k-1}

    int fired = 0;
    std::optional<long long> predicted;
    if (r1 == 0 && r2 == 0) {
        fired = 1;
        predicted = q + sgn_km1 * ((n1 - 1) * (n2 - 1) + 1 - t) * root - t + 1;
    } else if (r1 == 0 && r2 != 0 && r2 % t != 0) {
        fired = 2;
        predicted = q + sgn_k * (n1 - 2) * root + 1;
    } else if (r1 != 0 && r2 == 0 && r1 % t != 0) {
        fired = 3;
        predicted = q + sgn_k * (n2 - 2) * root + 1;
    } else if (r1 != 0 && r2 != 0 && (r1 - r2) % t != 0) {
        fired = 4;
        predicted = q + sgn_km1 * 2 * root + 1;
    } else if (r1 != 0 && r2 != 0 && (r1 - r2) % t == 0) {
        fired = 5;
        predicted = q + sgn_k * (t - 2) * root - t + 1;
    }
    if (case_id) *case_id = fired;
    return predicted;
}

CurveReport curve_points(const Field& f, long long n1, long long n2, FieldElement alpha,
                         FieldElement beta) {
    CurveReport rep;
    rep.n1 = n1;
    rep.n2 = n2;
    rep.predicted = predicted_curve_points(f, n1, n2, alpha, beta, &rep.case_id);

    const long long lc = std::lcm(n1, n2);
    for (long long cand = 1; cand <= f.m(); ++cand) {
        if (f.m() % cand != 0) continue;
        if ((ipow(f.p(), static_cast<int>(cand)) + 1) % lc == 0) {
            rep.l = cand;
            break;
        }
    }
    rep.k = f.m() / rep.l;
    rep.t = std::gcd(n1, n2);
    rep.r1 = f.discrete_log(alpha) % n1;
    rep.r2 = f.discrete_log(beta) % n2;

    const long long q = f.order();
    std::vector<long long> hits(static_cast<size_t>(q), 0);
    for (long long yr = 0; yr < q; ++yr) {
        FieldElement y{static_cast<uint32_t>(yr)};
        ++hits[f.mul(beta, f.pow(y, n2)).rep];
    }
    long long total = 0;
    for (long long xr = 0; xr < q; ++xr) {
        FieldElement x{static_cast<uint32_t>(xr)};
        FieldElement need = f.neg(f.add(f.mul(alpha, f.pow(x, n1)), f.one()));
        total += hits[need.rep];
    }
    rep.measured = total;
    return rep;
}

VSystemReport check_v_system(const Field& f, const NihoExponent& e, long long g2,
                             const Exec& exec) {
    if (f.p() != e.p || f.m() != e.m)
        throw FieldMismatchError("field parameters do not match the exponent");
    const long long q = f.order(), pm = f.subfield_order();
    exec.charge(q * q * (q + pm + 1), "check_v_system");
    VSystemReport rep;
    rep.g1 = e.s;
    rep.g2 = g2;
    for (long long ur = 0; ur < q; ++ur)
        for (long long vr = 0; vr < q; ++vr) {
            FieldElement u{static_cast<uint32_t>(ur)}, v{static_cast<uint32_t>(vr)};
            CyclotomicInteger w = walsh_value(f, e.d, u, f.neg(v));
            long long expected = (count_V(f, e.s, g2, u, v) - 1) * pm;
            ++rep.pairs_checked;
            if (!(w.is_rational() && w.rational_value() == expected)) ++rep.mismatches;
        }
    rep.all_match = rep.mismatches == 0;
    return rep;
}

CijReport check_cij(const Field& f, const Exec& exec) {
    const long long pm = f.subfield_order(), L = pm + 1;
    exec.charge(L * L * f.order(), "check_cij");
    CijReport rep;
    for (long long i = 0; i < L; ++i)
        for (long long j = 0; j < L; ++j) {
            long long measured = cij_count(f, i, j);
            long long expected;
            if (i == 0 && j == 0)
                expected = pm - 2;
            else if (i != j && i != 0 && j != 0)
                expected = 1;
            else
                expected = 0;
            rep.total += measured;
            if (measured != expected) ++rep.mismatched_cells;
        }
    rep.all_match = rep.mismatched_cells == 0 && rep.total == f.order() - 2;
    return rep;
}

SearchReport search_locally_apn(int p, int m, const Exec& exec, long long size_cap) {
    SearchReport report;
    report.p = p;
    report.m = m;
    Field f = Field::build(p, m, size_cap);
    report.field = f.params();
    const long long pm = f.subfield_order();
    exec.charge((pm + 1) * f.order(), "search_locally_apn");

    std::set<long long> f1_closure;
    if (p == 2) f1_closure = shift_closure(p, m, family_s_values(p, m, Family::F1));

    for (long long s = 0; s <= pm; ++s) {
        NihoExponent e = make_niho(p, m, s);
        PredictionReport pred = predict(e);
        DifferentialSpectrum spec = differential_spectrum(f, e.d);

        SearchRow row;
        row.exponent = e;
        row.predicted_uniformity = pred.predicted_uniformity;
        row.measured_uniformity = spec.uniformity;
        row.lapn_necessary = pred.lapn_necessary;
        row.lapn_guaranteed = pred.predicted_locally_apn;
        row.measured_lapn = spec.locally_apn;
        row.f1_member = pred.f1_member;
        row.f1_shift_member = p == 2 && f1_closure.count(e.d) > 0;
        {
            long long rep = e.d, cur = e.d;
            const long long qm1 = f.order() - 1;
            for (int j = 1; j < f.n(); ++j) {
                cur = cur * p % qm1;
                if (cur == 0) cur = qm1;
                if (cur < rep) rep = cur;
            }
            row.cyclotomic_class_rep = rep;
        }
        row.match = row.measured_uniformity == row.predicted_uniformity &&
                    !(row.measured_lapn && !row.lapn_necessary) &&
                    !(row.lapn_guaranteed && !row.measured_lapn);
        if (!row.match) report.mismatches.push_back(s);
        if (p == 2 && row.measured_lapn && !row.f1_shift_member)
            report.lapn_outside_f1.push_back(s);
        report.rows.push_back(row);
    }
    report.pass = report.mismatches.empty();
    return report;
}

} // namespace niho
