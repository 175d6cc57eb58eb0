#include "niho/field.hpp"

#include <algorithm>
#include <numeric>

namespace niho {
namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::vector<long long> prime_factors(long long v) {
    std::vector<long long> out;
    for (long long d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

// Dense polynomials over F_p, little-endian coefficients, used only during
// construction. Degree stays < n after reduction by the monic candidate.
struct PolyCtx {
    int p;
    int n;
    std::vector<int> mod; // c0..cn, cn = 1

    std::vector<int> mul(const std::vector<int>& a, const std::vector<int>& b) const {
        std::vector<int> prod(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j)
                prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
        }
        reduce(prod);
        return prod;
    }

    void reduce(std::vector<int>& poly) const {
        for (int deg = static_cast<int>(poly.size()) - 1; deg >= n; --deg) {
            int lead = poly[deg];
            if (lead == 0) continue;
            for (int i = 0; i < n; ++i)
                poly[deg - n + i] = ((poly[deg - n + i] - lead * mod[i]) % p + p) % p;
            poly[deg] = 0;
        }
        while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
    }

    std::vector<int> pow_x(long long e) const {
        std::vector<int> result{1};
        std::vector<int> base{0, 1};
        while (e > 0) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }

    static bool is_one(const std::vector<int>& poly) {
        if (poly.empty() || poly[0] != 1) return false;
        for (size_t i = 1; i < poly.size(); ++i)
            if (poly[i] != 0) return false;
        return true;
    }
};

std::vector<int> poly_gcd(int p, std::vector<int> a, std::vector<int> b) {
    auto deg = [](const std::vector<int>& f) {
        for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
            if (f[i] != 0) return i;
        return -1;
    };
    auto inv_mod_p = [p](int a) {
        int r = 1, base = ((a % p) + p) % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    };
    while (deg(b) >= 0) {
        int db = deg(b);
        int lead_inv = inv_mod_p(b[db]);
        while (deg(a) >= db) {
            int da = deg(a);
            int coef = a[da] * lead_inv % p;
            if (coef != 0)
                for (int i = 0; i <= db; ++i)
                    a[da - db + i] = ((a[da - db + i] - coef * b[i]) % p + p) % p;
            if (deg(a) == da) a[da] = 0;
        }
        std::swap(a, b);
    }
    return a;
}

// f is primitive iff it is irreducible and its root generates the full
// multiplicative group of order p^n - 1.
bool is_primitive(const PolyCtx& ctx, long long q) {
    if (ctx.mod[0] == 0) return false; // x divides f
    // Irreducibility: x^{p^n} == x mod f and gcd(x^{p^{n/r}} - x, f) = 1
    // for every prime r | n.
    auto xq = ctx.pow_x(q);
    std::vector<int> x_poly{0, 1};
    ctx.reduce(x_poly);
    if (xq != x_poly) return false;
    for (long long r : prime_factors(ctx.n)) {
        long long sub = 1;
        for (int i = 0; i < ctx.n / r; ++i) sub *= ctx.p;
        auto g = ctx.pow_x(sub);
        // g - x
        if (g.size() < 2) g.resize(2, 0);
        g[1] = ((g[1] - 1) % ctx.p + ctx.p) % ctx.p;
        auto gc = poly_gcd(ctx.p, g, ctx.mod);
        int deg = -1;
        for (int i = static_cast<int>(gc.size()) - 1; i >= 0; --i)
            if (gc[i] != 0) { deg = i; break; }
        if (deg != 0) return false;
    }
    // Multiplicative order of the root.
    for (long long r : prime_factors(q - 1)) {
        if (PolyCtx::is_one(ctx.pow_x((q - 1) / r))) return false;
    }
    return true;
}

} // namespace

Field Field::build(int p, int m, long long size_cap) {
    if (!is_prime(p)) throw NotPrimeError("p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw IndexRangeError("m must be positive");
    const int n = 2 * m;
    long long q = 1;
    for (int i = 0; i < n; ++i) {
        q *= p;
        if (q > size_cap) throw TooLargeError("field order p^(2m) exceeds size cap");
    }

    Field f;
    f.params_.p = p;
    f.params_.m = m;
    f.params_.n = n;
    f.params_.order = q;
    f.pm_ = 1;
    for (int i = 0; i < m; ++i) f.pm_ *= p;

    // Lexicographically first primitive modulus; the candidate counter's
    // base-p digits are the coefficients, constant term fastest.
    PolyCtx ctx;
    ctx.p = p;
    ctx.n = n;
    bool found = false;
    for (long long k = 0; k < q; ++k) {
        std::vector<int> coeffs(n + 1, 0);
        long long t = k;
        for (int i = 0; i < n; ++i) {
            coeffs[i] = static_cast<int>(t % p);
            t /= p;
        }
        coeffs[n] = 1;
        ctx.mod = coeffs;
        if (is_primitive(ctx, q)) {
            f.params_.modulus = coeffs;
            found = true;
            break;
        }
    }
    if (!found) throw ConstructionFailureError("no primitive polynomial found");

    // Table fill: walk psi^t by multiplying the coefficient vector by x.
    const long long g = q - 1;
    f.exp_.assign(static_cast<size_t>(2 * g), 0);
    f.log_.assign(static_cast<size_t>(q), 0xFFFFFFFFu);

    std::vector<long long> p_pows(n + 1, 1);
    for (int i = 1; i <= n; ++i) p_pows[i] = p_pows[i - 1] * p;

    std::vector<int> cur(n, 0);
    cur[0] = 1;
    for (long long t = 0; t < g; ++t) {
        uint32_t rep = 0;
        for (int i = 0; i < n; ++i) rep += static_cast<uint32_t>(cur[i] * p_pows[i]);
        f.exp_[static_cast<size_t>(t)] = rep;
        if (f.log_[rep] != 0xFFFFFFFFu)
            throw ConstructionFailureError("exp table collision; modulus not primitive");
        f.log_[rep] = static_cast<uint32_t>(t);
        // cur *= x mod f
        int carry = cur[n - 1];
        for (int i = n - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (carry != 0)
            for (int i = 0; i < n; ++i)
                cur[i] = ((cur[i] - carry * f.params_.modulus[i]) % p + p) % p;
    }
    {
        uint32_t rep = 0;
        for (int i = 0; i < n; ++i) rep += static_cast<uint32_t>(cur[i] * p_pows[i]);
        if (rep != 1) throw ConstructionFailureError("psi^(q-1) != 1");
    }
    for (long long t = 0; t < g; ++t)
        f.exp_[static_cast<size_t>(g + t)] = f.exp_[static_cast<size_t>(t)];

    // Negation table, digit-wise.
    f.neg_.assign(static_cast<size_t>(q), 0);
    if (p == 2) {
        for (long long r = 0; r < q; ++r) f.neg_[static_cast<size_t>(r)] = static_cast<uint32_t>(r);
    } else {
        for (long long r = 0; r < q; ++r) {
            long long v = r;
            uint32_t out = 0;
            for (int i = 0; i < n; ++i) {
                int d = static_cast<int>(v % p);
                v /= p;
                out += static_cast<uint32_t>(((p - d) % p) * p_pows[i]);
            }
            f.neg_[static_cast<size_t>(r)] = out;
        }
    }

    // Trace table: Tr(x) = sum of the n Frobenius conjugates, which lands in
    // the prime field, i.e. rep < p.
    f.trace_.assign(static_cast<size_t>(q), 0);
    for (long long r = 1; r < q; ++r) {
        FieldElement acc{static_cast<uint32_t>(r)};
        uint64_t t = f.log_[static_cast<size_t>(r)];
        for (int i = 1; i < n; ++i) {
            t = t * static_cast<uint64_t>(p) % static_cast<uint64_t>(g);
            acc = f.add(acc, {f.exp_[t]});
        }
        if (acc.rep >= static_cast<uint32_t>(p))
            throw ConstructionFailureError("trace escaped the prime field");
        f.trace_[static_cast<size_t>(r)] = static_cast<uint16_t>(acc.rep);
    }
    return f;
}

FieldElement Field::add_odd(FieldElement a, FieldElement b) const {
    const int p = params_.p;
    uint32_t ra = a.rep, rb = b.rep, out = 0, place = 1;
    while (ra != 0 || rb != 0) {
        int s = static_cast<int>(ra % p) + static_cast<int>(rb % p);
        if (s >= p) s -= p;
        out += static_cast<uint32_t>(s) * place;
        ra /= p;
        rb /= p;
        place *= static_cast<uint32_t>(p);
    }
    return {out};
}

} // namespace niho
