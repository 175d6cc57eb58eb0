#include <doctest.h>

#include "niho/diff_spectrum.hpp"
#include "niho/niho.hpp"

using namespace niho;

namespace {

// Independent derivative-row oracle: square-and-multiply powering, no use of
// the tables behind delta_counts' pow path beyond plain field mul.
std::vector<long long> oracle_row(const Field& f, long long d) {
    auto naive_pow = [&](FieldElement x) {
        FieldElement r = f.one(), base = x;
        long long e = d;
        while (e > 0) {
            if (e & 1) r = f.mul(r, base);
            base = f.mul(base, base);
            e >>= 1;
        }
        return x.rep == 0 ? (d == 0 ? f.one() : f.zero()) : r;
    };
    std::vector<long long> row(static_cast<size_t>(f.order()), 0);
    for (uint32_t x = 0; x < f.order(); ++x)
        ++row[f.sub(naive_pow(f.add({x}, f.one())), naive_pow({x})).rep];
    return row;
}

} // namespace

TEST_SUITE("diff-spectra") {

TEST_CASE("delta row matches the oracle and the frozen values") {
    Field f = build_field(2, 2);
    auto row = delta_counts(f, 7);
    CHECK(row == oracle_row(f, 7));
    CHECK(row[1] == 4); // b = 1 collects p^m solutions
    for (uint32_t b = 2; b < 16; ++b) CHECK((row[b] == 0 || row[b] == 2));

    auto linear = delta_counts(f, 1);
    CHECK(linear[1] == 16);
    for (uint32_t b = 0; b < 16; ++b)
        if (b != 1) CHECK(linear[b] == 0);
}

TEST_CASE("row sums to p^n for every exponent") {
    Field f = build_field(2, 2);
    for (long long d = 1; d <= 15; ++d) {
        auto row = delta_counts(f, d);
        long long total = 0;
        for (long long c : row) total += c;
        CHECK(total == 16);
    }
}

TEST_CASE("spectrum aggregation") {
    Field f16 = build_field(2, 2);
    auto s = differential_spectrum(f16, 7);
    CHECK(s.counts == std::map<long long, long long>{{0, 9}, {2, 6}, {4, 1}});
    CHECK(s.uniformity == 4);
    CHECK(s.locally_apn);

    auto lin = differential_spectrum(f16, 1);
    CHECK(lin.counts == std::map<long long, long long>{{0, 15}, {16, 1}});
    CHECK(!lin.locally_apn); // max outside F_p is 0, not 2

    Field f81 = build_field(3, 2);
    auto s81 = differential_spectrum(f81, 17);
    CHECK(s81.counts == std::map<long long, long long>{{0, 44}, {2, 36}, {9, 1}});

    Field f9 = build_field(3, 1);
    auto s9 = differential_spectrum(f9, 5);
    CHECK(s9.counts == std::map<long long, long long>{{0, 5}, {2, 3}, {3, 1}});
}

TEST_CASE("solutions pair up under x -> -1-x for Niho exponents") {
    for (auto [p, m] : {std::pair{3, 1}, {5, 1}}) {
        Field f = build_field(p, m);
        const long long pm = f.subfield_order();
        for (long long s = 0; s <= pm; ++s) {
            long long d = make_niho(p, m, s).d;
            for (uint32_t x = 0; x < f.order(); ++x) {
                FieldElement bx =
                    f.sub(f.pow(f.add({x}, f.one()), d), f.pow({x}, d));
                FieldElement y = f.sub(f.neg(f.one()), {x});
                FieldElement by =
                    f.sub(f.pow(f.add(y, f.one()), d), f.pow(y, d));
                CHECK(bx == by);
            }
        }
    }
}

TEST_CASE("measured uniformity equals the closed form for every s") {
    for (auto [p, m] : {std::pair{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 1}, {3, 2},
                        {3, 3}, {5, 1}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}) {
        Field f = build_field(p, m);
        for (long long s = 0; s <= f.subfield_order(); ++s) {
            NihoExponent e = make_niho(p, m, s);
            auto spec = differential_spectrum(f, e.d);
            long long expected =
                f.subfield_order() + (e.s1 - 1) * (e.s1 - 2) + (e.s2 - 1) * (e.s2 - 2);
            CAPTURE(p);
            CAPTURE(m);
            CAPTURE(s);
            CHECK(spec.uniformity == expected);
        }
    }
}

TEST_CASE("s1*s2 = p^m+1 exponents are locally-APN with uniformity above p^m") {
    // The many-solution rows of these exponents sit at b = +-1 inside F_p,
    // so the literal locally-APN predicate holds while the uniformity formula
    // gives more than p^m. Three independent parameter sets.
    for (auto [p, m, s] : {std::tuple{5, 1, 3LL}, {3, 2, 5LL}, {13, 1, 7LL}}) {
        Field f = build_field(p, m);
        NihoExponent e = make_niho(p, m, s);
        REQUIRE(e.s1 * e.s2 == f.subfield_order() + 1);
        auto row = delta_counts(f, e.d);
        auto spec = differential_spectrum(f, e.d);
        CAPTURE(p);
        CAPTURE(m);
        CHECK(spec.locally_apn);
        CHECK(spec.uniformity > f.subfield_order());
        CHECK(row[1] == spec.uniformity); // b = 1 carries the maximum
        // b = -1 collects s_i(s_i - 1) for each i whose subgroup of index s_i
        // in mu_{p^m+1} has even order, i.e. actually contains -1
        const long long L = f.subfield_order() + 1;
        long long expected_minus1 = 0;
        if ((L / e.s1) % 2 == 0) expected_minus1 += e.s1 * (e.s1 - 1);
        if ((L / e.s2) % 2 == 0) expected_minus1 += e.s2 * (e.s2 - 1);
        CHECK(row[f.neg(f.one()).rep] == expected_minus1);
    }
}

TEST_CASE("second moment identity") {
    Field f16 = build_field(2, 2);
    auto s7 = differential_spectrum(f16, 7);
    CHECK(second_moment_check(f16, 7, s7, 856));

    auto s1 = differential_spectrum(f16, 1);
    CHECK(second_moment_check(f16, 1, s1, 16 * 16 * 16));

    Field f9 = build_field(3, 1);
    auto s5 = differential_spectrum(f9, 5);
    // alternating fourth count brute-forced independently: M = 249,
    // (249 - 81) / 8 = 21 = 4*3 + 9
    CHECK(second_moment_check(f9, 5, s5, 249));
    CHECK_THROWS_AS(second_moment_check(f9, 5, s5, 250), NonIntegralRatioError);
}

TEST_CASE("scaling identity reconstructs the full DDT") {
    for (auto [p, m, d] : {std::tuple{2, 2, 7LL}, {3, 1, 5LL}, {3, 1, 2LL}}) {
        Field f = build_field(p, m);
        auto row = delta_counts(f, d);
        for (uint32_t a = 0; a < f.order(); ++a)
            for (uint32_t b = 0; b < f.order(); ++b) {
                long long direct = 0;
                for (uint32_t x = 0; x < f.order(); ++x)
                    if (f.sub(f.pow(f.add({x}, {a}), d), f.pow({x}, d)) == FieldElement{b})
                        ++direct;
                CHECK(ddt_entry(f, d, row, {a}, {b}) == direct);
            }
    }
}

TEST_CASE("exponent range") {
    Field f = build_field(2, 2);
    CHECK_THROWS_AS(delta_counts(f, 0), BadExponentError);
    CHECK_THROWS_AS(delta_counts(f, 16), BadExponentError);
    CHECK_NOTHROW(delta_counts(f, 15)); // unit indicator, reachable via Niho s on F_4
}

} // TEST_SUITE
