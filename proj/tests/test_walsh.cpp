#include <doctest.h>

#include "niho/niho.hpp"
#include "niho/walsh.hpp"

using namespace niho;

namespace {

// Definition-level oracle with its own powering.
CyclotomicInteger oracle_walsh(const Field& f, long long d, FieldElement u, FieldElement v) {
    auto naive_pow = [&](FieldElement x) {
        if (x.rep == 0) return f.zero();
        FieldElement r = f.one(), base = x;
        long long e = d;
        while (e > 0) {
            if (e & 1) r = f.mul(r, base);
            base = f.mul(base, base);
            e >>= 1;
        }
        return r;
    };
    std::vector<long long> counts(static_cast<size_t>(f.p()), 0);
    for (uint32_t x = 0; x < f.order(); ++x)
        ++counts[static_cast<size_t>(f.trace(f.sub(f.mul(u, naive_pow({x})), f.mul(v, {x}))))];
    return CyclotomicInteger::from_root_counts(f.p(), counts);
}

std::map<long long, long long> rational_entries(const WalshDistribution& dist) {
    std::map<long long, long long> out;
    for (const auto& [value, mult] : dist.entries) {
        REQUIRE(value.is_rational());
        out[value.rational_value()] = mult;
    }
    return out;
}

} // namespace

TEST_SUITE("walsh") {

TEST_CASE("walsh_value matches the definition oracle") {
    Field f16 = build_field(2, 2);
    Field f9 = build_field(3, 1);
    for (uint32_t u = 0; u < 16; ++u)
        for (uint32_t v = 0; v < 16; ++v)
            CHECK(walsh_value(f16, 7, {u}, {v}) == oracle_walsh(f16, 7, {u}, {v}));
    for (long long d : {2LL, 5LL})
        for (uint32_t u = 0; u < 9; ++u)
            for (uint32_t v = 0; v < 9; ++v)
                CHECK(walsh_value(f9, d, {u}, {v}) == oracle_walsh(f9, d, {u}, {v}));
}

TEST_CASE("u = 0 row") {
    Field f = build_field(2, 2);
    for (long long d : {1LL, 7LL, 10LL}) {
        CHECK(walsh_value(f, d, f.zero(), f.zero()) == CyclotomicInteger(2, 16));
        for (uint32_t v = 1; v < 16; ++v)
            CHECK(walsh_value(f, d, f.zero(), {v}) == CyclotomicInteger(2, 0));
    }
    CHECK(walsh_value(f, 7, f.one(), f.one()) == CyclotomicInteger(2, 0));
}

TEST_CASE("four-value distributions") {
    Field f64 = build_field(2, 3);
    CHECK(rational_entries(walsh_distribution(f64, 15)) ==
          std::map<long long, long long>{{-8, 1176}, {0, 1764}, {8, 504}, {16, 588}});

    Field f16 = build_field(2, 2);
    CHECK(rational_entries(walsh_distribution(f16, 7)) ==
          std::map<long long, long long>{{-4, 60}, {0, 90}, {4, 60}, {8, 30}});

    Field f9 = build_field(3, 1);
    CHECK(rational_entries(walsh_distribution(f9, 5)) ==
          std::map<long long, long long>{{-3, 16}, {0, 24}, {3, 24}, {6, 8}});
}

TEST_CASE("distribution mass and first moment") {
    for (auto [p, m, d] : {std::tuple{2, 2, 7LL}, {2, 2, 10LL}, {3, 1, 5LL}, {3, 1, 2LL}}) {
        Field f = build_field(p, m);
        auto dist = walsh_distribution(f, d);
        const long long q = f.order();
        long long mass = 0;
        CyclotomicInteger first(f.p(), 0);
        for (const auto& [value, mult] : dist.entries) {
            mass += mult;
            first += value.scaled(mult);
        }
        CHECK(mass == (q - 1) * q);
        // moment r = 1 minus the u = 0 row: q^2 * N_1 - q
        CHECK(first == CyclotomicInteger(f.p(), q * q - q));
    }
}

TEST_CASE("N_r counts on F_16, d = 7") {
    Field f = build_field(2, 2);
    CHECK(count_Nr(f, 7, 1) == 1);
    CHECK(count_Nr(f, 7, 2) == 16);
    CHECK(count_Nr(f, 7, 3) == 76);
    CHECK(count_Nr(f, 7, 4) == 856);
    CHECK_THROWS_AS(count_Nr(f, 7, 5), IndexRangeError);
}

TEST_CASE("alternating count equals the plain count for odd Niho d") {
    Field f9 = build_field(3, 1);
    CHECK(count_fourth_alternating(f9, 5) == 249);
    CHECK(count_Nr(f9, 5, 4) == 249);
    Field f16 = build_field(2, 2);
    CHECK(count_fourth_alternating(f16, 7) == count_Nr(f16, 7, 4));
}

TEST_CASE("moment identities hold for arbitrary exponents") {
    Field f16 = build_field(2, 2);
    Field f9 = build_field(3, 1);
    for (auto [fld, d] : {std::pair<const Field*, long long>{&f16, 7},
                          {&f16, 11},
                          {&f9, 5},
                          {&f9, 2},
                          {&f9, 3}}) {
        auto dist = walsh_distribution(*fld, d);
        for (const auto& mr : moments(*fld, d, dist)) {
            CAPTURE(d);
            CAPTURE(mr.r);
            CHECK(mr.match);
        }
    }
    auto m2 = moment(f16, 7, 2);
    CHECK(m2.lhs.rational_value() == 4096);
    auto m3 = moment(f16, 7, 3);
    CHECK(m3.lhs.rational_value() == 19456);
}

TEST_CASE("budget refusal") {
    Field f = build_field(2, 2);
    Exec tiny{10, 1};
    CHECK_THROWS_AS(walsh_distribution(f, 7, tiny), TooLargeError);
    CHECK_THROWS_AS(count_Nr(f, 7, 4, tiny), TooLargeError);
}

TEST_CASE("worker count does not change the distribution") {
    Field f = build_field(3, 2);
    auto one = walsh_distribution(f, 17, Exec{1'000'000'000, 1});
    auto many = walsh_distribution(f, 17, Exec{1'000'000'000, 7});
    CHECK(one.entries == many.entries);
}

} // TEST_SUITE
