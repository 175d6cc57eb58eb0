#include <doctest.h>

#include "niho/boomerang.hpp"

using namespace niho;

namespace {

std::map<long long, long long> entries(const BoomerangDistribution& d) { return d.entries; }

} // namespace

TEST_SUITE("boomerang") {

TEST_CASE("fbct entries by a/b class on F_16, d = 7") {
    Field f = build_field(2, 2);
    for (uint32_t a = 0; a < 16; ++a) {
        CHECK(fbct_entry(f, 7, {a}, {a}) == 16);
        CHECK(fbct_entry(f, 7, {a}, f.zero()) == 16);
    }
    for (uint32_t ar = 1; ar < 16; ++ar)
        for (uint32_t br = 1; br < 16; ++br) {
            FieldElement a{ar}, b{br};
            if (a == b) continue;
            FieldElement c = f.mul(a, f.inv(b));
            long long got = fbct_entry(f, 7, a, b);
            bool c_in_subfield = f.in_subfield(c);
            CHECK(got == (c_in_subfield ? 4 : 0));
        }
}

TEST_CASE("fbct distributions") {
    Field f16 = build_field(2, 2);
    auto d16 = fbct_distribution(f16, 7);
    CHECK(entries(d16) == std::map<long long, long long>{{16, 46}, {4, 30}, {0, 180}});
    CHECK(d16.uniformity == 4);

    Field f64 = build_field(2, 3);
    auto d64 = fbct_distribution(f64, 15);
    CHECK(entries(d64) == std::map<long long, long long>{{64, 190}, {8, 378}, {0, 3528}});
    CHECK(d64.uniformity == 8);

    auto lin = fbct_distribution(f16, 1);
    CHECK(entries(lin) == std::map<long long, long long>{{16, 256}});
}

TEST_CASE("fast ratio path equals the naive full table") {
    Field f = build_field(2, 2);
    for (long long d = 1; d <= 15; ++d) {
        auto fast = fbct_distribution(f, d);
        auto naive = fbct_distribution_naive(f, d);
        CHECK(fast.entries == naive.entries);
        CHECK(fast.uniformity == naive.uniformity);
    }
}

TEST_CASE("sozd distributions in odd characteristic") {
    Field f9 = build_field(3, 1);
    auto d9 = sozd_distribution(f9, 5);
    CHECK(entries(d9) == std::map<long long, long long>{{9, 17}, {3, 16}, {1, 48}});
    CHECK(d9.uniformity == 3);

    Field f81 = build_field(3, 2);
    auto d81 = sozd_distribution(f81, 17);
    // (p^n - p^m)(p^n - 1) = 72 * 80 = 5760
    CHECK(entries(d81) == std::map<long long, long long>{{81, 161}, {9, 640}, {1, 5760}});
    CHECK(d81.uniformity == 9);
}

TEST_CASE("degenerate rows") {
    Field f9 = build_field(3, 1);
    for (uint32_t b = 0; b < 9; ++b) {
        CHECK(sozd_entry(f9, 5, f9.zero(), {b}) == 9);
        CHECK(sozd_entry(f9, 5, {b}, f9.zero()) == 9);
    }
}

TEST_CASE("entry symmetry") {
    Field f16 = build_field(2, 2);
    Field f9 = build_field(3, 1);
    for (uint32_t a = 0; a < 16; ++a)
        for (uint32_t b = 0; b < 16; ++b)
            CHECK(fbct_entry(f16, 7, {a}, {b}) == fbct_entry(f16, 7, {b}, {a}));
    for (uint32_t a = 0; a < 9; ++a)
        for (uint32_t b = 0; b < 9; ++b)
            CHECK(sozd_entry(f9, 5, {a}, {b}) == sozd_entry(f9, 5, {b}, {a}));
}

TEST_CASE("characteristic 2 collapses sozd onto fbct") {
    Field f = build_field(2, 2);
    for (uint32_t a = 0; a < 16; ++a)
        for (uint32_t b = 0; b < 16; ++b)
            CHECK(sozd_entry(f, 7, {a}, {b}) == fbct_entry(f, 7, {a}, {b}));
    auto so = sozd_distribution(f, 7);
    auto fb = fbct_distribution(f, 7);
    CHECK(so.entries == fb.entries);
    CHECK(so.uniformity == fb.uniformity);
    CHECK(so.kind == BoomerangKind::SOZD);
    CHECK(fb.kind == BoomerangKind::FBCT);
}

TEST_CASE("solution sets are unions of four-element cosets") {
    Field f = build_field(2, 2);
    for (long long d : {7LL, 9LL, 13LL})
        for (uint32_t ar = 1; ar < 16; ++ar)
            for (uint32_t br = 1; br < 16; ++br) {
                FieldElement a{ar}, b{br};
                if (a == b) continue; // a+b = 0 is the degenerate diagonal
                CHECK(fbct_entry(f, d, a, b) % 4 == 0);
            }
}

TEST_CASE("odd characteristic rejects fbct") {
    Field f = build_field(3, 1);
    CHECK_THROWS_AS(fbct_entry(f, 5, f.one(), f.one()), OddCharacteristicError);
    CHECK_THROWS_AS(fbct_distribution(f, 5), OddCharacteristicError);
}

TEST_CASE("mass adds to p^{2n}") {
    Field f81 = build_field(3, 2);
    auto dist = sozd_distribution(f81, 17);
    long long mass = 0;
    for (auto& [v, c] : dist.entries) mass += c;
    CHECK(mass == 81 * 81);
}

} // TEST_SUITE
