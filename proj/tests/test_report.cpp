#include <doctest.h>

#include "niho/report.hpp"

using namespace niho;

TEST_SUITE("report") {

TEST_CASE("empty distributions are header-only CSV") {
    CHECK(walsh_csv(WalshDistribution{}) == "value,multiplicity\n");
    CHECK(boomerang_csv(BoomerangDistribution{}) == "value,count\n");
    CHECK(codes_csv(WeightDistribution{}) == "w,count\n");
}

TEST_CASE("field json carries the reproducibility header") {
    Field f = build_field(2, 2);
    json j = field_report(f);
    CHECK(j["p"] == 2);
    CHECK(j["m"] == 2);
    CHECK(j["n"] == 4);
    CHECK(j["modulus"] == json({1, 1, 0, 0, 1}));
    CHECK(j["primitive_check"] == true);
}

TEST_CASE("every report embeds the field header") {
    Field f = build_field(3, 1);
    auto spec = differential_spectrum(f, 5);
    for (const json& j : {diff_report(f, spec),
                          boomerang_report(f, sozd_distribution(f, 5)),
                          codes_report(f, weight_distribution(f, 5)),
                          cij_report(f, check_cij(f))}) {
        CHECK(j.contains("p"));
        CHECK(j.contains("m"));
        CHECK(j.contains("n"));
        CHECK(j.contains("modulus"));
    }
}

TEST_CASE("verify report leads with pass") {
    Field f = build_field(3, 1);
    json j = verify_report(f, verify(f, make_niho(3, 1, 2)));
    CHECK(j.begin().key() == "pass");
    CHECK(j["pass"] == true);
}

TEST_CASE("walsh serialization is integers for rational values") {
    Field f = build_field(3, 1);
    auto dist = walsh_distribution(f, 5);
    json j = walsh_report(f, dist, moments(f, 5, dist));
    for (const auto& entry : j["distribution"]) CHECK(entry["value"].is_number_integer());
    // non-rational rendering carries the flag
    CyclotomicInteger z = [] {
        std::vector<long long> counts{0, 1, 0};
        return CyclotomicInteger::from_root_counts(3, counts);
    }();
    json nz = cyclo_json(z);
    CHECK(nz["rational"] == false);
    CHECK(nz["coeffs"].size() == 2);
}

TEST_CASE("diff spectrum json matches the documented shape") {
    Field f = build_field(2, 2);
    json j = diff_report(f, differential_spectrum(f, 7));
    CHECK(j["d"] == 7);
    CHECK(j["uniformity"] == 4);
    CHECK(j["locally_apn"] == true);
    CHECK(j["spectrum"]["0"] == 9);
    CHECK(j["spectrum"]["2"] == 6);
    CHECK(j["spectrum"]["4"] == 1);
}

} // TEST_SUITE
