#pragma once

// Deterministic JSON/CSV rendering of every report type. All numbers are
// exact integers; key order is fixed; distributions follow the canonical
// value order, so output bytes are a pure function of the inputs.

#include <string>
#include <vector>

#include <json.hpp>

#include "niho/niho.hpp"

namespace niho {

using json = nlohmann::ordered_json;

json field_header(const Field& f);
json field_header(const FieldParams& params);

json cyclo_json(const CyclotomicInteger& value);

json field_report(const Field& f);
json diff_report(const Field& f, const DifferentialSpectrum& spectrum);
json walsh_report(const Field& f, const WalshDistribution& dist,
                  const std::vector<MomentReport>& moments);
json boomerang_report(const Field& f, const BoomerangDistribution& dist);
json codes_report(const Field& f, const WeightDistribution& dist);
json predict_report(const PredictionReport& pred);
json verify_report(const Field& f, const VerifyReport& rep);
json search_report(const SearchReport& rep);
json curve_report(const Field& f, const CurveReport& rep);
json vsys_report(const Field& f, const NihoExponent& e, const VSystemReport& rep);
json cij_report(const Field& f, const CijReport& rep);

// CSV bodies (RFC-4180-style, comma separated, LF line endings, header row).
std::string field_csv(const Field& f);
std::string diff_csv(const DifferentialSpectrum& spectrum);
std::string walsh_csv(const WalshDistribution& dist);
std::string boomerang_csv(const BoomerangDistribution& dist);
std::string codes_csv(const WeightDistribution& dist);
std::string search_csv(const SearchReport& rep);

} // namespace niho
