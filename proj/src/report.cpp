#include "niho/report.hpp"

#include <sstream>

namespace niho {
namespace {

std::string cyclo_csv_cell(const CyclotomicInteger& value) {
    if (value.is_rational()) return std::to_string(value.rational_value());
    std::ostringstream os;
    for (size_t i = 0; i < value.coeffs().size(); ++i) {
        if (i) os << ";";
        os << value.coeffs()[i];
    }
    return os.str();
}

json int_map_json(const std::map<long long, long long>& m) {
    json out = json::object();
    for (const auto& [k, v] : m) out[std::to_string(k)] = v;
    return out;
}

json exponent_json(const NihoExponent& e) {
    json out;
    out["s"] = e.s;
    out["d"] = e.d;
    out["s1"] = e.s1;
    out["s2"] = e.s2;
    return out;
}

} // namespace

json field_header(const FieldParams& params) {
    json out;
    out["p"] = params.p;
    out["m"] = params.m;
    out["n"] = params.n;
    out["modulus"] = params.modulus;
    return out;
}

json field_header(const Field& f) { return field_header(f.params()); }

json cyclo_json(const CyclotomicInteger& value) {
    if (value.is_rational()) return json(value.rational_value());
    json out;
    out["rational"] = false;
    out["coeffs"] = value.coeffs();
    return out;
}

json field_report(const Field& f) {
    json out = field_header(f);
    out["order"] = f.order();
    out["primitive_check"] = true;
    return out;
}

json diff_report(const Field& f, const DifferentialSpectrum& spectrum) {
    json out = field_header(f);
    out["d"] = spectrum.d;
    out["uniformity"] = spectrum.uniformity;
    out["locally_apn"] = spectrum.locally_apn;
    out["max_outside_prime_field"] = spectrum.max_outside_prime_field;
    out["spectrum"] = int_map_json(spectrum.counts);
    return out;
}

json walsh_report(const Field& f, const WalshDistribution& dist,
                  const std::vector<MomentReport>& moments) {
    json out = field_header(f);
    out["d"] = dist.d;
    json entries = json::array();
    for (const auto& [value, mult] : dist.entries) {
        json e;
        e["value"] = cyclo_json(value);
        e["multiplicity"] = mult;
        entries.push_back(std::move(e));
    }
    out["distribution"] = std::move(entries);
    out["zero_row"] = {{"w_0_0", dist.zero_row_w00}, {"w_0_v", dist.zero_row_w0v}};
    json ms = json::array();
    for (const auto& mr : moments) {
        json e;
        e["r"] = mr.r;
        e["lhs"] = cyclo_json(mr.lhs);
        e["rhs"] = mr.rhs;
        e["n_r"] = mr.n_r;
        e["match"] = mr.match;
        ms.push_back(std::move(e));
    }
    out["moments"] = std::move(ms);
    return out;
}

json boomerang_report(const Field& f, const BoomerangDistribution& dist) {
    json out = field_header(f);
    out["d"] = dist.d;
    out["kind"] = dist.kind == BoomerangKind::FBCT ? "fbct" : "sozd";
    out["uniformity"] = dist.uniformity;
    out["uniformity_index_set"] =
        f.p() == 2 ? "a,b nonzero, a != b" : "a,b nonzero";
    out["distribution"] = int_map_json(dist.entries);
    return out;
}

json codes_report(const Field& f, const WeightDistribution& dist) {
    json out = field_header(f);
    out["d"] = dist.d;
    out["length"] = dist.length;
    out["weights"] = int_map_json(dist.weights);
    out["distinct_codewords"] = dist.distinct_codewords;
    out["dimension"] = dist.dimension;
    return out;
}

json predict_report(const PredictionReport& pred) {
    const NihoExponent& e = pred.exponent;
    json out;
    out["p"] = e.p;
    out["m"] = e.m;
    out["exponent"] = exponent_json(e);
    out["uniformity"] = pred.predicted_uniformity;
    out["locally_apn"] = pred.predicted_locally_apn;
    out["lapn_necessary_condition"] = pred.lapn_necessary;
    json fam;
    if (e.p == 2) {
        fam["f1"] = pred.f1_member;
        fam["f3"] = pred.f3_member;
    }
    fam["f2"] = pred.f2_member;
    fam["shift_of_member"] = pred.family_shift_member;
    out["families"] = std::move(fam);
    out["n3"] = pred.predicted_n3;
    if (pred.predicted_n4) out["n4"] = *pred.predicted_n4;
    if (pred.predicted_spectrum) out["spectrum"] = int_map_json(*pred.predicted_spectrum);
    if (pred.predicted_walsh) out["walsh"] = int_map_json(*pred.predicted_walsh);
    if (pred.predicted_boomerang)
        out[e.p == 2 ? "fbct" : "sozd"] = int_map_json(*pred.predicted_boomerang);
    if (pred.predicted_code_weights)
        out["code_weights"] = int_map_json(*pred.predicted_code_weights);
    return out;
}

json verify_report(const Field& f, const VerifyReport& rep) {
    json out;
    out["pass"] = rep.pass;
    out.update(field_header(f));
    out["exponent"] = exponent_json(rep.exponent);
    out["measured_uniformity"] = rep.measured_uniformity;
    out["measured_locally_apn"] = rep.measured_locally_apn;
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json e;
        e["name"] = c.name;
        e["applicable"] = c.applicable;
        e["match"] = c.match;
        e["predicted"] = c.predicted;
        e["measured"] = c.measured;
        checks.push_back(std::move(e));
    }
    out["checks"] = std::move(checks);
    return out;
}

json search_report(const SearchReport& rep) {
    json out;
    out["pass"] = rep.pass;
    out.update(field_header(rep.field));
    json rows = json::array();
    for (const auto& row : rep.rows) {
        json r;
        r["s"] = row.exponent.s;
        r["d"] = row.exponent.d;
        r["s1"] = row.exponent.s1;
        r["s2"] = row.exponent.s2;
        r["predicted"] = {{"uniformity", row.predicted_uniformity},
                          {"lapn_necessary", row.lapn_necessary},
                          {"lapn_guaranteed", row.lapn_guaranteed}};
        r["measured"] = {{"uniformity", row.measured_uniformity},
                         {"locally_apn", row.measured_lapn}};
        r["match"] = row.match;
        r["cyclotomic_class_rep"] = row.cyclotomic_class_rep;
        if (rep.p == 2) {
            r["f1_member"] = row.f1_member;
            r["f1_shift_member"] = row.f1_shift_member;
        }
        rows.push_back(std::move(r));
    }
    out["rows"] = std::move(rows);
    out["mismatches"] = rep.mismatches;
    if (rep.p == 2) out["lapn_outside_f1"] = rep.lapn_outside_f1;
    return out;
}

json curve_report(const Field& f, const CurveReport& rep) {
    json out = field_header(f);
    out["n1"] = rep.n1;
    out["n2"] = rep.n2;
    out["r1"] = rep.r1;
    out["r2"] = rep.r2;
    out["l"] = rep.l;
    out["k"] = rep.k;
    out["t"] = rep.t;
    out["case"] = rep.case_id;
    out["measured"] = rep.measured;
    if (rep.predicted) {
        out["predicted"] = *rep.predicted;
        out["match"] = *rep.predicted == rep.measured;
    } else {
        out["predicted"] = nullptr;
    }
    return out;
}

json vsys_report(const Field& f, const NihoExponent& e, const VSystemReport& rep) {
    json out = field_header(f);
    out["exponent"] = exponent_json(e);
    out["g1"] = rep.g1;
    out["g2"] = rep.g2;
    out["pairs_checked"] = rep.pairs_checked;
    out["mismatches"] = rep.mismatches;
    out["all_match"] = rep.all_match;
    return out;
}

json cij_report(const Field& f, const CijReport& rep) {
    json out = field_header(f);
    out["total"] = rep.total;
    out["expected_total"] = f.order() - 2;
    out["mismatched_cells"] = rep.mismatched_cells;
    out["all_match"] = rep.all_match;
    return out;
}

std::string field_csv(const Field& f) {
    std::ostringstream os;
    os << "key,value\n";
    os << "p," << f.p() << "\n";
    os << "m," << f.m() << "\n";
    os << "n," << f.n() << "\n";
    os << "modulus,";
    for (size_t i = 0; i < f.params().modulus.size(); ++i) {
        if (i) os << ";";
        os << f.params().modulus[i];
    }
    os << "\n";
    os << "order," << f.order() << "\n";
    os << "primitive_check,true\n";
    return os.str();
}

std::string diff_csv(const DifferentialSpectrum& spectrum) {
    std::ostringstream os;
    os << "count,multiplicity\n";
    for (const auto& [i, w] : spectrum.counts) os << i << "," << w << "\n";
    return os.str();
}

std::string walsh_csv(const WalshDistribution& dist) {
    std::ostringstream os;
    os << "value,multiplicity\n";
    for (const auto& [value, mult] : dist.entries)
        os << cyclo_csv_cell(value) << "," << mult << "\n";
    return os.str();
}

std::string boomerang_csv(const BoomerangDistribution& dist) {
    std::ostringstream os;
    os << "value,count\n";
    for (const auto& [value, count] : dist.entries) os << value << "," << count << "\n";
    return os.str();
}

std::string codes_csv(const WeightDistribution& dist) {
    std::ostringstream os;
    os << "w,count\n";
    for (const auto& [w, count] : dist.weights) os << w << "," << count << "\n";
    return os.str();
}

std::string search_csv(const SearchReport& rep) {
    std::ostringstream os;
    os << "s,d,s1,s2,predicted_uniformity,measured_uniformity,lapn_necessary,lapn_guaranteed,"
          "measured_lapn,match\n";
    for (const auto& row : rep.rows)
        os << row.exponent.s << "," << row.exponent.d << "," << row.exponent.s1 << ","
           << row.exponent.s2 << "," << row.predicted_uniformity << ","
           << row.measured_uniformity << "," << row.lapn_necessary << ","
           << row.lapn_guaranteed << "," << row.measured_lapn << "," << row.match << "\n";
    return os.str();
}

} // namespace niho
