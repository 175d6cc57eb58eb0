#include <sstream>

#include "niho/niho.hpp"

namespace niho {
namespace {

std::string render_map(const std::map<long long, long long>& m) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [k, v] : m) {
        if (!first) os << ", ";
        first = false;
        os << k << ":" << v;
    }
    os << "}";
    return os.str();
}

std::string render_walsh(const WalshDistribution& dist) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [value, mult] : dist.entries) {
        if (!first) os << ", ";
        first = false;
        if (value.is_rational()) {
            os << value.rational_value();
        } else {
            os << "zeta[";
            for (size_t i = 0; i < value.coeffs().size(); ++i) {
                if (i) os << ";";
                os << value.coeffs()[i];
            }
            os << "]";
        }
        os << ":" << mult;
    }
    os << "}";
    return os.str();
}

VerifyCheck make_check(std::string name, bool applicable, bool match, std::string predicted,
                       std::string measured) {
    VerifyCheck c;
    c.name = std::move(name);
    c.applicable = applicable;
    c.match = !applicable || match;
    if (!applicable) {
        c.predicted = "n/a";
        c.measured = "n/a";
    } else {
        c.predicted = std::move(predicted);
        c.measured = std::move(measured);
    }
    return c;
}

} // namespace

VerifyReport verify(const Field& f, const NihoExponent& e, const Exec& exec) {
    if (f.p() != e.p || f.m() != e.m)
        throw FieldMismatchError("field parameters do not match the exponent");

    VerifyReport report;
    report.exponent = e;
    const PredictionReport pred = predict(e);
    const long long q = f.order(), pm = f.subfield_order();

    const DifferentialSpectrum spec = differential_spectrum(f, e.d);
    report.measured_locally_apn = spec.locally_apn;
    report.measured_uniformity = spec.uniformity;
    const bool lapn = spec.locally_apn;

    report.checks.push_back(make_check(
        "uniformity", true, spec.uniformity == pred.predicted_uniformity,
        std::to_string(pred.predicted_uniformity), std::to_string(spec.uniformity)));

    // Locally-APN implies the s1/s2 criterion; the converse is not a theorem
    // and is not asserted.
    report.checks.push_back(make_check(
        "lapn_necessity", true, !(lapn && !pred.lapn_necessary),
        pred.lapn_necessary ? "lAPN possible" : "lAPN excluded",
        lapn ? "locally-APN" : "not locally-APN"));

    report.checks.push_back(make_check("lapn_family_guarantee", pred.predicted_locally_apn,
                                       lapn, "locally-APN",
                                       lapn ? "locally-APN" : "not locally-APN"));

    // Spectrum counts as a plain map for comparison and rendering.
    std::map<long long, long long> measured_spec(spec.counts.begin(), spec.counts.end());
    auto spec_pattern = lapn_spectrum_pattern(e.p, e.m);
    report.checks.push_back(make_check("differential_spectrum", lapn,
                                       measured_spec == spec_pattern,
                                       render_map(spec_pattern), render_map(measured_spec)));

    const WalshDistribution dist = walsh_distribution(f, e.d, exec);
    const auto walsh_pattern = lapn_walsh_pattern(e.p, e.m);
    const bool pattern_match = walsh_matches_pattern(dist, walsh_pattern);
    report.checks.push_back(make_check("walsh_distribution", lapn, pattern_match,
                                       render_map(walsh_pattern), render_walsh(dist)));
    report.checks.push_back(make_check(
        "walsh_lapn_biconditional", true, pattern_match == lapn,
        lapn ? "four-valued pattern" : "not the four-valued pattern",
        pattern_match ? "four-valued pattern" : "not the four-valued pattern"));

    // Moment identities sum W^r = p^{2n} N_r, r = 1..4.
    {
        auto ms = moments(f, e.d, dist, exec);
        bool all = true;
        std::ostringstream meas;
        for (const auto& mr : ms) {
            all = all && mr.match;
            if (mr.r > 1) meas << " ";
            meas << "N" << mr.r << "=" << mr.n_r;
        }
        report.checks.push_back(
            make_check("moment_identities", true, all, "sum W^r = p^{2n} N_r", meas.str()));

        report.checks.push_back(make_check("third_moment_count", true,
                                           ms[2].n_r == pred.predicted_n3,
                                           std::to_string(pred.predicted_n3),
                                           std::to_string(ms[2].n_r)));
        report.checks.push_back(make_check(
            "fourth_moment_count", lapn,
            pred.predicted_n4 && ms[3].n_r == *pred.predicted_n4,
            pred.predicted_n4 ? std::to_string(*pred.predicted_n4)
                              : std::to_string(4 * q * q - 2 * pm * pm * pm - 3 * q + 2 * pm),
            std::to_string(ms[3].n_r)));
    }

    // Second-moment identity against the alternating fourth count.
    {
        long long m_alt = count_fourth_alternating(f, e.d, exec);
        bool ok = second_moment_check(f, e.d, spec, m_alt);
        report.checks.push_back(make_check("second_moment_identity", true, ok,
                                           "sum i^2 w_i = (M - p^{2n})/(p^n - 1)",
                                           "M = " + std::to_string(m_alt)));
    }

    // V-system relation on the full (u,v) grid.
    {
        VSystemReport vs = check_v_system(f, e, 0, exec);
        report.checks.push_back(make_check(
            "v_system_relation", true, vs.all_match, "W(u,-v) = (V(u,v) - 1) p^m",
            vs.all_match ? "holds at every (u,v)"
                         : std::to_string(vs.mismatches) + " pointwise mismatches"));
    }

    // Boomerang table of the appropriate kind.
    {
        BoomerangDistribution bd = f.p() == 2 ? fbct_distribution(f, e.d, exec)
                                              : sozd_distribution(f, e.d, exec);
        std::map<long long, long long> measured(bd.entries.begin(), bd.entries.end());
        auto pattern = lapn_boomerang_pattern(e.p, e.m);
        bool ok = measured == pattern && bd.uniformity == pm;
        report.checks.push_back(make_check(f.p() == 2 ? "fbct_distribution" : "sozd_distribution",
                                           lapn, ok, render_map(pattern),
                                           render_map(measured)));
    }

    // Cyclic code weights.
    {
        WeightDistribution wd = weight_distribution(f, e.d, exec);
        std::map<long long, long long> measured(wd.weights.begin(), wd.weights.end());
        auto pattern = lapn_code_weight_pattern(e.p, e.m);
        report.checks.push_back(make_check("code_weights", lapn, measured == pattern,
                                           render_map(pattern), render_map(measured)));
    }

    report.pass = true;
    for (const auto& c : report.checks) report.pass = report.pass && c.match;
    return report;
}

} // namespace niho
