// nihospec: exact differential / Walsh / boomerang / code-weight spectra of
// power maps over F_{p^{2m}}, with closed-form verification for Niho
// exponents.
//
// Exit codes: 0 success (and, for verify/search/curve/vsys/cij, all checks
// match); 1 a prediction mismatch; 2 usage error; 3 size/budget refusal.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "niho/report.hpp"

using namespace niho;

namespace {

struct CommonOpts {
    int p = 0;
    int m = 0;
    std::optional<long long> d;
    std::optional<long long> s;
    long long budget = 1'000'000'000;
    int workers = 0;
    std::string format = "json";
    std::string output; // empty = stdout
};

long long default_budget() {
    if (const char* env = std::getenv("NIHOSPEC_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1'000'000'000;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_exponent) {
    cmd->add_option("--p", o.p, "field characteristic (prime)")->required();
    cmd->add_option("--m", o.m, "half extension degree; the field is F_{p^(2m)}")->required();
    if (with_exponent) {
        auto* dopt = cmd->add_option("--d", o.d, "power-map exponent");
        auto* sopt = cmd->add_option("--s", o.s, "Niho parameter: d = s(p^m-1)+1");
        dopt->excludes(sopt);
        sopt->excludes(dopt);
    }
    o.budget = default_budget();
    cmd->add_option("--budget", o.budget, "element-operation budget");
    cmd->add_option("--workers", o.workers, "worker threads (0 = all cores)");
    cmd->add_option("--format", o.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--output", o.output, "output path (default stdout)");
}

Exec make_exec(const CommonOpts& o) { return Exec{o.budget, o.workers}; }

long long resolve_d(const CommonOpts& o, const Field& f) {
    if (o.d) return *o.d;
    if (o.s) return make_niho(f.p(), f.m(), *o.s).d;
    throw CLI::ValidationError("one of --d or --s is required");
}

NihoExponent resolve_exponent(const CommonOpts& o) {
    if (o.s) return make_niho(o.p, o.m, *o.s);
    if (o.d) return niho_from_d(o.p, o.m, *o.d);
    throw CLI::ValidationError("one of --d or --s is required");
}

void emit(const CommonOpts& o, const json& j, const std::string& csv) {
    std::string payload = o.format == "csv" ? csv : j.dump(2) + "\n";
    if (o.output.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(o.output, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + o.output);
    out << payload;
    if (!out) throw IoError("write failed: " + o.output);
}

std::string kv_csv(const json& j) {
    std::string out = "key,value\n";
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.value().is_structured()) continue;
        out += it.key() + "," + it.value().dump() + "\n";
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spectra of power functions over F_{p^(2m)}"};
    app.require_subcommand(1);

    CommonOpts field_o, diff_o, walsh_o, fbct_o, sozd_o, codes_o, predict_o, verify_o,
        search_o, curve_o, vsys_o, cij_o;

    auto* cmd_field = app.add_subcommand("field", "build the field and print its description");
    add_common(cmd_field, field_o, false);

    auto* cmd_diff = app.add_subcommand("diff", "differential spectrum of x^d");
    add_common(cmd_diff, diff_o, true);

    auto* cmd_walsh = app.add_subcommand("walsh", "Walsh value distribution and moments");
    add_common(cmd_walsh, walsh_o, true);

    auto* cmd_fbct = app.add_subcommand("fbct", "Feistel boomerang connectivity distribution");
    add_common(cmd_fbct, fbct_o, true);
    bool fbct_naive = false;
    cmd_fbct->add_flag("--naive", fbct_naive, "full-table oracle path");

    auto* cmd_sozd = app.add_subcommand("sozd", "second-order zero differential spectrum");
    add_common(cmd_sozd, sozd_o, true);

    auto* cmd_codes = app.add_subcommand("codes", "cyclic code weight distribution");
    add_common(cmd_codes, codes_o, true);

    auto* cmd_predict = app.add_subcommand("predict", "closed-form predictions, no enumeration");
    add_common(cmd_predict, predict_o, true);

    auto* cmd_verify = app.add_subcommand("verify", "measured vs predicted, full pipeline");
    add_common(cmd_verify, verify_o, true);

    auto* cmd_search = app.add_subcommand("search", "locally-APN scan over all s");
    add_common(cmd_search, search_o, false);

    auto* cmd_curve = app.add_subcommand("curve", "points on alpha x^n1 + beta y^n2 + 1 = 0");
    add_common(cmd_curve, curve_o, false);
    long long curve_n1 = 1, curve_n2 = 1, curve_alog = 0, curve_blog = 0;
    cmd_curve->add_option("--n1", curve_n1, "x-degree")->required();
    cmd_curve->add_option("--n2", curve_n2, "y-degree")->required();
    cmd_curve->add_option("--alpha-log", curve_alog, "alpha = psi^this");
    cmd_curve->add_option("--beta-log", curve_blog, "beta = psi^this");

    auto* cmd_vsys = app.add_subcommand("vsys", "V-system relation check on the full grid");
    add_common(cmd_vsys, vsys_o, true);
    long long vsys_g2 = 0;
    cmd_vsys->add_option("--g2", vsys_g2, "second Niho parameter of the system");

    auto* cmd_cij = app.add_subcommand("cij", "C_{i,j} partition counts vs the lemma");
    add_common(cmd_cij, cij_o, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_field->parsed()) {
            Field f = build_field(field_o.p, field_o.m);
            emit(field_o, field_report(f), field_csv(f));
            return 0;
        }
        if (cmd_diff->parsed()) {
            Field f = build_field(diff_o.p, diff_o.m);
            auto spec = differential_spectrum(f, resolve_d(diff_o, f));
            emit(diff_o, diff_report(f, spec), diff_csv(spec));
            return 0;
        }
        if (cmd_walsh->parsed()) {
            Field f = build_field(walsh_o.p, walsh_o.m);
            Exec exec = make_exec(walsh_o);
            long long d = resolve_d(walsh_o, f);
            auto dist = walsh_distribution(f, d, exec);
            auto ms = moments(f, d, dist, exec);
            emit(walsh_o, walsh_report(f, dist, ms), walsh_csv(dist));
            return 0;
        }
        if (cmd_fbct->parsed()) {
            Field f = build_field(fbct_o.p, fbct_o.m);
            Exec exec = make_exec(fbct_o);
            long long d = resolve_d(fbct_o, f);
            auto dist = fbct_naive ? fbct_distribution_naive(f, d, exec)
                                   : fbct_distribution(f, d, exec);
            emit(fbct_o, boomerang_report(f, dist), boomerang_csv(dist));
            return 0;
        }
        if (cmd_sozd->parsed()) {
            Field f = build_field(sozd_o.p, sozd_o.m);
            auto dist = sozd_distribution(f, resolve_d(sozd_o, f), make_exec(sozd_o));
            emit(sozd_o, boomerang_report(f, dist), boomerang_csv(dist));
            return 0;
        }
        if (cmd_codes->parsed()) {
            Field f = build_field(codes_o.p, codes_o.m);
            auto dist = weight_distribution(f, resolve_d(codes_o, f), make_exec(codes_o));
            emit(codes_o, codes_report(f, dist), codes_csv(dist));
            return 0;
        }
        if (cmd_predict->parsed()) {
            auto pred = predict(resolve_exponent(predict_o));
            json j = predict_report(pred);
            emit(predict_o, j, kv_csv(j));
            return 0;
        }
        if (cmd_verify->parsed()) {
            Field f = build_field(verify_o.p, verify_o.m);
            auto rep = verify(f, resolve_exponent(verify_o), make_exec(verify_o));
            json j = verify_report(f, rep);
            emit(verify_o, j, kv_csv(j));
            return rep.pass ? 0 : 1;
        }
        if (cmd_search->parsed()) {
            auto rep = search_locally_apn(search_o.p, search_o.m, make_exec(search_o));
            emit(search_o, search_report(rep), search_csv(rep));
            return rep.pass ? 0 : 1;
        }
        if (cmd_curve->parsed()) {
            Field f = build_field(curve_o.p, curve_o.m);
            auto rep =
                curve_points(f, curve_n1, curve_n2, f.psi_pow(curve_alog), f.psi_pow(curve_blog));
            json j = curve_report(f, rep);
            emit(curve_o, j, kv_csv(j));
            return !rep.predicted || *rep.predicted == rep.measured ? 0 : 1;
        }
        if (cmd_vsys->parsed()) {
            Field f = build_field(vsys_o.p, vsys_o.m);
            NihoExponent e = resolve_exponent(vsys_o);
            auto rep = check_v_system(f, e, vsys_g2, make_exec(vsys_o));
            json j = vsys_report(f, e, rep);
            emit(vsys_o, j, kv_csv(j));
            return rep.all_match ? 0 : 1;
        }
        if (cmd_cij->parsed()) {
            Field f = build_field(cij_o.p, cij_o.m);
            auto rep = check_cij(f, make_exec(cij_o));
            json j = cij_report(f, rep);
            emit(cij_o, j, kv_csv(j));
            return rep.all_match ? 0 : 1;
        }
    } catch (const TooLargeError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 3;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
