#include "dit/dit.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/error.hpp"
#include "core/pmf.hpp"
#include "core/pmf_json.hpp"
#include "core/poincare.hpp"
#include "core/report.hpp"
#include "core/score.hpp"
#include "core/shepp_olkin.hpp"
#include "core/suites.hpp"

struct dit_pmf {
    dit::Pmf value;
};

namespace {

thread_local std::string g_last_error;

dit_status map_code(dit::ErrorCode code) {
    return static_cast<dit_status>(static_cast<int>(code) + 1);
}

template <typename F>
dit_status guarded(F&& fn) {
    try {
        fn();
        g_last_error.clear();
        return DIT_OK;
    } catch (const dit::Error& e) {
        g_last_error = e.what();
        return map_code(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return DIT_ERR_INTERNAL;
    }
}

dit_status null_argument(const char* what) {
    g_last_error = std::string("null argument: ") + what;
    return DIT_ERR_NULL_ARGUMENT;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

nlohmann::json parse_json_or_raise(const char* text, const char* what) {
    try {
        return nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        dit::raise(dit::ErrorCode::ParseError,
                   std::string(what) + ": " + e.what());
    }
}

dit::EntropyKind kind_from_string(const std::string& kind) {
    if (kind == "shannon") return dit::EntropyKind::Shannon;
    if (kind == "renyi") return dit::EntropyKind::Renyi;
    if (kind == "tsallis") return dit::EntropyKind::Tsallis;
    dit::raise(dit::ErrorCode::BadParameter, "unknown entropy kind: " + kind);
}

nlohmann::json functional_value(const dit::Pmf& p, const std::string& name) {
    using dit::json_real;
    if (name == "entropy") return json_real(dit::entropy(p));
    if (name == "mean") return json_real(dit::moments(p).mean);
    if (name == "variance") return json_real(dit::moments(p).variance);
    if (name == "tail") return json_real(p.tail_bound());
    if (name == "K" || name == "fisher") return json_real(dit::scaled_fisher(p));
    if (name == "I" || name == "johnstone")
        return json_real(dit::johnstone_information(p));
    if (name == "c" || name == "clc") return json_real(dit::c_log_concavity(p));
    if (name == "ulc") return dit::ulc_check(p);
    if (name == "R" || name == "poincare")
        return json_real(dit::poincare_constant(p).constant);
    dit::raise(dit::ErrorCode::BadParameter, "unknown functional: " + name);
}

}  // namespace

extern "C" {

const char* dit_version(void) { return "0.1.0"; }

const char* dit_status_name(dit_status status) {
    if (status == DIT_OK) return "ok";
    if (status == DIT_ERR_NULL_ARGUMENT) return "null-argument";
    int code = static_cast<int>(status) - 1;
    if (code >= 0 && code <= static_cast<int>(dit::ErrorCode::Internal))
        return dit::error_code_name(static_cast<dit::ErrorCode>(code));
    return "unknown";
}

const char* dit_last_error_message(void) { return g_last_error.c_str(); }

void dit_string_free(char* s) { std::free(s); }

dit_status dit_pmf_parse(const char* json_text, dit_pmf** out) {
    if (!json_text) return null_argument("json_text");
    if (!out) return null_argument("out");
    return guarded([&] {
        *out = new dit_pmf{dit::pmf_from_json_text(json_text)};
    });
}

dit_status dit_pmf_family(const char* name, const double* params,
                          size_t n_params, double trunc_tol, dit_pmf** out) {
    if (!name) return null_argument("name");
    if (!params && n_params > 0) return null_argument("params");
    if (!out) return null_argument("out");
    return guarded([&] {
        dit::FamilyName family = dit::family_name_from_string(name);
        *out = new dit_pmf{dit::family_pmf(
            family, std::span<const double>(params, n_params), trunc_tol)};
    });
}

void dit_pmf_free(dit_pmf* p) { delete p; }

dit_status dit_pmf_size(const dit_pmf* p, size_t* out) {
    if (!p) return null_argument("p");
    if (!out) return null_argument("out");
    return guarded([&] { *out = p->value.size(); });
}

dit_status dit_pmf_mass(const dit_pmf* p, int64_t x, double* out) {
    if (!p) return null_argument("p");
    if (!out) return null_argument("out");
    return guarded([&] { *out = p->value(x); });
}

dit_status dit_pmf_mean(const dit_pmf* p, double* out) {
    if (!p) return null_argument("p");
    if (!out) return null_argument("out");
    return guarded([&] { *out = dit::moments(p->value).mean; });
}

dit_status dit_pmf_variance(const dit_pmf* p, double* out) {
    if (!p) return null_argument("p");
    if (!out) return null_argument("out");
    return guarded([&] { *out = dit::moments(p->value).variance; });
}

dit_status dit_pmf_entropy(const dit_pmf* p, double* out) {
    if (!p) return null_argument("p");
    if (!out) return null_argument("out");
    return guarded([&] { *out = dit::entropy(p->value); });
}

dit_status dit_pmf_tail_bound(const dit_pmf* p, double* out) {
    if (!p) return null_argument("p");
    if (!out) return null_argument("out");
    return guarded([&] { *out = p->value.tail_bound(); });
}

dit_status dit_pmf_to_json(const dit_pmf* p, char** json_out) {
    if (!p) return null_argument("p");
    if (!json_out) return null_argument("json_out");
    return guarded([&] { *json_out = dup_string(dit::pmf_to_json_text(p->value)); });
}

dit_status dit_scaled_fisher(const dit_pmf* p, double* out) {
    if (!p) return null_argument("p");
    if (!out) return null_argument("out");
    return guarded([&] { *out = dit::scaled_fisher(p->value); });
}

dit_status dit_johnstone_information(const dit_pmf* p, double* out) {
    if (!p) return null_argument("p");
    if (!out) return null_argument("out");
    return guarded([&] { *out = dit::johnstone_information(p->value); });
}

dit_status dit_c_log_concavity(const dit_pmf* p, double* out) {
    if (!p) return null_argument("p");
    if (!out) return null_argument("out");
    return guarded([&] { *out = dit::c_log_concavity(p->value); });
}

dit_status dit_ulc(const dit_pmf* p, int* out) {
    if (!p) return null_argument("p");
    if (!out) return null_argument("out");
    return guarded([&] { *out = dit::ulc_check(p->value) ? 1 : 0; });
}

dit_status dit_compute_functionals(const dit_pmf* p, const char* names_csv,
                                   char** json_out) {
    if (!p) return null_argument("p");
    if (!names_csv) return null_argument("names_csv");
    if (!json_out) return null_argument("json_out");
    return guarded([&] {
        nlohmann::json result = nlohmann::json::object();
        std::stringstream ss(names_csv);
        std::string token;
        bool any = false;
        while (std::getline(ss, token, ',')) {
            if (token.empty()) continue;
            result[token] = functional_value(p->value, token);
            any = true;
        }
        if (!any)
            dit::raise(dit::ErrorCode::BadParameter, "no functionals requested");
        *json_out = dup_string(result.dump());
    });
}

dit_status dit_verify_suite(const char* suite, const char* config_json,
                            char** report_json_out, int* all_hard_pass) {
    if (!suite) return null_argument("suite");
    if (!report_json_out) return null_argument("report_json_out");
    return guarded([&] {
        if (!dit::is_suite_name(suite))
            dit::raise(dit::ErrorCode::BadParameter,
                       std::string("unknown suite: ") + suite);
        dit::SuiteConfig cfg;
        if (config_json && *config_json)
            cfg = dit::SuiteConfig::from_json(
                parse_json_or_raise(config_json, "bad suite config"));
        dit::InequalityReport report = dit::run_suite(suite, cfg);
        nlohmann::json j = report.to_json();
        if (!cfg.output_path.empty()) dit::append_report_line(cfg.output_path, j);
        *report_json_out = dup_string(j.dump(2));
        if (all_hard_pass) *all_hard_pass = report.all_hard_pass() ? 1 : 0;
    });
}

dit_status dit_shepp_olkin_profile(const double* p0, const double* p1,
                                   size_t m, int grid_size, const char* kind,
                                   double q, char** csv_out) {
    if (!p0) return null_argument("p0");
    if (!p1) return null_argument("p1");
    if (!kind) return null_argument("kind");
    if (!csv_out) return null_argument("csv_out");
    return guarded([&] {
        dit::PathSpec path = dit::so_path(std::span<const double>(p0, m),
                                          std::span<const double>(p1, m));
        std::vector<dit::ProfilePoint> prof =
            dit::entropy_profile(path, grid_size, kind_from_string(kind), q);
        std::ostringstream csv;
        csv << "t,value,second_difference\n";
        csv.precision(17);
        for (const dit::ProfilePoint& pt : prof) {
            csv << pt.t << ',' << pt.value << ',';
            if (std::isnan(pt.second_difference)) csv << "nan";
            else csv << pt.second_difference;
            csv << '\n';
        }
        *csv_out = dup_string(csv.str());
    });
}

dit_status dit_shepp_olkin_scan(const char* kind, int m, int trials,
                                uint64_t seed, double q, char** json_out) {
    if (!kind) return null_argument("kind");
    if (!json_out) return null_argument("json_out");
    return guarded([&] {
        dit::EntropyKind ek = kind_from_string(kind);
        nlohmann::json j;
        if (q > 0.0) {
            dit::WitnessScan scan =
                dit::convexity_witness_scan(ek, q, m, trials, seed);
            j = {{"mode", "witness-scan"},
                 {"kind", kind},
                 {"q", q},
                 {"m", m},
                 {"trials", scan.trials},
                 {"max_curvature", dit::json_real(scan.max_curvature)},
                 {"witness_found", scan.witness.has_value()}};
            if (scan.witness) {
                j["witness"] = {{"p0", scan.witness->path.p0},
                                {"p1", scan.witness->path.p1},
                                {"t", scan.witness->t},
                                {"curvature", scan.witness->curvature},
                                {"refined_curvature",
                                 scan.witness->refined_curvature}};
            }
        } else {
            dit::CriticalQResult res = dit::critical_q_search(ek, m, trials, seed);
            j = {{"mode", "critical-q-search"},
                 {"kind", kind},
                 {"m", m},
                 {"trials", trials},
                 {"q_hat", res.q_hat},
                 {"bracket_lo", res.bracket_lo},
                 {"bracket_hi", res.bracket_hi}};
            if (res.witness) {
                j["witness"] = {{"p0", res.witness->path.p0},
                                {"p1", res.witness->path.p1},
                                {"q", res.witness->q},
                                {"t", res.witness->t},
                                {"curvature", res.witness->curvature},
                                {"refined_curvature",
                                 res.witness->refined_curvature}};
            }
        }
        j["seed"] = seed;
        *json_out = dup_string(j.dump(2));
    });
}

dit_status dit_poincare_report(const dit_pmf* p, int mixed_n, char** json_out) {
    if (!p) return null_argument("p");
    if (!json_out) return null_argument("json_out");
    return guarded([&] {
        const dit::Pmf& pmf = p->value;
        dit::PoincareEstimate est =
            mixed_n >= 0 ? dit::poincare_constant_mixed(pmf, mixed_n)
                         : dit::poincare_constant(pmf);
        dit::Moments m = dit::moments(pmf);
        nlohmann::json j = {{"operator", mixed_n >= 0 ? "mixed" : "forward"},
                            {"constant", dit::json_real(est.constant)},
                            {"maximizer", est.maximizer},
                            {"tail_note", est.tail_note},
                            {"mean", m.mean},
                            {"variance", m.variance}};
        if (mixed_n >= 0) j["n"] = mixed_n;
        if (dit::ulc_check(pmf)) {
            j["ulc_sandwich"] = {
                {"lower", m.variance},
                {"upper", m.mean},
                {"holds", est.constant >= m.variance - 1e-9 &&
                              est.constant <= m.mean + 1e-9}};
        }
        if (mixed_n < 0 && dit::has_full_analytic_support(pmf) &&
            dit::c_log_concavity(pmf) > 0.0) {
            dit::ClcPoincareBound b = dit::clc_poincare_bound(pmf);
            j["clc_bound"] = {{"c", b.c}, {"bound", b.bound}, {"holds", b.holds}};
        }
        *json_out = dup_string(j.dump(2));
    });
}

}  // extern "C"
