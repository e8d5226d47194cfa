#include "core/report.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <fstream>

namespace dit {

void SuiteConfig::validate() const {
    if (!std::isfinite(trunc_tol) || !(trunc_tol > 0.0) || trunc_tol > 1e-3)
        raise(ErrorCode::BadParameter, "trunc_tol must lie in (0, 1e-3]");
    if (trials < 0) raise(ErrorCode::BadParameter, "trials must be >= 1");
    if (grid_size != 0 && grid_size < 5)
        raise(ErrorCode::BadParameter, "grid_size must be >= 5");
    if (max_m < 1) raise(ErrorCode::BadParameter, "max_m must be >= 1");
    for (const auto& [name, tol] : tolerance_overrides)
        if (!std::isfinite(tol) || !(tol > 0.0))
            raise(ErrorCode::BadParameter,
                  "tolerance override for '" + name + "' must be positive");
}

double SuiteConfig::tol_for(const std::string& check, double dflt) const {
    auto it = tolerance_overrides.find(check);
    return it == tolerance_overrides.end() ? dflt : it->second;
}

nlohmann::json SuiteConfig::to_json() const {
    nlohmann::json j{{"master_seed", master_seed},
                     {"trunc_tol", trunc_tol},
                     {"trials", trials},
                     {"grid_size", grid_size},
                     {"max_m", max_m}};
    if (!tolerance_overrides.empty()) j["tolerance_overrides"] = tolerance_overrides;
    if (!output_path.empty()) j["output_path"] = output_path;
    return j;
}

SuiteConfig SuiteConfig::from_json(const nlohmann::json& j) {
    if (!j.is_object()) raise(ErrorCode::ParseError, "config must be a JSON object");
    SuiteConfig cfg;
    try {
        if (j.contains("master_seed")) cfg.master_seed = j["master_seed"].get<std::uint64_t>();
        if (j.contains("trunc_tol")) cfg.trunc_tol = j["trunc_tol"].get<double>();
        if (j.contains("trials")) cfg.trials = j["trials"].get<int>();
        if (j.contains("grid_size")) cfg.grid_size = j["grid_size"].get<int>();
        if (j.contains("max_m")) cfg.max_m = j["max_m"].get<int>();
        if (j.contains("tolerance_overrides"))
            cfg.tolerance_overrides =
                j["tolerance_overrides"].get<std::map<std::string, double>>();
        if (j.contains("output_path")) cfg.output_path = j["output_path"].get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorCode::ParseError, std::string("bad config field: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

nlohmann::json json_real(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
    return v;
}

bool InequalityReport::all_hard_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.status() != "fail"; });
}

nlohmann::json InequalityReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const CheckResult& c : checks) {
        nlohmann::json jc{{"name", c.name},
                          {"anchor", c.anchor},
                          {"status", c.status()},
                          {"slack", json_real(c.slack)},
                          {"tolerance", json_real(c.tolerance)},
                          {"budget", json_real(c.budget)}};
        if (!c.witness.is_null()) jc["witness"] = c.witness;
        arr.push_back(std::move(jc));
    }
    return nlohmann::json{{"suite", suite},
                          {"seed", seed},
                          {"error_budget", json_real(error_budget)},
                          {"timestamp", timestamp},
                          {"checks", std::move(arr)}};
}

InequalityReport finalize_report(std::string suite, std::vector<CheckResult> checks,
                                 std::uint64_t seed) {
    std::sort(checks.begin(), checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    InequalityReport rep;
    rep.suite = std::move(suite);
    rep.checks = std::move(checks);
    rep.seed = seed;
    rep.error_budget = 0.0;
    for (const CheckResult& c : rep.checks)
        rep.error_budget = std::max(rep.error_budget, c.budget);
    rep.timestamp = iso8601_utc_now();
    return rep;
}

std::string iso8601_utc_now() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void append_report_line(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path, std::ios::app);
    if (!out) raise(ErrorCode::IoError, "cannot open report file: " + path);
    out << j.dump() << '\n';
    if (!out) raise(ErrorCode::IoError, "write failed: " + path);
}

}  // namespace dit
