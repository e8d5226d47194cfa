#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/error.hpp"

namespace dit {

// One verified inequality (or equality) instance family.  slack is the signed
// margin left in the bound: for "value <= bound" checks it is bound - value,
// for equality checks -|deviation|, so negative slack beyond the tolerance is
// a violation.  Exploratory checks report evidence and never fail.
struct CheckResult {
    std::string name;
    std::string anchor;  // names the classical result the check exercises
    bool exploratory = false;
    double slack = 0.0;
    double tolerance = 0.0;
    double budget = 0.0;  // truncation mass the computed quantities absorbed
    nlohmann::json witness;  // optional payload, null when absent

    std::string status() const {
        if (exploratory) return "exploratory";
        return slack < -tolerance ? "fail" : "pass";
    }
};

struct SuiteConfig {
    std::uint64_t master_seed = 0;
    double trunc_tol = 1e-12;
    int trials = 0;     // 0 = per-check defaults
    int grid_size = 0;  // 0 = per-check defaults
    int max_m = 8;      // coordinate cap for bernoulli-sum path checks
    std::map<std::string, double> tolerance_overrides;
    std::string output_path;

    void validate() const;
    int trials_or(int dflt) const { return trials > 0 ? trials : dflt; }
    int grid_or(int dflt) const { return grid_size > 0 ? grid_size : dflt; }
    double tol_for(const std::string& check, double dflt) const;

    nlohmann::json to_json() const;
    static SuiteConfig from_json(const nlohmann::json& j);
};

struct InequalityReport {
    std::string suite;
    std::vector<CheckResult> checks;  // sorted by name
    std::uint64_t seed = 0;
    double error_budget = 0.0;  // max over check budgets
    std::string timestamp;      // ISO 8601 UTC

    bool all_hard_pass() const;
    nlohmann::json to_json() const;
};

// Non-finite reals serialize as the strings "+inf", "-inf", "nan".
nlohmann::json json_real(double v);

InequalityReport finalize_report(std::string suite, std::vector<CheckResult> checks,
                                 std::uint64_t seed);

std::string iso8601_utc_now();

// One compact JSON object per line, appended.
void append_report_line(const std::string& path, const nlohmann::json& j);

}  // namespace dit
