#pragma once

#include <string>
#include <vector>

#include "core/report.hpp"

namespace dit {

// The six verification suites; "all" runs every one with prefixed check names.
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

InequalityReport run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace dit
