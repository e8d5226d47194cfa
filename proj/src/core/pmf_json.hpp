#pragma once

#include <string>

#include <json.hpp>

#include "core/pmf.hpp"

namespace dit {

// JSON form:
//   {"probs": [..], "tail_bound": r, "kind": "exact-finite" | "truncated-analytic",
//    "family": {"name": "..", "params": [..]}}
// tail_bound, kind and family are optional on input; kind defaults to
// exact-finite when tail_bound is 0 and truncated-analytic otherwise.
nlohmann::json pmf_to_json(const Pmf& p);
Pmf pmf_from_json(const nlohmann::json& j);

Pmf pmf_from_json_text(const std::string& text);
std::string pmf_to_json_text(const Pmf& p);

}  // namespace dit
