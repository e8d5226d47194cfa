#include "core/pmf_json.hpp"

namespace dit {

namespace {

const char* kind_string(PmfKind kind) {
    return kind == PmfKind::ExactFinite ? "exact-finite" : "truncated-analytic";
}

PmfKind kind_from_string(const std::string& s) {
    if (s == "exact-finite") return PmfKind::ExactFinite;
    if (s == "truncated-analytic") return PmfKind::TruncatedAnalytic;
    raise(ErrorCode::ParseError, "unknown pmf kind '" + s + "'");
}

std::vector<double> number_array(const nlohmann::json& j, const char* where) {
    if (!j.is_array())
        raise(ErrorCode::ParseError, std::string(where) + " must be an array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number())
            raise(ErrorCode::ParseError, std::string(where) + " must contain only numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

}  // namespace

nlohmann::json pmf_to_json(const Pmf& p) {
    nlohmann::json j;
    j["probs"] = p.probs();
    j["tail_bound"] = p.tail_bound();
    j["kind"] = kind_string(p.kind());
    if (p.family()) {
        j["family"] = {{"name", family_name_string(p.family()->name)},
                       {"params", p.family()->params}};
    }
    return j;
}

Pmf pmf_from_json(const nlohmann::json& j) {
    if (!j.is_object()) raise(ErrorCode::ParseError, "pmf must be a JSON object");
    if (!j.contains("probs")) raise(ErrorCode::ParseError, "pmf is missing \"probs\"");
    std::vector<double> probs = number_array(j.at("probs"), "\"probs\"");

    double tail = 0.0;
    if (j.contains("tail_bound")) {
        if (!j.at("tail_bound").is_number())
            raise(ErrorCode::ParseError, "\"tail_bound\" must be a number");
        tail = j.at("tail_bound").get<double>();
    }

    PmfKind kind = tail == 0.0 ? PmfKind::ExactFinite : PmfKind::TruncatedAnalytic;
    if (j.contains("kind")) {
        if (!j.at("kind").is_string())
            raise(ErrorCode::ParseError, "\"kind\" must be a string");
        kind = kind_from_string(j.at("kind").get<std::string>());
    }

    std::optional<FamilyTag> tag;
    if (j.contains("family") && !j.at("family").is_null()) {
        const auto& f = j.at("family");
        if (!f.is_object() || !f.contains("name") || !f.at("name").is_string())
            raise(ErrorCode::ParseError, "\"family\" must be {name, params}");
        FamilyTag t;
        t.name = family_name_from_string(f.at("name").get<std::string>());
        if (f.contains("params")) t.params = number_array(f.at("params"), "\"family.params\"");
        tag = std::move(t);
    }

    return Pmf::validated(std::move(probs), tail, kind, std::move(tag));
}

Pmf pmf_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) raise(ErrorCode::ParseError, "invalid JSON");
    return pmf_from_json(j);
}

std::string pmf_to_json_text(const Pmf& p) { return pmf_to_json(p).dump(); }

}  // namespace dit
