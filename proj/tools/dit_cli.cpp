#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dit/dit.h"

namespace {

// exit codes: 0 success, 1 hard check failure, 2 usage or input error
constexpr int kUsageError = 2;

struct CStr {
    char* ptr = nullptr;
    ~CStr() { dit_string_free(ptr); }
    CStr() = default;
    CStr(const CStr&) = delete;
    CStr& operator=(const CStr&) = delete;
};

struct PmfHandle {
    dit_pmf* ptr = nullptr;
    ~PmfHandle() { dit_pmf_free(ptr); }
    PmfHandle() = default;
    PmfHandle(PmfHandle&& other) noexcept : ptr(other.ptr) { other.ptr = nullptr; }
    PmfHandle& operator=(PmfHandle&&) = delete;
    PmfHandle(const PmfHandle&) = delete;
    PmfHandle& operator=(const PmfHandle&) = delete;
};

[[noreturn]] void fail(dit_status status) {
    std::cerr << "error: " << dit_status_name(status) << ": "
              << dit_last_error_message() << "\n";
    std::exit(kUsageError);
}

void check(dit_status status) {
    if (status != DIT_OK) fail(status);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        std::exit(kUsageError);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        std::cerr << "error: cannot write " << path << "\n";
        std::exit(kUsageError);
    }
}

void append_json_line(const std::string& path, const std::string& compact) {
    std::ofstream out(path, std::ios::app);
    if (!out || !(out << compact << '\n')) {
        std::cerr << "error: cannot write " << path << "\n";
        std::exit(kUsageError);
    }
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t pos = 0;
        double v = std::stod(tok, &pos);
        if (pos != tok.size())
            throw std::runtime_error("bad number in list: " + tok);
        out.push_back(v);
    }
    if (out.empty()) throw std::runtime_error("empty number list: " + s);
    return out;
}

std::string format_value(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.7g", v.get<double>());
    return buf;
}

PmfHandle load_pmf(const std::string& path) {
    std::string text = read_file(path);
    PmfHandle h;
    check(dit_pmf_parse(text.c_str(), &h.ptr));
    return h;
}

struct FamilyFlags {
    std::string family;
    double lambda = 1.0;
    double p = 0.5;
    int n = 1;
    double r = 1.0;
    double beta = 0.0;
    std::string ps;
    double tol = 1e-12;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--family", family,
                        "analytic family: poisson, bernoulli, binomial, "
                        "geometric, negative-binomial, bernoulli-sum, "
                        "tilted-poisson");
        cmd->add_option("--lambda", lambda, "rate (poisson, tilted-poisson)");
        cmd->add_option("--p", p, "success probability");
        cmd->add_option("--n", n, "trial count (binomial)");
        cmd->add_option("--r", r, "shape (negative-binomial)");
        cmd->add_option("--beta", beta, "tilt (tilted-poisson)");
        cmd->add_option("--ps", ps, "comma list of probabilities (bernoulli-sum)");
        cmd->add_option("--tol", tol, "truncation tail bound");
    }

    PmfHandle build() const {
        std::vector<double> params;
        if (family == "poisson") params = {lambda};
        else if (family == "bernoulli") params = {p};
        else if (family == "binomial") params = {double(n), p};
        else if (family == "geometric") params = {p};
        else if (family == "negative-binomial") params = {r, p};
        else if (family == "bernoulli-sum") params = parse_list(ps);
        else if (family == "tilted-poisson") params = {lambda, beta};
        else {
            std::cerr << "error: unknown family " << family << "\n";
            std::exit(kUsageError);
        }
        PmfHandle h;
        check(dit_pmf_family(family.c_str(), params.data(), params.size(), tol,
                             &h.ptr));
        return h;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete entropy, thinning, and concentration toolkit"};
    app.require_subcommand(1);

    // ---- compute ----
    auto* compute = app.add_subcommand(
        "compute", "evaluate functionals of a pmf given as JSON");
    std::string compute_input, compute_out;
    std::string functionals = "entropy,mean,variance";
    compute->add_option("--input", compute_input, "pmf JSON file")->required();
    compute->add_option("--functionals", functionals,
                        "comma list: entropy, mean, variance, tail, K, I, c, "
                        "ulc, R");
    compute->add_option("--out", compute_out, "append a JSON result line here");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    std::uint64_t seed = 0;
    double trunc_tol = 1e-12;
    int trials = 0, grid = 0, max_m = 8;
    std::string verify_out;
    std::vector<std::string> overrides;
    verify->add_option("suite", suite,
                       "poisson-approx, maxent, monotonicity, poincare, "
                       "log-sobolev, shepp-olkin, all")
        ->required();
    verify->add_option("--seed", seed, "master seed");
    verify->add_option("--tol", trunc_tol, "truncation tail bound");
    verify->add_option("--trials", trials, "trial count for randomized checks")
        ->check(CLI::PositiveNumber);
    verify->add_option("--grid", grid, "grid size for profile checks")
        ->check(CLI::Range(5, 100000));
    verify->add_option("--m", max_m, "largest coordinate count for paths")
        ->check(CLI::PositiveNumber);
    verify->add_option("--out", verify_out, "append the report here");
    verify->add_option("--override", overrides,
                       "per-check tolerance override, name=value");

    // ---- shepp-olkin ----
    auto* so = app.add_subcommand("shepp-olkin",
                                  "entropy along affine Bernoulli-sum paths");
    so->require_subcommand(1);

    auto* profile = so->add_subcommand("profile", "entropy profile CSV");
    std::string p0_list, p1_list, profile_kind = "shannon", profile_out;
    int profile_grid = 101;
    double profile_q = 2.0;
    profile->add_option("--p0", p0_list, "start coordinates, comma list")
        ->required();
    profile->add_option("--p1", p1_list, "end coordinates, comma list")
        ->required();
    profile->add_option("--grid", profile_grid, "points on [0,1]")
        ->check(CLI::Range(5, 100000));
    profile->add_option("--kind", profile_kind, "shannon, renyi, or tsallis");
    profile->add_option("--q", profile_q, "order for renyi or tsallis");
    profile->add_option("--out", profile_out, "write the CSV here");

    auto* scan = so->add_subcommand("scan", "convexity witness scan");
    std::string scan_kind, scan_out;
    int scan_m = 3, scan_trials = 200;
    std::uint64_t scan_seed = 0;
    double scan_q = 0.0;
    scan->add_option("--kind", scan_kind, "renyi or tsallis")->required();
    scan->add_option("--m", scan_m, "coordinate count")->check(CLI::PositiveNumber);
    scan->add_option("--trials", scan_trials, "paths per level")
        ->check(CLI::PositiveNumber);
    scan->add_option("--seed", scan_seed, "master seed");
    scan->add_option("--q", scan_q,
                     "fixed order to scan; omit or set <= 0 to search for "
                     "the critical order");
    scan->add_option("--out", scan_out, "append the JSON report here");

    // ---- poincare ----
    auto* poincare = app.add_subcommand(
        "poincare", "spectral-gap constant, maximizer, and bounds");
    std::string poincare_input, poincare_out;
    int mixed_n = -1;
    FamilyFlags fam;
    poincare->add_option("--input", poincare_input, "pmf JSON file");
    fam.add_to(poincare);
    poincare->add_option("--mixed", mixed_n,
                         "use the mixed-difference operator for laws on {0..n}");
    poincare->add_option("--out", poincare_out, "append the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (*compute) {
            PmfHandle p = load_pmf(compute_input);
            CStr json;
            check(dit_compute_functionals(p.ptr, functionals.c_str(), &json.ptr));
            nlohmann::json values = nlohmann::json::parse(json.ptr);
            std::stringstream ss(functionals);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                if (tok.empty()) continue;
                std::cout << tok << ' ' << format_value(values.at(tok)) << '\n';
            }
            if (!compute_out.empty()) {
                nlohmann::json line = {{"command", "compute"},
                                       {"input", compute_input},
                                       {"functionals", values}};
                append_json_line(compute_out, line.dump());
            }
            return 0;
        }

        if (*verify) {
            nlohmann::json cfg = nlohmann::json::object();
            cfg["master_seed"] = seed;
            cfg["trunc_tol"] = trunc_tol;
            if (verify->count("--trials") > 0) cfg["trials"] = trials;
            if (verify->count("--grid") > 0) cfg["grid_size"] = grid;
            if (verify->count("--m") > 0) cfg["max_m"] = max_m;
            if (!verify_out.empty()) cfg["output_path"] = verify_out;
            if (!overrides.empty()) {
                nlohmann::json tols = nlohmann::json::object();
                for (const std::string& ov : overrides) {
                    std::size_t eq = ov.find('=');
                    if (eq == std::string::npos || eq == 0)
                        throw std::runtime_error("bad override: " + ov);
                    tols[ov.substr(0, eq)] = std::stod(ov.substr(eq + 1));
                }
                cfg["tolerance_overrides"] = tols;
            }
            std::string cfg_text = cfg.dump();
            CStr report;
            int all_pass = 0;
            check(dit_verify_suite(suite.c_str(), cfg_text.c_str(), &report.ptr,
                                   &all_pass));
            std::cout << report.ptr << '\n';
            return all_pass ? 0 : 1;
        }

        if (*profile) {
            std::vector<double> p0 = parse_list(p0_list);
            std::vector<double> p1 = parse_list(p1_list);
            if (p0.size() != p1.size()) {
                std::cerr << "error: --p0 and --p1 must have the same length\n";
                return kUsageError;
            }
            CStr csv;
            check(dit_shepp_olkin_profile(p0.data(), p1.data(), p0.size(),
                                          profile_grid, profile_kind.c_str(),
                                          profile_q, &csv.ptr));
            if (profile_out.empty()) std::cout << csv.ptr;
            else write_file(profile_out, csv.ptr);
            return 0;
        }

        if (*scan) {
            CStr json;
            check(dit_shepp_olkin_scan(scan_kind.c_str(), scan_m, scan_trials,
                                       scan_seed, scan_q, &json.ptr));
            std::cout << json.ptr << '\n';
            if (!scan_out.empty())
                append_json_line(scan_out, nlohmann::json::parse(json.ptr).dump());
            return 0;
        }

        if (*poincare) {
            bool has_input = poincare->count("--input") > 0;
            bool has_family = poincare->count("--family") > 0;
            if (has_input == has_family) {
                std::cerr << "error: give exactly one of --input or --family\n";
                return kUsageError;
            }
            PmfHandle p = has_input ? load_pmf(poincare_input) : fam.build();
            CStr json;
            check(dit_poincare_report(p.ptr, mixed_n, &json.ptr));
            std::cout << json.ptr << '\n';
            if (!poincare_out.empty())
                append_json_line(poincare_out,
                                 nlohmann::json::parse(json.ptr).dump());
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}
