#include "core/suites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "core/logsobolev.hpp"
#include "core/monotonicity.hpp"
#include "core/orthopoly.hpp"
#include "core/pmf.hpp"
#include "core/poincare.hpp"
#include "core/random_pmf.hpp"
#include "core/rng.hpp"
#include "core/score.hpp"
#include "core/shepp_olkin.hpp"
#include "core/thinning.hpp"

namespace dit {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kLambdaGrid[] = {0.5, 1.0, 2.0, 5.0};

// Slack conventions used throughout:
//   lower-bound checks   slack = min(quantity - bound), fail iff < -tol
//   equality checks      slack = -max|deviation|
//   counting checks      slack = -violations, tol = 0.5
CheckResult make_check(const SuiteConfig& cfg, const std::string& name,
                       std::string anchor, double slack, double default_tol,
                       double budget = 0.0, nlohmann::json witness = nullptr,
                       bool exploratory = false) {
    CheckResult c;
    c.name = name;
    c.anchor = std::move(anchor);
    c.exploratory = exploratory;
    c.slack = slack;
    c.tolerance = cfg.tol_for(name, default_tol);
    c.budget = budget;
    c.witness = std::move(witness);
    return c;
}

Pmf positive_random_pmf(Rng& rng, int max_support) {
    // random_pmf can land on the point mass at zero; every consumer here
    // needs a positive mean.
    for (;;) {
        Pmf p = random_pmf(rng, max_support);
        if (moments(p).mean > 1e-9) return p;
    }
}

Pmf mixed_random_pmf(Rng& rng, int trial, int max_support) {
    return trial % 2 == 0 ? random_ulc_pmf(rng, max_support)
                          : positive_random_pmf(rng, max_support);
}

Pmf random_full_support_family(Rng& rng, double tol) {
    switch (rng.uniform_int(0, 3)) {
        case 0: return poisson_pmf(rng.uniform(0.3, 4.0), tol);
        case 1: return geometric_pmf(rng.uniform(0.25, 0.8), tol);
        case 2:
            return negative_binomial_pmf(rng.uniform(0.5, 3.0),
                                         rng.uniform(0.3, 0.8), tol);
        default: return tilted_poisson_pmf(rng.uniform(0.3, 3.0),
                                           rng.uniform(0.0, 0.5), tol);
    }
}

Pmf perturbed_ulc_pmf(Rng& rng) {
    Pmf base = random_ulc_pmf(rng, 10);
    std::vector<double> w = base.probs();
    double sum = 0.0;
    for (double& v : w) {
        v *= std::exp(rng.uniform(-0.2, 0.2));
        sum += v;
    }
    for (double& v : w) v /= sum;
    return make_pmf(std::move(w));
}

// Instances that are not ULC but whose size-biased law still sits below them
// in the usual stochastic order; found by filtered sampling.
std::vector<Pmf> st_not_ulc_instances(const SuiteConfig& cfg,
                                      const std::string& check, int want,
                                      int max_attempts, int* attempts_out) {
    std::vector<Pmf> out;
    int attempts = 0;
    while (static_cast<int>(out.size()) < want && attempts < max_attempts) {
        Rng rng(derive_seed(cfg.master_seed, check, attempts));
        Pmf cand = attempts % 2 == 0 ? perturbed_ulc_pmf(rng)
                                     : positive_random_pmf(rng, 8);
        ++attempts;
        if (moments(cand).mean <= 1e-9) continue;
        if (ulc_check(cand)) continue;
        if (!stochastic_order(cand, size_bias(cand), OrderKind::Stochastic))
            continue;
        out.push_back(std::move(cand));
    }
    if (attempts_out) *attempts_out = attempts;
    return out;
}

bool rho_nonincreasing(const ScoreProfile& prof) {
    for (std::size_t x = 1; x < prof.rho.size(); ++x)
        if (prof.rho[x] > prof.rho[x - 1] + 1e-12) return false;
    return true;
}

double rayleigh_quotient(const Pmf& p, const std::vector<double>& g) {
    // two-pass variance over the energy restricted to x < N
    double mean = 0.0;
    for (std::size_t x = 0; x < g.size(); ++x) mean += p(x) * g[x];
    double var = 0.0;
    for (std::size_t x = 0; x < g.size(); ++x) {
        double d = g[x] - mean;
        var += p(x) * d * d;
    }
    double energy = 0.0;
    for (std::size_t x = 0; x + 1 < g.size(); ++x) {
        double d = g[x + 1] - g[x];
        energy += p(x) * d * d;
    }
    return var / energy;
}

double log_poisson_mass(double lambda, int x) {
    return -lambda + x * std::log(lambda) - std::lgamma(x + 1.0);
}

PathSpec random_path(Rng& rng, int m) {
    std::vector<double> p0(m), p1(m);
    for (int i = 0; i < m; ++i) {
        p0[i] = rng.uniform();
        p1[i] = rng.uniform();
    }
    return so_path(p0, p1);
}

PathSpec random_monotone_path(Rng& rng, int m) {
    std::vector<double> p0(m), p1(m);
    bool up = rng.bernoulli(0.5);
    for (int i = 0; i < m; ++i) {
        p0[i] = rng.uniform();
        double u = rng.uniform();
        p1[i] = up ? p0[i] + u * (1.0 - p0[i]) : p0[i] - u * p0[i];
    }
    return so_path(p0, p1);
}

// ------------------------------------------------------------------ suites

std::vector<CheckResult> checks_poisson_approx(const SuiteConfig& cfg) {
    std::vector<CheckResult> out;
    const double tol = cfg.trunc_tol;

    {
        double worst = 0.0;
        for (int i = 1; i <= 99; ++i) {
            double p = i / 100.0;
            double k = scaled_fisher(bernoulli_pmf(p));
            worst = std::max(worst, std::abs(k - p * p / (1.0 - p)));
        }
        out.push_back(make_check(cfg, "bernoulli-fisher-closed-form",
                                 "bernoulli-scaled-fisher", -worst, 1e-12));
    }

    {
        // K vanishes exactly on the Poisson family and nowhere else
        int violations = 0;
        double max_poisson_k = 0.0, min_generic_k = kInf;
        for (double lam : kLambdaGrid) {
            double k = scaled_fisher(poisson_pmf(lam, tol));
            max_poisson_k = std::max(max_poisson_k, k);
            if (k > 1e-12) ++violations;
        }
        for (int trial = 0; trial < 100; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "fisher-poisson-characterization",
                                trial));
            double k = scaled_fisher(mixed_random_pmf(rng, trial, 10));
            min_generic_k = std::min(min_generic_k, k);
            if (k <= 1e-12) ++violations;
        }
        out.push_back(make_check(
            cfg, "fisher-poisson-characterization", "poisson-score-vanishes",
            -static_cast<double>(violations), 0.5, tol,
            {{"max_poisson_fisher", max_poisson_k},
             {"min_generic_fisher", min_generic_k}}));
    }

    {
        // chain D <= K and TV <= sqrt(D/2), plus the 1/(n(n-1)) bound for
        // binomials with unit mean
        double bound_slack = kInf, chain_slack = kInf, pinsker_slack = kInf;
        double budget = 0.0;
        for (int n = 2; n <= 50; ++n) {
            Pmf b = binomial_pmf(n, 1.0 / n);
            PoissonApproxBounds pb = poisson_approx_bounds(b, tol);
            bound_slack =
                std::min(bound_slack, 1.0 / (n * (n - 1.0)) - pb.rel_ent);
            chain_slack = std::min(chain_slack, pb.fisher - pb.rel_ent);
            pinsker_slack = std::min(pinsker_slack, pb.pinsker - pb.tv);
            budget = std::max(budget, pb.budget);
        }
        int chain_trials = cfg.trials_or(200);
        for (int trial = 0; trial < chain_trials; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "divergence-fisher-chain", trial));
            Pmf p = mixed_random_pmf(rng, trial, 12);
            PoissonApproxBounds pb = poisson_approx_bounds(p, tol);
            chain_slack = std::min(chain_slack, pb.fisher - pb.rel_ent);
            pinsker_slack = std::min(pinsker_slack, pb.pinsker - pb.tv);
            budget = std::max(budget, pb.budget);
        }
        out.push_back(make_check(cfg, "binomial-divergence-bound",
                                 "binomial-poisson-divergence-bound",
                                 bound_slack, 1e-12, budget));
        out.push_back(make_check(cfg, "divergence-fisher-chain",
                                 "fisher-dominates-divergence", chain_slack,
                                 1e-10, budget,
                                 {{"trials", chain_trials + 49}}));
        out.push_back(make_check(cfg, "pinsker-chain", "pinsker-bound",
                                 pinsker_slack, 1e-10, budget,
                                 {{"trials", chain_trials + 49}}));
    }

    {
        int trials = cfg.trials_or(500);
        double min_gap = kInf;
        int worst_trial = -1;
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "fisher-subadditivity", trial));
            int parts = rng.uniform_int(2, 4);
            std::vector<Pmf> tuple;
            tuple.reserve(parts);
            for (int i = 0; i < parts; ++i)
                tuple.push_back(rng.bernoulli(0.5)
                                    ? random_ulc_pmf(rng, 12)
                                    : positive_random_pmf(rng, 12));
            double gap = fisher_subadditivity_gap(tuple, FisherKind::Scaled);
            if (gap < min_gap) {
                min_gap = gap;
                worst_trial = trial;
            }
        }
        out.push_back(make_check(cfg, "fisher-subadditivity",
                                 "fisher-information-subadditivity", min_gap,
                                 1e-10, 0.0,
                                 {{"trials", trials}, {"worst_trial", worst_trial}}));
    }

    {
        double worst = 0.0;
        for (double lam : kLambdaGrid) {
            Pmf half = poisson_pmf(lam / 2.0, tol);
            std::vector<Pmf> pair{half, half};
            worst = std::max(
                std::abs(fisher_subadditivity_gap(pair, FisherKind::Johnstone)),
                worst);
        }
        out.push_back(make_check(cfg, "johnstone-poisson-equality",
                                 "johnstone-subadditivity-poisson-equality",
                                 -worst, 1e-8, tol));
    }

    {
        int trials = cfg.trials_or(100);
        double min_gap = kInf;
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "johnstone-subadditivity", trial));
            std::vector<Pmf> pair{random_full_support_family(rng, tol),
                                  random_full_support_family(rng, tol)};
            min_gap = std::min(
                min_gap, fisher_subadditivity_gap(pair, FisherKind::Johnstone));
        }
        out.push_back(make_check(cfg, "johnstone-subadditivity",
                                 "johnstone-information-subadditivity", min_gap,
                                 1e-8, tol, {{"trials", trials}}));
    }

    {
        int trials = cfg.trials_or(100);
        double min_slack = kInf;
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "johnstone-cramer-rao", trial));
            Pmf p = random_full_support_family(rng, tol);
            double info = johnstone_information(p);
            min_slack = std::min(min_slack, info - 1.0 / moments(p).variance);
        }
        out.push_back(make_check(cfg, "johnstone-cramer-rao",
                                 "cramer-rao-lower-bound", min_slack, 1e-8, tol,
                                 {{"trials", trials}}));
    }

    {
        int trials = cfg.trials_or(500);
        double worst = 0.0;
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "score-zero-mean", trial));
            Pmf p = trial % 3 == 2 ? random_full_support_family(rng, tol)
                                   : mixed_random_pmf(rng, trial, 12);
            ScoreProfile prof = scaled_score(p);
            double s = 0.0;
            for (std::size_t x = 0; x < prof.rho.size(); ++x)
                s += p(x) * prof.rho[x];
            worst = std::max(worst, std::abs(s));
        }
        out.push_back(make_check(cfg, "score-zero-mean", "score-centering",
                                 -worst, 1e-10, tol, {{"trials", trials}}));
    }

    {
        int trials = cfg.trials_or(500);
        int disagreements = 0;
        nlohmann::json first = nullptr;
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "ulc-score-equivalence", trial));
            Pmf p = mixed_random_pmf(rng, trial, 12);
            bool ulc = ulc_check(p);
            bool mono = rho_nonincreasing(scaled_score(p));
            if (ulc != mono) {
                ++disagreements;
                if (first.is_null())
                    first = {{"trial", trial}, {"probs", p.probs()}};
            }
        }
        out.push_back(make_check(
            cfg, "ulc-score-equivalence", "ulc-score-monotone-equivalence",
            -static_cast<double>(disagreements), 0.5, 0.0,
            {{"trials", trials}, {"first_disagreement", first}}));
    }

    return out;
}

std::vector<CheckResult> checks_maxent(const SuiteConfig& cfg) {
    std::vector<CheckResult> out;
    const double tol = cfg.trunc_tol;

    {
        int trials = cfg.trials_or(1000);
        double min_gap = kInf, budget = 0.0;
        int misclassified = 0;
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "poisson-maxent-ulc", trial));
            MaxentGap mg = maxent_gap(random_ulc_pmf(rng, 12), tol);
            min_gap = std::min(min_gap, mg.gap);
            budget = std::max(budget, mg.budget);
            if (mg.hypothesis != MaxentHypothesis::Ulc) ++misclassified;
        }
        out.push_back(make_check(cfg, "poisson-maxent-ulc",
                                 "poisson-maximum-entropy-ulc", min_gap, 1e-10,
                                 budget,
                                 {{"trials", trials}, {"misclassified", misclassified}}));
    }

    {
        int attempts = 0;
        std::vector<Pmf> found =
            st_not_ulc_instances(cfg, "poisson-maxent-size-bias-st", 60, 20000,
                                 &attempts);
        double min_gap = kInf, budget = 0.0;
        int misclassified = 0;
        for (const Pmf& p : found) {
            MaxentGap mg = maxent_gap(p, tol);
            min_gap = std::min(min_gap, mg.gap);
            budget = std::max(budget, mg.budget);
            if (mg.hypothesis != MaxentHypothesis::SizeBiasSt) ++misclassified;
        }
        if (found.empty()) min_gap = 0.0;
        out.push_back(make_check(cfg, "poisson-maxent-size-bias-st",
                                 "poisson-maximum-entropy-size-biased", min_gap,
                                 1e-10, budget,
                                 {{"instances", found.size()},
                                  {"attempts", attempts},
                                  {"misclassified", misclassified}}));
    }

    {
        // one pass drives both the value monotonicity and the derivative sign
        int trials = cfg.trials_or(200);
        std::vector<double> grid;
        for (int i = 1; i <= 21; ++i) grid.push_back(i / 21.0);
        double min_drop = kInf, worst_cov = -kInf;
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "free-energy-nonincreasing",
                                trial));
            Pmf p = random_ulc_pmf(rng, 12);
            FreeEnergyPath fe = free_energy_path(p, grid, tol, 1e-4);
            double prev = fe.value_at_zero;
            for (const FreeEnergyPoint& pt : fe.points) {
                min_drop = std::min(min_drop, prev - pt.value);
                prev = pt.value;
                worst_cov = std::max(worst_cov, pt.deriv_cov);
            }
        }
        out.push_back(make_check(cfg, "free-energy-nonincreasing",
                                 "free-energy-decreasing", min_drop, 1e-10, tol,
                                 {{"trials", trials}, {"grid", 21}}));
        out.push_back(make_check(cfg, "free-energy-derivative-sign",
                                 "free-energy-derivative-nonpositive",
                                 -worst_cov, 1e-10, tol,
                                 {{"shared_with", "free-energy-nonincreasing"}}));
    }

    {
        // covariance and central-difference derivatives agree to second
        // order: halving the step divides the mismatch by about four
        std::vector<double> grid{0.2, 0.4, 0.6, 0.8};
        double worst = 0.0;
        int used = 0, skipped = 0;
        for (int trial = 0; trial < 20; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "free-energy-derivative-match",
                                trial));
            Pmf p = random_ulc_pmf(rng, 10);
            FreeEnergyPath coarse = free_energy_path(p, grid, tol, 2e-3);
            FreeEnergyPath fine = free_energy_path(p, grid, tol, 1e-3);
            for (std::size_t i = 0; i < grid.size(); ++i) {
                double e1 = std::abs(coarse.points[i].deriv_cov -
                                     coarse.points[i].deriv_fd);
                double e2 = std::abs(fine.points[i].deriv_cov -
                                     fine.points[i].deriv_fd);
                if (e2 < 1e-10) {
                    ++skipped;
                    continue;
                }
                worst = std::max(worst, std::abs(e1 / e2 - 4.0));
                ++used;
            }
        }
        out.push_back(make_check(cfg, "free-energy-derivative-match",
                                 "free-energy-derivative-order", -worst, 1.0,
                                 tol, {{"points_used", used}, {"points_skipped", skipped}}));
    }

    {
        double worst = 0.0;
        std::vector<double> grid;
        for (int i = 1; i <= 21; ++i) grid.push_back(i / 21.0);
        for (double lam : kLambdaGrid) {
            FreeEnergyPath fe =
                free_energy_path(poisson_pmf(lam, tol), grid, tol, 1e-4);
            for (const FreeEnergyPoint& pt : fe.points) {
                worst = std::max(worst, std::abs(pt.value - fe.value_at_zero));
                worst = std::max(worst, std::abs(pt.deriv_cov));
            }
        }
        out.push_back(make_check(cfg, "poisson-free-energy-flat",
                                 "poisson-interpolation-fixed-point", -worst,
                                 1e-8, tol));
    }

    {
        int trials = cfg.trials_or(100);
        double worst_res = 0.0, worst_ratio = 0.0;
        int used = 0, skipped = 0;
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "interpolation-pde-residual",
                                trial));
            Pmf p = mixed_random_pmf(rng, trial, 10);
            double alpha = rng.uniform(0.1, 0.9);
            double r1 = pde_residual(p, alpha, 1e-4, tol);
            worst_res = std::max(worst_res, r1);
            double r2 = pde_residual(p, alpha, 5e-5, tol);
            if (r2 < 1e-12) {
                ++skipped;
                continue;
            }
            worst_ratio = std::max(worst_ratio, std::abs(r1 / r2 - 4.0));
            ++used;
        }
        out.push_back(make_check(cfg, "interpolation-pde-residual",
                                 "interpolation-heat-equation", -worst_res,
                                 1e-6, tol, {{"trials", trials}}));
        out.push_back(make_check(cfg, "pde-residual-step-halving",
                                 "heat-equation-residual-order", -worst_ratio,
                                 0.5, tol,
                                 {{"ratios_used", used}, {"ratios_skipped", skipped}}));
    }

    {
        double worst = 0.0;
        for (int trial = 0; trial < 50; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "interpolation-endpoints",
                                trial));
            Pmf p = mixed_random_pmf(rng, trial, 10);
            InterpolationState one = interpolate(p, 1.0, tol);
            for (int x = 0; x <= p.support_end(); ++x)
                worst = std::max(worst, std::abs(one.law(x) - p(x)));
            InterpolationState zero = interpolate(p, 0.0, tol);
            Pmf ref = poisson_pmf(zero.lambda, tol);
            int overlap = std::min(zero.law.support_end(), ref.support_end());
            for (int x = 0; x <= overlap; ++x)
                worst = std::max(worst, std::abs(zero.law(x) - ref(x)));
        }
        out.push_back(make_check(cfg, "interpolation-endpoints",
                                 "interpolation-endpoints", -worst, 1e-12, tol));
    }

    {
        int trials = cfg.trials_or(100);
        double worst = 0.0;
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "interpolation-mean-preserved",
                                trial));
            Pmf p = mixed_random_pmf(rng, trial, 10);
            InterpolationState st = interpolate(p, rng.uniform(), tol);
            worst = std::max(worst, std::abs(moments(st.law).mean - st.lambda));
        }
        out.push_back(make_check(cfg, "interpolation-mean-preserved",
                                 "interpolation-mean-preservation", -worst,
                                 1e-10, tol, {{"trials", trials}}));
    }

    {
        int trials = cfg.trials_or(200);
        double worst = 0.0;
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "thinning-mean-linearity",
                                trial));
            Pmf p = trial % 3 == 2 ? random_full_support_family(rng, tol)
                                   : mixed_random_pmf(rng, trial, 12);
            double alpha = rng.uniform(0.0, 1.0);
            double dev =
                std::abs(moments(thin(p, alpha)).mean - alpha * moments(p).mean);
            worst = std::max(worst, dev);
        }
        out.push_back(make_check(cfg, "thinning-mean-linearity",
                                 "thinning-mean-linearity", -worst, 1e-10, tol,
                                 {{"trials", trials}}));
    }

    {
        int trials = cfg.trials_or(500);
        int violations = 0;
        nlohmann::json first = nullptr;
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "thinning-preserves-ulc",
                                trial));
            Pmf p = random_ulc_pmf(rng, 12);
            double alpha = rng.uniform(0.05, 0.95);
            if (!ulc_check(thin(p, alpha))) {
                ++violations;
                if (first.is_null())
                    first = {{"trial", trial}, {"alpha", alpha}, {"probs", p.probs()}};
            }
        }
        out.push_back(make_check(cfg, "thinning-preserves-ulc",
                                 "thinning-preserves-ulc",
                                 -static_cast<double>(violations), 0.5, 0.0,
                                 {{"trials", trials}, {"first_violation", first}}));
    }

    {
        int trials = cfg.trials_or(200);
        double worst = 0.0;
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "thinning-semigroup", trial));
            Pmf p = mixed_random_pmf(rng, trial, 12);
            double alpha = rng.uniform(0.1, 0.95);
            double beta = rng.uniform(0.1, 0.95);
            Pmf two = thin(thin(p, alpha), beta);
            Pmf one = thin(p, alpha * beta);
            int top = std::max(two.support_end(), one.support_end());
            for (int x = 0; x <= top; ++x)
                worst = std::max(worst, std::abs(two(x) - one(x)));
        }
        out.push_back(make_check(cfg, "thinning-semigroup", "thinning-semigroup",
                                 -worst, 1e-12, 0.0, {{"trials", trials}}));
    }

    return out;
}

std::vector<CheckResult> checks_monotonicity(const SuiteConfig& cfg) {
    std::vector<CheckResult> out;
    const double tol = cfg.trunc_tol;

    {
        int trials = cfg.trials_or(200);
        double min_slack = kInf;
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "iid-divergence-nonincreasing",
                                trial));
            Pmf p = positive_random_pmf(rng, 10);
            std::vector<ThinLawPoint> seq = thin_law_sequence(p, 6, tol);
            for (std::size_t i = 0; i + 1 < seq.size(); ++i)
                min_slack =
                    std::min(min_slack, seq[i].rel_ent - seq[i + 1].rel_ent);
        }
        out.push_back(make_check(cfg, "iid-divergence-nonincreasing",
                                 "iid-thinning-divergence-monotone", min_slack,
                                 1e-10, tol, {{"trials", trials}, {"n_max", 6}}));
    }

    {
        int trials = cfg.trials_or(200);
        double min_slack = kInf;
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "iid-entropy-nondecreasing",
                                trial));
            Pmf p = random_ulc_pmf(rng, 10);
            std::vector<ThinLawPoint> seq = thin_law_sequence(p, 6, tol);
            for (std::size_t i = 0; i + 1 < seq.size(); ++i)
                min_slack = std::min(min_slack, seq[i + 1].ent - seq[i].ent);
        }
        out.push_back(make_check(cfg, "iid-entropy-nondecreasing",
                                 "iid-thinning-entropy-monotone", min_slack,
                                 1e-10, tol, {{"trials", trials}, {"n_max", 6}}));
    }

    auto random_loo = [](Rng& rng, bool ulc_parts) {
        LeaveOneOutInstance inst;
        int parts = rng.uniform_int(2, 4);
        double sum = 0.0;
        std::vector<double> w(parts);
        for (int i = 0; i < parts; ++i) {
            inst.parts.push_back(ulc_parts ? random_ulc_pmf(rng, 12)
                                           : positive_random_pmf(rng, 12));
            w[i] = rng.uniform(0.2, 1.0);
            sum += w[i];
        }
        for (double& v : w) v /= sum;
        inst.alphas = std::move(w);
        return inst;
    };

    {
        int trials = cfg.trials_or(300);
        double min_gap = kInf;
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "leave-one-out-entropy", trial));
            LeaveOneOutInstance inst = random_loo(rng, true);
            min_gap =
                std::min(min_gap, leave_one_out_gap(inst, LooKind::Entropy, tol));
        }
        out.push_back(make_check(cfg, "leave-one-out-entropy",
                                 "leave-one-out-entropy", min_gap, 1e-10, tol,
                                 {{"trials", trials}}));
    }

    {
        int trials = cfg.trials_or(300);
        double min_gap = kInf;
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "leave-one-out-divergence",
                                trial));
            LeaveOneOutInstance inst = random_loo(rng, false);
            min_gap = std::min(
                min_gap, leave_one_out_gap(inst, LooKind::RelativeEntropy, tol));
        }
        out.push_back(make_check(cfg, "leave-one-out-divergence",
                                 "leave-one-out-divergence", min_gap, 1e-10, tol,
                                 {{"trials", trials}}));
    }

    {
        // every monotone quantity in this suite collapses to equality at the
        // Poisson fixed point
        double worst = 0.0, budget = 0.0;
        for (double lam : kLambdaGrid) {
            Pmf pi = poisson_pmf(lam, tol);
            MaxentGap mg = maxent_gap(pi, tol);
            worst = std::max(worst, std::abs(mg.gap));
            budget = std::max(budget, mg.budget);
            std::vector<ThinLawPoint> seq = thin_law_sequence(pi, 6, tol);
            for (const ThinLawPoint& pt : seq) {
                worst = std::max(worst, pt.rel_ent);
                worst = std::max(worst, std::abs(pt.ent - seq.front().ent));
            }
            LeaveOneOutInstance inst;
            inst.parts = {pi, pi, pi};
            inst.alphas = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
            worst = std::max(
                worst, std::abs(leave_one_out_gap(inst, LooKind::Entropy, tol)));
            worst = std::max(
                worst,
                std::abs(leave_one_out_gap(inst, LooKind::RelativeEntropy, tol)));
        }
        out.push_back(make_check(cfg, "poisson-equality-case",
                                 "poisson-fixed-point-equalities", -worst,
                                 1e-10, budget));
    }

    return out;
}

std::vector<CheckResult> checks_poincare(const SuiteConfig& cfg) {
    std::vector<CheckResult> out;
    const double tol = cfg.trunc_tol;

    {
        double worst = 0.0, budget = 0.0;
        for (double lam : kLambdaGrid) {
            PoincareEstimate est = poincare_constant(poisson_pmf(lam, tol));
            worst = std::max(worst, std::abs(est.constant - lam) / lam);
            budget = std::max(budget, est.tail_note);
        }
        out.push_back(make_check(cfg, "poisson-spectral-constant",
                                 "klaassen-poisson-variance", -worst, 1e-3,
                                 budget));
    }

    {
        double worst = 0.0;
        for (int i = 1; i <= 99; ++i) {
            double p = i / 100.0;
            PoincareEstimate est = poincare_constant(bernoulli_pmf(p));
            worst = std::max(worst, std::abs(est.constant - p));
        }
        out.push_back(make_check(cfg, "bernoulli-spectral-constant",
                                 "bernoulli-poincare-closed-form", -worst,
                                 1e-9));
    }

    {
        int trials = cfg.trials_or(500);
        double min_slack = kInf;
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "ulc-variance-sandwich", trial));
            Pmf p = random_ulc_pmf(rng, 12);
            Moments m = moments(p);
            double r = poincare_constant(p).constant;
            min_slack = std::min(min_slack,
                                 std::min(r - m.variance, m.mean - r));
        }
        out.push_back(make_check(cfg, "ulc-variance-sandwich",
                                 "daly-ulc-poincare-sandwich", min_slack, 1e-9,
                                 0.0, {{"trials", trials}}));
    }

    {
        int trials = cfg.trials_or(200);
        double min_slack = kInf, budget = 0.0;
        int held = 0;
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "clc-upper-bound", trial));
            Pmf p = tilted_poisson_pmf(rng.uniform(0.2, 5.0),
                                       rng.uniform(0.0, 0.5), tol);
            ClcPoincareBound b = clc_poincare_bound(p);
            min_slack = std::min(min_slack, b.bound - b.estimate.constant);
            budget = std::max(budget, b.estimate.tail_note);
            if (b.holds) ++held;
        }
        out.push_back(make_check(cfg, "clc-upper-bound", "c-log-concave-poincare",
                                 min_slack, 1e-6, budget,
                                 {{"trials", trials}, {"holds", held}}));
    }

    {
        // the reported maximizer must reproduce the reported constant, and
        // both are insensitive to shifting the test function
        double worst_attain = 0.0, worst_shift = 0.0;
        int degenerate = 0;
        for (int trial = 0; trial < 50; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "poincare-maximizer-rayleigh",
                                trial));
            Pmf p = mixed_random_pmf(rng, trial, 12);
            PoincareEstimate est = poincare_constant(p);
            if (est.maximizer.empty() || !std::isfinite(est.constant)) {
                ++degenerate;
                continue;
            }
            double rq = rayleigh_quotient(p, est.maximizer);
            double scale = std::max(est.constant, 1e-30);
            worst_attain =
                std::max(worst_attain, std::abs(rq - est.constant) / scale);
            for (double c : {1.0, -3.0, 10.0}) {
                std::vector<double> g = est.maximizer;
                for (double& v : g) v += c;
                worst_shift =
                    std::max(worst_shift, std::abs(rayleigh_quotient(p, g) - rq) / scale);
            }
        }
        out.push_back(make_check(cfg, "poincare-maximizer-rayleigh",
                                 "poincare-maximizer-attainment", -worst_attain,
                                 1e-9, 0.0, {{"degenerate", degenerate}}));
        out.push_back(make_check(cfg, "rayleigh-shift-invariance",
                                 "variance-shift-invariance", -worst_shift,
                                 1e-12, 0.0,
                                 {{"shared_with", "poincare-maximizer-rayleigh"}}));
    }

    {
        // for the Poisson the maximizer is linear, so its differences line
        // up with the constant direction under the P(x)-weighted inner
        // product on x < N
        double worst = 0.0;
        for (double lam : kLambdaGrid) {
            Pmf p = poisson_pmf(lam, tol);
            PoincareEstimate est = poincare_constant(p);
            std::size_t m = est.maximizer.size();
            if (m < 2) {
                worst = kInf;
                continue;
            }
            double num = 0.0, dd = 0.0, ww = 0.0;
            for (std::size_t x = 0; x + 1 < m; ++x) {
                double d = est.maximizer[x + 1] - est.maximizer[x];
                num += p(x) * d;
                dd += p(x) * d * d;
                ww += p(x);
            }
            double cosine = std::abs(num) / std::sqrt(dd * ww);
            worst = std::max(worst, std::acos(std::min(1.0, cosine)));
        }
        out.push_back(make_check(cfg, "charlier-maximizer-alignment",
                                 "charlier-eigenfunction-alignment", -worst,
                                 1e-3, tol));
    }

    {
        // pairwise orthogonality, normalized so the tolerance is scale-free;
        // the weight must run far past any mass-based truncation point
        // because degree-6 products amplify the tail polynomially
        double worst = 0.0;
        auto pair_dev = [&](auto&& weight_at, std::size_t len,
                            const std::vector<std::vector<double>>& polys) {
            std::size_t k = polys.size();
            std::vector<std::vector<double>> vals(k, std::vector<double>(len));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t x = 0; x < len; ++x)
                    vals[i][x] = evaluate_polynomial(polys[i], double(x));
            std::vector<double> norm(k);
            for (std::size_t i = 0; i < k; ++i) {
                double s = 0.0;
                for (std::size_t x = 0; x < len; ++x)
                    s += weight_at(x) * vals[i][x] * vals[i][x];
                norm[i] = std::sqrt(s);
            }
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = i + 1; j < k; ++j) {
                    double ip = 0.0;
                    for (std::size_t x = 0; x < len; ++x)
                        ip += weight_at(x) * vals[i][x] * vals[j][x];
                    worst = std::max(worst, std::abs(ip) / (norm[i] * norm[j]));
                }
        };
        for (double lam : kLambdaGrid) {
            std::vector<double> params{lam};
            std::size_t len = poisson_pmf(lam, 1e-14).size() + 80;
            pair_dev([&](std::size_t x) {
                         return std::exp(log_poisson_mass(lam, int(x)));
                     },
                     len,
                     orthogonal_polynomials(OrthoFamily::Charlier, params, 6));
        }
        const std::pair<int, double> kw[] = {{6, 0.3}, {10, 0.5}, {8, 0.7}};
        for (auto [n, p] : kw) {
            std::vector<double> params{double(n), p};
            Pmf w = binomial_pmf(n, p);
            pair_dev([&](std::size_t x) { return w(x); }, w.size(),
                     orthogonal_polynomials(OrthoFamily::Krawtchouk, params,
                                            std::min(6, n)));
        }
        out.push_back(make_check(cfg, "orthogonal-polynomials",
                                 "orthopoly-three-term-recurrence", -worst,
                                 1e-10, 1e-14));
    }

    {
        // deeper truncation must close in on the spectral constant
        const double levels[] = {1e-6, 1e-9, 1e-12};
        double min_slack = kInf;
        nlohmann::json devs = nlohmann::json::array();
        for (double lam : {1.0, 3.0}) {
            double prev = kInf;
            for (double level : levels) {
                double dev = std::abs(
                    poincare_constant(poisson_pmf(lam, level)).constant - lam);
                if (std::isfinite(prev)) min_slack = std::min(min_slack, prev - dev);
                devs.push_back({{"lambda", lam}, {"tol", level}, {"dev", dev}});
                prev = dev;
            }
        }
        out.push_back(make_check(cfg, "truncation-convergence",
                                 "poincare-truncation-convergence", min_slack,
                                 1e-9, 0.0, devs));
    }

    {
        // the identity is an admissible test function for the mixed operator,
        // so the estimate can never fall below the variance
        double min_slack = kInf;
        nlohmann::json table = nlohmann::json::array();
        const std::pair<int, double> cases[] = {{5, 0.4}, {10, 0.3}, {8, 0.5}};
        for (auto [n, p] : cases) {
            PoincareEstimate est = poincare_constant_mixed(binomial_pmf(n, p), n);
            double var = n * p * (1.0 - p);
            min_slack = std::min(min_slack, est.constant - var);
            table.push_back({{"n", n},
                             {"p", p},
                             {"constant", est.constant},
                             {"variance", var},
                             {"ratio", est.constant / var}});
        }
        out.push_back(make_check(cfg, "mixed-linear-witness",
                                 "mixed-poincare-linear-witness", min_slack,
                                 1e-9, 0.0, table));
        out.push_back(make_check(cfg, "binomial-mixed-constant",
                                 "binomial-mixed-poincare-constant", 0.0, 1.0,
                                 0.0, table, true));
    }

    return out;
}

std::vector<CheckResult> checks_log_sobolev(const SuiteConfig& cfg) {
    std::vector<CheckResult> out;
    const double tol = cfg.trunc_tol;

    {
        int trials = cfg.trials_or(200);
        double min_gap = kInf;
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "poisson-mlsi-random-f", trial));
            double lam = kLambdaGrid[trial % 4];
            std::size_t len = poisson_pmf(lam, tol).size() + 1;
            std::vector<double> f = random_positive_f(rng, len);
            min_gap = std::min(min_gap, bobkov_ledoux_gap(lam, f, tol));
        }
        out.push_back(make_check(cfg, "poisson-mlsi-random-f",
                                 "poisson-modified-log-sobolev", min_gap, 1e-10,
                                 tol, {{"trials", trials}}));
    }

    {
        // with f = P / Pi the quadratic form collapses to the scaled Fisher
        // information; computed here from the raw masses, not the score
        int trials = cfg.trials_or(100);
        double worst = 0.0;
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "poisson-mlsi-score-identity",
                                trial));
            Pmf p = mixed_random_pmf(rng, trial, 12);
            double lam = moments(p).mean;
            int top = p.support_end();
            double rhs = 0.0;
            for (int x = 0; x <= top; ++x) {
                double pix = std::exp(log_poisson_mass(lam, x));
                double fx = p(x) / pix;
                double fx1 = x + 1 <= top
                                 ? p(x + 1) / std::exp(log_poisson_mass(lam, x + 1))
                                 : 0.0;
                rhs += pix * (fx1 - fx) * (fx1 - fx) / fx;
            }
            rhs *= lam;
            worst = std::max(worst, std::abs(rhs - scaled_fisher(p)));
        }
        out.push_back(make_check(cfg, "poisson-mlsi-score-identity",
                                 "mlsi-score-identity", -worst, 1e-10, 0.0,
                                 {{"trials", trials}}));
    }

    {
        int trials = cfg.trials_or(200);
        double min_gap = kInf, budget = 0.0;
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "clc-mlsi", trial));
            Pmf p = tilted_poisson_pmf(rng.uniform(0.2, 5.0),
                                       rng.uniform(0.0, 0.5), tol);
            std::vector<double> f = random_positive_f(rng, p.size() + 1);
            MlsiGap mg = clc_mlsi_gap(p, f);
            min_gap = std::min(min_gap, mg.gap);
            budget = std::max(budget, p.tail_bound());
        }
        out.push_back(make_check(cfg, "clc-mlsi", "c-log-concave-mlsi", min_gap,
                                 1e-10, budget, {{"trials", trials}}));
    }

    {
        // the phi-form right side never exceeds the quadratic one on the
        // Poisson family (termwise, since log u <= u - 1)
        double min_slack = kInf;
        for (double lam : kLambdaGrid) {
            Pmf pi = poisson_pmf(lam, tol);
            int top = pi.support_end();
            for (int trial = 0; trial < 25; ++trial) {
                Rng rng(derive_seed(cfg.master_seed, "mlsi-tightening",
                                    trial * 4 + int(std::log2(lam * 4.0))));
                std::vector<double> f =
                    random_positive_f(rng, pi.size() + 1);
                double rhs_quad = 0.0, rhs_phi = 0.0;
                for (int x = 0; x <= top; ++x) {
                    double d = f[x + 1] - f[x];
                    rhs_quad += pi(x) * d * d / f[x];
                    rhs_phi += pi(x) * f[x + 1] * mlsi_phi(f[x + 1] / f[x]);
                }
                min_slack = std::min(min_slack, lam * (rhs_quad - rhs_phi));
            }
        }
        out.push_back(make_check(cfg, "mlsi-tightening",
                                 "mlsi-quadratic-tightening", min_slack, 1e-10,
                                 tol));
    }

    {
        // conjectured extension of the modified log-Sobolev inequality to
        // laws whose size-biased version sits below them stochastically,
        // with rate taken from the mean; evidence only
        int attempts = 0;
        std::vector<Pmf> found = st_not_ulc_instances(cfg, "st-hypothesis-mlsi",
                                                      40, 20000, &attempts);
        double min_gap = kInf;
        nlohmann::json negatives = nlohmann::json::array();
        for (std::size_t i = 0; i < found.size(); ++i) {
            const Pmf& p = found[i];
            Rng rng(derive_seed(cfg.master_seed, "st-hypothesis-mlsi-f", i));
            std::vector<double> f = random_positive_f(rng, p.size() + 1);
            double lam = moments(p).mean;
            int top = p.support_end();
            double quad = 0.0;
            for (int x = 0; x <= top; ++x) {
                double d = f[x + 1] - f[x];
                quad += p(x) * d * d / f[x];
            }
            double gap = lam * quad -
                         ent_functional(p, std::span<const double>(f.data(),
                                                                   p.size()));
            min_gap = std::min(min_gap, gap);
            if (gap < -1e-10 && negatives.size() < 3)
                negatives.push_back({{"probs", p.probs()}, {"f", f}, {"gap", gap}});
        }
        if (found.empty()) min_gap = 0.0;
        out.push_back(make_check(cfg, "st-hypothesis-mlsi",
                                 "size-biased-mlsi-conjecture", min_gap, 1e-10,
                                 0.0,
                                 {{"instances", found.size()},
                                  {"attempts", attempts},
                                  {"negatives", negatives}},
                                 true));
    }

    return out;
}

std::vector<CheckResult> checks_shepp_olkin(const SuiteConfig& cfg) {
    std::vector<CheckResult> out;

    {
        int trials = cfg.trials_or(500);
        int grid = cfg.grid_or(101);
        double worst = -kInf;
        nlohmann::json worst_case = nullptr;
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "shannon-concavity", trial));
            PathSpec path = random_path(rng, rng.uniform_int(1, cfg.max_m));
            std::vector<ProfilePoint> prof =
                entropy_profile(path, grid, EntropyKind::Shannon, 1.0);
            for (const ProfilePoint& pt : prof) {
                if (std::isnan(pt.second_difference)) continue;
                if (pt.second_difference > worst) {
                    worst = pt.second_difference;
                    worst_case = {{"trial", trial}, {"t", pt.t}};
                }
            }
        }
        out.push_back(make_check(cfg, "shannon-concavity",
                                 "shepp-olkin-concavity", -worst, 1e-8, 0.0,
                                 {{"trials", trials},
                                  {"grid", grid},
                                  {"worst", worst_case}}));
    }

    {
        int trials = cfg.trials_or(200);
        double min_slack = kInf;
        nlohmann::json worst_case = nullptr;
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "key-inequality-monotone",
                                trial));
            PathSpec path = random_monotone_path(rng, rng.uniform_int(1, cfg.max_m));
            for (int i = 1; i <= 9; ++i) {
                KeySlack ks = key_inequality_slack(path, i / 10.0);
                if (ks.min_slack < min_slack) {
                    min_slack = ks.min_slack;
                    worst_case = {{"trial", trial}, {"t", i / 10.0}, {"k", ks.argmin_k}};
                }
            }
        }
        out.push_back(make_check(cfg, "key-inequality-monotone",
                                 "shepp-olkin-key-inequality", min_slack, 1e-9,
                                 0.0, {{"trials", trials}, {"worst", worst_case}}));
    }

    {
        // the key inequality is only established for monotone paths; on
        // forced mixed-direction paths we record the evidence either way
        int trials = cfg.trials_or(100);
        double min_slack = kInf;
        int negatives = 0;
        nlohmann::json example = nullptr;
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "key-inequality-nonmonotone",
                                trial));
            int m = std::max(2, rng.uniform_int(2, std::max(2, cfg.max_m)));
            std::vector<double> p0(m), p1(m);
            for (int i = 0; i < m; ++i) {
                p0[i] = rng.uniform();
                p1[i] = rng.uniform();
            }
            p1[0] = p0[0] + rng.uniform() * (1.0 - p0[0]);
            p1[1] = p0[1] - rng.uniform() * p0[1];
            PathSpec path = so_path(p0, p1);
            for (int i = 1; i <= 9; ++i) {
                KeySlack ks = key_inequality_slack(path, i / 10.0);
                if (ks.min_slack < min_slack) {
                    min_slack = ks.min_slack;
                    if (ks.min_slack < -1e-9)
                        example = {{"p0", p0}, {"p1", p1}, {"t", i / 10.0},
                                   {"k", ks.argmin_k}, {"slack", ks.min_slack}};
                }
                if (ks.min_slack < -1e-9) ++negatives;
            }
        }
        out.push_back(make_check(cfg, "key-inequality-nonmonotone",
                                 "key-inequality-general-paths", min_slack,
                                 1e-9, 0.0,
                                 {{"trials", trials},
                                  {"negative_points", negatives},
                                  {"example", example}},
                                 true));
    }

    {
        int trials = cfg.trials_or(100);
        double worst = 0.0;
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "derivative-fd-residuals",
                                trial));
            PathSpec path = random_path(rng, rng.uniform_int(1, cfg.max_m));
            DerivativeDecomposition dd =
                path_pmf_derivatives(path, rng.uniform(0.1, 0.9), 1e-4);
            worst = std::max(worst, std::max(dd.fd_residual_1, dd.fd_residual_2));
        }
        out.push_back(make_check(cfg, "derivative-fd-residuals",
                                 "derivative-decomposition-residuals", -worst,
                                 1e-6, 0.0, {{"trials", trials}}));
    }

    {
        int trials = cfg.trials_or(50);
        double worst = 0.0;
        int used = 0, skipped = 0;
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "residual-step-halving", trial));
            int m = rng.uniform_int(5, std::max(5, cfg.max_m));
            PathSpec path = random_path(rng, m);
            double t = rng.uniform(0.2, 0.8);
            DerivativeDecomposition coarse = path_pmf_derivatives(path, t, 5e-3);
            DerivativeDecomposition fine = path_pmf_derivatives(path, t, 2.5e-3);
            const double pairs[][2] = {
                {coarse.fd_residual_1, fine.fd_residual_1},
                {coarse.fd_residual_2, fine.fd_residual_2}};
            for (auto& pr : pairs) {
                if (pr[1] < 1e-12) {
                    ++skipped;
                    continue;
                }
                worst = std::max(worst, std::abs(pr[0] / pr[1] - 4.0));
                ++used;
            }
        }
        out.push_back(make_check(cfg, "residual-step-halving",
                                 "derivative-residual-order", -worst, 1.0, 0.0,
                                 {{"ratios_used", used}, {"ratios_skipped", skipped}}));
    }

    {
        // total mass is conserved along the path, so both derivative forms
        // must sum to zero over the support
        int trials = cfg.trials_or(50);
        double worst = 0.0;
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "gradient-telescoping", trial));
            PathSpec path = random_path(rng, rng.uniform_int(1, cfg.max_m));
            double t = rng.uniform(0.1, 0.9);
            double step = 1e-2;
            DerivativeDecomposition dd = path_pmf_derivatives(path, t, step);
            auto gat = [&](int k) {
                return k < 0 || k >= static_cast<int>(dd.g.size()) ? 0.0
                                                                   : dd.g[k];
            };
            double sum_form = 0.0;
            int top = dd.pmf.support_end();
            for (int k = 0; k <= top; ++k) sum_form += gat(k - 1) - gat(k);
            std::vector<double> lo = path.at(t - step), hi = path.at(t + step);
            Pmf plo = bernoulli_sum_pmf(lo), phi = bernoulli_sum_pmf(hi);
            double sum_fd = 0.0;
            for (int k = 0; k <= top; ++k)
                sum_fd += (phi(k) - plo(k)) / (2.0 * step);
            worst = std::max(worst, std::max(std::abs(sum_form), std::abs(sum_fd)));
        }
        out.push_back(make_check(cfg, "gradient-telescoping",
                                 "mass-conservation-telescoping", -worst, 1e-12,
                                 0.0, {{"trials", trials}}));
    }

    {
        int trials = cfg.trials_or(100);
        double worst = 0.0;
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "coordinate-exchangeability",
                                trial));
            int m = rng.uniform_int(2, cfg.max_m >= 2 ? cfg.max_m : 2);
            PathSpec path = random_path(rng, m);
            std::vector<int> perm(m);
            for (int i = 0; i < m; ++i) perm[i] = i;
            for (int i = m - 1; i > 0; --i)
                std::swap(perm[i], perm[rng.uniform_int(0, i)]);
            std::vector<double> q0(m), q1(m);
            for (int i = 0; i < m; ++i) {
                q0[i] = path.p0[perm[i]];
                q1[i] = path.p1[perm[i]];
            }
            PathSpec shuffled = so_path(q0, q1);
            double t = rng.uniform(0.05, 0.95);
            DerivativeDecomposition a = path_pmf_derivatives(path, t);
            DerivativeDecomposition b = path_pmf_derivatives(shuffled, t);
            for (int k = 0; k <= a.pmf.support_end(); ++k)
                worst = std::max(worst, std::abs(a.pmf(k) - b.pmf(k)));
            for (std::size_t k = 0; k < a.g.size(); ++k)
                worst = std::max(worst, std::abs(a.g[k] - b.g[k]));
            for (std::size_t k = 0; k < a.h.size(); ++k)
                worst = std::max(worst, std::abs(a.h[k] - b.h[k]));
            std::vector<ProfilePoint> pa =
                entropy_profile(path, 21, EntropyKind::Shannon, 1.0);
            std::vector<ProfilePoint> pb =
                entropy_profile(shuffled, 21, EntropyKind::Shannon, 1.0);
            for (std::size_t i = 0; i < pa.size(); ++i)
                worst = std::max(worst, std::abs(pa[i].value - pb[i].value));
        }
        out.push_back(make_check(cfg, "coordinate-exchangeability",
                                 "exchangeability", -worst, 1e-12, 0.0,
                                 {{"trials", trials}}));
    }

    {
        // single-coordinate paths admit a closed-form curvature; the grid
        // stays away from the simplex edges so the fd error is benign
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "two-point-entropy-curvature",
                                trial));
            double a = trial == 0 ? 0.3 : rng.uniform(0.25, 0.45);
            double b = trial == 0 ? 0.7 : rng.uniform(0.55, 0.75);
            std::vector<double> p0{a}, p1{b};
            PathSpec path = so_path(p0, p1);
            std::vector<ProfilePoint> prof =
                entropy_profile(path, 41, EntropyKind::Shannon, 1.0);
            double slope = b - a;
            for (const ProfilePoint& pt : prof) {
                if (std::isnan(pt.second_difference)) continue;
                double p = a + pt.t * slope;
                double exact = -slope * slope / (p * (1.0 - p));
                worst = std::max(worst, std::abs(pt.second_difference - exact));
            }
        }
        out.push_back(make_check(cfg, "two-point-entropy-curvature",
                                 "two-point-entropy-closed-form", -worst, 1e-3));
    }

    {
        // near q = 1 both generalized entropies differ from the Shannon
        // value by an explicit first-order term; the residual is second
        // order and sits far below the tolerance
        const double eps = 1e-4;
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            Rng rng(derive_seed(cfg.master_seed, "q-entropy-shannon-limit",
                                trial));
            int m = rng.uniform_int(1, 4);
            std::vector<double> p0(m), p1(m);
            for (int i = 0; i < m; ++i) {
                p0[i] = rng.uniform(0.15, 0.85);
                p1[i] = rng.uniform(0.15, 0.85);
            }
            PathSpec path = so_path(p0, p1);
            for (int i = 1; i < 20; ++i) {
                double t = i / 20.0;
                Pmf w = bernoulli_sum_pmf(path.at(t));
                const std::vector<double>& probs = w.probs();
                double h = entropy_functional(probs, EntropyKind::Shannon, 1.0);
                double m2 = 0.0;
                for (double v : probs)
                    if (v > 0.0) m2 += v * std::log(v) * std::log(v);
                double tsallis =
                    entropy_functional(probs, EntropyKind::Tsallis, 1.0 + eps);
                worst = std::max(worst,
                                 std::abs(tsallis - (h - eps * m2 / 2.0)));
                double renyi =
                    entropy_functional(probs, EntropyKind::Renyi, 1.0 - eps);
                double varent = m2 - h * h;
                worst = std::max(worst,
                                 std::abs(renyi - (h + eps * varent / 2.0)));
            }
        }
        out.push_back(make_check(cfg, "q-entropy-shannon-limit",
                                 "q-entropy-shannon-limit", -worst, 1e-6));
    }

    auto scan_check = [&](const std::string& name, std::string anchor,
                          EntropyKind kind, double q) {
        int trials = cfg.trials_or(200);
        int m = std::min(3, cfg.max_m);
        WitnessScan scan = convexity_witness_scan(
            kind, q, m, trials, derive_seed(cfg.master_seed, name, 0));
        nlohmann::json w = {{"max_curvature", json_real(scan.max_curvature)},
                            {"trials", scan.trials}};
        if (scan.witness) {
            w["witness"] = {{"p0", scan.witness->path.p0},
                            {"p1", scan.witness->path.p1},
                            {"t", scan.witness->t},
                            {"curvature", scan.witness->curvature},
                            {"refined_curvature",
                             scan.witness->refined_curvature}};
        }
        double slack = scan.witness ? -1.0 : 0.0;
        out.push_back(make_check(cfg, name, std::move(anchor), slack, 0.5, 0.0,
                                 std::move(w), true));
    };
    scan_check("renyi-scan-subcritical", "renyi-convexity-threshold",
               EntropyKind::Renyi, 1.5);
    scan_check("tsallis-scan-subcritical", "tsallis-convexity-threshold",
               EntropyKind::Tsallis, 2.0);
    scan_check("tsallis-scan-supercritical", "tsallis-supercritical-witness",
               EntropyKind::Tsallis, 4.0);

    auto critical_check = [&](const std::string& name, std::string anchor,
                              EntropyKind kind, double expected) {
        int trials = cfg.trials_or(200);
        int m = std::max(2, std::min(3, cfg.max_m));
        CriticalQResult res = critical_q_search(
            kind, m, trials, derive_seed(cfg.master_seed, name, 0));
        nlohmann::json w = {{"q_hat", res.q_hat},
                            {"bracket_lo", res.bracket_lo},
                            {"bracket_hi", res.bracket_hi},
                            {"expected", expected}};
        if (res.witness) {
            w["witness"] = {{"p0", res.witness->path.p0},
                            {"p1", res.witness->path.p1},
                            {"q", res.witness->q},
                            {"t", res.witness->t},
                            {"curvature", res.witness->curvature},
                            {"refined_curvature",
                             res.witness->refined_curvature}};
        }
        out.push_back(make_check(cfg, name, std::move(anchor),
                                 -(std::abs(res.q_hat - expected)), 1.0, 0.0,
                                 std::move(w), true));
    };
    critical_check("critical-q-renyi", "renyi-critical-q", EntropyKind::Renyi,
                   2.0);
    critical_check("critical-q-tsallis", "tsallis-critical-q",
                   EntropyKind::Tsallis, 3.65986);

    {
        int trials = cfg.trials_or(500);
        MonotoneCheckResult res = monotone_entropy_check(
            std::min(3, cfg.max_m), trials,
            derive_seed(cfg.master_seed, "monotone-entropy-probe", 0));
        nlohmann::json archived = nlohmann::json::array();
        for (std::size_t i = 0; i < res.violations.size() && i < 5; ++i) {
            const MonotoneViolation& v = res.violations[i];
            archived.push_back({{"p", v.p},
                                {"direction", v.direction},
                                {"step", v.step},
                                {"h_before", v.h_before},
                                {"h_after", v.h_after}});
        }
        out.push_back(make_check(cfg, "monotone-entropy-probe",
                                 "entropy-monotone-half-conjecture",
                                 -static_cast<double>(res.violations.size()),
                                 0.5, 0.0,
                                 {{"trials", res.trials}, {"archived", archived}},
                                 true));
    }

    return out;
}

std::vector<CheckResult> checks_for(const std::string& name,
                                    const SuiteConfig& cfg) {
    if (name == "poisson-approx") return checks_poisson_approx(cfg);
    if (name == "maxent") return checks_maxent(cfg);
    if (name == "monotonicity") return checks_monotonicity(cfg);
    if (name == "poincare") return checks_poincare(cfg);
    if (name == "log-sobolev") return checks_log_sobolev(cfg);
    if (name == "shepp-olkin") return checks_shepp_olkin(cfg);
    raise(ErrorCode::BadParameter, "unknown suite: " + name);
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "poisson-approx", "maxent",      "monotonicity",
        "poincare",       "log-sobolev", "shepp-olkin"};
    return names;
}

bool is_suite_name(const std::string& name) {
    if (name == "all") return true;
    const std::vector<std::string>& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

InequalityReport run_suite(const std::string& name, const SuiteConfig& cfg) {
    cfg.validate();
    if (name == "all") {
        std::vector<CheckResult> all;
        for (const std::string& suite : suite_names()) {
            // seeds depend only on check names, so a combined run reproduces
            // the individual suites exactly
            std::vector<CheckResult> part = checks_for(suite, cfg);
            for (CheckResult& c : part) {
                c.name = suite + "/" + c.name;
                all.push_back(std::move(c));
            }
        }
        return finalize_report("all", std::move(all), cfg.master_seed);
    }
    return finalize_report(name, checks_for(name, cfg), cfg.master_seed);
}

}  // namespace dit
