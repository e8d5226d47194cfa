// Acceptance gate: one line per criterion, exit 1 if any hard criterion
// fails.  Criterion 10 is exploratory evidence and never gates.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "core/logsobolev.hpp"
#include "core/monotonicity.hpp"
#include "core/pmf.hpp"
#include "core/poincare.hpp"
#include "core/random_pmf.hpp"
#include "core/rng.hpp"
#include "core/score.hpp"
#include "core/shepp_olkin.hpp"
#include "core/thinning.hpp"

using namespace dit;

namespace {

constexpr std::uint64_t kMasterSeed = 2026;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

struct Criterion {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

Criterion criterion_1() {
    // poincare constant of the poisson equals lambda within 0.1%
    Criterion c;
    double worst = 0.0;
    for (double lambda : {0.5, 1.0, 2.0, 5.0}) {
        auto t0 = std::chrono::steady_clock::now();
        Pmf p = poisson_pmf(lambda, 1e-12);
        if (p.support_end() > 60) c.fail("support exceeds 60 at lambda " + fmt(lambda));
        double est = poincare_constant(p).constant;
        double rel = std::abs(est - lambda) / lambda;
        worst = std::max(worst, rel);
        if (rel > 1e-3) c.fail("relative error " + fmt(rel) + " at lambda " + fmt(lambda));
        double dt = seconds_since(t0);
        if (dt > 5.0) c.fail("took " + fmt(dt) + "s at lambda " + fmt(lambda));
    }
    if (c.pass) c.detail = "worst relative error " + fmt(worst);
    return c;
}

Criterion criterion_2() {
    // closed forms on the two-point law
    Criterion c;
    double worst_k = 0.0, worst_r = 0.0;
    for (int i = 1; i <= 99; ++i) {
        double p = i / 100.0;
        double dk = std::abs(scaled_fisher(bernoulli_pmf(p)) - p * p / (1.0 - p));
        double dr = std::abs(poincare_constant(bernoulli_pmf(p)).constant - p);
        worst_k = std::max(worst_k, dk);
        worst_r = std::max(worst_r, dr);
    }
    if (worst_k > 1e-12) c.fail("fisher deviation " + fmt(worst_k));
    if (worst_r > 1e-9) c.fail("poincare deviation " + fmt(worst_r));
    if (c.pass)
        c.detail = "fisher dev " + fmt(worst_k) + ", poincare dev " + fmt(worst_r);
    return c;
}

Criterion criterion_3() {
    // divergence chain for binomial(n, 1/n) against the unit poisson
    Criterion c;
    auto t0 = std::chrono::steady_clock::now();
    double lambda = 1.0;
    for (int n = 2; n <= 50; ++n) {
        PoissonApproxBounds b = poisson_approx_bounds(binomial_pmf(n, lambda / n));
        if (b.rel_ent > lambda * lambda / (n * (n - lambda)) + 1e-12)
            c.fail("divergence bound broken at n " + std::to_string(n));
        if (b.rel_ent > b.fisher + 1e-10)
            c.fail("fisher domination broken at n " + std::to_string(n));
        if (b.tv > b.pinsker + 1e-10)
            c.fail("pinsker broken at n " + std::to_string(n));
    }
    double dt = seconds_since(t0);
    if (dt > 10.0) c.fail("took " + fmt(dt) + "s");
    if (c.pass) c.detail = "n in {2..50} in " + fmt(dt) + "s";
    return c;
}

Criterion criterion_4() {
    // subadditivity of scaled fisher information, and the johnstone equality
    Criterion c;
    Rng rng(derive_seed(kMasterSeed, "acceptance-khj", 0));
    double worst = 1e300;
    for (int t = 0; t < 500; ++t) {
        std::vector<Pmf> parts;
        int k = rng.uniform_int(2, 4);
        for (int i = 0; i < k; ++i)
            parts.push_back(t % 2 == 0 ? random_ulc_pmf(rng, 12)
                                       : random_pmf(rng, 12));
        double gap = fisher_subadditivity_gap(parts, FisherKind::Scaled);
        worst = std::min(worst, gap);
        if (gap < -1e-10) c.fail("gap " + fmt(gap) + " at trial " + std::to_string(t));
    }
    for (double lambda : {0.5, 1.0, 2.0, 5.0}) {
        std::vector<Pmf> halves = {poisson_pmf(lambda / 2, 1e-13),
                                   poisson_pmf(lambda / 2, 1e-13)};
        double dev =
            std::abs(fisher_subadditivity_gap(halves, FisherKind::Johnstone));
        if (dev > 1e-8)
            c.fail("johnstone equality off by " + fmt(dev) + " at lambda " +
                   fmt(lambda));
    }
    if (c.pass) c.detail = "min gap " + fmt(worst) + " over 500 tuples";
    return c;
}

Criterion criterion_5() {
    // poisson maximum entropy and the decreasing free energy
    Criterion c;
    Rng rng(derive_seed(kMasterSeed, "acceptance-maxent", 0));
    double worst_gap = 1e300;
    for (int t = 0; t < 1000; ++t) {
        MaxentGap g = maxent_gap(random_ulc_pmf(rng, 14));
        worst_gap = std::min(worst_gap, g.gap);
        if (g.gap < -1e-10) c.fail("entropy gap " + fmt(g.gap));
    }
    std::vector<double> grid;
    for (int i = 1; i <= 21; ++i) grid.push_back(i / 21.0);
    Rng rng2(derive_seed(kMasterSeed, "acceptance-free-energy", 0));
    for (int t = 0; t < 200; ++t) {
        Pmf p = random_ulc_pmf(rng2, 10);
        FreeEnergyPath fe = free_energy_path(p, grid);
        double prev = fe.value_at_zero;
        for (const FreeEnergyPoint& pt : fe.points) {
            if (pt.value > prev + 1e-10)
                c.fail("free energy rose by " + fmt(pt.value - prev));
            prev = pt.value;
            if (pt.deriv_cov > 1e-10)
                c.fail("derivative " + fmt(pt.deriv_cov) + " above zero");
        }
    }
    if (c.pass) c.detail = "min entropy gap " + fmt(worst_gap) + " over 1000 laws";
    return c;
}

Criterion criterion_6() {
    // interpolation heat equation residual and its second-order decay
    Criterion c;
    Rng rng(derive_seed(kMasterSeed, "acceptance-pde", 0));
    double worst_res = 0.0, worst_ratio_dev = 0.0;
    for (int t = 0; t < 100; ++t) {
        Pmf p = t % 2 == 0 ? random_pmf(rng, 9) : random_ulc_pmf(rng, 9);
        double alpha = rng.uniform(0.1, 0.9);
        double r1 = pde_residual(p, alpha, 1e-4);
        worst_res = std::max(worst_res, r1);
        if (r1 > 1e-6) c.fail("residual " + fmt(r1) + " at trial " + std::to_string(t));
        double r2 = pde_residual(p, alpha, 5e-5);
        double ratio = r1 / r2;
        worst_ratio_dev = std::max(worst_ratio_dev, std::abs(ratio - 4.0));
        if (ratio < 3.5 || ratio > 4.5)
            c.fail("halving ratio " + fmt(ratio) + " at trial " + std::to_string(t));
    }
    if (c.pass)
        c.detail = "max residual " + fmt(worst_res) + ", ratio within " +
                   fmt(worst_ratio_dev) + " of 4";
    return c;
}

Criterion criterion_7() {
    // c-log-concave spectral bound, sharper mlsi, and the tightening
    Criterion c;
    Rng rng(derive_seed(kMasterSeed, "acceptance-clc", 0));
    for (int t = 0; t < 200; ++t) {
        double lambda = rng.uniform(0.3, 3.0);
        double beta = rng.uniform(0.0, 0.5);
        Pmf p = tilted_poisson_pmf(lambda, beta, 1e-12);
        ClcPoincareBound b = clc_poincare_bound(p);
        if (b.estimate.constant > b.bound + 1e-6)
            c.fail("spectral bound broken: " + fmt(b.estimate.constant) + " > 1/c " +
                   fmt(b.bound));
        auto f = random_positive_f(rng, p.size() + 1);
        MlsiGap g = clc_mlsi_gap(p, f);
        if (g.gap < -1e-10) c.fail("mlsi gap " + fmt(g.gap));
    }
    Rng rng2(derive_seed(kMasterSeed, "acceptance-tightening", 0));
    for (int t = 0; t < 100; ++t) {
        double lambda = rng2.uniform(0.3, 4.0);
        Pmf pois = poisson_pmf(lambda, 1e-12);
        auto f = random_positive_f(rng2, pois.size() + 1);
        double rhs_quad = bobkov_ledoux_gap(lambda, f) + ent_functional(pois, f);
        double rhs_phi = clc_mlsi_gap(pois, f).rhs;
        if (rhs_phi > rhs_quad + 1e-10)
            c.fail("phi right side above quadratic by " + fmt(rhs_phi - rhs_quad));
    }
    if (c.pass) c.detail = "200 tilted laws, 100 test functions";
    return c;
}

Criterion criterion_8() {
    // monotonicity of the thinned convolution flow and leave-one-out bounds
    Criterion c;
    Rng rng(derive_seed(kMasterSeed, "acceptance-monotone", 0));
    for (int t = 0; t < 200; ++t) {
        auto seq = thin_law_sequence(random_pmf(rng, 9), 6);
        for (std::size_t i = 0; i + 1 < seq.size(); ++i)
            if (seq[i + 1].rel_ent > seq[i].rel_ent + 1e-10)
                c.fail("divergence rose at n " + std::to_string(seq[i + 1].n));
    }
    for (int t = 0; t < 200; ++t) {
        auto seq = thin_law_sequence(random_ulc_pmf(rng, 9), 6);
        for (std::size_t i = 0; i + 1 < seq.size(); ++i)
            if (seq[i + 1].ent < seq[i].ent - 1e-10)
                c.fail("entropy fell at n " + std::to_string(seq[i + 1].n));
    }
    Rng rng2(derive_seed(kMasterSeed, "acceptance-loo", 0));
    for (int kind = 0; kind < 2; ++kind) {
        for (int t = 0; t < 300; ++t) {
            LeaveOneOutInstance inst;
            int parts = rng2.uniform_int(2, 4);
            double total = 0.0;
            for (int i = 0; i < parts; ++i) {
                inst.alphas.push_back(rng2.uniform(0.2, 1.0));
                total += inst.alphas.back();
            }
            for (double& a : inst.alphas) a /= total;
            bool entropy_kind = kind == 0;
            for (int i = 0; i < parts; ++i)
                inst.parts.push_back(entropy_kind ? random_ulc_pmf(rng2, 7)
                                                  : random_pmf(rng2, 7));
            double gap = leave_one_out_gap(
                inst, entropy_kind ? LooKind::Entropy : LooKind::RelativeEntropy);
            if (gap < -1e-10)
                c.fail(std::string(entropy_kind ? "entropy" : "divergence") +
                       " leave-one-out gap " + fmt(gap));
        }
    }
    if (c.pass) c.detail = "200+200 sequences, 300 instances per kind";
    return c;
}

Criterion criterion_9() {
    // entropy concavity, the key inequality, and derivative residuals
    Criterion c;
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(derive_seed(kMasterSeed, "acceptance-so", 0));
    double worst_sd = -1e300;
    for (int t = 0; t < 500; ++t) {
        int m = rng.uniform_int(1, 8);
        std::vector<double> p0(m), p1(m);
        for (int i = 0; i < m; ++i) {
            p0[i] = rng.uniform(0.0, 1.0);
            p1[i] = rng.uniform(0.0, 1.0);
        }
        auto profile = entropy_profile(so_path(p0, p1), 101, EntropyKind::Shannon, 1.0);
        for (std::size_t i = 1; i + 1 < profile.size(); ++i)
            worst_sd = std::max(worst_sd, profile[i].second_difference);
    }
    if (worst_sd > 1e-8) c.fail("interior second difference " + fmt(worst_sd));

    Rng rng2(derive_seed(kMasterSeed, "acceptance-so-key", 0));
    double worst_slack = 1e300;
    for (int t = 0; t < 200; ++t) {
        int m = rng2.uniform_int(1, 8);
        std::vector<double> p0(m), p1(m);
        for (int i = 0; i < m; ++i) {
            double a = rng2.uniform(0.0, 1.0);
            double b = rng2.uniform(0.0, 1.0);
            p0[i] = std::min(a, b);
            p1[i] = std::max(a, b);
        }
        PathSpec path = so_path(p0, p1);
        double tt = rng2.uniform(0.1, 0.9);
        KeySlack ks = key_inequality_slack(path, tt);
        worst_slack = std::min(worst_slack, ks.min_slack);
        if (ks.min_slack < -1e-9) c.fail("key slack " + fmt(ks.min_slack));
        DerivativeDecomposition d = path_pmf_derivatives(path, tt, 1e-4);
        if (d.fd_residual_1 > 1e-6 || d.fd_residual_2 > 1e-6)
            c.fail("derivative residuals " + fmt(d.fd_residual_1) + ", " +
                   fmt(d.fd_residual_2));
    }
    double dt = seconds_since(t0);
    if (dt > 120.0) c.fail("took " + fmt(dt) + "s");
    if (c.pass)
        c.detail = "max curvature " + fmt(worst_sd) + ", min key slack " +
                   fmt(worst_slack) + ", " + fmt(dt) + "s";
    return c;
}

std::string criterion_10() {
    // exploratory conjecture scans: evidence only, never gates
    auto witness_detail = [](const WitnessScan& scan) {
        if (!scan.witness)
            return std::string("none (max curvature ") +
                   fmt(scan.max_curvature) + ")";
        const ConvexityWitness& w = *scan.witness;
        std::string s = "at t " + fmt(w.t) + " curvature " + fmt(w.curvature) +
                        " refined " + fmt(w.refined_curvature) + " p0 (";
        for (std::size_t i = 0; i < w.path.p0.size(); ++i)
            s += (i ? "," : "") + fmt(w.path.p0[i]);
        s += ") p1 (";
        for (std::size_t i = 0; i < w.path.p1.size(); ++i)
            s += (i ? "," : "") + fmt(w.path.p1[i]);
        s += ")";
        return s;
    };
    std::string detail;
    WitnessScan renyi = convexity_witness_scan(EntropyKind::Renyi, 1.5, 3, 200,
                                               kMasterSeed);
    detail += "renyi q=1.5 witness " + witness_detail(renyi);
    WitnessScan tsallis2 = convexity_witness_scan(EntropyKind::Tsallis, 2.0, 3, 200,
                                                  kMasterSeed);
    detail += "; tsallis q=2 witness " + witness_detail(tsallis2);
    WitnessScan tsallis4 = convexity_witness_scan(EntropyKind::Tsallis, 4.0, 3, 200,
                                                  kMasterSeed);
    detail += "; tsallis q=4 witness " + witness_detail(tsallis4);
    MonotoneCheckResult mono = monotone_entropy_check(3, 500, kMasterSeed);
    if (mono.violations.empty()) {
        detail += "; monotone entropy 0 violations in 500 trials";
    } else {
        detail += "; monotone entropy " + std::to_string(mono.violations.size()) +
                  " violations, first p (";
        for (std::size_t i = 0; i < mono.violations[0].p.size(); ++i)
            detail += (i ? "," : "") + fmt(mono.violations[0].p[i]);
        detail += ")";
    }
    return detail;
}

}  // namespace

int main() {
    struct Row {
        int id;
        const char* label;
        Criterion result;
    };
    std::vector<Row> rows = {
        {1, "poisson spectral constant", criterion_1()},
        {2, "two-point closed forms", criterion_2()},
        {3, "binomial divergence chain", criterion_3()},
        {4, "fisher subadditivity", criterion_4()},
        {5, "maximum entropy and free energy", criterion_5()},
        {6, "interpolation heat equation", criterion_6()},
        {7, "c-log-concave concentration", criterion_7()},
        {8, "thinning monotonicity", criterion_8()},
        {9, "bernoulli-sum entropy concavity", criterion_9()},
    };

    bool all_pass = true;
    for (const Row& row : rows) {
        all_pass = all_pass && row.result.pass;
        std::printf("criterion %d (%s): %s (%s)\n", row.id, row.label,
                    row.result.pass ? "PASS" : "FAIL", row.result.detail.c_str());
    }
    std::printf("criterion 10 (conjecture scans): EXPLORATORY (%s)\n",
                criterion_10().c_str());
    std::printf("acceptance: %s\n", all_pass ? "PASS" : "FAIL");
    return all_pass ? 0 : 1;
}
