#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "core/pmf.hpp"
#include "core/rng.hpp"
#include "core/shepp_olkin.hpp"

using namespace dit;

namespace {

PathSpec random_path(Rng& rng, int m) {
    std::vector<double> p0(m), p1(m);
    for (int i = 0; i < m; ++i) {
        p0[i] = rng.uniform(0.0, 1.0);
        p1[i] = rng.uniform(0.0, 1.0);
    }
    return so_path(p0, p1);
}

PathSpec random_monotone_path(Rng& rng, int m) {
    std::vector<double> p0(m), p1(m);
    for (int i = 0; i < m; ++i) {
        double a = rng.uniform(0.0, 1.0);
        double b = rng.uniform(0.0, 1.0);
        p0[i] = std::min(a, b);
        p1[i] = std::max(a, b);
    }
    return so_path(p0, p1);
}

}  // namespace

TEST_CASE("path construction and evaluation") {
    std::vector<double> p0 = {0.1, 0.3};
    std::vector<double> p1 = {0.5, 0.9};
    PathSpec path = so_path(p0, p1);
    CHECK(path.monotone);
    CHECK(path.dim() == 2);
    auto mid = path.at(0.5);
    CHECK(mid[0] == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(mid[1] == doctest::Approx(0.6).epsilon(1e-15));
    auto s = path.slopes();
    CHECK(s[0] == doctest::Approx(0.4).epsilon(1e-15));

    std::vector<double> down = {0.1, 0.9};
    PathSpec mixed = so_path(down, p1);  // slopes +0.4 and 0
    CHECK(mixed.monotone);
    std::vector<double> p2 = {0.5, 0.1};
    CHECK_FALSE(so_path(p0, p2).monotone);

    std::vector<double> shorter = {0.5};
    CHECK_THROWS_AS(so_path(p0, shorter), Error);
    std::vector<double> outside = {1.2, 0.5};
    CHECK_THROWS_AS(so_path(outside, p1), Error);
}

TEST_CASE("derivative decomposition shapes and residuals") {
    Rng rng(derive_seed(71, "so-deriv-unit", 0));
    for (int t = 0; t < 60; ++t) {
        int m = rng.uniform_int(1, 6);
        PathSpec path = random_path(rng, m);
        double tt = rng.uniform(0.1, 0.9);
        DerivativeDecomposition d = path_pmf_derivatives(path, tt, 1e-4);
        CHECK(d.pmf.size() <= std::size_t(m) + 1);
        CHECK(d.g.size() == std::size_t(m));
        if (m >= 2) CHECK(d.h.size() == std::size_t(m) - 1);
        CHECK(d.fd_residual_1 <= 1e-6);
        CHECK(d.fd_residual_2 <= 1e-6);

        // mass conservation: the gradient form telescopes to zero
        double total = 0.0;
        for (int k = 0; k <= m; ++k) {
            double gk = k >= 1 && k <= m ? d.g[std::size_t(k) - 1] : 0.0;
            double gk_cur = k < m ? d.g[std::size_t(k)] : 0.0;
            total += gk - gk_cur;
        }
        CHECK(std::abs(total) < 1e-12);
    }
}

TEST_CASE("residuals shrink at second order") {
    Rng rng(derive_seed(73, "so-order-unit", 0));
    for (int t = 0; t < 25; ++t) {
        PathSpec path = random_path(rng, 6);
        double tt = rng.uniform(0.2, 0.8);
        DerivativeDecomposition big = path_pmf_derivatives(path, tt, 5e-3);
        DerivativeDecomposition small = path_pmf_derivatives(path, tt, 2.5e-3);
        if (small.fd_residual_1 > 1e-12)
            CHECK(big.fd_residual_1 / small.fd_residual_1 ==
                  doctest::Approx(4.0).epsilon(0.2));
    }
}

TEST_CASE("key inequality along monotone paths") {
    Rng rng(derive_seed(75, "so-key-unit", 0));
    for (int t = 0; t < 80; ++t) {
        PathSpec path = random_monotone_path(rng, rng.uniform_int(1, 6));
        for (double tt : {0.2, 0.5, 0.8}) {
            KeySlack ks = key_inequality_slack(path, tt);
            CHECK(ks.min_slack >= -1e-9);
            CHECK(ks.argmin_k >= 0);
        }
    }
    PathSpec path = random_monotone_path(rng, 3);
    CHECK_THROWS_AS(key_inequality_slack(path, 0.0), Error);
    CHECK_THROWS_AS(key_inequality_slack(path, 1.0), Error);
}

TEST_CASE("entropy functional closed forms") {
    std::vector<double> uniform = {0.5, 0.5};
    double log2 = std::log(2.0);
    CHECK(entropy_functional(uniform, EntropyKind::Shannon, 1.0) ==
          doctest::Approx(log2).epsilon(1e-14));
    CHECK(entropy_functional(uniform, EntropyKind::Renyi, 3.0) ==
          doctest::Approx(log2).epsilon(1e-13));
    CHECK(entropy_functional(uniform, EntropyKind::Tsallis, 2.0) ==
          doctest::Approx(0.5).epsilon(1e-13));

    std::vector<double> w = {0.3, 0.7};
    CHECK(entropy_functional(w, EntropyKind::Renyi, 2.0) ==
          doctest::Approx(-std::log(0.58)).epsilon(1e-13));
    CHECK(entropy_functional(w, EntropyKind::Tsallis, 2.0) ==
          doctest::Approx(0.42).epsilon(1e-13));
    // q = 1 collapses everything to Shannon
    double h = entropy_functional(w, EntropyKind::Shannon, 1.0);
    CHECK(entropy_functional(w, EntropyKind::Renyi, 1.0) ==
          doctest::Approx(h).epsilon(1e-14));
    CHECK(entropy_functional(w, EntropyKind::Tsallis, 1.0) ==
          doctest::Approx(h).epsilon(1e-14));

    CHECK_THROWS_AS(entropy_functional(w, EntropyKind::Renyi, 0.0), Error);
    CHECK_THROWS_AS(entropy_functional(w, EntropyKind::Renyi, -1.0), Error);
}

TEST_CASE("q to one limits carry the expected first order correction") {
    // Tsallis_{1+e} = H - e/2 E[(log w)^2] + O(e^2),
    // Renyi_{1-e}   = H + e/2 (E[(log w)^2] - H^2) + O(e^2)
    std::vector<double> w = {0.12, 0.25, 0.33, 0.3};
    double h = entropy_functional(w, EntropyKind::Shannon, 1.0);
    double m2 = 0.0;
    for (double v : w) m2 += v * std::log(v) * std::log(v);
    double eps = 1e-4;
    double tsallis = entropy_functional(w, EntropyKind::Tsallis, 1.0 + eps);
    CHECK(std::abs(tsallis - (h - eps * m2 / 2.0)) < 1e-6);
    double renyi = entropy_functional(w, EntropyKind::Renyi, 1.0 - eps);
    CHECK(std::abs(renyi - (h + eps * (m2 - h * h) / 2.0)) < 1e-6);
}

TEST_CASE("shannon entropy is concave along affine paths") {
    Rng rng(derive_seed(77, "so-concavity-unit", 0));
    for (int t = 0; t < 120; ++t) {
        PathSpec path = random_path(rng, rng.uniform_int(1, 8));
        auto profile = entropy_profile(path, 101, EntropyKind::Shannon, 1.0);
        REQUIRE(profile.size() == 101);
        CHECK(std::isnan(profile.front().second_difference));
        CHECK(std::isnan(profile.back().second_difference));
        for (std::size_t i = 1; i + 1 < profile.size(); ++i)
            CHECK(profile[i].second_difference <= 1e-8);
    }

    // profile values agree with the direct bernoulli-sum entropy
    std::vector<double> p0 = {0.2, 0.4};
    std::vector<double> p1 = {0.7, 0.5};
    PathSpec path = so_path(p0, p1);
    auto profile = entropy_profile(path, 11, EntropyKind::Shannon, 1.0);
    for (const ProfilePoint& pt : profile) {
        Pmf law = bernoulli_sum_pmf(path.at(pt.t));
        CHECK(pt.value == doctest::Approx(entropy(law)).epsilon(1e-12));
    }
}

TEST_CASE("two point curvature closed form") {
    // m = 1: d2H/dt2 = -slope^2 / (p(1-p))
    std::vector<double> p0 = {0.3};
    std::vector<double> p1 = {0.7};
    PathSpec path = so_path(p0, p1);
    auto profile = entropy_profile(path, 41, EntropyKind::Shannon, 1.0);
    for (std::size_t i = 1; i + 1 < profile.size(); ++i) {
        double p = path.at(profile[i].t)[0];
        double expect = -0.16 / (p * (1.0 - p));
        CHECK(std::abs(profile[i].second_difference - expect) < 1e-3);
    }
}

TEST_CASE("tsallis convexity witnesses appear above the critical order") {
    WitnessScan high = convexity_witness_scan(EntropyKind::Tsallis, 4.0, 3, 200, 19);
    REQUIRE(high.witness.has_value());
    CHECK(high.witness->curvature > 1e-7);
    CHECK(high.witness->refined_curvature > 1e-7);
    CHECK(high.max_curvature >= high.witness->curvature);

    // replay: the profile at the witness reproduces the curvature
    const ConvexityWitness& w = *high.witness;
    auto profile = entropy_profile(w.path, 101, EntropyKind::Tsallis, w.q);
    bool found = false;
    for (const ProfilePoint& pt : profile) {
        if (std::abs(pt.t - w.t) < 1e-12) {
            CHECK(pt.second_difference == doctest::Approx(w.curvature).epsilon(1e-10));
            found = true;
        }
    }
    CHECK(found);

    // subcritical renyi finds nothing
    WitnessScan renyi_low = convexity_witness_scan(EntropyKind::Renyi, 1.5, 3, 200, 19);
    CHECK_FALSE(renyi_low.witness.has_value());
}

TEST_CASE("corner paths genuinely break tsallis concavity below the pair order") {
    // two coins, both increasing: one ends at 1, one stays near 0; the
    // tsallis q = 2 profile is the quartic 1 - sum P(x,t)^2 and its exact
    // second derivative at t = 0.99 is +1909519/50000000
    std::vector<double> p0 = {0.85, 0.0};
    std::vector<double> p1 = {1.0, 0.1};
    PathSpec path = so_path(p0, p1);
    CHECK(path.monotone);
    double refined = refined_path_curvature(path, EntropyKind::Tsallis, 2.0, 0.99);
    CHECK(refined == doctest::Approx(0.03819038).epsilon(1e-7));
    auto profile = entropy_profile(path, 101, EntropyKind::Tsallis, 2.0);
    for (const ProfilePoint& pt : profile)
        if (std::abs(pt.t - 0.99) < 1e-12)
            CHECK(pt.second_difference == doctest::Approx(0.03819011).epsilon(1e-6));

    // the randomized scan therefore reports a confirmed witness at q = 2
    WitnessScan low = convexity_witness_scan(EntropyKind::Tsallis, 2.0, 3, 200, 19);
    REQUIRE(low.witness.has_value());
    CHECK(low.witness->refined_curvature > 1e-7);
    CHECK(refined_path_curvature(low.witness->path, EntropyKind::Tsallis, 2.0,
                                 low.witness->t) ==
          doctest::Approx(low.witness->refined_curvature).epsilon(1e-12));

    CHECK_THROWS_AS(
        refined_path_curvature(path, EntropyKind::Tsallis, 2.0, 0.0), Error);
}

TEST_CASE("restricted families pin the conjectured critical orders") {
    // single coin: renyi concavity flips exactly at q = 2
    std::vector<double> a = {0.0}, b = {1.0};
    PathSpec coin = so_path(a, b);
    double below = -std::numeric_limits<double>::infinity();
    double above = -std::numeric_limits<double>::infinity();
    for (int i = 1; i < 100; ++i) {
        double t = i / 100.0;
        below = std::max(below,
                         refined_path_curvature(coin, EntropyKind::Renyi, 2.0, t));
        above = std::max(above,
                         refined_path_curvature(coin, EntropyKind::Renyi, 2.05, t));
    }
    CHECK(below < 0.0);
    CHECK(above > 1e-3);

    // equal pair at t = 1/2: closed form -q 2^(3-2q) (4q - 2 - 2^q)/(q - 1),
    // sign change at the root of 2 - 4q + 2^q
    std::vector<double> a2 = {0.0, 0.0}, b2 = {1.0, 1.0};
    PathSpec pair = so_path(a2, b2);
    for (double q : {3.0, 3.6, 3.7, 4.0}) {
        double closed = -q * std::pow(2.0, 3.0 - 2.0 * q) *
                        (4.0 * q - 2.0 - std::pow(2.0, q)) / (q - 1.0);
        CHECK(refined_path_curvature(pair, EntropyKind::Tsallis, q, 0.5) ==
              doctest::Approx(closed).epsilon(1e-7));
    }
    CHECK(std::abs(2.0 - 4.0 * 3.65986 + std::pow(2.0, 3.65986)) < 1e-3);
}

TEST_CASE("critical order search brackets and certifies its witnesses") {
    // the free ensemble includes corner paths, so both searches settle below
    // the restricted-family orders, each with a genuine confirmed witness
    CriticalQResult renyi = critical_q_search(EntropyKind::Renyi, 3, 200, 19);
    CHECK(renyi.bracket_lo < renyi.q_hat);
    CHECK(renyi.q_hat <= renyi.bracket_hi);
    CHECK(renyi.bracket_hi - renyi.bracket_lo <= 0.05);
    CHECK(renyi.q_hat > 1.0);
    CHECK(renyi.q_hat < 2.0);
    REQUIRE(renyi.witness.has_value());
    CHECK(renyi.witness->refined_curvature > 1e-7);
    CHECK(renyi.witness->q <= renyi.bracket_hi + 1e-12);

    CriticalQResult tsallis = critical_q_search(EntropyKind::Tsallis, 3, 200, 19);
    CHECK(tsallis.bracket_hi - tsallis.bracket_lo <= 0.05);
    CHECK(tsallis.q_hat > renyi.q_hat);
    CHECK(tsallis.q_hat < 2.0);
    REQUIRE(tsallis.witness.has_value());
    CHECK(tsallis.witness->refined_curvature > 1e-7);

    // deterministic replay
    CriticalQResult again = critical_q_search(EntropyKind::Tsallis, 3, 200, 19);
    CHECK(again.q_hat == tsallis.q_hat);

    CHECK_THROWS_AS(critical_q_search(EntropyKind::Shannon, 3, 100, 1), Error);
}

TEST_CASE("entropy increases under coordinatewise growth below one half") {
    Rng rng(derive_seed(79, "so-monotone-unit", 0));
    for (int t = 0; t < 100; ++t) {
        int m = rng.uniform_int(1, 3);
        std::vector<double> p(m), dir(m);
        for (int i = 0; i < m; ++i) {
            p[i] = rng.uniform(0.05, 0.45);
            dir[i] = rng.uniform(0.0, 1.0);
        }
        CHECK(entropy_increase(p, dir, 0.04) >= -1e-12);
    }

    std::vector<double> p = {0.3};
    std::vector<double> bad_dir = {-1.0};
    CHECK_THROWS_AS(entropy_increase(p, bad_dir, 0.01), Error);
    std::vector<double> dir = {1.0};
    CHECK_THROWS_AS(entropy_increase(p, dir, 0.4), Error);  // leaves [0, 1/2]
    std::vector<double> high = {0.6};
    CHECK_THROWS_AS(entropy_increase(high, dir, 0.01), Error);

    MonotoneCheckResult res = monotone_entropy_check(3, 500, 19);
    CHECK(res.trials == 500);
    CHECK(res.violations.empty());
}
