#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "core/pmf.hpp"
#include "core/pmf_json.hpp"
#include "core/random_pmf.hpp"
#include "core/rng.hpp"

using namespace dit;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("construction validates and trims") {
    Pmf p = make_pmf({0.25, 0.5, 0.25, 0.0, 0.0});
    CHECK(p.size() == 3);
    CHECK(p.support_end() == 2);
    CHECK(p.kind() == PmfKind::ExactFinite);
    CHECK(p(1) == 0.5);
    CHECK(p(-1) == 0.0);
    CHECK(p(17) == 0.0);

    CHECK_THROWS_AS(make_pmf({}), Error);
    CHECK_THROWS_AS(make_pmf({0.5, -0.1, 0.6}), Error);
    CHECK_THROWS_AS(make_pmf({0.5, 0.3}), Error);          // mass gone missing
    CHECK_THROWS_AS(make_pmf({0.5, 0.3}, 1.5), Error);     // tail bound >= 1
    CHECK_THROWS_AS(make_pmf({0.9, 0.2}), Error);          // mass above 1

    // truncated pmfs may be short by at most the tail bound
    Pmf t = make_pmf({0.6, 0.3999}, 1e-3);
    CHECK(t.kind() == PmfKind::TruncatedAnalytic);
    CHECK(t.tail_bound() == 1e-3);
}

TEST_CASE("error codes carry through") {
    try {
        make_pmf({0.5, 0.3});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotNormalized);
    }
    try {
        binomial_pmf(0, 0.5);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadParameter);
    }
}

TEST_CASE("poisson family mass and certificate") {
    Pmf p = poisson_pmf(2.0, 1e-12);
    double stored = 0.0;
    for (double w : p.probs()) stored += w;
    CHECK(stored >= 1.0 - 1e-12 - 1e-12);
    CHECK(stored <= 1.0 + 1e-12);
    CHECK(p.family().has_value());
    CHECK(p.family()->name == FamilyName::Poisson);
    CHECK(has_full_analytic_support(p));

    // elementwise against e^-2 2^x / x!
    double mass = std::exp(-2.0);
    for (int x = 0; x <= p.support_end(); ++x) {
        CHECK(p(x) == doctest::Approx(mass).epsilon(1e-13));
        mass *= 2.0 / (x + 1);
    }

    // analytic masses continue past the stored window
    auto beyond = analytic_mass(p, p.support_end() + 3);
    REQUIRE(beyond.has_value());
    CHECK(*beyond > 0.0);
    CHECK(*beyond < 1e-12);
}

TEST_CASE("finite families are exact") {
    Pmf b = bernoulli_pmf(0.3);
    CHECK(b.size() == 2);
    CHECK(b(0) == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(b.tail_bound() == 0.0);

    Pmf bin = binomial_pmf(4, 0.5);
    CHECK(bin.size() == 5);
    CHECK(bin(2) == doctest::Approx(6.0 / 16.0).epsilon(1e-14));

    std::vector<double> ps = {0.2, 0.5, 0.7};
    Pmf bs = bernoulli_sum_pmf(ps);
    CHECK(bs.size() == 4);
    // P(0) = 0.8 * 0.5 * 0.3
    CHECK(bs(0) == doctest::Approx(0.12).epsilon(1e-14));
    // P(3) = 0.2 * 0.5 * 0.7
    CHECK(bs(3) == doctest::Approx(0.07).epsilon(1e-14));
    // equal parameters collapse to the binomial
    std::vector<double> eq = {0.5, 0.5, 0.5, 0.5};
    Pmf bs2 = bernoulli_sum_pmf(eq);
    Pmf bin2 = binomial_pmf(4, 0.5);
    for (int x = 0; x <= 4; ++x)
        CHECK(bs2(x) == doctest::Approx(bin2(x)).epsilon(1e-13));
}

TEST_CASE("family dispatch mirrors the direct constructors") {
    std::vector<double> params = {3, 0.4};
    Pmf a = family_pmf(FamilyName::Binomial, params);
    Pmf b = binomial_pmf(3, 0.4);
    REQUIRE(a.size() == b.size());
    for (int x = 0; x <= a.support_end(); ++x) CHECK(a(x) == b(x));

    std::vector<double> bad = {2.5, 0.4};
    CHECK_THROWS_AS(family_pmf(FamilyName::Binomial, bad), Error);

    CHECK(family_name_from_string("tilted-poisson") == FamilyName::TiltedPoisson);
    CHECK_THROWS_AS(family_name_from_string("zeta"), Error);
}

TEST_CASE("moments match closed forms") {
    Moments m1 = moments(poisson_pmf(3.0, 1e-13));
    CHECK(m1.mean == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(m1.variance == doctest::Approx(3.0).epsilon(1e-9));

    Moments m2 = moments(binomial_pmf(10, 0.3));
    CHECK(m2.mean == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(m2.variance == doctest::Approx(2.1).epsilon(1e-12));

    Moments m3 = moments(geometric_pmf(0.4, 1e-13));
    CHECK(m3.mean == doctest::Approx(0.6 / 0.4).epsilon(1e-10));
    CHECK(m3.variance == doctest::Approx(0.6 / 0.16).epsilon(1e-9));

    Moments m4 = moments(negative_binomial_pmf(2.5, 0.6, 1e-13));
    // mean r(1-p)/p, variance r(1-p)/p^2
    CHECK(m4.mean == doctest::Approx(2.5 * 0.4 / 0.6).epsilon(1e-10));
    CHECK(m4.variance == doctest::Approx(2.5 * 0.4 / 0.36).epsilon(1e-9));
}

TEST_CASE("entropy closed forms") {
    CHECK(entropy(bernoulli_pmf(0.5)) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-14));

    // geometric: H = -log p - (1-p)/p log(1-p)
    double p = 0.35;
    double h = -std::log(p) - (1.0 - p) / p * std::log(1.0 - p);
    CHECK(entropy(geometric_pmf(p, 1e-14)) == doctest::Approx(h).epsilon(1e-10));

    CHECK(entropy(make_pmf({1.0})) == 0.0);
}

TEST_CASE("relative entropy and tv") {
    Pmf q = bernoulli_pmf(0.3);
    Pmf p = bernoulli_pmf(0.5);
    double expect = 0.3 * std::log(0.3 / 0.5) + 0.7 * std::log(0.7 / 0.5);
    CHECK(relative_entropy(q, p) == doctest::Approx(expect).epsilon(1e-13));
    CHECK(relative_entropy(p, p) == doctest::Approx(0.0).epsilon(1e-15));

    // Q off the support of P diverges
    Pmf wide = make_pmf({0.25, 0.25, 0.25, 0.25});
    Pmf narrow = bernoulli_pmf(0.5);
    CHECK(relative_entropy(wide, narrow) == kInf);

    CHECK(tv_distance(p, p) == 0.0);
    CHECK(tv_distance(bernoulli_pmf(0.5), bernoulli_pmf(0.25)) ==
          doctest::Approx(0.25).epsilon(1e-14));
    CHECK(tv_distance(make_pmf({1.0}), make_pmf({0.0, 1.0})) ==
          doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("poisson covering dominates any window") {
    Pmf ref = poisson_pmf_covering(0.5, 1e-12, 40);
    CHECK(ref.size() >= 40);
    Pmf wide = make_pmf(std::vector<double>(35, 1.0 / 35.0));
    double d = relative_entropy(wide, ref);
    CHECK(std::isfinite(d));
    CHECK(d > 0.0);
}

TEST_CASE("convolution closed forms") {
    Pmf two = convolve(bernoulli_pmf(0.5), bernoulli_pmf(0.5));
    Pmf bin = binomial_pmf(2, 0.5);
    REQUIRE(two.size() == 3);
    for (int x = 0; x <= 2; ++x)
        CHECK(two(x) == doctest::Approx(bin(x)).epsilon(1e-14));

    Pmf sum = convolve(poisson_pmf(1.0, 1e-13), poisson_pmf(2.0, 1e-13));
    Pmf direct = poisson_pmf(3.0, 1e-13);
    int top = std::min(sum.support_end(), direct.support_end());
    for (int x = 0; x <= top; ++x)
        CHECK(sum(x) == doctest::Approx(direct(x)).epsilon(1e-10));
    CHECK(sum.tail_bound() <= 2e-13 + 1e-15);
}

TEST_CASE("size bias closed forms") {
    // Poisson is its own size bias
    Pmf p = poisson_pmf(2.0, 1e-13);
    Pmf sb = size_bias(p);
    int top = std::min(sb.support_end(), p.support_end());
    for (int x = 0; x <= top; ++x)
        CHECK(sb(x) == doctest::Approx(p(x)).epsilon(1e-9));

    // binomial(n, p)* = binomial(n-1, p)
    Pmf b = size_bias(binomial_pmf(6, 0.3));
    Pmf oracle = binomial_pmf(5, 0.3);
    REQUIRE(b.size() == oracle.size());
    for (int x = 0; x <= 5; ++x)
        CHECK(b(x) == doctest::Approx(oracle(x)).epsilon(1e-12));

    CHECK_THROWS_AS(size_bias(make_pmf({1.0})), Error);
}

TEST_CASE("ulc detection") {
    CHECK(ulc_check(poisson_pmf(1.5, 1e-12)));
    CHECK(ulc_check(binomial_pmf(8, 0.4)));
    CHECK(ulc_check(bernoulli_pmf(0.7)));
    CHECK(ulc_check(make_pmf({1.0})));
    CHECK_FALSE(ulc_check(geometric_pmf(0.5, 1e-12)));
    CHECK_FALSE(ulc_check(make_pmf({0.5, 0.0, 0.5})));
    // heavy two-sided spike: 2 P(1)^2 < 3 P(2) P(0) fails
    CHECK_FALSE(ulc_check(make_pmf({0.45, 0.1, 0.45})));
}

TEST_CASE("c log concavity closed forms") {
    // Poisson: mass ratio gap is exactly 1/lambda at every x
    Pmf p = poisson_pmf(2.0, 1e-12);
    CHECK(c_log_concavity(p) == doctest::Approx(0.5).epsilon(1e-12));

    // geometric: ratios are constant, so the gap past x = 0 is 0
    Pmf g = geometric_pmf(0.4, 1e-12);
    CHECK(c_log_concavity(g) == doctest::Approx(0.0).epsilon(1e-12));

    CHECK_THROWS_AS(c_log_concavity(make_pmf({1.0})), Error);
    CHECK_THROWS_AS(c_log_concavity(make_pmf({0.5, 0.0, 0.5})), Error);
}

TEST_CASE("stochastic and likelihood ratio orders") {
    // Bern(0.25) <=st Bern(0.5)
    CHECK(stochastic_order(bernoulli_pmf(0.5), bernoulli_pmf(0.25),
                           OrderKind::Stochastic));
    CHECK_FALSE(stochastic_order(bernoulli_pmf(0.25), bernoulli_pmf(0.5),
                                 OrderKind::Stochastic));

    CHECK(stochastic_order(binomial_pmf(5, 0.6), binomial_pmf(5, 0.2),
                           OrderKind::LikelihoodRatio));
    CHECK_FALSE(stochastic_order(binomial_pmf(5, 0.2), binomial_pmf(5, 0.6),
                                 OrderKind::LikelihoodRatio));

    // lr implies st on a random pile of comparable pairs
    Rng rng(derive_seed(7, "order-implication", 0));
    int lr_pairs = 0;
    for (int t = 0; t < 200; ++t) {
        Pmf a = random_pmf(rng, 9);
        Pmf b = random_pmf(rng, 9);
        if (stochastic_order(a, b, OrderKind::LikelihoodRatio)) {
            ++lr_pairs;
            CHECK(stochastic_order(a, b, OrderKind::Stochastic));
        }
    }
    CHECK(lr_pairs > 0);
}

TEST_CASE("random generators respect their contracts") {
    Rng rng(derive_seed(11, "generator-contract", 0));
    for (int t = 0; t < 300; ++t) {
        Pmf u = random_ulc_pmf(rng, 12);
        CHECK(ulc_check(u));
        for (double w : u.probs()) CHECK(w > 0.0);
        Pmf g = random_pmf(rng, 12);
        double sum = 0.0;
        for (double w : g.probs()) sum += w;
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
    auto f = random_positive_f(rng, 8, 0.4, 2.0);
    REQUIRE(f.size() == 8);
    for (double v : f) {
        CHECK(v > 0.0);
        CHECK(std::abs(std::log(v)) <= 2.0 + 1e-12);
    }
}

TEST_CASE("json round trip preserves everything") {
    Pmf p = poisson_pmf(1.7, 1e-10);
    Pmf back = pmf_from_json_text(pmf_to_json_text(p));
    REQUIRE(back.size() == p.size());
    for (int x = 0; x <= p.support_end(); ++x) CHECK(back(x) == p(x));
    CHECK(back.tail_bound() == p.tail_bound());
    CHECK(back.kind() == p.kind());
    REQUIRE(back.family().has_value());
    CHECK(back.family()->name == FamilyName::Poisson);
    CHECK(back.family()->params == p.family()->params);

    Pmf q = make_pmf({0.25, 0.75});
    Pmf qb = pmf_from_json_text(pmf_to_json_text(q));
    CHECK(qb.kind() == PmfKind::ExactFinite);
    CHECK_FALSE(qb.family().has_value());
}

TEST_CASE("json parser rejects malformed input") {
    CHECK_THROWS_AS(pmf_from_json_text("not json"), Error);
    CHECK_THROWS_AS(pmf_from_json_text("[1, 2]"), Error);
    CHECK_THROWS_AS(pmf_from_json_text("{\"mass\": [1.0]}"), Error);
    CHECK_THROWS_AS(pmf_from_json_text("{\"probs\": [0.5, \"x\"]}"), Error);
    CHECK_THROWS_AS(pmf_from_json_text("{\"probs\": [0.5, 0.5], \"kind\": \"weird\"}"),
                    Error);
    try {
        pmf_from_json_text("{");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
    }
    // defaulting: tail_bound > 0 without kind reads as truncated
    Pmf t = pmf_from_json_text("{\"probs\": [0.6, 0.3999], \"tail_bound\": 1e-3}");
    CHECK(t.kind() == PmfKind::TruncatedAnalytic);
}
