#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "core/pmf.hpp"
#include "core/random_pmf.hpp"
#include "core/rng.hpp"
#include "core/score.hpp"

using namespace dit;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("poisson score vanishes") {
    for (double lambda : {0.5, 1.0, 2.0, 5.0}) {
        ScoreProfile s = scaled_score(poisson_pmf(lambda, 1e-13));
        CHECK(s.lambda == doctest::Approx(lambda).epsilon(1e-10));
        for (double r : s.rho) CHECK(std::abs(r) < 1e-9);
        CHECK(s.fisher < 1e-12);
    }
}

TEST_CASE("bernoulli fisher closed form") {
    for (int i = 1; i <= 99; ++i) {
        double p = i / 100.0;
        double expect = p * p / (1.0 - p);
        CHECK(scaled_fisher(bernoulli_pmf(p)) ==
              doctest::Approx(expect).epsilon(1e-13));
    }
    // profile itself: rho(0) = p/(1-p), rho(1) = -1
    ScoreProfile s = scaled_score(bernoulli_pmf(0.25));
    REQUIRE(s.rho.size() == 2);
    CHECK(s.rho[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(s.rho[1] == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("binomial fisher matches the bernoulli value") {
    // rho(x) = (np - x)/(n(1-p)) collapses K to p^2/(1-p) for every n
    for (int n : {2, 5, 13}) {
        for (double p : {0.2, 0.5, 0.8}) {
            CHECK(scaled_fisher(binomial_pmf(n, p)) ==
                  doctest::Approx(p * p / (1.0 - p)).epsilon(1e-12));
        }
    }
}

TEST_CASE("score is centered when the support starts at zero") {
    Rng rng(derive_seed(3, "score-centering-unit", 0));
    for (int t = 0; t < 200; ++t) {
        Pmf p = t % 2 == 0 ? random_pmf(rng, 14) : random_ulc_pmf(rng, 14);
        ScoreProfile s = scaled_score(p);
        double mean_rho = 0.0;
        for (int x = 0; x <= p.support_end(); ++x) mean_rho += p(x) * s.rho[x];
        CHECK(std::abs(mean_rho) < 1e-12);
    }
    // truncated analytic families re-center through the analytic next mass
    ScoreProfile s = scaled_score(geometric_pmf(0.3, 1e-12));
    double mean_rho = 0.0;
    const Pmf g = geometric_pmf(0.3, 1e-12);
    for (int x = 0; x <= g.support_end(); ++x) mean_rho += g(x) * s.rho[x];
    CHECK(std::abs(mean_rho) < 1e-10);
}

TEST_CASE("score support requirements") {
    CHECK_THROWS_AS(scaled_score(make_pmf({0.5, 0.0, 0.5})), Error);
    CHECK_THROWS_AS(scaled_score(make_pmf({1.0})), Error);  // zero mean
    // leading zeros are fine, rho there is 0 by convention
    ScoreProfile s = scaled_score(make_pmf({0.0, 0.5, 0.5}));
    CHECK(s.rho[0] == 0.0);
    CHECK(s.rho[2] == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("ulc laws have nonincreasing score") {
    Rng rng(derive_seed(5, "score-monotone-unit", 0));
    for (int t = 0; t < 200; ++t) {
        Pmf p = random_ulc_pmf(rng, 12);
        ScoreProfile s = scaled_score(p);
        for (std::size_t i = 0; i + 1 < s.rho.size(); ++i)
            CHECK(s.rho[i + 1] <= s.rho[i] + 1e-12);
    }
}

TEST_CASE("johnstone information closed forms") {
    // finite support blows up through the boundary term
    CHECK(johnstone_information(bernoulli_pmf(0.5)) == kInf);
    CHECK(johnstone_information(binomial_pmf(6, 0.3)) == kInf);

    // Poisson: I = 1/lambda, boundary included through the family tag
    for (double lambda : {0.5, 1.0, 2.0, 5.0}) {
        CHECK(johnstone_information(poisson_pmf(lambda, 1e-13)) ==
              doctest::Approx(1.0 / lambda).epsilon(1e-9));
    }

    // interior zero with mass right below it
    CHECK(johnstone_information(make_pmf({0.5, 0.0, 0.5})) == kInf);
}

TEST_CASE("johnstone cramer rao") {
    // I >= 1/var for full-support laws
    for (double lambda : {0.7, 1.3, 2.9}) {
        Pmf p = poisson_pmf(lambda, 1e-12);
        CHECK(johnstone_information(p) >= 1.0 / moments(p).variance - 1e-8);
    }
    Pmf g = geometric_pmf(0.45, 1e-12);
    double ig = johnstone_information(g);
    CHECK(std::isfinite(ig));
    CHECK(ig >= 1.0 / moments(g).variance - 1e-8);
    Pmf nb = negative_binomial_pmf(2.0, 0.55, 1e-12);
    CHECK(johnstone_information(nb) >= 1.0 / moments(nb).variance - 1e-8);
}

TEST_CASE("scaled subadditivity gap") {
    // iid bernoulli parts make the bound tight
    std::vector<Pmf> parts = {bernoulli_pmf(0.4), bernoulli_pmf(0.4),
                              bernoulli_pmf(0.4)};
    double gap = fisher_subadditivity_gap(parts, FisherKind::Scaled);
    CHECK(std::abs(gap) < 1e-12);

    // mixed random parts stay nonnegative
    Rng rng(derive_seed(9, "khj-unit", 0));
    for (int t = 0; t < 100; ++t) {
        std::vector<Pmf> mix;
        int k = rng.uniform_int(2, 4);
        for (int i = 0; i < k; ++i)
            mix.push_back(t % 2 == 0 ? random_ulc_pmf(rng, 8) : random_pmf(rng, 8));
        CHECK(fisher_subadditivity_gap(mix, FisherKind::Scaled) >= -1e-10);
    }

    std::vector<Pmf> single = {bernoulli_pmf(0.5)};
    CHECK_THROWS_AS(fisher_subadditivity_gap(single, FisherKind::Scaled), Error);
}

TEST_CASE("johnstone subadditivity gap") {
    // equal-parameter poissons sit exactly on the bound
    std::vector<Pmf> halves = {poisson_pmf(1.0, 1e-13), poisson_pmf(1.0, 1e-13)};
    CHECK(std::abs(fisher_subadditivity_gap(halves, FisherKind::Johnstone)) < 1e-8);

    std::vector<Pmf> pair = {geometric_pmf(0.6, 1e-12),
                             negative_binomial_pmf(1.5, 0.6, 1e-12)};
    CHECK(fisher_subadditivity_gap(pair, FisherKind::Johnstone) >= -1e-8);

    // finite-information requirement
    std::vector<Pmf> finite_part = {bernoulli_pmf(0.5), poisson_pmf(1.0, 1e-12)};
    CHECK_THROWS_AS(fisher_subadditivity_gap(finite_part, FisherKind::Johnstone),
                    Error);
    std::vector<Pmf> three = {poisson_pmf(1.0, 1e-12), poisson_pmf(1.0, 1e-12),
                              poisson_pmf(1.0, 1e-12)};
    CHECK_THROWS_AS(fisher_subadditivity_gap(three, FisherKind::Johnstone), Error);
}

TEST_CASE("poisson approximation chain") {
    double lambda = 1.0;
    for (int n = 2; n <= 50; ++n) {
        PoissonApproxBounds b = poisson_approx_bounds(binomial_pmf(n, lambda / n));
        CHECK(b.lambda == doctest::Approx(lambda).epsilon(1e-12));
        CHECK(b.rel_ent <= lambda * lambda / (n * (n - lambda)) + 1e-12);
        CHECK(b.rel_ent <= b.fisher + 1e-10);
        CHECK(b.tv <= b.pinsker + 1e-10);
        CHECK(b.chain_holds);
    }

    // the chain also holds for generic laws
    Rng rng(derive_seed(13, "chain-unit", 0));
    for (int t = 0; t < 100; ++t) {
        Pmf p = t % 2 == 0 ? random_pmf(rng, 10) : random_ulc_pmf(rng, 10);
        PoissonApproxBounds b = poisson_approx_bounds(p);
        CHECK(b.rel_ent <= b.fisher + 1e-10);
        CHECK(b.tv <= b.pinsker + 1e-10);
        CHECK(b.chain_holds);
    }

    // Poisson input: everything collapses to zero
    PoissonApproxBounds self = poisson_approx_bounds(poisson_pmf(2.0, 1e-13));
    CHECK(self.rel_ent < 1e-10);
    CHECK(self.tv < 1e-6);
    CHECK(self.fisher < 1e-12);
}
