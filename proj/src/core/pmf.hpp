#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/error.hpp"

namespace dit {

enum class PmfKind { ExactFinite, TruncatedAnalytic };

enum class FamilyName {
    Poisson,
    Bernoulli,
    Binomial,
    Geometric,
    NegativeBinomial,
    BernoulliSum,
    TiltedPoisson,
};

const char* family_name_string(FamilyName name);
FamilyName family_name_from_string(const std::string& s);

// Optional provenance marker: the stored array is (a truncation of) an exact
// analytic family with the given parameters.  Downstream code uses it to
// evaluate masses past the stored support and to recognize full-support laws.
struct FamilyTag {
    FamilyName name;
    std::vector<double> params;
};

struct Moments {
    double mean;
    double variance;
};

// Probability mass function on {0, 1, ..., N} with a certified bound on the
// mass that truncation may have dropped.  Invariants, enforced at every
// construction site:
//   - probs nonempty, all entries finite and >= 0
//   - trailing zeros trimmed, so probs.back() > 0 unless the pmf is [1]
//   - sum(probs) in [1 - tail_bound - 1e-12, 1 + 1e-12]
//   - kind == ExactFinite implies tail_bound == 0
class Pmf {
public:
    Pmf() : probs_{1.0} {}

    static Pmf validated(std::vector<double> probs, double tail_bound, PmfKind kind,
                         std::optional<FamilyTag> family);

    const std::vector<double>& probs() const { return probs_; }
    double tail_bound() const { return tail_bound_; }
    PmfKind kind() const { return kind_; }
    const std::optional<FamilyTag>& family() const { return family_; }

    // largest stored support point
    int support_end() const { return static_cast<int>(probs_.size()) - 1; }
    std::size_t size() const { return probs_.size(); }

    // mass at x, zero outside the stored window
    double operator()(std::int64_t x) const {
        if (x < 0 || x >= static_cast<std::int64_t>(probs_.size())) return 0.0;
        return probs_[static_cast<std::size_t>(x)];
    }

private:
    std::vector<double> probs_;
    double tail_bound_ = 0.0;
    PmfKind kind_ = PmfKind::ExactFinite;
    std::optional<FamilyTag> family_;
};

// Validating constructor for explicit weight vectors.  tail_bound == 0 marks
// the pmf exact-finite, anything positive marks it a truncation.
Pmf make_pmf(std::vector<double> weights, double tail_bound = 0.0);

// Analytic families.  Finite families (bernoulli, binomial, bernoulli-sum)
// are exact; infinite families are truncated at the smallest N whose
// certified tail mass is <= trunc_tol.
Pmf poisson_pmf(double lambda, double trunc_tol = 1e-12);
Pmf bernoulli_pmf(double p);
Pmf binomial_pmf(int n, double p);
Pmf geometric_pmf(double p, double trunc_tol = 1e-12);
Pmf negative_binomial_pmf(double r, double p, double trunc_tol = 1e-12);
Pmf bernoulli_sum_pmf(std::span<const double> p);
Pmf tilted_poisson_pmf(double lambda, double beta, double trunc_tol = 1e-12);

Pmf family_pmf(FamilyName name, std::span<const double> params,
               double trunc_tol = 1e-12);

// Poisson truncated so the stored support covers at least min_support points.
// Relative-entropy targets need the reference measure to dominate the other
// argument's support window.
Pmf poisson_pmf_covering(double lambda, double trunc_tol, std::size_t min_support);

// Exact mass of the tagged analytic family at x, for any x >= 0; nullopt when
// the pmf carries no family tag.
std::optional<double> analytic_mass(const Pmf& p, std::int64_t x);

// True when the family tag guarantees P(x) > 0 for every x >= 0.
bool has_full_analytic_support(const Pmf& p);

Pmf convolve(const Pmf& a, const Pmf& b);

Moments moments(const Pmf& p);

// Shannon entropy in nats over the stored support; 0 log 0 = 0.
double entropy(const Pmf& p);

// Relative entropy D(Q || P) in nats.  +infinity when Q puts more than the
// combined truncation budget on a point where P vanishes.
double relative_entropy(const Pmf& q, const Pmf& p);

// Ent_P(f) = sum P f log f - (sum P f) log(sum P f) for strictly positive f
// on the support of P.  With f = Q/P this is D(Q || P).
double ent_functional(const Pmf& p, std::span<const double> f);

// Size-biased law P*(x) = (x+1) P(x+1) / mean(P).
Pmf size_bias(const Pmf& p);

// Ultra log-concavity: v P(v)^2 >= (v+1) P(v+1) P(v-1) for all v, with a
// relative slack of 1e-14 to absorb rounding in constructed instances.
bool ulc_check(const Pmf& p);

// Largest c with P(x)/P(x+1) - P(x-1)/P(x) >= c on the stored support
// (x = 0 .. N-1, with the x = 0 term having no subtrahend).
double c_log_concavity(const Pmf& p);

enum class OrderKind { Stochastic, LikelihoodRatio };

// Whether Q <= P in the given order (second argument is dominated).
bool stochastic_order(const Pmf& p, const Pmf& q, OrderKind kind);

// Total variation with the half-l1 normalization, in [0, 1]; truncated mass
// is charged at half weight, the worst case.
double tv_distance(const Pmf& p, const Pmf& q);

}  // namespace dit
