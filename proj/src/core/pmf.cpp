#include "core/pmf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace dit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Normalization window grace and comparison slacks.  These absorb summation
// rounding only; genuine deficits must be covered by tail_bound.
constexpr double kSumGrace = 1e-12;
constexpr double kUlcSlack = 1e-14;
constexpr double kOrderSlack = 1e-12;

// Hard ceiling on stored support length for truncated families.
constexpr int kSupportCap = 10000;

std::string describe(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

}  // namespace

const char* family_name_string(FamilyName name) {
    switch (name) {
        case FamilyName::Poisson: return "poisson";
        case FamilyName::Bernoulli: return "bernoulli";
        case FamilyName::Binomial: return "binomial";
        case FamilyName::Geometric: return "geometric";
        case FamilyName::NegativeBinomial: return "negative-binomial";
        case FamilyName::BernoulliSum: return "bernoulli-sum";
        case FamilyName::TiltedPoisson: return "tilted-poisson";
    }
    return "unknown";
}

FamilyName family_name_from_string(const std::string& s) {
    if (s == "poisson") return FamilyName::Poisson;
    if (s == "bernoulli") return FamilyName::Bernoulli;
    if (s == "binomial") return FamilyName::Binomial;
    if (s == "geometric") return FamilyName::Geometric;
    if (s == "negative-binomial") return FamilyName::NegativeBinomial;
    if (s == "bernoulli-sum") return FamilyName::BernoulliSum;
    if (s == "tilted-poisson") return FamilyName::TiltedPoisson;
    raise(ErrorCode::ParseError, "unknown family name '" + s + "'");
}

Pmf Pmf::validated(std::vector<double> probs, double tail_bound, PmfKind kind,
                   std::optional<FamilyTag> family) {
    if (probs.empty()) raise(ErrorCode::EmptySupport, "pmf has no entries");
    for (double w : probs) {
        if (!(w >= 0.0) || !std::isfinite(w))
            raise(ErrorCode::NegativeMass,
                  "probability entry " + describe(w) + " is negative or non-finite");
    }
    if (!(tail_bound >= 0.0) || tail_bound >= 1.0)
        raise(ErrorCode::BadParameter, "tail bound " + describe(tail_bound) +
                                           " outside [0, 1)");
    if (kind == PmfKind::ExactFinite && tail_bound != 0.0)
        raise(ErrorCode::BadParameter, "exact-finite pmf with nonzero tail bound");

    while (probs.size() > 1 && probs.back() == 0.0) probs.pop_back();

    double sum = 0.0;
    for (double w : probs) sum += w;
    if (sum < 1.0 - tail_bound - kSumGrace || sum > 1.0 + kSumGrace)
        raise(ErrorCode::NotNormalized,
              "stored mass " + describe(sum) + " outside [1 - tail_bound, 1]");

    Pmf p;
    p.probs_ = std::move(probs);
    p.tail_bound_ = tail_bound;
    p.kind_ = kind;
    p.family_ = std::move(family);
    return p;
}

Pmf make_pmf(std::vector<double> weights, double tail_bound) {
    PmfKind kind = tail_bound == 0.0 ? PmfKind::ExactFinite : PmfKind::TruncatedAnalytic;
    return Pmf::validated(std::move(weights), tail_bound, kind, std::nullopt);
}

namespace {

void check_trunc_tol(double tol) {
    if (!(tol > 0.0) || tol > 1e-3)
        raise(ErrorCode::BadParameter,
              "truncation tolerance " + describe(tol) + " outside (0, 1e-3]");
}

struct TruncatedWeights {
    std::vector<double> probs;
    double tail;
};

// Builds the head of an infinite family with a certified tail bound.
//
// log_w(x) evaluates log of the (possibly unnormalized) weight at x;
// ratio(x) = w(x+1)/w(x); ratio_sup(x) bounds sup_{y >= x} ratio(y).  The
// remainder past the last built point is dominated by a geometric series once
// ratio_sup < 1, which certifies the tail without summing to infinity.
template <class LogW, class RatioFn, class RatioSupFn>
TruncatedWeights truncate_family(LogW log_w, RatioFn ratio, RatioSupFn ratio_sup,
                                 double tol, bool normalize, std::size_t min_points,
                                 const char* what) {
    if (min_points > static_cast<std::size_t>(kSupportCap) + 1)
        raise(ErrorCode::TruncationOverflow,
              std::string(what) + ": required support exceeds cap");

    // weights grow by the exact mass recurrence from the x = 0 anchor, so
    // adjacent masses stay consistent to a couple of ulps and exact-equality
    // relations (poisson ULC, geometric ratios) survive the numerics; the
    // per-point log formula is the fallback when the anchor underflows
    std::vector<double> w;
    w.push_back(std::exp(log_w(0)));
    const bool by_ratio = w[0] >= std::numeric_limits<double>::min();
    double remainder = kInf;
    while (true) {
        int last = static_cast<int>(w.size()) - 1;
        double rs = ratio_sup(last + 1);
        if (w.size() >= min_points && rs < 0.999) {
            double bound = w[last] * ratio(last) / (1.0 - rs);
            if (bound <= tol * 1e-9) {
                remainder = bound;
                break;
            }
        }
        if (static_cast<int>(w.size()) > kSupportCap + 1)
            raise(ErrorCode::TruncationOverflow,
                  std::string(what) + ": support cap hit before tail certificate");
        w.push_back(by_ratio ? w[last] * ratio(last)
                             : std::exp(log_w(last + 1)));
    }

    // suffix sums from the top, so the tail at each cut is a fresh sum of
    // positive terms rather than a catastrophic 1 - head cancellation
    std::vector<double> tail_at(w.size());
    double acc = remainder;
    for (std::size_t i = w.size(); i-- > 0;) {
        tail_at[i] = acc;
        acc += w[i];
    }
    const double total = normalize ? acc : 1.0;

    std::size_t n = 0;
    while (n + 1 < w.size() && tail_at[n] > tol * total) ++n;
    if (tail_at[n] > tol * total)
        raise(ErrorCode::TruncationOverflow, std::string(what) + ": tail certificate failed");
    n = std::max(n, min_points - 1);
    if (n > static_cast<std::size_t>(kSupportCap))
        raise(ErrorCode::TruncationOverflow, std::string(what) + ": support cap exceeded");

    w.resize(n + 1);
    if (normalize)
        for (double& x : w) x /= total;
    return {std::move(w), tail_at[n] / total};
}

double require_positive(double x, const char* name) {
    if (!std::isfinite(x) || !(x > 0.0))
        raise(ErrorCode::BadParameter, std::string(name) + " must be positive and finite");
    return x;
}

double require_prob(double p, const char* name) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0)
        raise(ErrorCode::BadParameter, std::string(name) + " must lie in [0, 1]");
    return p;
}

}  // namespace

Pmf poisson_pmf(double lambda, double trunc_tol) {
    require_positive(lambda, "poisson lambda");
    check_trunc_tol(trunc_tol);
    return poisson_pmf_covering(lambda, trunc_tol, 1);
}

Pmf poisson_pmf_covering(double lambda, double trunc_tol, std::size_t min_support) {
    require_positive(lambda, "poisson lambda");
    check_trunc_tol(trunc_tol);
    const double log_lambda = std::log(lambda);
    auto tw = truncate_family(
        [&](int x) { return -lambda + x * log_lambda - std::lgamma(x + 1.0); },
        [&](int x) { return lambda / (x + 1.0); },
        [&](int x) { return lambda / (x + 1.0); },
        trunc_tol, /*normalize=*/false, min_support, "poisson");
    return Pmf::validated(std::move(tw.probs), tw.tail, PmfKind::TruncatedAnalytic,
                          FamilyTag{FamilyName::Poisson, {lambda}});
}

Pmf bernoulli_pmf(double p) {
    require_prob(p, "bernoulli p");
    std::vector<double> probs{1.0 - p, p};
    return Pmf::validated(std::move(probs), 0.0, PmfKind::ExactFinite,
                          FamilyTag{FamilyName::Bernoulli, {p}});
}

Pmf binomial_pmf(int n, double p) {
    if (n < 1) raise(ErrorCode::BadParameter, "binomial n must be >= 1");
    require_prob(p, "binomial p");
    std::vector<double> probs(static_cast<std::size_t>(n) + 1, 0.0);
    if (p == 0.0) {
        probs[0] = 1.0;
    } else if (p == 1.0) {
        probs.back() = 1.0;
    } else {
        const double lp = std::log(p), lq = std::log1p(-p);
        const double lg_n = std::lgamma(n + 1.0);
        for (int x = 0; x <= n; ++x)
            probs[x] = std::exp(lg_n - std::lgamma(x + 1.0) - std::lgamma(n - x + 1.0) +
                                x * lp + (n - x) * lq);
    }
    return Pmf::validated(std::move(probs), 0.0, PmfKind::ExactFinite,
                          FamilyTag{FamilyName::Binomial, {static_cast<double>(n), p}});
}

Pmf geometric_pmf(double p, double trunc_tol) {
    require_prob(p, "geometric p");
    if (p == 0.0) raise(ErrorCode::BadParameter, "geometric p must be positive");
    check_trunc_tol(trunc_tol);
    if (p == 1.0)
        return Pmf::validated({1.0}, 0.0, PmfKind::ExactFinite,
                              FamilyTag{FamilyName::Geometric, {p}});
    const double lq = std::log1p(-p);
    auto tw = truncate_family(
        [&](int x) { return std::log(p) + x * lq; },
        [&](int) { return 1.0 - p; },
        [&](int) { return 1.0 - p; },
        trunc_tol, /*normalize=*/false, 2, "geometric");
    return Pmf::validated(std::move(tw.probs), tw.tail, PmfKind::TruncatedAnalytic,
                          FamilyTag{FamilyName::Geometric, {p}});
}

Pmf negative_binomial_pmf(double r, double p, double trunc_tol) {
    require_positive(r, "negative binomial r");
    require_prob(p, "negative binomial p");
    if (p == 0.0 || p == 1.0)
        raise(ErrorCode::BadParameter, "negative binomial p must lie in (0, 1)");
    check_trunc_tol(trunc_tol);
    const double lp = std::log(p), lq = std::log1p(-p), lg_r = std::lgamma(r);
    auto ratio = [&](int x) { return (x + r) / (x + 1.0) * (1.0 - p); };
    auto tw = truncate_family(
        [&](int x) {
            return std::lgamma(x + r) - lg_r - std::lgamma(x + 1.0) + r * lp + x * lq;
        },
        ratio,
        // the ratio is monotone in x with limit 1-p, so the sup over y >= x
        // is attained at one of the two ends
        [&](int x) { return std::max(ratio(x), 1.0 - p); },
        trunc_tol, /*normalize=*/false, 2, "negative-binomial");
    return Pmf::validated(std::move(tw.probs), tw.tail, PmfKind::TruncatedAnalytic,
                          FamilyTag{FamilyName::NegativeBinomial, {r, p}});
}

Pmf bernoulli_sum_pmf(std::span<const double> p) {
    if (p.empty()) raise(ErrorCode::BadParameter, "bernoulli-sum needs at least one p");
    std::vector<double> probs{1.0};
    for (std::size_t i = 0; i < p.size(); ++i) {
        require_prob(p[i], "bernoulli-sum p");
        probs.push_back(0.0);
        for (std::size_t k = probs.size() - 1; k > 0; --k)
            probs[k] = probs[k] * (1.0 - p[i]) + probs[k - 1] * p[i];
        probs[0] *= 1.0 - p[i];
    }
    return Pmf::validated(std::move(probs), 0.0, PmfKind::ExactFinite,
                          FamilyTag{FamilyName::BernoulliSum,
                                    std::vector<double>(p.begin(), p.end())});
}

Pmf tilted_poisson_pmf(double lambda, double beta, double trunc_tol) {
    require_positive(lambda, "tilted-poisson lambda");
    if (!std::isfinite(beta) || beta < 0.0)
        raise(ErrorCode::BadParameter, "tilted-poisson beta must be >= 0");
    check_trunc_tol(trunc_tol);
    const double log_lambda = std::log(lambda);
    auto ratio = [&](int x) {
        return lambda * std::exp(-beta * (2.0 * x + 1.0)) / (x + 1.0);
    };
    auto tw = truncate_family(
        [&](int x) { return x * log_lambda - beta * x * static_cast<double>(x) -
                            std::lgamma(x + 1.0); },
        ratio, ratio, trunc_tol, /*normalize=*/true, 2, "tilted-poisson");
    return Pmf::validated(std::move(tw.probs), tw.tail, PmfKind::TruncatedAnalytic,
                          FamilyTag{FamilyName::TiltedPoisson, {lambda, beta}});
}

Pmf family_pmf(FamilyName name, std::span<const double> params, double trunc_tol) {
    auto want = [&](std::size_t n) {
        if (params.size() != n)
            raise(ErrorCode::BadParameter,
                  std::string(family_name_string(name)) + " takes " + describe(n) +
                      " parameter(s), got " + describe(params.size()));
    };
    switch (name) {
        case FamilyName::Poisson:
            want(1);
            return poisson_pmf(params[0], trunc_tol);
        case FamilyName::Bernoulli:
            want(1);
            return bernoulli_pmf(params[0]);
        case FamilyName::Binomial: {
            want(2);
            double n_real = params[0];
            int n = static_cast<int>(std::llround(n_real));
            if (!std::isfinite(n_real) || std::abs(n_real - n) > 1e-9)
                raise(ErrorCode::BadParameter, "binomial n must be an integer");
            return binomial_pmf(n, params[1]);
        }
        case FamilyName::Geometric:
            want(1);
            return geometric_pmf(params[0], trunc_tol);
        case FamilyName::NegativeBinomial:
            want(2);
            return negative_binomial_pmf(params[0], params[1], trunc_tol);
        case FamilyName::BernoulliSum:
            return bernoulli_sum_pmf(params);
        case FamilyName::TiltedPoisson:
            want(2);
            return tilted_poisson_pmf(params[0], params[1], trunc_tol);
    }
    raise(ErrorCode::Internal, "unhandled family");
}

namespace {

// w(x+1)/w(x) for families with unbounded support; used to continue the
// stored array past its truncation point.
double family_ratio(const FamilyTag& tag, std::int64_t x) {
    switch (tag.name) {
        case FamilyName::Poisson:
            return tag.params[0] / (x + 1.0);
        case FamilyName::Geometric:
            return 1.0 - tag.params[0];
        case FamilyName::NegativeBinomial:
            return (x + tag.params[0]) / (x + 1.0) * (1.0 - tag.params[1]);
        case FamilyName::TiltedPoisson:
            return tag.params[0] * std::exp(-tag.params[1] * (2.0 * x + 1.0)) / (x + 1.0);
        default:
            return 0.0;
    }
}

bool family_is_infinite(const FamilyTag& tag) {
    switch (tag.name) {
        case FamilyName::Poisson:
        case FamilyName::TiltedPoisson:
            return true;
        case FamilyName::Geometric:
            return tag.params[0] < 1.0;
        case FamilyName::NegativeBinomial:
            return tag.params[1] > 0.0 && tag.params[1] < 1.0;
        default:
            return false;
    }
}

}  // namespace

std::optional<double> analytic_mass(const Pmf& p, std::int64_t x) {
    if (!p.family()) return std::nullopt;
    if (x < 0) return 0.0;
    if (x <= p.support_end()) return p(x);
    if (!family_is_infinite(*p.family())) return 0.0;
    // continue by exact mass ratios from the last stored point, so the
    // extension is consistent with the stored normalization
    double w = p(p.support_end());
    for (std::int64_t y = p.support_end(); y < x; ++y) {
        w *= family_ratio(*p.family(), y);
        if (w == 0.0) break;
    }
    return w;
}

bool has_full_analytic_support(const Pmf& p) {
    return p.family() && family_is_infinite(*p.family());
}

Pmf convolve(const Pmf& a, const Pmf& b) {
    const auto& pa = a.probs();
    const auto& pb = b.probs();
    std::vector<double> out(pa.size() + pb.size() - 1, 0.0);
    for (std::size_t i = 0; i < pa.size(); ++i) {
        if (pa[i] == 0.0) continue;
        for (std::size_t j = 0; j < pb.size(); ++j) out[i + j] += pa[i] * pb[j];
    }
    PmfKind kind = (a.kind() == PmfKind::ExactFinite && b.kind() == PmfKind::ExactFinite)
                       ? PmfKind::ExactFinite
                       : PmfKind::TruncatedAnalytic;
    std::optional<FamilyTag> tag;
    if (a.family() && b.family() && a.family()->name == FamilyName::Poisson &&
        b.family()->name == FamilyName::Poisson)
        tag = FamilyTag{FamilyName::Poisson,
                        {a.family()->params[0] + b.family()->params[0]}};
    return Pmf::validated(std::move(out), a.tail_bound() + b.tail_bound(), kind,
                          std::move(tag));
}

Moments moments(const Pmf& p) {
    double mean = 0.0;
    const auto& w = p.probs();
    for (std::size_t x = 0; x < w.size(); ++x) mean += x * w[x];
    double var = 0.0;
    for (std::size_t x = 0; x < w.size(); ++x) {
        double d = x - mean;
        var += d * d * w[x];
    }
    return {mean, var};
}

double entropy(const Pmf& p) {
    double h = 0.0;
    for (double w : p.probs())
        if (w > 0.0) h -= w * std::log(w);
    return h;
}

double relative_entropy(const Pmf& q, const Pmf& p) {
    const double budget = q.tail_bound() + p.tail_bound();
    double s = 0.0;
    for (int x = 0; x <= q.support_end(); ++x) {
        double qx = q(x);
        if (qx == 0.0) continue;
        double px = x <= p.support_end() ? p(x) : analytic_mass(p, x).value_or(0.0);
        if (px <= 0.0) {
            // mass q puts where p vanishes; tolerable only within the
            // truncation budget of the pair
            if (qx > budget + 1e-15) return kInf;
            continue;
        }
        s += qx * std::log(qx / px);
    }
    return s;
}

double ent_functional(const Pmf& p, std::span<const double> f) {
    if (f.size() < p.size())
        raise(ErrorCode::LengthMismatch, "test function shorter than pmf support");
    double pf = 0.0, pflogf = 0.0;
    const auto& w = p.probs();
    for (std::size_t x = 0; x < w.size(); ++x) {
        if (w[x] == 0.0) continue;
        if (!(f[x] > 0.0) || !std::isfinite(f[x]))
            raise(ErrorCode::NonPositiveF,
                  "f(" + describe(static_cast<double>(x)) + ") = " + describe(f[x]));
        pf += w[x] * f[x];
        pflogf += w[x] * f[x] * std::log(f[x]);
    }
    return pflogf - pf * std::log(pf);
}

Pmf size_bias(const Pmf& p) {
    double lambda = moments(p).mean;
    if (!(lambda > 0.0))
        raise(ErrorCode::ZeroMean, "size bias of a zero-mean pmf");
    std::vector<double> out(std::max<std::size_t>(p.size() - 1, 1), 0.0);
    for (std::size_t x = 0; x + 1 < p.size(); ++x)
        out[x] = (x + 1.0) * p(static_cast<std::int64_t>(x) + 1) / lambda;

    // the size bias of a tagged family is sometimes again a tagged family;
    // keep the tag when the transform is exact
    std::optional<FamilyTag> tag;
    if (p.family()) {
        const FamilyTag& t = *p.family();
        if (t.name == FamilyName::Poisson)
            tag = t;
        else if (t.name == FamilyName::Binomial && t.params[0] >= 2.0)
            tag = FamilyTag{FamilyName::Binomial, {t.params[0] - 1.0, t.params[1]}};
        else if (t.name == FamilyName::Geometric && t.params[0] < 1.0)
            tag = FamilyTag{FamilyName::NegativeBinomial, {2.0, t.params[0]}};
    }
    return Pmf::validated(std::move(out), p.tail_bound(), p.kind(), std::move(tag));
}

bool ulc_check(const Pmf& p) {
    const int n = p.support_end();
    for (int v = 1; v <= n; ++v) {
        double next = v < n ? p(v + 1) : analytic_mass(p, v + 1).value_or(0.0);
        double lhs = v * p(v) * p(v);
        double rhs = (v + 1.0) * next * p(v - 1);
        if (rhs - lhs > kUlcSlack * std::max(lhs, rhs)) return false;
    }
    return true;
}

double c_log_concavity(const Pmf& p) {
    if (p.size() < 2)
        raise(ErrorCode::DegenerateSupport, "c-log-concavity needs at least two points");
    for (int x = 0; x <= p.support_end(); ++x)
        if (p(x) == 0.0)
            raise(ErrorCode::InteriorZero,
                  "zero probability at x = " + describe(x) + " inside stored support");
    double c = kInf;
    for (int x = 0; x < p.support_end(); ++x) {
        double e = p(x) / p(x + 1);
        if (x > 0) e -= p(x - 1) / p(x);
        c = std::min(c, e);
    }
    return c;
}

namespace {

struct SupportInterval {
    int lo;
    int hi;
    bool contiguous;
};

SupportInterval support_interval(const Pmf& p) {
    int lo = 0;
    while (lo <= p.support_end() && p(lo) == 0.0) ++lo;
    int hi = p.support_end();  // trailing zeros are trimmed, so p(hi) > 0
    bool contiguous = true;
    for (int x = lo; x <= hi; ++x)
        if (p(x) == 0.0) {
            contiguous = false;
            break;
        }
    return {lo, hi, contiguous};
}

}  // namespace

bool stochastic_order(const Pmf& p, const Pmf& q, OrderKind kind) {
    if (kind == OrderKind::Stochastic) {
        // Q <=_st P iff the cdf of P is below the cdf of Q everywhere
        const double tol = kOrderSlack + p.tail_bound() + q.tail_bound();
        int end = std::max(p.support_end(), q.support_end());
        double cp = 0.0, cq = 0.0;
        for (int x = 0; x < end; ++x) {
            cp += p(x);
            cq += q(x);
            if (cp > cq + tol) return false;
        }
        return true;
    }

    SupportInterval sp = support_interval(p);
    SupportInterval sq = support_interval(q);
    if (!sp.contiguous || !sq.contiguous)
        raise(ErrorCode::IncomparableSupports,
              "likelihood-ratio order needs interval supports");
    // a dominated law cannot extend past the dominating one on the right,
    // nor start above it
    if (sq.hi > sp.hi || sq.lo > sp.lo) return false;
    for (int x = std::max(sp.lo, sq.lo); x < std::min(sp.hi, sq.hi); ++x) {
        double lhs = q(x + 1) * p(x);
        double rhs = q(x) * p(x + 1);
        if (lhs > rhs + kOrderSlack * std::max(lhs, rhs)) return false;
    }
    return true;
}

double tv_distance(const Pmf& p, const Pmf& q) {
    double s = 0.0;
    int end = std::max(p.support_end(), q.support_end());
    for (int x = 0; x <= end; ++x) s += std::abs(p(x) - q(x));
    double tv = 0.5 * s + 0.5 * (p.tail_bound() + q.tail_bound());
    return std::clamp(tv, 0.0, 1.0);
}

}  // namespace dit
