#include "core/score.hpp"

#include <cmath>
#include <limits>

namespace dit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_interval_support(const Pmf& p) {
    int lo = 0;
    while (lo <= p.support_end() && p(lo) == 0.0) ++lo;
    for (int x = lo; x <= p.support_end(); ++x)
        if (p(x) == 0.0)
            raise(ErrorCode::InteriorZero, "score needs an interval support");
}

}  // namespace

ScoreProfile scaled_score(const Pmf& p) {
    require_interval_support(p);
    double lambda = moments(p).mean;
    if (!(lambda > 0.0)) raise(ErrorCode::ZeroMean, "scaled score of a zero-mean pmf");

    const int n = p.support_end();
    ScoreProfile out;
    out.lambda = lambda;
    out.rho.assign(p.size(), 0.0);
    double fisher = 0.0;
    for (int x = 0; x <= n; ++x) {
        if (p(x) == 0.0) continue;
        // past the truncation point the tagged analytic mass keeps the score
        // consistent with the untruncated law; exact-finite ends give -1
        double next = x < n ? p(x + 1) : analytic_mass(p, x + 1).value_or(0.0);
        double rho = (x + 1.0) * next / (lambda * p(x)) - 1.0;
        out.rho[x] = rho;
        fisher += p(x) * rho * rho;
    }
    out.fisher = lambda * fisher;
    return out;
}

double scaled_fisher(const Pmf& p) { return scaled_score(p).fisher; }

double johnstone_information(const Pmf& p) {
    const int n = p.support_end();
    // the x = N+1 term is the boundary: zero mass there makes I infinite for
    // exact-finite laws, tagged families contribute their analytic mass, and
    // an untagged truncation omits the term (covered by the tail budget)
    const int x_max = p.kind() == PmfKind::ExactFinite || has_full_analytic_support(p)
                          ? n + 1
                          : n;
    double sum = 0.0;
    for (int x = 0; x <= x_max; ++x) {
        double px = x <= n ? p(x) : analytic_mass(p, x).value_or(0.0);
        double prev = p(x - 1);
        if (px <= 0.0) {
            if (prev > 0.0) return kInf;
            continue;
        }
        sum += prev * prev / px;
    }
    return sum - 1.0;
}

double fisher_subadditivity_gap(std::span<const Pmf> parts, FisherKind kind) {
    if (parts.size() < 2)
        raise(ErrorCode::BadParameter, "subadditivity needs at least two parts");

    if (kind == FisherKind::Johnstone) {
        if (parts.size() != 2)
            raise(ErrorCode::BadParameter,
                  "johnstone subadditivity is a two-part statement");
        double i1 = johnstone_information(parts[0]);
        double i2 = johnstone_information(parts[1]);
        if (!std::isfinite(i1) || !std::isfinite(i2))
            raise(ErrorCode::InfiniteInformation,
                  "johnstone subadditivity needs finite information on both parts");
        double i12 = johnstone_information(convolve(parts[0], parts[1]));
        return (i1 + i2) / 4.0 - i12;
    }

    Pmf total = parts[0];
    double weighted = 0.0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        ScoreProfile s = scaled_score(parts[i]);
        weighted += s.lambda * s.fisher;
        if (i > 0) total = convolve(total, parts[i]);
    }
    ScoreProfile st = scaled_score(total);
    return weighted / st.lambda - st.fisher;
}

PoissonApproxBounds poisson_approx_bounds(const Pmf& p, double trunc_tol) {
    ScoreProfile s = scaled_score(p);
    Pmf target = poisson_pmf_covering(s.lambda, trunc_tol, p.size() + 1);
    PoissonApproxBounds out;
    out.lambda = s.lambda;
    out.fisher = s.fisher;
    out.rel_ent = relative_entropy(p, target);
    out.tv = tv_distance(p, target);
    out.pinsker = std::sqrt(std::max(out.rel_ent, 0.0) / 2.0);
    out.budget = p.tail_bound() + target.tail_bound();
    out.chain_holds = out.rel_ent <= out.fisher + 1e-10 && out.tv <= out.pinsker + 1e-10;
    return out;
}

}  // namespace dit
