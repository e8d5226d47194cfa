#include "core/monotonicity.hpp"

#include <cmath>

#include "core/thinning.hpp"

namespace dit {

MaxentGap maxent_gap(const Pmf& p, double trunc_tol) {
    double lambda = moments(p).mean;
    if (!(lambda > 0.0)) raise(ErrorCode::ZeroMean, "maxent gap needs a positive mean");
    Pmf pi = poisson_pmf(lambda, trunc_tol);

    MaxentGap out;
    out.gap = entropy(pi) - entropy(p);
    out.budget = p.tail_bound() + pi.tail_bound();
    if (ulc_check(p))
        out.hypothesis = MaxentHypothesis::Ulc;
    else if (stochastic_order(p, size_bias(p), OrderKind::Stochastic))
        out.hypothesis = MaxentHypothesis::SizeBiasSt;
    else
        out.hypothesis = MaxentHypothesis::None;
    return out;
}

Pmf thin_law(const Pmf& p, int n) {
    if (n < 1) raise(ErrorCode::BadParameter, "thin law needs n >= 1");
    Pmf part = thin(p, 1.0 / n);
    Pmf acc = part;
    for (int i = 1; i < n; ++i) acc = convolve(acc, part);
    return acc;
}

std::vector<ThinLawPoint> thin_law_sequence(const Pmf& p, int n_max, double trunc_tol) {
    if (n_max < 1) raise(ErrorCode::BadParameter, "thin law sequence needs n_max >= 1");
    double lambda = moments(p).mean;
    if (!(lambda > 0.0)) raise(ErrorCode::ZeroMean, "thin laws need a positive mean");

    std::vector<ThinLawPoint> out;
    out.reserve(n_max);
    for (int n = 1; n <= n_max; ++n) {
        Pmf law = thin_law(p, n);
        Pmf pi = poisson_pmf_covering(lambda, trunc_tol, law.size());
        out.push_back({n, relative_entropy(law, pi), entropy(law)});
    }
    return out;
}

void validate_leave_one_out(const LeaveOneOutInstance& inst) {
    if (inst.parts.size() != inst.alphas.size())
        raise(ErrorCode::LengthMismatch, "one thinning weight per part");
    if (inst.parts.size() < 2)
        raise(ErrorCode::BadParameter, "leave-one-out needs at least two parts");
    double sum = 0.0;
    for (double a : inst.alphas) {
        if (!(a > 0.0)) raise(ErrorCode::BadParameter, "thinning weights must be positive");
        sum += a;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        raise(ErrorCode::BadParameter, "thinning weights must sum to one");
}

double leave_one_out_gap(const LeaveOneOutInstance& inst, LooKind kind,
                         double trunc_tol) {
    validate_leave_one_out(inst);
    const std::size_t parts = inst.parts.size();
    const int n = static_cast<int>(parts) - 1;

    if (kind == LooKind::Entropy)
        for (const Pmf& p : inst.parts)
            if (!ulc_check(p))
                raise(ErrorCode::NotULC,
                      "entropy comparison is only guaranteed for ULC parts");

    auto combined = [&](int skip, double scale) {
        Pmf acc;  // point mass at zero, the convolution identity
        for (std::size_t i = 0; i < parts; ++i) {
            if (static_cast<int>(i) == skip) continue;
            // alpha_i <= scale holds exactly, but the normalized weights carry
            // rounding, so the quotient may poke past 1 by an ulp
            double ratio = std::min(inst.alphas[i] / scale, 1.0);
            acc = convolve(acc, thin(inst.parts[i], ratio));
        }
        return acc;
    };

    auto rel_ent_to_poisson = [&](const Pmf& law) {
        double lambda = moments(law).mean;
        return relative_entropy(law, poisson_pmf_covering(lambda, trunc_tol, law.size()));
    };

    Pmf full = combined(-1, 1.0);
    if (kind == LooKind::Entropy) {
        double lhs = n * entropy(full);
        double rhs = 0.0;
        for (std::size_t j = 0; j < parts; ++j) {
            double rest = 1.0 - inst.alphas[j];
            rhs += rest * entropy(combined(static_cast<int>(j), rest));
        }
        return lhs - rhs;
    }

    if (!(moments(full).mean > 0.0))
        raise(ErrorCode::ZeroMean, "relative entropy comparison needs positive mean");
    double sum = 0.0;
    for (std::size_t j = 0; j < parts; ++j) {
        double rest = 1.0 - inst.alphas[j];
        sum += rest * rel_ent_to_poisson(combined(static_cast<int>(j), rest));
    }
    return sum - n * rel_ent_to_poisson(full);
}

}  // namespace dit
