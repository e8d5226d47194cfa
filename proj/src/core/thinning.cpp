#include "core/thinning.hpp"

#include <algorithm>
#include <cmath>

#include "core/score.hpp"

namespace dit {

namespace {

void check_alpha(double alpha, double lo, double hi) {
    if (!std::isfinite(alpha) || alpha < lo || alpha > hi)
        raise(ErrorCode::AlphaOutOfRange, "alpha must lie in the interpolation range");
}

}  // namespace

Pmf thin(const Pmf& p, double alpha) {
    check_alpha(alpha, 0.0, 1.0);
    const auto& w = p.probs();
    std::vector<double> out(w.size(), 0.0);
    // row holds the Binomial(y, alpha) masses, updated in place by the
    // Pascal recurrence as y grows
    std::vector<double> row(w.size(), 0.0);
    row[0] = 1.0;
    std::size_t rlen = 1;
    for (std::size_t y = 0; y < w.size(); ++y) {
        if (y > 0) {
            if (rlen < row.size()) ++rlen;
            for (std::size_t x = rlen - 1; x > 0; --x)
                row[x] = alpha * row[x - 1] + (1.0 - alpha) * row[x];
            row[0] *= 1.0 - alpha;
        }
        if (w[y] == 0.0) continue;
        for (std::size_t x = 0; x < rlen; ++x) out[x] += w[y] * row[x];
    }

    std::optional<FamilyTag> tag;
    if (p.family() && alpha > 0.0) {
        const FamilyTag& t = *p.family();
        if (t.name == FamilyName::Poisson)
            tag = FamilyTag{FamilyName::Poisson, {alpha * t.params[0]}};
        else if (t.name == FamilyName::Bernoulli)
            tag = FamilyTag{FamilyName::Bernoulli, {alpha * t.params[0]}};
        else if (t.name == FamilyName::Binomial)
            tag = FamilyTag{FamilyName::Binomial, {t.params[0], alpha * t.params[1]}};
    }
    return Pmf::validated(std::move(out), p.tail_bound(), p.kind(), std::move(tag));
}

InterpolationState interpolate(const Pmf& p, double alpha, double trunc_tol) {
    check_alpha(alpha, 0.0, 1.0);
    double lambda = moments(p).mean;
    if (!(lambda > 0.0)) raise(ErrorCode::ZeroMean, "interpolation needs a positive mean");
    InterpolationState st;
    st.alpha = alpha;
    st.lambda = lambda;
    // The Poisson factor is truncated far below the requested tolerance.
    // Finite differences across nearby alphas divide by step^2, so truncation
    // jitter at the user tolerance would dominate the residual.
    double factor_tol = std::max(trunc_tol * 1e-8, 1e-300);
    if (alpha == 0.0)
        st.law = poisson_pmf(lambda, factor_tol);
    else if (alpha == 1.0)
        st.law = p;
    else
        st.law = convolve(thin(p, alpha), poisson_pmf((1.0 - alpha) * lambda, factor_tol));
    return st;
}

double pde_residual(const Pmf& p, double alpha, double step, double trunc_tol) {
    check_alpha(alpha, 0.0, 1.0);
    if (alpha <= 0.0 || alpha >= 1.0)
        raise(ErrorCode::AlphaOutOfRange, "residual is defined on the open interval");
    if (!(step > 0.0) || alpha - step <= 0.0 || alpha + step >= 1.0)
        raise(ErrorCode::AlphaTooClose,
              "finite-difference stencil leaves the interpolation range");

    InterpolationState mid = interpolate(p, alpha, trunc_tol);
    Pmf lo = interpolate(p, alpha - step, trunc_tol).law;
    Pmf hi = interpolate(p, alpha + step, trunc_tol).law;

    ScoreProfile s = scaled_score(mid.law);
    std::vector<double> u(mid.law.size());
    for (std::size_t x = 0; x < u.size(); ++x) u[x] = mid.law.probs()[x] * s.rho[x];
    auto u_at = [&](int x) { return x >= 0 && x < static_cast<int>(u.size()) ? u[x] : 0.0; };

    int n = std::max({lo.support_end(), hi.support_end(), mid.law.support_end()});
    double resid = 0.0;
    for (int x = 0; x <= n; ++x) {
        double dt = (hi(x) - lo(x)) / (2.0 * step);
        double rhs = mid.lambda / alpha * (u_at(x - 1) - u_at(x));
        resid = std::max(resid, std::abs(dt - rhs));
    }
    return resid;
}

namespace {

// Lambda(alpha) with the constant part folded in; the interpolation preserves
// the mean, so only the log x! moment varies along the path.
double free_energy_value(const Pmf& law, double lambda) {
    double s = 0.0;
    const auto& w = law.probs();
    for (std::size_t x = 0; x < w.size(); ++x)
        if (w[x] > 0.0) s += w[x] * std::lgamma(x + 1.0);
    return lambda - lambda * std::log(lambda) + s;
}

}  // namespace

FreeEnergyPath free_energy_path(const Pmf& p, std::span<const double> grid,
                                double trunc_tol, double fd_step) {
    double lambda = moments(p).mean;
    if (!(lambda > 0.0)) raise(ErrorCode::ZeroMean, "interpolation needs a positive mean");
    if (!(fd_step > 0.0) || fd_step >= 0.25)
        raise(ErrorCode::BadParameter, "finite-difference step outside (0, 0.25)");

    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            raise(ErrorCode::BadParameter, "grid must be strictly increasing");

    FreeEnergyPath path;
    path.lambda = lambda;
    path.fd_step = fd_step;
    path.value_at_zero = free_energy_value(poisson_pmf(lambda, trunc_tol), lambda);

    auto value_at = [&](double a) {
        return free_energy_value(interpolate(p, a, trunc_tol).law, lambda);
    };

    for (double alpha : grid) {
        if (!(alpha > 0.0) || alpha > 1.0)
            raise(ErrorCode::AlphaOutOfRange, "grid points must lie in (0, 1]");
        FreeEnergyPoint pt;
        pt.alpha = alpha;
        InterpolationState st = interpolate(p, alpha, trunc_tol);
        pt.value = free_energy_value(st.law, lambda);

        // covariance form of the derivative: (lambda/alpha) *
        // sum_x P_alpha(x) rho_alpha(x) log((x+1)/lambda)
        ScoreProfile s = scaled_score(st.law);
        double cov = 0.0;
        const auto& w = st.law.probs();
        for (std::size_t x = 0; x < w.size(); ++x)
            if (w[x] > 0.0)
                cov += w[x] * s.rho[x] * std::log((x + 1.0) / lambda);
        pt.deriv_cov = lambda / alpha * cov;

        double h = fd_step;
        if (alpha - h > 0.0 && alpha + h <= 1.0) {
            pt.deriv_fd = (value_at(alpha + h) - value_at(alpha - h)) / (2.0 * h);
        } else if (alpha + h > 1.0) {
            if (alpha - 2.0 * h <= 0.0)
                raise(ErrorCode::AlphaTooClose, "grid point too close to both endpoints");
            pt.deriv_fd = (3.0 * pt.value - 4.0 * value_at(alpha - h) +
                           value_at(alpha - 2.0 * h)) /
                          (2.0 * h);
        } else {
            pt.deriv_fd = (-3.0 * pt.value + 4.0 * value_at(alpha + h) -
                           value_at(alpha + 2.0 * h)) /
                          (2.0 * h);
        }
        path.points.push_back(pt);
    }
    return path;
}

}  // namespace dit
