#include "core/logsobolev.hpp"

#include <cmath>

namespace dit {

double mlsi_phi(double u) { return std::log(u) - 1.0 + 1.0 / u; }

namespace {

void check_f(std::span<const double> f, std::size_t needed) {
    if (f.size() < needed)
        raise(ErrorCode::LengthMismatch,
              "test function must cover the support and one point past it");
    for (std::size_t x = 0; x < needed; ++x)
        if (!(f[x] > 0.0) || !std::isfinite(f[x]))
            raise(ErrorCode::NonPositiveF, "test function must be strictly positive");
}

}  // namespace

double bobkov_ledoux_gap(double lambda, std::span<const double> f, double trunc_tol) {
    Pmf pi = poisson_pmf(lambda, trunc_tol);
    check_f(f, pi.size() + 1);
    double rhs = 0.0;
    for (int x = 0; x <= pi.support_end(); ++x) {
        double d = f[x + 1] - f[x];
        rhs += pi(x) * d * d / f[x];
    }
    return lambda * rhs - ent_functional(pi, f);
}

MlsiGap clc_mlsi_gap(const Pmf& p, std::span<const double> f) {
    if (!has_full_analytic_support(p))
        raise(ErrorCode::NotCLogConcave,
              "inequality needs a family tag certifying support on all of Z+");
    MlsiGap out;
    out.c = c_log_concavity(p);  // raises on interior zeros
    if (!(out.c > 0.0))
        raise(ErrorCode::NotCLogConcave, "log-concavity constant is not positive");
    check_f(f, p.size() + 1);
    double rhs = 0.0;
    for (int x = 0; x <= p.support_end(); ++x)
        rhs += p(x) * f[x + 1] * mlsi_phi(f[x + 1] / f[x]);
    out.rhs = rhs / out.c;
    out.ent = ent_functional(p, f);
    out.gap = out.rhs - out.ent;
    return out;
}

}  // namespace dit
