#include "core/poincare.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

namespace dit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// variance of g in difference coordinates d(x) = g(x+1) - g(x):
//   var_P(g) = sum_{y,z} d(y) d(z) [Fbar(max(y,z)) - Fbar(y) Fbar(z)]
// with Fbar the survival function; the kernel is the covariance matrix of
// the indicators 1{X > y}, hence positive semidefinite.
Eigen::MatrixXd variance_kernel(const Pmf& p, int dim) {
    // fbar[y] = P(X > y), accumulated from the top so each value is a fresh
    // sum of positive terms
    std::vector<double> tail_from(p.support_end() + 2, p.tail_bound());
    for (int x = p.support_end(); x >= 0; --x) tail_from[x] = tail_from[x + 1] + p(x);
    std::vector<double> fbar(dim);
    for (int y = 0; y < dim; ++y)
        fbar[y] = y + 1 <= p.support_end() + 1 ? tail_from[y + 1] : p.tail_bound();

    Eigen::MatrixXd m(dim, dim);
    for (int y = 0; y < dim; ++y)
        for (int z = 0; z <= y; ++z) {
            double v = fbar[y] - fbar[y] * fbar[z];
            m(y, z) = v;
            m(z, y) = v;
        }
    return m;
}

std::vector<double> cumulative_g(const Eigen::VectorXd& d, int offset, int length) {
    std::vector<double> g(length, 0.0);
    for (int x = 1; x < length; ++x) {
        double step = x - 1 - offset >= 0 && x - 1 - offset < d.size()
                          ? d[x - 1 - offset]
                          : 0.0;
        g[x] = g[x - 1] + step;
    }
    // pin the sign so the maximizer is a deterministic function of the input
    for (double v : g) {
        if (v > 0.0) break;
        if (v < 0.0) {
            for (double& w : g) w = -w;
            break;
        }
    }
    return g;
}

int first_positive(const Pmf& p) {
    int lo = 0;
    while (lo <= p.support_end() && p(lo) == 0.0) ++lo;
    return lo;
}

}  // namespace

PoincareEstimate poincare_constant(const Pmf& p) {
    const int n = p.support_end();
    const int lo = first_positive(p);
    if (lo == n)
        raise(ErrorCode::DegenerateSupport, "poincare constant of a point mass");

    // an interior zero splits the support: a step function there has positive
    // variance and zero difference energy
    for (int x = lo; x <= n; ++x)
        if (p(x) == 0.0) return {kInf, {}, p.tail_bound()};

    // difference coordinates d(x), x in [lo, n-1]; entries below lo carry no
    // energy and no variance, so they are excluded from the eigenproblem
    const int dim = n - lo;
    Eigen::MatrixXd m = variance_kernel(p, n).block(lo, lo, dim, dim);
    Eigen::VectorXd wsqrt(dim);
    for (int x = 0; x < dim; ++x) wsqrt[x] = std::sqrt(p(lo + x));

    Eigen::MatrixXd a(dim, dim);
    for (int y = 0; y < dim; ++y)
        for (int z = 0; z < dim; ++z) a(y, z) = m(y, z) / (wsqrt[y] * wsqrt[z]);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success)
        raise(ErrorCode::Internal, "eigensolver failed to converge");
    const int top = dim - 1;
    double mu = solver.eigenvalues()[top];
    Eigen::VectorXd v = solver.eigenvectors().col(top);

    // certificate: the reported top pair must satisfy the eigen equation to
    // near machine precision, otherwise the estimate is not trustworthy
    double scale = (a * v).cwiseAbs().maxCoeff() + std::abs(mu) * v.cwiseAbs().maxCoeff();
    double resid = (a * v - mu * v).cwiseAbs().maxCoeff();
    if (resid > 1e-10 * std::max(scale, 1e-300))
        raise(ErrorCode::Internal, "eigen residual above certificate threshold");

    Eigen::VectorXd d = v.cwiseQuotient(wsqrt);
    return {std::max(mu, 0.0), cumulative_g(d, lo, n + 1), p.tail_bound()};
}

PoincareEstimate poincare_constant_mixed(const Pmf& p, int n) {
    if (n < 1) raise(ErrorCode::BadParameter, "mixed operator needs n >= 1");
    if (p.support_end() > n)
        raise(ErrorCode::SupportExceedsN, "pmf support extends past n");
    if (first_positive(p) == p.support_end())
        raise(ErrorCode::DegenerateSupport, "poincare constant of a point mass");

    Eigen::MatrixXd m = variance_kernel(p, n);

    // energy form: sum_x P(x) [(1 - x/n) d(x) + (x/n) d(x-1)]^2
    Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
    for (int x = 0; x <= n; ++x) {
        double w = p(x);
        if (w == 0.0) continue;
        double cf = 1.0 - static_cast<double>(x) / n;  // on d(x)
        double cb = static_cast<double>(x) / n;        // on d(x-1)
        if (x < n) e(x, x) += w * cf * cf;
        if (x > 0) e(x - 1, x - 1) += w * cb * cb;
        if (x > 0 && x < n) {
            e(x, x - 1) += w * cf * cb;
            e(x - 1, x) += w * cf * cb;
        }
    }

    Eigen::LLT<Eigen::MatrixXd> llt(e);
    if (llt.info() != Eigen::Success) {
        // the energy form is singular: some difference direction is free,
        // and the variance form is positive on it unless mass is degenerate
        return {kInf, {}, p.tail_bound()};
    }

    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, e);
    if (solver.info() != Eigen::Success)
        raise(ErrorCode::Internal, "generalized eigensolver failed to converge");
    const int top = n - 1;
    double mu = solver.eigenvalues()[top];
    Eigen::VectorXd d = solver.eigenvectors().col(top);  // E-orthonormal

    double scale = (m * d).cwiseAbs().maxCoeff() +
                   std::abs(mu) * (e * d).cwiseAbs().maxCoeff();
    double resid = (m * d - mu * (e * d)).cwiseAbs().maxCoeff();
    if (resid > 1e-10 * std::max(scale, 1e-300))
        raise(ErrorCode::Internal, "eigen residual above certificate threshold");

    return {std::max(mu, 0.0), cumulative_g(d, 0, n + 1), p.tail_bound()};
}

ClcPoincareBound clc_poincare_bound(const Pmf& p) {
    if (!has_full_analytic_support(p))
        raise(ErrorCode::NotCLogConcave,
              "bound needs a family tag certifying support on all of Z+");
    for (int x = 0; x <= p.support_end(); ++x)
        if (p(x) == 0.0)
            raise(ErrorCode::NotCLogConcave,
                  "stored support must be strictly positive");
    ClcPoincareBound out;
    out.c = c_log_concavity(p);
    if (!(out.c > 0.0))
        raise(ErrorCode::NotCLogConcave, "log-concavity constant is not positive");
    out.bound = 1.0 / out.c;
    out.estimate = poincare_constant(p);
    out.holds = out.estimate.constant <= out.bound + 1e-6;
    return out;
}

}  // namespace dit
