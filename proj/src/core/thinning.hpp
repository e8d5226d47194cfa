#pragma once

#include <span>
#include <vector>

#include "core/pmf.hpp"

namespace dit {

// Thinning: (T_alpha P)(x) = sum_y C(y, x) alpha^x (1-alpha)^(y-x) P(y).
// Quadratic in the support length; family tags that thinning maps onto the
// same family (poisson, bernoulli, binomial) are carried along.
Pmf thin(const Pmf& p, double alpha);

// Mean-preserving interpolation P_alpha = law(T_alpha X + T_{1-alpha} Z) with
// Z Poisson of the same mean: P_1 = P, P_0 = Poisson.
struct InterpolationState {
    double alpha;
    double lambda;  // common mean of every P_alpha
    Pmf law;
};

InterpolationState interpolate(const Pmf& p, double alpha, double trunc_tol = 1e-12);

// Max-norm residual of the interpolation heat equation
//   d/dalpha P_alpha(x) = (lambda/alpha) [u(x-1) - u(x)],  u = P_alpha rho_alpha
// with the time derivative replaced by a central difference of width step.
double pde_residual(const Pmf& p, double alpha, double step, double trunc_tol = 1e-12);

// Free energy along the interpolation: Lambda(alpha) = D(P_alpha || Pi) +
// H(P_alpha), which collapses to lambda - lambda log lambda +
// sum_x P_alpha(x) log x!.  Two independent derivative evaluations per grid
// point: the covariance identity and a second-order finite difference.
struct FreeEnergyPoint {
    double alpha;
    double value;
    double deriv_cov;
    double deriv_fd;
};

struct FreeEnergyPath {
    double lambda;
    double value_at_zero;  // Lambda(0) = H(Poisson), computed directly
    double fd_step;
    std::vector<FreeEnergyPoint> points;
};

FreeEnergyPath free_energy_path(const Pmf& p, std::span<const double> grid,
                                double trunc_tol = 1e-12, double fd_step = 1e-4);

}  // namespace dit
