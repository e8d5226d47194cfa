#pragma once

#include <span>

#include "core/pmf.hpp"

namespace dit {

// Gap of the Poisson modified log-Sobolev inequality
//   Ent_Pi(f) <= lambda sum_x Pi(x) (f(x+1) - f(x))^2 / f(x)
// for strictly positive f; nonnegative for every admissible f.
double bobkov_ledoux_gap(double lambda, std::span<const double> f,
                         double trunc_tol = 1e-12);

// Gap of the sharper inequality for c-log-concave laws with full support:
//   Ent_P(f) <= (1/c) sum_x P(x) f(x+1) phi(f(x+1)/f(x)),
//   phi(u) = log u - 1 + 1/u.
struct MlsiGap {
    double c;
    double rhs;
    double ent;
    double gap;  // rhs - ent
};

MlsiGap clc_mlsi_gap(const Pmf& p, std::span<const double> f);

// phi is nonnegative with phi(1) = 0; the pointwise bound
// u log u - u + 1 <= (u - 1)^2 is what makes the sharper right side sit
// below the quadratic one at c = 1/lambda.
double mlsi_phi(double u);

}  // namespace dit
