#pragma once

#include <vector>

#include "core/pmf.hpp"

namespace dit {

// Best constant in var_P(g) <= R sum_x P(x) (g(x+1) - g(x))^2 over the stored
// support, found as the top eigenvalue of the variance form in difference
// coordinates.  +infinity when an interior support gap lets the variance
// escape the energy.
struct PoincareEstimate {
    double constant;
    // optimizer g on {0..N} with g(0) = 0 and unit difference energy; empty
    // when the constant is infinite or the eigenproblem is degenerate
    std::vector<double> maximizer;
    double tail_note;  // truncation mass of the input, carried for reports
};

PoincareEstimate poincare_constant(const Pmf& p);

// Same functional with the forward difference replaced by the mixed operator
//   (nabla_n g)(x) = (1 - x/n)(g(x+1) - g(x)) + (x/n)(g(x) - g(x-1)),
// natural for laws supported on {0..n}.
PoincareEstimate poincare_constant_mixed(const Pmf& p, int n);

// Spectral bound R <= 1/c for c-log-concave laws with full support; only
// pmfs whose family tag certifies support on all of Z+ are accepted.
struct ClcPoincareBound {
    double c;
    double bound;  // 1/c
    PoincareEstimate estimate;
    bool holds;    // estimate.constant <= bound + 1e-6
};

ClcPoincareBound clc_poincare_bound(const Pmf& p);

}  // namespace dit
