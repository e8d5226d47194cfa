#pragma once

#include <span>
#include <vector>

#include "core/pmf.hpp"

namespace dit {

// Scaled score of P with mean lambda:
//   rho(x) = (x+1) P(x+1) / (lambda P(x)) - 1,
// set to 0 where P(x) = 0 (those points carry no weight in any functional).
// Requires an interval support; when it starts at 0 the profile satisfies
// sum_x P(x) rho(x) = 0.
struct ScoreProfile {
    std::vector<double> rho;  // one entry per stored support point
    double lambda;
    double fisher;  // K(P) = lambda * sum_x P(x) rho(x)^2
};

ScoreProfile scaled_score(const Pmf& p);

double scaled_fisher(const Pmf& p);

// Johnstone-MacGibbon information I(P) = sum_x P(x-1)^2 / P(x) - 1.
// +infinity whenever mass sits immediately below a zero; in particular every
// exact-finite pmf has I = +infinity through the x = N+1 term.
double johnstone_information(const Pmf& p);

enum class FisherKind { Scaled, Johnstone };

// Slack in the relevant subadditivity statement, >= 0 when it holds:
//   Scaled:    (1/lambda_S) sum_i lambda_i K(P_i) - K(P_1 * ... * P_n)
//   Johnstone: (I(P) + I(Q)) / 4 - I(P * Q), exactly two parts, both finite
double fisher_subadditivity_gap(std::span<const Pmf> parts, FisherKind kind);

// One-stop chain D(P || Pi_lambda) <= K(P) and TV <= sqrt(D / 2) against the
// Poisson with the same mean.
struct PoissonApproxBounds {
    double lambda;
    double fisher;
    double rel_ent;
    double tv;
    double pinsker;   // sqrt(max(rel_ent, 0) / 2)
    double budget;    // truncation mass involved
    bool chain_holds;
};

PoissonApproxBounds poisson_approx_bounds(const Pmf& p, double trunc_tol = 1e-12);

}  // namespace dit
