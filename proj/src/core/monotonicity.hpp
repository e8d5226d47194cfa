#pragma once

#include <span>
#include <vector>

#include "core/pmf.hpp"

namespace dit {

// Entropy gap to the Poisson with the same mean, H(Pi_lambda) - H(P), with
// the hypothesis class the gap's sign is guaranteed under:
//   Ulc        - ultra log-concave input (gap >= 0)
//   SizeBiasSt - size-biased law stochastically below the input (gap >= 0)
//   None       - no guarantee
enum class MaxentHypothesis { Ulc, SizeBiasSt, None };

struct MaxentGap {
    double gap;
    MaxentHypothesis hypothesis;
    double budget;  // truncation mass behind both entropies
};

MaxentGap maxent_gap(const Pmf& p, double trunc_tol = 1e-12);

// The n-th thinned convolution law: n-fold convolution of T_{1/n} P, exact.
Pmf thin_law(const Pmf& p, int n);

// D(thin_law || Pi) and H(thin_law) for n = 1..n_max; relative entropy is
// nonincreasing in n for any input, entropy nondecreasing for ULC inputs.
struct ThinLawPoint {
    int n;
    double rel_ent;
    double ent;
};

std::vector<ThinLawPoint> thin_law_sequence(const Pmf& p, int n_max,
                                            double trunc_tol = 1e-12);

// Leave-one-out comparison for S = sum_i T_{alpha_i} X_i with sum alpha_i = 1:
// n+1 independent inputs, each dropped in turn with the remaining thinning
// weights rescaled by alpha_(j) = 1 - alpha_j.
struct LeaveOneOutInstance {
    std::vector<Pmf> parts;
    std::vector<double> alphas;
};

void validate_leave_one_out(const LeaveOneOutInstance& inst);

enum class LooKind { Entropy, RelativeEntropy };

// Entropy kind (all parts must be ULC):
//   n H(S) - sum_j alpha_(j) H(S_j)            >= 0
// Relative-entropy kind (any independent parts):
//   sum_j alpha_(j) D(S_j || Pi) - n D(S || Pi) >= 0
double leave_one_out_gap(const LeaveOneOutInstance& inst, LooKind kind,
                         double trunc_tol = 1e-12);

}  // namespace dit
