#pragma once

#include <vector>

#include "core/pmf.hpp"
#include "core/rng.hpp"

namespace dit {

// Generic random pmf: uniform weights on a random prefix support, normalized.
// Almost never ultra log-concave once the support has four or more points.
Pmf random_pmf(Rng& rng, int max_support);

// Random ultra log-concave pmf.  log(P(x) / Pi_1(x)) is drawn as a concave
// piecewise-linear sequence, which is exactly the ULC condition; the choice
// of reference rate only shifts the log-ratio by a linear term.
Pmf random_ulc_pmf(Rng& rng, int max_support);

// Strictly positive test function with |log f| <= clamp and log-increments
// bounded by max_step; suitable for entropy-functional inequalities where the
// right side must dominate truncation noise.
std::vector<double> random_positive_f(Rng& rng, std::size_t length,
                                      double max_step = 0.4, double clamp = 2.0);

}  // namespace dit
