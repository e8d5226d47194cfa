#pragma once

#include <span>
#include <vector>

#include "core/error.hpp"

namespace dit {

enum class OrthoFamily { Charlier, Krawtchouk };

// Monic orthogonal polynomials by the three-term recurrence, returned as
// coefficient rows in ascending powers; row k has k+1 entries and leading
// coefficient 1.
//   Charlier(lambda):      p_{k+1} = (x - (k + lambda)) p_k - k lambda p_{k-1}
//   Krawtchouk(n, p):      p_{k+1} = (x - (pn + k(1-2p))) p_k
//                                    - k (n - k + 1) p (1-p) p_{k-1}
// Krawtchouk degrees above n collapse to zero norm, so max_degree <= n there.
std::vector<std::vector<double>> orthogonal_polynomials(OrthoFamily family,
                                                        std::span<const double> params,
                                                        int max_degree);

double evaluate_polynomial(std::span<const double> coeffs, double x);

}  // namespace dit
