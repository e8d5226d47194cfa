#include "core/random_pmf.hpp"

#include <algorithm>
#include <cmath>

namespace dit {

Pmf random_pmf(Rng& rng, int max_support) {
    int n = rng.uniform_int(1, std::max(1, max_support));
    std::vector<double> w(static_cast<std::size_t>(n) + 1);
    double sum = 0.0;
    for (double& x : w) {
        x = rng.uniform(0.05, 1.0);
        sum += x;
    }
    for (double& x : w) x /= sum;
    return make_pmf(std::move(w));
}

Pmf random_ulc_pmf(Rng& rng, int max_support) {
    int n = rng.uniform_int(2, std::max(2, max_support));
    // concave piecewise-linear log-ratio against Poisson(1): slopes decrease
    std::vector<double> logratio(static_cast<std::size_t>(n) + 1, 0.0);
    double slope = rng.uniform(-1.0, 1.5);
    for (int x = 1; x <= n; ++x) {
        logratio[x] = logratio[x - 1] + slope;
        slope -= rng.uniform(0.0, 1.0);
    }
    std::vector<double> w(logratio.size());
    double sum = 0.0;
    for (int x = 0; x <= n; ++x) {
        w[x] = std::exp(logratio[x] - std::lgamma(x + 1.0));  // times e^-1, dropped
        sum += w[x];
    }
    for (double& x : w) x /= sum;
    return make_pmf(std::move(w));
}

std::vector<double> random_positive_f(Rng& rng, std::size_t length, double max_step,
                                      double clamp) {
    std::vector<double> f(length);
    double u = rng.uniform(-1.0, 1.0);
    for (std::size_t x = 0; x < length; ++x) {
        f[x] = std::exp(u);
        u = std::clamp(u + rng.uniform(-max_step, max_step), -clamp, clamp);
    }
    return f;
}

}  // namespace dit
