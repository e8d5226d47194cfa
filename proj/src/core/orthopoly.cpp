#include "core/orthopoly.hpp"

#include <cmath>

namespace dit {

std::vector<std::vector<double>> orthogonal_polynomials(OrthoFamily family,
                                                        std::span<const double> params,
                                                        int max_degree) {
    if (max_degree < 0) raise(ErrorCode::BadParameter, "max_degree must be >= 0");

    double n = 0.0, p = 0.0, lambda = 0.0;
    if (family == OrthoFamily::Charlier) {
        if (params.size() != 1)
            raise(ErrorCode::BadParameter, "charlier takes one parameter");
        lambda = params[0];
        if (!std::isfinite(lambda) || lambda <= 0.0)
            raise(ErrorCode::BadParameter, "charlier lambda must be positive");
    } else {
        if (params.size() != 2)
            raise(ErrorCode::BadParameter, "krawtchouk takes two parameters");
        n = params[0];
        p = params[1];
        if (!std::isfinite(n) || n < 1.0 || n != std::floor(n))
            raise(ErrorCode::BadParameter, "krawtchouk n must be a positive integer");
        if (!std::isfinite(p) || p < 0.0 || p > 1.0)
            raise(ErrorCode::BadParameter, "krawtchouk p must lie in [0, 1]");
        if (max_degree > static_cast<int>(n))
            raise(ErrorCode::BadParameter,
                  "krawtchouk degree exceeds the support size");
    }

    std::vector<std::vector<double>> rows;
    rows.push_back({1.0});
    if (max_degree == 0) return rows;

    auto center = [&](int k) {
        return family == OrthoFamily::Charlier ? k + lambda : p * n + k * (1.0 - 2.0 * p);
    };
    auto norm_step = [&](int k) {
        return family == OrthoFamily::Charlier ? k * lambda
                                               : k * (n - k + 1.0) * p * (1.0 - p);
    };

    rows.push_back({-center(0), 1.0});
    for (int k = 1; k < max_degree; ++k) {
        const auto& pk = rows[k];
        const auto& pk1 = rows[k - 1];
        std::vector<double> next(k + 2, 0.0);
        for (int j = 0; j <= k; ++j) {
            next[j + 1] += pk[j];            // x * p_k
            next[j] -= center(k) * pk[j];    // - a_k p_k
        }
        for (int j = 0; j <= k - 1; ++j) next[j] -= norm_step(k) * pk1[j];
        rows.push_back(std::move(next));
    }
    return rows;
}

double evaluate_polynomial(std::span<const double> coeffs, double x) {
    double v = 0.0;
    for (std::size_t j = coeffs.size(); j-- > 0;) v = v * x + coeffs[j];
    return v;
}

}  // namespace dit
