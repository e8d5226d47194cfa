#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "core/pmf.hpp"
#include "core/rng.hpp"

namespace dit {

// Affine path p(t) = (1-t) p0 + t p1 through Bernoulli success parameters.
// monotone means every slope p1[i] - p0[i] has the same sign; zero slopes are
// neutral and a constant path counts as monotone.
struct PathSpec {
    std::vector<double> p0;
    std::vector<double> p1;
    bool monotone = true;

    std::size_t dim() const { return p0.size(); }
    std::vector<double> at(double t) const;
    std::vector<double> slopes() const;
};

PathSpec so_path(std::span<const double> p0, std::span<const double> p1);

// First and second t-derivatives of the Bernoulli-sum mass function in
// gradient form: dP(k) = g(k-1) - g(k), d2P(k) = h(k-2) - 2h(k-1) + h(k),
// where g(k) sums slope-weighted leave-one-out masses and h(k) sums ordered
// slope-pair-weighted leave-two-out masses.  The residuals are the largest
// absolute deviation of those forms from central finite differences of the
// mass function (a polynomial in t, so the stencil may step past [0,1]).
struct DerivativeDecomposition {
    Pmf pmf;
    std::vector<double> g;
    std::vector<double> h;
    double fd_residual_1 = 0.0;
    double fd_residual_2 = 0.0;
};

DerivativeDecomposition path_pmf_derivatives(const PathSpec& path, double t,
                                             double step = 1e-4);

// Minimum over k of
//   2 g(k) g(k+1) f(k+1) - g(k)^2 f(k+2) - g(k+1)^2 f(k)
//     - h(k) (f(k+1)^2 - f(k) f(k+2))
// with f the path mass function at t.  Nonnegative along monotone paths; the
// interesting regime is t strictly inside (0,1).
struct KeySlack {
    double min_slack;
    int argmin_k;
};

KeySlack key_inequality_slack(const PathSpec& path, double t);

enum class EntropyKind { Shannon, Renyi, Tsallis };

// Entropy of a raw weight vector; entries <= 0 are skipped.  Renyi is
// log(sum w^q)/(1-q), Tsallis (1 - sum w^q)/(q-1); q = 1 means Shannon.
double entropy_functional(std::span<const double> w, EntropyKind kind, double q);

struct ProfilePoint {
    double t;
    double value;
    double second_difference;  // NaN at the two endpoints
};

// Entropy along a uniform t-grid on [0,1] with central second differences
// (divided by the grid step squared) at interior points.
std::vector<ProfilePoint> entropy_profile(const PathSpec& path, int grid_size,
                                          EntropyKind kind, double q);

// A convexity witness: a path and interior grid point where the entropy's
// second difference exceeds the threshold.  curvature is the grid second
// difference (replayable through entropy_profile at grid 101);
// refined_curvature is a Richardson-extrapolated second derivative at the
// same t, free of the O(step^2) grid bias.
struct ConvexityWitness {
    PathSpec path;
    double q;
    double t;
    double curvature;
    double refined_curvature;
};

struct WitnessScan {
    std::optional<ConvexityWitness> witness;
    double max_curvature;  // largest interior second difference seen
    int trials;
};

// Richardson-extrapolated second derivative of the path entropy at interior
// t, accurate to rounding for polynomial profiles.
double refined_path_curvature(const PathSpec& path, EntropyKind kind, double q,
                              double t);

// Randomized search for a convexity witness at fixed q: `trials` paths with
// coordinates snapped toward {0,1} half the time, entropy on a 101-point
// grid.  A grid point is a candidate when its second difference exceeds
// 1e-7; it only becomes the witness when the refined curvature stays above
// the threshold, since the raw grid bias reaches 1e-2 on degree-2m
// polynomial profiles and would otherwise drown the test.
WitnessScan convexity_witness_scan(EntropyKind kind, double q, int m, int trials,
                                   std::uint64_t seed);

struct CriticalQResult {
    double q_hat;
    double bracket_lo;
    double bracket_hi;
    std::optional<ConvexityWitness> witness;  // at the lowest witnessing level
};

// Bisection over q in [1, 6] for the smallest q where the randomized scan
// finds a convexity witness; every level replays the same `trials` paths so
// the bracketing predicate is monotone in q up to threshold effects.
CriticalQResult critical_q_search(EntropyKind kind, int m, int trials,
                                  std::uint64_t seed);

// H(p + step * direction) - H(p) for the Bernoulli-sum entropy, restricted to
// the regime where every coordinate stays in [0, 1/2] and the direction is
// coordinatewise nonnegative.
double entropy_increase(std::span<const double> p, std::span<const double> direction,
                        double step);

struct MonotoneViolation {
    std::vector<double> p;
    std::vector<double> direction;
    double step;
    double h_before;
    double h_after;
};

struct MonotoneCheckResult {
    int trials;
    std::vector<MonotoneViolation> violations;
};

// Randomized probe of entropy monotonicity under coordinatewise increases
// inside [0, 1/2]^m; every violation is kept with its full instance.
MonotoneCheckResult monotone_entropy_check(int m, int trials, std::uint64_t seed);

}  // namespace dit
