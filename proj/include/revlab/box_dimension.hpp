#pragma once

#include <Eigen/Core>
#include <cstdint>

namespace revlab {

// Uniformly sampled graph data for box counting.  x strictly increasing,
// all values finite (singular sentinels must be handled upstream).
struct SampledGraph {
    Eigen::VectorXd x, y;
    SampledGraph(Eigen::VectorXd x_in, Eigen::VectorXd y_in);
    int size() const { return static_cast<int>(x.size()); }
    double x_span() const { return x[x.size() - 1] - x[0]; }
};

// Smallest admissible box size, 2*(b-a)/N (two samples per column).
double numbox_min_eps(const SampledGraph& g);

// Tower box count: N_towers = floor((b-a)/eps) + 1 columns anchored at
// a = min x, tower k gathering samples with (k-1)eps + a <= x < k eps + a;
// each contributes floor((max y - min y)/eps) + 1 boxes.  guard_error when
// eps < 2(b-a)/N (fewer than two samples per column) or when a tower holds
// no sample (cannot happen for uniform x under the eps guard).
std::int64_t numbox(const SampledGraph& g, double eps);

// Default box-size ladder: `count` geometric points from 4(b-a)/N up to
// (b-a)/8, returned in decreasing order.
Eigen::VectorXd default_eps_grid(const SampledGraph& g, int count = 20);

struct DimensionFit {
    Eigen::VectorXd epsilons;                       // decreasing
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> counts;  // non-decreasing
    double dimension = 0.0;                         // OLS slope of log M vs log(1/eps)
    double r2 = 0.0;
};

// Ordinary least squares of log M(eps) against log(1/eps).  Requires at
// least 8 admissible box sizes; rejects degenerate (all-equal) counts and
// fits outside the sanity window (0.5, 2.5).
DimensionFit fit_dimension(const SampledGraph& g, const Eigen::VectorXd& eps_grid);

}  // namespace revlab
