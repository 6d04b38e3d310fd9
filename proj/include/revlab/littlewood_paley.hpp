#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "revlab/fourier_series.hpp"

namespace revlab {

// Smooth cutoff: 1 on (-inf, 1], 0 on [2, inf), built from the e^{-1/x}
// bump step on [1, 2].
double smooth_cutoff(double xi);
// chi(xi) = smooth_cutoff(xi) - smooth_cutoff(2 xi); support exactly [1/2, 2].
double dyadic_bump(double xi);

// Dyadic multiplier bank: chi_j(n) = chi(2^-j n) for j >= 1 and
// chi_0(n) = smooth_cutoff(n), so that sum_{j=0}^{j_max} chi_j(n) = 1 for
// all 1 <= n <= 2^{j_max} (asserted at construction within 1e-12).
class LittlewoodPaleyBank {
  public:
    explicit LittlewoodPaleyBank(int j_max);  // 1 <= j_max <= 16

    int j_max() const { return j_max_; }
    double chi(int j, std::int64_t n) const;  // chi_j(|n|)
    // chi_j vanishes outside [support_lo, support_hi] (j >= 1).
    std::int64_t support_lo(int j) const;
    std::int64_t support_hi(int j) const;

  private:
    int j_max_ = 1;
    std::vector<Eigen::ArrayXd> table_;  // table_[j][n] for n <= 2^{j+1}
};

// Dyadic-shell projection: coefficients multiplied by chi_j(|n|).
// Requires 2^{j+1} <= f.order() (guard_error otherwise).
FourierSeries project(const LittlewoodPaleyBank& bank, const FourierSeries& f, int j);

enum class Lp { one, infinity };

struct BesovScale {
    int j = 0;
    double norm = 0.0;    // ||K_j f||_{L^p} on the grid
    double scaled = 0.0;  // 2^{alpha j} * norm
};
struct BesovReport {
    double alpha = 0.0;
    Lp p = Lp::infinity;
    std::vector<BesovScale> scales;
    double sup = 0.0;  // max of scaled values
};

// Per-scale seminorm data for B^alpha_{p,inf}, p in {1, inf}.  The grid must
// oversample the top usable scale: grid.size >= 4 * 2^{j_max}.  The L^inf
// norm is a grid max (a lower bound of the sup, within ~10% at 4x
// oversampling); the L^1 norm is the Riemann sum (2pi/M) sum |values|.
BesovReport besov_seminorm(const LittlewoodPaleyBank& bank, const FourierSeries& f,
                           double alpha, Lp p, const TorusGrid& grid);

struct HolderFit {
    double alpha_hat = 0.0;
    int j_lo = 0, j_hi = 0;  // fit range used
    // alpha outside (0,1) is a smoothness reading beyond the Holder scale
    bool outside_holder_range = false;
};

// Least-squares slope of log2 ||K_j f||_inf over the usable scales
// j in [4, min(j_max, log2(order) - 1) - 3]; alpha_hat = -slope.
// Requires at least 6 usable scales.
HolderFit holder_exponent_estimate(const LittlewoodPaleyBank& bank, const FourierSeries& f,
                                   const TorusGrid& grid);

struct BernsteinReport {
    int trials = 0;
    int violations = 0;       // ratios outside [2^j/c, c 2^j]
    double scaled_min = 0.0;  // min over trials of r * 2^-j
    double scaled_max = 0.0;
    double c_bound = 0.0;
};

// Spot check of the two-sided derivative bound on dyadic shells: for random
// shell series u at scale j, r = ||u'||_inf / ||u||_inf stays within
// [2^j / c, c 2^j].  Violations are reported, not thrown.
BernsteinReport bernstein_check(const LittlewoodPaleyBank& bank, int trials,
                                std::uint64_t seed = 1, double c_bound = 4.0);

}  // namespace revlab
