#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "revlab/continued_fraction.hpp"
#include "revlab/littlewood_paley.hpp"
#include "revlab/time_spec.hpp"

namespace revlab {

// Complete quadratic exponential sums W_k = sum_{m=0}^{q-1}
// e^{2 pi i (k m + p m^2)/q}, with exponents reduced mod q in integers
// before touching the unit circle.  Invariants sum_k W_k = q and
// sum_k |W_k|^2 = q^2 are asserted at construction.
struct GaussWeights {
    std::uint64_t p = 0;
    std::uint64_t q = 1;
    Eigen::VectorXcd w;
};
GaussWeights gauss_weights(std::uint64_t p, std::uint64_t q);

// Summation-by-parts bound for an incomplete weighted quadratic sum
// sum_{n=m_lo}^{n_hi} w_n e^{2 pi i (a n^2 + b n)} when a is approximated by
// the convergent p/q:  d * c1 * ((n_hi - m_lo)/sqrt(q) + sqrt(q)) with
// d = sum |w_{n+1} - w_n|.  weights_by_n is indexed by n and must vanish
// outside [m_lo, n_hi].  c1 is an empirically calibrated constant
// (default 16, the smallest power of two dominating 10^4 randomized trials).
double incomplete_weighted_sum_bound(int m_lo, int n_hi,
                                     const Eigen::VectorXd& weights_by_n,
                                     const Convergent& approx, double c1 = 16.0);

struct WeylScale {
    int j = 0;
    double sup = 0.0;    // S_j = max over the x grid of |sum chi_j(n) e^{i n^2 t + i n x}|
    double ratio = 0.0;  // S_j * 2^{-j(1+delta)/2}
};
struct WeylScanReport {
    double delta = 0.0;
    int x_resolution = 0;
    std::vector<WeylScale> scales;
    double max_ratio() const;
    // A scan passes when every ratio stays below the configured constant.
    bool passes(double c_config) const;
};

// Direct-summation scan of the dyadic Weyl sums over a uniform x grid.
// j_max <= 14; x_resolution >= 2^{j_max + 2} so the grid max of a degree
// 2^{j_max+1} trigonometric polynomial is within ~10% of its sup.
WeylScanReport weyl_scan(const TimeSpec& t, double delta, int j_min, int j_max,
                         const LittlewoodPaleyBank& bank, int x_resolution);

}  // namespace revlab
