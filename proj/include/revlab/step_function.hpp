#pragma once

#include <Eigen/Core>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "revlab/fourier_series.hpp"

namespace revlab {

// Piecewise-constant periodic function on (-pi, pi]: value v_j holds on the
// half-open plateau (a_{j-1}, a_j], cyclically.  Bounded variation by
// construction.
class PiecewiseConstant {
  public:
    PiecewiseConstant(std::vector<double> breakpoints, std::vector<double> values);
    static PiecewiseConstant indicator(double a, double b);  // 1 on (a, b]
    static PiecewiseConstant canonical_indicator();          // [-pi/2, pi/2]
    // "indicator:a,b"  or  "step:a1=v1,a2=v2,..."  (radians, decimal)
    static PiecewiseConstant parse(const std::string& text);

    int segments() const { return static_cast<int>(values_.size()); }
    const std::vector<double>& breakpoints() const { return breaks_; }
    const std::vector<double>& values() const { return values_; }

    double operator()(double x) const;  // plateau value, 2pi-periodic
    double total_variation() const;
    double mean() const;

    // Exact coefficient: c(0) = sum v_j len_j / 2pi and, for n != 0,
    // c(n) = sum_j v_j (e^{-i n a_{j-1}} - e^{-i n a_j}) / (2 pi i n).
    std::complex<double> fourier_coefficient(int n) const;
    FourierSeries truncate(int order) const;

    // (position a_j, jump v_{j+1} - v_j) for each breakpoint.
    std::vector<std::pair<double, double>> jumps() const;
    // Circular distance from x to the nearest breakpoint.
    double breakpoint_distance(double x) const;
    std::string describe() const;

  private:
    std::vector<double> breaks_;  // strictly increasing, in (-pi, pi]
    std::vector<double> values_;
};

// Value of the periodic Hilbert transform of an interval indicator,
//   H 1_{[a,b]}(x) = (1/pi) log| sin((x-a)/2) / sin((x-b)/2) |,
// with explicit signed-infinity sentinels at the breakpoints (the value
// drops to -inf at x -> a and climbs to +inf at x -> b).
struct CuspValue {
    enum class Kind { finite, plus_infinity, minus_infinity };
    Kind kind = Kind::finite;
    double value = 0.0;
    bool is_finite() const { return kind == Kind::finite; }
};
CuspValue hilbert_indicator(double a, double b, double x);  // -pi <= a < b < pi

// Closed-form H f at one point / on a grid.  Throws guard_error when the
// evaluation point is within 1e-12 of a breakpoint (logarithmic singularity);
// on an admissible grid the result is finite everywhere.
double hilbert_closed_form_at(const PiecewiseConstant& f, double x);
Eigen::VectorXd hilbert_closed_form(const PiecewiseConstant& f, const TorusGrid& grid);

}  // namespace revlab
