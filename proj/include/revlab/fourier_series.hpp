#pragma once

#include <Eigen/Core>
#include <complex>
#include <string>
#include <string_view>

namespace revlab {

using Complex = std::complex<double>;

// Symmetric Fourier window  f(x) = sum_{n=-N}^{N} c(n) e^{inx}  with the
// coefficient scaling  c(n) = (1/2pi) \int_{-pi}^{pi} e^{-iny} f(y) dy
// (fixed here, used by every module).  Immutable value type; the operators
// below return new series.
class FourierSeries {
  public:
    // coeffs holds c(-N)..c(N).  When real_valued is set, Hermitian symmetry
    // c(-n) = conj(c(n)) is validated to 1e-14 relative at construction.
    FourierSeries(int order, Eigen::VectorXcd coeffs, bool real_valued);
    static FourierSeries zeros(int order, bool real_valued = true);

    int order() const { return order_; }
    bool real_valued() const { return real_; }
    const Eigen::VectorXcd& coeffs() const { return c_; }
    Complex coeff(int n) const { return c_[n + order_]; }
    Complex mean() const { return c_[order_]; }

    std::string to_json() const;  // {"N":..., "re":[...], "im":[...]}, n = -N..N
    static FourierSeries from_json(std::string_view text);

  private:
    int order_ = 1;
    bool real_ = false;
    Eigen::VectorXcd c_;
};

// Uniform grid on the period: nodes x_m = -pi + offset + 2pi*m/size with
// offset in [0, 2pi/size).  midpoint() staggers nodes half a cell.
struct TorusGrid {
    int size = 0;
    double offset = 0.0;

    static TorusGrid midpoint(int m);
    static TorusGrid with_offset(int m, double offset);
    double node(int m) const { return -M_PI + offset + 2.0 * M_PI * m / size; }
    Eigen::VectorXd nodes() const;
};

// Partial-sum evaluation at the grid nodes.  Requires a real-flagged series;
// uses a radix-2 transform when size is a power of two and direct summation
// otherwise (the two paths agree to 1e-10 and are cross-tested).
Eigen::VectorXd evaluate(const FourierSeries& f, const TorusGrid& grid);

// Same, for arbitrary (not necessarily real-flagged) series.
Eigen::VectorXcd evaluate_complex(const FourierSeries& f, const TorusGrid& grid);

// Fourier multipliers.
FourierSeries hilbert(const FourierSeries& f);        // c(n) -> -i sgn(n) c(n)
FourierSeries szego_project(const FourierSeries& f);  // keep n >= 0 only
FourierSeries derivative(const FourierSeries& f);     // c(n) -> i n c(n)

// sqrt(2pi * sum |c(n)|^2)  (Parseval under the coefficient scaling above).
double l2_norm(const FourierSeries& f);

}  // namespace revlab
