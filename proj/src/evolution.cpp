#include "revlab/evolution.hpp"

#include "revlab/errors.hpp"

namespace revlab {

namespace {

void check_order(const FourierSeries& f) {
    if (f.order() > kMaxPhaseIndex)
        throw guard_error("truncation order beyond the exact phase-reduction guarantee (2^16)");
}

}  // namespace

FourierSeries evolve_bo(const FourierSeries& u0, const TimeSpec& t) {
    if (!u0.real_valued()) throw validation_error("the dispersive flow expects a real-flagged series");
    check_order(u0);
    const int order = u0.order();
    Eigen::VectorXcd c(2 * order + 1);
    c[order] = u0.coeff(0);
    for (int n = 1; n <= order; ++n) {
        const Complex mult = t.bo_multiplier(n);
        c[order + n] = mult * u0.coeff(n);
        c[order - n] = std::conj(mult) * u0.coeff(-n);
    }
    return FourierSeries(order, std::move(c), true);
}

FourierSeries evolve_schrodinger(const FourierSeries& v0, const TimeSpec& t) {
    check_order(v0);
    const int order = v0.order();
    Eigen::VectorXcd c(2 * order + 1);
    for (int n = -order; n <= order; ++n)
        c[order + n] = t.schrodinger_multiplier(n) * v0.coeff(n);
    return FourierSeries(order, std::move(c), false);
}

FourierSeries bo_from_schrodinger(const FourierSeries& v, Complex mean) {
    const int order = v.order();
    Eigen::VectorXcd c(2 * order + 1);
    c[order] = Complex{2.0 * v.coeff(0).real() - mean.real(), 0.0};
    for (int n = 1; n <= order; ++n) {
        c[order + n] = v.coeff(n);
        c[order - n] = std::conj(v.coeff(n));
    }
    return FourierSeries(order, std::move(c), true);
}

}  // namespace revlab
