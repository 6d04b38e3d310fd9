#include "revlab/littlewood_paley.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "revlab/errors.hpp"

namespace revlab {

namespace {

double bump_half(double u) { return u > 0.0 ? std::exp(-1.0 / u) : 0.0; }

// smooth step: 0 for u <= 0, 1 for u >= 1
double smooth_step(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    const double a = bump_half(u);
    const double b = bump_half(1.0 - u);
    return a / (a + b);
}

int ilog2_floor(int n) {
    int j = 0;
    while ((1 << (j + 1)) <= n) ++j;
    return j;
}

// top usable shell given the bank and the series truncation: projections need
// 2^{j+1} <= order
int top_usable_scale(const LittlewoodPaleyBank& bank, const FourierSeries& f) {
    return std::min(bank.j_max(), ilog2_floor(f.order()) - 1);
}

double grid_norm(const Eigen::VectorXcd& vals, Lp p) {
    if (p == Lp::infinity) return vals.cwiseAbs().maxCoeff();
    return 2.0 * std::numbers::pi / static_cast<double>(vals.size()) * vals.cwiseAbs().sum();
}

}  // namespace

double smooth_cutoff(double xi) { return 1.0 - smooth_step(xi - 1.0); }

double dyadic_bump(double xi) { return smooth_cutoff(xi) - smooth_cutoff(2.0 * xi); }

LittlewoodPaleyBank::LittlewoodPaleyBank(int j_max) : j_max_(j_max) {
    if (j_max < 1 || j_max > 16) throw validation_error("bank depth must be in [1, 16]");
    table_.resize(static_cast<std::size_t>(j_max) + 1);
    for (int j = 0; j <= j_max; ++j) {
        const std::int64_t top = std::int64_t(1) << (j + 1);
        Eigen::ArrayXd row(top + 1);
        for (std::int64_t n = 0; n <= top; ++n) {
            row[n] = j == 0 ? smooth_cutoff(static_cast<double>(n))
                            : dyadic_bump(std::ldexp(static_cast<double>(n), -j));
        }
        table_[static_cast<std::size_t>(j)] = std::move(row);
    }
    // partition of unity over the covered band
    for (std::int64_t n = 1; n <= (std::int64_t(1) << j_max); ++n) {
        double s = 0.0;
        for (int j = 0; j <= j_max; ++j) s += chi(j, n);
        if (std::abs(s - 1.0) > 1e-12)
            throw validation_error("dyadic bank failed the partition-of-unity check");
    }
}

double LittlewoodPaleyBank::chi(int j, std::int64_t n) const {
    if (j < 0 || j > j_max_) throw validation_error("scale index out of range");
    const std::int64_t a = n < 0 ? -n : n;
    const auto& row = table_[static_cast<std::size_t>(j)];
    return a < row.size() ? row[a] : 0.0;
}

std::int64_t LittlewoodPaleyBank::support_lo(int j) const {
    return j == 0 ? 0 : (std::int64_t(1) << (j - 1));
}

std::int64_t LittlewoodPaleyBank::support_hi(int j) const { return std::int64_t(1) << (j + 1); }

FourierSeries project(const LittlewoodPaleyBank& bank, const FourierSeries& f, int j) {
    if (j < 0 || j > bank.j_max()) throw validation_error("scale index out of range");
    if (j >= 1 && bank.support_hi(j) > f.order())
        throw guard_error("shell exceeds the series truncation");
    const int order = f.order();
    Eigen::VectorXcd c(2 * order + 1);
    for (int n = -order; n <= order; ++n) c[order + n] = bank.chi(j, n) * f.coeff(n);
    return FourierSeries(order, std::move(c), f.real_valued());
}

BesovReport besov_seminorm(const LittlewoodPaleyBank& bank, const FourierSeries& f, double alpha,
                           Lp p, const TorusGrid& grid) {
    if (grid.size < 4 * (1 << bank.j_max()))
        throw validation_error("besov grid must oversample the top scale: M >= 4*2^j_max");
    BesovReport rep;
    rep.alpha = alpha;
    rep.p = p;
    const int top = top_usable_scale(bank, f);
    for (int j = 0; j <= top; ++j) {
        const FourierSeries kj = project(bank, f, j);
        const double norm = grid_norm(evaluate_complex(kj, grid), p);
        rep.scales.push_back({j, norm, std::exp2(alpha * j) * norm});
    }
    rep.sup = 0.0;
    for (const auto& s : rep.scales) rep.sup = std::max(rep.sup, s.scaled);
    return rep;
}

HolderFit holder_exponent_estimate(const LittlewoodPaleyBank& bank, const FourierSeries& f,
                                   const TorusGrid& grid) {
    const int top = top_usable_scale(bank, f);
    // low scales are bank-boundary-affected, top scales truncation-affected
    const int j_lo = 4, j_hi = top - 3;
    const int count = j_hi - j_lo + 1;
    if (count < 6) throw validation_error("holder estimate needs at least 6 usable scales");
    Eigen::VectorXd js(count), lognorm(count);
    for (int j = j_lo; j <= j_hi; ++j) {
        const FourierSeries kj = project(bank, f, j);
        const double norm = grid_norm(evaluate_complex(kj, grid), Lp::infinity);
        if (!(norm > 0.0)) throw validation_error("degenerate shell norm in holder estimate");
        js[j - j_lo] = j;
        lognorm[j - j_lo] = std::log2(norm);
    }
    const double jbar = js.mean(), lbar = lognorm.mean();
    const double slope = ((js.array() - jbar) * (lognorm.array() - lbar)).sum() /
                         (js.array() - jbar).square().sum();
    HolderFit fit;
    fit.alpha_hat = -slope;
    fit.j_lo = j_lo;
    fit.j_hi = j_hi;
    fit.outside_holder_range = !(fit.alpha_hat > 0.0 && fit.alpha_hat < 1.0);
    return fit;
}

BernsteinReport bernstein_check(const LittlewoodPaleyBank& bank, int trials, std::uint64_t seed,
                                double c_bound) {
    if (trials < 1) throw validation_error("bernstein check needs at least one trial");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    BernsteinReport rep;
    rep.trials = trials;
    rep.c_bound = c_bound;
    rep.scaled_min = 1e300;
    rep.scaled_max = 0.0;
    const int j_hi = std::min(bank.j_max() - 1, 10);
    for (int trial = 0; trial < trials; ++trial) {
        const int j = 3 + trial % std::max(1, j_hi - 2);  // cycle scales 3..j_hi
        const int order = 1 << (j + 1);
        Eigen::VectorXcd c = Eigen::VectorXcd::Zero(2 * order + 1);
        for (std::int64_t n = bank.support_lo(j); n <= bank.support_hi(j); ++n) {
            const Complex z{unit(rng), unit(rng)};
            c[order + n] = bank.chi(j, n) * z;
            c[order - n] = std::conj(c[order + n]);
        }
        const FourierSeries shell(order, std::move(c), true);
        const TorusGrid grid = TorusGrid::with_offset(std::max(1024, 8 * order), 0.0);
        const double nu = evaluate_complex(shell, grid).cwiseAbs().maxCoeff();
        const double nd = evaluate_complex(derivative(shell), grid).cwiseAbs().maxCoeff();
        if (!(nu > 0.0)) continue;
        const double scaled = nd / nu * std::exp2(-j);
        rep.scaled_min = std::min(rep.scaled_min, scaled);
        rep.scaled_max = std::max(rep.scaled_max, scaled);
        if (scaled < 1.0 / c_bound || scaled > c_bound) ++rep.violations;
    }
    return rep;
}

}  // namespace revlab
