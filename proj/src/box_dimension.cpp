#include "revlab/box_dimension.hpp"

#include <cmath>
#include <vector>

#include "revlab/errors.hpp"

namespace revlab {

SampledGraph::SampledGraph(Eigen::VectorXd x_in, Eigen::VectorXd y_in)
    : x(std::move(x_in)), y(std::move(y_in)) {
    if (x.size() != y.size() || x.size() < 2)
        throw validation_error("graph needs matching x/y with at least two samples");
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (!std::isfinite(x[i]) || !std::isfinite(y[i]))
            throw validation_error("graph samples must be finite");
        if (i > 0 && !(x[i] > x[i - 1]))
            throw validation_error("graph x values must be strictly increasing");
    }
}

double numbox_min_eps(const SampledGraph& g) { return 2.0 * g.x_span() / g.size(); }

std::int64_t numbox(const SampledGraph& g, double eps) {
    if (!(eps > 0.0)) throw validation_error("box size must be positive");
    const double a = g.x[0];
    const double span = g.x_span();
    if (eps < 2.0 * span / g.size())
        throw guard_error("box size below two samples per column");

    const std::int64_t n_towers = static_cast<std::int64_t>(std::floor(span / eps)) + 1;
    std::int64_t count = 0;
    std::int64_t tower = 0;
    double y_min = g.y[0], y_max = g.y[0];
    // x is sorted, so towers appear as consecutive runs
    for (Eigen::Index i = 1; i <= g.x.size(); ++i) {
        const std::int64_t t =
            i < g.x.size() ? static_cast<std::int64_t>(std::floor((g.x[i] - a) / eps)) : n_towers;
        if (t == tower) {
            y_min = std::min(y_min, g.y[i]);
            y_max = std::max(y_max, g.y[i]);
            continue;
        }
        count += static_cast<std::int64_t>(std::floor((y_max - y_min) / eps)) + 1;
        if (t != tower + 1 && i < g.x.size())
            throw guard_error("tower without samples (non-uniform data for this box size)");
        if (i < g.x.size()) {
            tower = t;
            y_min = y_max = g.y[i];
        }
    }
    return count;
}

Eigen::VectorXd default_eps_grid(const SampledGraph& g, int count) {
    if (count < 2) throw validation_error("box-size grid needs at least two points");
    const double lo = 4.0 * g.x_span() / g.size();
    const double hi = g.x_span() / 8.0;
    if (!(lo < hi)) throw validation_error("graph too short for the default box-size grid");
    Eigen::VectorXd eps(count);
    const double step = std::log(hi / lo) / (count - 1);
    for (int i = 0; i < count; ++i) eps[i] = hi * std::exp(-step * i);  // decreasing
    return eps;
}

DimensionFit fit_dimension(const SampledGraph& g, const Eigen::VectorXd& eps_grid) {
    const double floor_eps = numbox_min_eps(g);
    int admissible = 0;
    for (Eigen::Index i = 0; i < eps_grid.size(); ++i)
        if (eps_grid[i] >= floor_eps) ++admissible;
    if (admissible < 8) throw validation_error("dimension fit needs at least 8 admissible box sizes");

    DimensionFit fit;
    fit.epsilons = eps_grid;
    fit.counts.resize(eps_grid.size());
    for (Eigen::Index i = 0; i < eps_grid.size(); ++i) fit.counts[i] = numbox(g, eps_grid[i]);

    for (Eigen::Index i = 1; i < eps_grid.size(); ++i) {
        if (!(eps_grid[i] < eps_grid[i - 1]))
            throw validation_error("box sizes must be strictly decreasing");
        if (fit.counts[i] < fit.counts[i - 1])
            throw guard_error("box counts decreased at a smaller box size");
    }

    bool all_equal = true;
    for (Eigen::Index i = 1; i < fit.counts.size(); ++i)
        if (fit.counts[i] != fit.counts[0]) all_equal = false;
    if (all_equal) throw guard_error("degenerate fit: all box counts equal");

    const Eigen::Index n = eps_grid.size();
    Eigen::VectorXd lx(n), ly(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        lx[i] = std::log(1.0 / eps_grid[i]);
        ly[i] = std::log(static_cast<double>(fit.counts[i]));
    }
    const double xb = lx.mean(), yb = ly.mean();
    const double sxx = (lx.array() - xb).square().sum();
    const double sxy = ((lx.array() - xb) * (ly.array() - yb)).sum();
    fit.dimension = sxy / sxx;
    const double ss_tot = (ly.array() - yb).square().sum();
    const double ss_res =
        ((ly.array() - yb) - fit.dimension * (lx.array() - xb)).square().sum();
    fit.r2 = 1.0 - ss_res / ss_tot;

    if (!(fit.dimension > 0.5 && fit.dimension < 2.5))
        throw guard_error("fitted dimension outside the sanity window (0.5, 2.5)");
    return fit;
}

}  // namespace revlab
