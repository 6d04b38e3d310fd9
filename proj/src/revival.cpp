#include "revlab/revival.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "revlab/errors.hpp"
#include "revlab/parallel.hpp"

namespace revlab {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap(double x) {
    double y = std::remainder(x, 2.0 * kPi);
    if (y <= -kPi) y += 2.0 * kPi;
    return y;
}

struct RevivalKernel {
    const PiecewiseConstant& u0;
    GaussWeights weights;
    bool need_hilbert = false;

    RevivalKernel(const PiecewiseConstant& f, const RationalTime& rt, bool hilbert_part)
        : u0(f), weights(gauss_weights(rt.p, rt.q)) {
        if (hilbert_part) {
            for (Eigen::Index k = 0; k < weights.w.size(); ++k)
                if (weights.w[k].imag() != 0.0) need_hilbert = true;
        }
    }
};

bool use_table_path(RevivalPath path, std::uint64_t q, int grid_size) {
    if (path == RevivalPath::direct) return false;
    const bool divides = q != 0 && grid_size % static_cast<int>(q) == 0;
    if (path == RevivalPath::table) {
        if (!divides) throw validation_error("table path needs the grid size divisible by q");
        return true;
    }
    return q > 512 && divides;
}

}  // namespace

RationalTime RationalTime::of(std::uint64_t p, std::uint64_t q) {
    if (q == 0) throw validation_error("rational time needs q >= 1");
    const std::uint64_t g = std::gcd(p, q);
    RationalTime rt;
    rt.p_original = p;
    rt.q = q / g;
    rt.p = (p / g) % rt.q;
    return rt;
}

TorusGrid lattice_safe_midpoint_grid(int m, const PiecewiseConstant& u0, std::uint64_t q) {
    if (m < 1) throw validation_error("grid needs at least one node");
    if (q == 0) throw validation_error("lattice-safe grid needs q >= 1");
    const double cell = 2.0 * kPi / m;
    for (int s = 0; s < 64; ++s) {
        const double offset = (kPi / m) * (1.0 + static_cast<double>(s) / 64.0);
        if (offset >= cell) break;
        double worst = 2.0 * kPi;
        for (std::uint64_t k = 0; k < q && worst > 1e-9; ++k) {
            const double shift = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(q);
            for (double a : u0.breakpoints()) {
                // distance from the lattice point a + shift to the nearest node
                const double pos = (a + shift + kPi - offset) / cell;
                const double frac = pos - std::round(pos);
                worst = std::min(worst, std::abs(frac) * cell);
            }
        }
        if (worst > 1e-9) return TorusGrid::with_offset(m, offset);
    }
    throw guard_error("no lattice-safe midpoint offset found for this (M, q)");
}

Eigen::VectorXd bo_revival(const PiecewiseConstant& u0, const RationalTime& rt,
                           const TorusGrid& grid, RevivalPath path) {
    if (grid.size < 1) throw validation_error("grid needs at least one node");
    const RevivalKernel kernel(u0, rt, true);
    const auto& w = kernel.weights.w;
    const std::int64_t q = static_cast<std::int64_t>(rt.q);
    Eigen::VectorXd out(grid.size);

    if (use_table_path(path, rt.q, grid.size)) {
        const int stride = grid.size / static_cast<int>(rt.q);
        Eigen::VectorXd u0_tab(grid.size), h_tab(grid.size);
        for (int m = 0; m < grid.size; ++m) {
            const double x = grid.node(m);
            u0_tab[m] = u0(x);
            h_tab[m] = kernel.need_hilbert ? hilbert_closed_form_at(u0, x) : 0.0;
        }
        parallel_chunks(grid.size, 1024, [&](std::int64_t lo, std::int64_t hi) {
            for (std::int64_t m = lo; m < hi; ++m) {
                double acc = 0.0;
                for (std::int64_t k = 0; k < q; ++k) {
                    const int idx = static_cast<int>(((m - k * stride) % grid.size + grid.size) %
                                                     grid.size);
                    acc += w[k].real() * u0_tab[idx] - w[k].imag() * h_tab[idx];
                }
                out[m] = acc / static_cast<double>(q);
            }
        });
        return out;
    }

    parallel_chunks(grid.size, 64, [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t m = lo; m < hi; ++m) {
            const double x = grid.node(static_cast<int>(m));
            double acc = 0.0;
            for (std::int64_t k = 0; k < q; ++k) {
                const double y = wrap(x - 2.0 * kPi * static_cast<double>(k) / static_cast<double>(q));
                acc += w[k].real() * u0(y);
                if (w[k].imag() != 0.0) acc -= w[k].imag() * hilbert_closed_form_at(u0, y);
            }
            out[m] = acc / static_cast<double>(q);
        }
    });
    return out;
}

Eigen::VectorXcd schrodinger_revival(const PiecewiseConstant& u0, const RationalTime& rt,
                                     const TorusGrid& grid, RevivalPath path) {
    if (grid.size < 1) throw validation_error("grid needs at least one node");
    const RevivalKernel kernel(u0, rt, false);
    const auto& w = kernel.weights.w;
    const std::int64_t q = static_cast<std::int64_t>(rt.q);
    Eigen::VectorXcd out(grid.size);

    if (use_table_path(path, rt.q, grid.size)) {
        const int stride = grid.size / static_cast<int>(rt.q);
        Eigen::VectorXd u0_tab(grid.size);
        for (int m = 0; m < grid.size; ++m) u0_tab[m] = u0(grid.node(m));
        parallel_chunks(grid.size, 1024, [&](std::int64_t lo, std::int64_t hi) {
            for (std::int64_t m = lo; m < hi; ++m) {
                Complex acc{0.0, 0.0};
                for (std::int64_t k = 0; k < q; ++k) {
                    const int idx = static_cast<int>(((m - k * stride) % grid.size + grid.size) %
                                                     grid.size);
                    acc += w[k] * u0_tab[idx];
                }
                out[m] = acc / static_cast<double>(q);
            }
        });
        return out;
    }

    parallel_chunks(grid.size, 64, [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t m = lo; m < hi; ++m) {
            const double x = grid.node(static_cast<int>(m));
            Complex acc{0.0, 0.0};
            for (std::int64_t k = 0; k < q; ++k) {
                const double y = wrap(x - 2.0 * kPi * static_cast<double>(k) / static_cast<double>(q));
                acc += w[k] * u0(y);
            }
            out[m] = acc / static_cast<double>(q);
        }
    });
    return out;
}

}  // namespace revlab
