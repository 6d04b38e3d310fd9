// Acceptance suite: end-to-end checks of the laboratory against its frozen
// targets.  Each criterion prints one PASS/FAIL line; the exit code is the
// number of failures.  Run through ctest or directly:  ./acceptance [N]
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "revlab/box_dimension.hpp"
#include "revlab/continued_fraction.hpp"
#include "revlab/evolution.hpp"
#include "revlab/gauss_weyl.hpp"
#include "revlab/littlewood_paley.hpp"
#include "revlab/parallel.hpp"
#include "revlab/revival.hpp"
#include "revlab/step_function.hpp"

using namespace revlab;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double now_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

DimensionFit figure_fit(std::uint64_t p, std::uint64_t q, double* seconds) {
    const auto u0 = PiecewiseConstant::canonical_indicator();
    const double t0 = now_seconds();
    const TorusGrid grid = lattice_safe_midpoint_grid(10000, u0, q);
    const Eigen::VectorXd u = bo_revival(u0, RationalTime::of(p, q), grid);
    const SampledGraph g(grid.nodes(), u);
    const DimensionFit fit = fit_dimension(g, default_eps_grid(g));
    if (seconds) *seconds = now_seconds() - t0;
    return fit;
}

// --- criterion 1: golden-ratio figure ---------------------------------------
Outcome criterion1() {
    double secs = 0.0;
    const DimensionFit fit = figure_fit(2584, 1597, &secs);
    const bool d_near_reported = std::abs(fit.dimension - 1.54) <= 0.08;
    const bool d_near_theory = std::abs(fit.dimension - 1.50) <= 0.10;
    const bool ok = d_near_reported && d_near_theory && fit.r2 >= 0.98 && secs < 60.0;
    return {ok, "D=" + fmt(fit.dimension) + " (targets 1.54+-0.08 and 1.50+-0.10), r2=" +
                    fmt(fit.r2) + ", " + fmt(secs) + "s"};
}

// --- criterion 2: euler-number figure ----------------------------------------
Outcome criterion2() {
    double secs = 0.0;
    const DimensionFit fit = figure_fit(23225, 8544, &secs);
    const bool ok = std::abs(fit.dimension - 1.46) <= 0.08 && secs < 300.0;
    return {ok, "D=" + fmt(fit.dimension) + " (target 1.46+-0.08), r2=" + fmt(fit.r2) + ", " +
                    fmt(secs) + "s"};
}

// --- criterion 3: convergent identification and gaps -------------------------
Outcome criterion3() {
    const CFExpansion phi = expand_decimal(phi_decimal(), 20);
    const CFExpansion e = expand_decimal(e_decimal(), 20);
    Convergent cp{}, ce{};
    for (int i = 0; i <= phi.deepest(); ++i) {
        const Convergent c = phi.convergent(i);
        if (c.p == 2584 && c.q == 1597) cp = c;
    }
    for (int i = 0; i <= e.deepest(); ++i) {
        const Convergent c = e.convergent(i);
        if (c.p == 23225 && c.q == 8544) ce = c;
    }
    const bool found = cp.q == 1597 && ce.q == 8544;
    const bool phi_gap_ok = found && cp.gap < 1.7e-6;
    const bool e_gap_ok = found && ce.gap < 6.7e-9;
    return {found && phi_gap_ok && e_gap_ok,
            "phi gap=" + fmt(cp.gap) + " (<1.7e-6: " + (phi_gap_ok ? "yes" : "no") +
                "), e gap=" + fmt(ce.gap) + " (<6.7e-9: " + (e_gap_ok ? "yes" : "no") + ")"};
}

// --- criterion 4: almost-sure denominator growth rate ------------------------
Outcome criterion4() {
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double acc = 0.0;
    int used = 0;
    for (int i = 0; i < 200; ++i) {
        const CFExpansion cf = expand(unit(rng), 40);
        if (cf.size() < 10) continue;
        acc += cf.levy_rate();
        ++used;
    }
    const double mean = used ? acc / used : 0.0;
    const double rho = khinchin_levy_rho();
    const bool ok = used >= 195 && std::abs(mean - rho) <= 0.05 * rho;
    return {ok, "mean=" + fmt(mean) + " over " + std::to_string(used) +
                    " targets, constant=" + fmt(rho) + " +-5%"};
}

// --- criterion 5: rational-time superposition vs. truncated evolution --------
Outcome criterion5() {
    const auto u0 = PiecewiseConstant::canonical_indicator();
    const int order = 1 << 14;
    const FourierSeries series = u0.truncate(order);

    // analytic truncation tail of the indicator in the l2 metric
    double tail2 = 0.0;
    for (int n = order + 1; n <= 64 * order; n += 2) tail2 += 1.0 / (kPi * kPi) / (double(n) * n);
    tail2 += 1.0 / (kPi * kPi) / (2.0 * 64.0 * order);  // integral remainder
    const double tail = std::sqrt(2.0 * kPi * 2.0 * tail2);

    bool ok = true;
    std::string detail;
    const std::vector<std::pair<std::uint64_t, std::uint64_t>> times = {
        {1, 2}, {1, 3}, {2, 3}, {1, 4}, {3, 5}};
    for (const auto& [p, q] : times) {
        const RationalTime rt = RationalTime::of(p, q);
        const TorusGrid grid = lattice_safe_midpoint_grid(10000, u0, q);
        const Eigen::VectorXd exact = bo_revival(u0, rt, grid);
        const Eigen::VectorXd trunc = evaluate(evolve_bo(series, rt.to_time_spec()), grid);
        const double dist = std::sqrt((exact - trunc).squaredNorm() * 2.0 * kPi / grid.size);
        if (!(dist <= 2.0 * tail)) ok = false;
        detail += std::to_string(p) + "/" + std::to_string(q) + ":" + fmt(dist / tail) + "x ";
    }
    // boundary times reproduce the data exactly
    const TorusGrid grid = TorusGrid::midpoint(10000);
    for (std::uint64_t p : {0ull, 1ull}) {
        const Eigen::VectorXd u = bo_revival(u0, RationalTime::of(p, 1), grid);
        for (int m = 0; m < grid.size; ++m) {
            if (u[m] != u0(grid.node(m))) {
                ok = false;
                detail += "boundary-time mismatch ";
                break;
            }
        }
    }
    return {ok, "distance/tail: " + detail + "(bound 2x)"};
}

// --- criterion 6: the two coefficient routes agree ---------------------------
Outcome criterion6() {
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> pos(-2.5, 2.5);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        // random three-step initial condition and random time
        std::vector<double> breaks = {pos(rng), pos(rng), pos(rng)};
        std::sort(breaks.begin(), breaks.end());
        if (breaks[1] - breaks[0] < 1e-2 || breaks[2] - breaks[1] < 1e-2) continue;
        const PiecewiseConstant ic(breaks, {unit(rng), unit(rng) + 0.5, unit(rng) - 0.5});
        const FourierSeries f = ic.truncate(1 << 10);
        const TimeSpec t = TimeSpec::multiple_of_2pi(unit(rng) * 2.0 * kPi);
        const FourierSeries direct = evolve_bo(f, t);
        const FourierSeries routed = bo_from_schrodinger(evolve_schrodinger(f, t), f.mean());
        for (int n = -f.order(); n <= f.order(); ++n)
            worst = std::max(worst, std::abs(direct.coeff(n) - routed.coeff(n)));
    }
    return {worst <= 1e-13, "max coefficient discrepancy " + fmt(worst) + " (bound 1e-13)"};
}

// --- criterion 7: spectral operator suite ------------------------------------
Outcome criterion7() {
    std::string detail;
    bool ok = true;

    // H^2 = -(I - P0)
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    const int order = 256;
    Eigen::VectorXcd c(2 * order + 1);
    c[order] = Complex{unit(rng), 0.0};
    for (int n = 1; n <= order; ++n) {
        c[order + n] = Complex{unit(rng), unit(rng)};
        c[order - n] = std::conj(c[order + n]);
    }
    const FourierSeries f(order, c, true);
    const FourierSeries hh = hilbert(hilbert(f));
    double worst = 0.0;
    for (int n = -order; n <= order; ++n) {
        const Complex want = n == 0 ? Complex{0, 0} : -f.coeff(n);
        worst = std::max(worst, std::abs(hh.coeff(n) - want));
    }
    if (worst > 1e-14) ok = false;
    detail += "H^2 err " + fmt(worst);

    // Parseval conservation under both flows
    double norm_err = 0.0;
    const double base = l2_norm(f);
    for (double mult : {0.137, 0.925, 5.5}) {
        norm_err = std::max(norm_err,
                            std::abs(l2_norm(evolve_bo(f, TimeSpec::multiple_of_2pi(mult))) - base));
        norm_err = std::max(
            norm_err,
            std::abs(l2_norm(evolve_schrodinger(f, TimeSpec::multiple_of_2pi(mult))) - base));
    }
    if (norm_err > 1e-12 * base) ok = false;
    detail += ", flow norm err " + fmt(norm_err / base);

    // Gauss-weight invariants for every coprime pair with q <= 200
    double weight_err = 0.0, magnitude_err = 0.0;
    for (std::uint64_t q = 1; q <= 200; ++q) {
        for (std::uint64_t p = 0; p < std::max<std::uint64_t>(1, q); ++p) {
            if (std::gcd(p, q) != 1) continue;
            const GaussWeights gw = gauss_weights(p, q);
            const double qd = static_cast<double>(q);
            weight_err = std::max(weight_err, std::abs(gw.w.sum() - Complex{qd, 0.0}) / qd);
            weight_err =
                std::max(weight_err, std::abs(gw.w.squaredNorm() - qd * qd) / (qd * qd));
            if (q % 2 == 1) {
                for (Eigen::Index k = 0; k < gw.w.size(); ++k)
                    magnitude_err =
                        std::max(magnitude_err, std::abs(std::abs(gw.w[k]) - std::sqrt(qd)));
            }
        }
    }
    if (weight_err > 1e-10) ok = false;
    if (magnitude_err > 1e-9) ok = false;
    detail += ", weight invariants " + fmt(weight_err) + ", odd-q magnitude " + fmt(magnitude_err);
    return {ok, detail};
}

// --- criterion 8: dyadic Weyl-sum scan ---------------------------------------
Outcome criterion8() {
    const LittlewoodPaleyBank bank(12);
    const CFExpansion phi = expand_decimal(phi_decimal(), 40);
    const Convergent deep = phi.convergent(phi.deepest());
    const WeylScanReport good =
        weyl_scan(TimeSpec::rational(deep.p, deep.q), 0.1, 4, 12, bank, 1 << 14);
    const std::size_t n = good.scales.size();
    const bool finite = std::isfinite(good.max_ratio());
    const bool tail_flat = !(good.scales[n - 3].ratio < good.scales[n - 2].ratio &&
                             good.scales[n - 2].ratio < good.scales[n - 1].ratio);

    const WeylScanReport zero = weyl_scan(TimeSpec::rational(0, 1), 0.1, 4, 12, bank, 1 << 14);
    const bool control_grows = zero.scales.back().ratio >= 2.0 * zero.scales.front().ratio;

    const bool ok = finite && tail_flat && control_grows;
    return {ok, "max ratio " + fmt(good.max_ratio()) + " at q=" + std::to_string(deep.q) +
                    ", last three " + fmt(good.scales[n - 3].ratio) + "/" +
                    fmt(good.scales[n - 2].ratio) + "/" + fmt(good.scales[n - 1].ratio) +
                    "; zero-time growth x" + fmt(zero.scales.back().ratio / zero.scales.front().ratio)};
}

// --- criterion 9: regularity dichotomy ---------------------------------------
Outcome criterion9() {
    const LittlewoodPaleyBank bank(14);
    const FourierSeries ind = PiecewiseConstant::canonical_indicator().truncate(1 << 14);
    const TorusGrid grid = TorusGrid::midpoint(1 << 16);
    const double golden =
        holder_exponent_estimate(bank, evolve_bo(ind, TimeSpec::rational(2584, 1597)), grid)
            .alpha_hat;
    const double cusp =
        holder_exponent_estimate(bank, evolve_bo(ind, TimeSpec::rational(1, 3)), grid).alpha_hat;

    // smooth-curve sanity through the box-dimension pipeline
    Eigen::VectorXd x(10000), y(10000);
    for (int i = 0; i < 10000; ++i) {
        x[i] = -kPi + (i + 0.5) * 2.0 * kPi / 10000;
        y[i] = std::sin(x[i]);
    }
    const SampledGraph sineg(x, y);
    const DimensionFit smooth = fit_dimension(sineg, default_eps_grid(sineg));

    const bool ok = golden >= 0.35 && golden <= 0.6 && cusp <= 0.15 &&
                    std::abs(smooth.dimension - 1.0) <= 0.05;
    return {ok, "alpha(golden)=" + fmt(golden) + " in [0.35,0.6], alpha(third)=" + fmt(cusp) +
                    " <=0.15, smooth D=" + fmt(smooth.dimension)};
}

// --- criterion 10: box-counter hand traces and thread independence ----------
Outcome criterion10() {
    bool ok = true;
    std::string detail;
    {
        Eigen::VectorXd x(1000), y(1000);
        for (int i = 0; i < 1000; ++i) {
            x[i] = static_cast<double>(i) / 999.0;
            y[i] = 2.0;
        }
        const SampledGraph g(x, y);
        const std::int64_t flat = numbox(g, 0.1);
        if (flat != 11) ok = false;
        detail += "constant:" + std::to_string(flat) + " (want 11)";

        for (int i = 0; i < 1000; ++i) y[i] = x[i];
        const SampledGraph line(x, y);
        const std::int64_t diag = numbox(line, 0.1);
        if (diag < 11 || diag > 22) ok = false;
        detail += ", line:" + std::to_string(diag) + " (want 11..22)";

        const std::int64_t single = numbox(line, 1.5);
        if (single != 1) ok = false;
        detail += ", wide box:" + std::to_string(single) + " (want 1)";
    }
    {
        Eigen::VectorXd x(5000), y(5000);
        for (int i = 0; i < 5000; ++i) {
            x[i] = -kPi + (i + 0.5) * 2.0 * kPi / 5000;
            double acc = 0.0;
            for (int j = 1; j <= 10; ++j) acc += std::exp2(-0.5 * j) * std::cos(std::exp2(j) * x[i]);
            y[i] = acc;
        }
        const SampledGraph g(x, y);
        const int before = worker_count();
        set_worker_count(1);
        const std::int64_t one = numbox(g, 0.01);
        set_worker_count(6);
        const std::int64_t six = numbox(g, 0.01);
        set_worker_count(before);
        if (one != six) ok = false;
        detail += ", thread-independent:" + std::string(one == six ? "yes" : "no");
    }
    return {ok, detail};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"figure-2 reproduction (golden time)", criterion1},
        {"figure-3 reproduction (euler time)", criterion2},
        {"convergent gaps", criterion3},
        {"khinchin-levy mean", criterion4},
        {"revival vs truncated evolution", criterion5},
        {"coefficient-route identity", criterion6},
        {"spectral operator suite", criterion7},
        {"weyl scan trend", criterion8},
        {"regularity dichotomy", criterion9},
        {"box-counter hand traces", criterion10},
    };

    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only != 0 && static_cast<int>(i + 1) != only) continue;
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        if (!out.pass) ++failures;
        std::printf("%s criterion %zu: %s -- %s\n", out.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].first, out.detail.c_str());
        std::fflush(stdout);
    }
    return failures;
}
