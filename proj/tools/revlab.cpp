// revlab: dispersive-revival laboratory command line.
// Subcommands: solve, revive, approx, weyl, besov, dimension,
// figure1, figure2, figure3, selftest.
#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "revlab/box_dimension.hpp"
#include "revlab/continued_fraction.hpp"
#include "revlab/errors.hpp"
#include "revlab/evolution.hpp"
#include "revlab/gauss_weyl.hpp"
#include "revlab/littlewood_paley.hpp"
#include "revlab/parallel.hpp"
#include "revlab/report.hpp"
#include "revlab/revival.hpp"
#include "revlab/step_function.hpp"

using namespace revlab;

namespace {

constexpr double kPi = std::numbers::pi;

struct TimeChoice {
    TimeSpec spec = TimeSpec::rational(0, 1);
    std::string convergent_note;  // "p/q (gap g)" when a built-in target was expanded
    std::string text;
};

TimeChoice parse_t_mult(const std::string& s, int depth) {
    TimeChoice out;
    out.text = s;
    if (s == "phi" || s == "e") {
        const CFExpansion cf = expand_decimal(s == "phi" ? phi_decimal() : e_decimal(), depth);
        const Convergent c = cf.convergent(cf.deepest());
        out.spec = TimeSpec::rational(c.p, c.q);
        out.convergent_note = std::to_string(c.p) + "/" + std::to_string(c.q) +
                              " (depth " + std::to_string(cf.deepest()) + ", gap " +
                              format_double(c.gap) + ")";
        return out;
    }
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        try {
            const std::uint64_t p = std::stoull(s.substr(0, slash));
            const std::uint64_t q = std::stoull(s.substr(slash + 1));
            out.spec = TimeSpec::rational(p, q);
        } catch (const std::exception&) {
            throw validation_error("bad rational time multiple: " + s);
        }
        return out;
    }
    try {
        std::size_t used = 0;
        const double m = std::stod(s, &used);
        if (used != s.size()) throw validation_error("");
        out.spec = TimeSpec::multiple_of_2pi(m);
    } catch (const validation_error&) {
        throw validation_error("bad time multiple: " + s);
    } catch (const std::exception&) {
        throw validation_error("bad time multiple: " + s);
    }
    return out;
}

OutputMeta base_meta(const std::string& subcommand, const std::string& config) {
    OutputMeta meta;
    meta.subcommand = subcommand;
    meta.add("config", config);
    return meta;
}

void emit(const std::string& path, const std::string& content) {
    if (path == "-")
        std::fwrite(content.data(), 1, content.size(), stdout);
    else
        write_text_file(path, content);
}

// ---------------------------------------------------------------- solve ----
int cmd_solve(const std::string& eq, const std::string& t_mult, int depth, int order,
              const std::string& ic, int samples, const std::string& out) {
    const TimeChoice t = parse_t_mult(t_mult, depth);
    const PiecewiseConstant u0 = PiecewiseConstant::parse(ic);
    const FourierSeries series = u0.truncate(order);
    const TorusGrid grid = TorusGrid::midpoint(samples);

    OutputMeta meta = base_meta("solve", "--eq " + eq + " --t-mult " + t_mult + " --depth " +
                                             std::to_string(depth) + " --N " +
                                             std::to_string(order) + " --ic " + ic +
                                             " --samples " + std::to_string(samples));
    meta.add("N", std::to_string(order));
    if (!t.convergent_note.empty()) meta.add("convergent", t.convergent_note);
    meta.add("seed", "none");

    std::string csv;
    if (eq == "bo") {
        const Eigen::VectorXd u = evaluate(evolve_bo(series, t.spec), grid);
        csv = render_csv(meta, "x,u", {format_column(grid.nodes()), format_column(u)});
    } else if (eq == "schrodinger") {
        const Eigen::VectorXcd v = evaluate_complex(evolve_schrodinger(series, t.spec), grid);
        csv = render_csv(meta, "x,re,im",
                         {format_column(grid.nodes()), format_column(v.real()),
                          format_column(v.imag())});
    } else {
        throw validation_error("--eq must be bo or schrodinger");
    }
    emit(out, csv);
    return 0;
}

// --------------------------------------------------------------- revive ----
int cmd_revive(std::uint64_t p, std::uint64_t q, const std::string& ic, int samples,
               const std::string& out) {
    const PiecewiseConstant u0 = PiecewiseConstant::parse(ic);
    const RationalTime rt = RationalTime::of(p, q);
    const TorusGrid grid = lattice_safe_midpoint_grid(samples, u0, rt.q);
    const Eigen::VectorXd u = bo_revival(u0, rt, grid);

    OutputMeta meta = base_meta("revive", "--p " + std::to_string(p) + " --q " +
                                              std::to_string(q) + " --ic " + ic + " --samples " +
                                              std::to_string(samples));
    meta.add("reduced-time", std::to_string(rt.p) + "/" + std::to_string(rt.q));
    meta.add("grid-offset", format_double(grid.offset));
    meta.add("seed", "none");
    emit(out, render_csv(meta, "x,u", {format_column(grid.nodes()), format_column(u)}));
    return 0;
}

// ---------------------------------------------------------------- approx ----
int cmd_approx(const std::string& target, int depth, const std::string& out) {
    CFExpansion cf = [&] {
        if (target == "phi") return expand_decimal(phi_decimal(), depth);
        if (target == "e") return expand_decimal(e_decimal(), depth);
        return expand_decimal(target, depth);
    }();
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (int i = 0; i <= cf.deepest(); ++i) {
        const Convergent c = cf.convergent(i);
        nlohmann::ordered_json row;
        row["p"] = c.p;
        row["q"] = c.q;
        row["gap"] = c.gap;
        list.push_back(row);
    }
    emit(out, list.dump(2) + "\n");
    return 0;
}

// ------------------------------------------------------------------ weyl ----
int cmd_weyl(const std::string& t_mult, int depth, double delta, int j_min, int j_max, int xres,
             const std::string& out) {
    const TimeChoice t = parse_t_mult(t_mult, depth);
    if (xres == 0) xres = 1 << (j_max + 2);
    const LittlewoodPaleyBank bank(j_max);
    const WeylScanReport rep = weyl_scan(t.spec, delta, j_min, j_max, bank, xres);

    OutputMeta meta = base_meta("weyl", "--t-mult " + t_mult + " --depth " +
                                            std::to_string(depth) + " --delta " +
                                            format_double(delta) + " --jmin " +
                                            std::to_string(j_min) + " --jmax " +
                                            std::to_string(j_max) + " --xres " +
                                            std::to_string(xres));
    if (!t.convergent_note.empty()) meta.add("convergent", t.convergent_note);
    meta.add("seed", "none");
    std::vector<std::string> js, sups, ratios;
    for (const auto& s : rep.scales) {
        js.push_back(std::to_string(s.j));
        sups.push_back(format_double(s.sup));
        ratios.push_back(format_double(s.ratio));
    }
    emit(out, render_csv(meta, "j,S_j,ratio_j", {js, sups, ratios}));
    return 0;
}

// ----------------------------------------------------------------- besov ----
int cmd_besov(double alpha, const std::string& lp, const std::string& t_mult, int depth,
              int order, const std::string& ic, const std::string& out) {
    const TimeChoice t = parse_t_mult(t_mult, depth);
    const PiecewiseConstant u0 = PiecewiseConstant::parse(ic);
    const FourierSeries evolved = evolve_bo(u0.truncate(order), t.spec);
    int j_max = 1;
    while ((1 << (j_max + 1)) <= order && j_max < 16) ++j_max;
    const LittlewoodPaleyBank bank(j_max);
    const TorusGrid grid = TorusGrid::midpoint(4 * (1 << j_max));
    const Lp p = lp == "one" || lp == "1" ? Lp::one : Lp::infinity;
    const BesovReport rep = besov_seminorm(bank, evolved, alpha, p, grid);

    OutputMeta meta = base_meta("besov", "--alpha " + format_double(alpha) + " --p " + lp +
                                             " --t-mult " + t_mult + " --depth " +
                                             std::to_string(depth) + " --N " +
                                             std::to_string(order) + " --ic " + ic);
    meta.add("N", std::to_string(order));
    if (!t.convergent_note.empty()) meta.add("convergent", t.convergent_note);
    meta.add("seed", "none");
    std::vector<std::string> js, norms, scaled;
    for (const auto& s : rep.scales) {
        js.push_back(std::to_string(s.j));
        norms.push_back(format_double(s.norm));
        scaled.push_back(format_double(s.scaled));
    }
    emit(out, render_csv(meta, "j,seminorm,ratio", {js, norms, scaled}));
    return 0;
}

// ------------------------------------------------------------- dimension ----
int cmd_dimension(const std::string& in, int eps_num, const std::string& fit_window,
                  const std::string& out) {
    const auto [x, y] = read_xy_csv(in);
    const SampledGraph g(x, y);
    Eigen::VectorXd eps = default_eps_grid(g, eps_num);
    std::string policy = "geometric:" + std::to_string(eps_num) + ":4(b-a)/N..(b-a)/8";
    if (!fit_window.empty()) {
        const auto comma = fit_window.find(',');
        if (comma == std::string::npos)
            throw validation_error("--fit-window looks like eps_lo,eps_hi");
        const double lo = std::stod(fit_window.substr(0, comma));
        const double hi = std::stod(fit_window.substr(comma + 1));
        if (!(0 < lo && lo < hi)) throw validation_error("--fit-window needs 0 < lo < hi");
        std::vector<double> kept;
        for (Eigen::Index i = 0; i < eps.size(); ++i)
            if (eps[i] >= lo && eps[i] <= hi) kept.push_back(eps[i]);
        eps = Eigen::Map<Eigen::VectorXd>(kept.data(), static_cast<Eigen::Index>(kept.size()));
        policy += ";window:" + fit_window;
    }
    const DimensionFit fit = fit_dimension(g, eps);

    nlohmann::ordered_json j;
    j["epsilons"] = std::vector<double>(fit.epsilons.data(), fit.epsilons.data() + fit.epsilons.size());
    j["counts"] = std::vector<std::int64_t>(fit.counts.data(), fit.counts.data() + fit.counts.size());
    j["D"] = fit.dimension;
    j["r2"] = fit.r2;
    j["eps_policy"] = policy;
    emit(out, j.dump(2) + "\n");
    return 0;
}

// --------------------------------------------------------------- figures ----
int cmd_figure1(int samples, const std::string& out) {
    const PiecewiseConstant u0 = PiecewiseConstant::canonical_indicator();
    const RationalTime rt = RationalTime::of(1, 3);
    const TorusGrid grid = lattice_safe_midpoint_grid(samples, u0, rt.q);
    const Eigen::VectorXd u = bo_revival(u0, rt, grid);
    const Eigen::VectorXcd v = schrodinger_revival(u0, rt, grid);

    OutputMeta meta = base_meta("figure1", "--samples " + std::to_string(samples));
    meta.add("t-mult", "1/3");
    meta.add("ic", u0.describe());
    meta.add("seed", "none");
    emit(out, render_csv(meta, "x,u,v_re,v_im",
                         {format_column(grid.nodes()), format_column(u),
                          format_column(v.real()), format_column(v.imag())}));
    return 0;
}

int figure_dimension(const char* name, std::uint64_t p, std::uint64_t q, int samples,
                     int eps_num, const std::string& out_solution, const std::string& out_fit) {
    const PiecewiseConstant u0 = PiecewiseConstant::canonical_indicator();
    const RationalTime rt = RationalTime::of(p, q);
    const TorusGrid grid = lattice_safe_midpoint_grid(samples, u0, rt.q);
    const Eigen::VectorXd u = bo_revival(u0, rt, grid);

    OutputMeta meta = base_meta(name, "--samples " + std::to_string(samples) + " --eps-num " +
                                          std::to_string(eps_num));
    meta.add("t-mult", std::to_string(p) + "/" + std::to_string(q));
    meta.add("ic", u0.describe());
    meta.add("grid-offset", format_double(grid.offset));
    meta.add("seed", "none");
    emit(out_solution, render_csv(meta, "x,u", {format_column(grid.nodes()), format_column(u)}));

    const SampledGraph g(grid.nodes(), u);
    const DimensionFit fit = fit_dimension(g, default_eps_grid(g, eps_num));
    nlohmann::ordered_json j;
    j["epsilons"] =
        std::vector<double>(fit.epsilons.data(), fit.epsilons.data() + fit.epsilons.size());
    j["counts"] =
        std::vector<std::int64_t>(fit.counts.data(), fit.counts.data() + fit.counts.size());
    j["D"] = fit.dimension;
    j["r2"] = fit.r2;
    j["eps_policy"] = "geometric:" + std::to_string(eps_num) + ":4(b-a)/N..(b-a)/8";
    emit(out_fit, j.dump(2) + "\n");
    std::printf("%s: D = %s, r2 = %s\n", name, format_double(fit.dimension).c_str(),
                format_double(fit.r2).c_str());
    return 0;
}

// -------------------------------------------------------------- selftest ----
int cmd_selftest() {
    int failures = 0;
    const auto report = [&](const char* name, bool ok) {
        std::printf("%s %s\n", ok ? "PASS" : "FAIL", name);
        if (!ok) ++failures;
    };

    // double application of the spectral Hilbert transform
    {
        const FourierSeries f = PiecewiseConstant::canonical_indicator().truncate(64);
        const FourierSeries hh = hilbert(hilbert(f));
        double worst = 0.0;
        for (int n = -64; n <= 64; ++n) {
            const Complex want = n == 0 ? Complex{0, 0} : -f.coeff(n);
            worst = std::max(worst, std::abs(hh.coeff(n) - want));
        }
        report("hilbert-squared identity", worst <= 1e-14);
    }
    // Parseval conservation
    {
        const FourierSeries f = PiecewiseConstant::canonical_indicator().truncate(256);
        const double base = l2_norm(f);
        const double after = l2_norm(evolve_bo(f, TimeSpec::multiple_of_2pi(0.731)));
        report("flow norm conservation", std::abs(after - base) <= 1e-12 * base);
    }
    // Gauss weights
    {
        bool ok = true;
        for (std::uint64_t q : {7ull, 12ull, 25ull}) {
            for (std::uint64_t p = 1; p < q; ++p) {
                if (std::gcd(p, q) != 1) continue;
                const GaussWeights gw = gauss_weights(p, q);
                const double qd = static_cast<double>(q);
                if (std::abs(gw.w.sum() - Complex{qd, 0.0}) > 1e-10 * qd) ok = false;
                if (std::abs(gw.w.squaredNorm() - qd * qd) > 1e-10 * qd * qd) ok = false;
            }
        }
        report("gauss weight invariants", ok);
    }
    // dyadic partition of unity
    {
        const LittlewoodPaleyBank bank(10);
        bool ok = true;
        for (std::int64_t n = 1; n <= (1 << 10); ++n) {
            double s = 0.0;
            for (int j = 0; j <= 10; ++j) s += bank.chi(j, n);
            if (std::abs(s - 1.0) > 1e-12) ok = false;
        }
        report("dyadic partition of unity", ok);
    }
    // box-counter hand trace
    {
        Eigen::VectorXd x(1000), y(1000);
        for (int i = 0; i < 1000; ++i) {
            x[i] = static_cast<double>(i) / 999.0;
            y[i] = 1.0;
        }
        report("box-counter hand trace", numbox(SampledGraph(x, y), 0.1) == 11);
    }
    // half-period revival is a translation
    {
        const PiecewiseConstant u0 = PiecewiseConstant::canonical_indicator();
        const TorusGrid grid = TorusGrid::midpoint(64);
        const Eigen::VectorXd u = bo_revival(u0, RationalTime::of(1, 2), grid);
        bool ok = true;
        for (int m = 0; m < grid.size; ++m)
            if (std::abs(u[m] - u0(grid.node(m) - kPi)) > 1e-12) ok = false;
        report("half-period translation", ok);
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"revlab: periodic dispersive-revival laboratory"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "cap worker threads (also REVLAB_THREADS)");

    // solve
    auto* solve = app.add_subcommand("solve", "truncated spectral evolution at any time");
    std::string eq = "bo", t_mult = "1/3", ic = "indicator:-1.5707963267948966,1.5707963267948966";
    int depth = 40, order = 16384, samples = 10000;
    std::string out = "-";
    solve->add_option("--eq", eq, "bo | schrodinger");
    solve->add_option("--t-mult", t_mult, "time as a multiple of 2pi: p/q, phi, e, or decimal");
    solve->add_option("--depth", depth, "expansion depth for phi/e targets");
    solve->add_option("--N", order, "truncation order");
    solve->add_option("--ic", ic, "initial condition spec");
    solve->add_option("--samples", samples, "grid size");
    solve->add_option("--out", out, "output CSV path ('-' for stdout)");

    // revive
    auto* revive = app.add_subcommand("revive", "exact rational-time superposition");
    std::uint64_t rp = 1, rq = 3;
    std::string rev_ic = "indicator:-1.5707963267948966,1.5707963267948966", rev_out = "-";
    int rev_samples = 10000;
    revive->add_option("--p", rp, "numerator")->required();
    revive->add_option("--q", rq, "denominator")->required();
    revive->add_option("--ic", rev_ic, "initial condition spec");
    revive->add_option("--samples", rev_samples, "grid size");
    revive->add_option("--out", rev_out, "output CSV path");

    // approx
    auto* approx = app.add_subcommand("approx", "continued-fraction convergents");
    std::string target = "phi", approx_out = "-";
    int approx_depth = 40;
    approx->add_option("--target", target, "phi | e | decimal literal");
    approx->add_option("--depth", approx_depth, "expansion depth");
    approx->add_option("--out", approx_out, "output JSON path");

    // weyl
    auto* weyl = app.add_subcommand("weyl", "dyadic Weyl-sum scan");
    std::string weyl_t = "phi", weyl_out = "-";
    double delta = 0.1;
    int weyl_depth = 40, j_min = 4, j_max = 12, xres = 0;
    weyl->add_option("--t-mult", weyl_t, "time multiple");
    weyl->add_option("--depth", weyl_depth, "expansion depth for phi/e");
    weyl->add_option("--delta", delta, "slack exponent");
    weyl->add_option("--jmin", j_min, "first scale");
    weyl->add_option("--jmax", j_max, "last scale");
    weyl->add_option("--xres", xres, "x grid resolution (default 2^(jmax+2))");
    weyl->add_option("--out", weyl_out, "output CSV path");

    // besov
    auto* besov = app.add_subcommand("besov", "per-scale seminorm rows of the evolved datum");
    double alpha = 0.45;
    std::string lp = "inf", besov_t = "phi",
                besov_ic = "indicator:-1.5707963267948966,1.5707963267948966",
                besov_out = "-";
    int besov_depth = 16, besov_order = 16384;
    besov->add_option("--alpha", alpha, "regularity exponent");
    besov->add_option("--p", lp, "inf | one");
    besov->add_option("--t-mult", besov_t, "time multiple");
    besov->add_option("--depth", besov_depth, "expansion depth for phi/e");
    besov->add_option("--N", besov_order, "truncation order");
    besov->add_option("--ic", besov_ic, "initial condition spec");
    besov->add_option("--out", besov_out, "output CSV path");

    // dimension
    auto* dimension = app.add_subcommand("dimension", "box-counting dimension of a CSV graph");
    std::string dim_in, dim_out = "-", fit_window;
    int eps_num = 20;
    dimension->add_option("--in", dim_in, "input CSV with x,u columns")->required();
    dimension->add_option("--eps-num", eps_num, "number of box sizes");
    dimension->add_option("--fit-window", fit_window, "eps_lo,eps_hi restriction");
    dimension->add_option("--out", dim_out, "output JSON path");

    // figures
    auto* fig1 = app.add_subcommand("figure1", "third-period revival with the free parts");
    int f1_samples = 10000;
    std::string f1_out = "figure1.csv";
    fig1->add_option("--samples", f1_samples, "grid size");
    fig1->add_option("--out", f1_out, "output CSV path");

    auto* fig2 = app.add_subcommand("figure2", "golden-time profile and its dimension fit");
    int f2_samples = 10000, f2_eps = 20;
    std::string f2_out = "figure2.csv", f2_fit = "figure2_fit.json";
    fig2->add_option("--samples", f2_samples, "grid size");
    fig2->add_option("--eps-num", f2_eps, "number of box sizes");
    fig2->add_option("--out", f2_out, "solution CSV path");
    fig2->add_option("--out-fit", f2_fit, "fit JSON path");

    auto* fig3 = app.add_subcommand("figure3", "euler-time profile and its dimension fit");
    int f3_samples = 10000, f3_eps = 20;
    std::string f3_out = "figure3.csv", f3_fit = "figure3_fit.json";
    fig3->add_option("--samples", f3_samples, "grid size");
    fig3->add_option("--eps-num", f3_eps, "number of box sizes");
    fig3->add_option("--out", f3_out, "solution CSV path");
    fig3->add_option("--out-fit", f3_fit, "fit JSON path");

    auto* selftest = app.add_subcommand("selftest", "quick invariant checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "%s\n%s", e.what(), app.help().c_str());
        return 2;
    }

    try {
        if (threads > 0) set_worker_count(threads);
        if (solve->parsed())
            return cmd_solve(eq, t_mult, depth, order, ic, samples, out);
        if (revive->parsed()) return cmd_revive(rp, rq, rev_ic, rev_samples, rev_out);
        if (approx->parsed()) return cmd_approx(target, approx_depth, approx_out);
        if (weyl->parsed())
            return cmd_weyl(weyl_t, weyl_depth, delta, j_min, j_max, xres, weyl_out);
        if (besov->parsed())
            return cmd_besov(alpha, lp, besov_t, besov_depth, besov_order, besov_ic, besov_out);
        if (dimension->parsed()) return cmd_dimension(dim_in, eps_num, fit_window, dim_out);
        if (fig1->parsed()) return cmd_figure1(f1_samples, f1_out);
        if (fig2->parsed())
            return figure_dimension("figure2", 2584, 1597, f2_samples, f2_eps, f2_out, f2_fit);
        if (fig3->parsed())
            return figure_dimension("figure3", 23225, 8544, f3_samples, f3_eps, f3_out, f3_fit);
        if (selftest->parsed()) return cmd_selftest();
    } catch (const validation_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const guard_error& e) {
        std::fprintf(stderr, "numerical guard: %s\n", e.what());
        return 3;
    }
    return 2;
}
