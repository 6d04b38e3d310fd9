#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "revlab/errors.hpp"
#include "revlab/evolution.hpp"
#include "revlab/step_function.hpp"

using namespace revlab;

namespace {

FourierSeries random_real_series(int order, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Eigen::VectorXcd c(2 * order + 1);
    c[order] = Complex{u(rng), 0.0};
    for (int n = 1; n <= order; ++n) {
        const Complex z{u(rng), u(rng)};
        c[order + n] = z;
        c[order - n] = std::conj(z);
    }
    return FourierSeries(order, c, true);
}

double max_coeff_diff(const FourierSeries& a, const FourierSeries& b) {
    double worst = 0.0;
    for (int n = -a.order(); n <= a.order(); ++n)
        worst = std::max(worst, std::abs(a.coeff(n) - b.coeff(n)));
    return worst;
}

}  // namespace

TEST_CASE("zero and full-period times are the identity") {
    const FourierSeries f = random_real_series(64, 1);
    for (const TimeSpec& t : {TimeSpec::rational(0, 1), TimeSpec::rational(1, 1),
                              TimeSpec::multiple_of_2pi(0.0), TimeSpec::multiple_of_2pi(1.0)}) {
        CHECK(max_coeff_diff(evolve_bo(f, t), f) == 0.0);
        CHECK(max_coeff_diff(evolve_schrodinger(f, t), f) == 0.0);
    }
}

TEST_CASE("cosine mode picks up the advertised phase") {
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(3);
    c[0] = c[2] = Complex{0.5, 0.0};
    const FourierSeries f(1, c, true);
    for (double mult : {0.1, 0.37, 0.99}) {
        const TimeSpec t = TimeSpec::multiple_of_2pi(mult);
        const FourierSeries u = evolve_bo(f, t);
        const Complex want = 0.5 * std::polar(1.0, 2.0 * std::numbers::pi * mult);
        CHECK(std::abs(u.coeff(1) - want) < 1e-12);
        CHECK(std::abs(u.coeff(-1) - std::conj(want)) < 1e-12);
    }
}

TEST_CASE("both flows conserve the l2 norm") {
    const FourierSeries f = random_real_series(512, 5);
    const double base = l2_norm(f);
    for (double mult : {0.123, 0.77, 13.5, 1e6 + 1.0 / 3.0}) {
        const TimeSpec t = TimeSpec::multiple_of_2pi(mult);
        CHECK(l2_norm(evolve_bo(f, t)) == doctest::Approx(base).epsilon(1e-12));
        CHECK(l2_norm(evolve_schrodinger(f, t)) == doctest::Approx(base).epsilon(1e-12));
    }
}

TEST_CASE("group property for exactly representable time sums") {
    const FourierSeries f = random_real_series(256, 9);
    const double s = 1234.0 / 1048576.0, t = 777.0 / 1048576.0;  // dyadic, sum exact
    const FourierSeries two_steps =
        evolve_bo(evolve_bo(f, TimeSpec::multiple_of_2pi(s)), TimeSpec::multiple_of_2pi(t));
    const FourierSeries one_step = evolve_bo(f, TimeSpec::multiple_of_2pi(s + t));
    CHECK(max_coeff_diff(two_steps, one_step) < 1e-12);
}

TEST_CASE("time periodicity: shifting the numerator by q changes nothing") {
    const FourierSeries f = random_real_series(128, 13);
    const FourierSeries a = evolve_bo(f, TimeSpec::rational(2, 7));
    const FourierSeries b = evolve_bo(f, TimeSpec::rational(9, 7));
    CHECK(max_coeff_diff(a, b) == 0.0);
    const FourierSeries c = evolve_bo(f, TimeSpec::multiple_of_2pi(0.625));
    const FourierSeries d = evolve_bo(f, TimeSpec::multiple_of_2pi(1.625));
    CHECK(max_coeff_diff(c, d) < 1e-15);
}

TEST_CASE("schrodinger route reproduces the dispersive flow coefficient-wise") {
    // identity at t = 0
    const FourierSeries f0 = random_real_series(32, 17);
    const FourierSeries back =
        bo_from_schrodinger(evolve_schrodinger(f0, TimeSpec::rational(0, 1)), f0.mean());
    CHECK(max_coeff_diff(back, f0) == 0.0);

    // indicator data, many random times
    const FourierSeries ind = PiecewiseConstant::canonical_indicator().truncate(1 << 10);
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const TimeSpec t = TimeSpec::multiple_of_2pi(unit(rng) * 2.0 * std::numbers::pi);
        const FourierSeries direct = evolve_bo(ind, t);
        const FourierSeries routed = bo_from_schrodinger(evolve_schrodinger(ind, t), ind.mean());
        worst = std::max(worst, max_coeff_diff(direct, routed));
        CHECK(routed.real_valued());
    }
    CHECK(worst <= 1e-13);
}

TEST_CASE("phase-reduction guards") {
    CHECK_THROWS_AS(evolve_bo(random_real_series(8, 2), TimeSpec::multiple_of_2pi(1e30)),
                    guard_error);
    CHECK_THROWS_AS(TimeSpec::rational(1, 0), validation_error);
    CHECK_THROWS_AS(TimeSpec::rational(1, std::uint64_t(1) << 40), guard_error);
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(9);
    c[5] = Complex{1.0, 0.0};
    CHECK_THROWS_AS(evolve_bo(FourierSeries(4, c, false), TimeSpec::rational(1, 3)),
                    validation_error);
    // truncation beyond the documented reduction window
    CHECK_THROWS_AS(evolve_bo(FourierSeries::zeros((1 << 16) + 1), TimeSpec::rational(1, 3)),
                    guard_error);
}
