#include "revlab/fourier_series.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <vector>

#include <json.hpp>

#include "revlab/errors.hpp"
#include "revlab/parallel.hpp"

namespace revlab {

namespace {

constexpr double kHermitianTol = 1e-14;
constexpr double kImagResidualTol = 1e-10;

void check_hermitian(int order, const Eigen::VectorXcd& c) {
    auto at = [&](int n) { return c[n + order]; };
    if (std::abs(at(0).imag()) > kHermitianTol * std::max(1e-300, std::abs(at(0))))
        throw validation_error("real-flagged series has a non-real mean coefficient");
    for (int n = 1; n <= order; ++n) {
        const Complex a = at(n), b = at(-n);
        const double scale = std::max({1e-300, std::abs(a), std::abs(b)});
        if (std::abs(b - std::conj(a)) > kHermitianTol * scale)
            throw validation_error("real-flagged series is not Hermitian symmetric");
    }
}

bool is_pow2(int m) { return m > 0 && std::has_single_bit(static_cast<unsigned>(m)); }

// iterative radix-2 transform, sign=+1 gives sum_k a_k e^{+2pi i k m / M}
void fft(std::vector<Complex>& a, int sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        const Complex wl = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            Complex w{1.0, 0.0};
            for (std::size_t k = 0; k < len / 2; ++k) {
                const Complex u = a[i + k];
                const Complex v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

// values[m] = sum_n c(n) e^{i n x_m} on a power-of-two grid, by folding the
// phased coefficients into the M bins of a length-M transform
Eigen::VectorXcd evaluate_fft(const FourierSeries& f, const TorusGrid& grid) {
    const int m_size = grid.size;
    const int order = f.order();
    const double x0 = -std::numbers::pi + grid.offset;
    std::vector<Complex> bins(static_cast<std::size_t>(m_size), Complex{0.0, 0.0});
    for (int n = -order; n <= order; ++n) {
        const int k = ((n % m_size) + m_size) % m_size;
        bins[static_cast<std::size_t>(k)] += f.coeff(n) * std::polar(1.0, n * x0);
    }
    fft(bins, +1);
    return Eigen::Map<Eigen::VectorXcd>(bins.data(), m_size);
}

Eigen::VectorXcd evaluate_direct(const FourierSeries& f, const TorusGrid& grid) {
    const int order = f.order();
    Eigen::VectorXcd out(grid.size);
    parallel_chunks(grid.size, 256, [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t m = lo; m < hi; ++m) {
            const double x = grid.node(static_cast<int>(m));
            const Complex rot = std::polar(1.0, x);
            Complex w{1.0, 0.0};
            Complex acc = f.coeff(0);
            for (int n = 1; n <= order; ++n) {
                // resync the rotation phase periodically to stop error growth
                w = (n % 128 == 0) ? std::polar(1.0, n * x) : w * rot;
                acc += f.coeff(n) * w + f.coeff(-n) * std::conj(w);
            }
            out[m] = acc;
        }
    });
    return out;
}

}  // namespace

FourierSeries::FourierSeries(int order, Eigen::VectorXcd coeffs, bool real_valued)
    : order_(order), real_(real_valued), c_(std::move(coeffs)) {
    if (order_ < 1) throw validation_error("truncation order must be >= 1");
    if (c_.size() != 2 * static_cast<Eigen::Index>(order_) + 1)
        throw validation_error("coefficient array must have length 2N+1");
    if (real_) check_hermitian(order_, c_);
}

FourierSeries FourierSeries::zeros(int order, bool real_valued) {
    if (order < 1) throw validation_error("truncation order must be >= 1");
    return FourierSeries(order, Eigen::VectorXcd::Zero(2 * order + 1), real_valued);
}

TorusGrid TorusGrid::midpoint(int m) { return with_offset(m, m > 0 ? std::numbers::pi / m : 0.0); }

TorusGrid TorusGrid::with_offset(int m, double offset) {
    if (m < 1) throw validation_error("grid needs at least one node");
    if (!(offset >= 0.0) || offset >= 2.0 * std::numbers::pi / m)
        throw validation_error("grid offset must lie in [0, 2pi/M)");
    return TorusGrid{m, offset};
}

Eigen::VectorXd TorusGrid::nodes() const {
    Eigen::VectorXd x(size);
    for (int m = 0; m < size; ++m) x[m] = node(m);
    return x;
}

Eigen::VectorXcd evaluate_complex(const FourierSeries& f, const TorusGrid& grid) {
    if (grid.size < 1) throw validation_error("grid needs at least one node");
    return is_pow2(grid.size) ? evaluate_fft(f, grid) : evaluate_direct(f, grid);
}

Eigen::VectorXd evaluate(const FourierSeries& f, const TorusGrid& grid) {
    if (!f.real_valued()) throw validation_error("evaluate needs a real-flagged series");
    const Eigen::VectorXcd vals = evaluate_complex(f, grid);
    const double budget = kImagResidualTol * f.coeffs().cwiseAbs().sum();
    if (vals.imag().cwiseAbs().maxCoeff() > std::max(budget, 1e-300))
        throw validation_error("imaginary residual exceeds the real-evaluation budget");
    return vals.real();
}

FourierSeries hilbert(const FourierSeries& f) {
    const int order = f.order();
    Eigen::VectorXcd c(2 * order + 1);
    for (int n = -order; n <= order; ++n) {
        const double sgn = n > 0 ? 1.0 : (n < 0 ? -1.0 : 0.0);
        c[n + order] = Complex{0.0, -sgn} * f.coeff(n);
    }
    return FourierSeries(order, std::move(c), f.real_valued());
}

FourierSeries szego_project(const FourierSeries& f) {
    const int order = f.order();
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(2 * order + 1);
    for (int n = 0; n <= order; ++n) c[n + order] = f.coeff(n);
    return FourierSeries(order, std::move(c), false);
}

FourierSeries derivative(const FourierSeries& f) {
    const int order = f.order();
    Eigen::VectorXcd c(2 * order + 1);
    for (int n = -order; n <= order; ++n) c[n + order] = Complex{0.0, double(n)} * f.coeff(n);
    return FourierSeries(order, std::move(c), f.real_valued());
}

double l2_norm(const FourierSeries& f) {
    return std::sqrt(2.0 * std::numbers::pi * f.coeffs().squaredNorm());
}

std::string FourierSeries::to_json() const {
    nlohmann::ordered_json j;
    j["N"] = order_;
    std::vector<double> re, im;
    re.reserve(c_.size());
    im.reserve(c_.size());
    for (Eigen::Index i = 0; i < c_.size(); ++i) {
        re.push_back(c_[i].real());
        im.push_back(c_[i].imag());
    }
    j["re"] = re;
    j["im"] = im;
    return j.dump();
}

FourierSeries FourierSeries::from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw validation_error(std::string("bad series JSON: ") + e.what());
    }
    if (!j.contains("N") || !j.contains("re") || !j.contains("im"))
        throw validation_error("series JSON needs fields N, re, im");
    const int order = j["N"].get<int>();
    const auto re = j["re"].get<std::vector<double>>();
    const auto im = j["im"].get<std::vector<double>>();
    if (order < 1 || re.size() != im.size() ||
        re.size() != static_cast<std::size_t>(2 * order + 1))
        throw validation_error("series JSON has inconsistent lengths");
    Eigen::VectorXcd c(2 * order + 1);
    for (int i = 0; i <= 2 * order; ++i) c[i] = Complex{re[static_cast<std::size_t>(i)],
                                                        im[static_cast<std::size_t>(i)]};
    // flag as real when Hermitian symmetry holds
    bool real = true;
    try {
        check_hermitian(order, c);
    } catch (const validation_error&) {
        real = false;
    }
    return FourierSeries(order, std::move(c), real);
}

}  // namespace revlab
