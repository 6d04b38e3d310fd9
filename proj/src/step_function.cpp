#include "revlab/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "revlab/errors.hpp"
#include "revlab/report.hpp"

namespace revlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSingularSine = 5e-13;  // |sin(d/2)| at circular distance d ~ 1e-12

double wrap_to_torus(double x) {
    double y = std::remainder(x, 2.0 * kPi);  // (-pi, pi] up to the -pi edge
    if (y <= -kPi) y += 2.0 * kPi;
    return y;
}

}  // namespace

PiecewiseConstant::PiecewiseConstant(std::vector<double> breakpoints, std::vector<double> values)
    : breaks_(std::move(breakpoints)), values_(std::move(values)) {
    if (breaks_.empty() || breaks_.size() != values_.size())
        throw validation_error("step function needs matching breakpoints and values, J >= 1");
    for (std::size_t j = 0; j < breaks_.size(); ++j) {
        if (!(breaks_[j] > -kPi) || !(breaks_[j] <= kPi))
            throw validation_error("breakpoints must lie in (-pi, pi]");
        if (j > 0 && !(breaks_[j] > breaks_[j - 1]))
            throw validation_error("breakpoints must be strictly increasing");
        if (!std::isfinite(values_[j])) throw validation_error("plateau values must be finite");
    }
}

PiecewiseConstant PiecewiseConstant::indicator(double a, double b) {
    if (!(a < b)) throw validation_error("indicator needs a < b");
    return PiecewiseConstant({a, b}, {0.0, 1.0});
}

PiecewiseConstant PiecewiseConstant::canonical_indicator() {
    return indicator(-kPi / 2.0, kPi / 2.0);
}

PiecewiseConstant PiecewiseConstant::parse(const std::string& text) {
    auto parse_num = [](const std::string& s) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            throw validation_error("bad number in step spec: " + s);
        }
        if (used != s.size()) throw validation_error("bad number in step spec: " + s);
        return v;
    };
    if (text.rfind("indicator:", 0) == 0) {
        const std::string body = text.substr(10);
        const auto comma = body.find(',');
        if (comma == std::string::npos) throw validation_error("indicator spec needs two endpoints");
        return indicator(parse_num(body.substr(0, comma)), parse_num(body.substr(comma + 1)));
    }
    if (text.rfind("step:", 0) == 0) {
        std::vector<double> breaks, values;
        std::stringstream body(text.substr(5));
        std::string item;
        while (std::getline(body, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) throw validation_error("step spec items look like a=v");
            breaks.push_back(parse_num(item.substr(0, eq)));
            values.push_back(parse_num(item.substr(eq + 1)));
        }
        return PiecewiseConstant(std::move(breaks), std::move(values));
    }
    throw validation_error("initial condition spec must start with indicator: or step:");
}

double PiecewiseConstant::operator()(double x) const {
    const double y = wrap_to_torus(x);
    // value on (a_{j-1}, a_j]: first breakpoint >= y, wrapping past the top
    const auto it = std::lower_bound(breaks_.begin(), breaks_.end(), y);
    const std::size_t idx = it == breaks_.end() ? 0 : static_cast<std::size_t>(it - breaks_.begin());
    return values_[idx];
}

double PiecewiseConstant::total_variation() const {
    double tv = 0.0;
    for (std::size_t j = 0; j < values_.size(); ++j)
        tv += std::abs(values_[(j + 1) % values_.size()] - values_[j]);
    return tv;
}

double PiecewiseConstant::mean() const { return fourier_coefficient(0).real(); }

std::complex<double> PiecewiseConstant::fourier_coefficient(int n) const {
    const std::size_t count = breaks_.size();
    if (n == 0) {
        double acc = 0.0;
        for (std::size_t j = 0; j < count; ++j) {
            const double lo = j == 0 ? breaks_.back() - 2.0 * kPi : breaks_[j - 1];
            acc += values_[j] * (breaks_[j] - lo);
        }
        return {acc / (2.0 * kPi), 0.0};
    }
    // sum over plateaus of v_j (e^{-i n a_{j-1}} - e^{-i n a_j}) / (2 pi i n)
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t j = 0; j < count; ++j) {
        const double lo = j == 0 ? breaks_.back() : breaks_[j - 1];  // e^{-in.} is 2pi-periodic
        acc += values_[j] * (std::polar(1.0, -n * lo) - std::polar(1.0, -n * breaks_[j]));
    }
    return acc / std::complex<double>{0.0, 2.0 * kPi * n};
}

FourierSeries PiecewiseConstant::truncate(int order) const {
    Eigen::VectorXcd c(2 * order + 1);
    c[order] = fourier_coefficient(0);
    for (int n = 1; n <= order; ++n) {
        const auto v = fourier_coefficient(n);
        c[order + n] = v;
        c[order - n] = std::conj(v);  // real data: mirror exactly
    }
    return FourierSeries(order, std::move(c), true);
}

std::vector<std::pair<double, double>> PiecewiseConstant::jumps() const {
    std::vector<std::pair<double, double>> out;
    out.reserve(breaks_.size());
    for (std::size_t j = 0; j < breaks_.size(); ++j)
        out.emplace_back(breaks_[j], values_[(j + 1) % values_.size()] - values_[j]);
    return out;
}

double PiecewiseConstant::breakpoint_distance(double x) const {
    double best = 2.0 * kPi;
    for (double a : breaks_) best = std::min(best, std::abs(std::remainder(x - a, 2.0 * kPi)));
    return best;
}

std::string PiecewiseConstant::describe() const {
    std::string out = "step:";
    for (std::size_t j = 0; j < breaks_.size(); ++j) {
        if (j) out += ',';
        out += format_double(breaks_[j]);
        out += '=';
        out += format_double(values_[j]);
    }
    return out;
}

CuspValue hilbert_indicator(double a, double b, double x) {
    if (!(-kPi <= a) || !(a < b) || !(b < kPi))
        throw validation_error("indicator endpoints need -pi <= a < b < pi");
    const double sa = std::sin((x - a) / 2.0);
    const double sb = std::sin((x - b) / 2.0);
    if (std::abs(sa) < 1e-300) return {CuspValue::Kind::minus_infinity, 0.0};
    if (std::abs(sb) < 1e-300) return {CuspValue::Kind::plus_infinity, 0.0};
    return {CuspValue::Kind::finite, (std::log(std::abs(sa)) - std::log(std::abs(sb))) / kPi};
}

double hilbert_closed_form_at(const PiecewiseConstant& f, double x) {
    // H f(x) = (1/pi) sum_j jump_j * log|sin((x - a_j)/2)|
    double acc = 0.0;
    for (const auto& [pos, jump] : f.jumps()) {
        if (jump == 0.0) continue;
        const double s = std::sin((x - pos) / 2.0);
        if (std::abs(s) < kSingularSine)
            throw guard_error("evaluation point within 1e-12 of a breakpoint");
        acc += jump * std::log(std::abs(s));
    }
    return acc / kPi;
}

Eigen::VectorXd hilbert_closed_form(const PiecewiseConstant& f, const TorusGrid& grid) {
    if (grid.size < 1) throw validation_error("grid needs at least one node");
    Eigen::VectorXd out(grid.size);
    for (int m = 0; m < grid.size; ++m) out[m] = hilbert_closed_form_at(f, grid.node(m));
    return out;
}

}  // namespace revlab
