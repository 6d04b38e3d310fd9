#include "revlab/continued_fraction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "revlab/errors.hpp"

namespace revlab {

namespace {

constexpr int kFloatDepthCap = 40;

// exact dyadic rational num/den equal to the positive double x
void dyadic_form(double x, big_uint& num, big_uint& den) {
    int e = 0;
    double mant = std::frexp(x, &e);                     // x = mant * 2^e, mant in [1/2, 1)
    auto md = static_cast<std::uint64_t>(std::ldexp(mant, 53));  // exact integer
    const int s = 53 - e;
    if (s <= 0) {
        num = big_uint(md).shifted_left(-s);
        den = big_uint(1);
    } else {
        num = big_uint(md);
        den = big_uint(1).shifted_left(s);
    }
}

void push_convergent(std::uint64_t a, std::vector<std::uint64_t>& quots,
                     std::vector<big_uint>& num, std::vector<big_uint>& den) {
    const std::size_t n = quots.size();
    big_uint p, q;
    if (n == 0) {
        p = big_uint(a);
        q = big_uint(1);
    } else if (n == 1) {
        p = num[0].times_u64(a) + big_uint(1);
        q = big_uint(a);
    } else {
        p = num[n - 1].times_u64(a) + num[n - 2];
        q = den[n - 1].times_u64(a) + den[n - 2];
    }
    quots.push_back(a);
    num.push_back(std::move(p));
    den.push_back(std::move(q));
}

std::uint64_t checked_quotient(double a) {
    if (!(a >= 0.0) || a >= 9.2e18) throw guard_error("partial quotient exceeds 64 bits");
    return static_cast<std::uint64_t>(a);
}

}  // namespace

std::uint64_t CFExpansion::quotient(int i) const {
    if (i < 0 || i >= size()) throw validation_error("quotient index out of range");
    return quotients_[static_cast<std::size_t>(i)];
}

double CFExpansion::log_q(int i) const {
    if (i < 0 || i >= size()) throw validation_error("convergent index out of range");
    return den_[static_cast<std::size_t>(i)].log_natural();
}

double CFExpansion::gap(int i) const {
    if (i < 0 || i >= size()) throw validation_error("convergent index out of range");
    const auto& p = num_[static_cast<std::size_t>(i)];
    const auto& q = den_[static_cast<std::size_t>(i)];
    const big_uint lhs = target_num_ * q;
    const big_uint rhs = p * target_den_;
    const big_uint diff = big_uint::compare(lhs, rhs) >= 0 ? lhs - rhs : rhs - lhs;
    if (diff.is_zero()) return 0.0;
    // |target - p/q| = diff / (q * target_den), evaluated in long double
    const long double val =
        diff.to_long_double() / (q.to_long_double() * target_den_.to_long_double());
    return static_cast<double>(val);
}

int CFExpansion::error_sign(int i) const {
    if (i < 0 || i >= size()) throw validation_error("convergent index out of range");
    const big_uint lhs = target_num_ * den_[static_cast<std::size_t>(i)];
    const big_uint rhs = num_[static_cast<std::size_t>(i)] * target_den_;
    return big_uint::compare(lhs, rhs);
}

Convergent CFExpansion::convergent(int i) const {
    if (i < 0 || i >= size()) throw validation_error("convergent index out of range");
    const auto& p = num_[static_cast<std::size_t>(i)];
    const auto& q = den_[static_cast<std::size_t>(i)];
    if (!p.fits_u64() || !q.fits_u64())
        throw guard_error("convergent exceeds 64 bits; reduce the depth");
    Convergent c;
    c.p = p.to_u64();
    c.q = q.to_u64();
    c.target = target_;
    c.gap = gap(i);
    // certificate gap <= 1/q^2, exactly: |t_num q - p t_den| * q <= t_den
    const big_uint lhs = target_num_ * q;
    const big_uint rhs = p * target_den_;
    const big_uint diff = big_uint::compare(lhs, rhs) >= 0 ? lhs - rhs : rhs - lhs;
    c.certified = big_uint::compare(diff * q, target_den_) <= 0;
    return c;
}

double CFExpansion::levy_rate() const {
    if (size() < 10) throw validation_error("levy rate needs at least 10 convergents");
    const int n = deepest();
    return log_q(n) / n;
}

CFExpansion::ScaleChoice CFExpansion::select_for_scale(int j) const {
    if (j < 1) throw validation_error("scale index must be positive");
    if (den_.back().bit_length() <= j)
        throw guard_error("expansion too shallow: no denominator reaches 2^j");
    const double rho = khinchin_levy_rho();
    int idx = static_cast<int>(std::floor(j * std::numbers::ln2 / rho));
    idx = std::min(idx, deepest());
    ScaleChoice s;
    s.index = idx;
    s.conv = convergent(idx);
    s.r = log_q(idx) / (j * std::numbers::ln2) - 1.0;
    return s;
}

CFExpansion expand(double x, int depth) {
    if (!(x > 0.0) || !std::isfinite(x)) throw validation_error("target must be a positive finite real");
    if (depth < 1 || depth > kFloatDepthCap)
        throw validation_error("depth for floating targets must be in [1, 40]");
    CFExpansion cf;
    cf.target_ = x;
    dyadic_form(x, cf.target_num_, cf.target_den_);

    double r = x;
    push_convergent(checked_quotient(std::floor(r)), cf.quotients_, cf.num_, cf.den_);
    for (int i = 1; i <= depth; ++i) {
        const double frac = r - std::floor(r);
        if (frac == 0.0) {
            cf.complete_ = true;
            break;
        }
        r = 1.0 / frac;
        if (!std::isfinite(r)) throw guard_error("precision exhausted before requested depth");
        push_convergent(checked_quotient(std::floor(r)), cf.quotients_, cf.num_, cf.den_);
    }
    return cf;
}

CFExpansion expand_decimal(std::string_view decimal, int depth) {
    if (depth < 1 || depth > 10000) throw validation_error("depth out of range");
    // parse [+]digits[.digits]
    std::string_view s = decimal;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::string digits;
    int frac_digits = 0;
    bool seen_dot = false;
    for (char c : s) {
        if (c == '.') {
            if (seen_dot) throw validation_error("malformed decimal literal");
            seen_dot = true;
            continue;
        }
        if (c < '0' || c > '9') throw validation_error("malformed decimal literal");
        digits.push_back(c);
        if (seen_dot) ++frac_digits;
    }
    if (digits.empty()) throw validation_error("malformed decimal literal");

    CFExpansion cf;
    cf.target_num_ = big_uint::from_decimal(digits);
    cf.target_den_ = big_uint::pow10(frac_digits);
    if (cf.target_num_.is_zero()) throw validation_error("target must be positive");
    cf.target_ = static_cast<double>(cf.target_num_.to_long_double() /
                                     cf.target_den_.to_long_double());

    big_uint a = cf.target_num_, b = cf.target_den_;
    for (int i = 0; i <= depth; ++i) {
        auto [quot, rem] = big_uint::divmod(a, b);
        if (!quot.fits_u64()) throw guard_error("partial quotient exceeds 64 bits");
        push_convergent(quot.to_u64(), cf.quotients_, cf.num_, cf.den_);
        if (rem.is_zero()) {
            cf.complete_ = true;
            break;
        }
        a = b;
        b = rem;
    }
    return cf;
}

const char* phi_decimal() {
    return "1.61803398874989484820458683436563811772030917980576";
}

const char* e_decimal() {
    return "2.71828182845904523536028747135266249775724709369995";
}

double khinchin_levy_rho() {
    return std::numbers::pi * std::numbers::pi / (12.0 * std::numbers::ln2);
}

}  // namespace revlab
