#include "revlab/time_spec.hpp"

#include <cmath>
#include <numbers>

#include "revlab/errors.hpp"

namespace revlab {

namespace {
using u64 = std::uint64_t;
using u128 = unsigned __int128;
}  // namespace

TimeSpec TimeSpec::rational(u64 p, u64 q) {
    if (q == 0) throw validation_error("rational time needs q >= 1");
    if (q > (u64(1) << 31)) throw guard_error("rational time denominator exceeds 2^31");
    TimeSpec t;
    t.rational_ = true;
    t.p_original_ = p;
    t.q_ = q;
    t.p_ = p % q;
    return t;
}

TimeSpec TimeSpec::multiple_of_2pi(double mult) {
    if (!std::isfinite(mult)) throw validation_error("time multiple must be finite");
    if (std::abs(mult) > 1e18) throw guard_error("time multiple too large for exact reduction");
    TimeSpec t;
    t.rational_ = false;
    t.mult_ = mult;
    return t;
}

double TimeSpec::multiple() const {
    return rational_ ? static_cast<double>(p_original_) / static_cast<double>(q_) : mult_;
}

double TimeSpec::phase_fraction(std::int64_t n) const {
    const std::int64_t a = n < 0 ? -n : n;
    if (a > kMaxPhaseIndex) throw guard_error("phase reduction valid only for |n| <= 2^16");
    const u64 n2 = static_cast<u64>(a) * static_cast<u64>(a);

    if (rational_) {
        const u64 r = static_cast<u64>((u128(n2 % q_) * (p_ % q_)) % q_);
        const double fr = static_cast<double>(r) / static_cast<double>(q_);
        return fr >= 0.5 ? fr - 1.0 : fr;
    }

    const double am = std::abs(mult_);
    if (am == 0.0) return 0.0;
    double fr;
    if (am < 0x1p-33) {
        fr = n2 * am;  // product below 1/2, no reduction needed
    } else {
        int e = 0;
        const double mant = std::frexp(am, &e);               // am = mant * 2^e
        const u64 md = static_cast<u64>(std::ldexp(mant, 53));  // exact 53-bit integer
        const int s = 53 - e;
        if (s <= 0) return 0.0;  // am is an integer multiple of a power of two
        const u128 prod = u128(n2) * md;
        const u128 mod = prod & ((u128(1) << s) - 1);
        fr = static_cast<double>(static_cast<long double>(mod) / std::ldexp(1.0L, s));
        if (fr >= 0.5) fr -= 1.0;
    }
    return mult_ < 0 ? -fr : fr;
}

std::complex<double> TimeSpec::schrodinger_multiplier(std::int64_t n) const {
    const double ang = 2.0 * std::numbers::pi * phase_fraction(n);
    return {std::cos(ang), std::sin(ang)};
}

std::complex<double> TimeSpec::bo_multiplier(std::int64_t n) const {
    if (n == 0) return {1.0, 0.0};
    const double ang = 2.0 * std::numbers::pi * phase_fraction(n);
    const double c = std::cos(ang), s = std::sin(ang);
    // conjugate pair built explicitly so Hermitian symmetry is exact
    return n > 0 ? std::complex<double>{c, s} : std::complex<double>{c, -s};
}

std::string TimeSpec::describe() const {
    if (rational_)
        return std::to_string(p_original_) + "/" + std::to_string(q_);
    return std::to_string(mult_);
}

}  // namespace revlab
